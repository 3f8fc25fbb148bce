#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "roc/formula.hpp"
#include "roc/hypercube.hpp"

using namespace roc;

namespace
{

const auto d = parse_truth_table( "tt:3:e4" );

/* f1 = (!x & d(y,u0,u1)) | (x & (y | u0 | u1)) over (x,y,u0,u1), computed row by row */
truth_table make_f1()
{
  truth_table tt( 4 );
  for ( uint32_t row = 0u; row < 16u; ++row )
  {
    const bool x = row & 1u, y = row & 2u, u0 = row & 4u, u1 = row & 8u;
    const bool dy = ( !y && u0 ) || ( y && u1 );
    tt.set_bit( row, ( !x && dy ) || ( x && ( y || u0 || u1 ) ) );
  }
  return tt;
}

/* f2 = (!x & d(y,u0,u1)) | (x & (u0 | u1)) */
truth_table make_f2()
{
  truth_table tt( 4 );
  for ( uint32_t row = 0u; row < 16u; ++row )
  {
    const bool x = row & 1u, y = row & 2u, u0 = row & 4u, u1 = row & 8u;
    const bool dy = ( !y && u0 ) || ( y && u1 );
    tt.set_bit( row, ( !x && dy ) || ( x && ( u0 || u1 ) ) );
  }
  return tt;
}

} // namespace

TEST_CASE( "d has no relevance hypercube for {u0,u1}" )
{
  CHECK( find_hypercubes( d, var_set{ 2, 3 } ).empty() );
  CHECK( !find_one_hypercube( d, var_set{ 2, 3 } ).has_value() );
}

TEST_CASE( "d has two relevance hypercubes for {x,u0}" )
{
  const auto cubes = find_hypercubes( d, var_set{ 1, 2 } );
  REQUIRE( cubes.size() == 2u );
  CHECK( cubes[0].fix == partial_assignment{}.bind( 3, false ) );
  CHECK( cubes[1].fix == partial_assignment{}.bind( 3, true ) );
  CHECK( find_one_hypercube( d, var_set{ 1, 2 } )->fix == cubes[0].fix );
  CHECK( to_string( cubes[0] ) == "hc:{free=1,2; fix=3=0}" );
}

TEST_CASE( "or3 has exactly one hypercube per pair" )
{
  const auto or3 = to_truth_table( parse_formula( "or(x1,x2,x3)" ) );
  const auto cubes = find_hypercubes( or3, var_set{ 1, 2 } );
  REQUIRE( cubes.size() == 1u );
  CHECK( cubes[0].fix == partial_assignment{}.bind( 3, false ) );
}

TEST_CASE( "every found hypercube is valid" )
{
  for ( uint64_t seed = 0u; seed < 100u; ++seed )
  {
    const unsigned n = 3u + seed % 4u;
    const auto f = to_truth_table( random_tree( n, 3, 400u + seed ) );
    const uint32_t w_mask = 1u + static_cast<uint32_t>( seed * 2654435761u ) % ( ( 1u << n ) - 1u );
    const var_set w( w_mask );
    for ( const auto& cube : find_hypercubes( f, w ) )
    {
      CHECK( cube.free == w );
      CHECK( relevant_vars( restriction_on( f, cube ) ) == var_set::full( cube.dim() ) );
    }
  }
}

TEST_CASE( "restriction_on picks the projected function" )
{
  const hypercube at0{ var_set{ 1, 2 }, partial_assignment{}.bind( 3, false ) };
  const hypercube at1{ var_set{ 1, 2 }, partial_assignment{}.bind( 3, true ) };

  /* u1=0 leaves !x & u0, u1=1 leaves x | u0 */
  CHECK( to_string( restriction_on( d, at0 ) ) == "tt:2:4" );
  CHECK( to_string( restriction_on( d, at1 ) ) == "tt:2:e" );

  const hypercube full{ var_set{ 1, 2, 3 }, partial_assignment{} };
  CHECK( restriction_on( d, full ) == d );

  /* {u0,u1} with x fixed is not a relevance hypercube of d */
  const hypercube bogus{ var_set{ 2, 3 }, partial_assignment{}.bind( 1, false ) };
  CHECK_THROWS_AS( restriction_on( d, bogus ), input_error );

  /* free and fixed variables must partition the whole set */
  const hypercube overlapping{ var_set{ 1, 2 }, partial_assignment{}.bind( 2, false ).bind( 3, false ) };
  CHECK_THROWS_AS( restriction_on( d, overlapping ), input_error );
}

TEST_CASE( "expand_hypercube" )
{
  /* q equal to the dimension returns the cube unchanged */
  const hypercube at0{ var_set{ 1, 2 }, partial_assignment{}.bind( 3, false ) };
  CHECK( expand_hypercube( d, at0, 2 ) == at0 );

  /* a 1-cube for {x} grows to the full cube, since d depends on everything */
  const hypercube for_x{ var_set{ 1 }, partial_assignment{}.bind( 2, false ).bind( 3, true ) };
  const auto full = expand_hypercube( d, for_x, 3 );
  CHECK( full.free == var_set{ 1, 2, 3 } );
  CHECK( full.fix.empty() );

  /* f1's cube for {u0,u1} fixed by (x=1, y=0) expands to dimension 3 */
  const auto f1 = make_f1();
  const hypercube start{ var_set{ 3, 4 }, partial_assignment{}.bind( 1, true ).bind( 2, false ) };
  const auto grown = expand_hypercube( f1, start, 3 );
  CHECK( grown.dim() == 3u );
  CHECK( var_set{ 3, 4 }.subset_of( grown.free ) );
  CHECK( relevant_vars( restriction_on( f1, grown ) ) == var_set::full( 3 ) );

  CHECK_THROWS_AS( expand_hypercube( d, at0, 1 ), input_error );
  CHECK_THROWS_AS( expand_hypercube( d, at0, 4 ), input_error );
  const hypercube invalid{ var_set{ 2, 3 }, partial_assignment{}.bind( 1, false ) };
  CHECK_THROWS_AS( expand_hypercube( d, invalid, 3 ), input_error );
}

TEST_CASE( "singletons are stable" )
{
  const auto f1 = make_f1();
  for ( unsigned v = 1u; v <= 4u; ++v )
  {
    CHECK( is_stable( f1, var_set{ v } ) );
  }
  CHECK( is_stable( d, var_set{ 2 } ) );
}

TEST_CASE( "f1: {u0,u1} is not stable, witnessed by w = u + {y}" )
{
  const auto f1 = make_f1();
  const auto violations = stability_violations( f1, var_set{ 3, 4 } );
  REQUIRE( !violations.empty() );

  bool witnessed = false;
  for ( const auto& v : violations )
  {
    if ( v.w == var_set{ 2, 3, 4 } )
    {
      witnessed = true;
      /* the violating hypercube is the one fixed by x = 0 */
      CHECK( v.cube.fix == partial_assignment{}.bind( 1, false ) );
    }
  }
  CHECK( witnessed );

  const auto first = find_stability_violation( f1, var_set{ 3, 4 } );
  REQUIRE( first.has_value() );
  CHECK( first->w == violations.front().w );
}

TEST_CASE( "f2: {u0,u1} is not stable" )
{
  const auto f2 = make_f2();
  CHECK( !is_stable( f2, var_set{ 3, 4 } ) );

  bool witnessed = false;
  for ( const auto& v : stability_violations( f2, var_set{ 3, 4 } ) )
  {
    witnessed = witnessed || v.w == var_set{ 2, 3, 4 };
  }
  CHECK( witnessed );
}

TEST_CASE( "stability requires relevant variables" )
{
  const auto constant_in_3 = to_truth_table( parse_formula( "or(x1,x2)" ) );
  CHECK_THROWS_AS( stability_violations( constant_in_3, var_set{ 3 } ), input_error );
}
