#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "roc/truth_table.hpp"

using namespace roc;

namespace
{

/* d(x, u0, u1) = (!x & u0) | (x & u1), evaluated from its defining formula */
bool d_formula( bool x, bool u0, bool u1 )
{
  return ( !x && u0 ) || ( x && u1 );
}

truth_table make_d()
{
  truth_table tt( 3 );
  for ( uint32_t row = 0u; row < 8u; ++row )
  {
    tt.set_bit( row, d_formula( row & 1u, row & 2u, row & 4u ) );
  }
  return tt;
}

truth_table random_table( std::mt19937_64& eng, unsigned n )
{
  truth_table tt( n );
  for ( uint32_t row = 0u; row < tt.num_rows(); ++row )
  {
    tt.set_bit( row, eng() & 1u );
  }
  return tt;
}

} // namespace

TEST_CASE( "serialization golden values" )
{
  truth_table or2( 2 );
  or2.set_bit( 1 );
  or2.set_bit( 2 );
  or2.set_bit( 3 );
  CHECK( to_string( or2 ) == "tt:2:e" );

  /* d's table derived row by row from the defining formula */
  CHECK( to_string( make_d() ) == "tt:3:e4" );

  CHECK( parse_truth_table( "tt:2:e" ) == or2 );
  CHECK( parse_truth_table( "tt:3:e4" ) == make_d() );
  CHECK( parse_truth_table( "tt:3:E4" ) == make_d() );
  CHECK( to_string( truth_table::nth_var( 1, 1 ) ) == "tt:1:2" );
  CHECK( to_string( truth_table::constant( 3, false ) ) == "tt:3:00" );
}

TEST_CASE( "serialization round trip" )
{
  std::mt19937_64 eng( 7 );
  for ( unsigned n = 1u; n <= 7u; ++n )
  {
    for ( unsigned i = 0u; i < 20u; ++i )
    {
      const auto tt = random_table( eng, n );
      CHECK( parse_truth_table( to_string( tt ) ) == tt );
    }
  }
}

TEST_CASE( "parse rejects malformed tables" )
{
  CHECK_THROWS_AS( parse_truth_table( "2:e" ), input_error );
  CHECK_THROWS_AS( parse_truth_table( "tt:2:" ), input_error );
  CHECK_THROWS_AS( parse_truth_table( "tt:2:ee" ), input_error );
  CHECK_THROWS_AS( parse_truth_table( "tt:3:e" ), input_error );
  CHECK_THROWS_AS( parse_truth_table( "tt:3:zz" ), input_error );
  CHECK_THROWS_AS( parse_truth_table( "tt:0:1" ), input_error );
  CHECK_THROWS_AS( parse_truth_table( "tt:21:0" ), input_error );
  CHECK_THROWS_AS( truth_table( 21 ), input_error );
}

TEST_CASE( "eval" )
{
  const auto or2 = parse_truth_table( "tt:2:e" );
  CHECK( eval( or2, { false, false } ) == false );
  CHECK( eval( or2, { true, false } ) == true );

  const auto d = make_d();
  for ( uint32_t row = 0u; row < 8u; ++row )
  {
    const bool x = row & 1u, u0 = row & 2u, u1 = row & 4u;
    CHECK( eval( d, { x, u0, u1 } ) == d_formula( x, u0, u1 ) );
  }
  CHECK( eval( d, { true, true, false } ) == false );

  CHECK_THROWS_AS( eval( or2, { true } ), input_error );
}

TEST_CASE( "cofactor substitutes constants" )
{
  const auto d = make_d();

  /* u1 = 1 turns d into x | u0 */
  const auto sub = cofactor( d, partial_assignment{}.bind( 3, true ) );
  REQUIRE( sub.num_vars() == 2u );
  for ( uint32_t row = 0u; row < 4u; ++row )
  {
    CHECK( sub.bit( row ) == d_formula( row & 1u, row & 2u, true ) );
  }
  CHECK( sub == parse_truth_table( "tt:2:e" ) );

  CHECK( cofactor( d, partial_assignment{} ) == d );

  const auto or2 = parse_truth_table( "tt:2:e" );
  CHECK( cofactor( or2, partial_assignment{}.bind( 1, false ) ) == truth_table::nth_var( 1, 1 ) );

  CHECK_THROWS_AS( cofactor( or2, partial_assignment{}.bind( 3, false ) ), input_error );
}

TEST_CASE( "cofactor composes over disjoint assignments" )
{
  std::mt19937_64 eng( 11 );
  for ( unsigned i = 0u; i < 50u; ++i )
  {
    const auto tt = random_table( eng, 5 );
    const partial_assignment p = partial_assignment{}.bind( 2, eng() & 1u );
    partial_assignment q_orig = partial_assignment{}.bind( 4, eng() & 1u ).bind( 5, eng() & 1u );

    /* after removing x2, the original x4 and x5 become x3 and x4 */
    partial_assignment q_renamed = partial_assignment{}.bind( 3, q_orig.value( 4 ) ).bind( 4, q_orig.value( 5 ) );
    CHECK( cofactor( cofactor( tt, p ), q_renamed ) == cofactor( tt, p.merged_with( q_orig ) ) );
  }
}

TEST_CASE( "relevant_vars" )
{
  CHECK( relevant_vars( parse_truth_table( "tt:2:e" ) ) == var_set{ 1, 2 } );
  CHECK( relevant_vars( truth_table::constant( 2, true ) ).empty() );

  /* projection of OR2 at x1=1 is constant 1 */
  const auto or2 = parse_truth_table( "tt:2:e" );
  CHECK( relevant_vars( cofactor( or2, partial_assignment{}.bind( 1, true ) ) ).empty() );

  const auto d = make_d();
  CHECK( relevant_vars( d ) == var_set{ 1, 2, 3 } );

  /* independent flip check over all rows and variables */
  for ( unsigned i = 1u; i <= 3u; ++i )
  {
    bool relevant = false;
    for ( uint32_t row = 0u; row < 8u; ++row )
    {
      relevant = relevant || d.bit( row ) != d.bit( row ^ ( 1u << ( i - 1u ) ) );
    }
    CHECK( relevant == relevant_vars( d ).contains( i ) );
  }
}

TEST_CASE( "relevant_vars of a projection stay within the free variables" )
{
  std::mt19937_64 eng( 13 );
  for ( unsigned i = 0u; i < 100u; ++i )
  {
    const unsigned n = 3u + static_cast<unsigned>( eng() % 3u );
    const auto tt = random_table( eng, n );
    partial_assignment p;
    for ( unsigned v = 1u; v <= n; ++v )
    {
      if ( eng() % 3u == 0u )
      {
        p.bind( v, eng() & 1u );
      }
    }
    const auto free_count = n - p.size();
    CHECK( relevant_vars( cofactor( tt, p ) ).subset_of( var_set::full( free_count ) ) );
  }
}

TEST_CASE( "is_constant_subcube" )
{
  const auto or2 = parse_truth_table( "tt:2:e" );
  CHECK( is_constant_subcube( or2, partial_assignment{}.bind( 1, true ) ) );
  CHECK( !is_constant_subcube( or2, partial_assignment{}.bind( 1, false ) ) );

  const auto d = make_d();
  CHECK( is_constant_subcube( d, partial_assignment{}.bind( 2, true ).bind( 3, true ) ) );
  CHECK( !is_constant_subcube( d, partial_assignment{} ) );
}

TEST_CASE( "partial_assignment binding rules" )
{
  partial_assignment p;
  p.bind( 3, false ).bind( 4, true );
  CHECK( p.size() == 2u );
  CHECK( p.value( 4 ) == true );
  CHECK_THROWS_AS( p.bind( 3, true ), input_error );
  CHECK_THROWS_AS( p.value( 1 ), input_error );
  CHECK( to_string( p ) == "3=0,4=1" );
  CHECK( parse_partial_assignment( "3=0,4=1" ) == p );
  CHECK( parse_partial_assignment( "" ).empty() );
  CHECK_THROWS_AS( parse_partial_assignment( "3=2" ), input_error );
  CHECK_THROWS_AS( parse_partial_assignment( "3=0,3=1" ), input_error );

  const partial_assignment a = partial_assignment{}.bind( 1, true );
  CHECK_THROWS_AS( a.merged_with( partial_assignment{}.bind( 1, false ) ), input_error );
}

TEST_CASE( "var_set basics" )
{
  const var_set s{ 2, 4 };
  CHECK( s.size() == 2u );
  CHECK( s.contains( 2 ) );
  CHECK( !s.contains( 3 ) );
  CHECK( to_string( s ) == "2,4" );
  CHECK( parse_var_set( "2,4" ) == s );
  CHECK( var_set::full( 3 ) == var_set{ 1, 2, 3 } );
  CHECK( s.subset_of( var_set::full( 4 ) ) );
  CHECK( !var_set::full( 4 ).subset_of( s ) );
  CHECK_THROWS_AS( parse_var_set( "2,2" ), input_error );
  CHECK_THROWS_AS( parse_var_set( "0" ), input_error );
}

TEST_CASE( "scatter and gather are inverse on masks" )
{
  std::mt19937_64 eng( 17 );
  for ( unsigned i = 0u; i < 200u; ++i )
  {
    const uint32_t mask = static_cast<uint32_t>( eng() ) & 0xfffffu;
    const unsigned k = static_cast<unsigned>( __builtin_popcount( mask ) );
    const uint32_t value = static_cast<uint32_t>( eng() ) & ( k ? ( ( 1u << k ) - 1u ) : 0u );
    CHECK( gather_bits( scatter_bits( value, mask ), mask ) == value );
    CHECK( ( scatter_bits( value, mask ) & ~mask ) == 0u );
  }
}
