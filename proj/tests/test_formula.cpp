#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "roc/formula.hpp"

using namespace roc;

TEST_CASE( "parse basic structure" )
{
  const auto t = parse_formula( "or(x1, and(x2, ~x3))" );
  const auto& root = t.node( t.root() );
  REQUIRE( root.kind == formula_node::node_kind::gate );
  CHECK( root.op == gate_op::or_ );
  REQUIRE( root.children.size() == 2u );
  CHECK( t.node( root.children[0] ).kind == formula_node::node_kind::leaf );
  const auto& inner = t.node( root.children[1] );
  REQUIRE( inner.kind == formula_node::node_kind::gate );
  CHECK( inner.op == gate_op::and_ );
  CHECK( t.node( inner.children[1] ).negated );
  CHECK( t.variables() == var_set{ 1, 2, 3 } );
}

TEST_CASE( "parse flattens nested identical gates" )
{
  const auto t = parse_formula( "or(x1, or(x2, x3))" );
  const auto& root = t.node( t.root() );
  CHECK( root.op == gate_op::or_ );
  CHECK( root.children.size() == 3u );
  CHECK( to_string( t ) == "or(x1,x2,x3)" );
}

TEST_CASE( "parse prime labels" )
{
  const auto t = parse_formula( "p:e4(x1, x2, x3)" );
  const auto& root = t.node( t.root() );
  REQUIRE( root.kind == formula_node::node_kind::prime );
  CHECK( root.label == parse_truth_table( "tt:3:e4" ) );
  CHECK( root.children.size() == 3u );
  CHECK( to_string( t ) == "p:e4(x1,x2,x3)" );
}

TEST_CASE( "parse errors" )
{
  CHECK_THROWS_AS( parse_formula( "or(x1" ), input_error );
  CHECK_THROWS_AS( parse_formula( "or(x1)" ), input_error );
  CHECK_THROWS_AS( parse_formula( "nand(x1,x2)" ), input_error );
  CHECK_THROWS_AS( parse_formula( "or(x1,x2) x3" ), input_error );
  CHECK_THROWS_AS( parse_formula( "or(x1, x1)" ), input_error );          /* read-once violation */
  CHECK_THROWS_AS( parse_formula( "p:80(x1,x2,x3)" ), input_error );      /* 3-ary AND is not prime */
  CHECK_THROWS_AS( parse_formula( "p:e(x1,x2)" ), input_error );          /* prime arity below 3 */
  CHECK_THROWS_AS( parse_formula( "p:e4(x1,x2,x3)", 2 ), input_error );   /* basis bound */
  CHECK_THROWS_AS( parse_formula( "p:e440(x1,x2,x3)" ), input_error );    /* hex length mismatch */
  CHECK_NOTHROW( parse_formula( "p:e4(x1,x2,x3)", 3 ) );
}

TEST_CASE( "print forms" )
{
  CHECK( to_string( parse_formula( "x1" ) ) == "x1" );
  CHECK( to_string( parse_formula( "~x1" ) ) == "~x1" );
  CHECK( to_string( parse_formula( " or( x2 , x7 ) " ) ) == "or(x2,x7)" );
}

TEST_CASE( "canonicalize eliminates inner negations" )
{
  CHECK( to_string( parse_formula( "~and(x1,x2)" ) ) == "or(~x1,~x2)" );
  CHECK( to_string( parse_formula( "~or(x1,x2)" ) ) == "and(~x1,~x2)" );
  CHECK( to_string( parse_formula( "~xor(x1,x2)" ) ) == "xor(~x1,x2)" );
  CHECK( to_string( parse_formula( "~p:e4(x1,x2,x3)" ) ) == "p:1b(x1,x2,x3)" );
  CHECK( to_string( parse_formula( "~~x1" ) ) == "x1" );

  /* double negation through a gate */
  CHECK( to_string( parse_formula( "~and(~x1,~x2)" ) ) == "or(x1,x2)" );

  /* negation-driven flattening: ~and under or becomes a nested or */
  CHECK( to_string( parse_formula( "or(x1, ~and(x2, x3))" ) ) == "or(x1,~x2,~x3)" );
}

TEST_CASE( "canonicalize preserves the computed function" )
{
  for ( uint64_t seed = 0u; seed < 1000u; ++seed )
  {
    const unsigned n = 1u + seed % 7u;
    const auto raw = random_raw_tree( n, 3u + seed % 2u, seed );
    const auto canon = canonicalize( raw );
    CHECK( to_truth_table( canon ) == to_truth_table( raw ) );
  }
}

TEST_CASE( "to_truth_table" )
{
  CHECK( to_string( to_truth_table( parse_formula( "or(x1,x2)" ) ) ) == "tt:2:e" );
  CHECK( to_string( to_truth_table( parse_formula( "p:e4(x1,x2,x3)" ) ) ) == "tt:3:e4" );

  /* or(x1, and(x2,x3)) has exactly 5 ones */
  const auto tt = to_truth_table( parse_formula( "or(x1, and(x2,x3))" ) );
  unsigned ones = 0u;
  for ( uint32_t row = 0u; row < 8u; ++row )
  {
    ones += tt.bit( row );
  }
  CHECK( ones == 5u );

  /* variables map to table positions in ascending index order */
  CHECK( to_truth_table( parse_formula( "or(x2,x5)" ) ) == parse_truth_table( "tt:2:e" ) );
}

TEST_CASE( "validate" )
{
  const auto t = parse_formula( "p:e4(x1,x2,x3)" );
  CHECK( validate( t, 3 ).empty() );
  CHECK( validate( t, 0 ).empty() );
  CHECK( !validate( t, 2 ).empty() ); /* arity 3 exceeds l = 2 */

  read_once_tree manual;
  const auto a = manual.add_leaf( 1 );
  const auto b = manual.add_leaf( 2 );
  const auto c = manual.add_leaf( 3 );
  const auto inner = manual.add_gate( gate_op::or_, { b, c } );
  manual.set_root( manual.add_gate( gate_op::or_, { a, inner } ) );
  CHECK( !validate( manual, 2 ).empty() ); /* adjacent or below or */
  CHECK( validate( canonicalize( manual ), 2 ).empty() );
}

TEST_CASE( "lca" )
{
  const auto t = parse_formula( "or(x1, and(x2,x3))" );
  const auto root = t.root();
  const auto and_node = t.node( root ).children[1];

  CHECK( lca( t, var_set{ 2, 3 } ) == and_node );
  CHECK( lca( t, var_set{ 1, 2 } ) == root );
  CHECK( t.node( lca( t, var_set{ 2 } ) ).kind == formula_node::node_kind::leaf );
  CHECK_THROWS_AS( lca( t, var_set{ 4 } ), input_error );
}

TEST_CASE( "is_conservative" )
{
  const auto t = parse_formula( "p:e4(x1,x2,x3)" );
  CHECK( is_conservative( t, var_set{ 1 } ) );
  CHECK( !is_conservative( t, var_set{ 1, 2 } ) );
  CHECK( is_conservative( t, var_set{ 1, 2, 3 } ) );

  /* gate nodes never constrain conservativeness */
  const auto g = parse_formula( "or(x1,x2,x3)" );
  CHECK( is_conservative( g, var_set{ 1, 2 } ) );
}

TEST_CASE( "random_tree shapes" )
{
  const auto single = random_tree( 1, 2, 5 );
  CHECK( single.node( single.root() ).kind == formula_node::node_kind::leaf );

  /* n=2 always yields one of the 10 two-variable functions depending on both */
  std::set<std::string> two_var_functions;
  {
    truth_table tt( 2 );
    for ( uint32_t value = 0u; value < 16u; ++value )
    {
      for ( uint32_t row = 0u; row < 4u; ++row )
      {
        tt.set_bit( row, ( value >> row ) & 1u );
      }
      if ( relevant_vars( tt ) == var_set::full( 2 ) )
      {
        two_var_functions.insert( to_string( tt ) );
      }
    }
  }
  CHECK( two_var_functions.size() == 10u );
  for ( uint64_t seed = 0u; seed < 50u; ++seed )
  {
    const auto tt = to_truth_table( random_tree( 2, 2, seed ) );
    CHECK( two_var_functions.count( to_string( tt ) ) == 1u );
  }
}

TEST_CASE( "random_tree is deterministic and valid" )
{
  CHECK( to_string( random_tree( 6, 4, 123 ) ) == to_string( random_tree( 6, 4, 123 ) ) );

  for ( uint64_t seed = 0u; seed < 1000u; ++seed )
  {
    const unsigned n = 1u + seed % 8u;
    const unsigned l = 2u + seed % 3u;
    const auto t = random_tree( n, l, seed );
    CHECK( validate( t, l ).empty() );
    CHECK( t.variables() == var_set::full( n ) );
    CHECK( relevant_vars( to_truth_table( t ) ) == var_set::full( n ) );
  }
}

TEST_CASE( "random_tree golden instance" )
{
  std::ifstream in( std::string( ROC_GOLDEN_DIR ) + "/random_tree_n5_l3_seed42.txt" );
  REQUIRE( in.good() );
  std::string expected;
  std::getline( in, expected );
  CHECK( to_string( random_tree( 5, 3, 42 ) ) == expected );
}

TEST_CASE( "print and parse round trip on generated trees" )
{
  for ( uint64_t seed = 0u; seed < 300u; ++seed )
  {
    const unsigned n = 1u + seed % 8u;
    const unsigned l = 3u + seed % 2u;
    const auto t = random_tree( n, l, 10000u + seed );
    const auto text = to_string( t );
    const auto reparsed = parse_formula( text, l );
    CHECK( to_string( reparsed ) == text );
    CHECK( to_truth_table( reparsed ) == to_truth_table( t ) );
  }
}
