#include "roc/verify.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <functional>
#include <random>
#include <set>

#include "roc/factor.hpp"
#include "roc/formula.hpp"
#include "roc/hypercube.hpp"

namespace roc
{

bool alternative_catalog::contains( const truth_table& tt ) const
{
  return std::binary_search( tables.begin(), tables.end(), tt );
}

const std::vector<truth_table>& prime_functions( unsigned arity )
{
  static const auto build = []( unsigned m ) {
    std::vector<truth_table> out;
    truth_table tt( m );
    const uint64_t count = uint64_t( 1 ) << tt.num_rows();
    for ( uint64_t value = 0u; value < count; ++value )
    {
      for ( uint32_t row = 0u; row < tt.num_rows(); ++row )
      {
        tt.set_bit( row, ( value >> row ) & 1u );
      }
      if ( relevant_vars( tt ) == var_set::full( m ) && is_prime( tt ) )
      {
        out.push_back( tt );
      }
    }
    return out;
  };
  if ( arity == 3u )
  {
    static const std::vector<truth_table> primes3 = build( 3u );
    return primes3;
  }
  if ( arity == 4u )
  {
    static const std::vector<truth_table> primes4 = build( 4u );
    return primes4;
  }
  throw input_error( "prime functions are enumerated only for arities 3 and 4" );
}

namespace
{

/* partitions of the positions of `mask` into exactly `parts` blocks, each a
 * position mask; blocks ordered by smallest member */
void enumerate_partitions( uint32_t mask, unsigned parts, std::vector<uint32_t>& current,
                           const std::function<void( const std::vector<uint32_t>& )>& emit )
{
  if ( mask == 0u )
  {
    if ( current.size() == parts )
    {
      emit( current );
    }
    return;
  }
  const uint32_t low = mask & ( ~mask + 1u );
  const uint32_t rest = mask ^ low;

  const size_t open = current.size();
  for ( size_t i = 0u; i < open; ++i )
  {
    current[i] |= low;
    enumerate_partitions( rest, parts, current, emit );
    current[i] &= ~low;
  }
  if ( open < parts )
  {
    current.push_back( low );
    enumerate_partitions( rest, parts, current, emit );
    current.pop_back();
  }
}

truth_table compose_prime( const truth_table& label, const std::vector<const truth_table*>& children,
                           unsigned n )
{
  truth_table out( n );
  for ( uint32_t row = 0u; row < out.num_rows(); ++row )
  {
    uint32_t label_row = 0u;
    for ( size_t i = 0u; i < children.size(); ++i )
    {
      if ( children[i]->bit( row ) )
      {
        label_row |= 1u << i;
      }
    }
    out.set_bit( row, label.bit( label_row ) );
  }
  return out;
}

} // namespace

alternative_catalog enumerate_readonce( unsigned n, unsigned l, bool include_constants )
{
  if ( l < 2u )
  {
    throw input_error( "the basis bound must be at least 2" );
  }
  if ( n < 1u )
  {
    throw input_error( "the catalog needs at least one variable" );
  }
  const bool within_guard = ( l == 2u && n <= 5u ) || ( l >= 3u && n <= 4u );
  if ( !within_guard )
  {
    throw input_error( "cost guard exceeded: supported are n <= 5 for l = 2 and n <= 4 for l >= 3" );
  }

  /* read-once functions with leaf set exactly `mask`, as n-variable tables */
  const uint32_t full = var_set::full( n ).mask();
  std::vector<std::vector<truth_table>> by_mask( size_t( 1 ) << n );

  for ( uint32_t mask = 1u; mask <= full; ++mask )
  {
    const unsigned size = static_cast<unsigned>( __builtin_popcount( mask ) );
    if ( size == 1u )
    {
      const unsigned var = static_cast<unsigned>( __builtin_ctz( mask ) ) + 1u;
      by_mask[mask].push_back( truth_table::nth_var( n, var ) );
      by_mask[mask].push_back( truth_table::nth_var( n, var, true ) );
      continue;
    }

    std::set<truth_table> acc;

    /* binary and/or/xor combinations over all bipartitions */
    const uint32_t low = mask & ( ~mask + 1u );
    for ( uint32_t sub = ( mask - 1u ) & mask; sub > 0u; sub = ( sub - 1u ) & mask )
    {
      if ( !( sub & low ) )
      {
        continue; /* each unordered bipartition once */
      }
      const uint32_t rest = mask ^ sub;
      for ( const auto& g : by_mask[sub] )
      {
        for ( const auto& h : by_mask[rest] )
        {
          acc.insert( g & h );
          acc.insert( g | h );
          acc.insert( g ^ h );
        }
      }
    }

    /* prime-labeled nodes; assigning blocks to label arguments in canonical
     * order suffices because the label ranges over all prime functions */
    for ( unsigned s = 3u; s <= std::min( l, size ); ++s )
    {
      std::vector<uint32_t> current;
      enumerate_partitions( mask, s, current, [&]( const std::vector<uint32_t>& blocks ) {
        /* blocks arrive ordered by smallest member */
        std::vector<size_t> choice( s, 0u );
        for ( ;; )
        {
          std::vector<const truth_table*> children( s );
          for ( unsigned i = 0u; i < s; ++i )
          {
            children[i] = &by_mask[blocks[i]][choice[i]];
          }
          for ( const auto& label : prime_functions( s ) )
          {
            acc.insert( compose_prime( label, children, n ) );
          }
          unsigned i = 0u;
          while ( i < s && ++choice[i] == by_mask[blocks[i]].size() )
          {
            choice[i] = 0u;
            ++i;
          }
          if ( i == s )
          {
            break;
          }
        }
      } );
    }

    by_mask[mask].assign( acc.begin(), acc.end() );
  }

  alternative_catalog catalog;
  catalog.n = n;
  catalog.l = l;
  catalog.include_constants = include_constants;
  for ( uint32_t mask = 1u; mask <= full; ++mask )
  {
    catalog.tables.insert( catalog.tables.end(), by_mask[mask].begin(), by_mask[mask].end() );
  }
  if ( include_constants )
  {
    catalog.tables.push_back( truth_table::constant( n, false ) );
    catalog.tables.push_back( truth_table::constant( n, true ) );
  }
  std::sort( catalog.tables.begin(), catalog.tables.end() );
  catalog.tables.erase( std::unique( catalog.tables.begin(), catalog.tables.end() ), catalog.tables.end() );
  return catalog;
}

namespace
{

void check_test_against_target( const truth_table& f, const test_set& m, const alternative_catalog& catalog )
{
  if ( f.num_vars() != catalog.n || m.n != catalog.n )
  {
    throw input_error( "target, test set and catalog must agree on the variable count" );
  }
  if ( relevant_vars( f ) != var_set::full( f.num_vars() ) )
  {
    throw input_error( "the target must depend on all its variables" );
  }
  if ( !catalog.contains( f ) )
  {
    throw input_error( "the target is not in the catalog of read-once functions" );
  }
  for ( const auto& v : m.vectors )
  {
    if ( f.bit( v.input ) != v.label )
    {
      throw input_error( "test vector " + format_input( v.input, m.n ) + " is labeled inconsistently with the target" );
    }
  }
}

bool agrees_on( const truth_table& g, const test_set& m )
{
  for ( const auto& v : m.vectors )
  {
    if ( g.bit( v.input ) != v.label )
    {
      return false;
    }
  }
  return true;
}

} // namespace

std::optional<truth_table> checking_test_counterexample( const truth_table& f, const test_set& m,
                                                         const alternative_catalog& catalog )
{
  check_test_against_target( f, m, catalog );
  for ( const auto& g : catalog.tables )
  {
    if ( g == f )
    {
      continue;
    }
    if ( agrees_on( g, m ) )
    {
      return g;
    }
  }
  return std::nullopt;
}

bool is_checking_test( const truth_table& f, const test_set& m, const alternative_catalog& catalog )
{
  return !checking_test_counterexample( f, m, catalog ).has_value();
}

unsigned min_test_size( const truth_table& f, const alternative_catalog& catalog )
{
  const unsigned n = f.num_vars();
  if ( n > 3u )
  {
    throw input_error( "cost guard exceeded: exact minimum search supports n <= 3" );
  }
  if ( n != catalog.n )
  {
    throw input_error( "target and catalog must agree on the variable count" );
  }
  if ( relevant_vars( f ) != var_set::full( n ) )
  {
    throw input_error( "the target must depend on all its variables" );
  }

  std::vector<const truth_table*> alternatives;
  for ( const auto& g : catalog.tables )
  {
    if ( g != f )
    {
      alternatives.push_back( &g );
    }
  }

  const uint32_t rows = f.num_rows();
  for ( uint32_t subset = 0u;; ++subset )
  {
    /* size-ascending order over subsets of the 2^n labeled vectors */
    for ( uint32_t chosen = 0u; chosen < ( 1u << rows ); ++chosen )
    {
      if ( static_cast<uint32_t>( __builtin_popcount( chosen ) ) != subset )
      {
        continue;
      }
      bool separates = true;
      for ( const auto* g : alternatives )
      {
        bool distinguished = false;
        for ( uint32_t row = 0u; row < rows && !distinguished; ++row )
        {
          if ( ( chosen >> row ) & 1u )
          {
            distinguished = g->bit( row ) != f.bit( row );
          }
        }
        if ( !distinguished )
        {
          separates = false;
          break;
        }
      }
      if ( separates )
      {
        return subset;
      }
    }
    if ( subset == rows )
    {
      throw std::logic_error( "the full truth table must separate the target" );
    }
  }
}

truth_table identify_from_test( const test_set& m, const alternative_catalog& catalog )
{
  if ( m.n != catalog.n )
  {
    throw input_error( "test set and catalog must agree on the variable count" );
  }
  std::optional<truth_table> found;
  for ( const auto& g : catalog.tables )
  {
    if ( !agrees_on( g, m ) )
    {
      continue;
    }
    if ( found )
    {
      throw uniqueness_error( "several catalog members are consistent with the test set" );
    }
    found = g;
  }
  if ( !found )
  {
    throw uniqueness_error( "no catalog member is consistent with the test set" );
  }
  return *found;
}

/* --------------------------------------------------------------- cache */

namespace
{

std::string catalog_header( unsigned n, unsigned l, bool include_constants )
{
  return std::to_string( n ) + "," + std::to_string( l ) + "," + ( include_constants ? "constants" : "no-constants" );
}

} // namespace

void save_catalog( const std::string& path, const alternative_catalog& catalog )
{
  std::ofstream out( path );
  if ( !out )
  {
    throw input_error( "cannot write catalog cache '" + path + "'" );
  }
  out << catalog_header( catalog.n, catalog.l, catalog.include_constants ) << "\n";
  for ( const auto& tt : catalog.tables )
  {
    out << to_string( tt ) << "\n";
  }
}

std::optional<alternative_catalog> load_catalog( const std::string& path, unsigned n, unsigned l,
                                                 bool include_constants )
{
  std::ifstream in( path );
  if ( !in )
  {
    return std::nullopt;
  }
  std::string line;
  if ( !std::getline( in, line ) || line != catalog_header( n, l, include_constants ) )
  {
    return std::nullopt;
  }
  alternative_catalog catalog;
  catalog.n = n;
  catalog.l = l;
  catalog.include_constants = include_constants;
  while ( std::getline( in, line ) )
  {
    if ( line.empty() )
    {
      continue;
    }
    try
    {
      auto tt = parse_truth_table( line );
      if ( tt.num_vars() != n )
      {
        return std::nullopt;
      }
      catalog.tables.push_back( std::move( tt ) );
    }
    catch ( const input_error& )
    {
      return std::nullopt;
    }
  }
  if ( !std::is_sorted( catalog.tables.begin(), catalog.tables.end() ) || catalog.tables.empty() )
  {
    return std::nullopt;
  }
  return catalog;
}

alternative_catalog load_or_build_catalog( const std::string& path, unsigned n, unsigned l,
                                           bool include_constants )
{
  if ( auto cached = load_catalog( path, n, l, include_constants ) )
  {
    return *cached;
  }
  auto catalog = enumerate_readonce( n, l, include_constants );
  save_catalog( path, catalog );
  return catalog;
}

/* ------------------------------------------------------ property suites */

namespace
{

uint64_t splitmix64( uint64_t x )
{
  x += 0x9e3779b97f4a7c15ull;
  x = ( x ^ ( x >> 30u ) ) * 0xbf58476d1ce4e5b9ull;
  x = ( x ^ ( x >> 27u ) ) * 0x94d049bb133111ebull;
  return x ^ ( x >> 31u );
}

struct instance_rng
{
  std::mt19937_64 eng;

  explicit instance_rng( uint64_t seed ) : eng( seed ) {}

  uint64_t below( uint64_t bound ) { return eng() % bound; }

  var_set random_subset( unsigned n, unsigned size )
  {
    std::vector<unsigned> vars( n );
    for ( unsigned i = 0u; i < n; ++i )
    {
      vars[i] = i + 1u;
    }
    for ( size_t i = vars.size(); i > 1u; --i )
    {
      std::swap( vars[i - 1u], vars[below( i )] );
    }
    var_set out;
    for ( unsigned i = 0u; i < size; ++i )
    {
      out.add( vars[i] );
    }
    return out;
  }
};

bool lemma2_instance( uint64_t seed )
{
  instance_rng rng( seed );
  const unsigned n = 3u + static_cast<unsigned>( rng.below( 4u ) );
  const unsigned l = 3u + static_cast<unsigned>( rng.below( 2u ) );
  const auto tree = random_tree( n, l, rng.eng() );
  const auto f = to_truth_table( tree );

  var_set u;
  bool found = false;
  for ( unsigned attempt = 0u; attempt < 64u && !found; ++attempt )
  {
    const unsigned size = 1u + static_cast<unsigned>( rng.below( std::min( l, n ) ) );
    const auto candidate = rng.random_subset( n, size );
    if ( is_conservative( tree, candidate ) )
    {
      u = candidate;
      found = true;
    }
  }
  if ( !found )
  {
    u = var_set{}.add( 1u + static_cast<unsigned>( rng.below( n ) ) ); /* singletons are conservative */
  }
  return stability_violations( f, u ).empty();
}

bool prop2_instance( uint64_t seed )
{
  instance_rng rng( seed );
  const unsigned n = 3u + static_cast<unsigned>( rng.below( 4u ) );
  const unsigned l = 2u + static_cast<unsigned>( rng.below( 3u ) );
  const auto tree = random_tree( n, l, rng.eng() );
  const auto f = to_truth_table( tree );

  std::optional<hypercube> cube;
  var_set u;
  for ( unsigned attempt = 0u; attempt < 64u && !cube; ++attempt )
  {
    const unsigned size = 1u + static_cast<unsigned>( rng.below( n ) );
    u = rng.random_subset( n, size );
    cube = find_one_hypercube( f, u );
  }
  if ( !cube )
  {
    u = var_set{}.add( 1u + static_cast<unsigned>( rng.below( n ) ) );
    cube = find_one_hypercube( f, u ); /* relevant singletons always have one */
  }
  if ( !cube )
  {
    return false;
  }

  const unsigned q = cube->dim() + static_cast<unsigned>( rng.below( n - cube->dim() + 1u ) );
  try
  {
    const auto expanded = expand_hypercube( f, *cube, q );
    return expanded.dim() == q && u.subset_of( expanded.free );
  }
  catch ( const std::exception& )
  {
    return false;
  }
}

bool prop3_instance( uint64_t seed )
{
  instance_rng rng( seed );
  const unsigned n = 3u + static_cast<unsigned>( rng.below( 4u ) );
  const unsigned l = 3u + static_cast<unsigned>( rng.below( 2u ) );
  const auto tree = random_tree( n, l, rng.eng() );
  const auto f = to_truth_table( tree );

  std::vector<uint32_t> internal;
  for ( uint32_t id = 0u; id < tree.num_nodes(); ++id )
  {
    if ( tree.node( id ).kind != formula_node::node_kind::leaf )
    {
      internal.push_back( id );
    }
  }
  if ( internal.empty() )
  {
    return true; /* single literal: nothing to check */
  }
  const uint32_t v = internal[rng.below( internal.size() )];
  const auto& node = tree.node( v );
  const bool prime_node = node.kind == formula_node::node_kind::prime;

  /* pick p children (all of them at prime nodes) and one variable from each */
  std::vector<uint32_t> chosen( node.children );
  unsigned p = static_cast<unsigned>( chosen.size() );
  if ( !prime_node )
  {
    for ( size_t i = chosen.size(); i > 1u; --i )
    {
      std::swap( chosen[i - 1u], chosen[rng.below( i )] );
    }
    p = 2u + static_cast<unsigned>( rng.below( chosen.size() - 1u ) );
    chosen.resize( p );
  }

  var_set u;
  for ( auto child : chosen )
  {
    const auto vars = tree.variables_below( child ).to_vector();
    u.add( vars[rng.below( vars.size() )] );
  }

  truth_table expected;
  if ( prime_node )
  {
    expected = node.label;
  }
  else
  {
    expected = truth_table::nth_var( p, 1u );
    for ( unsigned j = 2u; j <= p; ++j )
    {
      const auto next = truth_table::nth_var( p, j );
      expected = node.op == gate_op::and_ ? ( expected & next )
                                          : node.op == gate_op::or_ ? ( expected | next ) : ( expected ^ next );
    }
  }

  const auto cubes = find_hypercubes( f, u );
  if ( cubes.empty() )
  {
    return false; /* one variable per subtree always has a hypercube */
  }
  for ( const auto& cube : cubes )
  {
    if ( !similar( restriction_on( f, cube ), expected ) )
    {
      return false;
    }
  }
  return true;
}

bool roundtrip_instance( uint64_t seed )
{
  instance_rng rng( seed );
  const unsigned n = 1u + static_cast<unsigned>( rng.below( 8u ) );
  const unsigned l = 3u + static_cast<unsigned>( rng.below( 2u ) );
  const auto tree = random_tree( n, l, rng.eng() );
  const auto tt = to_truth_table( tree );

  const auto factored = factor( tt, l );
  if ( !factored )
  {
    return false;
  }
  return to_truth_table( *factored ) == tt && validate( *factored, l ).empty() && trees_equivalent( *factored, tree );
}

} // namespace

bool suite_report::all_passed() const
{
  for ( const auto& s : suites )
  {
    if ( s.failures > 0u )
    {
      return false;
    }
  }
  return true;
}

suite_report run_property_suites( uint64_t seed, const suite_budget& budget, std::string_view filter )
{
  struct suite
  {
    const char* name;
    unsigned requested;
    bool ( *run )( uint64_t );
  };
  const suite all[] = {
      { "lemma2", budget.lemma2, lemma2_instance },
      { "prop2", budget.prop2, prop2_instance },
      { "prop3", budget.prop3, prop3_instance },
      { "roundtrip", budget.roundtrip, roundtrip_instance },
  };

  if ( !filter.empty() )
  {
    bool known = false;
    for ( const auto& s : all )
    {
      known = known || filter == s.name;
    }
    if ( !known )
    {
      throw input_error( "unknown suite '" + std::string( filter ) + "'" );
    }
  }

  suite_report report;
  uint64_t suite_id = 0u;
  for ( const auto& s : all )
  {
    ++suite_id;
    if ( !filter.empty() && filter != s.name )
    {
      continue;
    }
    suite_outcome outcome;
    outcome.name = s.name;
    outcome.requested = s.requested;
    for ( unsigned i = 0u; i < s.requested; ++i )
    {
      const uint64_t instance_seed = splitmix64( splitmix64( seed ^ ( suite_id << 56u ) ) + i );
      if ( !s.run( instance_seed ) )
      {
        ++outcome.failures;
        outcome.failing_seeds.push_back( instance_seed );
      }
    }
    report.suites.push_back( std::move( outcome ) );
  }
  return report;
}

} // namespace roc
