#include "roc/factor.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>

namespace roc
{

namespace
{

unsigned popcount( uint32_t x )
{
  return static_cast<unsigned>( __builtin_popcount( x ) );
}

/* f = u(s) and v(comp)?  u and v are the one-projections onto each side. */
bool check_and_split( const truth_table& f, uint32_t s_mask )
{
  const uint32_t comp = var_set::full( f.num_vars() ).mask() & ~s_mask;
  std::vector<char> ones_s( size_t( 1 ) << popcount( s_mask ), 0 );
  std::vector<char> ones_c( size_t( 1 ) << popcount( comp ), 0 );
  for ( uint32_t row = 0u; row < f.num_rows(); ++row )
  {
    if ( f.bit( row ) )
    {
      ones_s[gather_bits( row, s_mask )] = 1;
      ones_c[gather_bits( row, comp )] = 1;
    }
  }
  for ( uint32_t row = 0u; row < f.num_rows(); ++row )
  {
    const bool expected = ones_s[gather_bits( row, s_mask )] && ones_c[gather_bits( row, comp )];
    if ( f.bit( row ) != expected )
    {
      return false;
    }
  }
  return true;
}

/* f = u(s) xor v(comp)?  Components are the restrictions at a zero complement. */
bool check_xor_split( const truth_table& f, uint32_t s_mask )
{
  const uint32_t comp = var_set::full( f.num_vars() ).mask() & ~s_mask;
  const bool base = f.bit( 0u );
  for ( uint32_t row = 0u; row < f.num_rows(); ++row )
  {
    const bool u = f.bit( row & s_mask );
    const bool v = f.bit( row & comp );
    const bool expected = ( u != v ) != base;
    if ( f.bit( row ) != expected )
    {
      return false;
    }
  }
  return true;
}

std::vector<uint32_t> op_split_masks( const truth_table& f, const truth_table& f_neg, gate_op op )
{
  const uint32_t full = var_set::full( f.num_vars() ).mask();
  std::vector<uint32_t> out;
  for ( uint32_t s = 1u; s < full; ++s )
  {
    if ( !( s & 1u ) )
    {
      continue; /* each bipartition once: keep the side containing x1 */
    }
    bool ok;
    switch ( op )
    {
    case gate_op::and_:
      ok = check_and_split( f, s );
      break;
    case gate_op::or_:
      ok = check_and_split( f_neg, s );
      break;
    default:
      ok = check_xor_split( f, s );
      break;
    }
    if ( ok )
    {
      out.push_back( s );
    }
  }
  return out;
}

/* Common refinement of all splitting bipartitions: variables with equal
 * membership signatures across the splits end up in one block.  Blocks are
 * ordered by their smallest variable position. */
std::vector<uint32_t> finest_blocks( unsigned n, const std::vector<uint32_t>& splits )
{
  std::vector<uint32_t> blocks;
  std::vector<std::vector<bool>> signatures;
  for ( unsigned p = 0u; p < n; ++p )
  {
    std::vector<bool> sig;
    sig.reserve( splits.size() );
    for ( auto s : splits )
    {
      sig.push_back( ( s >> p ) & 1u );
    }
    bool placed = false;
    for ( size_t i = 0u; i < blocks.size(); ++i )
    {
      if ( signatures[i] == sig )
      {
        blocks[i] |= 1u << p;
        placed = true;
        break;
      }
    }
    if ( !placed )
    {
      blocks.push_back( 1u << p );
      signatures.push_back( std::move( sig ) );
    }
  }
  return blocks;
}

struct prime_structure
{
  std::vector<uint32_t> blocks;       /* position masks, ordered by smallest member */
  std::vector<truth_table> inner;     /* canonical inner function per block */
  truth_table outer;                  /* prime function on blocks.size() inputs */
};

/* Case (c): partition into maximal proper bound sets with a prime outer
 * function of arity in [3, l].  Returns nothing if the structure is absent. */
std::optional<prime_structure> find_prime_structure( const truth_table& f, unsigned l )
{
  const unsigned n = f.num_vars();
  if ( n < 3u )
  {
    return std::nullopt;
  }
  const uint32_t full = var_set::full( n ).mask();

  std::vector<std::pair<uint32_t, truth_table>> modules;
  for ( uint32_t mask = 1u; mask < full; ++mask )
  {
    const auto size = popcount( mask );
    if ( size < 2u || size >= n )
    {
      continue;
    }
    if ( auto h = is_bound_set( f, var_set( mask ) ) )
    {
      modules.emplace_back( mask, std::move( *h ) );
    }
  }

  std::vector<std::pair<uint32_t, truth_table>> maximal;
  for ( const auto& m : modules )
  {
    bool covered = false;
    for ( const auto& other : modules )
    {
      if ( other.first != m.first && ( m.first & ~other.first ) == 0u )
      {
        covered = true;
        break;
      }
    }
    if ( !covered )
    {
      maximal.push_back( m );
    }
  }

  for ( size_t i = 0u; i < maximal.size(); ++i )
  {
    for ( size_t j = i + 1u; j < maximal.size(); ++j )
    {
      if ( maximal[i].first & maximal[j].first )
      {
        return std::nullopt; /* overlapping maximal bound sets: no prime skeleton */
      }
    }
  }

  prime_structure ps;
  uint32_t covered = 0u;
  for ( const auto& m : maximal )
  {
    covered |= m.first;
  }
  for ( unsigned p = 0u; p < n; ++p )
  {
    const uint32_t bit = 1u << p;
    if ( covered & bit )
    {
      for ( const auto& m : maximal )
      {
        if ( m.first & bit && ( m.first & ( bit - 1u ) ) == 0u )
        {
          ps.blocks.push_back( m.first );
          ps.inner.push_back( m.second );
        }
      }
    }
    else
    {
      ps.blocks.push_back( bit );
      ps.inner.push_back( truth_table::nth_var( 1u, 1u ) );
    }
  }

  const unsigned s = static_cast<unsigned>( ps.blocks.size() );
  if ( s < 3u || s > l )
  {
    return std::nullopt;
  }

  /* representative block assignments driving each inner function to 0 and 1 */
  std::vector<std::array<uint32_t, 2>> reps( s );
  for ( unsigned i = 0u; i < s; ++i )
  {
    const auto& h = ps.inner[i];
    bool found0 = false, found1 = false;
    for ( uint32_t a = 0u; a < h.num_rows() && !( found0 && found1 ); ++a )
    {
      const bool v = h.bit( a );
      if ( v && !found1 )
      {
        reps[i][1] = scatter_bits( a, ps.blocks[i] );
        found1 = true;
      }
      if ( !v && !found0 )
      {
        reps[i][0] = scatter_bits( a, ps.blocks[i] );
        found0 = true;
      }
    }
    if ( !found0 || !found1 )
    {
      return std::nullopt; /* constant inner function: f would not depend on the block */
    }
  }

  truth_table outer( s );
  for ( uint32_t orow = 0u; orow < outer.num_rows(); ++orow )
  {
    uint32_t row = 0u;
    for ( unsigned i = 0u; i < s; ++i )
    {
      row |= reps[i][( orow >> i ) & 1u];
    }
    outer.set_bit( orow, f.bit( row ) );
  }

  /* the recomposition must reproduce f exactly */
  for ( uint32_t row = 0u; row < f.num_rows(); ++row )
  {
    uint32_t orow = 0u;
    for ( unsigned i = 0u; i < s; ++i )
    {
      if ( ps.inner[i].bit( gather_bits( row, ps.blocks[i] ) ) )
      {
        orow |= 1u << i;
      }
    }
    if ( f.bit( row ) != outer.bit( orow ) )
    {
      return std::nullopt;
    }
  }

  if ( relevant_vars( outer ) != var_set::full( s ) || !is_prime( outer ) )
  {
    return std::nullopt;
  }

  ps.outer = std::move( outer );
  return ps;
}

struct factor_engine
{
  unsigned l;

  std::optional<uint32_t> rec( const truth_table& f, const std::vector<unsigned>& vars, read_once_tree& out )
  {
    const unsigned n = f.num_vars();
    if ( n == 1u )
    {
      return out.add_leaf( vars[0], f.bit( 0u ) );
    }
    if ( n == 0u || f.is_constant() )
    {
      return std::nullopt;
    }

    /* case (b): finest and/or/xor decomposition over disjoint supports */
    const truth_table f_neg = ~f;
    for ( auto op : { gate_op::and_, gate_op::or_, gate_op::xor_ } )
    {
      const auto splits = op_split_masks( f, f_neg, op );
      if ( splits.empty() )
      {
        continue;
      }
      const auto blocks = finest_blocks( n, splits );
      assert( blocks.size() >= 2u );
      assert( !find_prime_structure( f, l ) );

      /* pivot assignment keeping the other components at the op's identity */
      uint32_t pivot = 0u;
      if ( op != gate_op::xor_ )
      {
        const bool target = op == gate_op::or_ ? false : true;
        while ( f.bit( pivot ) != target )
        {
          ++pivot;
        }
      }

      std::vector<truth_table> comps;
      comps.reserve( blocks.size() );
      const uint32_t full = var_set::full( n ).mask();
      for ( auto block : blocks )
      {
        const uint32_t others = full & ~block;
        comps.push_back( cofactor( f, partial_assignment( others, pivot & others ) ) );
      }

      bool correction = false;
      if ( op == gate_op::xor_ )
      {
        correction = f.bit( 0u );
        for ( const auto& c : comps )
        {
          correction = correction != c.bit( 0u );
        }
      }

      bool verified = true;
      for ( uint32_t row = 0u; row < f.num_rows() && verified; ++row )
      {
        bool value = op == gate_op::and_;
        for ( size_t i = 0u; i < blocks.size(); ++i )
        {
          const bool c = comps[i].bit( gather_bits( row, blocks[i] ) );
          value = op == gate_op::and_ ? ( value && c ) : op == gate_op::or_ ? ( value || c ) : ( value != c );
        }
        if ( op == gate_op::xor_ )
        {
          value = value != correction;
        }
        verified = value == f.bit( row );
      }
      assert( verified );
      if ( !verified )
      {
        continue;
      }

      std::vector<uint32_t> children;
      children.reserve( blocks.size() );
      for ( size_t i = 0u; i < blocks.size(); ++i )
      {
        std::vector<unsigned> child_vars;
        for ( unsigned p = 0u; p < n; ++p )
        {
          if ( ( blocks[i] >> p ) & 1u )
          {
            child_vars.push_back( vars[p] );
          }
        }
        const auto child = rec( comps[i], child_vars, out );
        if ( !child )
        {
          return std::nullopt;
        }
        children.push_back( *child );
      }
      if ( correction )
      {
        out.negate_node( children[0] );
      }
      return out.add_gate( op, std::move( children ) );
    }

    /* case (c): prime outer function over maximal bound sets */
    const auto ps = find_prime_structure( f, l );
    if ( !ps )
    {
      return std::nullopt;
    }
    std::vector<uint32_t> children;
    children.reserve( ps->blocks.size() );
    for ( size_t i = 0u; i < ps->blocks.size(); ++i )
    {
      std::vector<unsigned> child_vars;
      for ( unsigned p = 0u; p < n; ++p )
      {
        if ( ( ps->blocks[i] >> p ) & 1u )
        {
          child_vars.push_back( vars[p] );
        }
      }
      if ( child_vars.size() == 1u )
      {
        children.push_back( out.add_leaf( child_vars[0] ) );
      }
      else
      {
        const auto child = rec( ps->inner[i], child_vars, out );
        if ( !child )
        {
          return std::nullopt;
        }
        children.push_back( *child );
      }
    }
    return out.add_prime( ps->outer, std::move( children ) );
  }
};

} // namespace

std::optional<read_once_tree> factor( const truth_table& tt, unsigned l )
{
  if ( l < 2u )
  {
    throw input_error( "arity bound must be at least 2" );
  }
  const unsigned n = tt.num_vars();
  const auto relevant = relevant_vars( tt );
  if ( relevant.empty() )
  {
    return std::nullopt;
  }

  truth_table core = tt;
  std::vector<unsigned> vars = relevant.to_vector();
  if ( relevant != var_set::full( n ) )
  {
    const uint32_t irrelevant = var_set::full( n ).mask() & ~relevant.mask();
    core = cofactor( tt, partial_assignment( irrelevant, 0u ) );
  }

  factor_engine engine{ l };
  read_once_tree scratch;
  const auto root = engine.rec( core, vars, scratch );
  if ( !root )
  {
    return std::nullopt;
  }
  scratch.set_root( *root );
  scratch.set_arity_bound( l );
  return canonicalize( scratch );
}

bool trees_equivalent( const read_once_tree& a, const read_once_tree& b )
{
  if ( a.variables() != b.variables() )
  {
    throw input_error( "trees are over different variable sets" );
  }
  if ( to_truth_table( a ) != to_truth_table( b ) )
  {
    return false;
  }

  const auto collect = []( const read_once_tree& t ) {
    std::map<uint32_t, truth_table> out;
    for ( uint32_t id = 0u; id < t.num_nodes(); ++id )
    {
      if ( t.node( id ).kind != formula_node::node_kind::leaf )
      {
        out.emplace( t.variables_below( id ).mask(), node_function( t, id ) );
      }
    }
    return out;
  };

  const auto nodes_a = collect( a );
  const auto nodes_b = collect( b );
  if ( nodes_a.size() != nodes_b.size() )
  {
    return false;
  }
  for ( const auto& [leaves, fn] : nodes_a )
  {
    const auto it = nodes_b.find( leaves );
    if ( it == nodes_b.end() )
    {
      return false;
    }
    if ( it->second != fn && it->second != ~fn )
    {
      return false;
    }
  }
  return true;
}

} // namespace roc
