#include "roc/decompose.hpp"

#include <algorithm>
#include <numeric>

namespace roc
{

truth_table apply_witness( const truth_table& g, const similarity_witness& w )
{
  const unsigned n = g.num_vars();
  if ( w.perm.size() != n || w.input_pol.size() != n )
  {
    throw input_error( "witness arity does not match the table" );
  }
  truth_table out( n );
  for ( uint32_t row = 0u; row < out.num_rows(); ++row )
  {
    uint32_t g_row = 0u;
    for ( unsigned j = 0u; j < n; ++j )
    {
      bool v = ( row >> ( w.perm[j] - 1u ) ) & 1u;
      if ( !w.input_pol[j] )
      {
        v = !v;
      }
      if ( v )
      {
        g_row |= 1u << j;
      }
    }
    out.set_bit( row, g.bit( g_row ) != !w.output_pol );
  }
  return out;
}

std::optional<similarity_witness> similar( const truth_table& f, const truth_table& g )
{
  const unsigned n = f.num_vars();
  if ( g.num_vars() != n )
  {
    throw input_error( "similarity is defined only for equal variable counts" );
  }

  similarity_witness w;
  w.perm.resize( n );
  std::iota( w.perm.begin(), w.perm.end(), 1u );
  w.input_pol.assign( n, true );
  if ( f == g )
  {
    return w;
  }

  std::vector<unsigned> perm( n );
  std::iota( perm.begin(), perm.end(), 1u );
  do
  {
    for ( uint32_t pol = 0u; pol < ( 1u << n ); ++pol )
    {
      for ( unsigned out_pol = 0u; out_pol < 2u; ++out_pol )
      {
        bool match = true;
        for ( uint32_t row = 0u; row < f.num_rows() && match; ++row )
        {
          uint32_t g_row = 0u;
          for ( unsigned j = 0u; j < n; ++j )
          {
            const bool v = ( ( row >> ( perm[j] - 1u ) ) & 1u ) != !( ( pol >> j ) & 1u );
            if ( v )
            {
              g_row |= 1u << j;
            }
          }
          match = f.bit( row ) == ( g.bit( g_row ) != ( out_pol == 0u ) );
        }
        if ( match )
        {
          w.perm = perm;
          for ( unsigned j = 0u; j < n; ++j )
          {
            w.input_pol[j] = ( pol >> j ) & 1u;
          }
          w.output_pol = out_pol != 0u;
          return w;
        }
      }
    }
  } while ( std::next_permutation( perm.begin(), perm.end() ) );

  return std::nullopt;
}

std::optional<truth_table> is_bound_set( const truth_table& tt, var_set s )
{
  const unsigned n = tt.num_vars();
  if ( !s.subset_of( var_set::full( n ) ) )
  {
    throw input_error( "bound-set candidate contains a variable beyond x" + std::to_string( n ) );
  }
  if ( s.size() <= 1u || s.size() >= n )
  {
    throw input_error( "bound sets must be proper subsets of size at least 2" );
  }

  const uint32_t comp = var_set::full( n ).mask() & ~s.mask();
  const unsigned n_comp = static_cast<unsigned>( __builtin_popcount( comp ) );
  std::optional<truth_table> h;
  std::optional<truth_table> h_neg;
  for ( uint32_t gamma = 0u; gamma < ( 1u << n_comp ); ++gamma )
  {
    const partial_assignment fix( comp, scatter_bits( gamma, comp ) );
    auto r = cofactor( tt, fix );
    if ( r.is_constant() )
    {
      continue;
    }
    if ( !h )
    {
      h = r;
      h_neg = ~r;
    }
    else if ( r != *h && r != *h_neg )
    {
      return std::nullopt;
    }
  }
  return h;
}

truth_table bound_set_outer( const truth_table& tt, var_set s, const truth_table& h )
{
  const unsigned n = tt.num_vars();
  const uint32_t comp = var_set::full( n ).mask() & ~s.mask();
  const unsigned n_comp = static_cast<unsigned>( __builtin_popcount( comp ) );
  const truth_table h_neg = ~h;
  truth_table g( 1u + n_comp );
  for ( uint32_t gamma = 0u; gamma < ( 1u << n_comp ); ++gamma )
  {
    const partial_assignment fix( comp, scatter_bits( gamma, comp ) );
    const auto r = cofactor( tt, fix );
    bool g0, g1;
    if ( r == h )
    {
      g0 = false;
      g1 = true;
    }
    else if ( r == h_neg )
    {
      g0 = true;
      g1 = false;
    }
    else if ( r.is_constant() )
    {
      g0 = g1 = r.bit( 0u );
    }
    else
    {
      throw input_error( "the given set is not bound with the given inner function" );
    }
    g.set_bit( gamma << 1u, g0 );
    g.set_bit( ( gamma << 1u ) | 1u, g1 );
  }
  return g;
}

truth_table compose_bound( const truth_table& g, const truth_table& h, var_set s, unsigned n )
{
  const uint32_t comp = var_set::full( n ).mask() & ~s.mask();
  truth_table out( n );
  for ( uint32_t row = 0u; row < out.num_rows(); ++row )
  {
    const bool inner = h.bit( gather_bits( row, s.mask() ) );
    const uint32_t g_row = ( gather_bits( row, comp ) << 1u ) | ( inner ? 1u : 0u );
    out.set_bit( row, g.bit( g_row ) );
  }
  return out;
}

bool is_prime( const truth_table& tt )
{
  const unsigned n = tt.num_vars();
  if ( n < 3u )
  {
    throw input_error( "primality is defined only for at least 3 variables" );
  }
  if ( relevant_vars( tt ) != var_set::full( n ) )
  {
    throw input_error( "primality is defined only for functions depending on all their variables" );
  }
  for ( uint32_t mask = 1u; mask < var_set::full( n ).mask(); ++mask )
  {
    const auto size = static_cast<unsigned>( __builtin_popcount( mask ) );
    if ( size < 2u || size >= n )
    {
      continue;
    }
    if ( is_bound_set( tt, var_set( mask ) ) )
    {
      return false;
    }
  }
  return true;
}

} // namespace roc
