#include "roc/hypercube.hpp"

namespace roc
{

std::string to_string( const hypercube& h )
{
  return "hc:{free=" + to_string( h.free ) + "; fix=" + to_string( h.fix ) + "}";
}

namespace
{

bool projection_covers( const truth_table& tt, const partial_assignment& fix, var_set w )
{
  return relevant_vars( cofactor( tt, fix ) ) == var_set::full( w.size() );
}

void check_valid( const truth_table& tt, const hypercube& h )
{
  const auto n = tt.num_vars();
  if ( ( h.free.mask() & h.fix.mask() ) != 0u || ( h.free.mask() | h.fix.mask() ) != var_set::full( n ).mask() )
  {
    throw input_error( "hypercube must fix exactly the complement of its free variables" );
  }
  if ( !projection_covers( tt, h.fix, h.free ) )
  {
    throw input_error( "invalid hypercube: the projection does not depend on all free variables" );
  }
}

} // namespace

std::vector<hypercube> find_hypercubes( const truth_table& tt, var_set w )
{
  const unsigned n = tt.num_vars();
  if ( !w.subset_of( var_set::full( n ) ) )
  {
    throw input_error( "subset contains a variable beyond x" + std::to_string( n ) );
  }
  const uint32_t comp = var_set::full( n ).mask() & ~w.mask();
  const unsigned n_comp = static_cast<unsigned>( __builtin_popcount( comp ) );
  std::vector<hypercube> out;
  for ( uint32_t gamma = 0u; gamma < ( 1u << n_comp ); ++gamma )
  {
    const partial_assignment fix( comp, scatter_bits( gamma, comp ) );
    if ( projection_covers( tt, fix, w ) )
    {
      out.push_back( hypercube{ w, fix } );
    }
  }
  return out;
}

std::optional<hypercube> find_one_hypercube( const truth_table& tt, var_set w )
{
  const unsigned n = tt.num_vars();
  if ( !w.subset_of( var_set::full( n ) ) )
  {
    throw input_error( "subset contains a variable beyond x" + std::to_string( n ) );
  }
  const uint32_t comp = var_set::full( n ).mask() & ~w.mask();
  const unsigned n_comp = static_cast<unsigned>( __builtin_popcount( comp ) );
  for ( uint32_t gamma = 0u; gamma < ( 1u << n_comp ); ++gamma )
  {
    const partial_assignment fix( comp, scatter_bits( gamma, comp ) );
    if ( projection_covers( tt, fix, w ) )
    {
      return hypercube{ w, fix };
    }
  }
  return std::nullopt;
}

hypercube expand_hypercube( const truth_table& tt, const hypercube& h, unsigned q )
{
  const unsigned n = tt.num_vars();
  check_valid( tt, h );
  if ( q < h.dim() || q > n )
  {
    throw input_error( "target dimension " + std::to_string( q ) + " out of range" );
  }

  hypercube current = h;
  while ( current.dim() < q )
  {
    bool grown = false;
    for ( auto v : current.fix.bound_vars().to_vector() )
    {
      const var_set next_free = var_set( current.free.mask() ).add( v );
      const uint32_t rest = current.fix.mask() & ~( 1u << ( v - 1u ) );
      const unsigned n_rest = static_cast<unsigned>( __builtin_popcount( rest ) );
      for ( uint32_t gamma = 0u; gamma < ( 1u << n_rest ); ++gamma )
      {
        const partial_assignment fix( rest, scatter_bits( gamma, rest ) );
        if ( projection_covers( tt, fix, next_free ) )
        {
          current = hypercube{ next_free, fix };
          grown = true;
          break;
        }
      }
      if ( grown )
      {
        break;
      }
    }
    if ( !grown )
    {
      /* a valid hypercube always admits a one-variable expansion */
      throw std::logic_error( "hypercube expansion failed" );
    }
  }
  return current;
}

truth_table restriction_on( const truth_table& tt, const hypercube& h )
{
  check_valid( tt, h );
  return cofactor( tt, h.fix );
}

std::vector<stability_violation> stability_violations( const truth_table& tt, var_set u )
{
  const var_set x = relevant_vars( tt );
  if ( !u.subset_of( x ) )
  {
    throw input_error( "the set must consist of relevant variables" );
  }

  std::vector<stability_violation> out;
  const uint32_t extra_pool = x.mask() & ~u.mask();
  const unsigned n_extra = static_cast<unsigned>( __builtin_popcount( extra_pool ) );
  for ( uint32_t t = 0u; t < ( 1u << n_extra ); ++t )
  {
    const var_set w( u.mask() | scatter_bits( t, extra_pool ) );
    for ( const auto& cube : find_hypercubes( tt, w ) )
    {
      /* look for a sub-hypercube for u: additionally fix the variables of w \ u */
      const uint32_t extend = w.mask() & ~u.mask();
      const unsigned n_extend = static_cast<unsigned>( __builtin_popcount( extend ) );
      bool found = false;
      for ( uint32_t delta = 0u; delta < ( 1u << n_extend ) && !found; ++delta )
      {
        const auto fix = cube.fix.merged_with( partial_assignment( extend, scatter_bits( delta, extend ) ) );
        found = projection_covers( tt, fix, u );
      }
      if ( !found )
      {
        out.push_back( stability_violation{ w, cube } );
      }
    }
  }
  return out;
}

std::optional<stability_violation> find_stability_violation( const truth_table& tt, var_set u )
{
  auto all = stability_violations( tt, u );
  if ( all.empty() )
  {
    return std::nullopt;
  }
  return all.front();
}

bool is_stable( const truth_table& tt, var_set u )
{
  return stability_violations( tt, u ).empty();
}

} // namespace roc
