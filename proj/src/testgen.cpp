#include "roc/testgen.hpp"

#include <algorithm>

namespace roc
{

bool test_set::contains( uint32_t input ) const
{
  const labeled_vector probe{ input, false };
  return std::binary_search( vectors.begin(), vectors.end(), probe );
}

std::vector<var_set> subsets_lex( unsigned n, unsigned l )
{
  std::vector<var_set> out;
  if ( l == 0u || l > n )
  {
    return out;
  }
  std::vector<unsigned> c( l );
  for ( unsigned i = 0u; i < l; ++i )
  {
    c[i] = i + 1u;
  }
  for ( ;; )
  {
    var_set s;
    for ( auto v : c )
    {
      s.add( v );
    }
    out.push_back( s );

    /* advance the combination */
    int i = static_cast<int>( l ) - 1;
    while ( i >= 0 && c[i] == n - ( l - 1u - static_cast<unsigned>( i ) ) )
    {
      --i;
    }
    if ( i < 0 )
    {
      break;
    }
    ++c[i];
    for ( unsigned j = static_cast<unsigned>( i ) + 1u; j < l; ++j )
    {
      c[j] = c[j - 1u] + 1u;
    }
  }
  return out;
}

namespace
{

void check_target( const truth_table& tt, unsigned l )
{
  const unsigned n = tt.num_vars();
  if ( n < 1u )
  {
    throw input_error( "the target needs at least one variable" );
  }
  if ( relevant_vars( tt ) != var_set::full( n ) )
  {
    throw input_error( "the target must depend on all its variables" );
  }
  if ( l < 1u || l > n )
  {
    throw input_error( "dimension " + std::to_string( l ) + " out of range 1.." + std::to_string( n ) );
  }
}

std::vector<labeled_vector> cube_vectors( const truth_table& tt, const hypercube& cube )
{
  std::vector<labeled_vector> out;
  const uint32_t free_mask = cube.free.mask();
  const unsigned dim = cube.dim();
  out.reserve( size_t( 1 ) << dim );
  for ( uint32_t delta = 0u; delta < ( 1u << dim ); ++delta )
  {
    const uint32_t row = cube.fix.bits() | scatter_bits( delta, free_mask );
    out.push_back( labeled_vector{ row, tt.bit( row ) } );
  }
  return out;
}

} // namespace

relevance_table build_relevance_table( const truth_table& tt, unsigned l )
{
  check_target( tt, l );
  relevance_table table;
  table.n = tt.num_vars();
  table.l = l;
  for ( auto w : subsets_lex( table.n, l ) )
  {
    relevance_row row;
    row.w = w;
    row.cube = find_one_hypercube( tt, w );
    if ( row.cube )
    {
      row.vectors = cube_vectors( tt, *row.cube );
    }
    table.rows.push_back( std::move( row ) );
  }
  return table;
}

std::vector<labeled_vector> hypercube_set_raw( const truth_table& tt, unsigned l, const testgen_options& options )
{
  check_target( tt, l );
  std::vector<labeled_vector> out;
  for ( auto w : subsets_lex( tt.num_vars(), l ) )
  {
    if ( options.all_cubes )
    {
      for ( const auto& cube : find_hypercubes( tt, w ) )
      {
        const auto vs = cube_vectors( tt, cube );
        out.insert( out.end(), vs.begin(), vs.end() );
      }
    }
    else if ( const auto cube = find_one_hypercube( tt, w ) )
    {
      const auto vs = cube_vectors( tt, *cube );
      out.insert( out.end(), vs.begin(), vs.end() );
    }
  }
  return out;
}

test_set hypercube_set( const truth_table& tt, unsigned l, const testgen_options& options )
{
  test_set m;
  m.n = tt.num_vars();
  m.vectors = hypercube_set_raw( tt, l, options );
  std::sort( m.vectors.begin(), m.vectors.end() );
  m.vectors.erase( std::unique( m.vectors.begin(), m.vectors.end() ), m.vectors.end() );
  return m;
}

uint64_t size_bound( unsigned n, unsigned l )
{
  if ( l < 1u || l > n )
  {
    throw input_error( "dimension " + std::to_string( l ) + " out of range 1.." + std::to_string( n ) );
  }
  uint64_t binom = 1u;
  for ( unsigned i = 1u; i <= l; ++i )
  {
    binom = binom * ( n - l + i ) / i;
  }
  return ( uint64_t( 1 ) << l ) * binom;
}

std::string format_input( uint32_t input, unsigned n )
{
  std::string out( n, '0' );
  for ( unsigned j = 0u; j < n; ++j )
  {
    if ( ( input >> j ) & 1u )
    {
      out[j] = '1';
    }
  }
  return out;
}

std::string to_string( const test_set& m )
{
  std::string out = "n=" + std::to_string( m.n ) + "\n";
  for ( const auto& v : m.vectors )
  {
    out += format_input( v.input, m.n );
    out += ' ';
    out += v.label ? '1' : '0';
    out += '\n';
  }
  return out;
}

test_set parse_test_set( std::string_view text )
{
  test_set m;
  size_t pos = 0u;
  auto next_line = [&]() -> std::optional<std::string_view> {
    while ( pos < text.size() )
    {
      size_t end = text.find( '\n', pos );
      if ( end == std::string_view::npos )
      {
        end = text.size();
      }
      auto line = text.substr( pos, end - pos );
      pos = end + 1u;
      if ( !line.empty() && line.back() == '\r' )
      {
        line.remove_suffix( 1u );
      }
      if ( !line.empty() )
      {
        return line;
      }
    }
    return std::nullopt;
  };

  const auto header = next_line();
  if ( !header || header->substr( 0u, 2u ) != "n=" )
  {
    throw input_error( "test-set file must start with an 'n=<count>' header" );
  }
  unsigned n = 0u;
  for ( size_t i = 2u; i < header->size(); ++i )
  {
    const char c = ( *header )[i];
    if ( c < '0' || c > '9' )
    {
      throw input_error( std::string( "invalid character '" ) + c + "' in the test-set header" );
    }
    n = n * 10u + static_cast<unsigned>( c - '0' );
  }
  if ( n < 1u || n > truth_table::max_vars )
  {
    throw input_error( "variable count " + std::to_string( n ) + " out of range in the test-set header" );
  }
  m.n = n;

  while ( const auto line = next_line() )
  {
    if ( line->size() != n + 2u || ( *line )[n] != ' ' )
    {
      throw input_error( "malformed test vector '" + std::string( *line ) + "'" );
    }
    labeled_vector v;
    for ( unsigned j = 0u; j < n; ++j )
    {
      const char c = ( *line )[j];
      if ( c != '0' && c != '1' )
      {
        throw input_error( "malformed test vector '" + std::string( *line ) + "'" );
      }
      if ( c == '1' )
      {
        v.input |= 1u << j;
      }
    }
    const char lc = ( *line )[n + 1u];
    if ( lc != '0' && lc != '1' )
    {
      throw input_error( "malformed label in '" + std::string( *line ) + "'" );
    }
    v.label = lc == '1';
    m.vectors.push_back( v );
  }

  std::sort( m.vectors.begin(), m.vectors.end() );
  for ( size_t i = 1u; i < m.vectors.size(); ++i )
  {
    if ( m.vectors[i].input == m.vectors[i - 1u].input )
    {
      throw input_error( "duplicate test vector " + format_input( m.vectors[i].input, n ) );
    }
  }
  return m;
}

std::string to_string( const relevance_table& table )
{
  std::string out;
  for ( const auto& row : table.rows )
  {
    out += "w=" + to_string( row.w ) + "\t";
    if ( row.is_star() )
    {
      out += "*";
    }
    else
    {
      out += to_string( *row.cube );
      for ( const auto& v : row.vectors )
      {
        out += ' ';
        out += format_input( v.input, table.n );
        out += ':';
        out += v.label ? '1' : '0';
      }
    }
    out += '\n';
  }
  return out;
}

} // namespace roc
