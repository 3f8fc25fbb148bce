#include "roc/truth_table.hpp"

#include <algorithm>
#include <cctype>

namespace roc
{

std::vector<unsigned> var_set::to_vector() const
{
  std::vector<unsigned> out;
  for ( unsigned i = 1u; i <= 32u; ++i )
  {
    if ( ( mask_ >> ( i - 1 ) ) & 1u )
    {
      out.push_back( i );
    }
  }
  return out;
}

std::string to_string( var_set s )
{
  std::string out;
  for ( auto v : s.to_vector() )
  {
    if ( !out.empty() )
    {
      out += ',';
    }
    out += std::to_string( v );
  }
  return out;
}

namespace
{

unsigned parse_uint( std::string_view text, size_t& pos, const char* what )
{
  if ( pos >= text.size() || !std::isdigit( static_cast<unsigned char>( text[pos] ) ) )
  {
    throw input_error( std::string( "expected " ) + what + " in '" + std::string( text ) + "'" );
  }
  unsigned value = 0u;
  while ( pos < text.size() && std::isdigit( static_cast<unsigned char>( text[pos] ) ) )
  {
    value = value * 10u + static_cast<unsigned>( text[pos] - '0' );
    if ( value > 1000000u )
    {
      throw input_error( std::string( "number too large in '" ) + std::string( text ) + "'" );
    }
    ++pos;
  }
  return value;
}

} // namespace

var_set parse_var_set( std::string_view text )
{
  var_set out;
  size_t pos = 0u;
  while ( pos < text.size() )
  {
    const auto v = parse_uint( text, pos, "variable index" );
    if ( v < 1u || v > truth_table::max_vars )
    {
      throw input_error( "variable index " + std::to_string( v ) + " out of range" );
    }
    if ( out.contains( v ) )
    {
      throw input_error( "variable " + std::to_string( v ) + " listed twice" );
    }
    out.add( v );
    if ( pos < text.size() )
    {
      if ( text[pos] != ',' )
      {
        throw input_error( std::string( "expected ',' in '" ) + std::string( text ) + "'" );
      }
      ++pos;
    }
  }
  return out;
}

partial_assignment::partial_assignment( uint32_t mask, uint32_t bits )
    : mask_( mask ), bits_( bits & mask )
{
}

bool partial_assignment::value( unsigned var ) const
{
  if ( !bound( var ) )
  {
    throw input_error( "variable " + std::to_string( var ) + " is not bound" );
  }
  return ( bits_ >> ( var - 1 ) ) & 1u;
}

partial_assignment& partial_assignment::bind( unsigned var, bool val )
{
  if ( var < 1u || var > truth_table::max_vars )
  {
    throw input_error( "variable index " + std::to_string( var ) + " out of range" );
  }
  if ( bound( var ) )
  {
    throw input_error( "variable " + std::to_string( var ) + " bound twice" );
  }
  mask_ |= 1u << ( var - 1 );
  if ( val )
  {
    bits_ |= 1u << ( var - 1 );
  }
  return *this;
}

partial_assignment partial_assignment::merged_with( const partial_assignment& other ) const
{
  if ( mask_ & other.mask_ )
  {
    throw input_error( "assignments overlap" );
  }
  return partial_assignment( mask_ | other.mask_, bits_ | other.bits_ );
}

std::string to_string( const partial_assignment& p )
{
  std::string out;
  for ( auto v : p.bound_vars().to_vector() )
  {
    if ( !out.empty() )
    {
      out += ',';
    }
    out += std::to_string( v );
    out += '=';
    out += p.value( v ) ? '1' : '0';
  }
  return out;
}

partial_assignment parse_partial_assignment( std::string_view text )
{
  partial_assignment out;
  size_t pos = 0u;
  while ( pos < text.size() )
  {
    const auto v = parse_uint( text, pos, "variable index" );
    if ( pos >= text.size() || text[pos] != '=' )
    {
      throw input_error( std::string( "expected '=' in '" ) + std::string( text ) + "'" );
    }
    ++pos;
    if ( pos >= text.size() || ( text[pos] != '0' && text[pos] != '1' ) )
    {
      throw input_error( std::string( "expected 0 or 1 in '" ) + std::string( text ) + "'" );
    }
    out.bind( v, text[pos] == '1' );
    ++pos;
    if ( pos < text.size() )
    {
      if ( text[pos] != ',' )
      {
        throw input_error( std::string( "expected ',' in '" ) + std::string( text ) + "'" );
      }
      ++pos;
    }
  }
  return out;
}

uint32_t scatter_bits( uint32_t value, uint32_t positions )
{
  uint32_t out = 0u;
  unsigned j = 0u;
  while ( positions )
  {
    const uint32_t low = positions & ( ~positions + 1u );
    if ( ( value >> j ) & 1u )
    {
      out |= low;
    }
    positions ^= low;
    ++j;
  }
  return out;
}

uint32_t gather_bits( uint32_t word, uint32_t positions )
{
  uint32_t out = 0u;
  unsigned j = 0u;
  while ( positions )
  {
    const uint32_t low = positions & ( ~positions + 1u );
    if ( word & low )
    {
      out |= 1u << j;
    }
    positions ^= low;
    ++j;
  }
  return out;
}

truth_table::truth_table( unsigned num_vars ) : num_vars_( num_vars )
{
  if ( num_vars > max_vars )
  {
    throw input_error( "variable count " + std::to_string( num_vars ) + " exceeds the supported maximum of " + std::to_string( max_vars ) );
  }
  const uint32_t rows = 1u << num_vars_;
  words_.assign( ( rows + 63u ) / 64u, 0u );
}

truth_table truth_table::constant( unsigned num_vars, bool value )
{
  truth_table tt( num_vars );
  if ( value )
  {
    return ~tt;
  }
  return tt;
}

truth_table truth_table::nth_var( unsigned num_vars, unsigned var, bool complement )
{
  if ( var < 1u || var > num_vars )
  {
    throw input_error( "variable index " + std::to_string( var ) + " out of range" );
  }
  truth_table tt( num_vars );
  for ( uint32_t row = 0u; row < tt.num_rows(); ++row )
  {
    const bool v = ( row >> ( var - 1 ) ) & 1u;
    tt.set_bit( row, v != complement );
  }
  return tt;
}

void truth_table::set_bit( uint32_t row, bool value )
{
  if ( value )
  {
    words_[row >> 6u] |= uint64_t( 1 ) << ( row & 63u );
  }
  else
  {
    words_[row >> 6u] &= ~( uint64_t( 1 ) << ( row & 63u ) );
  }
}

bool truth_table::is_constant() const
{
  const bool first = bit( 0u );
  for ( uint32_t row = 1u; row < num_rows(); ++row )
  {
    if ( bit( row ) != first )
    {
      return false;
    }
  }
  return true;
}

truth_table truth_table::operator~() const
{
  truth_table out = *this;
  for ( auto& w : out.words_ )
  {
    w = ~w;
  }
  /* clear unused high bits */
  const uint32_t rows = num_rows();
  if ( rows & 63u )
  {
    out.words_.back() &= ( uint64_t( 1 ) << ( rows & 63u ) ) - 1u;
  }
  return out;
}

void truth_table::check_compatible( const truth_table& other ) const
{
  if ( num_vars_ != other.num_vars_ )
  {
    throw input_error( "variable count mismatch: " + std::to_string( num_vars_ ) + " vs " + std::to_string( other.num_vars_ ) );
  }
}

truth_table& truth_table::operator&=( const truth_table& other )
{
  check_compatible( other );
  for ( size_t i = 0u; i < words_.size(); ++i )
  {
    words_[i] &= other.words_[i];
  }
  return *this;
}

truth_table& truth_table::operator|=( const truth_table& other )
{
  check_compatible( other );
  for ( size_t i = 0u; i < words_.size(); ++i )
  {
    words_[i] |= other.words_[i];
  }
  return *this;
}

truth_table& truth_table::operator^=( const truth_table& other )
{
  check_compatible( other );
  for ( size_t i = 0u; i < words_.size(); ++i )
  {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

bool operator<( const truth_table& a, const truth_table& b )
{
  if ( a.num_vars_ != b.num_vars_ )
  {
    return a.num_vars_ < b.num_vars_;
  }
  for ( size_t i = a.words_.size(); i-- > 0u; )
  {
    if ( a.words_[i] != b.words_[i] )
    {
      return a.words_[i] < b.words_[i];
    }
  }
  return false;
}

std::string to_hex( const truth_table& tt )
{
  static const char* digits = "0123456789abcdef";
  const uint32_t rows = tt.num_rows();
  const uint32_t num_digits = ( rows + 3u ) / 4u;
  std::string out( num_digits, '0' );
  for ( uint32_t d = 0u; d < num_digits; ++d )
  {
    unsigned nibble = 0u;
    for ( unsigned b = 0u; b < 4u; ++b )
    {
      const uint32_t row = 4u * d + b;
      if ( row < rows && tt.bit( row ) )
      {
        nibble |= 1u << b;
      }
    }
    out[num_digits - 1u - d] = digits[nibble];
  }
  return out;
}

std::string to_string( const truth_table& tt )
{
  return "tt:" + std::to_string( tt.num_vars() ) + ":" + to_hex( tt );
}

truth_table table_from_hex( unsigned num_vars, std::string_view hex )
{
  truth_table tt( num_vars );
  const uint32_t rows = tt.num_rows();
  const uint32_t num_digits = ( rows + 3u ) / 4u;
  if ( hex.size() != num_digits )
  {
    throw input_error( "hex string '" + std::string( hex ) + "' must have exactly " + std::to_string( num_digits ) + " digits for " + std::to_string( num_vars ) + " variables" );
  }
  for ( uint32_t d = 0u; d < num_digits; ++d )
  {
    const char c = hex[num_digits - 1u - d];
    unsigned nibble;
    if ( c >= '0' && c <= '9' )
    {
      nibble = static_cast<unsigned>( c - '0' );
    }
    else if ( c >= 'a' && c <= 'f' )
    {
      nibble = static_cast<unsigned>( c - 'a' ) + 10u;
    }
    else if ( c >= 'A' && c <= 'F' )
    {
      nibble = static_cast<unsigned>( c - 'A' ) + 10u;
    }
    else
    {
      throw input_error( std::string( "invalid hex digit '" ) + c + "'" );
    }
    for ( unsigned b = 0u; b < 4u; ++b )
    {
      const uint32_t row = 4u * d + b;
      if ( row < rows && ( ( nibble >> b ) & 1u ) )
      {
        tt.set_bit( row );
      }
    }
  }
  return tt;
}

truth_table parse_truth_table( std::string_view text )
{
  if ( text.substr( 0u, 3u ) != "tt:" )
  {
    throw input_error( "truth table '" + std::string( text ) + "' must start with 'tt:'" );
  }
  size_t pos = 3u;
  const unsigned n = parse_uint( text, pos, "variable count" );
  if ( n < 1u || n > truth_table::max_vars )
  {
    throw input_error( "variable count " + std::to_string( n ) + " out of range 1.." + std::to_string( truth_table::max_vars ) );
  }
  if ( pos >= text.size() || text[pos] != ':' )
  {
    throw input_error( "truth table '" + std::string( text ) + "' is missing the ':<hex>' part" );
  }
  ++pos;
  return table_from_hex( n, text.substr( pos ) );
}

bool eval( const truth_table& tt, const std::vector<bool>& point )
{
  if ( point.size() != tt.num_vars() )
  {
    throw input_error( "point has " + std::to_string( point.size() ) + " bits but the table has " + std::to_string( tt.num_vars() ) + " variables" );
  }
  uint32_t row = 0u;
  for ( size_t i = 0u; i < point.size(); ++i )
  {
    if ( point[i] )
    {
      row |= 1u << i;
    }
  }
  return tt.bit( row );
}

truth_table cofactor( const truth_table& tt, const partial_assignment& p )
{
  const unsigned n = tt.num_vars();
  if ( p.mask() & ~var_set::full( n ).mask() )
  {
    throw input_error( "assignment binds a variable beyond x" + std::to_string( n ) );
  }
  const uint32_t free_mask = var_set::full( n ).mask() & ~p.mask();
  const unsigned n_free = static_cast<unsigned>( __builtin_popcount( free_mask ) );
  truth_table out( n_free );
  for ( uint32_t sub = 0u; sub < out.num_rows(); ++sub )
  {
    const uint32_t row = p.bits() | scatter_bits( sub, free_mask );
    out.set_bit( sub, tt.bit( row ) );
  }
  return out;
}

var_set relevant_vars( const truth_table& tt )
{
  var_set out;
  for ( unsigned i = 1u; i <= tt.num_vars(); ++i )
  {
    const uint32_t step = 1u << ( i - 1 );
    for ( uint32_t row = 0u; row < tt.num_rows(); ++row )
    {
      if ( ( row & step ) )
      {
        continue;
      }
      if ( tt.bit( row ) != tt.bit( row | step ) )
      {
        out.add( i );
        break;
      }
    }
  }
  return out;
}

bool is_constant_subcube( const truth_table& tt, const partial_assignment& p )
{
  return cofactor( tt, p ).is_constant();
}

} // namespace roc
