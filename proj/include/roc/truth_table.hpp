#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace roc
{

/*! \brief Set of 1-based variable indices, stored as a bit mask. */
class var_set
{
public:
  var_set() = default;
  explicit var_set( uint32_t mask ) : mask_( mask ) {}
  var_set( std::initializer_list<unsigned> vars )
  {
    for ( auto v : vars )
    {
      add( v );
    }
  }

  /*! \brief The set {1, ..., n}. */
  static var_set full( unsigned n ) { return var_set( n == 0 ? 0u : ( ( 1u << n ) - 1u ) ); }

  bool contains( unsigned var ) const { return var >= 1 && ( ( mask_ >> ( var - 1 ) ) & 1u ); }
  unsigned size() const { return static_cast<unsigned>( __builtin_popcount( mask_ ) ); }
  bool empty() const { return mask_ == 0u; }
  uint32_t mask() const { return mask_; }

  var_set& add( unsigned var )
  {
    mask_ |= 1u << ( var - 1 );
    return *this;
  }
  var_set& remove( unsigned var )
  {
    mask_ &= ~( 1u << ( var - 1 ) );
    return *this;
  }

  bool subset_of( var_set other ) const { return ( mask_ & ~other.mask_ ) == 0u; }

  /*! \brief Member indices in ascending order. */
  std::vector<unsigned> to_vector() const;

  friend bool operator==( var_set a, var_set b ) { return a.mask_ == b.mask_; }
  friend bool operator!=( var_set a, var_set b ) { return a.mask_ != b.mask_; }
  friend bool operator<( var_set a, var_set b ) { return a.mask_ < b.mask_; }

private:
  uint32_t mask_ = 0u;
};

/*! \brief Renders a set as "1,2,4". */
std::string to_string( var_set s );

/*! \brief Parses "1,2,4" into a set. */
var_set parse_var_set( std::string_view text );

/*! \brief Assignment of constants to a subset of the variables.
 *
 * Bound variables are given by \c mask() (bit i-1 for variable i); their values
 * by the corresponding bits of \c bits().  All remaining variables are free.
 */
class partial_assignment
{
public:
  partial_assignment() = default;
  partial_assignment( uint32_t mask, uint32_t bits );

  bool bound( unsigned var ) const { return ( mask_ >> ( var - 1 ) ) & 1u; }
  bool value( unsigned var ) const;

  /*! \brief Binds a variable; binding one twice is an error. */
  partial_assignment& bind( unsigned var, bool val );

  unsigned size() const { return static_cast<unsigned>( __builtin_popcount( mask_ ) ); }
  uint32_t mask() const { return mask_; }
  uint32_t bits() const { return bits_; }
  bool empty() const { return mask_ == 0u; }

  var_set bound_vars() const { return var_set( mask_ ); }
  var_set free_vars( unsigned n ) const { return var_set( var_set::full( n ).mask() & ~mask_ ); }

  /*! \brief Union of two assignments with disjoint domains. */
  partial_assignment merged_with( const partial_assignment& other ) const;

  friend bool operator==( const partial_assignment& a, const partial_assignment& b )
  {
    return a.mask_ == b.mask_ && a.bits_ == b.bits_;
  }
  friend bool operator!=( const partial_assignment& a, const partial_assignment& b ) { return !( a == b ); }

private:
  uint32_t mask_ = 0u;
  uint32_t bits_ = 0u;
};

/*! \brief Renders an assignment as "3=0,4=1" with ascending indices. */
std::string to_string( const partial_assignment& p );

/*! \brief Parses "3=0,4=1"; the empty string yields the empty assignment. */
partial_assignment parse_partial_assignment( std::string_view text );

/*! \brief Distributes the low bits of \p value onto the set positions of \p positions, ascending. */
uint32_t scatter_bits( uint32_t value, uint32_t positions );

/*! \brief Collects the bits of \p word at the set positions of \p positions into the low bits, ascending. */
uint32_t gather_bits( uint32_t word, uint32_t positions );

/*! \brief Complete value table of a Boolean function of up to 20 variables.
 *
 * Row indices encode inputs little-endian: variable x_i supplies bit i-1 of
 * the row index, so row 0 is the all-zeros input.  Values are packed 64 rows
 * per word with unused high bits kept at zero.
 */
class truth_table
{
public:
  static constexpr unsigned max_vars = 20u;

  /*! \brief Zero-variable constant 0. */
  truth_table() : words_( 1u, 0u ) {}

  /*! \brief All-zeros table on \p num_vars variables. */
  explicit truth_table( unsigned num_vars );

  static truth_table constant( unsigned num_vars, bool value );

  /*! \brief Table of the literal x_var (or its complement) on \p num_vars variables. */
  static truth_table nth_var( unsigned num_vars, unsigned var, bool complement = false );

  unsigned num_vars() const { return num_vars_; }
  uint32_t num_rows() const { return 1u << num_vars_; }

  bool bit( uint32_t row ) const { return ( words_[row >> 6u] >> ( row & 63u ) ) & 1u; }
  void set_bit( uint32_t row, bool value = true );

  bool is_constant() const;

  truth_table operator~() const;
  truth_table& operator&=( const truth_table& other );
  truth_table& operator|=( const truth_table& other );
  truth_table& operator^=( const truth_table& other );

  friend truth_table operator&( truth_table a, const truth_table& b ) { return a &= b; }
  friend truth_table operator|( truth_table a, const truth_table& b ) { return a |= b; }
  friend truth_table operator^( truth_table a, const truth_table& b ) { return a ^= b; }

  friend bool operator==( const truth_table& a, const truth_table& b )
  {
    return a.num_vars_ == b.num_vars_ && a.words_ == b.words_;
  }
  friend bool operator!=( const truth_table& a, const truth_table& b ) { return !( a == b ); }

  /*! \brief Orders tables by variable count, then by table value as an integer (row 0 least significant). */
  friend bool operator<( const truth_table& a, const truth_table& b );

private:
  unsigned num_vars_ = 0u;
  std::vector<uint64_t> words_;

  void check_compatible( const truth_table& other ) const;
};

/*! \brief Hex digits of the table value, most significant digit first, ceil(2^n / 4) digits. */
std::string to_hex( const truth_table& tt );

/*! \brief Serializes as "tt:<n>:<hex>", e.g. OR2 is "tt:2:e". */
std::string to_string( const truth_table& tt );

/*! \brief Parses the "tt:<n>:<hex>" form; the hex part must have exactly ceil(2^n / 4) digits. */
truth_table parse_truth_table( std::string_view text );

/*! \brief Builds an n-variable table from exactly ceil(2^n / 4) hex digits. */
truth_table table_from_hex( unsigned num_vars, std::string_view hex );

/*! \brief Value at an input point given as one bit per variable, x_1 first. */
bool eval( const truth_table& tt, const std::vector<bool>& point );

/*! \brief Projection induced by substituting the assignment's constants.
 *
 * The result ranges over the free variables re-indexed in ascending original
 * order; it has n - |bound| variables.
 */
truth_table cofactor( const truth_table& tt, const partial_assignment& p );

/*! \brief Variables whose flip changes the value on some input. */
var_set relevant_vars( const truth_table& tt );

/*! \brief True iff the projection under \p p takes a single value. */
bool is_constant_subcube( const truth_table& tt, const partial_assignment& p );

} // namespace roc
