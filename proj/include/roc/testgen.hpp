#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypercube.hpp"
#include "truth_table.hpp"

namespace roc
{

/*! \brief Input vector (as a row index) together with the target's value on it. */
struct labeled_vector
{
  uint32_t input = 0u;
  bool label = false;

  friend bool operator==( const labeled_vector& a, const labeled_vector& b )
  {
    return a.input == b.input && a.label == b.label;
  }
  friend bool operator<( const labeled_vector& a, const labeled_vector& b )
  {
    return a.input < b.input;
  }
};

/*! \brief Deduplicated set of labeled vectors, sorted by input; a candidate checking test. */
struct test_set
{
  unsigned n = 0u;
  std::vector<labeled_vector> vectors;

  bool contains( uint32_t input ) const;
};

/*! \brief One row of a relevance table: an l-subset with a hypercube and its values, or a star. */
struct relevance_row
{
  var_set w;
  std::optional<hypercube> cube;        /* nullopt = star */
  std::vector<labeled_vector> vectors;  /* the 2^l labeled points of the cube */

  bool is_star() const { return !cube.has_value(); }
};

/*! \brief Relevance table: one row per l-subset of variables in lexicographic order. */
struct relevance_table
{
  unsigned n = 0u;
  unsigned l = 0u;
  std::vector<relevance_row> rows;
};

/*! \brief Lexicographically ordered l-subsets of {1..n} as variable sets. */
std::vector<var_set> subsets_lex( unsigned n, unsigned l );

/*! \brief Builds the relevance table of a function depending on all its variables.
 *
 * Each row holds the first hypercube in find_hypercubes order, or a star when
 * none exists.
 */
relevance_table build_relevance_table( const truth_table& tt, unsigned l );

struct testgen_options
{
  bool all_cubes = false; /* union every hypercube per subset instead of one */
};

/*! \brief The relevance hypercube set: union of the non-star rows' vectors, deduplicated. */
test_set hypercube_set( const truth_table& tt, unsigned l, const testgen_options& options = {} );

/*! \brief Same vectors before deduplication, in construction order (row by row). */
std::vector<labeled_vector> hypercube_set_raw( const truth_table& tt, unsigned l, const testgen_options& options = {} );

/*! \brief The length bound 2^l * C(n, l) on relevance hypercube sets. */
uint64_t size_bound( unsigned n, unsigned l );

/*! \brief Input bits as a 0/1 string, x1 leftmost. */
std::string format_input( uint32_t input, unsigned n );

/*! \brief Test-set file: header "n=<n>", then one "bits label" line per vector. */
std::string to_string( const test_set& m );

test_set parse_test_set( std::string_view text );

/*! \brief Relevance-table file: one "w=...<TAB>(hc:{...} bits:label ... | *)" line per row. */
std::string to_string( const relevance_table& table );

} // namespace roc
