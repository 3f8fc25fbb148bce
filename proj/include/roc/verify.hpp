#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "testgen.hpp"
#include "truth_table.hpp"

namespace roc
{

/*! \brief All truth tables on n named variables expressible by read-once formulas over B_l.
 *
 * Alternatives may have irrelevant variables: the catalog contains every
 * n-variable table whose projection onto its relevant variables is read-once
 * over the basis of all l-ary functions, plus the two constants when
 * include_constants is set.  Tables are deduplicated and sorted.
 */
struct alternative_catalog
{
  unsigned n = 0u;
  unsigned l = 0u;
  bool include_constants = true;
  std::vector<truth_table> tables;

  bool contains( const truth_table& tt ) const;
};

/*! \brief All prime functions of the given arity (3 or 4), sorted. */
const std::vector<truth_table>& prime_functions( unsigned arity );

/*! \brief Exhaustive catalog construction by recursive composition.
 *
 * Cost guard: n <= 5 for l = 2 and n <= 4 for l >= 3; exceeding it is an
 * input error, never a truncated result.
 */
alternative_catalog enumerate_readonce( unsigned n, unsigned l, bool include_constants = true );

/*! \brief First catalog member (in table order) other than f that agrees with every vector of m. */
std::optional<truth_table> checking_test_counterexample( const truth_table& f, const test_set& m,
                                                         const alternative_catalog& catalog );

/*! \brief True iff m distinguishes f from every other catalog member. */
bool is_checking_test( const truth_table& f, const test_set& m, const alternative_catalog& catalog );

/*! \brief Size of a smallest checking test for f, by exact search over all vector subsets (n <= 3). */
unsigned min_test_size( const truth_table& f, const alternative_catalog& catalog );

/*! \brief The unique catalog member consistent with every vector of m.
 *
 * Zero or several consistent members raise a uniqueness error.
 */
truth_table identify_from_test( const test_set& m, const alternative_catalog& catalog );

/*! \brief Catalog cache file: header "n,l,flags", then one tt: line per member. */
void save_catalog( const std::string& path, const alternative_catalog& catalog );

/*! \brief Loads a cached catalog; header mismatch or a malformed file yields nothing. */
std::optional<alternative_catalog> load_catalog( const std::string& path, unsigned n, unsigned l,
                                                 bool include_constants );

/*! \brief Loads from the cache when possible, otherwise enumerates and writes the cache. */
alternative_catalog load_or_build_catalog( const std::string& path, unsigned n, unsigned l,
                                           bool include_constants );

/*! \brief Instance budgets of the seeded property suites. */
struct suite_budget
{
  unsigned lemma2 = 500u;    /* conservative sets are stable */
  unsigned prop2 = 500u;     /* hypercube expansion always succeeds */
  unsigned prop3 = 200u;     /* hypercube restrictions similar to the node label */
  unsigned roundtrip = 1000u; /* factor inverts truth_table, trees match up to negation */
};

struct suite_outcome
{
  std::string name;
  unsigned requested = 0u;
  unsigned failures = 0u;
  std::vector<uint64_t> failing_seeds;
};

struct suite_report
{
  std::vector<suite_outcome> suites;

  bool all_passed() const;
};

/*! \brief Runs the seeded property suites; an empty filter runs all four. */
suite_report run_property_suites( uint64_t seed, const suite_budget& budget = {},
                                  std::string_view filter = {} );

} // namespace roc
