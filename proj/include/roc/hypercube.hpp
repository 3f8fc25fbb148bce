#pragma once

#include <optional>
#include <string>
#include <vector>

#include "truth_table.hpp"

namespace roc
{

/*! \brief Subcube on which a function depends on all free variables.
 *
 * A relevance hypercube for a set of variables is identified with the partial
 * assignment fixing exactly the complement; the induced projection depends on
 * every free variable.
 */
struct hypercube
{
  var_set free;
  partial_assignment fix;

  unsigned dim() const { return free.size(); }

  friend bool operator==( const hypercube& a, const hypercube& b )
  {
    return a.free == b.free && a.fix == b.fix;
  }
};

/*! \brief Renders as "hc:{free=1,2; fix=3=0}". */
std::string to_string( const hypercube& h );

/*! \brief All relevance hypercubes for w, in ascending order of the packed complement assignment. */
std::vector<hypercube> find_hypercubes( const truth_table& tt, var_set w );

/*! \brief First element of find_hypercubes order, if any. */
std::optional<hypercube> find_one_hypercube( const truth_table& tt, var_set w );

/*! \brief Grows a hypercube to dimension q by freeing one variable at a time.
 *
 * Each step searches all (freed variable, re-fixing of the remainder) pairs.
 * Existence is guaranteed for every valid input, so failure to expand raises
 * a logic error.
 */
hypercube expand_hypercube( const truth_table& tt, const hypercube& h, unsigned q );

/*! \brief The projection of tt onto the hypercube, a dim(h)-variable table depending on all its variables. */
truth_table restriction_on( const truth_table& tt, const hypercube& h );

struct stability_violation
{
  var_set w;      /* superset of u whose hypercube lacks a sub-hypercube for u */
  hypercube cube; /* the offending relevance hypercube for w */
};

/*! \brief All witnesses against stability of u, in ascending (w, fixing) order.
 *
 * u is stable iff for every w with u <= w <= relevant vars and every relevance
 * hypercube H for w there is a relevance hypercube for u inside H.  For
 * w = relevant vars this requires that a hypercube for u exists at all.
 */
std::vector<stability_violation> stability_violations( const truth_table& tt, var_set u );

/*! \brief First violation in enumeration order, if any. */
std::optional<stability_violation> find_stability_violation( const truth_table& tt, var_set u );

bool is_stable( const truth_table& tt, var_set u );

} // namespace roc
