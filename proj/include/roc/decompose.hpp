#pragma once

#include <optional>
#include <vector>

#include "truth_table.hpp"

namespace roc
{

/*! \brief Witness that two functions are equal up to input permutation, input negations and output negation.
 *
 * Encodes f(x_1, ..., x_n) = g^s(x_{perm[1]}^{s_1}, ..., x_{perm[n]}^{s_n}) where
 * z^1 = z and z^0 = !z.  Polarity true keeps a value, false negates it.
 */
struct similarity_witness
{
  std::vector<unsigned> perm;   /* perm[j] = variable index feeding g's argument j+1, 1-based */
  std::vector<bool> input_pol;  /* s_1 .. s_n */
  bool output_pol = true;       /* s */
};

/*! \brief Applies a witness to g; similar(f, g) returns a witness w with apply_witness(g, w) == f. */
truth_table apply_witness( const truth_table& g, const similarity_witness& w );

/*! \brief Searches all n! * 2^n * 2 candidates for a similarity witness.
 *
 * Equal tables short-circuit to the identity witness.
 */
std::optional<similarity_witness> similar( const truth_table& f, const truth_table& g );

/*! \brief Decides whether s is a bound set of tt, i.e. tt = g(h(x_s), x_rest) for some h.
 *
 * Collects the restrictions of tt to s over all assignments to the complement;
 * s is bound iff every restriction is one of {0, 1, h, !h} for a single
 * non-constant h.  Returns the restriction at the smallest complement
 * assignment that yields a non-constant function, so the returned h is
 * deterministic.  Requires 1 < |s| < n.
 */
std::optional<truth_table> is_bound_set( const truth_table& tt, var_set s );

/*! \brief Outer function g with tt = g(h(x_s), x_rest); g's first variable is the inner output. */
truth_table bound_set_outer( const truth_table& tt, var_set s, const truth_table& h );

/*! \brief Recomposes g(h(x_s), x_rest) back into an n-variable table. */
truth_table compose_bound( const truth_table& g, const truth_table& h, var_set s, unsigned n );

/*! \brief True iff no subset s with 1 < |s| < n is a bound set.
 *
 * Defined for functions of n >= 3 variables that depend on all of them;
 * anything else is an input error.
 */
bool is_prime( const truth_table& tt );

} // namespace roc
