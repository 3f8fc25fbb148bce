#pragma once

#include <optional>

#include "formula.hpp"
#include "truth_table.hpp"

namespace roc
{

/*! \brief Reconstructs the canonical read-once tree of a truth table, if one exists.
 *
 * Recursively peels the finest and/or/xor decomposition over disjoint
 * supports; otherwise partitions the variables into maximal proper bound sets
 * and checks that the outer function is prime of arity at most l.  Returns
 * nothing when the function is not read-once over the basis of all l-ary
 * functions.  Tables with irrelevant variables are factored through their
 * projection onto the relevant variables; constants have no tree.
 */
std::optional<read_once_tree> factor( const truth_table& tt, unsigned l );

/*! \brief Structural equivalence up to negations of node labels.
 *
 * True iff both trees compute the same function and for every internal node
 * of one tree the other has a node over the same leaf set computing the same
 * or the complementary function.
 */
bool trees_equivalent( const read_once_tree& a, const read_once_tree& b );

} // namespace roc
