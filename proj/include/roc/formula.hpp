#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "decompose.hpp"
#include "truth_table.hpp"

namespace roc
{

enum class gate_op : uint8_t
{
  and_,
  or_,
  xor_
};

struct formula_node
{
  enum class node_kind : uint8_t
  {
    leaf,
    gate,
    prime
  };

  node_kind kind{ node_kind::leaf };
  unsigned var = 0u;      /* leaf: 1-based variable index */
  bool negated = false;   /* leaf literal sign; on internal nodes only before canonicalization */
  gate_op op{ gate_op::and_ };
  truth_table label;      /* prime nodes only */
  std::vector<uint32_t> children;
};

/*! \brief Rooted tree of a read-once formula.
 *
 * In canonical form every variable occurs in at most one leaf, internal nodes
 * are either and/or/xor gates of arity at least 2 or prime-labeled nodes, no
 * gate has a child with the same gate symbol, and negations occur only on leaf
 * literals (prime labels absorb output negation).  Trees under construction
 * may carry negation flags on internal nodes; canonicalize() removes them.
 */
class read_once_tree
{
public:
  uint32_t add_leaf( unsigned var, bool negated = false );
  uint32_t add_gate( gate_op op, std::vector<uint32_t> children, bool negated = false );
  uint32_t add_prime( truth_table label, std::vector<uint32_t> children, bool negated = false );

  void set_root( uint32_t id ) { root_ = id; }
  uint32_t root() const { return root_; }

  const formula_node& node( uint32_t id ) const { return nodes_.at( id ); }
  uint32_t num_nodes() const { return static_cast<uint32_t>( nodes_.size() ); }

  void negate_node( uint32_t id ) { nodes_.at( id ).negated = !nodes_.at( id ).negated; }

  unsigned arity_bound() const { return arity_bound_; }
  void set_arity_bound( unsigned l ) { arity_bound_ = l; }

  /*! \brief All variables occurring in leaves. */
  var_set variables() const;

  /*! \brief Variables occurring in the subtree rooted at \p id. */
  var_set variables_below( uint32_t id ) const;

private:
  std::vector<formula_node> nodes_;
  uint32_t root_ = 0u;
  unsigned arity_bound_ = 0u; /* 0 = unspecified */
};

/*! \brief Parses the formula grammar
 *
 *   expr := ["~"] (lit | gate) ; lit := "x" int ;
 *   gate := op "(" expr ("," expr)+ ")" ; op := "and" | "or" | "xor" | "p:" hex
 *
 * where hex serializes the prime label over the children in argument order.
 * Whitespace is insignificant.  The result is canonicalized.  With l > 0,
 * prime labels of arity exceeding l are rejected.
 */
read_once_tree parse_formula( std::string_view text, unsigned l = 0u );

/*! \brief Prints a formula; parse_formula(to_string(t)) reproduces t. */
std::string to_string( const read_once_tree& tree );

/*! \brief Rewrites a raw tree into canonical form.
 *
 * Negations on and/or nodes are eliminated by De Morgan, a negation on a xor
 * node moves into its first child, a negation on a prime node complements its
 * label, and adjacent gates with identical symbols are flattened.  The
 * resulting tree computes the same function.
 */
read_once_tree canonicalize( const read_once_tree& tree );

/*! \brief Truth table over the tree's distinct variables in ascending index order. */
truth_table to_truth_table( const read_once_tree& tree );

/*! \brief Function computed by the subtree at \p id, over its own variables in ascending order. */
truth_table node_function( const read_once_tree& tree, uint32_t id );

/*! \brief Structural violations, if any; empty iff the tree is canonical and fits the basis bound l. */
std::vector<std::string> validate( const read_once_tree& tree, unsigned l );

/*! \brief Least common ancestor of the leaves of the given variables. */
uint32_t lca( const read_once_tree& tree, var_set vars );

/*! \brief True iff at every prime node the number of child subtrees meeting u is 0, 1, or the node's arity. */
bool is_conservative( const read_once_tree& tree, var_set u );

/*! \brief Seeded generator of raw trees on exactly n variables (negation flags may sit anywhere). */
read_once_tree random_raw_tree( unsigned n, unsigned l, uint64_t seed );

/*! \brief Seeded generator of canonical trees on exactly n variables, all relevant. */
read_once_tree random_tree( unsigned n, unsigned l, uint64_t seed );

} // namespace roc
