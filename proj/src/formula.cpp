#include "roc/formula.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

namespace roc
{

uint32_t read_once_tree::add_leaf( unsigned var, bool negated )
{
  if ( var < 1u || var > truth_table::max_vars )
  {
    throw input_error( "variable index " + std::to_string( var ) + " out of range" );
  }
  formula_node n;
  n.kind = formula_node::node_kind::leaf;
  n.var = var;
  n.negated = negated;
  nodes_.push_back( std::move( n ) );
  return num_nodes() - 1u;
}

uint32_t read_once_tree::add_gate( gate_op op, std::vector<uint32_t> children, bool negated )
{
  if ( children.size() < 2u )
  {
    throw input_error( "gates need at least 2 children" );
  }
  formula_node n;
  n.kind = formula_node::node_kind::gate;
  n.op = op;
  n.negated = negated;
  n.children = std::move( children );
  nodes_.push_back( std::move( n ) );
  return num_nodes() - 1u;
}

uint32_t read_once_tree::add_prime( truth_table label, std::vector<uint32_t> children, bool negated )
{
  if ( label.num_vars() != children.size() )
  {
    throw input_error( "prime label arity " + std::to_string( label.num_vars() ) + " does not match " + std::to_string( children.size() ) + " children" );
  }
  formula_node n;
  n.kind = formula_node::node_kind::prime;
  n.label = std::move( label );
  n.negated = negated;
  n.children = std::move( children );
  nodes_.push_back( std::move( n ) );
  return num_nodes() - 1u;
}

var_set read_once_tree::variables() const
{
  return variables_below( root_ );
}

var_set read_once_tree::variables_below( uint32_t id ) const
{
  const auto& n = node( id );
  if ( n.kind == formula_node::node_kind::leaf )
  {
    return var_set{}.add( n.var );
  }
  var_set out;
  for ( auto c : n.children )
  {
    out = var_set( out.mask() | variables_below( c ).mask() );
  }
  return out;
}

/* ------------------------------------------------------------------ parse */

namespace
{

struct parser
{
  std::string_view text;
  size_t pos = 0u;
  unsigned arity_bound; /* 0 = unlimited */
  read_once_tree tree;

  void skip_ws()
  {
    while ( pos < text.size() && std::isspace( static_cast<unsigned char>( text[pos] ) ) )
    {
      ++pos;
    }
  }

  [[noreturn]] void fail( const std::string& msg )
  {
    throw input_error( msg + " at position " + std::to_string( pos ) + " in formula" );
  }

  void expect( char c )
  {
    skip_ws();
    if ( pos >= text.size() || text[pos] != c )
    {
      fail( std::string( "expected '" ) + c + "'" );
    }
    ++pos;
  }

  std::string next_token()
  {
    std::string out;
    while ( pos < text.size() &&
            ( std::isalnum( static_cast<unsigned char>( text[pos] ) ) || text[pos] == ':' ) )
    {
      out += text[pos];
      ++pos;
    }
    if ( out.empty() )
    {
      fail( pos < text.size() ? std::string( "unexpected character '" ) + text[pos] + "'"
                              : std::string( "unexpected end of formula" ) );
    }
    return out;
  }

  uint32_t parse_expr()
  {
    skip_ws();
    bool neg = false;
    while ( pos < text.size() && text[pos] == '~' )
    {
      neg = !neg;
      ++pos;
      skip_ws();
    }
    const std::string token = next_token();
    if ( token == "and" || token == "or" || token == "xor" )
    {
      const gate_op op = token == "and" ? gate_op::and_ : token == "or" ? gate_op::or_ : gate_op::xor_;
      return tree.add_gate( op, parse_args(), neg );
    }
    if ( token.size() > 2u && token.substr( 0u, 2u ) == "p:" )
    {
      const std::string hex = token.substr( 2u );
      for ( char c : hex )
      {
        if ( !std::isxdigit( static_cast<unsigned char>( c ) ) )
        {
          fail( std::string( "invalid hex digit '" ) + c + "' in prime label" );
        }
      }
      auto children = parse_args();
      const unsigned m = static_cast<unsigned>( children.size() );
      if ( m < 3u )
      {
        fail( "prime labels need at least 3 arguments" );
      }
      if ( arity_bound > 0u && m > arity_bound )
      {
        fail( "prime label arity " + std::to_string( m ) + " exceeds the basis bound " + std::to_string( arity_bound ) );
      }
      truth_table label = table_from_hex( m, hex );
      if ( relevant_vars( label ) != var_set::full( m ) || !is_prime( label ) )
      {
        fail( "label '" + hex + "' is not a prime function" );
      }
      return tree.add_prime( std::move( label ), std::move( children ), neg );
    }
    if ( token[0] == 'x' && token.size() > 1u )
    {
      unsigned var = 0u;
      for ( size_t i = 1u; i < token.size(); ++i )
      {
        if ( !std::isdigit( static_cast<unsigned char>( token[i] ) ) || var > truth_table::max_vars )
        {
          fail( "bad variable '" + token + "'" );
        }
        var = var * 10u + static_cast<unsigned>( token[i] - '0' );
      }
      if ( var < 1u || var > truth_table::max_vars )
      {
        fail( "variable index in '" + token + "' out of range" );
      }
      return tree.add_leaf( var, neg );
    }
    fail( "unexpected token '" + token + "'" );
  }

  std::vector<uint32_t> parse_args()
  {
    expect( '(' );
    std::vector<uint32_t> children;
    children.push_back( parse_expr() );
    skip_ws();
    while ( pos < text.size() && text[pos] == ',' )
    {
      ++pos;
      children.push_back( parse_expr() );
      skip_ws();
    }
    expect( ')' );
    if ( children.size() < 2u )
    {
      fail( "gates need at least 2 arguments" );
    }
    return children;
  }
};

void check_read_once( const read_once_tree& tree )
{
  std::set<unsigned> seen;
  for ( uint32_t id = 0u; id < tree.num_nodes(); ++id )
  {
    const auto& n = tree.node( id );
    if ( n.kind == formula_node::node_kind::leaf && !seen.insert( n.var ).second )
    {
      throw input_error( "variable x" + std::to_string( n.var ) + " appears more than once" );
    }
  }
}

} // namespace

read_once_tree parse_formula( std::string_view text, unsigned l )
{
  parser p{ text, 0u, l, {} };
  const auto root = p.parse_expr();
  p.skip_ws();
  if ( p.pos != text.size() )
  {
    p.fail( std::string( "trailing input '" ) + text[p.pos] + "'" );
  }
  p.tree.set_root( root );
  p.tree.set_arity_bound( l );
  check_read_once( p.tree );
  return canonicalize( p.tree );
}

/* ------------------------------------------------------------------ print */

namespace
{

void print_rec( const read_once_tree& tree, uint32_t id, std::string& out )
{
  const auto& n = tree.node( id );
  if ( n.negated )
  {
    out += '~';
  }
  switch ( n.kind )
  {
  case formula_node::node_kind::leaf:
    out += 'x';
    out += std::to_string( n.var );
    return;
  case formula_node::node_kind::gate:
    out += n.op == gate_op::and_ ? "and" : n.op == gate_op::or_ ? "or" : "xor";
    break;
  case formula_node::node_kind::prime:
    out += "p:";
    out += to_hex( n.label );
    break;
  }
  out += '(';
  bool first = true;
  for ( auto c : n.children )
  {
    if ( !first )
    {
      out += ',';
    }
    first = false;
    print_rec( tree, c, out );
  }
  out += ')';
}

} // namespace

std::string to_string( const read_once_tree& tree )
{
  std::string out;
  print_rec( tree, tree.root(), out );
  return out;
}

/* --------------------------------------------------------- canonicalize */

namespace
{

uint32_t canon_rec( const read_once_tree& in, uint32_t id, bool neg, read_once_tree& out )
{
  const auto& n = in.node( id );
  const bool eff = n.negated != neg;
  switch ( n.kind )
  {
  case formula_node::node_kind::leaf:
    return out.add_leaf( n.var, eff );

  case formula_node::node_kind::prime:
  {
    std::vector<uint32_t> children;
    children.reserve( n.children.size() );
    for ( auto c : n.children )
    {
      children.push_back( canon_rec( in, c, false, out ) );
    }
    return out.add_prime( eff ? ~n.label : n.label, std::move( children ) );
  }

  case formula_node::node_kind::gate:
  {
    gate_op op = n.op;
    if ( eff && op == gate_op::and_ )
    {
      op = gate_op::or_;
    }
    else if ( eff && op == gate_op::or_ )
    {
      op = gate_op::and_;
    }
    std::vector<uint32_t> children;
    for ( size_t i = 0u; i < n.children.size(); ++i )
    {
      /* De Morgan negates every child, a negated xor only its first */
      const bool child_neg = eff && ( n.op != gate_op::xor_ || i == 0u );
      const auto cid = canon_rec( in, n.children[i], child_neg, out );
      if ( out.node( cid ).kind == formula_node::node_kind::gate && out.node( cid ).op == op )
      {
        /* flatten same-symbol children; they are already flat themselves */
        for ( auto gc : out.node( cid ).children )
        {
          children.push_back( gc );
        }
      }
      else
      {
        children.push_back( cid );
      }
    }
    return out.add_gate( op, std::move( children ) );
  }
  }
  throw std::logic_error( "unreachable" );
}

/* renumber nodes reachable from the root in depth-first preorder */
uint32_t compact_rec( const read_once_tree& in, uint32_t id, read_once_tree& out )
{
  const auto& n = in.node( id );
  if ( n.kind == formula_node::node_kind::leaf )
  {
    return out.add_leaf( n.var, n.negated );
  }
  std::vector<uint32_t> children;
  children.reserve( n.children.size() );
  for ( auto c : n.children )
  {
    children.push_back( compact_rec( in, c, out ) );
  }
  if ( n.kind == formula_node::node_kind::gate )
  {
    return out.add_gate( n.op, std::move( children ), n.negated );
  }
  return out.add_prime( n.label, std::move( children ), n.negated );
}

} // namespace

read_once_tree canonicalize( const read_once_tree& tree )
{
  check_read_once( tree );
  read_once_tree scratch;
  const auto root = canon_rec( tree, tree.root(), false, scratch );
  scratch.set_root( root );

  read_once_tree out;
  out.set_root( compact_rec( scratch, scratch.root(), out ) );
  out.set_arity_bound( tree.arity_bound() );
  return out;
}

/* ------------------------------------------------------------- evaluate */

namespace
{

bool eval_rec( const read_once_tree& tree, uint32_t id, uint32_t row, const std::vector<unsigned>& var_pos )
{
  const auto& n = tree.node( id );
  bool value = false;
  switch ( n.kind )
  {
  case formula_node::node_kind::leaf:
    value = ( row >> var_pos[n.var] ) & 1u;
    break;
  case formula_node::node_kind::gate:
    value = eval_rec( tree, n.children[0], row, var_pos );
    for ( size_t i = 1u; i < n.children.size(); ++i )
    {
      const bool c = eval_rec( tree, n.children[i], row, var_pos );
      value = n.op == gate_op::and_ ? ( value && c ) : n.op == gate_op::or_ ? ( value || c ) : ( value != c );
    }
    break;
  case formula_node::node_kind::prime:
  {
    uint32_t label_row = 0u;
    for ( size_t i = 0u; i < n.children.size(); ++i )
    {
      if ( eval_rec( tree, n.children[i], row, var_pos ) )
      {
        label_row |= 1u << i;
      }
    }
    value = n.label.bit( label_row );
    break;
  }
  }
  return value != n.negated;
}

truth_table subtree_table( const read_once_tree& tree, uint32_t id )
{
  const auto vars = tree.variables_below( id ).to_vector();
  std::vector<unsigned> var_pos( truth_table::max_vars + 1u, 0u );
  for ( size_t i = 0u; i < vars.size(); ++i )
  {
    var_pos[vars[i]] = static_cast<unsigned>( i );
  }
  truth_table out( static_cast<unsigned>( vars.size() ) );
  for ( uint32_t row = 0u; row < out.num_rows(); ++row )
  {
    out.set_bit( row, eval_rec( tree, id, row, var_pos ) );
  }
  return out;
}

} // namespace

truth_table to_truth_table( const read_once_tree& tree )
{
  return subtree_table( tree, tree.root() );
}

truth_table node_function( const read_once_tree& tree, uint32_t id )
{
  return subtree_table( tree, id );
}

/* ------------------------------------------------------------- validate */

std::vector<std::string> validate( const read_once_tree& tree, unsigned l )
{
  std::vector<std::string> out;

  std::set<unsigned> seen;
  for ( uint32_t id = 0u; id < tree.num_nodes(); ++id )
  {
    const auto& n = tree.node( id );
    switch ( n.kind )
    {
    case formula_node::node_kind::leaf:
      if ( !seen.insert( n.var ).second )
      {
        out.push_back( "variable x" + std::to_string( n.var ) + " appears more than once" );
      }
      break;

    case formula_node::node_kind::gate:
      if ( n.negated )
      {
        out.push_back( "gate node " + std::to_string( id ) + " carries a negation" );
      }
      if ( n.children.size() < 2u )
      {
        out.push_back( "gate node " + std::to_string( id ) + " has fewer than 2 children" );
      }
      for ( auto c : n.children )
      {
        const auto& child = tree.node( c );
        if ( child.kind == formula_node::node_kind::gate && child.op == n.op )
        {
          out.push_back( "adjacent nodes with identical symbol below node " + std::to_string( id ) );
        }
      }
      break;

    case formula_node::node_kind::prime:
      if ( n.negated )
      {
        out.push_back( "prime node " + std::to_string( id ) + " carries a negation" );
      }
      if ( n.label.num_vars() != n.children.size() )
      {
        out.push_back( "prime node " + std::to_string( id ) + " label arity mismatch" );
      }
      if ( n.children.size() < 3u )
      {
        out.push_back( "prime node " + std::to_string( id ) + " has arity below 3" );
      }
      else if ( n.label.num_vars() < 3u || relevant_vars( n.label ) != var_set::full( n.label.num_vars() ) || !is_prime( n.label ) )
      {
        out.push_back( "prime node " + std::to_string( id ) + " label is not prime" );
      }
      if ( l >= 2u && n.children.size() > l )
      {
        out.push_back( "prime node " + std::to_string( id ) + " arity " + std::to_string( n.children.size() ) + " exceeds the basis bound " + std::to_string( l ) );
      }
      break;
    }
  }
  return out;
}

/* ------------------------------------------------------- tree queries */

uint32_t lca( const read_once_tree& tree, var_set vars )
{
  if ( vars.empty() )
  {
    throw input_error( "lca of the empty set is undefined" );
  }
  if ( ( vars.mask() & ~tree.variables().mask() ) != 0u )
  {
    throw input_error( "variable missing from the tree" );
  }
  uint32_t current = tree.root();
  for ( ;; )
  {
    const auto& n = tree.node( current );
    if ( n.kind == formula_node::node_kind::leaf )
    {
      return current;
    }
    bool descended = false;
    for ( auto c : n.children )
    {
      if ( vars.subset_of( tree.variables_below( c ) ) )
      {
        current = c;
        descended = true;
        break;
      }
    }
    if ( !descended )
    {
      return current;
    }
  }
}

bool is_conservative( const read_once_tree& tree, var_set u )
{
  for ( uint32_t id = 0u; id < tree.num_nodes(); ++id )
  {
    const auto& n = tree.node( id );
    if ( n.kind != formula_node::node_kind::prime )
    {
      continue;
    }
    unsigned hit = 0u;
    for ( auto c : n.children )
    {
      if ( ( tree.variables_below( c ).mask() & u.mask() ) != 0u )
      {
        ++hit;
      }
    }
    if ( hit > 1u && hit < n.children.size() )
    {
      return false;
    }
  }
  return true;
}

/* ------------------------------------------------------------ generator */

namespace
{

struct tree_sampler
{
  std::mt19937_64 eng;
  unsigned l;

  uint64_t below( uint64_t bound ) { return eng() % bound; }
  bool coin() { return eng() & 1u; }

  /* Fisher-Yates; std::shuffle is implementation-defined, this is not */
  void shuffle( std::vector<unsigned>& v )
  {
    for ( size_t i = v.size(); i > 1u; --i )
    {
      std::swap( v[i - 1u], v[below( i )] );
    }
  }

  truth_table random_table( unsigned m )
  {
    truth_table tt( m );
    for ( uint32_t row = 0u; row < tt.num_rows(); ++row )
    {
      tt.set_bit( row, coin() );
    }
    return tt;
  }

  truth_table random_prime( unsigned m )
  {
    for ( ;; )
    {
      auto tt = random_table( m );
      if ( relevant_vars( tt ) == var_set::full( m ) && is_prime( tt ) )
      {
        return tt;
      }
    }
  }

  std::vector<std::vector<unsigned>> split( std::vector<unsigned> vars, unsigned k )
  {
    shuffle( vars );
    std::set<size_t> cuts;
    while ( cuts.size() < k - 1u )
    {
      cuts.insert( 1u + static_cast<size_t>( below( vars.size() - 1u ) ) );
    }
    std::vector<std::vector<unsigned>> blocks;
    size_t start = 0u;
    for ( auto cut : cuts )
    {
      blocks.emplace_back( vars.begin() + start, vars.begin() + cut );
      start = cut;
    }
    blocks.emplace_back( vars.begin() + start, vars.end() );
    return blocks;
  }

  uint32_t gen( read_once_tree& tree, std::vector<unsigned> vars, int banned_op )
  {
    if ( vars.size() == 1u )
    {
      return tree.add_leaf( vars[0], coin() );
    }

    const bool use_prime = l >= 3u && vars.size() >= 3u && below( 10u ) < 4u;
    if ( use_prime )
    {
      const unsigned max_arity = static_cast<unsigned>( std::min<size_t>( l, vars.size() ) );
      const unsigned m = max_arity > 3u ? 3u + static_cast<unsigned>( below( max_arity - 2u ) ) : 3u;
      auto label = random_prime( m );
      auto blocks = split( std::move( vars ), m );
      std::vector<uint32_t> children;
      children.reserve( m );
      for ( auto& b : blocks )
      {
        children.push_back( gen( tree, std::move( b ), -1 ) );
      }
      const bool neg = coin();
      return tree.add_prime( std::move( label ), std::move( children ), neg );
    }

    std::vector<int> ops;
    for ( int op = 0; op < 3; ++op )
    {
      if ( op != banned_op )
      {
        ops.push_back( op );
      }
    }
    const int op = ops[below( ops.size() )];
    const unsigned k = vars.size() > 2u ? 2u + static_cast<unsigned>( below( vars.size() - 1u ) ) : 2u;
    auto blocks = split( std::move( vars ), k );
    std::vector<uint32_t> children;
    children.reserve( k );
    for ( auto& b : blocks )
    {
      children.push_back( gen( tree, std::move( b ), op ) );
    }
    const bool neg = coin();
    return tree.add_gate( static_cast<gate_op>( op ), std::move( children ), neg );
  }
};

} // namespace

read_once_tree random_raw_tree( unsigned n, unsigned l, uint64_t seed )
{
  if ( n < 1u || n > truth_table::max_vars )
  {
    throw input_error( "variable count " + std::to_string( n ) + " out of range" );
  }
  if ( l < 2u )
  {
    throw input_error( "arity bound must be at least 2" );
  }
  tree_sampler sampler{ std::mt19937_64( seed ), l };
  std::vector<unsigned> vars( n );
  for ( unsigned i = 0u; i < n; ++i )
  {
    vars[i] = i + 1u;
  }
  read_once_tree tree;
  tree.set_root( sampler.gen( tree, std::move( vars ), -1 ) );
  tree.set_arity_bound( l );
  return tree;
}

read_once_tree random_tree( unsigned n, unsigned l, uint64_t seed )
{
  return canonicalize( random_raw_tree( n, l, seed ) );
}

} // namespace roc
