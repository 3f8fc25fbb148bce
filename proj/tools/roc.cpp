#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "roc/factor.hpp"
#include "roc/formula.hpp"
#include "roc/hypercube.hpp"
#include "roc/testgen.hpp"
#include "roc/verify.hpp"

using ordered_json = nlohmann::ordered_json;

namespace
{

struct target_options
{
  std::string formula;
  std::string table;
};

roc::truth_table resolve_target( const target_options& target, unsigned l )
{
  if ( !target.formula.empty() )
  {
    return roc::to_truth_table( roc::parse_formula( target.formula, l ) );
  }
  if ( !target.table.empty() )
  {
    return roc::parse_truth_table( target.table );
  }
  throw roc::input_error( "provide the target via --formula or --tt" );
}

void add_target_flags( CLI::App* cmd, target_options& target )
{
  auto* formula = cmd->add_option( "--formula", target.formula, "read-once formula, e.g. or(x1,and(x2,~x3))" );
  auto* table = cmd->add_option( "--tt", target.table, "truth table, e.g. tt:3:e4" );
  formula->excludes( table );
  table->excludes( formula );
}

std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw roc::input_error( "cannot read '" + path + "'" );
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

roc::alternative_catalog obtain_catalog( const std::string& cache, unsigned n, unsigned l, bool constants )
{
  if ( cache.empty() )
  {
    return roc::enumerate_readonce( n, l, constants );
  }
  return roc::load_or_build_catalog( cache, n, l, constants );
}

ordered_json hypercube_json( const roc::hypercube& h )
{
  ordered_json fix = ordered_json::object();
  for ( auto v : h.fix.bound_vars().to_vector() )
  {
    fix[std::to_string( v )] = h.fix.value( v ) ? 1 : 0;
  }
  return ordered_json{ { "free", h.free.to_vector() }, { "fix", fix } };
}

ordered_json vectors_json( const std::vector<roc::labeled_vector>& vectors, unsigned n )
{
  ordered_json out = ordered_json::array();
  for ( const auto& v : vectors )
  {
    out.push_back( ordered_json{ { "input", roc::format_input( v.input, n ) }, { "label", v.label ? 1 : 0 } } );
  }
  return out;
}

/* ------------------------------------------------------------- commands */

int run_gen_test( const target_options& target, unsigned l, bool all_cubes, bool no_dedup, bool as_json )
{
  const auto tt = resolve_target( target, l );
  const roc::testgen_options options{ all_cubes };
  const auto raw = roc::hypercube_set_raw( tt, l, options );
  const auto m = roc::hypercube_set( tt, l, options );
  if ( as_json )
  {
    ordered_json doc{ { "n", m.n }, { "l", l }, { "dedup", !no_dedup } };
    doc["count"] = no_dedup ? raw.size() : m.vectors.size();
    doc["vectors"] = vectors_json( no_dedup ? raw : m.vectors, m.n );
    std::cout << doc.dump( 2 ) << "\n";
    return 0;
  }
  if ( no_dedup )
  {
    std::cout << "n=" << m.n << "\n";
    for ( const auto& v : raw )
    {
      std::cout << roc::format_input( v.input, m.n ) << ' ' << ( v.label ? '1' : '0' ) << "\n";
    }
    return 0;
  }
  std::cout << roc::to_string( m );
  return 0;
}

int run_reltable( const target_options& target, unsigned l, bool as_json )
{
  const auto tt = resolve_target( target, l );
  const auto table = roc::build_relevance_table( tt, l );
  if ( as_json )
  {
    ordered_json rows = ordered_json::array();
    for ( const auto& row : table.rows )
    {
      ordered_json r{ { "w", row.w.to_vector() }, { "star", row.is_star() } };
      if ( !row.is_star() )
      {
        r["hypercube"] = hypercube_json( *row.cube );
        r["vectors"] = vectors_json( row.vectors, table.n );
      }
      rows.push_back( std::move( r ) );
    }
    std::cout << ordered_json{ { "n", table.n }, { "l", table.l }, { "rows", rows } }.dump( 2 ) << "\n";
    return 0;
  }
  std::cout << roc::to_string( table );
  return 0;
}

int run_verify( const target_options& target, unsigned l, const std::string& test_path, bool constants,
                const std::string& cache, bool as_json )
{
  const auto tt = resolve_target( target, l );
  const auto m = roc::parse_test_set( read_file( test_path ) );
  const auto catalog = obtain_catalog( cache, tt.num_vars(), l, constants );
  const auto counterexample = roc::checking_test_counterexample( tt, m, catalog );
  if ( as_json )
  {
    ordered_json doc{ { "checking_test", !counterexample.has_value() } };
    if ( counterexample )
    {
      doc["counterexample"] = roc::to_string( *counterexample );
    }
    std::cout << doc.dump( 2 ) << "\n";
  }
  else if ( counterexample )
  {
    std::cout << "CHECKING TEST: no\ncounterexample: " << roc::to_string( *counterexample ) << "\n";
  }
  else
  {
    std::cout << "CHECKING TEST: yes\n";
  }
  return counterexample ? 1 : 0;
}

int run_factor( const target_options& target, unsigned l, bool as_json )
{
  const auto tt = resolve_target( target, l );
  const auto tree = roc::factor( tt, l );
  if ( as_json )
  {
    ordered_json doc{ { "read_once", tree.has_value() } };
    if ( tree )
    {
      doc["formula"] = roc::to_string( *tree );
    }
    std::cout << doc.dump( 2 ) << "\n";
  }
  else if ( tree )
  {
    std::cout << roc::to_string( *tree ) << "\n";
  }
  else
  {
    std::cout << "NOT READ-ONCE\n";
  }
  return tree ? 0 : 1;
}

int run_hypercube_find( const target_options& target, const std::string& vars, bool as_json )
{
  const auto tt = resolve_target( target, 0u );
  const auto w = roc::parse_var_set( vars );
  const auto cubes = roc::find_hypercubes( tt, w );
  if ( as_json )
  {
    ordered_json list = ordered_json::array();
    for ( const auto& h : cubes )
    {
      list.push_back( hypercube_json( h ) );
    }
    std::cout << ordered_json{ { "count", cubes.size() }, { "hypercubes", list } }.dump( 2 ) << "\n";
    return 0;
  }
  for ( const auto& h : cubes )
  {
    std::cout << roc::to_string( h ) << "\n";
  }
  return 0;
}

int run_hypercube_expand( const target_options& target, const std::string& vars, const std::string& fix,
                          unsigned q, bool as_json )
{
  const auto tt = resolve_target( target, 0u );
  roc::hypercube h;
  h.free = roc::parse_var_set( vars );
  h.fix = roc::parse_partial_assignment( fix );
  const auto expanded = roc::expand_hypercube( tt, h, q );
  if ( as_json )
  {
    std::cout << hypercube_json( expanded ).dump( 2 ) << "\n";
  }
  else
  {
    std::cout << roc::to_string( expanded ) << "\n";
  }
  return 0;
}

int run_hypercube_stable( const target_options& target, const std::string& vars, bool as_json )
{
  const auto tt = resolve_target( target, 0u );
  const auto u = roc::parse_var_set( vars );
  const auto violations = roc::stability_violations( tt, u );
  if ( as_json )
  {
    ordered_json list = ordered_json::array();
    for ( const auto& v : violations )
    {
      list.push_back( ordered_json{ { "w", v.w.to_vector() }, { "hypercube", hypercube_json( v.cube ) } } );
    }
    std::cout << ordered_json{ { "stable", violations.empty() }, { "violations", list } }.dump( 2 ) << "\n";
  }
  else if ( violations.empty() )
  {
    std::cout << "STABLE: yes\n";
  }
  else
  {
    std::cout << "STABLE: no\n";
    for ( const auto& v : violations )
    {
      std::cout << "violation: w=" << roc::to_string( v.w ) << " " << roc::to_string( v.cube ) << "\n";
    }
  }
  return violations.empty() ? 0 : 1;
}

int run_enumerate( unsigned n, unsigned l, bool constants, const std::string& cache, bool as_json )
{
  const auto catalog = obtain_catalog( cache, n, l, constants );
  if ( as_json )
  {
    ordered_json tables = ordered_json::array();
    for ( const auto& tt : catalog.tables )
    {
      tables.push_back( roc::to_string( tt ) );
    }
    ordered_json doc{ { "n", n }, { "l", l }, { "constants", constants }, { "count", catalog.tables.size() }, { "tables", tables } };
    std::cout << doc.dump( 2 ) << "\n";
    return 0;
  }
  std::cout << n << "," << l << "," << ( constants ? "constants" : "no-constants" ) << "\n";
  for ( const auto& tt : catalog.tables )
  {
    std::cout << roc::to_string( tt ) << "\n";
  }
  return 0;
}

int run_min_test( const target_options& target, unsigned l, bool constants, const std::string& cache,
                  bool as_json )
{
  const auto tt = resolve_target( target, l );
  const auto catalog = obtain_catalog( cache, tt.num_vars(), l, constants );
  const auto min_size = roc::min_test_size( tt, catalog );
  const auto set_size = roc::hypercube_set( tt, l ).vectors.size();
  const auto bound = roc::size_bound( tt.num_vars(), l );
  if ( as_json )
  {
    ordered_json doc{ { "min_size", min_size }, { "hypercube_set_size", set_size }, { "bound", bound } };
    std::cout << doc.dump( 2 ) << "\n";
    return 0;
  }
  std::cout << "min checking test size: " << min_size << "\n";
  std::cout << "hypercube set size: " << set_size << "\n";
  std::cout << "bound: " << bound << "\n";
  return 0;
}

int run_identify( const std::string& test_path, unsigned l, bool constants, const std::string& cache,
                  bool as_json )
{
  const auto m = roc::parse_test_set( read_file( test_path ) );
  const auto catalog = obtain_catalog( cache, m.n, l, constants );
  const auto tt = roc::identify_from_test( m, catalog );
  if ( as_json )
  {
    std::cout << ordered_json{ { "table", roc::to_string( tt ) } }.dump( 2 ) << "\n";
  }
  else
  {
    std::cout << roc::to_string( tt ) << "\n";
  }
  return 0;
}

int run_props( uint64_t seed, int budget, const std::string& suite, bool as_json )
{
  roc::suite_budget budgets;
  if ( budget >= 0 )
  {
    budgets.lemma2 = budgets.prop2 = budgets.prop3 = budgets.roundtrip = static_cast<unsigned>( budget );
  }
  const auto report = roc::run_property_suites( seed, budgets, suite );
  if ( as_json )
  {
    ordered_json suites = ordered_json::array();
    for ( const auto& s : report.suites )
    {
      suites.push_back( ordered_json{ { "name", s.name },
                                      { "requested", s.requested },
                                      { "failures", s.failures },
                                      { "failing_seeds", s.failing_seeds } } );
    }
    std::cout << ordered_json{ { "suites", suites }, { "passed", report.all_passed() } }.dump( 2 ) << "\n";
  }
  else
  {
    for ( const auto& s : report.suites )
    {
      if ( s.failures == 0u )
      {
        std::cout << "suite " << s.name << ": passed " << s.requested << "/" << s.requested << "\n";
      }
      else
      {
        std::cout << "suite " << s.name << ": FAILED " << s.failures << "/" << s.requested << " (seeds:";
        for ( auto fs : s.failing_seeds )
        {
          std::cout << " " << fs;
        }
        std::cout << ")\n";
      }
    }
  }
  return report.all_passed() ? 0 : 1;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "checking tests for read-once Boolean functions over the basis of all l-ary functions" };
  app.require_subcommand( 1 );

  target_options target;
  unsigned l = 0u;
  unsigned n = 0u;
  unsigned q = 0u;
  std::string test_path;
  std::string vars;
  std::string fix;
  std::string cache;
  std::string suite;
  uint64_t seed = 1u;
  int budget = -1;
  bool all_cubes = false;
  bool no_dedup = false;
  bool no_constants = false;
  bool as_json = false;

  auto* gen = app.add_subcommand( "gen-test", "construct the relevance hypercube set of a target" );
  add_target_flags( gen, target );
  gen->add_option( "--l", l, "hypercube dimension" )->required();
  gen->add_flag( "--all-cubes", all_cubes, "union every hypercube per subset" );
  gen->add_flag( "--no-dedup", no_dedup, "keep the raw vector multiset" );
  gen->add_flag( "--json", as_json );

  auto* rel = app.add_subcommand( "reltable", "print the relevance table of a target" );
  add_target_flags( rel, target );
  rel->add_option( "--l", l, "hypercube dimension" )->required();
  rel->add_flag( "--json", as_json );

  auto* ver = app.add_subcommand( "verify", "check a test set against all read-once alternatives" );
  add_target_flags( ver, target );
  ver->add_option( "--l", l, "basis arity bound" )->required();
  ver->add_option( "--test", test_path, "test-set file" )->required();
  ver->add_flag( "--no-constants", no_constants, "exclude constants from the alternatives" );
  ver->add_option( "--cache", cache, "catalog cache file" );
  ver->add_flag( "--json", as_json );

  auto* fac = app.add_subcommand( "factor", "reconstruct the read-once tree of a truth table" );
  add_target_flags( fac, target );
  fac->add_option( "--l", l, "basis arity bound" )->required();
  fac->add_flag( "--json", as_json );

  auto* hc = app.add_subcommand( "hypercube", "relevance hypercube queries" );
  hc->require_subcommand( 1 );
  auto* hc_find = hc->add_subcommand( "find", "list all relevance hypercubes for a variable set" );
  add_target_flags( hc_find, target );
  hc_find->add_option( "--vars", vars, "variable subset, e.g. 1,2" )->required();
  hc_find->add_flag( "--json", as_json );
  auto* hc_expand = hc->add_subcommand( "expand", "grow a hypercube to a target dimension" );
  add_target_flags( hc_expand, target );
  hc_expand->add_option( "--vars", vars, "free variables of the hypercube" )->required();
  hc_expand->add_option( "--fix", fix, "fixing of the remaining variables, e.g. 2=0,3=1" );
  hc_expand->add_option( "--q", q, "target dimension" )->required();
  hc_expand->add_flag( "--json", as_json );
  auto* hc_stable = hc->add_subcommand( "stable", "check stability of a variable set" );
  add_target_flags( hc_stable, target );
  hc_stable->add_option( "--vars", vars, "variable subset" )->required();
  hc_stable->add_flag( "--json", as_json );

  auto* enu = app.add_subcommand( "enumerate", "catalog of all read-once alternatives" );
  enu->add_option( "--n", n, "variable count" )->required();
  enu->add_option( "--l", l, "basis arity bound" )->required();
  enu->add_flag( "--no-constants", no_constants );
  enu->add_option( "--cache", cache, "catalog cache file" );
  enu->add_flag( "--json", as_json );

  auto* mt = app.add_subcommand( "min-test", "exact minimum checking test size (n <= 3)" );
  add_target_flags( mt, target );
  mt->add_option( "--l", l, "basis arity bound" )->required();
  mt->add_flag( "--no-constants", no_constants );
  mt->add_option( "--cache", cache, "catalog cache file" );
  mt->add_flag( "--json", as_json );

  auto* ide = app.add_subcommand( "identify", "the unique read-once function consistent with a test set" );
  ide->add_option( "--test", test_path, "test-set file" )->required();
  ide->add_option( "--l", l, "basis arity bound" )->required();
  ide->add_flag( "--no-constants", no_constants );
  ide->add_option( "--cache", cache, "catalog cache file" );
  ide->add_flag( "--json", as_json );

  auto* pr = app.add_subcommand( "props", "run the seeded property suites" );
  pr->add_option( "--seed", seed, "base seed" );
  pr->add_option( "--budget", budget, "instances per suite (overrides the defaults)" );
  pr->add_option( "--suite", suite, "run a single suite: lemma2, prop2, prop3 or roundtrip" );
  pr->add_flag( "--json", as_json );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& )
  {
    std::cout << app.help();
    return 0;
  }
  catch ( const CLI::ParseError& e )
  {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try
  {
    if ( gen->parsed() )
    {
      return run_gen_test( target, l, all_cubes, no_dedup, as_json );
    }
    if ( rel->parsed() )
    {
      return run_reltable( target, l, as_json );
    }
    if ( ver->parsed() )
    {
      return run_verify( target, l, test_path, !no_constants, cache, as_json );
    }
    if ( fac->parsed() )
    {
      return run_factor( target, l, as_json );
    }
    if ( hc->parsed() )
    {
      if ( hc_find->parsed() )
      {
        return run_hypercube_find( target, vars, as_json );
      }
      if ( hc_expand->parsed() )
      {
        return run_hypercube_expand( target, vars, fix, q, as_json );
      }
      return run_hypercube_stable( target, vars, as_json );
    }
    if ( enu->parsed() )
    {
      return run_enumerate( n, l, !no_constants, cache, as_json );
    }
    if ( mt->parsed() )
    {
      return run_min_test( target, l, !no_constants, cache, as_json );
    }
    if ( ide->parsed() )
    {
      return run_identify( test_path, l, !no_constants, cache, as_json );
    }
    return run_props( seed, budget, suite, as_json );
  }
  catch ( const roc::input_error& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
