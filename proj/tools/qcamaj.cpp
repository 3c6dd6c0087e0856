/* qcamaj: majority logic toolkit for quantum-dot cellular automata
 * Copyright (C) 2026  qcamaj contributors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */
/*!
  \file qcamaj.cpp
  \brief Command-line front end

  Every command builds one JSON report; `--format records` prints it as is
  and `--format text` renders the same object as tables, so both modes carry
  identical data.

  Exit codes: 0 success or equivalent, 1 not equivalent (or nothing found
  within the synthesis budget), 2 usage or parse error, 3 simulation failure.
*/

#include <qcamaj/qcamaj.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_simulation = 3;

/* a usage problem found after CLI11 accepted the arguments */
struct usage_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/* parse failure in a user-supplied string; rendered with a caret */
struct located_error : std::runtime_error
{
  located_error( std::string const& what, std::string text, std::size_t position )
      : std::runtime_error( what ), text( std::move( text ) ), position( position )
  {
  }
  std::string text;
  std::size_t position;
};

std::string shell_quote( std::string const& arg )
{
  bool plain = !arg.empty();
  for ( char c : arg )
  {
    if ( !std::isalnum( static_cast<unsigned char>( c ) ) && std::string( "-_.,/=:+" ).find( c ) == std::string::npos )
    {
      plain = false;
    }
  }
  if ( plain )
  {
    return arg;
  }
  std::string quoted = "'";
  for ( char c : arg )
  {
    quoted += c == '\'' ? std::string( "'\\''" ) : std::string( 1u, c );
  }
  return quoted + "'";
}

std::string command_echo( int argc, char** argv )
{
  std::string echo = "qcamaj";
  for ( int i = 1; i < argc; ++i )
  {
    echo += ' ' + shell_quote( argv[i] );
  }
  return echo;
}

std::vector<std::string> parse_order( std::string const& text )
{
  std::vector<std::string> names;
  std::stringstream ss( text );
  std::string name;
  while ( std::getline( ss, name, ',' ) )
  {
    auto const first = name.find_first_not_of( " \t" );
    auto const last = name.find_last_not_of( " \t" );
    name = first == std::string::npos ? std::string{} : name.substr( first, last - first + 1u );
    bool valid = !name.empty() && ( std::isalpha( static_cast<unsigned char>( name[0] ) ) || name[0] == '_' );
    for ( char c : name )
    {
      valid = valid && ( std::isalnum( static_cast<unsigned char>( c ) ) || c == '_' );
    }
    if ( !valid )
    {
      throw usage_error( "--order: '" + name + "' is not a variable name" );
    }
    if ( std::find( names.begin(), names.end(), name ) != names.end() )
    {
      throw usage_error( "--order: variable '" + name + "' listed twice" );
    }
    names.push_back( name );
  }
  if ( names.empty() || names.size() > qcamaj::max_num_vars )
  {
    throw usage_error( "--order needs between 1 and " + std::to_string( qcamaj::max_num_vars ) + " names" );
  }
  return names;
}

template<typename Fn>
auto located( std::string const& text, Fn&& fn )
{
  try
  {
    return fn();
  }
  catch ( qcamaj::parse_error const& e )
  {
    throw located_error( e.what(), text, e.position() );
  }
}

json cost_json( qcamaj::cost_report const& c )
{
  return {{"levels", c.levels},
          {"inverters", c.inverter_count},
          {"maj3", c.maj3_count},
          {"maj5", c.maj5_count},
          {"majority", c.majority_count()},
          {"gates", c.gate_count}};
}

json minterms_json( std::set<uint32_t> const& m )
{
  return json( std::vector<uint32_t>( m.begin(), m.end() ) );
}

std::set<uint32_t> minterms_from( json const& j )
{
  auto const v = j.get<std::vector<uint32_t>>();
  return {v.begin(), v.end()};
}

std::string sum_text( json const& j )
{
  return qcamaj::to_sum_notation( minterms_from( j ) );
}

std::string cost_text( json const& c )
{
  std::ostringstream os;
  os << "levels " << c["levels"] << ", inverters " << c["inverters"] << ", maj3 " << c["maj3"] << ", maj5 "
     << c["maj5"] << ", gates " << c["gates"];
  return os.str();
}

std::string yes_no( json const& b )
{
  return b.get<bool>() ? "yes" : "no";
}

json verdict_json( qcamaj::verify_report const& r )
{
  return {{"verdict", r.equivalent ? "equivalent" : "not equivalent"},
          {"equivalent", r.equivalent},
          {"expected", minterms_json( r.expected_minterms )},
          {"computed", minterms_json( r.computed_minterms )},
          {"differing", minterms_json( r.differing_minterms )}};
}

/* options shared by all commands */
struct global_options
{
  std::string format{"text"};
  std::string order;
  std::vector<std::string> names() const
  {
    return order.empty() ? qcamaj::default_variable_names() : parse_order( order );
  }
};

json base_report( std::string const& command, std::string const& echo )
{
  return {{"tool", "qcamaj"}, {"version", qcamaj::version}, {"command", command}, {"echo", echo}};
}

/* verify */

struct verify_options
{
  std::string expression;
  std::string minterms;
};

int run_verify( verify_options const& o, global_options const& g, json& report )
{
  auto const names = g.names();
  auto const net = located( o.expression, [&] { return qcamaj::parse_expr( o.expression, names ); } );
  auto const goal = located( o.minterms, [&] {
    return qcamaj::parse_minterm_set( o.minterms, static_cast<uint32_t>( names.size() ) );
  } );
  auto const r = qcamaj::verify( net, goal, names );

  report["inputs"] = {{"expression", o.expression}, {"minterms", o.minterms}, {"order", names}};
  report["variable_order"] = r.variable_order_note;
  report["results"] = verdict_json( r );
  report["results"]["cost"] = cost_json( qcamaj::cost( net ) );
  return r.equivalent ? exit_ok : exit_mismatch;
}

void print_verify( std::ostream& os, json const& r )
{
  os << "expression   " << r["inputs"]["expression"].get<std::string>() << '\n';
  os << "expected     " << sum_text( r["results"]["expected"] ) << '\n';
  os << "computed     " << sum_text( r["results"]["computed"] ) << '\n';
  os << "differing    " << sum_text( r["results"]["differing"] ) << '\n';
  os << "cost         " << cost_text( r["results"]["cost"] ) << '\n';
  os << "verdict      " << r["results"]["verdict"].get<std::string>() << '\n';
}

/* synth and atlas */

struct budget_options
{
  uint32_t max_gates{qcamaj::search_budget{}.max_gates};
  uint32_t max_levels{qcamaj::search_budget{}.max_levels};
  bool no_maj5{false};

  qcamaj::search_budget budget() const
  {
    qcamaj::search_budget b{max_gates, max_levels, !no_maj5};
    b.validate();
    return b;
  }
};

void add_budget_flags( CLI::App* cmd, budget_options& b )
{
  cmd->add_option( "--max-gates", b.max_gates, "Largest number of majority gates" )->capture_default_str();
  cmd->add_option( "--max-levels", b.max_levels, "Largest number of majority levels" )->capture_default_str();
  cmd->add_flag( "--no-maj5", b.no_maj5, "Use 3-input majority gates only" );
}

json budget_json( qcamaj::search_budget const& b )
{
  return {{"max_gates", b.max_gates}, {"max_levels", b.max_levels}, {"allow_maj5", b.allow_maj5}};
}

struct synth_options
{
  std::string minterms;
  budget_options budget;
  std::string network_out;
};

int run_synth( synth_options const& o, global_options const& g, json& report )
{
  auto const names = g.names();
  if ( names.size() > 3u )
  {
    throw usage_error( "synthesis supports at most 3 variables" );
  }
  auto const budget = o.budget.budget();
  auto const goal = located( o.minterms, [&] {
    return qcamaj::parse_minterm_set( o.minterms, static_cast<uint32_t>( names.size() ) );
  } );

  report["inputs"] = {{"minterms", o.minterms}, {"order", names}, {"budget", budget_json( budget )}};
  report["variable_order"] = qcamaj::variable_order_note( names );

  auto const net = qcamaj::synthesize( goal, budget );
  if ( !net )
  {
    report["results"] = {{"found", false}, {"function", minterms_json( qcamaj::minterms_of( goal ) )}};
    return exit_mismatch;
  }
  auto const check = qcamaj::verify( *net, goal, names );
  report["results"] = {{"found", true},
                       {"function", minterms_json( qcamaj::minterms_of( goal ) )},
                       {"expression", qcamaj::to_expression( *net, names )},
                       {"cost", cost_json( qcamaj::cost( *net ) )},
                       {"verified", check.equivalent},
                       {"network", qcamaj::to_text( *net, names )}};
  if ( !o.network_out.empty() )
  {
    std::ofstream out( o.network_out );
    if ( !out )
    {
      throw usage_error( "cannot write '" + o.network_out + "'" );
    }
    qcamaj::write_network( out, *net, names );
  }
  return check.equivalent ? exit_ok : exit_mismatch;
}

void print_synth( std::ostream& os, json const& r )
{
  auto const& b = r["inputs"]["budget"];
  os << "function     " << sum_text( r["results"]["function"] ) << '\n';
  os << "budget       max gates " << b["max_gates"] << ", max levels " << b["max_levels"] << ", maj5 "
     << ( b["allow_maj5"].get<bool>() ? "on" : "off" ) << '\n';
  if ( !r["results"]["found"].get<bool>() )
  {
    os << "result       not found within budget\n";
    return;
  }
  os << "expression   " << r["results"]["expression"].get<std::string>() << '\n';
  os << "cost         " << cost_text( r["results"]["cost"] ) << '\n';
  os << "verified     " << yes_no( r["results"]["verified"] ) << '\n';
  os << "network\n" << r["results"]["network"].get<std::string>();
}

struct atlas_options
{
  budget_options budget;
};

int run_atlas( atlas_options const& o, global_options const& g, json& report )
{
  auto const names = g.names();
  if ( names.size() != 3u )
  {
    throw usage_error( "the atlas covers 3-variable functions; --order must list 3 names" );
  }
  auto const budget = o.budget.budget();
  report["inputs"] = {{"order", names}, {"budget", budget_json( budget )}};
  report["variable_order"] = qcamaj::variable_order_note( names );

  qcamaj::synthesis_stats stats;
  auto const atlas = qcamaj::synthesize_all_3var( budget, &stats );

  json functions = json::array();
  std::map<uint32_t, uint32_t> histogram;
  uint32_t found = 0u, verified = 0u;
  for ( auto const& e : atlas )
  {
    json entry = {{"truth_table", e.function.to_uint64()}, {"minterms", minterms_json( qcamaj::minterms_of( e.function ) )}};
    if ( e.implementation )
    {
      auto const c = qcamaj::cost( *e.implementation );
      auto const ok = qcamaj::verify( *e.implementation, e.function, names ).equivalent;
      entry["expression"] = qcamaj::to_expression( *e.implementation, names );
      entry["cost"] = cost_json( c );
      entry["verified"] = ok;
      ++histogram[c.gate_count];
      ++found;
      verified += ok ? 1u : 0u;
    }
    else
    {
      entry["expression"] = nullptr;
    }
    functions.push_back( entry );
  }
  json hist = json::object();
  for ( auto const& [gates, count] : histogram )
  {
    hist[std::to_string( gates )] = count;
  }
  report["results"] = {{"functions", functions},
                       {"found", found},
                       {"verified", verified},
                       {"gate_histogram", hist},
                       {"states_per_depth", stats.states_per_depth}};
  return found == verified ? exit_ok : exit_mismatch;
}

void print_atlas( std::ostream& os, json const& r )
{
  os << "tt    gates levels inv maj3 maj5  function                 expression\n";
  for ( auto const& f : r["results"]["functions"] )
  {
    std::ostringstream tt;
    tt << "0x" << std::hex << std::setw( 2 ) << std::setfill( '0' ) << f["truth_table"].get<uint32_t>();
    os << std::left << std::setw( 6 ) << tt.str();
    if ( f["expression"].is_null() )
    {
      os << "    -      -   -    -    -  " << std::setw( 25 ) << sum_text( f["minterms"] ) << "(not found)\n";
      continue;
    }
    auto const& c = f["cost"];
    os << std::right << std::setw( 5 ) << c["gates"].get<uint32_t>() << std::setw( 7 ) << c["levels"].get<uint32_t>()
       << std::setw( 4 ) << c["inverters"].get<uint32_t>() << std::setw( 5 ) << c["maj3"].get<uint32_t>()
       << std::setw( 5 ) << c["maj5"].get<uint32_t>() << "  " << std::left << std::setw( 25 )
       << sum_text( f["minterms"] ) << f["expression"].get<std::string>()
       << ( f["verified"].get<bool>() ? "" : "  (FAILS VERIFICATION)" ) << '\n';
  }
  os << "found " << r["results"]["found"] << " of 256, verified " << r["results"]["verified"] << '\n';
  os << "gate-count histogram";
  for ( auto const& [gates, count] : r["results"]["gate_histogram"].items() )
  {
    os << "  " << gates << ":" << count;
  }
  os << '\n';
}

/* audit-tables */

int run_audit( global_options const& g, json& report )
{
  auto const names = g.names();
  if ( names.size() != 3u )
  {
    throw usage_error( "the example table is over 3 variables; --order must list 3 names" );
  }
  report["inputs"] = {{"order", names}};
  report["variable_order"] = qcamaj::variable_order_note( names );

  json rows = json::array();
  for ( auto const& row : qcamaj::audit_tables( names ) )
  {
    auto const side = []( qcamaj::expression_audit const& a ) {
      auto j = verdict_json( a.verdict );
      j["expression"] = a.expression;
      j["cost"] = cost_json( a.cost );
      return j;
    };
    rows.push_back( {{"minterms", minterms_json( row.minterms )},
                     {"previous", side( row.previous )},
                     {"proposed", side( row.proposed )}} );
  }
  report["results"] = {{"rows", rows}};
  return exit_ok;
}

void print_audit( std::ostream& os, json const& r )
{
  for ( auto const& row : r["results"]["rows"] )
  {
    os << sum_text( row["minterms"] ) << '\n';
    for ( auto const* label : {"previous", "proposed"} )
    {
      auto const& s = row[label];
      os << "  " << std::left << std::setw( 9 ) << label << s["expression"].get<std::string>() << '\n';
      os << "           " << cost_text( s["cost"] ) << '\n';
      os << "           " << s["verdict"].get<std::string>();
      if ( !s["equivalent"].get<bool>() )
      {
        os << " (computes " << sum_text( s["computed"] ) << ", differs on " << sum_text( s["differing"] ) << ")";
      }
      os << '\n';
    }
  }
}

/* adders */

int run_adders( json& report )
{
  report["inputs"] = {{"designs", "built-in"}};
  report["variable_order"] = qcamaj::variable_order_note( {"A", "B", "Cin"} );

  bool all_ok = true;
  json rows = json::array();
  for ( auto const& row : qcamaj::compare_adders() )
  {
    all_ok = all_ok && row.sum_equivalent && row.carry_equivalent && row.arithmetic_ok;
    rows.push_back( {{"name", row.name},
                     {"origin", row.origin},
                     {"clocking", row.clocking},
                     {"cost", cost_json( row.cost )},
                     {"sum_equivalent", row.sum_equivalent},
                     {"carry_equivalent", row.carry_equivalent},
                     {"arithmetic_ok", row.arithmetic_ok}} );
  }
  report["results"] = {{"rows", rows}};
  return all_ok ? exit_ok : exit_mismatch;
}

void print_adders( std::ostream& os, json const& r )
{
  os << std::left << std::setw( 20 ) << "design" << std::right << std::setw( 9 ) << "majority" << std::setw( 10 )
     << "inverters" << std::setw( 6 ) << "maj3" << std::setw( 6 ) << "maj5" << std::setw( 7 ) << "levels"
     << std::setw( 10 ) << "clocking" << std::setw( 6 ) << "sum" << std::setw( 7 ) << "carry" << std::setw( 7 )
     << "2c+s" << "  origin\n";
  for ( auto const& row : r["results"]["rows"] )
  {
    auto const& c = row["cost"];
    os << std::left << std::setw( 20 ) << row["name"].get<std::string>() << std::right << std::setw( 9 )
       << c["majority"].get<uint32_t>() << std::setw( 10 ) << c["inverters"].get<uint32_t>() << std::setw( 6 )
       << c["maj3"].get<uint32_t>() << std::setw( 6 ) << c["maj5"].get<uint32_t>() << std::setw( 7 )
       << c["levels"].get<uint32_t>() << std::setw( 10 ) << row["clocking"].get<std::string>() << std::setw( 6 )
       << ( row["sum_equivalent"].get<bool>() ? "ok" : "FAIL" ) << std::setw( 7 )
       << ( row["carry_equivalent"].get<bool>() ? "ok" : "FAIL" ) << std::setw( 7 )
       << ( row["arithmetic_ok"].get<bool>() ? "ok" : "FAIL" ) << "  " << row["origin"].get<std::string>() << '\n';
  }
}

/* sim */

struct sim_options
{
  std::string gate;
  std::string inputs;
  uint32_t length{5u};
  double tolerance{qcamaj::relax_params{}.tolerance};
  uint32_t max_iterations{qcamaj::relax_params{}.max_iterations};
  double threshold{0.5};
  double gain{qcamaj::coupling_model{}.gain};
  std::string trace_out;
  std::string grid_out;
};

int run_sim( sim_options const& o, json& report )
{
  static std::map<std::string, std::size_t> const arity{{"wire", 1u}, {"inv", 1u}, {"maj3", 3u}, {"maj5", 5u}};
  if ( o.inputs.size() != arity.at( o.gate ) ||
       o.inputs.find_first_not_of( "01" ) != std::string::npos )
  {
    throw usage_error( "gate '" + o.gate + "' expects " + std::to_string( arity.at( o.gate ) ) +
                       " input bit(s) written as 0/1, got '" + o.inputs + "'" );
  }
  if ( !( o.threshold >= 0.0 && o.threshold < 1.0 ) )
  {
    throw usage_error( "--threshold must lie in [0, 1)" );
  }
  std::vector<bool> bits;
  for ( char c : o.inputs )
  {
    bits.push_back( c == '1' );
  }
  auto const p = [&]( std::size_t i ) { return qcamaj::to_polarization( bits[i] ); };

  qcamaj::coupling_model model;
  model.gain = o.gain;
  auto grid = [&] {
    if ( o.gate == "wire" )
    {
      return qcamaj::build_wire( o.length, p( 0u ), model );
    }
    if ( o.gate == "inv" )
    {
      return qcamaj::build_inverter( p( 0u ), model );
    }
    if ( o.gate == "maj3" )
    {
      return qcamaj::build_maj3( p( 0u ), p( 1u ), p( 2u ), model );
    }
    return qcamaj::build_maj5( {p( 0u ), p( 1u ), p( 2u ), p( 3u ), p( 4u )}, model );
  }();
  bool const expected = o.gate == "wire" ? bits[0] : o.gate == "inv" ? !bits[0] : qcamaj::majority_of( bits );

  report["inputs"] = {{"gate", o.gate},
                      {"inputs", o.inputs},
                      {"tolerance", o.tolerance},
                      {"max_iterations", o.max_iterations},
                      {"threshold", o.threshold},
                      {"model", {{"neighbor", model.neighbor}, {"diagonal", model.diagonal}, {"gain", model.gain}}}};
  if ( o.gate == "wire" )
  {
    report["inputs"]["length"] = o.length;
  }

  json results = {{"cell_type", qcamaj::to_string( grid.type() )}, {"expected", expected ? 1 : 0}};
  auto const cells_json = [&] {
    json cells = json::array();
    for ( auto const& c : grid.cells() )
    {
      cells.push_back( {{"x", c.position.x},
                        {"y", c.position.y},
                        {"z", c.position.z},
                        {"role", qcamaj::to_string( c.role )},
                        {"polarization", c.polarization}} );
    }
    return cells;
  };

  int status = exit_ok;
  std::optional<qcamaj::relax_result> relaxed;
  try
  {
    relaxed = qcamaj::relax( grid, {o.tolerance, o.max_iterations} );
    results["converged"] = true;
    results["sweeps"] = relaxed->sweeps;
    results["residual"] = relaxed->residual;
  }
  catch ( qcamaj::convergence_error const& e )
  {
    results["converged"] = false;
    results["sweeps"] = e.sweeps();
    results["residual"] = e.residual();
    results["error"] = e.what();
    status = exit_simulation;
  }
  results["cells"] = cells_json();
  results["output_polarization"] = grid.output_polarization();
  if ( status == exit_ok )
  {
    try
    {
      auto const value = qcamaj::read_logic( grid, o.threshold );
      results["readout"] = value ? 1 : 0;
      results["agrees"] = value == expected;
    }
    catch ( qcamaj::undecided_error const& e )
    {
      results["readout"] = nullptr;
      results["error"] = e.what();
      status = exit_simulation;
    }
  }
  report["results"] = results;

  if ( !o.trace_out.empty() && relaxed )
  {
    std::ofstream out( o.trace_out );
    if ( !out )
    {
      throw usage_error( "cannot write '" + o.trace_out + "'" );
    }
    qcamaj::write_trace( out, *relaxed );
  }
  if ( !o.grid_out.empty() )
  {
    std::ofstream out( o.grid_out );
    if ( !out )
    {
      throw usage_error( "cannot write '" + o.grid_out + "'" );
    }
    qcamaj::write_grid( out, grid );
  }
  return status;
}

void print_sim( std::ostream& os, json const& r )
{
  auto const& in = r["inputs"];
  auto const& res = r["results"];
  os << "gate         " << in["gate"].get<std::string>() << " (" << res["cell_type"].get<std::string>() << " cells)";
  if ( in.contains( "length" ) )
  {
    os << ", length " << in["length"];
  }
  os << '\n';
  os << "inputs       " << in["inputs"].get<std::string>() << '\n';
  os << "model        neighbor " << in["model"]["neighbor"] << ", diagonal " << in["model"]["diagonal"] << ", gain "
     << in["model"]["gain"] << '\n';
  os << "relaxation   " << ( res["converged"].get<bool>() ? "converged" : "did not converge" ) << " after "
     << res["sweeps"] << " sweep(s), residual " << res["residual"].get<double>() << '\n';
  os << "cells\n";
  for ( auto const& c : res["cells"] )
  {
    std::ostringstream pos;
    pos << "(" << c["x"] << "," << c["y"] << "," << c["z"] << ")";
    os << "  " << std::left << std::setw( 12 ) << pos.str() << std::setw( 8 ) << c["role"].get<std::string>()
       << std::right << std::fixed << std::setprecision( 6 ) << std::setw( 10 ) << c["polarization"].get<double>()
       << '\n';
  }
  os.unsetf( std::ios::fixed );
  os << "output       " << std::setprecision( 6 ) << res["output_polarization"].get<double>() << '\n';
  if ( res.contains( "readout" ) )
  {
    if ( res["readout"].is_null() )
    {
      os << "readout      undecided (threshold " << in["threshold"] << ")\n";
    }
    else
    {
      os << "readout      " << res["readout"] << '\n';
    }
  }
  os << "expected     " << res["expected"] << " (gate-level evaluation)\n";
}

void print_text( std::ostream& os, json const& report )
{
  os << "qcamaj " << report["version"].get<std::string>() << '\n';
  os << "command      " << report["echo"].get<std::string>() << '\n';
  if ( report.contains( "variable_order" ) )
  {
    os << report["variable_order"].get<std::string>() << '\n';
  }
  os << '\n';
  auto const& cmd = report["command"].get_ref<std::string const&>();
  if ( cmd == "verify" )
  {
    print_verify( os, report );
  }
  else if ( cmd == "synth" )
  {
    print_synth( os, report );
  }
  else if ( cmd == "atlas" )
  {
    print_atlas( os, report );
  }
  else if ( cmd == "audit-tables" )
  {
    print_audit( os, report );
  }
  else if ( cmd == "adders" )
  {
    print_adders( os, report );
  }
  else if ( cmd == "sim" )
  {
    print_sim( os, report );
  }
}

void print_diagnostic( located_error const& e )
{
  std::cerr << "qcamaj: error: " << e.what() << '\n';
  std::cerr << "  " << e.text << '\n';
  std::cerr << "  " << std::string( std::min( e.position, e.text.size() ), ' ' ) << "^\n";
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{"qcamaj: majority logic synthesis, verification and QCA cell simulation"};
  app.set_version_flag( "--version", std::string( qcamaj::version ) );
  app.require_subcommand( 1 );
  app.fallthrough();

  global_options global;
  app.add_option( "--format", global.format, "Output format" )
      ->check( CLI::IsMember( {"text", "records"} ) )
      ->capture_default_str();
  app.add_option( "--order", global.order,
                  "Comma-separated variable names, most significant minterm bit first (default A,B,C)" );

  verify_options verify_opts;
  auto* verify_cmd = app.add_subcommand( "verify", "Check an expression against a minterm set" );
  verify_cmd->add_option( "expression", verify_opts.expression, "Majority expression, e.g. M5(0,0,A,B,C)" )->required();
  verify_cmd->add_option( "minterms", verify_opts.minterms, "Minterm set, e.g. sum(7)" )->required();

  synth_options synth_opts;
  auto* synth_cmd = app.add_subcommand( "synth", "Find a minimum majority network for a minterm set" );
  synth_cmd->add_option( "minterms", synth_opts.minterms, "Minterm set, e.g. sum(3,4,5,6,7)" )->required();
  add_budget_flags( synth_cmd, synth_opts.budget );
  synth_cmd->add_option( "--network-out", synth_opts.network_out, "Write the network document to a file" );

  atlas_options atlas_opts;
  auto* atlas_cmd = app.add_subcommand( "atlas", "Synthesize all 256 three-variable functions" );
  add_budget_flags( atlas_cmd, atlas_opts.budget );

  auto* audit_cmd = app.add_subcommand( "audit-tables", "Verify and cost the built-in three-input example expressions" );
  auto* adders_cmd = app.add_subcommand( "adders", "Compare the built-in full adder designs" );

  sim_options sim_opts;
  auto* sim_cmd = app.add_subcommand( "sim", "Relax a cell layout and read its output" );
  sim_cmd->add_option( "gate", sim_opts.gate, "Layout" )->required()->check( CLI::IsMember( {"wire", "inv", "maj3", "maj5"} ) );
  sim_cmd->add_option( "inputs", sim_opts.inputs, "Driver bits, e.g. 110" )->required();
  sim_cmd->add_option( "--length", sim_opts.length, "Wire length in cells" )->capture_default_str()->check( CLI::Range( 2u, 100000u ) );
  sim_cmd->add_option( "--tol", sim_opts.tolerance, "Convergence tolerance" )->capture_default_str()->check( CLI::PositiveNumber );
  sim_cmd->add_option( "--max-iter", sim_opts.max_iterations, "Sweep limit" )->capture_default_str()->check( CLI::Range( 1u, 100000000u ) );
  sim_cmd->add_option( "--threshold", sim_opts.threshold, "Readout threshold" )->capture_default_str();
  sim_cmd->add_option( "--gain", sim_opts.gain, "Cell response gain" )->capture_default_str()->check( CLI::PositiveNumber );
  sim_cmd->add_option( "--trace", sim_opts.trace_out, "Write per-sweep residuals to a file" );
  sim_cmd->add_option( "--grid-out", sim_opts.grid_out, "Write the relaxed grid to a file" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    return app.exit( e ) == 0 ? exit_ok : exit_usage;
  }

  auto const echo = command_echo( argc, argv );
  auto const name = app.get_subcommands().front()->get_name();
  auto report = base_report( name, echo );
  int status = exit_ok;
  try
  {
    if ( *verify_cmd )
    {
      status = run_verify( verify_opts, global, report );
    }
    else if ( *synth_cmd )
    {
      status = run_synth( synth_opts, global, report );
    }
    else if ( *atlas_cmd )
    {
      status = run_atlas( atlas_opts, global, report );
    }
    else if ( *audit_cmd )
    {
      status = run_audit( global, report );
    }
    else if ( *adders_cmd )
    {
      status = run_adders( report );
    }
    else if ( *sim_cmd )
    {
      status = run_sim( sim_opts, report );
    }
  }
  catch ( located_error const& e )
  {
    print_diagnostic( e );
    return exit_usage;
  }
  catch ( usage_error const& e )
  {
    std::cerr << "qcamaj: error: " << e.what() << '\n';
    return exit_usage;
  }
  catch ( std::logic_error const& e )
  {
    /* arity, capacity, range and domain errors from the library */
    std::cerr << "qcamaj: error: " << e.what() << '\n';
    return exit_usage;
  }

  report["exit_code"] = status;
  if ( global.format == "records" )
  {
    std::cout << report.dump( 2 ) << '\n';
  }
  else
  {
    print_text( std::cout, report );
  }
  if ( status == exit_mismatch )
  {
    std::cerr << "qcamaj: result does not match the specification\n";
  }
  return status;
}
