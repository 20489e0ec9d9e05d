/* simopt: simulation-guided power optimization for LUT netlists
 * Copyright (C) 2026  The simopt authors
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
  \file simopt.cpp
  \brief Command-line front end: simulate, optimize, report, check

  Subcommands: `sim`, `opt`, `power`, `check`, `all`.  Exit codes:
  0 success, 1 file/parse error, 2 simulation error, 3 profile/netlist
  mismatch, 4 zero-baseline power, 5 equivalence mismatch, 64 usage or
  configuration error.
*/

#include <CLI11.hpp>
#include <fmt/format.h>

#include <simopt/simopt.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using namespace simopt;

namespace
{

struct cli_error
{
  int code;
  std::string message;
};

/*! \brief All knobs of one pipeline run; config file values are
 * overridden by explicit command-line flags. */
struct run_manifest
{
  std::vector<std::string> blif_files;
  std::string out;
  std::string out_dir = ".";
  std::string profile_path;
  std::string optimized_path;
  std::string against_path;
  std::string report_path;
  uint32_t cycles = 1024;
  uint64_t seed = 1;
  unsigned jobs = 1;
  bool verbose = false;
  bool strict = false;
  bool no_verify = false;
  std::vector<std::string> input_waves; /* name=spec overrides */
  power_config power;
  opt_config opt;

  void validate() const
  {
    if ( cycles < 2 )
    {
      throw cli_error{ 64, "cycles must be at least 2" };
    }
    /* outputs must not collide with each other or with any input */
    std::vector<std::string> inputs = blif_files;
    for ( auto const* p : { &profile_path, &optimized_path, &against_path } )
    {
      if ( !p->empty() )
      {
        inputs.push_back( *p );
      }
    }
    std::vector<std::string> outputs;
    for ( auto const* p : { &out, &report_path } )
    {
      if ( !p->empty() )
      {
        outputs.push_back( *p );
      }
    }
    for ( size_t i = 0; i < outputs.size(); ++i )
    {
      for ( size_t j = i + 1; j < outputs.size(); ++j )
      {
        if ( outputs[i] == outputs[j] )
        {
          throw cli_error{ 64, "output path '" + outputs[i] + "' is used twice" };
        }
      }
      for ( auto const& in : inputs )
      {
        if ( outputs[i] == in )
        {
          throw cli_error{ 64, "output path '" + outputs[i] + "' would overwrite an input" };
        }
      }
    }
  }
};

void apply_threshold_spec( opt_config& cfg, std::string const& spec )
{
  try
  {
    if ( spec == "median" )
    {
      cfg.mode = threshold_mode::median;
      return;
    }
    if ( spec.rfind( "percentile:", 0 ) == 0 )
    {
      cfg.mode = threshold_mode::percentile;
      cfg.percentile_q = std::stod( spec.substr( 11 ) );
      return;
    }
    if ( spec.rfind( "absolute:", 0 ) == 0 )
    {
      cfg.mode = threshold_mode::absolute;
      cfg.absolute_count = std::stoull( spec.substr( 9 ) );
      return;
    }
  }
  catch ( std::exception const& )
  {
  }
  throw cli_error{ 64, "unknown threshold spec '" + spec + "'" };
}

void apply_transforms_spec( opt_config& cfg, std::string const& spec )
{
  cfg.enable_shannon = false;
  cfg.enable_duplicate = false;
  if ( spec == "none" )
  {
    return;
  }
  if ( spec == "all" )
  {
    cfg.enable_shannon = cfg.enable_duplicate = true;
    return;
  }
  std::istringstream iss( spec );
  std::string item;
  while ( std::getline( iss, item, ',' ) )
  {
    if ( item == "shannon" || item == "shannon_split" )
    {
      cfg.enable_shannon = true;
    }
    else if ( item == "duplicate" || item == "driver_duplicate" )
    {
      cfg.enable_duplicate = true;
    }
    else
    {
      throw cli_error{ 64, "unknown transform '" + item + "'" };
    }
  }
}

void apply_area_budget_spec( opt_config& cfg, std::string const& spec )
{
  if ( spec == "unlimited" )
  {
    cfg.max_area_growth_pct.reset();
    return;
  }
  try
  {
    cfg.max_area_growth_pct = std::stod( spec );
  }
  catch ( std::exception const& )
  {
    throw cli_error{ 64, "malformed area growth budget '" + spec + "'" };
  }
}

void load_config_file( run_manifest& m, std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw cli_error{ 64, "cannot open config file '" + path + "'" };
  }
  std::string line;
  unsigned line_no = 0;
  while ( std::getline( in, line ) )
  {
    ++line_no;
    if ( auto const hash = line.find( '#' ); hash != std::string::npos )
    {
      line.erase( hash );
    }
    auto const trim = []( std::string s ) {
      auto const b = s.find_first_not_of( " \t\r" );
      auto const e = s.find_last_not_of( " \t\r" );
      return b == std::string::npos ? std::string{} : s.substr( b, e - b + 1 );
    };
    if ( trim( line ).empty() )
    {
      continue;
    }
    auto const eq = line.find( '=' );
    if ( eq == std::string::npos )
    {
      throw cli_error{ 64, fmt::format( "{}:{}: expected key=value", path, line_no ) };
    }
    auto const key = trim( line.substr( 0, eq ) );
    auto const value = trim( line.substr( eq + 1 ) );
    try
    {
      if ( key == "blif" )
      {
        m.blif_files.push_back( value );
      }
      else if ( key == "out" )
      {
        m.out = value;
      }
      else if ( key == "out_dir" )
      {
        m.out_dir = value;
      }
      else if ( key == "profile" )
      {
        m.profile_path = value;
      }
      else if ( key == "optimized" )
      {
        m.optimized_path = value;
      }
      else if ( key == "against" )
      {
        m.against_path = value;
      }
      else if ( key == "report" )
      {
        m.report_path = value;
      }
      else if ( key == "cycles" )
      {
        m.cycles = static_cast<uint32_t>( std::stoul( value ) );
      }
      else if ( key == "seed" )
      {
        m.seed = std::stoull( value );
      }
      else if ( key == "jobs" )
      {
        m.jobs = static_cast<unsigned>( std::stoul( value ) );
      }
      else if ( key == "verbose" )
      {
        m.verbose = value == "1" || value == "true";
      }
      else if ( key == "strict" )
      {
        m.strict = value == "1" || value == "true";
      }
      else if ( key == "no_verify" )
      {
        m.no_verify = value == "1" || value == "true";
      }
      else if ( key == "input_wave" )
      {
        m.input_waves.push_back( value );
      }
      else if ( key == "power.supply_voltage" )
      {
        m.power.supply_voltage = std::stod( value );
      }
      else if ( key == "power.clock_freq" )
      {
        m.power.clock_freq = std::stod( value );
      }
      else if ( key == "power.c_base" )
      {
        m.power.c_base = std::stod( value );
      }
      else if ( key == "power.c_per_fanout" )
      {
        m.power.c_per_fanout = std::stod( value );
      }
      else if ( key == "power.c_dup_overhead" )
      {
        m.power.c_dup_overhead = std::stod( value );
      }
      else if ( key == "power.fanout_exponent" )
      {
        m.power.fanout_exponent = std::stod( value );
      }
      else if ( key == "opt.threshold" )
      {
        apply_threshold_spec( m.opt, value );
      }
      else if ( key == "opt.transforms" )
      {
        apply_transforms_spec( m.opt, value );
      }
      else if ( key == "opt.max_area_growth_pct" )
      {
        apply_area_budget_spec( m.opt, value );
      }
      else if ( key == "opt.min_fanout" )
      {
        m.opt.min_fanout_for_duplication = static_cast<uint32_t>( std::stoul( value ) );
      }
      else
      {
        throw cli_error{ 64, fmt::format( "{}:{}: unknown key '{}'", path, line_no, key ) };
      }
    }
    catch ( std::invalid_argument const& )
    {
      throw cli_error{ 64, fmt::format( "{}:{}: malformed value for '{}'", path, line_no, key ) };
    }
  }
}

netlist load_netlist( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw cli_error{ 1, "cannot open '" + path + "'" };
  }
  try
  {
    return parse_blif( in );
  }
  catch ( parse_error const& e )
  {
    throw cli_error{ 1, path + ": " + e.what() };
  }
}

activity_profile load_profile( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw cli_error{ 1, "cannot open '" + path + "'" };
  }
  try
  {
    return read_profile( in );
  }
  catch ( parse_error const& e )
  {
    throw cli_error{ 1, path + ": " + e.what() };
  }
}

void write_file( std::string const& path, std::string const& content )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
  {
    throw cli_error{ 1, "cannot write '" + path + "'" };
  }
  out << content;
}

stimulus build_stimulus( netlist const& nl, run_manifest const& m )
{
  auto stim = generate_stimulus( nl, m.cycles, m.seed );
  for ( auto const& override_spec : m.input_waves )
  {
    auto const eq = override_spec.find( '=' );
    if ( eq == std::string::npos )
    {
      throw cli_error{ 64, "input wave override must be name=spec" };
    }
    auto const name = override_spec.substr( 0, eq );
    bool found = false;
    for ( size_t i = 0; i < stim.input_names.size(); ++i )
    {
      if ( stim.input_names[i] == name )
      {
        stim.waves[i] = parse_waveform_spec( override_spec.substr( eq + 1 ) );
        stim.tracks[i] = detail::realize_waveform( stim.waves[i], m.cycles, m.seed, i );
        found = true;
      }
    }
    if ( !found )
    {
      throw cli_error{ 64, "wave override names unknown input '" + name + "'" };
    }
  }
  return stim;
}

std::string stem_of( std::string const& path )
{
  return fs::path( path ).stem().string();
}

int cmd_sim( run_manifest const& m )
{
  if ( m.blif_files.size() != 1 )
  {
    throw cli_error{ 64, "sim expects exactly one --blif" };
  }
  auto const nl = load_netlist( m.blif_files[0] );
  try
  {
    auto const stim = build_stimulus( nl, m );
    auto const profile = simulate( nl, stim );
    auto const out = m.out.empty() ? stem_of( m.blif_files[0] ) + ".prof" : m.out;
    write_file( out, write_profile( profile ) );
    if ( m.verbose )
    {
      std::cerr << fmt::format( "simulated {} cycles over {} nets\n", profile.num_cycles,
                                profile.counters.size() );
    }
  }
  catch ( validation_error const& e )
  {
    throw cli_error{ 2, e.what() };
  }
  return 0;
}

equiv_result verify_equivalence( netlist const& before, netlist const& after, uint32_t cycles,
                                 uint64_t seed, std::string& mode )
{
  if ( before.is_combinational() && after.is_combinational() && before.inputs().size() <= 16 )
  {
    mode = "exhaustive";
    return exhaustive_equiv( before, after );
  }
  mode = "lockstep";
  auto const stim =
      generate_stimulus( before, std::max<uint32_t>( cycles, 10000 ), seed ^ 0x5eedULL );
  return lockstep_equiv( before, after, stim );
}

int cmd_opt( run_manifest const& m, std::ostream& status )
{
  if ( m.blif_files.size() != 1 )
  {
    throw cli_error{ 64, "opt expects exactly one --blif" };
  }
  if ( m.profile_path.empty() )
  {
    throw cli_error{ 64, "opt requires --profile" };
  }
  auto const out_path = m.out.empty() ? stem_of( m.blif_files[0] ) + ".opt.blif" : m.out;
  if ( fs::exists( out_path ) && fs::equivalent( fs::path( out_path ), fs::path( m.blif_files[0] ) ) )
  {
    throw cli_error{ 64, "refusing to overwrite the input netlist" };
  }
  auto const nl = load_netlist( m.blif_files[0] );
  auto const profile = load_profile( m.profile_path );

  /* staleness check: the digest the given (cycles, seed) would produce */
  auto const expected = generate_stimulus( nl, m.cycles, m.seed ).digest();
  if ( expected != profile.stimulus_digest )
  {
    if ( m.strict )
    {
      throw cli_error{ 3, "profile digest does not match --cycles/--seed (stale profile)" };
    }
    std::cerr << "warning: profile digest does not match --cycles/--seed; proceeding\n";
  }

  try
  {
    auto const [optimized, report] = run_pass( nl, profile, m.opt );
    if ( !m.no_verify )
    {
      std::string mode;
      auto const r = verify_equivalence( nl, optimized, m.cycles, m.seed, mode );
      if ( r.verdict == equiv_verdict::mismatch )
      {
        throw cli_error{ 5, "optimized netlist diverges (" + mode +
                                "): " + format_counterexample( *r.cex ) };
      }
    }
    write_file( out_path, emit_blif( optimized ) );
    auto const report_path =
        m.report_path.empty() ? stem_of( m.blif_files[0] ) + ".pass.txt" : m.report_path;
    write_file( report_path, write_pass_report( report ) );
    status << fmt::format( "{}: {} transforms applied, LUTs {} -> {}\n", nl.name(),
                           report.applied.size(), report.luts_before, report.luts_after );
  }
  catch ( validation_error const& e )
  {
    throw cli_error{ 3, e.what() };
  }
  return 0;
}

int cmd_power( run_manifest const& m, std::ostream& status )
{
  if ( m.blif_files.size() != 1 )
  {
    throw cli_error{ 64, "power expects exactly one baseline --blif" };
  }
  auto const base_nl = load_netlist( m.blif_files[0] );
  try
  {
    auto const stim = build_stimulus( base_nl, m );
    auto const base_report = estimate_dynamic_power( base_nl, simulate( base_nl, stim ), m.power );
    std::string text = power_table_header() + format_power_row( base_report );
    if ( !m.optimized_path.empty() )
    {
      auto const opt_nl = load_netlist( m.optimized_path );
      auto const opt_report =
          estimate_dynamic_power( opt_nl, simulate( opt_nl, stim ), m.power, &base_report );
      text += format_power_row( opt_report );
      status << fmt::format( "{}: dP {:+.1f}% dA {:+.1f}%\n", base_nl.name(),
                             *opt_report.delta_power_pct, *opt_report.delta_area_pct );
    }
    else if ( base_report.total_power <= 0 )
    {
      /* a lone baseline report with zero power cannot seed any comparison */
      throw cli_error{ 4, "baseline dynamic power is zero" };
    }
    if ( m.verbose )
    {
      text += "# baseline per-net detail\n";
      text += write_power_report( base_report, true );
    }
    auto const out = m.out.empty() ? stem_of( m.blif_files[0] ) + ".power.txt" : m.out;
    write_file( out, text );
  }
  catch ( validation_error const& e )
  {
    std::string const what = e.what();
    if ( what.find( "positive totals" ) != std::string::npos ||
         what.find( "baseline area" ) != std::string::npos )
    {
      throw cli_error{ 4, what };
    }
    throw cli_error{ 2, what };
  }
  return 0;
}

int cmd_check( run_manifest const& m, std::ostream& status )
{
  if ( m.blif_files.size() != 1 || m.against_path.empty() )
  {
    throw cli_error{ 64, "check expects --blif and --against" };
  }
  auto const a = load_netlist( m.blif_files[0] );
  auto const b = load_netlist( m.against_path );
  try
  {
    std::string mode;
    auto const r = verify_equivalence( a, b, m.cycles, m.seed, mode );
    if ( r.verdict == equiv_verdict::mismatch )
    {
      status << fmt::format( "mismatch ({}) after {} checks: {}\n", mode, r.coverage,
                             format_counterexample( *r.cex ) );
      return 5;
    }
    status << fmt::format( "{} ({}, coverage {})\n",
                           r.verdict == equiv_verdict::equivalent ? "equivalent" : "inconclusive",
                           mode, r.coverage );
  }
  catch ( validation_error const& e )
  {
    throw cli_error{ 2, e.what() };
  }
  return 0;
}

int cmd_all( run_manifest const& m, std::ostream& status )
{
  if ( m.blif_files.empty() )
  {
    throw cli_error{ 64, "all expects at least one --blif" };
  }
  fs::create_directories( m.out_dir );

  struct outcome
  {
    std::string summary;
    int code = 0;
  };
  std::vector<outcome> outcomes( m.blif_files.size() );

  auto const run_one = [&]( size_t index ) {
    auto const& path = m.blif_files[index];
    auto& res = outcomes[index];
    try
    {
      auto const nl = load_netlist( path );
      auto const stem = stem_of( path );
      auto const prefix = m.out_dir + "/" + stem;

      stimulus stim;
      activity_profile profile;
      try
      {
        stim = build_stimulus( nl, m );
        profile = simulate( nl, stim );
      }
      catch ( validation_error const& e )
      {
        throw cli_error{ 2, e.what() };
      }
      write_file( prefix + ".prof", write_profile( profile ) );

      netlist optimized;
      pass_report report;
      try
      {
        std::tie( optimized, report ) = run_pass( nl, profile, m.opt );
      }
      catch ( validation_error const& e )
      {
        throw cli_error{ 3, e.what() };
      }
      write_file( prefix + ".opt.blif", emit_blif( optimized ) );
      write_file( prefix + ".pass.txt", write_pass_report( report ) );

      std::string verdict = "unverified";
      if ( !m.no_verify )
      {
        std::string mode;
        auto const r = verify_equivalence( nl, optimized, m.cycles, m.seed, mode );
        if ( r.verdict == equiv_verdict::mismatch )
        {
          throw cli_error{ 5, "optimized netlist diverges: " + format_counterexample( *r.cex ) };
        }
        verdict = r.verdict == equiv_verdict::equivalent
                      ? "equivalent"
                      : fmt::format( "inconclusive@{}", r.coverage );
      }

      auto const base_report = estimate_dynamic_power( nl, profile, m.power );
      auto const opt_report =
          estimate_dynamic_power( optimized, simulate( optimized, stim ), m.power, &base_report );
      std::string text = power_table_header() + format_power_row( base_report ) +
                         format_power_row( opt_report );
      if ( m.verbose )
      {
        text += "# baseline per-net detail\n" + write_power_report( base_report, true );
        text += "# optimized per-net detail\n" + write_power_report( opt_report, true );
      }
      write_file( prefix + ".power.txt", text );

      res.summary = fmt::format( "{}: dP {:+.1f}% dA {:+.1f}% LUTs {}->{} [{}]", stem,
                                 *opt_report.delta_power_pct, *opt_report.delta_area_pct,
                                 report.luts_before, report.luts_after, verdict );
    }
    catch ( cli_error const& e )
    {
      res.summary = path + ": error: " + e.message;
      res.code = e.code;
    }
    catch ( std::exception const& e )
    {
      res.summary = path + ": error: " + e.what();
      res.code = 2;
    }
  };

  if ( m.jobs <= 1 || m.blif_files.size() == 1 )
  {
    for ( size_t i = 0; i < m.blif_files.size(); ++i )
    {
      run_one( i );
    }
  }
  else
  {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{ 0 };
    auto const workers = std::min<size_t>( m.jobs, m.blif_files.size() );
    for ( size_t t = 0; t < workers; ++t )
    {
      pool.emplace_back( [&]() {
        for ( size_t i = next.fetch_add( 1 ); i < m.blif_files.size(); i = next.fetch_add( 1 ) )
        {
          run_one( i );
        }
      } );
    }
    for ( auto& t : pool )
    {
      t.join();
    }
  }

  int code = 0;
  for ( auto const& res : outcomes )
  {
    status << res.summary << '\n';
    code = std::max( code, res.code );
  }
  return code;
}

} /* namespace */

int main( int argc, char** argv )
{
  CLI::App app{ "simulation-guided power optimization for LUT netlists" };
  app.require_subcommand( 1 );

  run_manifest flags;
  std::string config_path;
  std::string threshold_spec, transforms_spec, area_budget_spec;

  auto const add_common = [&]( CLI::App* cmd ) {
    cmd->add_option( "--config", config_path, "manifest file with key=value lines" );
    cmd->add_option( "--blif", flags.blif_files, "input netlist(s)" );
    cmd->add_option( "--cycles", flags.cycles, "simulated cycles" );
    cmd->add_option( "--seed", flags.seed, "stimulus seed" );
    cmd->add_option( "-o,--out", flags.out, "output path" );
    cmd->add_flag( "--verbose", flags.verbose, "more detail in reports" );
    cmd->add_flag( "--strict", flags.strict, "treat warnings as errors" );
  };
  auto const add_opt_flags = [&]( CLI::App* cmd ) {
    cmd->add_option( "--threshold", threshold_spec, "median | percentile:Q | absolute:N" );
    cmd->add_option( "--transforms", transforms_spec, "none | all | shannon | duplicate | csv" );
    cmd->add_option( "--max-area-growth", area_budget_spec, "percent budget or 'unlimited'" );
    cmd->add_option( "--min-fanout", flags.opt.min_fanout_for_duplication,
                     "minimum fanout for duplication" );
    cmd->add_flag( "--no-verify", flags.no_verify, "skip the post-pass equivalence check" );
  };

  auto* sim = app.add_subcommand( "sim", "simulate and write an activity profile" );
  add_common( sim );
  sim->add_option( "--input-wave", flags.input_waves,
                   "override one input's waveform (name=const0|const1|random[:p]|toggle[:k])" );

  auto* opt = app.add_subcommand( "opt", "rewrite high-activity nets" );
  add_common( opt );
  opt->add_option( "--profile", flags.profile_path, "activity profile from sim" );
  opt->add_option( "--report", flags.report_path, "pass report path" );
  add_opt_flags( opt );

  auto* power =
      app.add_subcommand( "power", "model dynamic power, optionally against an optimized netlist" );
  add_common( power );
  power->add_option( "--optimized", flags.optimized_path, "optimized netlist to compare" );
  power->add_option( "--input-wave", flags.input_waves, "override one input's waveform" );

  auto* check = app.add_subcommand( "check", "equivalence check two netlists" );
  add_common( check );
  check->add_option( "--against", flags.against_path, "second netlist" );

  auto* all = app.add_subcommand( "all", "run sim, opt, power and check per input file" );
  add_common( all );
  all->add_option( "--out-dir", flags.out_dir, "directory for generated files" );
  all->add_option( "--jobs", flags.jobs, "process input files concurrently" );
  all->add_option( "--input-wave", flags.input_waves, "override one input's waveform" );
  add_opt_flags( all );

  CLI11_PARSE( app, argc, argv );

  try
  {
    auto* cmd = app.get_subcommands().front();
    auto const set = [&]( char const* name ) {
      auto const* option = cmd->get_option_no_throw( name );
      return option != nullptr && option->count() > 0;
    };

    run_manifest manifest;
    if ( !config_path.empty() )
    {
      load_config_file( manifest, config_path );
    }
    if ( set( "--blif" ) )
    {
      manifest.blif_files = flags.blif_files;
    }
    if ( set( "--cycles" ) )
    {
      manifest.cycles = flags.cycles;
    }
    if ( set( "--seed" ) )
    {
      manifest.seed = flags.seed;
    }
    if ( set( "--out" ) )
    {
      manifest.out = flags.out;
    }
    if ( set( "--out-dir" ) )
    {
      manifest.out_dir = flags.out_dir;
    }
    if ( set( "--jobs" ) )
    {
      manifest.jobs = flags.jobs;
    }
    if ( set( "--profile" ) )
    {
      manifest.profile_path = flags.profile_path;
    }
    if ( set( "--report" ) )
    {
      manifest.report_path = flags.report_path;
    }
    if ( set( "--optimized" ) )
    {
      manifest.optimized_path = flags.optimized_path;
    }
    if ( set( "--against" ) )
    {
      manifest.against_path = flags.against_path;
    }
    if ( set( "--input-wave" ) )
    {
      manifest.input_waves = flags.input_waves;
    }
    if ( set( "--min-fanout" ) )
    {
      manifest.opt.min_fanout_for_duplication = flags.opt.min_fanout_for_duplication;
    }
    if ( flags.verbose )
    {
      manifest.verbose = true;
    }
    if ( flags.strict )
    {
      manifest.strict = true;
    }
    if ( flags.no_verify )
    {
      manifest.no_verify = true;
    }
    if ( !threshold_spec.empty() )
    {
      apply_threshold_spec( manifest.opt, threshold_spec );
    }
    if ( !transforms_spec.empty() )
    {
      apply_transforms_spec( manifest.opt, transforms_spec );
    }
    if ( !area_budget_spec.empty() )
    {
      apply_area_budget_spec( manifest.opt, area_budget_spec );
    }
    try
    {
      manifest.opt.validate();
      manifest.power.validate();
    }
    catch ( validation_error const& e )
    {
      throw cli_error{ 64, e.what() };
    }
    manifest.validate();

    if ( sim->parsed() )
    {
      return cmd_sim( manifest );
    }
    if ( opt->parsed() )
    {
      return cmd_opt( manifest, std::cout );
    }
    if ( power->parsed() )
    {
      return cmd_power( manifest, std::cout );
    }
    if ( check->parsed() )
    {
      return cmd_check( manifest, std::cout );
    }
    return cmd_all( manifest, std::cout );
  }
  catch ( cli_error const& e )
  {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
