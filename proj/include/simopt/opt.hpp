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
  \file opt.hpp
  \brief Activity-guided netlist rewriting: Shannon splits and driver duplication

  The pass thresholds per-net toggle counters with the median over
  LUT-output nets, selects the nets strictly above the threshold, and
  rewrites each selected net's driver: a Shannon split replaces the
  driving LUT with both cofactor LUTs plus a recombination mux, and
  driver duplication clones the driving LUT so each copy serves one half
  of the loads.  Function is preserved by construction; the pass
  re-validates the netlist before returning.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "netlist.hpp"
#include "simulate.hpp"
#include "truth_table.hpp"

namespace simopt
{

enum class threshold_mode : uint8_t
{
  median,
  percentile,
  absolute
};

enum class transform_kind : uint8_t
{
  shannon_split,
  driver_duplicate
};

inline char const* to_string( transform_kind t )
{
  return t == transform_kind::shannon_split ? "shannon_split" : "driver_duplicate";
}

/*! \brief Configuration of one optimization pass. */
struct opt_config
{
  threshold_mode mode = threshold_mode::median;
  /*! \brief Percentile in (0, 100); used when mode is percentile. */
  double percentile_q = 50.0;
  /*! \brief Absolute toggle-count threshold; used when mode is absolute. */
  uint64_t absolute_count = 0;
  bool enable_shannon = true;
  bool enable_duplicate = true;
  /*! \brief Area growth budget in percent over the input netlist; unset means unlimited. */
  std::optional<double> max_area_growth_pct;
  /*! \brief Minimum fanout for a net to qualify for driver duplication. */
  uint32_t min_fanout_for_duplication = 2;

  void validate() const
  {
    if ( mode == threshold_mode::percentile && ( percentile_q <= 0.0 || percentile_q >= 100.0 ) )
    {
      throw validation_error( "percentile must lie in (0, 100)" );
    }
    if ( min_fanout_for_duplication < 2 )
    {
      throw validation_error( "duplication fanout threshold must be at least 2" );
    }
    if ( max_area_growth_pct && *max_area_growth_pct < 0 )
    {
      throw validation_error( "area growth budget must be nonnegative" );
    }
  }
};

struct pass_target
{
  std::string net;
  uint64_t counter = 0;
  transform_kind transform = transform_kind::shannon_split;
  int delta_luts = 0;
};

struct pass_skip
{
  std::string net;
  std::string reason;
};

/*! \brief Accounting of one pass run: applied transforms, skips, LUT counts. */
struct pass_report
{
  uint64_t threshold = 0;
  std::vector<pass_target> applied;
  std::vector<pass_skip> skipped;
  uint32_t luts_before = 0;
  uint32_t luts_after = 0;
};

namespace detail
{

inline bool is_lut_output( netlist const& nl, net_id id )
{
  auto const& info = nl.net( id );
  return info.driver == driver_kind::cell && !nl.cell_at( info.driver_index ).fanins.empty();
}

inline std::vector<uint64_t> lut_output_counters( activity_profile const& profile, netlist const& nl )
{
  std::vector<uint64_t> counters;
  for ( net_id id = 0; id < nl.num_nets(); ++id )
  {
    if ( is_lut_output( nl, id ) )
    {
      counters.push_back( profile.counter_of( nl.net_name( id ) ) );
    }
  }
  if ( counters.empty() )
  {
    throw validation_error( "netlist has no LUT output nets" );
  }
  std::sort( counters.begin(), counters.end() );
  return counters;
}

} /* namespace detail */

/*! \brief Median toggle counter over LUT-output nets.
 *
 * The population excludes primary inputs, latch outputs and constant
 * cells, since only LUT drivers are transformable.  For an even count
 * the lower-middle order statistic (index `(k - 1) / 2`) is returned,
 * which keeps the threshold deterministic.
 */
inline uint64_t median_threshold( activity_profile const& profile, netlist const& nl )
{
  auto const counters = detail::lut_output_counters( profile, nl );
  return counters[( counters.size() - 1 ) / 2];
}

/*! \brief Threshold per the configured mode (median, percentile, or absolute). */
inline uint64_t compute_threshold( activity_profile const& profile, netlist const& nl,
                                   opt_config const& cfg )
{
  switch ( cfg.mode )
  {
  case threshold_mode::median:
    return median_threshold( profile, nl );
  case threshold_mode::percentile:
  {
    auto const counters = detail::lut_output_counters( profile, nl );
    auto const index = static_cast<size_t>( cfg.percentile_q * ( counters.size() - 1 ) / 100.0 );
    return counters[index];
  }
  case threshold_mode::absolute:
    return cfg.absolute_count;
  }
  throw std::logic_error( "unreachable" );
}

/*! \brief LUT-output nets with counter strictly above the threshold,
 * ordered by descending counter, then ascending net name. */
inline std::vector<net_id> select_targets( activity_profile const& profile, netlist const& nl,
                                           opt_config const& cfg )
{
  auto const threshold = compute_threshold( profile, nl, cfg );
  std::vector<net_id> targets;
  for ( net_id id = 0; id < nl.num_nets(); ++id )
  {
    if ( detail::is_lut_output( nl, id ) && profile.counter_of( nl.net_name( id ) ) > threshold )
    {
      targets.push_back( id );
    }
  }
  std::sort( targets.begin(), targets.end(), [&]( net_id a, net_id b ) {
    auto const ca = profile.counter_of( nl.net_name( a ) );
    auto const cb = profile.counter_of( nl.net_name( b ) );
    if ( ca != cb )
    {
      return ca > cb;
    }
    return nl.net_name( a ) < nl.net_name( b );
  } );
  return targets;
}

/*! \brief Replaces the driver of `net` by its Shannon cofactor cells plus a mux.
 *
 * The trace must carry exactly one split (as produced by
 * `truth_table_decompose` on the driver's function).  The driver cell
 * with `n` inputs becomes: cofactor cell `f1` and cofactor cell `f0`
 * on the remaining `n - 1` inputs, and a 3-input recombination cell
 * with truth table 0xCA over inputs ordered `(f0, f1, s)`, i.e.
 * `s * f1 + !s * f0`.  The rewritten net keeps its identity and loads.
 */
inline netlist shannon_rewrite( netlist const& nl, net_id net, decompose_trace<> const& trace )
{
  auto const& info = nl.net( net );
  if ( info.driver != driver_kind::cell )
  {
    throw validation_error( "net '" + info.name + "' is not driven by a LUT cell" );
  }
  auto const driver_index = info.driver_index;
  auto const& driver = nl.cell_at( driver_index );
  if ( driver.fanins.size() < 2 )
  {
    throw validation_error( "driver of '" + info.name + "' has nothing to split" );
  }
  if ( trace.splits.size() != 1 )
  {
    throw validation_error( "shannon rewrite expects a single-split decomposition trace" );
  }
  auto const& split = trace.splits.front();
  if ( split.position >= driver.fanins.size() )
  {
    throw validation_error( "split position out of range for driver of '" + info.name + "'" );
  }

  auto const select_net = driver.fanins[split.position];
  std::vector<net_id> remaining = driver.fanins;
  remaining.erase( remaining.begin() + split.position );

  netlist result = nl;
  auto const base = result.net_name( net );
  auto const f1_net = result.ensure_net( result.fresh_net_name( base + "$sd1" ) );
  auto const f0_net = result.ensure_net( result.fresh_net_name( base + "$sd0" ) );
  result.add_cell( remaining, f1_net, split.t1 );
  result.add_cell( remaining, f0_net, split.t0 );
  result.replace_cell( driver_index, { f0_net, f1_net, select_net }, net,
                       truth_table::from_hex( 3, "CA" ) );
  return result;
}

/*! \brief Clones the driver of `net`; the clone serves the second half of the loads.
 *
 * Cell and latch loads are partitioned by ascending sink id; an odd
 * count leaves the extra load with the original driver.  Primary-output
 * loads stay on the original net.  The clone's fresh output net is
 * charged one duplication overhead unit in the power model.
 */
inline netlist duplicate_driver( netlist const& nl, net_id net, uint32_t min_fanout = 2 )
{
  auto const& info = nl.net( net );
  if ( info.driver != driver_kind::cell )
  {
    throw validation_error( "net '" + info.name + "' is not driven by a LUT cell" );
  }
  if ( nl.fanout( net ) < min_fanout )
  {
    throw validation_error( "fanout of '" + info.name + "' is below the duplication threshold" );
  }
  std::vector<sink_ref> loads;
  for ( auto const& s : nl.sinks( net ) )
  {
    if ( s.what != sink_ref::kind::output )
    {
      loads.push_back( s );
    }
  }
  if ( loads.size() < 2 )
  {
    throw validation_error( "net '" + info.name + "' has too few non-output loads to partition" );
  }

  netlist result = nl;
  auto const driver = result.cell_at( info.driver_index );
  auto const copy_net = result.ensure_net( result.fresh_net_name( result.net_name( net ) + "$dup" ) );
  result.add_cell( driver.fanins, copy_net, driver.function );
  result.add_dup_unit( copy_net );

  auto const first_half = ( loads.size() + 1 ) / 2;
  for ( size_t i = first_half; i < loads.size(); ++i )
  {
    result.rewire_sink( loads[i], net, copy_net );
  }
  return result;
}

/*! \brief Runs the full activity-guided pass and reports the applied transforms.
 *
 * Targets are processed in selection order; for each target the Shannon
 * split is attempted first, then driver duplication (on the rewritten
 * driver when both are enabled).  A transform that would exceed the
 * area budget, or that fails its preconditions, is recorded as skipped;
 * the pass never aborts because of one target.
 */
inline std::pair<netlist, pass_report> run_pass( netlist const& nl, activity_profile const& profile,
                                                 opt_config const& cfg )
{
  cfg.validate();
  if ( profile.counters.size() != nl.num_nets() )
  {
    throw validation_error( "activity profile does not match the netlist's net set" );
  }
  std::unordered_map<net_id, uint64_t> counter_by_id;
  for ( net_id id = 0; id < nl.num_nets(); ++id )
  {
    counter_by_id.emplace( id, profile.counter_of( nl.net_name( id ) ) );
  }

  pass_report report;
  report.luts_before = nl.area_luts();
  netlist result = nl;

  if ( !cfg.enable_shannon && !cfg.enable_duplicate )
  {
    report.luts_after = report.luts_before;
    return { std::move( result ), report };
  }

  report.threshold = compute_threshold( profile, nl, cfg );
  auto const targets = select_targets( profile, nl, cfg );

  auto const over_budget = [&]( int delta ) {
    if ( !cfg.max_area_growth_pct )
    {
      return false;
    }
    double const grown = static_cast<double>( result.area_luts() ) + delta - report.luts_before;
    return 100.0 * grown / report.luts_before > *cfg.max_area_growth_pct;
  };

  for ( auto const target : targets )
  {
    auto const name = nl.net_name( target );
    auto const counter = counter_by_id.at( target );

    if ( cfg.enable_shannon )
    {
      auto const& info = result.net( target );
      auto const& driver = result.cell_at( info.driver_index );
      if ( over_budget( 2 ) )
      {
        report.skipped.push_back( { name, "area budget" } );
      }
      else if ( driver.fanins.size() < 2 )
      {
        report.skipped.push_back( { name, "driver not splittable" } );
      }
      else
      {
        try
        {
          /* split on the highest-toggle input; earlier pins win ties */
          uint32_t split_pos = 0;
          uint64_t best = 0;
          for ( uint32_t i = 0; i < driver.fanins.size(); ++i )
          {
            auto const it = counter_by_id.find( driver.fanins[i] );
            auto const c = it == counter_by_id.end() ? 0 : it->second;
            if ( i == 0 || c > best )
            {
              best = c;
              split_pos = i;
            }
          }
          cut c;
          c.right_vars = driver.fanins;
          for ( uint32_t i = 0; i < driver.fanins.size(); ++i )
          {
            if ( i != split_pos )
            {
              c.left_vars.push_back( driver.fanins[i] );
            }
          }
          auto const [decomposed, trace] =
              truth_table_decompose( driver.function, c, counter, report.threshold );
          (void)decomposed;
          result = shannon_rewrite( result, target, trace );
          report.applied.push_back( { name, counter, transform_kind::shannon_split, 2 } );
        }
        catch ( validation_error const& e )
        {
          report.skipped.push_back( { name, e.what() } );
        }
      }
    }

    if ( cfg.enable_duplicate )
    {
      if ( over_budget( 1 ) )
      {
        report.skipped.push_back( { name, "area budget" } );
        continue;
      }
      try
      {
        auto const copy_name = result.fresh_net_name( result.net_name( target ) + "$dup" );
        result = duplicate_driver( result, target, cfg.min_fanout_for_duplication );
        if ( auto const copy = result.find_net( copy_name ) )
        {
          counter_by_id.emplace( *copy, counter );
        }
        report.applied.push_back( { name, counter, transform_kind::driver_duplicate, 1 } );
      }
      catch ( validation_error const& e )
      {
        report.skipped.push_back( { name, e.what() } );
      }
    }
  }

  result.validate();
  report.luts_after = result.area_luts();
  return { std::move( result ), report };
}

/*! \brief Serializes a pass report: one line per applied transform, then skips and a summary. */
inline std::string write_pass_report( pass_report const& report )
{
  std::ostringstream out;
  for ( auto const& t : report.applied )
  {
    out << t.net << ' ' << t.counter << ' ' << to_string( t.transform ) << ' '
        << ( t.delta_luts >= 0 ? "+" : "" ) << t.delta_luts << '\n';
  }
  for ( auto const& s : report.skipped )
  {
    out << "skipped " << s.net << ": " << s.reason << '\n';
  }
  out << "total threshold=" << report.threshold << " luts_before=" << report.luts_before
      << " luts_after=" << report.luts_after << '\n';
  return out.str();
}

} /* namespace simopt */
