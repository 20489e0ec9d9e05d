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
  \file power.hpp
  \brief Dynamic switching-power estimation from activity profiles

  Per-net dynamic power is modeled as `alpha * C * V^2 * f`, with the
  switching factor `alpha = counter / num_cycles` taken from a profile
  and the effective capacitance `C` derived from a structural fanout
  proxy.  Only the dynamic term is modeled; static power is out of
  scope, as is absolute accuracy against placed-and-routed designs.
*/

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "netlist.hpp"
#include "simulate.hpp"

namespace simopt
{

/*! \brief Parameters of the switching-power model. */
struct power_config
{
  /*! \brief Supply voltage in volts. */
  double supply_voltage = 1.0;
  /*! \brief Clock frequency in hertz. */
  double clock_freq = 1e8;
  /*! \brief Base capacitance per net, in farads. */
  double c_base = 5e-15;
  /*! \brief Capacitance per sink, in farads. */
  double c_per_fanout = 2e-15;
  /*! \brief Capacitance added per duplicated driver copy, in farads. */
  double c_dup_overhead = 1e-15;
  /*! \brief Exponent applied to the fanout term; 1 keeps the proxy linear.
   *
   * Values above 1 model the superlinear wiring cost of high-fanout
   * nets, which is what makes load splitting through driver duplication
   * pay off in the model.
   */
  double fanout_exponent = 1.0;

  void validate() const
  {
    if ( supply_voltage <= 0 || clock_freq <= 0 || c_base <= 0 || c_per_fanout <= 0 ||
         c_dup_overhead <= 0 || fanout_exponent <= 0 )
    {
      throw validation_error( "power model parameters must be strictly positive" );
    }
  }
};

struct power_entry
{
  std::string net;
  double activity = 0;
  double capacitance = 0;
  double power = 0;
};

/*! \brief Modeled power and area of one netlist, optionally with deltas to a baseline. */
struct power_report
{
  std::string design;
  std::vector<power_entry> per_net; /* ascending net name */
  double total_power = 0;
  uint32_t area_luts = 0;
  std::optional<double> delta_power_pct;
  std::optional<double> delta_area_pct;
};

/*! \brief Effective capacitance proxy: `c_base + c_per_fanout * fanout^exponent`,
 * plus `c_dup_overhead` per duplicated-driver copy charged to the net. */
inline double net_capacitance( netlist const& nl, net_id id, power_config const& cfg )
{
  auto const k = nl.fanout( id );
  double const fanout_term =
      cfg.fanout_exponent == 1.0
          ? static_cast<double>( k )
          : std::pow( static_cast<double>( k ), cfg.fanout_exponent );
  return cfg.c_base + cfg.c_per_fanout * fanout_term + cfg.c_dup_overhead * nl.net( id ).dup_units;
}

/*! \brief Percentage deltas between a baseline and an optimized report.
 *
 * Positive `delta_power_pct` means power was saved; positive
 * `delta_area_pct` means area grew.
 */
struct delta_summary
{
  double delta_power_pct = 0;
  double delta_area_pct = 0;
};

inline delta_summary compare_reports( power_report const& baseline, power_report const& optimized )
{
  if ( baseline.total_power <= 0 || optimized.total_power <= 0 )
  {
    throw validation_error( "power comparison requires strictly positive totals" );
  }
  if ( baseline.area_luts == 0 )
  {
    throw validation_error( "power comparison requires a nonzero baseline area" );
  }
  delta_summary d;
  d.delta_power_pct = 100.0 * ( baseline.total_power - optimized.total_power ) / baseline.total_power;
  d.delta_area_pct = 100.0 * ( static_cast<double>( optimized.area_luts ) - baseline.area_luts ) /
                     baseline.area_luts;
  return d;
}

/*! \brief Estimates per-net and total dynamic power of `nl` under `profile`.
 *
 * The profile must cover exactly the nets of the netlist.  When a
 * baseline report is supplied, the percentage deltas are filled in with
 * the usual sign convention.
 */
inline power_report estimate_dynamic_power( netlist const& nl, activity_profile const& profile,
                                            power_config const& cfg,
                                            power_report const* baseline = nullptr )
{
  cfg.validate();
  if ( profile.counters.size() != nl.num_nets() )
  {
    throw validation_error( "activity profile does not match the netlist's net set" );
  }
  power_report report;
  report.design = nl.name();
  report.area_luts = nl.area_luts();
  report.per_net.reserve( nl.num_nets() );
  double const vv_f = cfg.supply_voltage * cfg.supply_voltage * cfg.clock_freq;
  for ( auto const& [name, counter] : profile.counters )
  {
    auto const id = nl.find_net( name );
    if ( !id )
    {
      throw validation_error( "activity profile does not match the netlist's net set" );
    }
    power_entry e;
    e.net = name;
    e.activity = profile.num_cycles == 0 ? 0.0 : static_cast<double>( counter ) / profile.num_cycles;
    e.capacitance = net_capacitance( nl, *id, cfg );
    e.power = e.activity * e.capacitance * vv_f;
    report.total_power += e.power;
    report.per_net.push_back( std::move( e ) );
  }
  if ( baseline != nullptr )
  {
    auto const d = compare_reports( *baseline, report );
    report.delta_power_pct = d.delta_power_pct;
    report.delta_area_pct = d.delta_area_pct;
  }
  return report;
}

inline std::string power_table_header() { return "name, power_W, area_luts, dP_pct, dA_pct\n"; }

/*! \brief One table row mirroring the header columns. */
inline std::string format_power_row( power_report const& report )
{
  return fmt::format( "{}, {:.6e}, {}, {}, {}\n", report.design.empty() ? "top" : report.design,
                      report.total_power, report.area_luts,
                      report.delta_power_pct ? fmt::format( "{:.1f}", *report.delta_power_pct ) : "-",
                      report.delta_area_pct ? fmt::format( "{:.1f}", *report.delta_area_pct ) : "-" );
}

/*! \brief Serializes a report in the tabular format `name, power_W, area_luts, dP_pct, dA_pct`. */
inline std::string write_power_report( power_report const& report, bool verbose = false )
{
  std::string out = power_table_header() + format_power_row( report );
  if ( verbose )
  {
    out += "# net alpha capacitance_F power_W\n";
    for ( auto const& e : report.per_net )
    {
      out += fmt::format( "{} {:.6f} {:.6e} {:.6e}\n", e.net, e.activity, e.capacitance, e.power );
    }
  }
  return out;
}

} /* namespace simopt */
