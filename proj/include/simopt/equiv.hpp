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
  \file equiv.hpp
  \brief Functional equivalence checks between two netlists

  Exhaustive checking enumerates all input assignments of small
  combinational designs and may return `equivalent`.  Lockstep checking
  simulates two sequential designs under one stimulus and is bounded:
  full agreement yields `inconclusive`, never `equivalent`.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netlist.hpp"
#include "simulate.hpp"
#include "stimulus.hpp"

namespace simopt
{

enum class equiv_verdict : uint8_t
{
  equivalent,
  mismatch,
  inconclusive
};

/*! \brief Witness of a mismatch: input values, and the cycle for sequential checks. */
struct counterexample
{
  std::vector<std::pair<std::string, uint8_t>> inputs;
  std::optional<uint32_t> cycle;
};

struct equiv_result
{
  equiv_verdict verdict = equiv_verdict::inconclusive;
  std::optional<counterexample> cex;
  uint64_t coverage = 0; /* assignments or cycles checked */
};

inline std::string format_counterexample( counterexample const& cex )
{
  std::string s;
  for ( auto const& [name, bit] : cex.inputs )
  {
    if ( !s.empty() )
    {
      s += ' ';
    }
    s += name + "=" + ( bit ? "1" : "0" );
  }
  if ( cex.cycle )
  {
    s += " cycle=" + std::to_string( *cex.cycle );
  }
  return s;
}

namespace detail
{

inline void check_io_names( netlist const& a, netlist const& b )
{
  auto const names_of = []( netlist const& nl, std::vector<net_id> const& ids ) {
    std::set<std::string> names;
    for ( auto const id : ids )
    {
      names.insert( nl.net_name( id ) );
    }
    return names;
  };
  if ( names_of( a, a.inputs() ) != names_of( b, b.inputs() ) )
  {
    throw validation_error( "primary input names differ" );
  }
  if ( names_of( a, a.outputs() ) != names_of( b, b.outputs() ) )
  {
    throw validation_error( "primary output names differ" );
  }
}

/* Combinational single-pass evaluator with inputs addressed by name. */
class comb_evaluator
{
public:
  explicit comb_evaluator( netlist const& nl ) : nl_( nl ), topo_( nl.topo_order() )
  {
    values_.assign( nl.num_nets(), 0 );
  }

  void set_input( std::string const& name, uint8_t value )
  {
    values_[*nl_.find_net( name )] = value;
  }

  void evaluate()
  {
    for ( auto const ci : topo_ )
    {
      auto const& c = nl_.cell_at( ci );
      uint64_t minterm = 0;
      for ( uint32_t i = 0; i < c.fanins.size(); ++i )
      {
        minterm |= static_cast<uint64_t>( values_[c.fanins[i]] ) << i;
      }
      values_[c.fanout] = c.function.get_bit( minterm ) ? 1 : 0;
    }
  }

  uint8_t output( std::string const& name ) const
  {
    return values_[*nl_.find_net( name )];
  }

private:
  netlist const& nl_;
  std::vector<uint32_t> topo_;
  std::vector<uint8_t> values_;
};

} /* namespace detail */

/*! \brief Exhaustive equivalence over all assignments of up to 16 primary inputs.
 *
 * Assignments are enumerated in ascending minterm order over the first
 * netlist's declared input order; the counterexample, if any, is the
 * first mismatching assignment.
 */
inline equiv_result exhaustive_equiv( netlist const& a, netlist const& b )
{
  if ( !a.is_combinational() || !b.is_combinational() )
  {
    throw validation_error( "exhaustive check requires combinational netlists" );
  }
  detail::check_io_names( a, b );
  if ( a.inputs().size() > 16 )
  {
    throw validation_error( "exhaustive check supports at most 16 primary inputs" );
  }

  std::vector<std::string> input_names;
  for ( auto const id : a.inputs() )
  {
    input_names.push_back( a.net_name( id ) );
  }
  std::set<std::string> output_names;
  for ( auto const id : a.outputs() )
  {
    output_names.insert( a.net_name( id ) );
  }

  detail::comb_evaluator eval_a( a );
  detail::comb_evaluator eval_b( b );

  equiv_result result;
  uint64_t const count = uint64_t( 1 ) << a.inputs().size();
  for ( uint64_t m = 0; m < count; ++m )
  {
    for ( size_t i = 0; i < input_names.size(); ++i )
    {
      auto const bit = static_cast<uint8_t>( ( m >> i ) & 1 );
      eval_a.set_input( input_names[i], bit );
      eval_b.set_input( input_names[i], bit );
    }
    eval_a.evaluate();
    eval_b.evaluate();
    ++result.coverage;
    for ( auto const& name : output_names )
    {
      if ( eval_a.output( name ) != eval_b.output( name ) )
      {
        result.verdict = equiv_verdict::mismatch;
        counterexample cex;
        for ( size_t i = 0; i < input_names.size(); ++i )
        {
          cex.inputs.emplace_back( input_names[i], static_cast<uint8_t>( ( m >> i ) & 1 ) );
        }
        result.cex = std::move( cex );
        return result;
      }
    }
  }
  result.verdict = equiv_verdict::equivalent;
  return result;
}

/*! \brief Bounded sequential equivalence: lockstep simulation under one stimulus.
 *
 * Primary outputs are compared after every counted cycle.  Full
 * agreement is reported as `inconclusive` (the check is bounded); a
 * difference yields `mismatch` with the first differing cycle and the
 * input values applied during it.
 */
inline equiv_result lockstep_equiv( netlist const& a, netlist const& b, stimulus const& stim )
{
  detail::check_io_names( a, b );

  std::set<std::string> output_names;
  for ( auto const id : a.outputs() )
  {
    output_names.insert( a.net_name( id ) );
  }

  simulator sim_a( a );
  simulator sim_b( b );
  sim_a.reset( stim );
  sim_b.reset( stim );

  equiv_result result;
  while ( sim_a.step() )
  {
    sim_b.step();
    ++result.coverage;
    for ( auto const& name : output_names )
    {
      if ( sim_a.value( *a.find_net( name ) ) != sim_b.value( *b.find_net( name ) ) )
      {
        result.verdict = equiv_verdict::mismatch;
        counterexample cex;
        for ( size_t i = 0; i < stim.input_names.size(); ++i )
        {
          cex.inputs.emplace_back( stim.input_names[i],
                                   stim.tracks[i][sim_a.cycles_done() - 1] );
        }
        cex.cycle = sim_a.cycles_done();
        result.cex = std::move( cex );
        return result;
      }
    }
  }
  result.verdict = equiv_verdict::inconclusive;
  return result;
}

} /* namespace simopt */
