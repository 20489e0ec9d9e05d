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
  \file simulate.hpp
  \brief Cycle-based two-valued simulation with per-net toggle counters

  Cycle semantics: an initialization cycle applies the first input
  vector, settles all combinational cells in topological order and loads
  latch init values without counting toggles.  Each counted cycle then
  performs a rising clock edge (latches capture the previous cycle's
  settled data), applies its input vector, settles, and increments the
  counter of every net whose settled value changed.  A net therefore
  toggles at most once per counted cycle and `counter <= num_cycles`
  always holds.
*/

#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "netlist.hpp"
#include "stimulus.hpp"

namespace simopt
{

/*! \brief Per-net toggle counters over a simulation run (the activity dump). */
struct activity_profile
{
  uint32_t num_cycles = 0;
  uint64_t stimulus_digest = 0;
  std::map<std::string, uint64_t> counters;
  std::vector<std::string> warnings;

  uint64_t counter_of( std::string const& net ) const
  {
    auto const it = counters.find( net );
    if ( it == counters.end() )
    {
      throw validation_error( "activity profile has no counter for net '" + net + "'" );
    }
    return it->second;
  }

  /*! \brief Switching activity factor: transitions per counted cycle, in [0, 1]. */
  double activity_of( std::string const& net ) const
  {
    return num_cycles == 0 ? 0.0 : static_cast<double>( counter_of( net ) ) / num_cycles;
  }

  bool operator==( activity_profile const& other ) const = default;
};

/*! \brief Step-wise cycle simulator over an immutable netlist. */
class simulator
{
public:
  explicit simulator( netlist const& nl )
      : nl_( nl ), topo_( nl.topo_order() )
  {
  }

  /*! \brief Binds a stimulus and runs the non-counting initialization cycle. */
  void reset( stimulus const& stim )
  {
    stim_ = &stim;
    bind_inputs( stim );
    values_.assign( nl_.num_nets(), 0 );
    counters_.assign( nl_.num_nets(), 0 );
    warnings_.clear();
    cycle_ = 0;

    latch_state_.assign( nl_.num_latches(), 0 );
    for ( uint32_t i = 0; i < nl_.num_latches(); ++i )
    {
      auto const& l = nl_.latch_at( i );
      switch ( l.init )
      {
      case latch_init::zero:
        latch_state_[i] = 0;
        break;
      case latch_init::one:
        latch_state_[i] = 1;
        break;
      case latch_init::unknown:
        latch_state_[i] = 0;
        warnings_.push_back( "latch output '" + nl_.net_name( l.data_out ) +
                             "' has unknown init; assuming 0" );
        break;
      }
      values_[l.data_out] = latch_state_[i];
    }
    apply_inputs( 0 );
    settle();
  }

  /*! \brief Runs one counted cycle; returns false once all cycles are done. */
  bool step()
  {
    if ( stim_ == nullptr || cycle_ >= stim_->num_cycles )
    {
      return false;
    }
    previous_ = values_;
    for ( uint32_t i = 0; i < nl_.num_latches(); ++i )
    {
      latch_state_[i] = previous_[nl_.latch_at( i ).data_in];
    }
    for ( uint32_t i = 0; i < nl_.num_latches(); ++i )
    {
      values_[nl_.latch_at( i ).data_out] = latch_state_[i];
    }
    apply_inputs( cycle_ );
    settle();
    for ( net_id id = 0; id < nl_.num_nets(); ++id )
    {
      if ( values_[id] != previous_[id] )
      {
        ++counters_[id];
      }
    }
    ++cycle_;
    return true;
  }

  uint32_t cycles_done() const { return cycle_; }
  uint8_t value( net_id id ) const { return values_.at( id ); }
  std::vector<uint64_t> const& counters() const { return counters_; }
  std::vector<std::string> const& warnings() const { return warnings_; }

private:
  void bind_inputs( stimulus const& stim )
  {
    std::unordered_map<std::string, size_t> by_name;
    for ( size_t i = 0; i < stim.input_names.size(); ++i )
    {
      if ( !by_name.emplace( stim.input_names[i], i ).second )
      {
        throw validation_error( "stimulus names input '" + stim.input_names[i] + "' twice" );
      }
    }
    input_track_.clear();
    for ( auto const id : nl_.inputs() )
    {
      auto const it = by_name.find( nl_.net_name( id ) );
      if ( it == by_name.end() )
      {
        throw validation_error( "stimulus does not cover input '" + nl_.net_name( id ) + "'" );
      }
      input_track_.push_back( it->second );
      by_name.erase( it );
    }
    if ( !by_name.empty() )
    {
      throw validation_error( "stimulus names unknown input '" + by_name.begin()->first + "'" );
    }
  }

  void apply_inputs( uint32_t track_index )
  {
    if ( stim_->num_cycles == 0 )
    {
      return;
    }
    for ( size_t i = 0; i < nl_.inputs().size(); ++i )
    {
      values_[nl_.inputs()[i]] = stim_->tracks[input_track_[i]][track_index];
    }
  }

  void settle()
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

  netlist const& nl_;
  stimulus const* stim_ = nullptr;
  std::vector<uint32_t> topo_;
  std::vector<size_t> input_track_;
  std::vector<uint8_t> values_;
  std::vector<uint8_t> previous_;
  std::vector<uint8_t> latch_state_;
  std::vector<uint64_t> counters_;
  std::vector<std::string> warnings_;
  uint32_t cycle_ = 0;
};

/*! \brief Simulates a netlist under a stimulus and collects the activity profile. */
inline activity_profile simulate( netlist const& nl, stimulus const& stim )
{
  simulator sim( nl );
  sim.reset( stim );
  while ( sim.step() )
  {
  }
  activity_profile profile;
  profile.num_cycles = stim.num_cycles;
  profile.stimulus_digest = stim.digest();
  profile.warnings = stim.warnings;
  for ( auto const& w : sim.warnings() )
  {
    profile.warnings.push_back( w );
  }
  for ( net_id id = 0; id < nl.num_nets(); ++id )
  {
    if ( !profile.counters.emplace( nl.net_name( id ), sim.counters()[id] ).second )
    {
      throw validation_error( "duplicate net name '" + nl.net_name( id ) + "' in profile" );
    }
  }
  return profile;
}

namespace detail
{

inline std::string format_digest( uint64_t digest )
{
  static constexpr char hex[] = "0123456789abcdef";
  std::string s( 16, '0' );
  for ( int i = 0; i < 16; ++i )
  {
    s[15 - i] = hex[( digest >> ( 4 * i ) ) & 0xF];
  }
  return s;
}

} /* namespace detail */

/*! \brief Writes the line-oriented profile format (net lines in ascending name order). */
inline std::string write_profile( activity_profile const& profile )
{
  std::ostringstream out;
  out << "simopt-profile v1 cycles=" << profile.num_cycles
      << " digest=" << detail::format_digest( profile.stimulus_digest ) << '\n';
  for ( auto const& w : profile.warnings )
  {
    out << "# warning: " << w << '\n';
  }
  for ( auto const& [name, counter] : profile.counters )
  {
    out << name << ' ' << counter << '\n';
  }
  return out.str();
}

/*! \brief Parses the profile format; validates version and counter bounds. */
inline activity_profile read_profile( std::istream& in )
{
  activity_profile profile;
  std::string line;
  unsigned line_no = 0;
  bool saw_header = false;
  while ( std::getline( in, line ) )
  {
    ++line_no;
    if ( !line.empty() && line.back() == '\r' )
    {
      line.pop_back();
    }
    if ( line.empty() )
    {
      continue;
    }
    if ( line[0] == '#' )
    {
      if ( line.rfind( "# warning: ", 0 ) == 0 )
      {
        profile.warnings.push_back( line.substr( 11 ) );
      }
      continue;
    }
    std::istringstream iss( line );
    if ( !saw_header )
    {
      std::string magic, version, cycles_kv, digest_kv;
      iss >> magic >> version >> cycles_kv >> digest_kv;
      if ( magic != "simopt-profile" )
      {
        throw parse_error( "not a simopt profile", line_no );
      }
      if ( version != "v1" )
      {
        throw parse_error( "unsupported profile version '" + version + "'", line_no );
      }
      if ( cycles_kv.rfind( "cycles=", 0 ) != 0 || digest_kv.rfind( "digest=", 0 ) != 0 )
      {
        throw parse_error( "malformed profile header", line_no );
      }
      try
      {
        profile.num_cycles = static_cast<uint32_t>( std::stoul( cycles_kv.substr( 7 ) ) );
      }
      catch ( std::exception const& )
      {
        throw parse_error( "malformed cycle count", line_no );
      }
      auto const digest_hex = digest_kv.substr( 7 );
      if ( digest_hex.size() != 16 )
      {
        throw parse_error( "malformed stimulus digest", line_no );
      }
      profile.stimulus_digest = 0;
      for ( auto const c : digest_hex )
      {
        uint64_t nibble;
        if ( c >= '0' && c <= '9' )
        {
          nibble = static_cast<uint64_t>( c - '0' );
        }
        else if ( c >= 'a' && c <= 'f' )
        {
          nibble = static_cast<uint64_t>( c - 'a' ) + 10;
        }
        else
        {
          throw parse_error( "malformed stimulus digest", line_no );
        }
        profile.stimulus_digest = ( profile.stimulus_digest << 4 ) | nibble;
      }
      saw_header = true;
      continue;
    }
    std::string name;
    uint64_t counter;
    if ( !( iss >> name >> counter ) )
    {
      throw parse_error( "malformed profile line", line_no );
    }
    std::string extra;
    if ( iss >> extra )
    {
      throw parse_error( "malformed profile line", line_no );
    }
    if ( counter > profile.num_cycles )
    {
      throw parse_error( "counter exceeds cycle count for net '" + name + "'", line_no );
    }
    if ( !profile.counters.emplace( name, counter ).second )
    {
      throw parse_error( "duplicate net '" + name + "' in profile", line_no );
    }
  }
  if ( !saw_header )
  {
    throw parse_error( "missing profile header", line_no );
  }
  return profile;
}

inline activity_profile read_profile( std::string const& text )
{
  std::istringstream in( text );
  return read_profile( in );
}

/*! \brief Merges two profiles taken under different stimuli; counters and cycles add. */
inline activity_profile merge_profiles( activity_profile const& a, activity_profile const& b )
{
  if ( a.stimulus_digest == b.stimulus_digest )
  {
    throw validation_error( "refusing to merge profiles with identical stimulus digests" );
  }
  if ( a.counters.size() != b.counters.size() )
  {
    throw validation_error( "profiles cover different net sets" );
  }
  activity_profile merged;
  merged.num_cycles = a.num_cycles + b.num_cycles;
  merged.stimulus_digest = a.stimulus_digest ^ ( b.stimulus_digest * 0x100000001B3ULL );
  merged.warnings = a.warnings;
  merged.warnings.insert( merged.warnings.end(), b.warnings.begin(), b.warnings.end() );
  for ( auto const& [name, counter] : a.counters )
  {
    auto const it = b.counters.find( name );
    if ( it == b.counters.end() )
    {
      throw validation_error( "profiles cover different net sets" );
    }
    merged.counters.emplace( name, counter + it->second );
  }
  return merged;
}

} /* namespace simopt */
