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
  \file stimulus.hpp
  \brief Per-input waveform specifications and deterministic stimulus generation
*/

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "netlist.hpp"

namespace simopt
{

namespace detail
{

inline uint64_t splitmix64_next( uint64_t& state )
{
  uint64_t z = ( state += 0x9E3779B97F4A7C15ULL );
  z = ( z ^ ( z >> 30 ) ) * 0xBF58476D1CE4E5B9ULL;
  z = ( z ^ ( z >> 27 ) ) * 0x94D049BB133111EBULL;
  return z ^ ( z >> 31 );
}

inline uint64_t fnv1a64( uint64_t hash, void const* data, size_t size )
{
  auto const* bytes = static_cast<unsigned char const*>( data );
  for ( size_t i = 0; i < size; ++i )
  {
    hash ^= bytes[i];
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

inline uint64_t fnv1a64_init() { return 0xCBF29CE484222325ULL; }

} /* namespace detail */

/*! \brief One primary input's waveform over the simulated cycles. */
struct waveform
{
  enum class kind : uint8_t
  {
    toggle_every,
    random_bits,
    constant,
    explicit_bits
  };

  kind what = kind::random_bits;
  uint32_t period = 1;      /* toggle_every: flip every `period` cycles */
  double probability = 0.5; /* random_bits: probability of a 1 per cycle */
  uint8_t value = 0;        /* constant */
  std::vector<uint8_t> bits; /* explicit_bits; length must equal num_cycles */

  static waveform toggle_every( uint32_t period )
  {
    waveform w;
    w.what = kind::toggle_every;
    w.period = period == 0 ? 1 : period;
    return w;
  }

  static waveform random_bits( double probability = 0.5 )
  {
    waveform w;
    w.what = kind::random_bits;
    w.probability = probability;
    return w;
  }

  static waveform constant( uint8_t value )
  {
    waveform w;
    w.what = kind::constant;
    w.value = value;
    return w;
  }

  static waveform explicit_bits( std::vector<uint8_t> bits )
  {
    waveform w;
    w.what = kind::explicit_bits;
    w.bits = std::move( bits );
    return w;
  }
};

/*! \brief A stimulus: one waveform per primary input, realized into bit tracks.
 *
 * Tracks are materialized deterministically from (waveforms, num_cycles,
 * seed) so that identical parameters always give identical simulations.
 * `tracks[i][c]` is the value of input `i` during cycle `c`; the vector at
 * `c = 0` also establishes the input values of the non-counting
 * initialization cycle.
 */
struct stimulus
{
  uint32_t num_cycles = 0;
  uint64_t seed = 0;
  std::vector<std::string> input_names;
  std::vector<waveform> waves;
  std::vector<std::vector<uint8_t>> tracks;
  std::vector<std::string> warnings;

  uint64_t digest() const
  {
    auto h = detail::fnv1a64_init();
    h = detail::fnv1a64( h, &num_cycles, sizeof( num_cycles ) );
    for ( size_t i = 0; i < input_names.size(); ++i )
    {
      h = detail::fnv1a64( h, input_names[i].data(), input_names[i].size() );
      h = detail::fnv1a64( h, tracks[i].data(), tracks[i].size() );
    }
    return h;
  }
};

namespace detail
{

inline std::vector<uint8_t> realize_waveform( waveform const& w, uint32_t num_cycles,
                                              uint64_t seed, size_t ordinal )
{
  std::vector<uint8_t> bits( num_cycles, 0 );
  switch ( w.what )
  {
  case waveform::kind::toggle_every:
    for ( uint32_t c = 0; c < num_cycles; ++c )
    {
      bits[c] = static_cast<uint8_t>( ( c / w.period ) & 1u );
    }
    break;
  case waveform::kind::random_bits:
  {
    uint64_t state = seed ^ ( 0x9E3779B97F4A7C15ULL * static_cast<uint64_t>( ordinal + 1 ) );
    for ( uint32_t c = 0; c < num_cycles; ++c )
    {
      auto const u = static_cast<double>( splitmix64_next( state ) >> 11 ) * 0x1.0p-53;
      bits[c] = u < w.probability ? 1 : 0;
    }
    break;
  }
  case waveform::kind::constant:
    std::fill( bits.begin(), bits.end(), static_cast<uint8_t>( w.value != 0 ) );
    break;
  case waveform::kind::explicit_bits:
    if ( w.bits.size() != num_cycles )
    {
      throw validation_error( "explicit waveform length does not match cycle count" );
    }
    bits = w.bits;
    break;
  }
  return bits;
}

inline std::string lowercase( std::string s )
{
  std::transform( s.begin(), s.end(), s.begin(),
                  []( unsigned char c ) { return static_cast<char>( std::tolower( c ) ); } );
  return s;
}

inline bool looks_like_reset( std::string const& name )
{
  auto const lower = lowercase( name );
  return lower.rfind( "rst", 0 ) == 0 || lower.rfind( "reset", 0 ) == 0;
}

} /* namespace detail */

/*! \brief Builds a stimulus from explicit per-input waveforms and realizes the tracks. */
inline stimulus make_stimulus( std::vector<std::string> input_names, std::vector<waveform> waves,
                               uint32_t num_cycles, uint64_t seed )
{
  if ( input_names.size() != waves.size() )
  {
    throw validation_error( "every primary input needs exactly one waveform" );
  }
  stimulus stim;
  stim.num_cycles = num_cycles;
  stim.seed = seed;
  stim.input_names = std::move( input_names );
  stim.waves = std::move( waves );
  stim.tracks.reserve( stim.waves.size() );
  for ( size_t i = 0; i < stim.waves.size(); ++i )
  {
    stim.tracks.push_back( detail::realize_waveform( stim.waves[i], num_cycles, seed, i ) );
  }
  return stim;
}

/*! \brief Deterministic default stimulus for a netlist.
 *
 * Every primary input receives `random(p = 0.5)`, except inputs whose
 * name starts with `rst`/`reset` (case-insensitive), which are held
 * constant at their inactive level (1 for names ending in `n`, else 0).
 * If a non-reset input never toggles over the requested cycles, a
 * warning is recorded in the stimulus.
 */
inline stimulus generate_stimulus( netlist const& nl, uint32_t num_cycles, uint64_t seed )
{
  if ( num_cycles < 2 )
  {
    throw validation_error( "stimulus generation requires at least 2 cycles" );
  }
  std::vector<std::string> names;
  std::vector<waveform> waves;
  for ( auto const id : nl.inputs() )
  {
    auto const& name = nl.net_name( id );
    names.push_back( name );
    if ( detail::looks_like_reset( name ) )
    {
      auto const lower = detail::lowercase( name );
      waves.push_back( waveform::constant( lower.back() == 'n' ? 1 : 0 ) );
    }
    else
    {
      waves.push_back( waveform::random_bits( 0.5 ) );
    }
  }
  auto stim = make_stimulus( std::move( names ), std::move( waves ), num_cycles, seed );
  for ( size_t i = 0; i < stim.input_names.size(); ++i )
  {
    if ( stim.waves[i].what == waveform::kind::constant )
    {
      continue;
    }
    auto const& bits = stim.tracks[i];
    bool const toggles = std::adjacent_find( bits.begin(), bits.end(),
                                             std::not_equal_to<>() ) != bits.end();
    if ( !toggles )
    {
      stim.warnings.push_back( "input '" + stim.input_names[i] + "' never toggles" );
    }
  }
  return stim;
}

/*! \brief Parses a waveform override: `const0`, `const1`, `random[:p]`, `toggle[:k]`. */
inline waveform parse_waveform_spec( std::string const& spec )
{
  if ( spec == "const0" )
  {
    return waveform::constant( 0 );
  }
  if ( spec == "const1" )
  {
    return waveform::constant( 1 );
  }
  if ( spec == "random" )
  {
    return waveform::random_bits( 0.5 );
  }
  if ( spec.rfind( "random:", 0 ) == 0 )
  {
    return waveform::random_bits( std::stod( spec.substr( 7 ) ) );
  }
  if ( spec == "toggle" )
  {
    return waveform::toggle_every( 1 );
  }
  if ( spec.rfind( "toggle:", 0 ) == 0 )
  {
    return waveform::toggle_every( static_cast<uint32_t>( std::stoul( spec.substr( 7 ) ) ) );
  }
  throw validation_error( "unknown waveform specification '" + spec + "'" );
}

} /* namespace simopt */
