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
  \file truth_table.hpp
  \brief Bit-packed Boolean functions with Shannon cofactor and
         truth-table decomposition operations
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace simopt
{

/*! \brief Bit-packed truth table over at most 16 variables.
 *
 * Minterm `m` (the assignment with variable `i` set to bit `i` of `m`)
 * is stored at bit position `m`.  Storage is an array of machine words
 * of width `W = 8 * sizeof(Word)`; the number of words is
 * `max(1, 2^n / W)`.  Bits at positions >= 2^n in the last word are
 * kept at zero by every operation.
 */
template<typename Word = uint64_t>
class basic_truth_table
{
  static_assert( std::is_unsigned_v<Word>, "word type must be unsigned" );
  static_assert( std::has_single_bit( static_cast<unsigned>( std::numeric_limits<Word>::digits ) ) &&
                     std::numeric_limits<Word>::digits >= 8,
                 "word width must be a power of two >= 8" );

public:
  static constexpr uint32_t max_num_vars = 16u;
  static constexpr uint32_t word_bits = static_cast<uint32_t>( std::numeric_limits<Word>::digits );

  /*! \brief Constructs the constant-0 function on `num_vars` variables. */
  explicit basic_truth_table( uint32_t num_vars = 0u )
      : num_vars_( num_vars )
  {
    if ( num_vars > max_num_vars )
    {
      throw std::invalid_argument( "truth table supports at most 16 variables" );
    }
    words_.assign( compute_num_words( num_vars ), Word( 0 ) );
  }

  uint32_t num_vars() const { return num_vars_; }

  /*! \brief Number of minterms, i.e. 2^num_vars. */
  uint64_t num_bits() const { return uint64_t( 1 ) << num_vars_; }

  uint32_t num_words() const { return static_cast<uint32_t>( words_.size() ); }

  std::span<Word const> words() const { return { words_.data(), words_.size() }; }

  bool get_bit( uint64_t minterm ) const
  {
    check_minterm( minterm );
    return ( words_[minterm / word_bits] >> ( minterm % word_bits ) ) & Word( 1 );
  }

  void set_bit( uint64_t minterm, bool value = true )
  {
    check_minterm( minterm );
    Word const mask = Word( 1 ) << ( minterm % word_bits );
    if ( value )
    {
      words_[minterm / word_bits] |= mask;
    }
    else
    {
      words_[minterm / word_bits] &= static_cast<Word>( ~mask );
    }
  }

  uint64_t count_ones() const
  {
    uint64_t count = 0;
    for ( auto const& w : words_ )
    {
      count += static_cast<uint64_t>( std::popcount( w ) );
    }
    return count;
  }

  /*! \brief Evaluates the function on one input assignment.
   *
   * `assignment[i]` is the value of variable `i`; the length must equal
   * `num_vars()`.  Returns the bit at minterm `sum assignment[i] * 2^i`.
   */
  bool eval( std::span<uint8_t const> assignment ) const
  {
    if ( assignment.size() != num_vars_ )
    {
      throw std::invalid_argument( "assignment length does not match variable count" );
    }
    uint64_t minterm = 0;
    for ( uint32_t i = 0; i < num_vars_; ++i )
    {
      minterm |= static_cast<uint64_t>( assignment[i] != 0 ) << i;
    }
    return get_bit( minterm );
  }

  bool operator==( basic_truth_table const& other ) const
  {
    return num_vars_ == other.num_vars_ && words_ == other.words_;
  }

  bool operator!=( basic_truth_table const& other ) const { return !( *this == other ); }

  /*! \brief Hexadecimal literal, most-significant minterm first (e.g. "E8" for MAJ3). */
  std::string to_hex() const
  {
    static constexpr char digits[] = "0123456789ABCDEF";
    auto const n_digits = std::max<uint64_t>( 1, num_bits() / 4 );
    std::string hex( n_digits, '0' );
    for ( uint64_t d = 0; d < n_digits; ++d )
    {
      uint32_t nibble = 0;
      for ( uint32_t b = 0; b < 4; ++b )
      {
        uint64_t const pos = 4 * ( n_digits - 1 - d ) + b;
        if ( pos < num_bits() && get_bit( pos ) )
        {
          nibble |= 1u << b;
        }
      }
      hex[d] = digits[nibble];
    }
    return hex;
  }

  /*! \brief Parses the hexadecimal literal produced by `to_hex`. */
  static basic_truth_table from_hex( uint32_t num_vars, std::string_view hex )
  {
    basic_truth_table tt( num_vars );
    auto const n_digits = std::max<uint64_t>( 1, tt.num_bits() / 4 );
    if ( hex.size() != n_digits )
    {
      throw std::invalid_argument( "hex literal has wrong length for variable count" );
    }
    for ( uint64_t d = 0; d < n_digits; ++d )
    {
      auto const c = hex[d];
      uint32_t nibble;
      if ( c >= '0' && c <= '9' )
      {
        nibble = static_cast<uint32_t>( c - '0' );
      }
      else if ( c >= 'A' && c <= 'F' )
      {
        nibble = static_cast<uint32_t>( c - 'A' ) + 10u;
      }
      else if ( c >= 'a' && c <= 'f' )
      {
        nibble = static_cast<uint32_t>( c - 'a' ) + 10u;
      }
      else
      {
        throw std::invalid_argument( "invalid hexadecimal digit in truth table literal" );
      }
      for ( uint32_t b = 0; b < 4; ++b )
      {
        if ( !( nibble & ( 1u << b ) ) )
        {
          continue;
        }
        uint64_t const pos = 4 * ( n_digits - 1 - d ) + b;
        if ( pos >= tt.num_bits() )
        {
          throw std::invalid_argument( "hex literal sets bits beyond 2^n" );
        }
        tt.set_bit( pos );
      }
    }
    return tt;
  }

  /*! \brief Builds a table from a list of ON-set minterms. */
  static basic_truth_table from_minterms( uint32_t num_vars, std::initializer_list<uint64_t> minterms )
  {
    basic_truth_table tt( num_vars );
    for ( auto m : minterms )
    {
      tt.set_bit( m );
    }
    return tt;
  }

private:
  static uint32_t compute_num_words( uint32_t num_vars )
  {
    return std::max<uint32_t>( 1u, static_cast<uint32_t>( ( uint64_t( 1 ) << num_vars ) / word_bits ) );
  }

  void check_minterm( uint64_t minterm ) const
  {
    if ( minterm >= num_bits() )
    {
      throw std::out_of_range( "minterm index out of range" );
    }
  }

  uint32_t num_vars_;
  std::vector<Word> words_;
};

using truth_table = basic_truth_table<>;

/*! \brief Shannon cofactor of `src` with variable at position `p` fixed to `v`.
 *
 * Scans every minterm of `src`; a set minterm `m` with `(m >> p) & 1 == v`
 * contributes the bit `m'` to the result, where `m'` is `m` with bit `p`
 * removed (lower bits kept, higher bits shifted down one position).  The
 * result has one variable fewer than `src`.
 */
template<typename Word>
basic_truth_table<Word> shannon_cofactor( basic_truth_table<Word> const& src, uint32_t p, bool v )
{
  if ( src.num_vars() == 0 )
  {
    throw std::invalid_argument( "cannot cofactor a 0-variable table" );
  }
  if ( p >= src.num_vars() )
  {
    throw std::out_of_range( "cofactor position out of range" );
  }
  basic_truth_table<Word> dst( src.num_vars() - 1 );
  uint64_t const low_mask = ( uint64_t( 1 ) << p ) - 1;
  for ( uint64_t m = 0; m < src.num_bits(); ++m )
  {
    if ( !src.get_bit( m ) )
    {
      continue;
    }
    if ( ( ( m >> p ) & 1 ) != static_cast<uint64_t>( v ) )
    {
      continue;
    }
    uint64_t const reduced = ( m & low_mask ) | ( ( m >> ( p + 1 ) ) << p );
    dst.set_bit( reduced );
  }
  return dst;
}

/*! \brief Concatenates two cofactors into one table with one extra variable.
 *
 * The lower 2^(n-1) bits of the result are `t0`, the upper half is `t1`;
 * the recombined variable becomes the new most-significant variable,
 * selecting `t1` when 1 and `t0` when 0.
 */
template<typename Word>
basic_truth_table<Word> concat_cofactors( basic_truth_table<Word> const& t1, basic_truth_table<Word> const& t0 )
{
  if ( t1.num_vars() != t0.num_vars() )
  {
    throw std::invalid_argument( "cofactor tables must have equal variable counts" );
  }
  basic_truth_table<Word> dst( t1.num_vars() + 1 );
  uint64_t const half = t0.num_bits();
  for ( uint64_t m = 0; m < half; ++m )
  {
    if ( t0.get_bit( m ) )
    {
      dst.set_bit( m );
    }
    if ( t1.get_bit( m ) )
    {
      dst.set_bit( half + m );
    }
  }
  return dst;
}

/*! \brief A pair of variable-index lists describing a left/right cut. */
struct cut
{
  std::vector<uint32_t> left_vars;
  std::vector<uint32_t> right_vars;
};

enum class cut_side
{
  left,
  right
};

/*! \brief First variable of `side` that does not occur on the opposite side.
 *
 * Returns `std::nullopt` when every index of the chosen side is shared,
 * i.e. there is nothing to split.
 */
inline std::optional<uint32_t> find_split_var( cut const& c, cut_side side )
{
  auto const& own = side == cut_side::right ? c.right_vars : c.left_vars;
  auto const& other = side == cut_side::right ? c.left_vars : c.right_vars;
  for ( auto const v : own )
  {
    if ( std::find( other.begin(), other.end(), v ) == other.end() )
    {
      return v;
    }
  }
  return std::nullopt;
}

/*! \brief One applied split: which variable, at which table position, and its cofactors. */
template<typename Word = uint64_t>
struct decompose_split
{
  cut_side side;
  uint32_t var;      /* global variable index from the cut list */
  uint32_t position; /* cofactor position within the table */
  basic_truth_table<Word> t1;
  basic_truth_table<Word> t0;
};

/*! \brief Record of a decomposition: applied splits and resulting variable binding.
 *
 * `binding[j]` is the input-table position of the variable that sits at
 * position `j` of the output table.  With no splits applied the binding is
 * the identity and the output equals the input.
 */
template<typename Word = uint64_t>
struct decompose_trace
{
  std::vector<decompose_split<Word>> splits;
  std::vector<uint32_t> binding;

  bool empty() const { return splits.empty(); }
};

namespace detail
{

/* Moving position p to most-significant shifts higher positions down one. */
inline std::vector<uint32_t> split_permutation( uint32_t num_vars, uint32_t p )
{
  std::vector<uint32_t> perm( num_vars );
  for ( uint32_t j = 0; j + 1 < num_vars; ++j )
  {
    perm[j] = j < p ? j : j + 1;
  }
  perm[num_vars - 1] = p;
  return perm;
}

} /* namespace detail */

/*! \brief Shannon-decomposes a truth table guided by a cut pair and a toggle counter.
 *
 * When `counter <= threshold` the activity guard rejects and the table is
 * returned unchanged with an empty trace.  Otherwise the right side is
 * processed once: the first right-cut variable absent from the left cut is
 * split by computing both Shannon cofactors at its position and
 * recombining them with `concat_cofactors`, which promotes the split
 * variable to most-significant.  The left side is then processed once the
 * same way with the roles of the lists swapped.  The returned table equals
 * the input pointwise under the variable binding recorded in the trace.
 */
template<typename Word>
std::pair<basic_truth_table<Word>, decompose_trace<Word>>
truth_table_decompose( basic_truth_table<Word> const& table, cut const& c, uint64_t counter, uint64_t threshold )
{
  decompose_trace<Word> trace;
  trace.binding.resize( table.num_vars() );
  for ( uint32_t j = 0; j < table.num_vars(); ++j )
  {
    trace.binding[j] = j;
  }

  if ( counter <= threshold )
  {
    return { table, trace };
  }

  auto result = table;
  auto const apply_side = [&]( cut_side side ) {
    auto const split = find_split_var( c, side );
    if ( !split )
    {
      return;
    }
    auto const& own = side == cut_side::right ? c.right_vars : c.left_vars;
    auto const pos = static_cast<uint32_t>(
        std::find( own.begin(), own.end(), *split ) - own.begin() );
    auto const t0 = shannon_cofactor( result, pos, false );
    auto const t1 = shannon_cofactor( result, pos, true );
    result = concat_cofactors( t1, t0 );
    trace.splits.push_back( { side, *split, pos, t1, t0 } );

    auto const perm = detail::split_permutation( result.num_vars(), pos );
    std::vector<uint32_t> updated( trace.binding.size() );
    for ( uint32_t j = 0; j < updated.size(); ++j )
    {
      updated[j] = trace.binding[perm[j]];
    }
    trace.binding = std::move( updated );
  };

  apply_side( cut_side::right );
  apply_side( cut_side::left );
  return { result, trace };
}

} /* namespace simopt */
