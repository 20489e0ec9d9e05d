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
  \file errors.hpp
  \brief Exception types shared across the library
*/

#pragma once

#include <stdexcept>
#include <string>

namespace simopt
{

/*! \brief Violation of a structural or semantic invariant. */
class validation_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Error in a textual input (BLIF, profile, config), with the offending
 * line and, where one is meaningful, the column. */
class parse_error : public std::runtime_error
{
public:
  parse_error( std::string const& message, unsigned line, unsigned column = 0 )
      : std::runtime_error( "line " + std::to_string( line ) +
                            ( column > 0 ? ", col " + std::to_string( column ) : "" ) + ": " +
                            message ),
        line_( line ), column_( column )
  {
  }

  unsigned line() const { return line_; }

  /*! \brief 1-based column, or 0 when the error has no single position. */
  unsigned column() const { return column_; }

private:
  unsigned line_;
  unsigned column_;
};

} /* namespace simopt */
