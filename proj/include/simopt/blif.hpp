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
  \file blif.hpp
  \brief Reader and writer for a single-model BLIF subset

  Supported directives: `.model`, `.inputs`, `.outputs`, `.names`,
  `.latch`, `.end`.  `#` begins a comment to end of line.  Cover rows
  with `-` are expanded to minterms at parse time; emission always
  writes ON-set covers in ascending minterm order.  Duplicated-driver
  capacitance annotations ride the comment channel as
  `# .dup <net> <units>` lines so they survive a file round trip; any
  other tool reading the file ignores them.
*/

#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "netlist.hpp"
#include "truth_table.hpp"

namespace simopt
{

namespace detail
{

inline std::vector<std::string> tokenize( std::string const& line )
{
  std::vector<std::string> tokens;
  std::istringstream iss( line );
  std::string tok;
  while ( iss >> tok )
  {
    tokens.push_back( tok );
  }
  return tokens;
}

struct pending_names
{
  unsigned line = 0;
  std::vector<std::string> signals; /* fanin names followed by the output name */
  std::vector<std::string> on_rows;
  std::vector<std::string> off_rows;
};

/* Expands one cover row recursively over its '-' positions. */
inline void expand_row( std::string const& row, uint32_t var, uint64_t minterm, truth_table& tt )
{
  if ( var == row.size() )
  {
    tt.set_bit( minterm );
    return;
  }
  if ( row[var] == '0' || row[var] == '-' )
  {
    expand_row( row, var + 1, minterm, tt );
  }
  if ( row[var] == '1' || row[var] == '-' )
  {
    expand_row( row, var + 1, minterm | ( uint64_t( 1 ) << var ), tt );
  }
}

inline truth_table cover_to_table( pending_names const& block )
{
  auto const num_vars = static_cast<uint32_t>( block.signals.size() - 1 );
  if ( num_vars > netlist::max_cell_arity )
  {
    throw parse_error( "cell arity exceeds 16 inputs", block.line );
  }
  truth_table on( num_vars );
  for ( auto const& row : block.on_rows )
  {
    expand_row( row, 0, 0, on );
  }
  truth_table off( num_vars );
  for ( auto const& row : block.off_rows )
  {
    expand_row( row, 0, 0, off );
  }
  /* unlisted rows are 0; a '0'-output row only asserts that explicitly */
  for ( uint64_t m = 0; m < on.num_bits(); ++m )
  {
    if ( on.get_bit( m ) && off.get_bit( m ) )
    {
      throw parse_error( "conflicting cover rows for one minterm", block.line );
    }
  }
  return on;
}

inline void finish_names( netlist& nl, pending_names& block, bool& active )
{
  if ( !active )
  {
    return;
  }
  auto table = cover_to_table( block );
  std::vector<net_id> fanins;
  fanins.reserve( block.signals.size() - 1 );
  for ( size_t i = 0; i + 1 < block.signals.size(); ++i )
  {
    fanins.push_back( nl.ensure_net( block.signals[i] ) );
  }
  auto const fanout = nl.ensure_net( block.signals.back() );
  try
  {
    nl.add_cell( std::move( fanins ), fanout, std::move( table ) );
  }
  catch ( validation_error const& e )
  {
    throw parse_error( e.what(), block.line );
  }
  block = {};
  active = false;
}

} /* namespace detail */

/*! \brief Parses a BLIF document into a validated netlist. */
inline netlist parse_blif( std::istream& in )
{
  netlist nl;
  bool saw_model = false;
  bool saw_end = false;
  bool in_names = false;
  detail::pending_names block;
  std::vector<std::pair<std::string, uint32_t>> dup_notes;

  std::string raw;
  unsigned line_no = 0;
  while ( std::getline( in, raw ) )
  {
    ++line_no;
    std::string line = raw;

    /* comment handling; dup annotations are recognized on whole-comment lines */
    auto const first = line.find_first_not_of( " \t\r" );
    if ( first != std::string::npos && line[first] == '#' )
    {
      auto const tokens = detail::tokenize( line.substr( first + 1 ) );
      if ( tokens.size() == 3 && tokens[0] == ".dup" )
      {
        uint32_t units = 0;
        try
        {
          units = static_cast<uint32_t>( std::stoul( tokens[2] ) );
        }
        catch ( std::exception const& )
        {
          throw parse_error( "malformed .dup annotation", line_no );
        }
        dup_notes.emplace_back( tokens[1], units );
      }
      continue;
    }
    if ( auto const hash = line.find( '#' ); hash != std::string::npos )
    {
      line.erase( hash );
    }
    while ( !line.empty() && line.find_last_not_of( " \t\r" ) != std::string::npos &&
            line[line.find_last_not_of( " \t\r" )] == '\\' && std::getline( in, raw ) )
    {
      ++line_no;
      line.erase( line.find_last_not_of( " \t\r" ) );
      if ( auto const hash = raw.find( '#' ); hash != std::string::npos )
      {
        raw.erase( hash );
      }
      line += ' ';
      line += raw;
    }

    auto tokens = detail::tokenize( line );
    if ( tokens.empty() )
    {
      continue;
    }

    if ( saw_end )
    {
      throw parse_error( "content after .end (hierarchical BLIF is not supported)", line_no );
    }

    auto const& head = tokens[0];
    if ( head[0] != '.' )
    {
      /* cover row inside a .names block */
      if ( !in_names )
      {
        throw parse_error( "unexpected token '" + head + "'", line_no );
      }
      auto const num_vars = block.signals.size() - 1;
      std::string inputs_part;
      char output_char;
      if ( tokens.size() == 2 )
      {
        inputs_part = tokens[0];
        output_char = tokens[1].size() == 1 ? tokens[1][0] : '?';
      }
      else if ( tokens.size() == 1 && num_vars == 0 )
      {
        inputs_part = "";
        output_char = tokens[0].size() == 1 ? tokens[0][0] : '?';
      }
      else
      {
        throw parse_error( "malformed cover row", line_no );
      }
      if ( inputs_part.size() != num_vars )
      {
        throw parse_error( "cover row width does not match cell arity", line_no );
      }
      for ( size_t i = 0; i < inputs_part.size(); ++i )
      {
        if ( inputs_part[i] != '0' && inputs_part[i] != '1' && inputs_part[i] != '-' )
        {
          auto const start = line.find( inputs_part );
          auto const column =
              start == std::string::npos ? 0u : static_cast<unsigned>( start + i + 1 );
          throw parse_error( "invalid character in cover row", line_no, column );
        }
      }
      if ( output_char == '1' )
      {
        block.on_rows.push_back( inputs_part );
      }
      else if ( output_char == '0' )
      {
        block.off_rows.push_back( inputs_part );
      }
      else
      {
        throw parse_error( "cover row output must be 0 or 1", line_no );
      }
      continue;
    }

    detail::finish_names( nl, block, in_names );

    if ( head == ".model" )
    {
      if ( saw_model )
      {
        throw parse_error( "multiple .model directives (hierarchical BLIF is not supported)", line_no );
      }
      if ( tokens.size() != 2 )
      {
        throw parse_error( ".model expects exactly one name", line_no );
      }
      nl.set_name( tokens[1] );
      saw_model = true;
    }
    else if ( head == ".inputs" )
    {
      for ( size_t i = 1; i < tokens.size(); ++i )
      {
        try
        {
          nl.add_input( tokens[i] );
        }
        catch ( validation_error const& e )
        {
          throw parse_error( e.what(), line_no );
        }
      }
    }
    else if ( head == ".outputs" )
    {
      for ( size_t i = 1; i < tokens.size(); ++i )
      {
        nl.add_output( nl.ensure_net( tokens[i] ) );
      }
    }
    else if ( head == ".names" )
    {
      if ( tokens.size() < 2 )
      {
        throw parse_error( ".names expects at least an output name", line_no );
      }
      block = detail::pending_names{};
      block.line = line_no;
      block.signals.assign( tokens.begin() + 1, tokens.end() );
      in_names = true;
    }
    else if ( head == ".latch" )
    {
      /* .latch <in> <out> [<type> <ctrl>] [<init>]; only rising-edge
       * single-clock semantics are simulated, so type/ctrl are accepted
       * and ignored. */
      if ( tokens.size() < 3 || tokens.size() > 6 )
      {
        throw parse_error( ".latch expects 2 to 5 arguments", line_no );
      }
      auto const parse_init = [&]( std::string const& tok ) -> latch_init {
        if ( tok == "0" )
        {
          return latch_init::zero;
        }
        if ( tok == "1" )
        {
          return latch_init::one;
        }
        if ( tok == "2" || tok == "3" )
        {
          return latch_init::unknown;
        }
        throw parse_error( "invalid latch init value '" + tok + "'", line_no );
      };
      latch_init init = latch_init::unknown;
      if ( tokens.size() == 4 )
      {
        init = parse_init( tokens[3] );
      }
      else if ( tokens.size() == 6 )
      {
        init = parse_init( tokens[5] );
      }
      try
      {
        nl.add_latch( nl.ensure_net( tokens[1] ), nl.ensure_net( tokens[2] ), init );
      }
      catch ( validation_error const& e )
      {
        throw parse_error( e.what(), line_no );
      }
    }
    else if ( head == ".end" )
    {
      saw_end = true;
    }
    else
    {
      throw parse_error( "unsupported directive '" + head + "'", line_no );
    }
  }
  detail::finish_names( nl, block, in_names );

  for ( auto const& [name, units] : dup_notes )
  {
    auto const id = nl.find_net( name );
    if ( !id )
    {
      throw parse_error( ".dup annotation references unknown net '" + name + "'", line_no );
    }
    nl.add_dup_unit( *id, units );
  }

  try
  {
    nl.validate();
  }
  catch ( validation_error const& e )
  {
    throw parse_error( e.what(), line_no );
  }
  return nl;
}

inline netlist parse_blif( std::string const& text )
{
  std::istringstream in( text );
  return parse_blif( in );
}

/*! \brief Emits a netlist as BLIF; ON-set covers only, ascending minterm order. */
inline void emit_blif( netlist const& nl, std::ostream& out )
{
  out << ".model " << ( nl.name().empty() ? "top" : nl.name() ) << '\n';
  if ( !nl.inputs().empty() )
  {
    out << ".inputs";
    for ( auto const id : nl.inputs() )
    {
      out << ' ' << nl.net_name( id );
    }
    out << '\n';
  }
  if ( !nl.outputs().empty() )
  {
    out << ".outputs";
    for ( auto const id : nl.outputs() )
    {
      out << ' ' << nl.net_name( id );
    }
    out << '\n';
  }
  for ( uint32_t i = 0; i < nl.num_latches(); ++i )
  {
    auto const& l = nl.latch_at( i );
    out << ".latch " << nl.net_name( l.data_in ) << ' ' << nl.net_name( l.data_out ) << ' '
        << static_cast<unsigned>( l.init ) << '\n';
  }
  for ( uint32_t i = 0; i < nl.num_cells(); ++i )
  {
    auto const& c = nl.cell_at( i );
    out << ".names";
    for ( auto const f : c.fanins )
    {
      out << ' ' << nl.net_name( f );
    }
    out << ' ' << nl.net_name( c.fanout ) << '\n';
    for ( uint64_t m = 0; m < c.function.num_bits(); ++m )
    {
      if ( !c.function.get_bit( m ) )
      {
        continue;
      }
      if ( c.fanins.empty() )
      {
        out << "1\n";
        continue;
      }
      std::string row( c.fanins.size(), '0' );
      for ( uint32_t v = 0; v < c.fanins.size(); ++v )
      {
        if ( ( m >> v ) & 1 )
        {
          row[v] = '1';
        }
      }
      out << row << " 1\n";
    }
  }
  std::set<std::string> annotated;
  for ( net_id id = 0; id < nl.num_nets(); ++id )
  {
    if ( nl.net( id ).dup_units > 0 )
    {
      annotated.insert( nl.net_name( id ) );
    }
  }
  for ( auto const& name : annotated )
  {
    out << "# .dup " << name << ' ' << nl.net( *nl.find_net( name ) ).dup_units << '\n';
  }
  out << ".end\n";
}

inline std::string emit_blif( netlist const& nl )
{
  std::ostringstream out;
  emit_blif( nl, out );
  return out.str();
}

} /* namespace simopt */
