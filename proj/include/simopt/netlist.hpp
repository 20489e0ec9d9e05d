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
  \file netlist.hpp
  \brief LUT-level netlist: cells, latches, primary I/Os and named nets

  The netlist is the graph substrate every other module operates on.
  Construction enforces driver uniqueness eagerly; `validate()` checks
  the full invariant set (including combinational acyclicity) and is run
  after parsing and after every optimization pass.
*/

#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "truth_table.hpp"

namespace simopt
{

using net_id = uint32_t;
inline constexpr net_id null_net = std::numeric_limits<net_id>::max();

enum class latch_init : uint8_t
{
  zero = 0,
  one = 1,
  unknown = 3
};

enum class driver_kind : uint8_t
{
  none,
  primary_input,
  cell,
  latch
};

struct net_info
{
  std::string name;
  driver_kind driver = driver_kind::none;
  uint32_t driver_index = 0;
  /*! \brief Number of duplicated-driver copies charged to this net by the power model. */
  uint32_t dup_units = 0;
};

/*! \brief A k-input LUT cell; variable `i` of `function` is bound to `fanins[i]`. */
struct cell
{
  std::vector<net_id> fanins;
  net_id fanout = null_net;
  truth_table function;
};

/*! \brief Rising-edge latch on the single global clock. */
struct latch
{
  net_id data_in = null_net;
  net_id data_out = null_net;
  latch_init init = latch_init::unknown;
};

/*! \brief A sink reading a net: a cell fanin, a latch data input, or a primary output. */
struct sink_ref
{
  enum class kind : uint8_t
  {
    cell,
    latch,
    output
  };
  kind what;
  uint32_t index;

  bool operator==( sink_ref const& other ) const = default;
};

class netlist
{
public:
  static constexpr uint32_t max_cell_arity = 16u;

  netlist() = default;
  explicit netlist( std::string name ) : name_( std::move( name ) ) {}

  std::string const& name() const { return name_; }
  void set_name( std::string name ) { name_ = std::move( name ); }

  uint32_t num_nets() const { return static_cast<uint32_t>( nets_.size() ); }
  uint32_t num_cells() const { return static_cast<uint32_t>( cells_.size() ); }
  uint32_t num_latches() const { return static_cast<uint32_t>( latches_.size() ); }

  std::vector<net_id> const& inputs() const { return inputs_; }
  std::vector<net_id> const& outputs() const { return outputs_; }
  cell const& cell_at( uint32_t index ) const { return cells_.at( index ); }
  latch const& latch_at( uint32_t index ) const { return latches_.at( index ); }
  net_info const& net( net_id id ) const { return nets_.at( id ); }
  std::string const& net_name( net_id id ) const { return nets_.at( id ).name; }

  /*! \brief Returns the net with the given name, creating an undriven one if absent. */
  net_id ensure_net( std::string const& name )
  {
    if ( auto const it = name_to_net_.find( name ); it != name_to_net_.end() )
    {
      return it->second;
    }
    auto const id = static_cast<net_id>( nets_.size() );
    nets_.push_back( net_info{ name } );
    name_to_net_.emplace( name, id );
    return id;
  }

  std::optional<net_id> find_net( std::string const& name ) const
  {
    auto const it = name_to_net_.find( name );
    if ( it == name_to_net_.end() )
    {
      return std::nullopt;
    }
    return it->second;
  }

  /*! \brief Derives an unused net name from `base` by appending a counter if needed. */
  std::string fresh_net_name( std::string const& base ) const
  {
    if ( !name_to_net_.count( base ) )
    {
      return base;
    }
    for ( uint32_t i = 2;; ++i )
    {
      auto candidate = base + "_" + std::to_string( i );
      if ( !name_to_net_.count( candidate ) )
      {
        return candidate;
      }
    }
  }

  net_id add_input( std::string const& name )
  {
    auto const id = ensure_net( name );
    claim_driver( id, driver_kind::primary_input, static_cast<uint32_t>( inputs_.size() ) );
    inputs_.push_back( id );
    return id;
  }

  void add_output( net_id id )
  {
    check_net( id );
    outputs_.push_back( id );
  }

  uint32_t add_cell( std::vector<net_id> fanins, net_id fanout, truth_table function )
  {
    if ( fanins.size() > max_cell_arity )
    {
      throw validation_error( "cell arity exceeds 16 inputs" );
    }
    if ( function.num_vars() != fanins.size() )
    {
      throw validation_error( "cell function arity does not match fanin count" );
    }
    for ( auto const f : fanins )
    {
      check_net( f );
    }
    check_net( fanout );
    auto const index = static_cast<uint32_t>( cells_.size() );
    claim_driver( fanout, driver_kind::cell, index );
    cells_.push_back( cell{ std::move( fanins ), fanout, std::move( function ) } );
    return index;
  }

  uint32_t add_latch( net_id data_in, net_id data_out, latch_init init )
  {
    check_net( data_in );
    check_net( data_out );
    auto const index = static_cast<uint32_t>( latches_.size() );
    claim_driver( data_out, driver_kind::latch, index );
    latches_.push_back( latch{ data_in, data_out, init } );
    return index;
  }

  /*! \brief Replaces the cell in slot `index`, keeping cell ids of all other cells stable. */
  void replace_cell( uint32_t index, std::vector<net_id> fanins, net_id fanout, truth_table function )
  {
    if ( index >= cells_.size() )
    {
      throw std::out_of_range( "cell index out of range" );
    }
    if ( fanins.size() > max_cell_arity )
    {
      throw validation_error( "cell arity exceeds 16 inputs" );
    }
    if ( function.num_vars() != fanins.size() )
    {
      throw validation_error( "cell function arity does not match fanin count" );
    }
    auto& c = cells_[index];
    release_driver( c.fanout );
    c.fanins = std::move( fanins );
    c.function = std::move( function );
    c.fanout = fanout;
    claim_driver( fanout, driver_kind::cell, index );
  }

  /*! \brief Redirects one sink from net `from` to net `to` (all pins of that sink). */
  void rewire_sink( sink_ref sink, net_id from, net_id to )
  {
    check_net( from );
    check_net( to );
    switch ( sink.what )
    {
    case sink_ref::kind::cell:
      for ( auto& f : cells_.at( sink.index ).fanins )
      {
        if ( f == from )
        {
          f = to;
        }
      }
      break;
    case sink_ref::kind::latch:
      if ( latches_.at( sink.index ).data_in == from )
      {
        latches_[sink.index].data_in = to;
      }
      break;
    case sink_ref::kind::output:
      if ( outputs_.at( sink.index ) == from )
      {
        outputs_[sink.index] = to;
      }
      break;
    }
  }

  void add_dup_unit( net_id id, uint32_t units = 1 )
  {
    check_net( id );
    nets_[id].dup_units += units;
  }

  /*! \brief Distinct sinks reading `id`: cells, then latches, then output slots, each ascending. */
  std::vector<sink_ref> sinks( net_id id ) const
  {
    check_net( id );
    std::vector<sink_ref> result;
    for ( uint32_t i = 0; i < cells_.size(); ++i )
    {
      for ( auto const f : cells_[i].fanins )
      {
        if ( f == id )
        {
          result.push_back( { sink_ref::kind::cell, i } );
          break;
        }
      }
    }
    for ( uint32_t i = 0; i < latches_.size(); ++i )
    {
      if ( latches_[i].data_in == id )
      {
        result.push_back( { sink_ref::kind::latch, i } );
      }
    }
    for ( uint32_t i = 0; i < outputs_.size(); ++i )
    {
      if ( outputs_[i] == id )
      {
        result.push_back( { sink_ref::kind::output, i } );
      }
    }
    return result;
  }

  /*! \brief Number of distinct cell/latch/primary-output sinks reading `id`. */
  uint32_t fanout( net_id id ) const
  {
    return static_cast<uint32_t>( sinks( id ).size() );
  }

  /*! \brief Number of cells with at least one input; constant cells are excluded. */
  uint32_t area_luts() const
  {
    uint32_t count = 0;
    for ( auto const& c : cells_ )
    {
      if ( !c.fanins.empty() )
      {
        ++count;
      }
    }
    return count;
  }

  /*! \brief Cell indices in topological order; throws on a combinational cycle. */
  std::vector<uint32_t> topo_order() const
  {
    std::vector<uint32_t> indegree( cells_.size(), 0 );
    std::vector<std::vector<uint32_t>> readers( nets_.size() );
    for ( uint32_t i = 0; i < cells_.size(); ++i )
    {
      for ( auto const f : cells_[i].fanins )
      {
        if ( nets_[f].driver == driver_kind::cell )
        {
          ++indegree[i];
          readers[f].push_back( i );
        }
      }
    }
    std::deque<uint32_t> ready;
    for ( uint32_t i = 0; i < cells_.size(); ++i )
    {
      if ( indegree[i] == 0 )
      {
        ready.push_back( i );
      }
    }
    std::vector<uint32_t> order;
    order.reserve( cells_.size() );
    while ( !ready.empty() )
    {
      auto const i = ready.front();
      ready.pop_front();
      order.push_back( i );
      for ( auto const r : readers[cells_[i].fanout] )
      {
        if ( --indegree[r] == 0 )
        {
          ready.push_back( r );
        }
      }
    }
    if ( order.size() != cells_.size() )
    {
      throw validation_error( "combinational cycle detected" );
    }
    return order;
  }

  bool is_combinational() const { return latches_.empty(); }

  /*! \brief Checks all structural invariants; throws `validation_error` on the first violation. */
  void validate() const
  {
    for ( net_id id = 0; id < nets_.size(); ++id )
    {
      if ( nets_[id].driver == driver_kind::none )
      {
        throw validation_error( "net '" + nets_[id].name + "' has no driver" );
      }
    }
    for ( auto const& c : cells_ )
    {
      if ( c.function.num_vars() != c.fanins.size() )
      {
        throw validation_error( "cell function arity does not match fanin count" );
      }
    }
    for ( uint32_t i = 0; i < latches_.size(); ++i )
    {
      auto const& info = nets_[latches_[i].data_out];
      if ( info.driver != driver_kind::latch || info.driver_index != i )
      {
        throw validation_error( "latch output '" + info.name + "' is not driven by its latch" );
      }
    }
    topo_order();
  }

private:
  void check_net( net_id id ) const
  {
    if ( id >= nets_.size() )
    {
      throw std::out_of_range( "unknown net id" );
    }
  }

  void claim_driver( net_id id, driver_kind kind, uint32_t index )
  {
    check_net( id );
    if ( nets_[id].driver != driver_kind::none )
    {
      throw validation_error( "net '" + nets_[id].name + "' has multiple drivers" );
    }
    nets_[id].driver = kind;
    nets_[id].driver_index = index;
  }

  void release_driver( net_id id )
  {
    check_net( id );
    nets_[id].driver = driver_kind::none;
    nets_[id].driver_index = 0;
  }

  std::string name_;
  std::vector<net_id> inputs_;
  std::vector<net_id> outputs_;
  std::vector<cell> cells_;
  std::vector<latch> latches_;
  std::vector<net_info> nets_;
  std::unordered_map<std::string, net_id> name_to_net_;
};

} /* namespace simopt */
