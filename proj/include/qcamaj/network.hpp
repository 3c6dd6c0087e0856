/* qcamaj: majority logic toolkit for quantum-dot cellular automata
 * Copyright (C) 2026  qcamaj contributors
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
  \file network.hpp
  \brief Shared-node networks of 3- and 5-input majority gates and inverters

  A network is a topologically ordered node list: every fanin refers to an
  earlier node, so acyclicity holds by construction.  Inverters are explicit
  nodes (not complemented edges) so that the inverter count of a design is a
  plain census of its nodes.
*/

#pragma once

#include "errors.hpp"
#include "truth_table.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace qcamaj
{

using node_index = uint32_t;

enum class node_kind : uint8_t
{
  input,
  constant,
  inverter,
  maj3,
  maj5
};

inline constexpr uint32_t fanin_count( node_kind kind ) noexcept
{
  switch ( kind )
  {
  case node_kind::inverter:
    return 1u;
  case node_kind::maj3:
    return 3u;
  case node_kind::maj5:
    return 5u;
  default:
    return 0u;
  }
}

inline std::string to_string( node_kind kind )
{
  switch ( kind )
  {
  case node_kind::input:
    return "input";
  case node_kind::constant:
    return "const";
  case node_kind::inverter:
    return "not";
  case node_kind::maj3:
    return "maj3";
  case node_kind::maj5:
    return "maj5";
  }
  return "?";
}

struct node
{
  node_kind kind{node_kind::constant};

  /* variable index for inputs, 0/1 for constants, unused otherwise */
  uint32_t value{0u};

  std::array<node_index, 5u> fanins{};

  std::span<node_index const> children() const noexcept
  {
    return {fanins.data(), fanin_count( kind )};
  }

  bool is_majority() const noexcept
  {
    return kind == node_kind::maj3 || kind == node_kind::maj5;
  }

  friend bool operator==( node const&, node const& ) = default;
};

/*! \brief Immutable majority-inverter network with one designated output.

  Several networks built from one `network_builder` share an identical node
  list and differ only in their output; `cost` over a span of outputs counts
  the shared nodes once.
*/
class network
{
public:
  network( uint32_t num_vars, std::vector<node> nodes, node_index output )
      : num_vars_( num_vars ), nodes_( std::move( nodes ) ), output_( output )
  {
    if ( num_vars_ == 0u )
    {
      throw std::invalid_argument( "network needs at least one variable" );
    }
    if ( nodes_.empty() )
    {
      throw std::invalid_argument( "network has no nodes" );
    }
    for ( node_index i = 0u; i < nodes_.size(); ++i )
    {
      auto const& n = nodes_[i];
      if ( n.kind == node_kind::input && n.value >= num_vars_ )
      {
        throw std::invalid_argument( "node " + std::to_string( i ) + " reads variable " +
                                     std::to_string( n.value ) + " of " + std::to_string( num_vars_ ) );
      }
      if ( n.kind == node_kind::constant && n.value > 1u )
      {
        throw std::invalid_argument( "node " + std::to_string( i ) + " has constant value other than 0/1" );
      }
      for ( auto c : n.children() )
      {
        if ( c >= i )
        {
          throw std::invalid_argument( "node " + std::to_string( i ) + " refers to later node " + std::to_string( c ) );
        }
      }
    }
    if ( output_ >= nodes_.size() )
    {
      throw std::invalid_argument( "output refers to missing node " + std::to_string( output_ ) );
    }
  }

  uint32_t num_vars() const noexcept
  {
    return num_vars_;
  }

  std::size_t size() const noexcept
  {
    return nodes_.size();
  }

  std::vector<node> const& nodes() const noexcept
  {
    return nodes_;
  }

  node const& at( node_index index ) const
  {
    return nodes_.at( index );
  }

  node_index output() const noexcept
  {
    return output_;
  }

  /*! \brief Same node list, different output. */
  network with_output( node_index output ) const
  {
    return network( num_vars_, nodes_, output );
  }

  friend bool operator==( network const&, network const& ) = default;

private:
  uint32_t num_vars_;
  std::vector<node> nodes_;
  node_index output_;
};

/*! \brief Incremental, structurally hashed network construction.

  Nodes with the same kind and the same fanin multiset are created once;
  the fanin order of the first occurrence is kept.
*/
class network_builder
{
public:
  explicit network_builder( uint32_t num_vars )
      : num_vars_( num_vars )
  {
    if ( num_vars == 0u )
    {
      throw std::invalid_argument( "network needs at least one variable" );
    }
  }

  uint32_t num_vars() const noexcept
  {
    return num_vars_;
  }

  node_index create_input( uint32_t var )
  {
    if ( var >= num_vars_ )
    {
      throw std::out_of_range( "variable index " + std::to_string( var ) + " out of range" );
    }
    return insert( {node_kind::input, var, {}} );
  }

  node_index create_constant( bool value )
  {
    return insert( {node_kind::constant, value ? 1u : 0u, {}} );
  }

  node_index create_not( node_index a )
  {
    return insert( {node_kind::inverter, 0u, {check( a )}} );
  }

  node_index create_maj3( node_index a, node_index b, node_index c )
  {
    return insert( {node_kind::maj3, 0u, {check( a ), check( b ), check( c )}} );
  }

  node_index create_maj5( node_index a, node_index b, node_index c, node_index d, node_index e )
  {
    return insert( {node_kind::maj5, 0u, {check( a ), check( b ), check( c ), check( d ), check( e )}} );
  }

  std::size_t size() const noexcept
  {
    return nodes_.size();
  }

  network build( node_index output ) const
  {
    return network( num_vars_, nodes_, output );
  }

private:
  node_index check( node_index a ) const
  {
    if ( a >= nodes_.size() )
    {
      throw std::out_of_range( "fanin refers to missing node " + std::to_string( a ) );
    }
    return a;
  }

  node_index insert( node const& n )
  {
    std::array<node_index, 5u> sorted = n.fanins;
    auto const arity = fanin_count( n.kind );
    std::sort( sorted.begin(), sorted.begin() + arity );
    auto const key = std::make_tuple( n.kind, n.value, sorted );
    if ( auto it = strash_.find( key ); it != strash_.end() )
    {
      return it->second;
    }
    auto const index = static_cast<node_index>( nodes_.size() );
    nodes_.push_back( n );
    strash_.emplace( key, index );
    return index;
  }

private:
  uint32_t num_vars_;
  std::vector<node> nodes_;
  std::map<std::tuple<node_kind, uint32_t, std::array<node_index, 5u>>, node_index> strash_;
};

/*! \brief Majority of an odd number of bits: true iff more than half are set. */
template<class Range>
inline bool majority_of( Range const& values )
{
  std::size_t ones = 0u, total = 0u;
  for ( bool v : values )
  {
    ones += v ? 1u : 0u;
    ++total;
  }
  return 2u * ones > total;
}

/*! \brief Values of every node under one assignment. */
inline std::vector<bool> evaluate_nodes( network const& net, assignment const& values )
{
  if ( values.size() != net.num_vars() )
  {
    throw arity_error( "assignment has " + std::to_string( values.size() ) + " values, network has " +
                       std::to_string( net.num_vars() ) + " variables" );
  }
  std::vector<bool> result( net.size() );
  std::array<bool, 5u> operands{};
  for ( node_index i = 0u; i < net.size(); ++i )
  {
    auto const& n = net.at( i );
    switch ( n.kind )
    {
    case node_kind::input:
      result[i] = values[n.value];
      break;
    case node_kind::constant:
      result[i] = n.value != 0u;
      break;
    case node_kind::inverter:
      result[i] = !result[n.fanins[0]];
      break;
    case node_kind::maj3:
    case node_kind::maj5:
    {
      auto const k = fanin_count( n.kind );
      for ( auto j = 0u; j < k; ++j )
      {
        operands[j] = result[n.fanins[j]];
      }
      result[i] = majority_of( std::span<bool const>( operands.data(), k ) );
      break;
    }
    }
  }
  return result;
}

inline bool evaluate( network const& net, assignment const& values )
{
  return evaluate_nodes( net, values )[net.output()];
}

/*! \brief Truth table of the output by evaluating all 2^n assignments in minterm order. */
inline truth_table simulate( network const& net )
{
  if ( net.num_vars() > max_num_vars )
  {
    throw capacity_error( "cannot tabulate a network with " + std::to_string( net.num_vars() ) +
                          " variables (limit " + std::to_string( max_num_vars ) + ")" );
  }
  truth_table tt( net.num_vars() );
  for ( uint32_t k = 0u; k < tt.num_bits(); ++k )
  {
    tt.set_bit( k, evaluate( net, assignment_of( net.num_vars(), k ) ) );
  }
  return tt;
}

/*! \brief Gate census in the style of majority-logic comparison tables.

  `levels` is the largest number of majority gates on any output-to-input
  path; inverters and constants add no depth.
*/
struct cost_report
{
  uint32_t maj3_count{0u};
  uint32_t maj5_count{0u};
  uint32_t inverter_count{0u};
  uint32_t gate_count{0u};
  uint32_t levels{0u};

  uint32_t majority_count() const noexcept
  {
    return maj3_count + maj5_count;
  }

  friend bool operator==( cost_report const&, cost_report const& ) = default;
};

/*! \brief Marks the nodes in the transitive fanin of `outputs`. */
inline std::vector<bool> reachable_nodes( network const& net, std::span<node_index const> outputs )
{
  std::vector<bool> live( net.size(), false );
  for ( auto o : outputs )
  {
    live.at( o ) = true;
  }
  for ( auto i = static_cast<int64_t>( net.size() ) - 1; i >= 0; --i )
  {
    if ( !live[i] )
    {
      continue;
    }
    for ( auto c : net.at( static_cast<node_index>( i ) ).children() )
    {
      live[c] = true;
    }
  }
  return live;
}

/*! \brief Census over the union of the cones of `outputs`; shared nodes count once. */
inline cost_report cost( network const& net, std::span<node_index const> outputs )
{
  auto const live = reachable_nodes( net, outputs );
  cost_report report;
  std::vector<uint32_t> depth( net.size(), 0u );
  for ( node_index i = 0u; i < net.size(); ++i )
  {
    auto const& n = net.at( i );
    uint32_t d = 0u;
    for ( auto c : n.children() )
    {
      d = std::max( d, depth[c] );
    }
    depth[i] = n.is_majority() ? d + 1u : d;
    if ( !live[i] )
    {
      continue;
    }
    switch ( n.kind )
    {
    case node_kind::maj3:
      ++report.maj3_count;
      break;
    case node_kind::maj5:
      ++report.maj5_count;
      break;
    case node_kind::inverter:
      ++report.inverter_count;
      break;
    default:
      break;
    }
  }
  for ( auto o : outputs )
  {
    report.levels = std::max( report.levels, depth[o] );
  }
  report.gate_count = report.maj3_count + report.maj5_count + report.inverter_count;
  return report;
}

inline cost_report cost( network const& net )
{
  node_index const out = net.output();
  return cost( net, std::span<node_index const>( &out, 1u ) );
}

} // namespace qcamaj
