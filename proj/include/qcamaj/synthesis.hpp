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
  \file synthesis.hpp
  \brief Bounded exact synthesis of majority-inverter networks (up to 3 inputs)

  The search treats a network as a sequence of operations, each adding one
  signal: an inverter on an existing signal or a 3-/5-input majority over
  existing signals.  Starting from the literals {0, 1, A, B, C}, every
  sequence of length g is enumerated (breadth-first, iterative deepening on
  g), so the first depth at which a function appears is its minimum gate
  count (majority gates plus inverters).  Among all sequences of that length
  the one with fewest levels, then fewest inverters, then the smallest
  canonical expression text wins.

  Two partial sequences whose signals have the same (function, level) pairs
  and the same inverter count admit exactly the same completions, so they are
  merged; the first one in enumeration order is kept.  Operations that
  recreate an existing function, exceed the level bound or exceed the
  majority-gate bound are skipped.  5-input majorities are enumerated with
  five distinct operands, or four distinct operands with one repeated
  (M5(x,x,y,z,w)); the other repetition patterns reduce to M(x,y,z) or to an
  operand, and so does any M5 with a complementary operand pair (x, x').
*/

#pragma once

#include "errors.hpp"
#include "expression.hpp"
#include "network.hpp"
#include "truth_table.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace qcamaj
{

struct search_budget
{
  /* maximum number of majority gates */
  uint32_t max_gates{4u};

  /* maximum majority depth */
  uint32_t max_levels{3u};

  bool allow_maj5{true};

  void validate() const
  {
    if ( max_gates < 1u || max_levels < 1u )
    {
      throw std::invalid_argument( "search budget needs max_gates >= 1 and max_levels >= 1" );
    }
    if ( max_gates > 8u )
    {
      throw capacity_error( "max_gates above 8 is not supported" );
    }
  }
};

struct synthesis_stats
{
  /* merged partial networks stored per depth (index = number of operations) */
  std::vector<uint64_t> states_per_depth;

  /* operations tried per depth */
  std::vector<uint64_t> operations_per_depth;
};

namespace detail
{

class exact_enumerator
{
public:
  using function = uint8_t;

  struct step
  {
    function tt{0u};
    uint8_t level{0u};
    node_kind kind{node_kind::constant};
    uint8_t value{0u};
    std::array<uint8_t, 5u> fanins{};
  };

  struct candidate
  {
    bool found{false};
    uint32_t depth{0u};
    uint32_t level{0u};
    uint32_t inverters{0u};
    std::string text;
    std::vector<step> steps;
  };

  exact_enumerator( uint32_t num_vars, search_budget const& budget )
      : num_vars_( num_vars ), budget_( budget )
  {
    if ( num_vars < 1u || num_vars > 3u )
    {
      throw capacity_error( "exact synthesis supports 1 to 3 variables, got " + std::to_string( num_vars ) );
    }
    budget_.validate();
    mask_ = static_cast<function>( ( 1u << ( 1u << num_vars ) ) - 1u );

    base_.push_back( {0u, 0u, node_kind::constant, 0u, {}} );
    base_.push_back( {mask_, 0u, node_kind::constant, 1u, {}} );
    for ( uint32_t v = 0u; v < num_vars; ++v )
    {
      base_.push_back( {static_cast<function>( nth_var( num_vars, v ).to_uint64() ), 0u, node_kind::input,
                        static_cast<uint8_t>( v ), {}} );
    }
  }

  uint32_t num_functions() const noexcept
  {
    return 1u << ( 1u << num_vars_ );
  }

  /*! \brief Runs the search until every wanted function is found or the space is exhausted. */
  std::vector<candidate> run( std::bitset<256> wanted, synthesis_stats* stats )
  {
    std::vector<candidate> best( num_functions() );
    wanted_ = wanted & reachable_within_levels();
    best_ = &best;

    for ( uint8_t i = 0u; i < base_.size(); ++i )
    {
      if ( wanted_[base_[i].tt] )
      {
        auto& c = best[base_[i].tt];
        c.found = true;
        c.text = step_text( base_, i );
        c.steps = {base_[i]};
        wanted_.reset( base_[i].tt );
      }
    }

    /* depth 0: one empty state */
    layer current;
    current.stride = 0u;
    current.inverters.push_back( 0u );

    auto const max_depth = budget_.max_gates + num_vars_ + budget_.max_gates;
    for ( uint32_t depth = 1u; depth <= max_depth && wanted_.any() && !current.inverters.empty(); ++depth )
    {
      if ( stats )
      {
        stats->states_per_depth.push_back( current.inverters.size() );
      }
      depth_ = depth;
      found_now_.reset();
      uint64_t operations = 0u;
      for ( std::size_t s = 0u; s < current.inverters.size(); ++s )
      {
        operations += expand( current, s, nullptr );
      }
      if ( stats )
      {
        stats->operations_per_depth.push_back( operations );
      }
      wanted_ &= ~found_now_;
      if ( !wanted_.any() || depth == max_depth )
      {
        break;
      }

      layer next;
      next.stride = depth;
      std::unordered_set<std::string> seen;
      for ( std::size_t s = 0u; s < current.inverters.size(); ++s )
      {
        seen_ = &seen;
        expand( current, s, &next );
      }
      current = std::move( next );
    }
    best_ = nullptr;
    return best;
  }

  /*! \brief Functions realizable within the level bound when the gate count is unlimited.

    Level l holds the majorities of level l - 1 functions, closed under
    negation.  Functions outside this set cannot be found by `run`, so they
    are dropped from the wanted set instead of exhausting the search.
  */
  std::bitset<256> reachable_within_levels() const
  {
    std::bitset<256> reach;
    auto const close_under_not = [&] {
      for ( uint32_t f = 0u; f < num_functions(); ++f )
      {
        if ( reach[f] )
        {
          reach.set( static_cast<function>( ~f & mask_ ) );
        }
      }
    };
    for ( auto const& b : base_ )
    {
      reach.set( b.tt );
    }
    close_under_not();
    for ( uint32_t l = 0u; l < budget_.max_levels && reach.count() < num_functions(); ++l )
    {
      auto next = reach | majority_image( reach, 3u );
      if ( budget_.allow_maj5 )
      {
        next |= majority_image( reach, 5u );
      }
      if ( next == reach )
      {
        break;
      }
      reach = next;
      close_under_not();
    }
    return reach;
  }

  /*! \brief Converts the operation list of a candidate into a network (output = last step). */
  network to_network( std::vector<step> const& steps ) const
  {
    std::vector<bool> live( steps.size(), false );
    live.back() = true;
    for ( auto i = static_cast<int64_t>( steps.size() ) - 1; i >= 0; --i )
    {
      if ( !live[i] )
      {
        continue;
      }
      for ( auto j = 0u; j < fanin_count( steps[i].kind ); ++j )
      {
        live[steps[i].fanins[j]] = true;
      }
    }
    network_builder builder( num_vars_ );
    std::vector<node_index> map( steps.size(), 0u );
    for ( std::size_t i = 0u; i < steps.size(); ++i )
    {
      if ( !live[i] )
      {
        continue;
      }
      auto const& s = steps[i];
      auto const f = [&]( uint32_t j ) { return map[s.fanins[j]]; };
      switch ( s.kind )
      {
      case node_kind::constant:
        map[i] = builder.create_constant( s.value != 0u );
        break;
      case node_kind::input:
        map[i] = builder.create_input( s.value );
        break;
      case node_kind::inverter:
        map[i] = builder.create_not( f( 0 ) );
        break;
      case node_kind::maj3:
        map[i] = builder.create_maj3( f( 0 ), f( 1 ), f( 2 ) );
        break;
      case node_kind::maj5:
        map[i] = builder.create_maj5( f( 0 ), f( 1 ), f( 2 ), f( 3 ), f( 4 ) );
        break;
      }
    }
    return builder.build( map[steps.size() - 1u] );
  }

private:
  struct layer
  {
    uint32_t stride{0u};
    std::vector<step> steps;         /* stride operation steps per state */
    std::vector<uint8_t> inverters;  /* inverter count per state */
  };

  static function maj3( function a, function b, function c ) noexcept
  {
    return static_cast<function>( ( a & b ) | ( a & c ) | ( b & c ) );
  }

  /* sum of five bits >= 3, from a carry-save split (a+b+c) + (d+e) */
  static function maj5( function a, function b, function c, function d, function e ) noexcept
  {
    auto const s = static_cast<function>( a ^ b ^ c );
    auto const k = maj3( a, b, c );
    return static_cast<function>( ( k & ( s | d | e ) ) | ( s & d & e ) );
  }

  /* All `arity`-input majorities over operands from `operands`.  A state packs,
     per minterm, the number of operands that are 1 there into a 2-bit field
     saturating at the majority threshold. */
  std::bitset<256> majority_image( std::bitset<256> const& operands, uint32_t arity ) const
  {
    auto const minterms = 1u << num_vars_;
    auto const threshold = ( arity + 1u ) / 2u;
    auto const spread = [&]( uint32_t f ) {
      uint32_t s = 0u;
      for ( uint32_t m = 0u; m < minterms; ++m )
      {
        s |= ( ( f >> m ) & 1u ) << ( 2u * m );
      }
      return s;
    };
    auto const saturated = [&]( uint32_t s ) {
      auto const hi = ( s >> 1u ) & 0x5555u;
      return threshold == 3u ? hi & s : hi;
    };

    std::vector<uint32_t> increments;
    for ( uint32_t f = 0u; f < num_functions(); ++f )
    {
      if ( operands[f] )
      {
        increments.push_back( spread( f ) );
      }
    }
    std::vector<uint32_t> states{0u};
    for ( uint32_t k = 0u; k < arity; ++k )
    {
      std::vector<bool> seen( 1u << 16u, false );
      std::vector<uint32_t> next;
      for ( auto s : states )
      {
        auto const sat = saturated( s );
        for ( auto inc : increments )
        {
          auto const t = s + ( inc & ~sat );
          if ( !seen[t] )
          {
            seen[t] = true;
            next.push_back( t );
          }
        }
      }
      states = std::move( next );
    }

    std::bitset<256> image;
    for ( auto s : states )
    {
      auto const sat = saturated( s );
      uint32_t f = 0u;
      for ( uint32_t m = 0u; m < minterms; ++m )
      {
        f |= ( ( sat >> ( 2u * m ) ) & 1u ) << m;
      }
      image.set( f );
    }
    return image;
  }

  /* M5(x, x', ...) equals a 3-input majority of the rest, which is never more expensive */
  bool has_complementary_pair( std::initializer_list<function> operands ) const noexcept
  {
    for ( auto it = operands.begin(); it != operands.end(); ++it )
    {
      for ( auto jt = it + 1; jt != operands.end(); ++jt )
      {
        if ( static_cast<function>( ~*it & mask_ ) == *jt )
        {
          return true;
        }
      }
    }
    return false;
  }

  std::string step_text( std::vector<step> const& steps, uint8_t i ) const
  {
    auto const& s = steps[i];
    switch ( s.kind )
    {
    case node_kind::constant:
      return s.value ? "1" : "0";
    case node_kind::input:
      return std::string( 1u, static_cast<char>( 'A' + s.value ) );
    case node_kind::inverter:
      return step_text( steps, s.fanins[0] ) + "'";
    default:
      break;
    }
    std::array<std::string, 5u> parts;
    auto const k = fanin_count( s.kind );
    for ( auto j = 0u; j < k; ++j )
    {
      parts[j] = step_text( steps, s.fanins[j] );
    }
    std::sort( parts.begin(), parts.begin() + k );
    std::string text = s.kind == node_kind::maj3 ? "M(" : "M5(";
    for ( auto j = 0u; j < k; ++j )
    {
      text += ( j ? "," : "" ) + parts[j];
    }
    return text + ')';
  }

  /* signals of state s: base literals followed by the state's operations */
  void load_state( layer const& l, std::size_t s )
  {
    signals_.assign( base_.begin(), base_.end() );
    auto const first = l.steps.begin() + static_cast<std::ptrdiff_t>( s * l.stride );
    signals_.insert( signals_.end(), first, first + l.stride );
    present_.reset();
    majorities_ = 0u;
    for ( auto const& sig : signals_ )
    {
      present_.set( sig.tt );
      majorities_ += ( sig.kind == node_kind::maj3 || sig.kind == node_kind::maj5 ) ? 1u : 0u;
    }
    inverters_ = l.inverters[s];
  }

  uint64_t expand( layer const& l, std::size_t s, layer* next )
  {
    load_state( l, s );
    store_target_ = next;
    uint64_t operations = 0u;
    auto const n = static_cast<uint8_t>( signals_.size() );

    for ( uint8_t i = 0u; i < n; ++i )
    {
      ++operations;
      step op{static_cast<function>( ~signals_[i].tt & mask_ ), signals_[i].level, node_kind::inverter, 0u, {i}};
      emit( op );
    }

    if ( majorities_ >= budget_.max_gates )
    {
      return operations;
    }

    for ( uint8_t i = 0u; i < n; ++i )
    {
      for ( uint8_t j = i + 1u; j < n; ++j )
      {
        for ( uint8_t k = j + 1u; k < n; ++k )
        {
          auto const& a = signals_[i];
          auto const& b = signals_[j];
          auto const& c = signals_[k];
          auto const lvl3 = static_cast<uint8_t>( std::max( {a.level, b.level, c.level} ) );
          ++operations;
          emit( {maj3( a.tt, b.tt, c.tt ), static_cast<uint8_t>( lvl3 + 1u ), node_kind::maj3, 0u, {i, j, k}} );
          if ( !budget_.allow_maj5 )
          {
            continue;
          }
          for ( uint8_t x = k + 1u; x < n; ++x )
          {
            auto const& d = signals_[x];
            auto const lvl4 = std::max( lvl3, d.level );
            std::array<uint8_t, 4u> const four{i, j, k, x};
            if ( has_complementary_pair( {a.tt, b.tt, c.tt, d.tt} ) )
            {
              continue;
            }
            for ( auto rep : four )
            {
              ++operations;
              emit( {maj5( a.tt, b.tt, c.tt, d.tt, signals_[rep].tt ), static_cast<uint8_t>( lvl4 + 1u ),
                     node_kind::maj5, 0u, {i, j, k, x, rep}} );
            }
            for ( uint8_t y = x + 1u; y < n; ++y )
            {
              auto const& e = signals_[y];
              if ( has_complementary_pair( {a.tt, b.tt, c.tt, d.tt, e.tt} ) )
              {
                continue;
              }
              ++operations;
              emit( {maj5( a.tt, b.tt, c.tt, d.tt, e.tt ), static_cast<uint8_t>( std::max( lvl4, e.level ) + 1u ),
                     node_kind::maj5, 0u, {i, j, k, x, y}} );
            }
          }
        }
      }
    }
    return operations;
  }

  void emit( step const& op )
  {
    if ( op.level > budget_.max_levels || present_[op.tt] )
    {
      return;
    }
    auto const inverters = inverters_ + ( op.kind == node_kind::inverter ? 1u : 0u );
    if ( store_target_ )
    {
      store( op, inverters );
      return;
    }
    if ( !wanted_[op.tt] )
    {
      return;
    }

    auto& best = ( *best_ )[op.tt];
    if ( best.found && std::pair<uint32_t, uint32_t>( op.level, inverters ) >
                           std::make_pair( best.level, best.inverters ) )
    {
      return;
    }
    signals_.push_back( op );
    auto text = step_text( signals_, static_cast<uint8_t>( signals_.size() - 1u ) );
    if ( !best.found || std::pair<uint32_t, uint32_t>( op.level, inverters ) < std::make_pair( best.level, best.inverters ) ||
         text < best.text )
    {
      best.found = true;
      best.depth = depth_;
      best.level = op.level;
      best.inverters = inverters;
      best.text = std::move( text );
      best.steps = signals_;
    }
    signals_.pop_back();
    found_now_.set( op.tt );
  }

  void store( step const& op, uint32_t inverters )
  {
    auto& next = *store_target_;
    auto const ops_before = signals_.size() - base_.size();

    std::string key;
    key.reserve( 2u * ( ops_before + 1u ) + 1u );
    std::array<uint16_t, 32u> pairs{};
    std::size_t count = 0u;
    for ( std::size_t i = base_.size(); i < signals_.size(); ++i )
    {
      pairs[count++] = static_cast<uint16_t>( signals_[i].tt << 8u | signals_[i].level );
    }
    pairs[count++] = static_cast<uint16_t>( op.tt << 8u | op.level );
    std::sort( pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>( count ) );
    for ( std::size_t i = 0u; i < count; ++i )
    {
      key.push_back( static_cast<char>( pairs[i] >> 8u ) );
      key.push_back( static_cast<char>( pairs[i] & 0xffu ) );
    }
    key.push_back( static_cast<char>( inverters ) );
    if ( !seen_->insert( std::move( key ) ).second )
    {
      return;
    }
    next.steps.insert( next.steps.end(), signals_.begin() + static_cast<std::ptrdiff_t>( base_.size() ), signals_.end() );
    next.steps.push_back( op );
    next.inverters.push_back( static_cast<uint8_t>( inverters ) );
  }

private:
  uint32_t num_vars_;
  search_budget budget_;
  function mask_{0u};
  std::vector<step> base_;

  /* per-run state */
  std::bitset<256> wanted_;
  std::bitset<256> found_now_;
  std::vector<candidate>* best_{nullptr};
  uint32_t depth_{0u};
  layer* store_target_{nullptr};
  std::unordered_set<std::string>* seen_{nullptr};

  /* per-state scratch */
  std::vector<step> signals_;
  std::bitset<256> present_;
  uint32_t majorities_{0u};
  uint32_t inverters_{0u};
};

} // namespace detail

/*! \brief Minimum-cost network for `goal` within `budget`, or `std::nullopt`.

  Cost is compared lexicographically as (gate count, levels, inverters);
  remaining ties go to the smallest canonical expression text, so the result
  is deterministic.  Throws `capacity_error` for more than 3 variables.
*/
inline std::optional<network> synthesize( truth_table const& goal, search_budget const& budget = {},
                                          synthesis_stats* stats = nullptr )
{
  if ( goal.num_vars() > 3u )
  {
    throw capacity_error( "exact synthesis supports at most 3 variables, got " + std::to_string( goal.num_vars() ) );
  }
  detail::exact_enumerator enumerator( goal.num_vars(), budget );
  std::bitset<256> wanted;
  auto const target = goal.to_uint64();
  wanted.set( target );
  auto const best = enumerator.run( wanted, stats );
  if ( !best[target].found )
  {
    return std::nullopt;
  }
  return enumerator.to_network( best[target].steps );
}

struct atlas_entry
{
  truth_table function;

  /* empty if no network exists within the budget */
  std::optional<network> implementation;
};

/*! \brief Synthesizes every 3-input function; entry k is the function with integer encoding k. */
inline std::vector<atlas_entry> synthesize_all_3var( search_budget const& budget = {}, synthesis_stats* stats = nullptr )
{
  detail::exact_enumerator enumerator( 3u, budget );
  std::bitset<256> wanted;
  wanted.set();
  auto const best = enumerator.run( wanted, stats );

  std::vector<atlas_entry> atlas;
  atlas.reserve( 256u );
  for ( uint32_t f = 0u; f < 256u; ++f )
  {
    truth_table::bits_type bits( f );
    atlas_entry entry{truth_table( 3u, bits ), std::nullopt};
    if ( best[f].found )
    {
      entry.implementation = enumerator.to_network( best[f].steps );
    }
    atlas.push_back( std::move( entry ) );
  }
  return atlas;
}

} // namespace qcamaj
