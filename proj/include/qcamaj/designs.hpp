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
  \file designs.hpp
  \brief Reference majority designs: one-bit full adders and three-input examples

  The adders are built over (A, B, Cin) with both outputs drawn from one
  structurally hashed node pool, so a carry that also feeds the sum is
  counted once.  The three-input example expressions are stored as text
  exactly as published; whether each one computes its listed minterm set is
  left to `verify`.
*/

#pragma once

#include "expression.hpp"
#include "network.hpp"
#include "truth_table.hpp"
#include "verify.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace qcamaj
{

struct adder_design
{
  std::string name;

  /* where the design comes from */
  std::string origin;

  /* qualitative clocking label; not modelled */
  std::string clocking{"simple"};

  network sum;
  network carry;

  /*! \brief Census over both outputs with shared nodes counted once. */
  cost_report combined_cost() const
  {
    std::array<node_index, 2u> const outputs{sum.output(), carry.output()};
    return cost( sum, outputs );
  }
};

namespace detail
{

struct adder_inputs
{
  network_builder builder{3u};
  node_index a = builder.create_input( 0u );
  node_index b = builder.create_input( 1u );
  node_index c = builder.create_input( 2u );
};

inline adder_design make_adder( std::string name, std::string origin, adder_inputs const& in, node_index sum, node_index carry )
{
  return {std::move( name ), std::move( origin ), "simple", in.builder.build( sum ), in.builder.build( carry )};
}

} // namespace detail

/*! \brief Five M3 gates and three inverters.

  Cout = M(A,B,Cin); Sum = M(M(A',B,Cin), M(A,B',Cin), M(A,B,Cin')).
*/
inline adder_design adder_classic()
{
  detail::adder_inputs in;
  auto& g = in.builder;
  auto const carry = g.create_maj3( in.a, in.b, in.c );
  auto const p = g.create_maj3( g.create_not( in.a ), in.b, in.c );
  auto const q = g.create_maj3( in.a, g.create_not( in.b ), in.c );
  auto const r = g.create_maj3( in.a, in.b, g.create_not( in.c ) );
  return detail::make_adder( "classic", "Tougaw-Lent five-gate M3 adder", in, g.create_maj3( p, q, r ), carry );
}

/*! \brief The classic adder with M(A,B,Cin') replaced by Cin': four M3 gates, three inverters. */
inline adder_design adder_classic_simplified()
{
  detail::adder_inputs in;
  auto& g = in.builder;
  auto const carry = g.create_maj3( in.a, in.b, in.c );
  auto const p = g.create_maj3( g.create_not( in.a ), in.b, in.c );
  auto const q = g.create_maj3( in.a, g.create_not( in.b ), in.c );
  return detail::make_adder( "classic-simplified", "classic adder with M(A,B,Cin') -> Cin'", in,
                             g.create_maj3( p, q, g.create_not( in.c ) ), carry );
}

/*! \brief Three M3 gates and two inverters: Sum = M(Cout', Cin, M(A,B,Cin')). */
inline adder_design adder_zhang()
{
  detail::adder_inputs in;
  auto& g = in.builder;
  auto const carry = g.create_maj3( in.a, in.b, in.c );
  auto const r = g.create_maj3( in.a, in.b, g.create_not( in.c ) );
  return detail::make_adder( "zhang", "Zhang-Walus-Wang-Jullien reduced M3 adder", in, g.create_maj3( g.create_not( carry ), in.c, r ), carry );
}

/*! \brief One M3, one M5 and one inverter: Sum = M5(A, B, Cin, Cout', Cout'). */
inline adder_design adder_proposed()
{
  detail::adder_inputs in;
  auto& g = in.builder;
  auto const carry = g.create_maj3( in.a, in.b, in.c );
  auto const ncarry = g.create_not( carry );
  return detail::make_adder( "five-input", "M5-based adder", in, g.create_maj5( in.a, in.b, in.c, ncarry, ncarry ), carry );
}

/*! \brief All built-in adders, in comparison-table order: M5-based, reduced M3, classic, simplified classic. */
inline std::vector<adder_design> adder_designs()
{
  return {adder_proposed(), adder_zhang(), adder_classic(), adder_classic_simplified()};
}

/*! \brief Sum and carry specifications of a one-bit full adder. */
inline truth_table full_adder_sum()
{
  return from_minterms( 3u, {1u, 2u, 4u, 7u} );
}

inline truth_table full_adder_carry()
{
  return from_minterms( 3u, {3u, 5u, 6u, 7u} );
}

struct adder_comparison_row
{
  std::string name;
  std::string origin;
  std::string clocking;
  cost_report cost;
  bool sum_equivalent{false};
  bool carry_equivalent{false};

  /* 2*Cout + Sum == A + B + Cin on all eight rows */
  bool arithmetic_ok{false};
};

inline adder_comparison_row compare_adder( adder_design const& d )
{
  adder_comparison_row row{d.name, d.origin, d.clocking, d.combined_cost()};
  row.sum_equivalent = verify( d.sum, full_adder_sum() ).equivalent;
  row.carry_equivalent = verify( d.carry, full_adder_carry() ).equivalent;
  row.arithmetic_ok = true;
  for ( uint32_t k = 0u; k < 8u; ++k )
  {
    auto const in = assignment_of( 3u, k );
    auto const total = static_cast<uint32_t>( in[0] ) + in[1] + in[2];
    auto const out = 2u * evaluate( d.carry, in ) + evaluate( d.sum, in );
    row.arithmetic_ok = row.arithmetic_ok && out == total;
  }
  return row;
}

inline std::vector<adder_comparison_row> compare_adders()
{
  std::vector<adder_comparison_row> rows;
  for ( auto const& d : adder_designs() )
  {
    rows.push_back( compare_adder( d ) );
  }
  return rows;
}

/*! \brief One published three-input example: minterm set and two expressions. */
struct table2_entry
{
  std::set<uint32_t> minterms;
  std::string previous;
  std::string proposed;
};

inline std::vector<table2_entry> table2_entries()
{
  return {
      {{7u}, "M(M(A,B,0),C,0)", "M5(0,0,A,B,C)"},
      {{3u, 4u, 5u, 6u, 7u}, "M(M(B,C,0),A,1)", "M5(A,A,B,C,1)"},
      {{3u, 6u, 7u}, "M(0,B,M(A,C,1))", "M5(A,B,B,C,0)"},
      {{1u, 2u, 3u, 4u, 5u, 6u, 7u}, "M(M(A,B,1),C,1)", "M5(A,B,C,1,1)"},
      {{1u, 2u, 7u}, "M(M(A,B,C'),M(A,B',C),M(A',B,0))", "M5(M(A,B,C)',M5(A,A,B,C,1),A,B,C)"},
      {{0u, 3u, 5u, 6u, 7u}, "M(M(A,B,0),M(A',B',C),M(A,C',1))", "M(M5(A,B,B,C,C),1,M5(A,B,C,1,1)')"},
  };
}

struct expression_audit
{
  std::string expression;
  verify_report verdict;
  cost_report cost;
};

struct table_audit_row
{
  std::set<uint32_t> minterms;
  expression_audit previous;
  expression_audit proposed;
};

/*! \brief Verifies and costs both expressions of every example row.

  `variable_names` lists the variables most significant first; the published
  strings use A, B and C, so a reordering such as {"C","B","A"} evaluates the
  same text under the opposite bit order.
*/
inline std::vector<table_audit_row> audit_tables( std::vector<std::string> const& variable_names = default_variable_names() )
{
  std::vector<table_audit_row> rows;
  for ( auto const& e : table2_entries() )
  {
    auto const expected = from_minterms( 3u, e.minterms );
    auto const audit = [&]( std::string const& text ) {
      auto const net = parse_expr( text, variable_names );
      return expression_audit{text, verify( net, expected, variable_names ), cost( net )};
    };
    rows.push_back( {e.minterms, audit( e.previous ), audit( e.proposed )} );
  }
  return rows;
}

} // namespace qcamaj
