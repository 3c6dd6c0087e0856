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
  \file verify.hpp
  \brief Exhaustive equivalence check of a network against a truth table
*/

#pragma once

#include "errors.hpp"
#include "network.hpp"
#include "truth_table.hpp"

#include <set>
#include <string>
#include <vector>

namespace qcamaj
{

struct verify_report
{
  bool equivalent{false};

  /* minterms on which network and specification disagree */
  std::set<uint32_t> differing_minterms;

  /* on-set computed from the network */
  std::set<uint32_t> computed_minterms;

  std::set<uint32_t> expected_minterms;

  std::string variable_order_note;
};

/*! \brief Compares `net` with `expected` on every minterm.

  `variable_names` only affects the order note in the report; the check
  itself always uses variable 0 as the most significant minterm bit.
*/
inline verify_report verify( network const& net, truth_table const& expected,
                             std::vector<std::string> const& variable_names = default_variable_names() )
{
  if ( net.num_vars() != expected.num_vars() )
  {
    throw arity_error( "network has " + std::to_string( net.num_vars() ) + " variables, specification has " +
                       std::to_string( expected.num_vars() ) );
  }
  auto const computed = simulate( net );

  verify_report report;
  for ( uint32_t k = 0u; k < expected.num_bits(); ++k )
  {
    if ( computed.get_bit( k ) != expected.get_bit( k ) )
    {
      report.differing_minterms.insert( k );
    }
  }
  report.equivalent = report.differing_minterms.empty();
  report.computed_minterms = minterms_of( computed );
  report.expected_minterms = minterms_of( expected );
  report.variable_order_note = variable_order_note( variable_names );
  return report;
}

} // namespace qcamaj
