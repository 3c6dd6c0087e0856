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
#include <catch_amalgamated.hpp>

#include <qcamaj/designs.hpp>

#include "oracle.hpp"

using namespace qcamaj;

namespace
{

adder_comparison_row row_of( std::string const& name )
{
  for ( auto const& row : compare_adders() )
  {
    if ( row.name == name )
    {
      return row;
    }
  }
  FAIL( "no adder named " << name );
  return {};
}

} // namespace

TEST_CASE( "adder gate counts", "[designs]" )
{
  CHECK( adder_classic().combined_cost() == cost_report{5u, 0u, 3u, 8u, 2u} );
  CHECK( adder_classic_simplified().combined_cost() == cost_report{4u, 0u, 3u, 7u, 2u} );
  CHECK( adder_zhang().combined_cost() == cost_report{3u, 0u, 2u, 5u, 2u} );
  CHECK( adder_proposed().combined_cost() == cost_report{1u, 1u, 1u, 3u, 2u} );

  CHECK( row_of( "classic" ).cost.majority_count() == 5u );
  CHECK( row_of( "zhang" ).cost.inverter_count == 2u );
  CHECK( row_of( "five-input" ).cost.majority_count() == 2u );
  CHECK( row_of( "five-input" ).clocking == "simple" );
}

TEST_CASE( "every adder adds", "[designs]" )
{
  auto const designs = adder_designs();
  REQUIRE( designs.size() == 4u );
  for ( auto const& d : designs )
  {
    INFO( d.name );
    CHECK( minterms_of( simulate( d.sum ) ) == std::set<uint32_t>{1u, 2u, 4u, 7u} );
    CHECK( minterms_of( simulate( d.carry ) ) == std::set<uint32_t>{3u, 5u, 6u, 7u} );
    for ( uint32_t k = 0u; k < 8u; ++k )
    {
      auto const in = assignment_of( 3u, k );
      CHECK( 2 * evaluate( d.carry, in ) + evaluate( d.sum, in ) == in[0] + in[1] + in[2] );
    }
    /* both outputs live in one node pool */
    CHECK( d.sum.nodes() == d.carry.nodes() );
  }
  for ( auto const& row : compare_adders() )
  {
    CHECK( row.sum_equivalent );
    CHECK( row.carry_equivalent );
    CHECK( row.arithmetic_ok );
  }
}

TEST_CASE( "adder sum expressions", "[designs]" )
{
  CHECK( to_expression( adder_proposed().sum ) == "M5(A,B,C,M(A,B,C)',M(A,B,C)')" );
  CHECK( to_expression( adder_zhang().sum ) == "M(M(A,B,C)',C,M(A,B,C'))" );
  CHECK( to_expression( adder_classic().sum ) == "M(M(A',B,C),M(A,B',C),M(A,B,C'))" );
  CHECK( to_expression( adder_classic_simplified().sum ) == "M(M(A',B,C),M(A,B',C),C')" );
}

TEST_CASE( "example table verdicts under A as most significant bit", "[designs][audit]" )
{
  auto const rows = audit_tables();
  REQUIRE( rows.size() == 6u );
  for ( auto const& row : rows )
  {
    INFO( to_sum_notation( row.minterms ) );
    /* verdicts agree with the independent text evaluator */
    CHECK( row.previous.verdict.computed_minterms == oracle::text_minterms( row.previous.expression ) );
    CHECK( row.proposed.verdict.computed_minterms == oracle::text_minterms( row.proposed.expression ) );
    CHECK( row.previous.verdict.equivalent == ( oracle::text_minterms( row.previous.expression ) == row.minterms ) );
    CHECK( row.proposed.verdict.equivalent == ( oracle::text_minterms( row.proposed.expression ) == row.minterms ) );
  }
  for ( auto i : {0u, 1u, 2u, 3u, 5u} )
  {
    CHECK( rows[i].proposed.verdict.equivalent );
  }
  CHECK_FALSE( rows[4].proposed.verdict.equivalent );
  CHECK( rows[4].proposed.verdict.computed_minterms == std::set<uint32_t>{3u, 4u, 5u, 6u, 7u} );
  CHECK_FALSE( rows[4].previous.verdict.equivalent );
  CHECK( rows[4].previous.verdict.computed_minterms == std::set<uint32_t>{2u, 4u, 7u} );
  CHECK_FALSE( rows[5].previous.verdict.equivalent );
  CHECK( rows[5].previous.verdict.computed_minterms == std::set<uint32_t>{0u, 5u, 6u, 7u} );
}

TEST_CASE( "example table costs", "[designs][audit]" )
{
  auto const rows = audit_tables();
  CHECK( rows[1].previous.cost == cost_report{2u, 0u, 0u, 2u, 2u} );
  CHECK( rows[1].proposed.cost == cost_report{0u, 1u, 0u, 1u, 1u} );
  CHECK( rows[5].previous.cost == cost_report{4u, 0u, 3u, 7u, 2u} );
  CHECK( rows[5].proposed.cost == cost_report{1u, 2u, 1u, 4u, 2u} );
}

TEST_CASE( "reversed variable order", "[designs][audit]" )
{
  std::vector<std::string> const names{"C", "B", "A"};
  auto const rows = audit_tables( names );
  for ( auto const& row : rows )
  {
    CHECK( row.previous.verdict.computed_minterms == oracle::text_minterms( row.previous.expression, names ) );
    CHECK( row.proposed.verdict.computed_minterms == oracle::text_minterms( row.proposed.expression, names ) );
    CHECK( row.proposed.verdict.variable_order_note.find( "C is the most significant" ) != std::string::npos );
  }
  /* with C as the most significant bit the Sigma(1,2,7) previous expression holds */
  CHECK( rows[4].previous.verdict.equivalent );
  CHECK_FALSE( rows[4].proposed.verdict.equivalent );
}
