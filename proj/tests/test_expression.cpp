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

#include <qcamaj/expression.hpp>

#include "oracle.hpp"

#include <random>

using namespace qcamaj;

namespace
{

std::size_t error_position( std::string const& text, std::vector<std::string> const& names = default_variable_names() )
{
  try
  {
    parse_expr( text, names );
  }
  catch ( parse_error const& e )
  {
    return e.position();
  }
  return std::string::npos;
}

/* random network over n variables with `steps` gates above the literals */
network random_network( std::mt19937& rng, uint32_t n, uint32_t steps )
{
  network_builder b( n );
  std::vector<node_index> pool{b.create_constant( false ), b.create_constant( true )};
  for ( uint32_t v = 0u; v < n; ++v )
  {
    pool.push_back( b.create_input( v ) );
  }
  auto pick = [&] { return pool[std::uniform_int_distribution<std::size_t>( 0u, pool.size() - 1u )( rng )]; };
  for ( uint32_t s = 0u; s < steps; ++s )
  {
    switch ( std::uniform_int_distribution<int>( 0, 2 )( rng ) )
    {
    case 0:
      pool.push_back( b.create_not( pick() ) );
      break;
    case 1:
      pool.push_back( b.create_maj3( pick(), pick(), pick() ) );
      break;
    default:
      pool.push_back( b.create_maj5( pick(), pick(), pick(), pick(), pick() ) );
      break;
    }
  }
  return b.build( pool.back() );
}

} // namespace

TEST_CASE( "parse builds the expected nodes", "[expression]" )
{
  auto const net = parse_expr( "M(A,B,0)" );
  auto const& root = net.at( net.output() );
  REQUIRE( root.kind == node_kind::maj3 );
  CHECK( net.at( root.fanins[0] ).kind == node_kind::input );
  CHECK( net.at( root.fanins[0] ).value == 0u );
  CHECK( net.at( root.fanins[1] ).value == 1u );
  CHECK( net.at( root.fanins[2] ).kind == node_kind::constant );
  CHECK( net.at( root.fanins[2] ).value == 0u );

  auto const neg = parse_expr( "M5(A,B,C,1,1)'" );
  REQUIRE( neg.at( neg.output() ).kind == node_kind::inverter );
  CHECK( neg.at( neg.at( neg.output() ).fanins[0] ).kind == node_kind::maj5 );
}

TEST_CASE( "parse ignores whitespace and honours the variable list", "[expression]" )
{
  CHECK( simulate( parse_expr( "  M ( A , B' , C ) " ) ) == simulate( parse_expr( "M(A,B',C)" ) ) );
  auto const net = parse_expr( "M(x, y, carry_in)", {"x", "y", "carry_in"} );
  CHECK( minterms_of( simulate( net ) ) == std::set<uint32_t>{3u, 5u, 6u, 7u} );
  CHECK( net.num_vars() == 3u );
}

TEST_CASE( "parse errors carry positions", "[expression]" )
{
  CHECK( error_position( "M(A,B)" ) == 0u );
  CHECK( error_position( "M(A,M5(A,B,C,1),C)" ) == 4u );
  CHECK( error_position( "M(A,B" ) == 5u );
  CHECK( error_position( "M(A,B,C))" ) == 8u );
  CHECK( error_position( "" ) == 0u );
  CHECK( error_position( "M(A,,C)" ) == 4u );
  CHECK_THROWS_WITH( parse_expr( "M(A,B)" ), Catch::Matchers::ContainsSubstring( "expects 3 operands, got 2" ) );
}

TEST_CASE( "unknown identifiers are reported by name", "[expression]" )
{
  try
  {
    parse_expr( "M(A,B,D)" );
    FAIL( "expected an exception" );
  }
  catch ( unknown_variable_error const& e )
  {
    CHECK( e.name() == "D" );
    CHECK( e.position() == 6u );
  }
  CHECK_THROWS_AS( parse_expr( "M(A,B,C)", {"X", "Y", "Z"} ), unknown_variable_error );
}

TEST_CASE( "parser agrees with the text oracle", "[expression][oracle]" )
{
  for ( auto const* text : {"M(M(A,B,0),C,0)", "M5(0,0,A,B,C)", "M(0,B,M(A,C,1))", "M5(A,B,B,C,0)",
                            "M(M(A,B,C'),M(A,B',C),M(A',B,0))", "M5(M(A,B,C)',M5(A,A,B,C,1),A,B,C)",
                            "M(M(A,B,0),M(A',B',C),M(A,C',1))", "M(M5(A,B,B,C,C),1,M5(A,B,C,1,1)')", "A''", "1'"} )
  {
    INFO( text );
    CHECK( minterms_of( simulate( parse_expr( text ) ) ) == oracle::text_minterms( text ) );
  }
}

TEST_CASE( "printing and reparsing preserves the function", "[expression][property]" )
{
  std::mt19937 rng( 20261016u );
  for ( int trial = 0; trial < 300; ++trial )
  {
    auto const n = std::uniform_int_distribution<uint32_t>( 1u, 5u )( rng );
    auto const net = random_network( rng, n, std::uniform_int_distribution<uint32_t>( 1u, 12u )( rng ) );
    auto const names = default_variable_names( n );
    auto const text = to_expression( net, names );
    auto const canonical = to_canonical_expression( net, names );
    INFO( text );
    auto const again = parse_expr( text, names );
    REQUIRE( simulate( again ) == simulate( net ) );
    REQUIRE( simulate( parse_expr( canonical, names ) ) == simulate( net ) );
    REQUIRE( to_canonical_expression( again, names ) == canonical );

    if ( n <= 3u )
    {
      REQUIRE( minterms_of( simulate( net ) ) == oracle::text_minterms( text, names ) );
    }
  }
}

TEST_CASE( "canonical text ignores operand order", "[expression]" )
{
  CHECK( to_canonical_expression( parse_expr( "M5(C,1,B',A,0)" ) ) == to_canonical_expression( parse_expr( "M5(0,1,A,B',C)" ) ) );
  CHECK( to_expression( parse_expr( "M(C,A,B)" ) ) == "M(C,A,B)" );
  CHECK( to_canonical_expression( parse_expr( "M(C,A,B)" ) ) == "M(A,B,C)" );
}
