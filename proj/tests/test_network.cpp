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
#include <qcamaj/network.hpp>

#include <algorithm>
#include <array>
#include <numeric>

using namespace qcamaj;

namespace
{

/* one-node network over constants: kind applied to the given constant children */
network constant_gate( node_kind kind, std::vector<bool> const& values )
{
  network_builder b( 1u );
  std::vector<node_index> c;
  for ( bool v : values )
  {
    c.push_back( b.create_constant( v ) );
  }
  switch ( kind )
  {
  case node_kind::inverter:
    return b.build( b.create_not( c[0] ) );
  case node_kind::maj3:
    return b.build( b.create_maj3( c[0], c[1], c[2] ) );
  default:
    return b.build( b.create_maj5( c[0], c[1], c[2], c[3], c[4] ) );
  }
}

/* five independent variables, root = M5 over a permutation of them */
network maj5_over( std::array<uint32_t, 5u> const& order )
{
  network_builder b( 5u );
  std::array<node_index, 5u> in;
  for ( uint32_t i = 0u; i < 5u; ++i )
  {
    in[i] = b.create_input( i );
  }
  return b.build( b.create_maj5( in[order[0]], in[order[1]], in[order[2]], in[order[3]], in[order[4]] ) );
}

bool sop5( assignment const& v )
{
  /* all ten products of three distinct inputs */
  bool any = false;
  for ( int i = 0; i < 5; ++i )
    for ( int j = i + 1; j < 5; ++j )
      for ( int k = j + 1; k < 5; ++k )
        any = any || ( v[i] && v[j] && v[k] );
  return any;
}

} // namespace

TEST_CASE( "evaluate on constant gates", "[network]" )
{
  CHECK( evaluate( constant_gate( node_kind::maj3, {true, true, false} ), {false} ) );
  CHECK_FALSE( evaluate( constant_gate( node_kind::maj3, {true, false, false} ), {false} ) );
  CHECK( evaluate( constant_gate( node_kind::maj5, {false, false, true, true, true} ), {false} ) );
  CHECK_FALSE( evaluate( constant_gate( node_kind::maj5, {false, false, false, true, true} ), {false} ) );
  CHECK_FALSE( evaluate( constant_gate( node_kind::inverter, {true} ), {false} ) );
  CHECK( evaluate( constant_gate( node_kind::inverter, {false} ), {false} ) );
}

TEST_CASE( "evaluate rejects wrong arity", "[network]" )
{
  auto const net = parse_expr( "M(A,B,C)" );
  CHECK_THROWS_AS( evaluate( net, {true, false} ), arity_error );
  CHECK_THROWS_AS( evaluate( net, {true, false, true, false} ), arity_error );
}

TEST_CASE( "simulate tabulates in minterm order", "[network]" )
{
  CHECK( minterms_of( simulate( parse_expr( "M(A,B,0)" ) ) ) == std::set<uint32_t>{6u, 7u} );
  CHECK( minterms_of( simulate( parse_expr( "M(A,B,1)" ) ) ) == std::set<uint32_t>{2u, 3u, 4u, 5u, 6u, 7u} );
  CHECK( minterms_of( simulate( parse_expr( "M5(A,B,C,1,1)" ) ) ) == std::set<uint32_t>{1u, 2u, 3u, 4u, 5u, 6u, 7u} );

  network_builder wide( 9u );
  auto const too_wide = wide.build( wide.create_input( 8u ) );
  CHECK_THROWS_AS( simulate( too_wide ), capacity_error );
}

TEST_CASE( "majority gates are symmetric in their children", "[network][property]" )
{
  std::array<uint32_t, 5u> perm{0u, 1u, 2u, 3u, 4u};
  auto const reference = simulate( maj5_over( perm ) );
  auto const reference_cost = cost( maj5_over( perm ) );
  do
  {
    auto const net = maj5_over( perm );
    REQUIRE( simulate( net ) == reference );
    REQUIRE( cost( net ) == reference_cost );
  } while ( std::next_permutation( perm.begin(), perm.end() ) );

  for ( auto const* text : {"M(A,B,C)", "M(A,C,B)", "M(B,A,C)", "M(B,C,A)", "M(C,A,B)", "M(C,B,A)"} )
  {
    CHECK( simulate( parse_expr( text ) ).to_uint64() == 0xe8u );
  }
}

TEST_CASE( "majority gates are self-dual", "[network][property]" )
{
  for ( uint32_t k = 0u; k < 8u; ++k )
  {
    auto const v = assignment_of( 3u, k ), w = assignment_of( 3u, 7u - k );
    REQUIRE( evaluate( parse_expr( "M(A,B,C)" ), v ) != evaluate( parse_expr( "M(A,B,C)" ), w ) );
  }
  auto const m5 = maj5_over( {0u, 1u, 2u, 3u, 4u} );
  for ( uint32_t k = 0u; k < 32u; ++k )
  {
    REQUIRE( evaluate( m5, assignment_of( 5u, k ) ) != evaluate( m5, assignment_of( 5u, 31u - k ) ) );
  }
}

TEST_CASE( "five-input majority equals its ten-product sum of products", "[network][property]" )
{
  auto const m5 = maj5_over( {0u, 1u, 2u, 3u, 4u} );
  for ( uint32_t k = 0u; k < 32u; ++k )
  {
    auto const v = assignment_of( 5u, k );
    REQUIRE( evaluate( m5, v ) == sop5( v ) );
  }
}

TEST_CASE( "constant fixing yields AND and OR", "[network][property]" )
{
  auto const and2 = from_minterms( 3u, {6u, 7u} ), or2 = from_minterms( 3u, {2u, 3u, 4u, 5u, 6u, 7u} );
  CHECK( simulate( parse_expr( "M(A,B,0)" ) ) == and2 );
  CHECK( simulate( parse_expr( "M(A,B,1)" ) ) == or2 );
  CHECK( simulate( parse_expr( "M5(A,B,C,0,0)" ) ) == from_minterms( 3u, {7u} ) );
  CHECK( simulate( parse_expr( "M5(A,B,C,1,1)" ) ) == ~from_minterms( 3u, {0u} ) );
}

TEST_CASE( "double negation is the identity", "[network][property]" )
{
  for ( auto const* text : {"A", "M(A,B',C)", "M5(A,B,C,1,0)", "0"} )
  {
    auto const base = simulate( parse_expr( text ) );
    CHECK( simulate( parse_expr( std::string( text ) + "''" ) ) == base );
    CHECK( simulate( parse_expr( std::string( text ) + "'" ) ) == ~base );
  }
}

TEST_CASE( "cost census", "[network][cost]" )
{
  CHECK( cost( parse_expr( "M(M(B,C,0),A,1)" ) ) == cost_report{2u, 0u, 0u, 2u, 2u} );
  CHECK( cost( parse_expr( "M(M5(A,B,B,C,C),1,M5(A,B,C,1,1)')" ) ) == cost_report{1u, 2u, 1u, 4u, 2u} );
  CHECK( cost( parse_expr( "M(M(A,B,0),M(A',B',C),M(A,C',1))" ) ) == cost_report{4u, 0u, 3u, 7u, 2u} );
  CHECK( cost( parse_expr( "A" ) ) == cost_report{} );
  CHECK( cost( parse_expr( "1" ) ) == cost_report{} );

  /* inverters add gates but not levels */
  CHECK( cost( parse_expr( "M(A,B,C)''" ) ) == cost_report{1u, 0u, 2u, 3u, 1u} );
  CHECK( cost( parse_expr( "A'" ) ) == cost_report{0u, 0u, 1u, 1u, 0u} );
}

TEST_CASE( "shared subterms are counted once", "[network][cost]" )
{
  /* M(A,B,C) appears twice in the text but once in the network */
  auto const net = parse_expr( "M5(A,B,C,M(A,B,C)',M(C,B,A)')" );
  CHECK( cost( net ) == cost_report{1u, 1u, 1u, 3u, 2u} );

  network_builder b( 3u );
  auto const a = b.create_input( 0u ), bb = b.create_input( 1u ), c = b.create_input( 2u );
  auto const m = b.create_maj3( a, bb, c );
  auto const s = b.create_maj5( a, bb, c, b.create_not( m ), b.create_not( m ) );
  auto const both = b.build( s );
  std::array<node_index, 2u> const outputs{s, m};
  CHECK( cost( both, outputs ) == cost_report{1u, 1u, 1u, 3u, 2u} );
  std::array<node_index, 1u> const carry_only{m};
  CHECK( cost( both, carry_only ) == cost_report{1u, 0u, 0u, 1u, 1u} );
}

TEST_CASE( "network validation", "[network]" )
{
  CHECK_THROWS_AS( network( 3u, {}, 0u ), std::invalid_argument );
  CHECK_THROWS_AS( network( 3u, {{node_kind::input, 3u, {}}}, 0u ), std::invalid_argument );
  CHECK_THROWS_AS( network( 3u, {{node_kind::inverter, 0u, {0u}}}, 0u ), std::invalid_argument );
  CHECK_THROWS_AS( network( 3u, {{node_kind::constant, 0u, {}}}, 1u ), std::invalid_argument );
  CHECK_THROWS_AS( network_builder( 0u ), std::invalid_argument );
  network_builder b( 2u );
  CHECK_THROWS_AS( b.create_input( 2u ), std::out_of_range );
  CHECK_THROWS_AS( b.create_not( 5u ), std::out_of_range );
}

TEST_CASE( "structural hashing ignores operand order", "[network]" )
{
  network_builder b( 3u );
  auto const a = b.create_input( 0u ), bb = b.create_input( 1u ), c = b.create_input( 2u );
  CHECK( b.create_input( 0u ) == a );
  CHECK( b.create_maj3( a, bb, c ) == b.create_maj3( c, a, bb ) );
  CHECK( b.create_not( a ) == b.create_not( a ) );
  CHECK( b.create_constant( true ) == b.create_constant( true ) );
  CHECK( b.create_constant( true ) != b.create_constant( false ) );
  CHECK( b.size() == 7u );
}
