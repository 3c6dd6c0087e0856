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

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace
{

struct run_result
{
  int status;
  std::string out;
};

run_result run( std::string const& args )
{
  auto const command = std::string( QCAMAJ_CLI_PATH ) + " " + args + " 2>/dev/null";
  FILE* pipe = popen( command.c_str(), "r" );
  REQUIRE( pipe != nullptr );
  std::string out;
  char buffer[4096];
  std::size_t n;
  while ( ( n = fread( buffer, 1, sizeof( buffer ), pipe ) ) > 0 )
  {
    out.append( buffer, n );
  }
  auto const raw = pclose( pipe );
  return {WIFEXITED( raw ) ? WEXITSTATUS( raw ) : -1, out};
}

nlohmann::json records( std::string const& args, int expected_status )
{
  auto const r = run( "--format records " + args );
  REQUIRE( r.status == expected_status );
  return nlohmann::json::parse( r.out );
}

bool contains( std::string const& haystack, std::string const& needle )
{
  return haystack.find( needle ) != std::string::npos;
}

} // namespace

TEST_CASE( "verify exit codes", "[cli]" )
{
  CHECK( run( "verify 'M5(0,0,A,B,C)' 'sum(7)'" ).status == 0 );
  CHECK( run( "verify A 'sum(4,5,6,7)'" ).status == 0 );
  CHECK( run( "verify 'M5(M(A,B,C)'\"'\"',M5(A,A,B,C,1),A,B,C)' 'sum(1,2,7)'" ).status == 1 );
  CHECK( run( "verify 'M(A,B' 'sum(7)'" ).status == 2 );
  CHECK( run( "verify 'M(A,B)' 'sum(7)'" ).status == 2 );
  CHECK( run( "verify 'M(A,B,D)' 'sum(7)'" ).status == 2 );
  CHECK( run( "verify A 'sum(8)'" ).status == 2 );
  CHECK( run( "verify A" ).status == 2 );
  CHECK( run( "frobnicate" ).status == 2 );
  CHECK( run( "" ).status == 2 );
  CHECK( run( "--help" ).status == 0 );
}

TEST_CASE( "verify report names the variable order", "[cli]" )
{
  auto const text = run( "verify 'M5(0,0,A,B,C)' 'sum(7)'" );
  CHECK( contains( text.out, "variable order A,B,C (A is the most significant bit" ) );
  CHECK( contains( text.out, "verdict      equivalent" ) );
  CHECK( contains( text.out, "qcamaj 0.1.0" ) );

  auto const j = records( "verify 'M5(0,0,A,B,C)' 'sum(7)'", 0 );
  CHECK( j["results"]["equivalent"] == true );
  CHECK( j["version"] == "0.1.0" );
  CHECK( contains( j["variable_order"].get<std::string>(), "A is the most significant" ) );

  auto const r = records( "--order C,B,A verify 'M(M(B,C,0),A,1)' 'sum(1,3,5,6,7)'", 0 );
  CHECK( contains( r["variable_order"].get<std::string>(), "C is the most significant" ) );
  CHECK( run( "--order A,A,B verify A 'sum(1)'" ).status == 2 );
  CHECK( run( "--order 'A,B,9x' verify A 'sum(1)'" ).status == 2 );
}

TEST_CASE( "text and records carry the same data", "[cli]" )
{
  auto const j = records( "verify 'M5(M(A,B,C)'\"'\"',M5(A,A,B,C,1),A,B,C)' 'sum(1,2,7)'", 1 );
  CHECK( j["results"]["computed"] == nlohmann::json::array( {3, 4, 5, 6, 7} ) );
  CHECK( j["results"]["differing"] == nlohmann::json::array( {1, 2, 3, 4, 5, 6} ) );
  auto const t = run( "verify 'M5(M(A,B,C)'\"'\"',M5(A,A,B,C,1),A,B,C)' 'sum(1,2,7)'" );
  CHECK( contains( t.out, "computed     sum(3,4,5,6,7)" ) );
  CHECK( contains( t.out, "differing    sum(1,2,3,4,5,6)" ) );
  CHECK( contains( t.out, "verdict      not equivalent" ) );
}

TEST_CASE( "synth", "[cli]" )
{
  auto const j = records( "synth 'sum(3,4,5,6,7)'", 0 );
  CHECK( j["results"]["cost"]["gates"] == 1 );
  CHECK( j["results"]["cost"]["levels"] == 1 );
  CHECK( j["results"]["verified"] == true );

  auto const zero = records( "synth 'sum()'", 0 );
  CHECK( zero["results"]["expression"] == "0" );
  CHECK( zero["results"]["cost"]["gates"] == 0 );

  auto const f = records( "synth 'sum(0,3,5,6,7)'", 0 );
  CHECK( f["results"]["cost"]["gates"].get<int>() <= 4 );

  auto const none = records( "synth 'sum(1,2,4,7)' --max-gates 1", 1 );
  CHECK( none["results"]["found"] == false );
  CHECK( run( "synth 'sum(1,2,4,7)' --max-gates 0" ).status == 2 );
  CHECK( run( "--order A,B,C,D synth 'sum(1)'" ).status == 2 );
  CHECK( run( "synth 'sum(1,2,4,7)' --no-maj5" ).status == 0 );
}

TEST_CASE( "adders", "[cli]" )
{
  auto const j = records( "adders", 0 );
  auto const& rows = j["results"]["rows"];
  REQUIRE( rows.size() == 4u );
  std::map<std::string, std::pair<int, int>> counts;
  for ( auto const& row : rows )
  {
    counts[row["name"]] = {row["cost"]["majority"].get<int>(), row["cost"]["inverters"].get<int>()};
    CHECK( row["arithmetic_ok"] == true );
  }
  CHECK( counts["classic"] == std::pair{5, 3} );
  CHECK( counts["zhang"] == std::pair{3, 2} );
  CHECK( counts["five-input"] == std::pair{2, 1} );
  CHECK( counts["classic-simplified"] == std::pair{4, 3} );
}

TEST_CASE( "audit-tables", "[cli]" )
{
  auto const j = records( "audit-tables", 0 );
  auto const& rows = j["results"]["rows"];
  REQUIRE( rows.size() == 6u );
  CHECK( rows[1]["proposed"]["cost"]["levels"] == 1 );
  CHECK( rows[1]["proposed"]["cost"]["maj5"] == 1 );
  CHECK( rows[5]["previous"]["cost"]["gates"] == 7 );
  CHECK( rows[4]["proposed"]["verdict"] == "not equivalent" );
  CHECK( contains( run( "audit-tables" ).out, "not equivalent (computes sum(3,4,5,6,7)" ) );
}

TEST_CASE( "sim", "[cli]" )
{
  CHECK( records( "sim maj3 110", 0 )["results"]["readout"] == 1 );
  CHECK( records( "sim inv 1", 0 )["results"]["readout"] == 0 );
  CHECK( records( "sim maj5 11000", 0 )["results"]["readout"] == 0 );
  auto const wire = records( "sim wire 1 --length 7", 0 );
  CHECK( wire["results"]["cells"].size() == 7u );
  CHECK( wire["results"]["agrees"] == true );

  CHECK( run( "sim maj3 111 --max-iter 1" ).status == 3 );
  CHECK( run( "sim maj3 101 --gain 1" ).status == 3 );
  CHECK( run( "sim maj3 11" ).status == 2 );
  CHECK( run( "sim maj3 1x1" ).status == 2 );
  CHECK( run( "sim nand 11" ).status == 2 );
  CHECK( run( "sim wire 1 --length 1" ).status == 2 );
}

TEST_CASE( "atlas", "[cli]" )
{
  auto const j = records( "atlas", 0 );
  CHECK( j["results"]["found"] == 256 );
  CHECK( j["results"]["verified"] == 256 );
  CHECK( j["results"]["functions"][0x96]["cost"]["gates"] == 3 );
}
