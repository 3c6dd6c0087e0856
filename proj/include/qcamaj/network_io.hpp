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
  \file network_io.hpp
  \brief Line-oriented text serialization of networks

  Format (one record per line, `#` starts a comment):

      qcamaj-network 1
      vars A B C
      0 input 0
      1 const 1
      2 not 0
      3 maj3 0 1 2
      4 maj5 0 1 2 3 3
      output 4

  Node ids are consecutive from 0 and every fanin id is smaller than the id
  of the node that uses it.  Inputs carry the variable index, constants
  their value.  The writer output depends only on the network, so it is
  stable across runs.
*/

#pragma once

#include "errors.hpp"
#include "network.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace qcamaj
{

inline void write_network( std::ostream& os, network const& net,
                           std::vector<std::string> const& variable_names = default_variable_names() )
{
  os << "qcamaj-network 1\n";
  os << "vars";
  for ( uint32_t i = 0u; i < net.num_vars(); ++i )
  {
    os << ' ' << ( i < variable_names.size() ? variable_names[i] : "x" + std::to_string( i ) );
  }
  os << '\n';
  for ( node_index i = 0u; i < net.size(); ++i )
  {
    auto const& n = net.at( i );
    os << i << ' ' << to_string( n.kind );
    if ( n.kind == node_kind::input || n.kind == node_kind::constant )
    {
      os << ' ' << n.value;
    }
    for ( auto c : n.children() )
    {
      os << ' ' << c;
    }
    os << '\n';
  }
  os << "output " << net.output() << '\n';
}

inline std::string to_text( network const& net, std::vector<std::string> const& variable_names = default_variable_names() )
{
  std::ostringstream os;
  write_network( os, net, variable_names );
  return os.str();
}

/*! \brief Parsed network document: the network plus its variable names. */
struct network_document
{
  network net;
  std::vector<std::string> variable_names;
};

/*! \brief Reads the format produced by `write_network`.

  Errors are reported as `parse_error` whose position is the character offset
  of the offending line in the input.
*/
inline network_document read_network( std::istream& is )
{
  std::vector<std::string> names;
  std::vector<node> nodes;
  int64_t output = -1;
  bool header = false, have_vars = false;

  std::string line;
  std::size_t offset = 0u;
  while ( std::getline( is, line ) )
  {
    auto const line_offset = offset;
    offset += line.size() + 1u;
    if ( auto hash = line.find( '#' ); hash != std::string::npos )
    {
      line.erase( hash );
    }
    std::istringstream ls( line );
    std::string word;
    if ( !( ls >> word ) )
    {
      continue;
    }
    auto const fail = [&]( std::string const& what ) { throw parse_error( what, line_offset ); };

    if ( !header )
    {
      int version = 0;
      if ( word != "qcamaj-network" || !( ls >> version ) || version != 1 )
      {
        fail( "expected header 'qcamaj-network 1'" );
      }
      header = true;
      continue;
    }
    if ( word == "vars" )
    {
      std::string name;
      while ( ls >> name )
      {
        names.push_back( name );
      }
      have_vars = true;
      continue;
    }
    if ( word == "output" )
    {
      if ( !( ls >> output ) || output < 0 )
      {
        fail( "malformed output record" );
      }
      continue;
    }

    std::size_t id = 0u;
    try
    {
      id = std::stoul( word );
    }
    catch ( std::exception const& )
    {
      fail( "unknown record '" + word + "'" );
    }
    if ( id != nodes.size() )
    {
      fail( "node ids must be consecutive from 0" );
    }
    std::string kind_text;
    ls >> kind_text;
    node n;
    if ( kind_text == "input" )
    {
      n.kind = node_kind::input;
    }
    else if ( kind_text == "const" )
    {
      n.kind = node_kind::constant;
    }
    else if ( kind_text == "not" )
    {
      n.kind = node_kind::inverter;
    }
    else if ( kind_text == "maj3" )
    {
      n.kind = node_kind::maj3;
    }
    else if ( kind_text == "maj5" )
    {
      n.kind = node_kind::maj5;
    }
    else
    {
      fail( "unknown node kind '" + kind_text + "'" );
    }
    std::vector<int64_t> args;
    int64_t a = 0;
    while ( ls >> a )
    {
      args.push_back( a );
    }
    if ( !ls.eof() )
    {
      fail( "non-numeric node argument" );
    }
    auto const expected = ( n.kind == node_kind::input || n.kind == node_kind::constant ) ? 1u : fanin_count( n.kind );
    if ( args.size() != expected )
    {
      fail( kind_text + " expects " + std::to_string( expected ) + " arguments" );
    }
    for ( auto v : args )
    {
      if ( v < 0 )
      {
        fail( "negative node argument" );
      }
    }
    if ( n.kind == node_kind::input || n.kind == node_kind::constant )
    {
      n.value = static_cast<uint32_t>( args[0] );
    }
    else
    {
      for ( auto j = 0u; j < args.size(); ++j )
      {
        if ( static_cast<std::size_t>( args[j] ) >= id )
        {
          fail( "fanin " + std::to_string( args[j] ) + " does not precede node " + std::to_string( id ) );
        }
        n.fanins[j] = static_cast<node_index>( args[j] );
      }
    }
    nodes.push_back( n );
  }

  if ( !header || !have_vars || output < 0 )
  {
    throw parse_error( "incomplete network document (header, vars and output are required)", offset );
  }
  try
  {
    network net( static_cast<uint32_t>( names.size() ), std::move( nodes ), static_cast<node_index>( output ) );
    return {std::move( net ), std::move( names )};
  }
  catch ( std::invalid_argument const& e )
  {
    throw parse_error( e.what(), offset );
  }
}

inline network_document read_network( std::string const& text )
{
  std::istringstream is( text );
  return read_network( is );
}

} // namespace qcamaj
