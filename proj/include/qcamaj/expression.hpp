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
  \file expression.hpp
  \brief Textual majority expressions: parser and printers

  Grammar (whitespace is ignored):

      expr := term "'"*
      term := variable | "0" | "1"
            | "M(" expr "," expr "," expr ")"
            | "M5(" expr "," expr "," expr "," expr "," expr ")"

  A postfix apostrophe is an inverter.  Structurally identical subterms
  (same operator, same operand multiset) become one shared node.
*/

#pragma once

#include "errors.hpp"
#include "network.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qcamaj
{

namespace detail
{

class expression_parser
{
public:
  expression_parser( std::string_view text, std::vector<std::string> const& names )
      : text_( text ), names_( names ), builder_( static_cast<uint32_t>( names.size() ) )
  {
  }

  network run()
  {
    auto const root = parse_expr();
    skip_space();
    if ( pos_ != text_.size() )
    {
      throw parse_error( "unexpected '" + std::string( 1u, text_[pos_] ) + "'", pos_ );
    }
    return builder_.build( root );
  }

private:
  void skip_space()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      ++pos_;
    }
  }

  bool peek( char c )
  {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect( char c )
  {
    if ( !peek( c ) )
    {
      throw parse_error( std::string( "expected '" ) + c + "'", pos_ );
    }
    ++pos_;
  }

  node_index parse_expr()
  {
    auto n = parse_term();
    while ( peek( '\'' ) )
    {
      ++pos_;
      n = builder_.create_not( n );
    }
    return n;
  }

  static bool is_ident_start( char c )
  {
    return std::isalpha( static_cast<unsigned char>( c ) ) || c == '_';
  }

  static bool is_ident_char( char c )
  {
    return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_';
  }

  node_index parse_term()
  {
    skip_space();
    if ( pos_ >= text_.size() )
    {
      throw parse_error( "unexpected end of expression", pos_ );
    }
    auto const start = pos_;
    char const c = text_[pos_];
    if ( c == '0' || c == '1' )
    {
      ++pos_;
      return builder_.create_constant( c == '1' );
    }
    if ( !is_ident_start( c ) )
    {
      throw parse_error( "unexpected '" + std::string( 1u, c ) + "'", pos_ );
    }
    while ( pos_ < text_.size() && is_ident_char( text_[pos_] ) )
    {
      ++pos_;
    }
    std::string const ident( text_.substr( start, pos_ - start ) );
    if ( ( ident == "M" || ident == "M5" ) && peek( '(' ) )
    {
      return parse_gate( ident == "M" ? 3u : 5u, start );
    }
    auto const it = std::find( names_.begin(), names_.end(), ident );
    if ( it == names_.end() )
    {
      throw unknown_variable_error( ident, start );
    }
    return builder_.create_input( static_cast<uint32_t>( it - names_.begin() ) );
  }

  node_index parse_gate( uint32_t arity, std::size_t start )
  {
    expect( '(' );
    std::vector<node_index> operands{parse_expr()};
    while ( peek( ',' ) )
    {
      ++pos_;
      operands.push_back( parse_expr() );
    }
    expect( ')' );
    if ( operands.size() != arity )
    {
      throw parse_error( std::string( arity == 3u ? "M" : "M5" ) + " expects " + std::to_string( arity ) +
                             " operands, got " + std::to_string( operands.size() ),
                         start );
    }
    if ( arity == 3u )
    {
      return builder_.create_maj3( operands[0], operands[1], operands[2] );
    }
    return builder_.create_maj5( operands[0], operands[1], operands[2], operands[3], operands[4] );
  }

private:
  std::string_view text_;
  std::vector<std::string> const& names_;
  network_builder builder_;
  std::size_t pos_{0u};
};

inline std::string node_text( network const& net, node_index i, std::vector<std::string> const& names, bool sorted,
                              std::unordered_map<node_index, std::string>& memo )
{
  if ( auto it = memo.find( i ); it != memo.end() )
  {
    return it->second;
  }
  auto const& n = net.at( i );
  std::string text;
  switch ( n.kind )
  {
  case node_kind::input:
    text = n.value < names.size() ? names[n.value] : "x" + std::to_string( n.value );
    break;
  case node_kind::constant:
    text = n.value ? "1" : "0";
    break;
  case node_kind::inverter:
    text = node_text( net, n.fanins[0], names, sorted, memo ) + "'";
    break;
  case node_kind::maj3:
  case node_kind::maj5:
  {
    std::vector<std::string> parts;
    for ( auto c : n.children() )
    {
      parts.push_back( node_text( net, c, names, sorted, memo ) );
    }
    if ( sorted )
    {
      std::sort( parts.begin(), parts.end() );
    }
    text = n.kind == node_kind::maj3 ? "M(" : "M5(";
    for ( auto j = 0u; j < parts.size(); ++j )
    {
      text += ( j ? "," : "" ) + parts[j];
    }
    text += ')';
    break;
  }
  }
  memo.emplace( i, text );
  return text;
}

} // namespace detail

/*! \brief Parses an expression over the ordered `variable_names` (first = MSB).

  Throws `parse_error` (with position) on malformed text or wrong operand
  counts, and `unknown_variable_error` on names outside the variable list.
*/
inline network parse_expr( std::string_view text, std::vector<std::string> const& variable_names = default_variable_names() )
{
  return detail::expression_parser( text, variable_names ).run();
}

/*! \brief Expression text of node `root`, operands in stored order. */
inline std::string to_expression( network const& net, node_index root,
                                  std::vector<std::string> const& variable_names = default_variable_names() )
{
  std::unordered_map<node_index, std::string> memo;
  return detail::node_text( net, root, variable_names, false, memo );
}

inline std::string to_expression( network const& net,
                                  std::vector<std::string> const& variable_names = default_variable_names() )
{
  return to_expression( net, net.output(), variable_names );
}

/*! \brief Expression text with operands sorted, independent of fanin order. */
inline std::string to_canonical_expression( network const& net,
                                            std::vector<std::string> const& variable_names = default_variable_names() )
{
  std::unordered_map<node_index, std::string> memo;
  return detail::node_text( net, net.output(), variable_names, true, memo );
}

} // namespace qcamaj
