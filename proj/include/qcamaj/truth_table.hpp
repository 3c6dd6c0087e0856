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
  \file truth_table.hpp
  \brief Complete truth tables over at most eight ordered variables

  Minterm convention: variable 0 is the most significant bit of the minterm
  index.  Over variables (A, B, C), minterm 6 = 0b110 is the assignment
  A = 1, B = 1, C = 0.  Every module in qcamaj follows this ordering; a
  different order is obtained by renaming variables, never by reversing bits.
*/

#pragma once

#include "errors.hpp"

#include <algorithm>
#include <bitset>
#include <cctype>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcamaj
{

inline constexpr uint32_t max_num_vars = 8u;

/*! \brief Input assignment, one entry per variable, variable 0 first. */
using assignment = std::vector<bool>;

/*! \brief Complete Boolean function over `num_vars` variables.

  Structural equality is semantic equality: two tables compare equal iff they
  have the same arity and agree on every minterm.
*/
class truth_table
{
public:
  using bits_type = std::bitset<1u << max_num_vars>;

  /*! \brief Constant-false function; throws `std::domain_error` unless 1 <= num_vars <= 8. */
  explicit truth_table( uint32_t num_vars )
      : num_vars_( num_vars )
  {
    if ( num_vars < 1u || num_vars > max_num_vars )
    {
      throw std::domain_error( "truth table arity " + std::to_string( num_vars ) + " outside [1, 8]" );
    }
  }

  truth_table( uint32_t num_vars, bits_type const& bits )
      : truth_table( num_vars )
  {
    bits_ = bits & mask();
  }

  uint32_t num_vars() const noexcept
  {
    return num_vars_;
  }

  uint32_t num_bits() const noexcept
  {
    return 1u << num_vars_;
  }

  bool get_bit( uint32_t minterm ) const
  {
    check_minterm( minterm );
    return bits_[minterm];
  }

  void set_bit( uint32_t minterm, bool value = true )
  {
    check_minterm( minterm );
    bits_[minterm] = value;
  }

  bits_type const& bits() const noexcept
  {
    return bits_;
  }

  /*! \brief Low 64 bits as an integer (bit k = value on minterm k). */
  uint64_t to_uint64() const
  {
    uint64_t word = 0u;
    for ( uint32_t k = 0u; k < std::min( num_bits(), 64u ); ++k )
    {
      word |= static_cast<uint64_t>( bits_[k] ) << k;
    }
    return word;
  }

  bool is_const0() const noexcept
  {
    return bits_.none();
  }

  bool is_const1() const noexcept
  {
    return bits_.count() == num_bits();
  }

  truth_table operator~() const
  {
    return truth_table( num_vars_, ~bits_ );
  }

  friend bool operator==( truth_table const& a, truth_table const& b ) noexcept
  {
    return a.num_vars_ == b.num_vars_ && a.bits_ == b.bits_;
  }

private:
  bits_type mask() const
  {
    bits_type m;
    for ( uint32_t k = 0u; k < num_bits(); ++k )
    {
      m.set( k );
    }
    return m;
  }

  void check_minterm( uint32_t minterm ) const
  {
    if ( minterm >= num_bits() )
    {
      throw std::out_of_range( "minterm " + std::to_string( minterm ) + " outside [0, " +
                               std::to_string( num_bits() ) + ")" );
    }
  }

private:
  uint32_t num_vars_;
  bits_type bits_;
};

/*! \brief Minterm index of an assignment (variable 0 is the MSB). */
inline uint32_t minterm_index( assignment const& values )
{
  uint32_t index = 0u;
  for ( bool v : values )
  {
    index = ( index << 1u ) | static_cast<uint32_t>( v );
  }
  return index;
}

/*! \brief Assignment encoded by a minterm index (inverse of `minterm_index`). */
inline assignment assignment_of( uint32_t num_vars, uint32_t minterm )
{
  assignment values( num_vars );
  for ( uint32_t i = 0u; i < num_vars; ++i )
  {
    values[i] = ( ( minterm >> ( num_vars - 1u - i ) ) & 1u ) != 0u;
  }
  return values;
}

inline truth_table from_minterms( uint32_t num_vars, std::set<uint32_t> const& minterms )
{
  truth_table tt( num_vars );
  for ( auto m : minterms )
  {
    if ( m >= tt.num_bits() )
    {
      throw std::out_of_range( "minterm " + std::to_string( m ) + " out of range for " +
                               std::to_string( num_vars ) + " variables" );
    }
    tt.set_bit( m );
  }
  return tt;
}

inline std::set<uint32_t> minterms_of( truth_table const& tt )
{
  std::set<uint32_t> minterms;
  for ( uint32_t k = 0u; k < tt.num_bits(); ++k )
  {
    if ( tt.get_bit( k ) )
    {
      minterms.insert( k );
    }
  }
  return minterms;
}

/*! \brief Value of `tt` on an assignment; throws `arity_error` on length mismatch. */
inline bool eval_tt( truth_table const& tt, assignment const& values )
{
  if ( values.size() != tt.num_vars() )
  {
    throw arity_error( "assignment has " + std::to_string( values.size() ) + " values, function has " +
                       std::to_string( tt.num_vars() ) + " variables" );
  }
  return tt.get_bit( minterm_index( values ) );
}

/*! \brief Projection function of variable `var` over `num_vars` variables. */
inline truth_table nth_var( uint32_t num_vars, uint32_t var )
{
  truth_table tt( num_vars );
  if ( var >= num_vars )
  {
    throw std::out_of_range( "variable index " + std::to_string( var ) + " out of range" );
  }
  for ( uint32_t k = 0u; k < tt.num_bits(); ++k )
  {
    tt.set_bit( k, ( ( k >> ( num_vars - 1u - var ) ) & 1u ) != 0u );
  }
  return tt;
}

/*! \brief Renders a minterm set in `sum(...)` notation. */
inline std::string to_sum_notation( std::set<uint32_t> const& minterms )
{
  std::string text = "sum(";
  bool first = true;
  for ( auto m : minterms )
  {
    if ( !first )
    {
      text += ',';
    }
    text += std::to_string( m );
    first = false;
  }
  return text + ')';
}

inline std::string to_sum_notation( truth_table const& tt )
{
  return to_sum_notation( minterms_of( tt ) );
}

/*! \brief Parses `sum(3,4,5)` notation.

  The keyword is case-insensitive and may also be written as the UTF-8 sigma;
  whitespace anywhere is ignored.  `sum()` is the constant-false function.
*/
inline truth_table parse_minterm_set( std::string_view text, uint32_t num_vars = 3u )
{
  std::string compact;
  std::vector<std::size_t> origin;
  for ( std::size_t i = 0u; i < text.size(); ++i )
  {
    if ( !std::isspace( static_cast<unsigned char>( text[i] ) ) )
    {
      compact.push_back( text[i] );
      origin.push_back( i );
    }
  }
  auto const at = [&]( std::size_t i ) { return i < origin.size() ? origin[i] : text.size(); };

  std::size_t pos = 0u;
  if ( compact.size() >= 3u && std::tolower( static_cast<unsigned char>( compact[0] ) ) == 's' &&
       std::tolower( static_cast<unsigned char>( compact[1] ) ) == 'u' &&
       std::tolower( static_cast<unsigned char>( compact[2] ) ) == 'm' )
  {
    pos = 3u;
  }
  else if ( compact.rfind( "\xCE\xA3", 0u ) == 0u )
  {
    pos = 2u;
  }
  else
  {
    throw parse_error( "expected 'sum('", at( 0u ) );
  }

  if ( pos >= compact.size() || compact[pos] != '(' )
  {
    throw parse_error( "expected '('", at( pos ) );
  }
  ++pos;

  std::set<uint32_t> minterms;
  if ( pos < compact.size() && compact[pos] == ')' )
  {
    ++pos;
  }
  else
  {
    while ( true )
    {
      if ( pos >= compact.size() || !std::isdigit( static_cast<unsigned char>( compact[pos] ) ) )
      {
        throw parse_error( "expected minterm index", at( pos ) );
      }
      uint64_t value = 0u;
      while ( pos < compact.size() && std::isdigit( static_cast<unsigned char>( compact[pos] ) ) )
      {
        value = value * 10u + static_cast<uint64_t>( compact[pos] - '0' );
        if ( value > UINT32_MAX )
        {
          throw std::out_of_range( "minterm index too large" );
        }
        ++pos;
      }
      minterms.insert( static_cast<uint32_t>( value ) );
      if ( pos < compact.size() && compact[pos] == ',' )
      {
        ++pos;
        continue;
      }
      if ( pos < compact.size() && compact[pos] == ')' )
      {
        ++pos;
        break;
      }
      throw parse_error( "expected ',' or ')'", at( pos ) );
    }
  }
  if ( pos != compact.size() )
  {
    throw parse_error( "trailing characters", at( pos ) );
  }
  return from_minterms( num_vars, minterms );
}

/*! \brief Default variable names A, B, C, ... */
inline std::vector<std::string> default_variable_names( uint32_t num_vars = 3u )
{
  std::vector<std::string> names;
  for ( uint32_t i = 0u; i < num_vars; ++i )
  {
    names.emplace_back( 1u, static_cast<char>( 'A' + i ) );
  }
  return names;
}

/*! \brief Human-readable statement of the minterm bit order in use. */
inline std::string variable_order_note( std::vector<std::string> const& names )
{
  std::string order;
  for ( auto const& n : names )
  {
    order += ( order.empty() ? "" : "," ) + n;
  }
  if ( names.empty() )
  {
    return "variable order: (none)";
  }
  return "variable order " + order + " (" + names.front() + " is the most significant bit of the minterm index)";
}

} // namespace qcamaj
