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
  \file errors.hpp
  \brief Exception types thrown by qcamaj

  Every error derives from a standard exception class so callers that only
  care about the broad category can catch the standard type.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcamaj
{

/*! \brief Assignment or operand count does not match the function arity. */
class arity_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/*! \brief A problem exceeds a fixed size limit (e.g. too many variables). */
class capacity_error : public std::length_error
{
public:
  using std::length_error::length_error;
};

/*! \brief A layout was requested with an impossible size. */
class size_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/*! \brief Malformed text input; carries the 0-based character offset. */
class parse_error : public std::invalid_argument
{
public:
  parse_error( std::string const& message, std::size_t position )
      : std::invalid_argument( message + " at position " + std::to_string( position ) ),
        position_( position )
  {
  }

  std::size_t position() const noexcept
  {
    return position_;
  }

private:
  std::size_t position_;
};

/*! \brief An expression references a name that is not in the variable list. */
class unknown_variable_error : public parse_error
{
public:
  unknown_variable_error( std::string const& name, std::size_t position )
      : parse_error( "unknown variable '" + name + "'", position ),
        name_( name )
  {
  }

  std::string const& name() const noexcept
  {
    return name_;
  }

private:
  std::string name_;
};

/*! \brief Cell charge vector has zero total charge. */
class degenerate_charge_error : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/*! \brief Relaxation did not reach the tolerance; carries the last residual. */
class convergence_error : public std::runtime_error
{
public:
  convergence_error( std::size_t sweeps, double residual )
      : std::runtime_error( "relaxation did not converge after " + std::to_string( sweeps ) +
                            " sweeps (residual " + std::to_string( residual ) + ")" ),
        sweeps_( sweeps ),
        residual_( residual )
  {
  }

  std::size_t sweeps() const noexcept
  {
    return sweeps_;
  }

  double residual() const noexcept
  {
    return residual_;
  }

private:
  std::size_t sweeps_;
  double residual_;
};

/*! \brief Output polarization is too weak to read as a logic value. */
class undecided_error : public std::runtime_error
{
public:
  undecided_error( double polarization, double threshold )
      : std::runtime_error( "output polarization " + std::to_string( polarization ) +
                            " is within the undecided band +/-" + std::to_string( threshold ) ),
        polarization_( polarization )
  {
  }

  double polarization() const noexcept
  {
    return polarization_;
  }

private:
  double polarization_;
};

} // namespace qcamaj
