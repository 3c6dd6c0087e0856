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
  \file cellsim.hpp
  \brief Bistable relaxation model of QCA cell layouts

  Cells sit on an integer lattice (2D for standard four-dot cells, 3D for
  eight-dot cube cells).  Each cell carries a polarization in [-1, +1].
  Driver cells are fixed at +1 or -1; free and output cells relax to

      P_i = f( gain * sum_j w(i,j) * P_j ),     f(x) = x / sqrt(1 + x^2)

  where w(i,j) depends only on the lattice distance: `neighbor` for face
  adjacent cells (distance 1), `diagonal` for diagonal cells (distance
  sqrt 2), zero further away.  A negative diagonal weight makes diagonal
  cells anti-align, which is what lets the fork-and-converge inverter work.

  Relaxation uses Gauss-Seidel sweeps in cell-list order starting from
  P = 0 on every non-driver cell.  Since f is odd and the update is linear in
  the neighbor polarizations, flipping every driver flips every converged
  polarization exactly.
*/

#pragma once

#include "errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcamaj
{

/*! \brief Charges on the four dots of a standard cell. */
struct charge_state4
{
  std::array<double, 4u> rho{};
};

/*! \brief Charges on the eight dots of a cube cell. */
struct charge_state8
{
  std::array<double, 8u> rho{};
};

namespace detail
{

template<std::size_t N>
double signed_charge_ratio( std::array<double, N> const& rho, std::array<int, N> const& sign )
{
  double total = 0.0, diff = 0.0;
  for ( std::size_t i = 0u; i < N; ++i )
  {
    if ( !( rho[i] >= 0.0 ) || !std::isfinite( rho[i] ) )
    {
      throw std::domain_error( "dot charge must be finite and non-negative" );
    }
    total += rho[i];
    diff += sign[i] * rho[i];
  }
  if ( total <= 0.0 )
  {
    throw degenerate_charge_error( "total cell charge is zero" );
  }
  return diff / total;
}

} // namespace detail

/*! \brief Polarization of a four-dot cell: ((r2 + r4) - (r1 + r3)) / (r1 + r2 + r3 + r4).

  Dots are numbered 1..4 and stored at rho[0..3].
*/
inline double polarization_4dot( charge_state4 const& q )
{
  return detail::signed_charge_ratio<4u>( q.rho, {-1, +1, -1, +1} );
}

/*! \brief Polarization of a cube cell: dots 1, 3, 6, 8 count +1 and dots 2, 4, 5, 7 count -1.

  Dots are numbered 1..8 and stored at rho[0..7].
*/
inline double polarization_8dot( charge_state8 const& q )
{
  return detail::signed_charge_ratio<8u>( q.rho, {+1, -1, +1, -1, -1, +1, -1, +1} );
}

enum class cell_role : uint8_t
{
  driver,
  free,
  output
};

enum class cell_type : uint8_t
{
  /* four-dot cells in the plane */
  standard,

  /* eight-dot cube cells in space */
  cube
};

inline std::string to_string( cell_role role )
{
  switch ( role )
  {
  case cell_role::driver:
    return "driver";
  case cell_role::free:
    return "free";
  case cell_role::output:
    return "output";
  }
  return "?";
}

inline std::string to_string( cell_type type )
{
  return type == cell_type::standard ? "standard" : "cube";
}

struct lattice_point
{
  int32_t x{0};
  int32_t y{0};
  int32_t z{0};

  friend bool operator==( lattice_point const&, lattice_point const& ) = default;
};

inline int64_t squared_distance( lattice_point const& a, lattice_point const& b ) noexcept
{
  auto const dx = int64_t{a.x} - b.x, dy = int64_t{a.y} - b.y, dz = int64_t{a.z} - b.z;
  return dx * dx + dy * dy + dz * dz;
}

struct cell
{
  lattice_point position;
  cell_role role{cell_role::free};
  double polarization{0.0};
};

/*! \brief Interaction weights and response gain.

  Weights are dimensionless; `gain` plays the role of the ratio between the
  cell-cell interaction energy and the intra-cell tunneling energy.  With
  gain 1 a five-cell majority gate settles to |P| < 0.4 at its output when
  the two inputs diagonal to the output disagree with the majority; the
  default gain keeps every built-in layout above 0.5.
*/
struct coupling_model
{
  double neighbor{1.0};
  double diagonal{-0.2};
  double gain{5.0};

  double weight( lattice_point const& a, lattice_point const& b ) const noexcept
  {
    switch ( squared_distance( a, b ) )
    {
    case 1:
      return neighbor;
    case 2:
      return diagonal;
    default:
      return 0.0;
    }
  }
};

struct relax_params
{
  double tolerance{1e-6};
  uint32_t max_iterations{1000u};
};

struct relax_result
{
  std::vector<double> polarizations;
  uint32_t sweeps{0u};

  /* largest per-cell change in the last sweep */
  double residual{0.0};

  /* largest per-cell change of every sweep */
  std::vector<double> trace;
};

/*! \brief Cell layout with a designated output and precomputed couplings. */
class cell_grid
{
public:
  cell_grid( cell_type type, std::vector<cell> cells, coupling_model const& model = {} )
      : type_( type ), cells_( std::move( cells ) ), model_( model )
  {
    std::size_t outputs = 0u;
    for ( std::size_t i = 0u; i < cells_.size(); ++i )
    {
      auto const& c = cells_[i];
      if ( type_ == cell_type::standard && c.position.z != 0 )
      {
        throw std::invalid_argument( "standard cells must lie in the z = 0 plane" );
      }
      if ( c.role == cell_role::driver && c.polarization != 1.0 && c.polarization != -1.0 )
      {
        throw std::invalid_argument( "driver polarization must be +1 or -1" );
      }
      if ( !( std::abs( c.polarization ) <= 1.0 ) )
      {
        throw std::invalid_argument( "polarization outside [-1, +1]" );
      }
      if ( c.role == cell_role::output )
      {
        output_ = i;
        ++outputs;
      }
      for ( std::size_t j = 0u; j < i; ++j )
      {
        if ( cells_[j].position == c.position )
        {
          throw std::invalid_argument( "two cells share a lattice position" );
        }
      }
    }
    if ( outputs != 1u )
    {
      throw std::invalid_argument( "a cell grid needs exactly one output cell" );
    }

    auto const n = cells_.size();
    weights_.assign( n * n, 0.0 );
    for ( std::size_t i = 0u; i < n; ++i )
    {
      for ( std::size_t j = 0u; j < n; ++j )
      {
        if ( i != j )
        {
          weights_[i * n + j] = model_.weight( cells_[i].position, cells_[j].position );
        }
      }
    }
  }

  cell_type type() const noexcept
  {
    return type_;
  }

  coupling_model const& model() const noexcept
  {
    return model_;
  }

  std::size_t size() const noexcept
  {
    return cells_.size();
  }

  std::vector<cell> const& cells() const noexcept
  {
    return cells_;
  }

  cell const& at( std::size_t i ) const
  {
    return cells_.at( i );
  }

  std::size_t output_index() const noexcept
  {
    return output_;
  }

  double output_polarization() const noexcept
  {
    return cells_[output_].polarization;
  }

  double coupling( std::size_t i, std::size_t j ) const
  {
    if ( i >= size() || j >= size() )
    {
      throw std::out_of_range( "cell index out of range" );
    }
    return weights_[i * size() + j];
  }

  std::size_t count( cell_role role ) const
  {
    return static_cast<std::size_t>(
        std::count_if( cells_.begin(), cells_.end(), [role]( auto const& c ) { return c.role == role; } ) );
  }

  std::vector<double> polarizations() const
  {
    std::vector<double> p;
    p.reserve( cells_.size() );
    for ( auto const& c : cells_ )
    {
      p.push_back( c.polarization );
    }
    return p;
  }

private:
  friend relax_result relax( cell_grid& grid, relax_params const& params );

  cell_type type_;
  std::vector<cell> cells_;
  coupling_model model_;
  std::vector<double> weights_;
  std::size_t output_{0u};
};

inline double cell_response( double x ) noexcept
{
  return x / std::sqrt( 1.0 + x * x );
}

/*! \brief Relaxes the free and output cells of `grid` in place.

  Throws `convergence_error` if the residual is still >= tolerance after
  `max_iterations` sweeps; the grid then holds the last iterate.
*/
inline relax_result relax( cell_grid& grid, relax_params const& params = {} )
{
  if ( !( params.tolerance > 0.0 ) || params.max_iterations < 1u )
  {
    throw std::invalid_argument( "relaxation needs tolerance > 0 and at least one sweep" );
  }
  auto& cells = grid.cells_;
  auto const n = cells.size();
  auto const gain = grid.model_.gain;

  relax_result result;
  for ( uint32_t sweep = 1u; sweep <= params.max_iterations; ++sweep )
  {
    double residual = 0.0;
    for ( std::size_t i = 0u; i < n; ++i )
    {
      if ( cells[i].role == cell_role::driver )
      {
        continue;
      }
      double field = 0.0;
      for ( std::size_t j = 0u; j < n; ++j )
      {
        field += grid.weights_[i * n + j] * cells[j].polarization;
      }
      auto const updated = cell_response( gain * field );
      residual = std::max( residual, std::abs( updated - cells[i].polarization ) );
      cells[i].polarization = updated;
    }
    result.trace.push_back( residual );
    result.sweeps = sweep;
    result.residual = residual;
    if ( residual < params.tolerance )
    {
      result.polarizations = grid.polarizations();
      return result;
    }
  }
  throw convergence_error( result.sweeps, result.residual );
}

/*! \brief Logic value of the output cell; throws `undecided_error` if |P| <= threshold. */
inline bool read_logic( cell_grid const& grid, double threshold = 0.5 )
{
  auto const p = grid.output_polarization();
  if ( p > threshold )
  {
    return true;
  }
  if ( p < -threshold )
  {
    return false;
  }
  throw undecided_error( p, threshold );
}

inline double to_polarization( bool value ) noexcept
{
  return value ? 1.0 : -1.0;
}

/*! \brief Straight wire along x: driver at 0, output at length - 1. */
inline cell_grid build_wire( uint32_t length, double driver, coupling_model const& model = {} )
{
  if ( length < 2u )
  {
    throw size_error( "a wire needs at least two cells" );
  }
  std::vector<cell> cells;
  for ( uint32_t i = 0u; i < length; ++i )
  {
    auto const role = i == 0u ? cell_role::driver : ( i + 1u == length ? cell_role::output : cell_role::free );
    cells.push_back( {{static_cast<int32_t>( i ), 0, 0}, role, i == 0u ? driver : 0.0} );
  }
  return cell_grid( cell_type::standard, std::move( cells ), model );
}

/*! \brief Eleven-cell inverter.

      y=+1          . o o . . . .
      y= 0    D o o . X o o O
      y=-1          . o o . . . .
          x = 0 1 2 3 4 5 6 7

  The input forks at x = 2 into two short parallel wires whose ends sit
  diagonally to the convergence cell X at (4, 0); the anti-aligning diagonal
  couplings invert the signal, and a three-cell tail carries it to O.
*/
inline cell_grid build_inverter( double driver, coupling_model const& model = {} )
{
  std::vector<cell> cells{
      {{0, 0, 0}, cell_role::driver, driver},
      {{1, 0, 0}, cell_role::free},
      {{2, 0, 0}, cell_role::free},
      {{2, 1, 0}, cell_role::free},
      {{3, 1, 0}, cell_role::free},
      {{2, -1, 0}, cell_role::free},
      {{3, -1, 0}, cell_role::free},
      {{4, 0, 0}, cell_role::free},
      {{5, 0, 0}, cell_role::free},
      {{6, 0, 0}, cell_role::free},
      {{7, 0, 0}, cell_role::output}};
  return cell_grid( cell_type::standard, std::move( cells ), model );
}

/*! \brief Five-cell majority cross: inputs up, left and bottom of the center, output to the right. */
inline cell_grid build_maj3( double a, double b, double c, coupling_model const& model = {} )
{
  std::vector<cell> cells{
      {{1, 1, 0}, cell_role::driver, a},
      {{0, 0, 0}, cell_role::driver, b},
      {{1, -1, 0}, cell_role::driver, c},
      {{1, 0, 0}, cell_role::free},
      {{2, 0, 0}, cell_role::output}};
  return cell_grid( cell_type::standard, std::move( cells ), model );
}

/*! \brief Seven cube cells: inputs on the -x, +x, -y, +y, -z faces of the center, output on +z. */
inline cell_grid build_maj5( std::array<double, 5u> const& inputs, coupling_model const& model = {} )
{
  std::array<lattice_point, 5u> const faces{{{-1, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, 1, 0}, {0, 0, -1}}};
  std::vector<cell> cells;
  for ( auto i = 0u; i < 5u; ++i )
  {
    cells.push_back( {faces[i], cell_role::driver, inputs[i]} );
  }
  cells.push_back( {{0, 0, 0}, cell_role::free} );
  cells.push_back( {{0, 0, 1}, cell_role::output} );
  return cell_grid( cell_type::cube, std::move( cells ), model );
}

/*! \brief Grid as text:

      qcamaj-grid 1
      type standard
      model <neighbor> <diagonal> <gain>
      cell <x> <y> <z> <role> <polarization>
*/
inline void write_grid( std::ostream& os, cell_grid const& grid )
{
  auto const old_precision = os.precision( 17 );
  os << "qcamaj-grid 1\n";
  os << "type " << to_string( grid.type() ) << '\n';
  os << "model " << grid.model().neighbor << ' ' << grid.model().diagonal << ' ' << grid.model().gain << '\n';
  for ( auto const& c : grid.cells() )
  {
    os << "cell " << c.position.x << ' ' << c.position.y << ' ' << c.position.z << ' ' << to_string( c.role ) << ' '
       << c.polarization << '\n';
  }
  os.precision( old_precision );
}

inline cell_grid read_grid( std::istream& is )
{
  std::string line, word;
  std::size_t offset = 0u;
  bool header = false;
  cell_type type = cell_type::standard;
  coupling_model model;
  std::vector<cell> cells;
  while ( std::getline( is, line ) )
  {
    auto const line_offset = offset;
    offset += line.size() + 1u;
    std::istringstream ls( line );
    if ( !( ls >> word ) || word[0] == '#' )
    {
      continue;
    }
    auto const fail = [&]( std::string const& what ) { throw parse_error( what, line_offset ); };
    if ( !header )
    {
      int version = 0;
      if ( word != "qcamaj-grid" || !( ls >> version ) || version != 1 )
      {
        fail( "expected header 'qcamaj-grid 1'" );
      }
      header = true;
    }
    else if ( word == "type" )
    {
      ls >> word;
      if ( word != "standard" && word != "cube" )
      {
        fail( "unknown cell type '" + word + "'" );
      }
      type = word == "standard" ? cell_type::standard : cell_type::cube;
    }
    else if ( word == "model" )
    {
      if ( !( ls >> model.neighbor >> model.diagonal >> model.gain ) )
      {
        fail( "malformed model record" );
      }
    }
    else if ( word == "cell" )
    {
      cell c;
      std::string role;
      if ( !( ls >> c.position.x >> c.position.y >> c.position.z >> role >> c.polarization ) )
      {
        fail( "malformed cell record" );
      }
      if ( role == "driver" )
      {
        c.role = cell_role::driver;
      }
      else if ( role == "free" )
      {
        c.role = cell_role::free;
      }
      else if ( role == "output" )
      {
        c.role = cell_role::output;
      }
      else
      {
        fail( "unknown cell role '" + role + "'" );
      }
      cells.push_back( c );
    }
    else
    {
      fail( "unknown record '" + word + "'" );
    }
  }
  if ( !header )
  {
    throw parse_error( "missing header", 0u );
  }
  return cell_grid( type, std::move( cells ), model );
}

/*! \brief Per-sweep residuals, one `sweep residual` pair per line. */
inline void write_trace( std::ostream& os, relax_result const& result )
{
  os << "# sweep residual\n";
  for ( std::size_t i = 0u; i < result.trace.size(); ++i )
  {
    os << ( i + 1u ) << ' ' << result.trace[i] << '\n';
  }
}

} // namespace qcamaj
