#pragma once

#include <array>

#include "sixj/bigrational.hpp"
#include "sixj/symbols.hpp"

namespace sixj {

/// Tetrahedron with edge lengths equal to the spins. Vertices P0..P3 are placed so that
/// j1 = |P2P3|, j2 = |P1P3|, j3 = |P1P2|, J1 = |P0P1|, J2 = |P0P2|, J3 = |P0P3|; the
/// edges j_c and J_c are opposite.
struct TetGeometry {
  std::array<double, 6> lengths{};
  double volume = 0.0;
  std::array<double, 6> theta_ext{};  ///< exterior dihedral angle at each edge
  bool euclidean = false;
};

/// 288 V^2 as an exact rational.
BigRational cayley_menger(const SpinSextuple& s);

/// Every face strictly satisfies the triangle inequalities and the Cayley-Menger
/// determinant is strictly positive.
bool is_euclidean(const SpinSextuple& s);

/// Throws NonEuclidean unless is_euclidean(s).
TetGeometry tet_from_spins(const SpinSextuple& s);

struct DiscriminantCheck {
  double delta_alg = 0.0;  ///< 4AC - B^2
  double delta_geo = 0.0;  ///< 576 V^2 from the floating volume
  BigRational delta_alg_exact;
  BigRational delta_geo_exact;  ///< twice the Cayley-Menger determinant
};

DiscriminantCheck discriminant_check(const SpinSextuple& s);

}  // namespace sixj
