#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "../oracles/oracles.hpp"
#include "sixj/asymptotics.hpp"
#include "sixj/geometry.hpp"

using namespace sixj;

namespace {

SpinSextuple sx(std::array<std::int64_t, 6> twice) { return SpinSextuple::from_twice(twice); }

// Heron-free check of an interior dihedral angle via the cosine rule on face angles:
// cos(theta) = (cos(c) - cos(a) cos(b)) / (sin(a) sin(b)) at the vertex where the three
// face angles a, b (adjacent to the edge) and c (opposite) meet.
double face_angle(double adj1, double adj2, double opp) {
  return std::acos((adj1 * adj1 + adj2 * adj2 - opp * opp) / (2.0 * adj1 * adj2));
}

}  // namespace

TEST_CASE("regular tetrahedron") {
  const TetGeometry g = tet_from_spins(sx({2, 2, 2, 2, 2, 2}));
  CHECK(g.euclidean);
  CHECK(g.volume == doctest::Approx(1.0 / (6.0 * std::sqrt(2.0))).epsilon(1e-14));
  for (double th : g.theta_ext) CHECK(th == doctest::Approx(std::numbers::pi - std::acos(1.0 / 3.0)).epsilon(1e-13));
  CHECK(cayley_menger(sx({2, 2, 2, 2, 2, 2})) == 4);
}

TEST_CASE("flat and non-Euclidean configurations") {
  // Edge lengths 1,1,2 in a face: flat.
  CHECK_THROWS_AS(tet_from_spins(sx({2, 2, 4, 2, 2, 2})), Error);
  try {
    tet_from_spins(sx({1, 2, 2, 2, 2, 1}));
    FAIL("expected NonEuclidean");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonEuclidean);
  }
  CHECK(sgn(cayley_menger(sx({0, 2, 2, 2, 2, 2}))) <= 0);
}

TEST_CASE("discriminant identity, exact pencil case") {
  const auto s = sx({2, 2, 2, 2, 2, 2});
  const DiscriminantCheck d = discriminant_check(s);
  CHECK(coeff_A(s) == 6);
  CHECK(coeff_B(s) == 44);
  CHECK(coeff_C(triangle_sums(s)) == 81);
  CHECK(d.delta_alg_exact == 8);
  CHECK(d.delta_geo_exact == 8);
  CHECK(d.delta_geo == doctest::Approx(8.0).epsilon(1e-13));
}

TEST_CASE("discriminant identity is exact and scales as k^6") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto s = oracle::random_euclidean(rng, 40);
    const DiscriminantCheck d = discriminant_check(s);
    CHECK(d.delta_alg_exact == d.delta_geo_exact);
    const DiscriminantCheck d3 = discriminant_check(s.scaled(3));
    CHECK(d3.delta_alg_exact == 729 * d.delta_alg_exact);
  }
}

TEST_CASE("admissible non-Euclidean sextuples have non-positive discriminant") {
  std::mt19937_64 rng(29);
  int seen = 0;
  while (seen < 200) {
    const auto s = oracle::random_sextuple(rng, static_cast<Parity>(seen % 3), 20);
    if (is_euclidean(s)) continue;
    ++seen;
    CHECK(sgn(discriminant_check(s).delta_alg_exact) <= 0);
    CHECK_THROWS_AS(tet_from_spins(s), Error);
  }
}

TEST_CASE("a positive determinant with an impossible face is not Euclidean") {
  // Face (J1, J2, j3) = (21/2, 39/2, 1/2) breaks the triangle inequality.
  const auto s = sx({7, 2, 1, 21, 39, 10});
  CHECK(sgn(cayley_menger(s)) > 0);
  CHECK_FALSE(is_euclidean(s));
  try {
    tet_from_spins(s);
    FAIL("expected NonEuclidean");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonEuclidean);
  }
}

TEST_CASE("dihedral angles agree with the spherical cosine rule") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto s = oracle::random_euclidean(rng, 40);
    const TetGeometry g = tet_from_spins(s);
    const auto& L = g.lengths;
    // Edge J1 = P0P1, at vertex P0 with faces (P0P1P2) and (P0P1P3).
    const double a = face_angle(L[SpinIndex::J1], L[SpinIndex::J2], L[SpinIndex::j3]);  // angle P1-P0-P2
    const double b = face_angle(L[SpinIndex::J1], L[SpinIndex::J3], L[SpinIndex::j2]);  // angle P1-P0-P3
    const double c = face_angle(L[SpinIndex::J2], L[SpinIndex::J3], L[SpinIndex::j1]);  // angle P2-P0-P3
    const double interior = std::acos((std::cos(c) - std::cos(a) * std::cos(b)) / (std::sin(a) * std::sin(b)));
    CHECK(g.theta_ext[SpinIndex::J1] == doctest::Approx(std::numbers::pi - interior).epsilon(1e-8));
    for (double th : g.theta_ext) {
      CHECK(th > 0.0);
      CHECK(th < std::numbers::pi);
    }
  }
}

TEST_CASE("volume symmetry and scale covariance") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    const auto s = oracle::random_euclidean(rng, 30);
    const TetGeometry g = tet_from_spins(s);
    // Column permutation (1 2 3) -> (2 3 1) and a column flip j1 <-> J1 with j2 <-> J2.
    using enum SpinIndex;
    const auto perm = SpinSextuple({s[j2], s[j3], s[j1], s[J2], s[J3], s[J1]});
    const auto flip = SpinSextuple({s[J1], s[J2], s[j3], s[j1], s[j2], s[J3]});
    CHECK(tet_from_spins(perm).volume == doctest::Approx(g.volume).epsilon(1e-10));
    CHECK(tet_from_spins(flip).volume == doctest::Approx(g.volume).epsilon(1e-10));
    const TetGeometry g2 = tet_from_spins(s.scaled(2));
    CHECK(g2.volume == doctest::Approx(8.0 * g.volume).epsilon(1e-12));
    for (std::size_t e = 0; e < 6; ++e) CHECK(g2.theta_ext[e] == doctest::Approx(g.theta_ext[e]).epsilon(1e-10));
  }
}
