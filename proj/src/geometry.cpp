#include "sixj/geometry.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "sixj/asymptotics.hpp"

namespace sixj {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Interior dihedral angle along edge (a, b) between the faces through c and through d.
double interior_dihedral(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const Vec3 e = sub(b, a);
  const double ee = dot(e, e);
  Vec3 u = sub(c, a);
  Vec3 w = sub(d, a);
  const double cu = dot(u, e) / ee;
  const double cw = dot(w, e) / ee;
  for (int i = 0; i < 3; ++i) {
    u[i] -= cu * e[i];
    w[i] -= cw * e[i];
  }
  return std::atan2(norm(cross(u, w)), dot(u, w));
}

BigRational determinant(std::array<std::array<BigRational, 5>, 5> m) {
  BigRational det = 1;
  for (std::size_t col = 0; col < 5; ++col) {
    std::size_t pivot = col;
    while (pivot < 5 && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == 5) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < 5; ++row) {
      if (sgn(m[row][col]) == 0) continue;
      const BigRational f = m[row][col] / m[col][col];
      for (std::size_t c = col; c < 5; ++c) m[row][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace

BigRational cayley_menger(const SpinSextuple& s) {
  // Squared distances between P0..P3.
  std::array<std::array<BigRational, 4>, 4> d2;
  auto set = [&](int a, int b, HalfInt len) {
    const BigRational l = to_rational(len);
    d2[a][b] = d2[b][a] = l * l;
  };
  for (int i = 0; i < 4; ++i) d2[i][i] = 0;
  set(0, 1, s[J1]);
  set(0, 2, s[J2]);
  set(0, 3, s[J3]);
  set(1, 2, s[j3]);
  set(1, 3, s[j2]);
  set(2, 3, s[j1]);

  std::array<std::array<BigRational, 5>, 5> m;
  m[0][0] = 0;
  for (int i = 1; i < 5; ++i) {
    m[0][i] = 1;
    m[i][0] = 1;
    for (int j = 1; j < 5; ++j) m[i][j] = d2[i - 1][j - 1];
  }
  return determinant(m);
}

namespace {

// 16 area^2 of a face by Heron's formula, in units of 1/16 from the doubled lengths.
std::int64_t face_heron(HalfInt a, HalfInt b, HalfInt c) {
  const std::int64_t x = a.twice(), y = b.twice(), z = c.twice();
  return (x + y + z) * (-x + y + z) * (x - y + z) * (x + y - z);
}

// The faces are the four triads of the symbol.
const std::array<std::array<std::size_t, 3>, 4> kFaces{{{j1, j2, j3}, {J1, j2, J3}, {J1, J2, j3}, {j1, J2, J3}}};

}  // namespace

bool is_euclidean(const SpinSextuple& s) {
  for (const auto& f : kFaces) {
    if (face_heron(s[f[0]], s[f[1]], s[f[2]]) <= 0) return false;
  }
  return sgn(cayley_menger(s)) > 0;
}

TetGeometry tet_from_spins(const SpinSextuple& s) {
  for (const auto& f : kFaces) {
    if (face_heron(s[f[0]], s[f[1]], s[f[2]]) <= 0) {
      throw Error(ErrorKind::NonEuclidean, format(s) + " has a flat or impossible face (" + format(s[f[0]]) + ", " +
                                               format(s[f[1]]) + ", " + format(s[f[2]]) + ")");
    }
  }
  const BigRational cm = cayley_menger(s);
  if (sgn(cm) <= 0) {
    throw Error(ErrorKind::NonEuclidean, format(s) + " has Cayley-Menger determinant " + to_string(cm));
  }

  TetGeometry g;
  for (std::size_t i = 0; i < 6; ++i) g.lengths[i] = s[i].to_double();
  g.volume = std::sqrt(cm.get_d() / 288.0);
  g.euclidean = true;

  const double a = g.lengths[J1];
  const double b = g.lengths[J2];
  const double c = g.lengths[J3];
  const Vec3 p0{0.0, 0.0, 0.0};
  const Vec3 p1{a, 0.0, 0.0};
  const double x2 = (a * a + b * b - g.lengths[j3] * g.lengths[j3]) / (2.0 * a);
  const double y2 = std::sqrt(std::max(0.0, b * b - x2 * x2));
  const Vec3 p2{x2, y2, 0.0};
  const double x3 = (a * a + c * c - g.lengths[j2] * g.lengths[j2]) / (2.0 * a);
  const double y3 = (b * b + c * c - g.lengths[j1] * g.lengths[j1] - 2.0 * x2 * x3) / (2.0 * y2);
  const double z3 = 6.0 * g.volume / (a * y2);
  const Vec3 p3{x3, y3, z3};

  const std::array<std::array<const Vec3*, 4>, 6> edges{{
      {&p2, &p3, &p0, &p1},
      {&p1, &p3, &p0, &p2},
      {&p1, &p2, &p0, &p3},
      {&p0, &p1, &p2, &p3},
      {&p0, &p2, &p1, &p3},
      {&p0, &p3, &p1, &p2},
  }};
  for (std::size_t e = 0; e < 6; ++e) {
    const auto& q = edges[e];
    g.theta_ext[e] = std::numbers::pi - interior_dihedral(*q[0], *q[1], *q[2], *q[3]);
  }
  return g;
}

DiscriminantCheck discriminant_check(const SpinSextuple& s) {
  DiscriminantCheck out;
  out.delta_alg_exact = 4 * coeff_A(s) * coeff_C(triangle_sums(s)) - coeff_B(s) * coeff_B(s);
  out.delta_geo_exact = 2 * cayley_menger(s);
  out.delta_alg = out.delta_alg_exact.get_d();
  const double cm = out.delta_geo_exact.get_d() / 2.0;
  const double volume = cm > 0.0 ? std::sqrt(cm / 288.0) : 0.0;
  out.delta_geo = 576.0 * volume * volume;
  return out;
}

}  // namespace sixj
