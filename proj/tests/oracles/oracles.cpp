#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sixj/geometry.hpp"

namespace oracle {

namespace {

BigInt fact(std::int64_t n) {
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
  return r;
}

BigRational reduced(const BigInt& num, const BigInt& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt square_part(BigInt& m) {
  BigInt root = 1;
  for (unsigned long p = 2; p < 1000 && m > 1; ++p) {
    const BigInt pp = BigInt(p) * p;
    while (m % pp == 0) {
      m /= pp;
      root *= p;
    }
  }
  if (m > 1000000) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    if (r * r == m) {
      root *= r;
      m = 1;
    }
  }
  return root;
}

struct Triad {
  std::int64_t a, b, c;  // doubled
};

bool triad_ok(const Triad& t) {
  if ((t.a + t.b + t.c) % 2 != 0) return false;
  return t.a + t.b >= t.c && t.a + t.c >= t.b && t.b + t.c >= t.a;
}

// Delta(abc)^2 for integer-sum triads.
BigRational delta_squared(const Triad& t) {
  const std::int64_t s = (t.a + t.b + t.c) / 2;
  return reduced(fact(s - t.c) * fact(s - t.b) * fact(s - t.a), fact(s + 1));
}

}  // namespace

Surd make_surd(const BigRational& coeff, const BigRational& q) {
  if (sgn(coeff) == 0 || sgn(q) == 0) return Surd{0, 1};
  if (sgn(q) < 0) throw std::logic_error("negative radicand");
  BigInt m = q.get_num() * q.get_den();
  BigInt root = square_part(m);
  BigRational c = coeff * reduced(root, q.get_den());
  c.canonicalize();
  return Surd{c, m};
}

std::optional<Surd> racah_6j(const std::array<std::int64_t, 6>& x) {
  const std::int64_t a = x[0], b = x[1], c = x[2], d = x[3], e = x[4], f = x[5];
  const std::array<Triad, 4> triads{{{a, b, c}, {a, e, f}, {d, b, f}, {d, e, c}}};
  for (const auto& t : triads) {
    if (!triad_ok(t)) return std::nullopt;
  }
  BigRational delta2 = 1;
  for (const auto& t : triads) delta2 *= delta_squared(t);

  const std::int64_t alpha[4] = {(a + b + c) / 2, (a + e + f) / 2, (d + b + f) / 2, (d + e + c) / 2};
  const std::int64_t beta[3] = {(a + b + d + e) / 2, (a + c + d + f) / 2, (b + c + e + f) / 2};
  const std::int64_t lo = *std::max_element(alpha, alpha + 4);
  const std::int64_t hi = *std::min_element(beta, beta + 3);
  BigRational sum = 0;
  for (std::int64_t t = lo; t <= hi; ++t) {
    BigInt den = 1;
    for (auto al : alpha) den *= fact(t - al);
    for (auto be : beta) den *= fact(be - t);
    BigRational term = reduced(fact(t + 1), den);
    sum += (t % 2 == 0) ? term : BigRational(-term);
  }
  return make_surd(sum, delta2);
}

std::optional<Surd> super_6j_direct(const std::array<std::int64_t, 6>& x) {
  // Doubled spins: j1 j2 j3 J1 J2 J3.
  const std::int64_t j1 = x[0], j2 = x[1], j3 = x[2], J1 = x[3], J2 = x[4], J3 = x[5];
  const std::array<std::array<std::int64_t, 3>, 4> tri{{{j1, j2, j3}, {J1, j2, J3}, {J1, J2, j3}, {j1, J2, J3}}};
  // Spin positions of each triad, to locate the shared vertex.
  const std::array<std::array<int, 3>, 4> tri_pos{{{0, 1, 2}, {3, 1, 5}, {3, 4, 2}, {0, 4, 5}}};

  std::array<std::int64_t, 4> v2;  // doubled triad sums
  for (int i = 0; i < 4; ++i) {
    const auto& t = tri[i];
    if (t[0] + t[1] < t[2] || t[0] + t[2] < t[1] || t[1] + t[2] < t[0]) return std::nullopt;
    v2[i] = t[0] + t[1] + t[2];
  }
  const std::array<std::int64_t, 3> p2{j2 + J2 + j3 + J3, j3 + J3 + j1 + J1, j1 + J1 + j2 + J2};
  for (auto p : p2) {
    for (auto v : v2) {
      if (p < v) return std::nullopt;
    }
  }
  int n_int = 0;
  for (auto v : v2) n_int += (v % 2 == 0);
  if (n_int == 1 || n_int == 3) return std::nullopt;

  auto floor_half = [](std::int64_t twice_value) { return twice_value >= 0 ? twice_value / 2 : -((-twice_value + 1) / 2); };

  // Integer parts [v + 1/2], [p + 1/2], [p - v].
  std::array<std::int64_t, 4> lower;
  std::array<std::int64_t, 3> upper;
  for (int i = 0; i < 4; ++i) lower[i] = floor_half(v2[i] + 1);
  for (int j = 0; j < 3; ++j) upper[j] = floor_half(p2[j] + 1);

  BigInt rnum = 1;
  for (auto p : p2) {
    for (auto v : v2) rnum *= fact(floor_half(p - v));
  }
  BigInt rden = 1;
  for (auto l : lower) rden *= fact(l);
  const BigRational radicand = reduced(rnum, rden);

  // Monomial Pi(t) = m0 + m1 * t.
  BigRational m0 = 1, m1 = 0;
  if (n_int == 0) {
    const BigRational sum_jj = reduced(j1 * J1 + j2 * J2 + j3 * J3, 4);
    const BigRational sum_spins = reduced(j1 + j2 + j3 + J1 + J2 + J3, 2);
    m0 = 2 * sum_jj + sum_spins + BigRational(1, 2);
    m1 = -1;
  } else if (n_int == 2) {
    std::vector<int> half_triads, int_triads;
    for (int i = 0; i < 4; ++i) (v2[i] % 2 == 0 ? int_triads : half_triads).push_back(i);
    int shared = -1;
    for (int a : tri_pos[half_triads[0]]) {
      for (int b : tri_pos[half_triads[1]]) {
        if (a == b) shared = a;
      }
    }
    std::vector<std::int64_t> half_p;
    for (auto p : p2) {
      if (p % 2 != 0) half_p.push_back(p);
    }
    const BigRational jstar = reduced(x[shared], 2);
    const BigRational pb = reduced(half_p[0], 2), pbp = reduced(half_p[1], 2);
    const BigRational v = reduced(v2[int_triads[0]], 2), vp = reduced(v2[int_triads[1]], 2);
    m0 = (pb + BigRational(1, 2)) * (pbp + BigRational(1, 2)) - v * vp;
    m1 = -(2 * jstar + 1);
  }

  const std::int64_t lo = *std::max_element(lower.begin(), lower.end());
  const std::int64_t hi = *std::min_element(upper.begin(), upper.end());
  BigRational sum = 0;
  for (std::int64_t t = lo; t <= hi; ++t) {
    BigInt den = 1;
    for (auto l : lower) den *= fact(t - l);
    for (auto u : upper) den *= fact(u - t);
    BigRational term = reduced(fact(t), den);
    term *= m0 + m1 * static_cast<long>(t);
    sum += (t % 2 == 0) ? term : BigRational(-term);
  }
  const std::int64_t four_sum = j1 * J1 + j2 * J2 + j3 * J3;
  if (four_sum % 2 != 0) sum = -sum;
  return make_surd(sum, radicand);
}

double racah_log_abs(const std::array<std::int64_t, 6>& x) {
  const std::int64_t a = x[0], b = x[1], c = x[2], d = x[3], e = x[4], f = x[5];
  const std::array<Triad, 4> triads{{{a, b, c}, {a, e, f}, {d, b, f}, {d, e, c}}};
  auto lf = [](std::int64_t n) { return std::lgamma(static_cast<double>(n) + 1.0); };
  double log_delta = 0.0;
  for (const auto& t : triads) {
    const std::int64_t s = (t.a + t.b + t.c) / 2;
    log_delta += 0.5 * (lf(s - t.c) + lf(s - t.b) + lf(s - t.a) - lf(s + 1));
  }
  const std::int64_t alpha[4] = {(a + b + c) / 2, (a + e + f) / 2, (d + b + f) / 2, (d + e + c) / 2};
  const std::int64_t beta[3] = {(a + b + d + e) / 2, (a + c + d + f) / 2, (b + c + e + f) / 2};
  const std::int64_t lo = *std::max_element(alpha, alpha + 4);
  const std::int64_t hi = *std::min_element(beta, beta + 3);
  BigRational sum = 0;
  for (std::int64_t t = lo; t <= hi; ++t) {
    BigInt den = 1;
    for (auto al : alpha) den *= fact(t - al);
    for (auto be : beta) den *= fact(be - t);
    const BigRational term = reduced(fact(t + 1), den);
    sum += (t % 2 == 0) ? term : BigRational(-term);
  }
  auto log_abs_int = [](const BigInt& z) {
    long e = 0;
    const double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
  };
  return log_delta + log_abs_int(sum.get_num()) - log_abs_int(sum.get_den());
}

sixj::SpinSextuple random_sextuple(std::mt19937_64& rng, sixj::Parity parity, std::int64_t twice_max) {
  std::uniform_int_distribution<std::int64_t> dist(0, twice_max);
  for (;;) {
    std::array<std::int64_t, 6> x;
    for (auto& e : x) e = dist(rng);
    const auto s = sixj::SpinSextuple::from_twice(x);
    if (!sixj::is_admissible(s, sixj::Algebra::osp12)) continue;
    if (sixj::classify_parity(sixj::triangle_sums(s)) == parity) return s;
  }
}

sixj::SpinSextuple random_euclidean(std::mt19937_64& rng, std::int64_t twice_max) {
  std::uniform_int_distribution<std::int64_t> dist(1, twice_max);
  for (;;) {
    std::array<std::int64_t, 6> x;
    for (auto& e : x) e = dist(rng);
    const auto s = sixj::SpinSextuple::from_twice(x);
    if (sixj::is_euclidean(s)) return s;
  }
}

}  // namespace oracle
