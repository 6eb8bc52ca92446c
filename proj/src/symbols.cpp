#include "sixj/symbols.hpp"

#include <algorithm>
#include <numeric>

namespace sixj {

std::string_view spin_name(std::size_t index) noexcept {
  static constexpr std::array<std::string_view, 6> kNames{"j1", "j2", "j3", "J1", "J2", "J3"};
  return index < 6 ? kNames[index] : "?";
}

SpinSextuple::SpinSextuple(const std::array<HalfInt, 6>& spins) : spins_(spins) {
  for (std::size_t i = 0; i < 6; ++i) {
    if (spins_[i].is_negative()) {
      throw Error(ErrorKind::IntegralityViolation,
                  std::string(spin_name(i)) + " = " + format(spins_[i]) + " is negative");
    }
  }
}

SpinSextuple SpinSextuple::from_twice(const std::array<std::int64_t, 6>& twice) {
  std::array<HalfInt, 6> spins;
  for (std::size_t i = 0; i < 6; ++i) spins[i] = HalfInt::from_twice(twice[i]);
  return SpinSextuple(spins);
}

SpinSextuple SpinSextuple::parse(std::span<const std::string> texts) {
  if (texts.size() != 6) {
    throw Error(ErrorKind::Parse, "expected six spins, got " + std::to_string(texts.size()));
  }
  std::array<HalfInt, 6> spins;
  for (std::size_t i = 0; i < 6; ++i) spins[i] = halfint_parse(texts[i]);
  return SpinSextuple(spins);
}

SpinSextuple SpinSextuple::scaled(std::int64_t k) const {
  if (k <= 0) throw Error(ErrorKind::Domain, "scale factor must be positive");
  std::array<HalfInt, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = k * spins_[i];
  return SpinSextuple(out);
}

std::string format(const SpinSextuple& s) {
  return "{" + format(s[j1]) + " " + format(s[j2]) + " " + format(s[j3]) + "; " + format(s[J1]) + " " +
         format(s[J2]) + " " + format(s[J3]) + "}";
}

int TriangleData::integer_triangle_count() const noexcept {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](HalfInt x) { return x.is_integer(); }));
}

std::string_view to_string(Parity parity) noexcept {
  switch (parity) {
    case Parity::alpha: return "alpha";
    case Parity::beta: return "beta";
    case Parity::gamma: return "gamma";
  }
  return "?";
}

TriangleData triangle_sums(const SpinSextuple& s) {
  TriangleData t;
  t.v = {s[j1] + s[j2] + s[j3], s[J1] + s[j2] + s[J3], s[J1] + s[J2] + s[j3], s[j1] + s[J2] + s[J3]};
  t.p = {s[j2] + s[J2] + s[j3] + s[J3], s[j3] + s[J3] + s[j1] + s[J1], s[j1] + s[J1] + s[j2] + s[J2]};
  return t;
}

void check_admissible(const TriangleData& t, Algebra algebra) {
  const auto& v = t.v;
  const auto& p = t.p;

  // Each doubled spin from two triangles and one quadrangle.
  const std::array<HalfInt, 6> doubled{v[0] + v[3] - p[0], v[0] + v[1] - p[1], v[0] + v[2] - p[2],
                                       v[1] + v[2] - p[0], v[2] + v[3] - p[1], v[1] + v[3] - p[2]};
  for (std::size_t i = 0; i < 6; ++i) {
    if (!doubled[i].is_integer() || doubled[i].is_negative()) {
      throw Error(ErrorKind::IntegralityViolation,
                  "2" + std::string(spin_name(i)) + " = " + format(doubled[i]) + " is not a non-negative integer");
    }
  }

  for (std::size_t jj = 0; jj < 3; ++jj) {
    for (std::size_t ii = 0; ii < 4; ++ii) {
      if (p[jj] < v[ii]) {
        throw Error(ErrorKind::TriangleViolation, "p" + std::to_string(jj + 1) + " - v" + std::to_string(ii + 1) +
                                                      " = " + format(p[jj] - v[ii]) + " < 0");
      }
    }
  }

  const int integers = t.integer_triangle_count();
  if (algebra == Algebra::su2) {
    if (integers != 4) {
      throw Error(ErrorKind::IntegralityViolation, "su2 requires every triangle sum v_i to be an integer");
    }
  } else if (integers == 1 || integers == 3) {
    throw Error(ErrorKind::ParityViolation,
                std::to_string(integers) + " integer triangle sums; osp12 allows 0, 2 or 4");
  }
}

void check_admissible(const SpinSextuple& s, Algebra algebra) { check_admissible(triangle_sums(s), algebra); }

bool is_admissible(const SpinSextuple& s, Algebra algebra) {
  try {
    check_admissible(s, algebra);
    return true;
  } catch (const Error& e) {
    if (is_admissibility_error(e.kind())) return false;
    throw;
  }
}

Parity classify_parity(const TriangleData& t) {
  switch (t.integer_triangle_count()) {
    case 4: return Parity::alpha;
    case 2: return Parity::beta;
    case 0: return Parity::gamma;
    default:
      throw Error(ErrorKind::ParityViolation, "one or three integer triangle sums");
  }
}

namespace {

struct BetaRow {
  std::array<std::size_t, 2> vbar;
  std::size_t jstar;
  std::size_t p;
  std::array<std::size_t, 2> v;
  std::array<std::size_t, 2> pbar;
};

// Correlation table for parity beta (triangle and quadrangle indices 0-based).
constexpr std::array<BetaRow, 6> kBetaTable{{
    {{3, 0}, j1, 0, {1, 2}, {1, 2}},
    {{1, 0}, j2, 1, {2, 3}, {2, 0}},
    {{2, 0}, j3, 2, {3, 1}, {0, 1}},
    {{1, 2}, J1, 0, {3, 0}, {1, 2}},
    {{2, 3}, J2, 1, {1, 0}, {2, 0}},
    {{3, 1}, J3, 2, {2, 0}, {0, 1}},
}};

}  // namespace

BetaDecomposition beta_decompose(const SpinSextuple& s, const TriangleData& t) {
  std::array<std::size_t, 2> half{};
  std::size_t n = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!t.v[i].is_integer()) {
      if (n == 2) throw Error(ErrorKind::InternalConsistency, "beta decomposition of a non-beta sextuple");
      half[n++] = i;
    }
  }
  if (n != 2) throw Error(ErrorKind::InternalConsistency, "beta decomposition of a non-beta sextuple");

  for (const BetaRow& row : kBetaTable) {
    auto sorted_row = row.vbar;
    std::sort(sorted_row.begin(), sorted_row.end());
    if (sorted_row != half) continue;

    BetaDecomposition bd;
    bd.vbar_triangles = row.vbar;
    bd.vbar = t.v[row.vbar[0]];
    bd.vbar_prime = t.v[row.vbar[1]];
    bd.v = t.v[row.v[0]];
    bd.v_prime = t.v[row.v[1]];
    bd.p = t.p[row.p];
    bd.pbar = t.p[row.pbar[0]];
    bd.pbar_prime = t.p[row.pbar[1]];
    bd.jstar_index = row.jstar;
    bd.jstar = s[row.jstar];
    bd.Jstar = s[column_companion(row.jstar)];

    const HalfInt from_quadrangles = bd.pbar + bd.pbar_prime - bd.v - bd.v_prime;
    const HalfInt from_triangles = bd.vbar + bd.vbar_prime - bd.p;
    if (from_quadrangles != from_triangles || from_triangles != 2 * bd.jstar) {
      throw Error(ErrorKind::InternalConsistency, "2 jstar: " + format(from_quadrangles) + " vs " +
                                                      format(from_triangles) + " vs " + format(2 * bd.jstar));
    }
    if (!bd.p.is_integer() || bd.pbar.is_integer() || bd.pbar_prime.is_integer()) {
      throw Error(ErrorKind::InternalConsistency, "quadrangle integrality does not match the beta table");
    }
    return bd;
  }
  throw Error(ErrorKind::InternalConsistency, "no beta table row for the half-integer triangles");
}

int frontal_phase(const SpinSextuple& s, std::int64_t k) {
  if (k <= 0) throw Error(ErrorKind::Domain, "scale factor must be positive");
  if (k % 2 == 0) return 1;
  std::int64_t four_sum = 0;  // 4 sum j J = sum (2j)(2J)
  for (std::size_t c = 0; c < 3; ++c) four_sum += s[c].twice() * s[c + 3].twice();
  return four_sum % 2 == 0 ? 1 : -1;
}

int frontal_phase_closed_form(Parity parity, const TriangleData& t, const std::optional<BetaDecomposition>& bd) {
  switch (parity) {
    case Parity::alpha: return 1;
    case Parity::gamma: {
      HalfInt sum_p = t.p[0] + t.p[1] + t.p[2];
      return (1 + sum_p.as_integer()) % 2 == 0 ? 1 : -1;
    }
    case Parity::beta: {
      if (!bd) throw Error(ErrorKind::Domain, "beta phase needs a decomposition");
      std::int64_t e = (bd->v + bd->v_prime - bd->p).as_integer();
      return e % 2 == 0 ? 1 : -1;
    }
  }
  return 1;
}

namespace {

BigRational sum_j_times_J(const SpinSextuple& s) {
  BigRational acc = 0;
  for (std::size_t c = 0; c < 3; ++c) acc += to_rational(s[c]) * to_rational(s[c + 3]);
  return acc;
}

const BetaDecomposition& require_beta(const std::optional<BetaDecomposition>& bd) {
  if (!bd) throw Error(ErrorKind::Domain, "parity beta needs a BetaDecomposition");
  return *bd;
}

}  // namespace

BigRational monomial(Parity parity, std::int64_t t, const SpinSextuple& s,
                     const std::optional<BetaDecomposition>& bd) {
  const BigRational half(1, 2);
  const BigRational tt(static_cast<long>(t));
  switch (parity) {
    case Parity::alpha:
      return BigRational(1);
    case Parity::beta: {
      const auto& b = require_beta(bd);
      BigRational out = -tt * (2 * to_rational(b.jstar) + 1) + (to_rational(b.pbar) + half) * (to_rational(b.pbar_prime) + half) -
                        to_rational(b.v) * to_rational(b.v_prime);
      return out;
    }
    case Parity::gamma: {
      BigRational spins = 0;
      for (HalfInt x : s.spins()) spins += to_rational(x);
      BigRational out = -tt + 2 * sum_j_times_J(s) + spins + half;
      return out;
    }
  }
  return BigRational(0);
}

BigRational monomial_shifted_form(Parity parity, std::int64_t t, const SpinSextuple& s,
                                  const std::optional<BetaDecomposition>& bd) {
  const BigRational half(1, 2);
  const BigRational t_plus_one(static_cast<long>(t + 1));
  switch (parity) {
    case Parity::alpha:
      return BigRational(1);
    case Parity::beta: {
      const auto& b = require_beta(bd);
      BigRational width = 2 * to_rational(b.jstar) + 1;
      BigRational constant =
          width + (to_rational(b.pbar) + half) * (to_rational(b.pbar_prime) + half) - to_rational(b.v) * to_rational(b.v_prime);
      BigRational out = -t_plus_one * width + constant;
      return out;
    }
    case Parity::gamma: {
      const TriangleData tri = triangle_sums(s);
      BigRational sum_p = to_rational(tri.p[0] + tri.p[1] + tri.p[2]);
      BigRational out = -t_plus_one + (2 * sum_j_times_J(s) + sum_p / 2 + BigRational(3, 2));
      return out;
    }
  }
  return BigRational(0);
}

FactorialRatio prefactor_standard_factorials(const TriangleData& t) {
  FactorialRatio r;
  for (HalfInt pj : t.p) {
    for (HalfInt vi : t.v) r.multiply_factorial((pj - vi).as_integer());
  }
  for (HalfInt vi : t.v) r.divide_factorial((vi + HalfInt::from_int(1)).as_integer());
  return r;
}

namespace {

std::int64_t shifted_argument(HalfInt x) {
  if (!x.is_integer() || x.is_negative()) {
    throw Error(ErrorKind::ShiftViolation, "factorial argument " + format(x) + " is not a non-negative integer");
  }
  return x.twice() / 2;
}

}  // namespace

FactorialRatio prefactor_factorials(Parity parity, const TriangleData& t, const std::optional<BetaDecomposition>& bd) {
  const HalfInt half = HalfInt::half();
  FactorialRatio r;
  switch (parity) {
    case Parity::alpha:
      for (HalfInt pj : t.p) {
        for (HalfInt vi : t.v) r.multiply_factorial(shifted_argument(pj - vi));
      }
      for (HalfInt vi : t.v) r.divide_factorial(shifted_argument(vi));
      break;
    case Parity::gamma:
      for (HalfInt pj : t.p) {
        for (HalfInt vi : t.v) r.multiply_factorial(shifted_argument(pj - vi - half));
      }
      for (HalfInt vi : t.v) r.divide_factorial(shifted_argument(vi + half));
      break;
    case Parity::beta: {
      const auto& b = require_beta(bd);
      for (HalfInt q : {b.p, b.pbar, b.pbar_prime}) {
        // Same-kind pairs enter unshifted, mixed integer/half-integer pairs with -1/2.
        const bool q_integer = q.is_integer();
        for (HalfInt w : {b.v, b.v_prime, b.vbar, b.vbar_prime}) {
          const bool mixed = q_integer != w.is_integer();
          r.multiply_factorial(shifted_argument(mixed ? q - w - half : q - w));
        }
      }
      r.divide_factorial(shifted_argument(b.v));
      r.divide_factorial(shifted_argument(b.v_prime));
      r.divide_factorial(shifted_argument(b.vbar + half));
      r.divide_factorial(shifted_argument(b.vbar_prime + half));
      break;
    }
  }
  return r;
}

BigRational prefactor(Parity parity, const SpinSextuple&, const TriangleData& t,
                      const std::optional<BetaDecomposition>& bd) {
  return prefactor_factorials(parity, t, bd).value();
}

namespace {

// sum_{t=lo}^{hi} (-1)^t (t + shift)! w(t) / (prod_i (t - lower_i)! prod_j (upper_j - t)!)
template <class Weight>
BigRational alternating_factorial_sum(std::int64_t lo, std::int64_t hi, int shift,
                                      const std::array<std::int64_t, 4>& lower,
                                      const std::array<std::int64_t, 3>& upper, Weight&& weight) {
  BigRational sum = 0;
  if (lo > hi) return sum;

  BigInt num = factorial(lo + shift);
  BigInt den = 1;
  for (auto a : lower) den *= factorial(lo - a);
  for (auto c : upper) den *= factorial(c - lo);
  BigRational term = make_rational(num, den);
  if (lo % 2 != 0) term = -term;

  for (std::int64_t t = lo;; ++t) {
    sum += term * weight(t);
    if (t == hi) break;
    // term(t+1) / term(t) = -(t + 1 + shift) prod_j (upper_j - t) / prod_i (t + 1 - lower_i)
    BigInt step_num = static_cast<long>(t + 1 + shift);
    for (auto c : upper) step_num *= static_cast<long>(c - t);
    BigInt step_den = 1;
    for (auto a : lower) step_den *= static_cast<long>(t + 1 - a);
    term *= make_rational(-step_num, step_den);
  }
  return sum;
}

template <std::size_t N>
std::int64_t max_of(const std::array<std::int64_t, N>& a) { return *std::max_element(a.begin(), a.end()); }
template <std::size_t N>
std::int64_t min_of(const std::array<std::int64_t, N>& a) { return *std::min_element(a.begin(), a.end()); }

}  // namespace

ExactSymbol sixj_standard_exact(const SpinSextuple& s) {
  const TriangleData t = triangle_sums(s);
  check_admissible(t, Algebra::su2);

  std::array<std::int64_t, 4> lower;
  std::array<std::int64_t, 3> upper;
  for (std::size_t i = 0; i < 4; ++i) lower[i] = t.v[i].as_integer();
  for (std::size_t j = 0; j < 3; ++j) upper[j] = t.p[j].as_integer();

  BigRational sum = alternating_factorial_sum(max_of(lower), min_of(upper), 1, lower, upper,
                                              [](std::int64_t) { return BigRational(1); });
  return ExactSymbol::from_factorization(sum, prefactor_standard_factorials(t).factorize());
}

SuperEvaluation sixj_super_evaluate(const SpinSextuple& s) {
  const TriangleData t = triangle_sums(s);
  check_admissible(t, Algebra::osp12);

  SuperEvaluation out;
  out.parity = classify_parity(t);
  std::optional<BetaDecomposition> bd;
  if (out.parity == Parity::beta) bd = beta_decompose(s, t);

  const HalfInt half = HalfInt::half();
  std::array<std::int64_t, 4> lower;
  std::array<std::int64_t, 3> upper;
  for (std::size_t i = 0; i < 4; ++i) lower[i] = (t.v[i] + half).floor();
  for (std::size_t j = 0; j < 3; ++j) upper[j] = (t.p[j] + half).floor();
  const std::int64_t lo = max_of(lower);
  const std::int64_t hi = min_of(upper);
  if (lo > hi) {
    out.empty_range = true;
    return out;
  }

  const FactorialRatio radicand = prefactor_factorials(out.parity, t, bd);
  BigRational sum = alternating_factorial_sum(lo, hi, 0, lower, upper,
                                              [&](std::int64_t tt) { return monomial(out.parity, tt, s, bd); });
  if (frontal_phase(s, 1) < 0) sum = -sum;
  out.value = ExactSymbol::from_factorization(sum, radicand.factorize());
  return out;
}

ExactSymbol sixj_super_exact(const SpinSextuple& s) { return sixj_super_evaluate(s).value; }

ExactSymbol sixj_super_alpha_exact(const SpinSextuple& s) {
  const TriangleData t = triangle_sums(s);
  check_admissible(t, Algebra::osp12);
  if (classify_parity(t) != Parity::alpha) {
    throw Error(ErrorKind::ParityViolation, "alpha path called on a non-alpha sextuple " + format(s));
  }
  std::array<std::int64_t, 4> lower;
  std::array<std::int64_t, 3> upper;
  for (std::size_t i = 0; i < 4; ++i) lower[i] = t.v[i].as_integer();
  for (std::size_t j = 0; j < 3; ++j) upper[j] = t.p[j].as_integer();

  BigRational sum = alternating_factorial_sum(max_of(lower), min_of(upper), 0, lower, upper,
                                              [](std::int64_t) { return BigRational(1); });
  return ExactSymbol::from_factorization(sum, prefactor_factorials(Parity::alpha, t, std::nullopt).factorize());
}

std::pair<SpinSextuple, Parity> rescale(const SpinSextuple& s, std::int64_t k) {
  SpinSextuple scaled = s.scaled(k);
  TriangleData t = triangle_sums(scaled);
  check_admissible(t, Algebra::osp12);
  return {scaled, classify_parity(t)};
}

}  // namespace sixj
