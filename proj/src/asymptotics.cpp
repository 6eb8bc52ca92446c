#include "sixj/asymptotics.hpp"

#include <cmath>
#include <numbers>

namespace sixj {

namespace {

constexpr double kPi = std::numbers::pi;

BigRational r(HalfInt h) { return to_rational(h); }

BigRational sum_j_times_J(const SpinSextuple& s) {
  return r(s[j1]) * r(s[J1]) + r(s[j2]) * r(s[J2]) + r(s[j3]) * r(s[J3]);
}

int sign_of_exponent(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

void require_odd(std::int64_t k, std::string_view what) {
  if (k <= 0) throw Error(ErrorKind::Domain, "k must be positive");
  if (k % 2 == 0) {
    throw Error(ErrorKind::KParity, std::string(what) + " needs odd k; even k is handled by the alpha formula");
  }
}

void require_positive_k(std::int64_t k) {
  if (k <= 0) throw Error(ErrorKind::Domain, "k must be positive");
}

AsymptoticResult finish(double amplitude, double angle, int sign, Formula f) {
  AsymptoticResult out;
  out.amplitude = amplitude;
  out.angle = sign < 0 ? angle + kPi : angle;
  out.value = out.amplitude * std::cos(out.angle);
  out.formula = f;
  return out;
}

}  // namespace

BigRational coeff_A(const SpinSextuple& s) { return 2 * sum_j_times_J(s); }

BigRational coeff_B(const SpinSextuple& s) {
  const TriangleData t = triangle_sums(s);
  const BigRational sum_p = r(t.p[0] + t.p[1] + t.p[2]);
  BigRational triple = r(s[j1]) * r(s[j2]) * r(s[j3]) + r(s[j1]) * r(s[J2]) * r(s[J3]) +
                       r(s[j2]) * r(s[J3]) * r(s[J1]) + r(s[j3]) * r(s[J1]) * r(s[J2]);
  return sum_j_times_J(s) * sum_p + 2 * triple;
}

BigRational coeff_C(const TriangleData& t) { return r(t.v[0]) * r(t.v[1]) * r(t.v[2]) * r(t.v[3]); }

std::string_view to_string(Formula f) noexcept {
  switch (f) {
    case Formula::standard: return "standard";
    case Formula::alpha: return "alpha";
    case Formula::beta: return "beta";
    case Formula::gamma: return "gamma";
  }
  return "?";
}

ShiftPair make_shift(double a, double b) {
  if (a == 0.0 && b == 0.0) throw Error(ErrorKind::UndefinedShift, "both shift coefficients vanish");
  return ShiftPair{std::hypot(a, b), std::atan2(b, a), a, b};
}

ShiftPair shift_pair(Parity parity, const SpinSextuple& s, const TriangleData& t, const TetGeometry& geo,
                     const std::optional<BetaDecomposition>& bd) {
  const double b_coeff = coeff_B(s).get_d();
  const double w = 24.0 * geo.volume;
  switch (parity) {
    case Parity::alpha:
      return make_shift(b_coeff, w);
    case Parity::gamma: {
      ShiftPair alpha = make_shift(b_coeff, w);
      return ShiftPair{alpha.N, -alpha.psi, b_coeff, -w};
    }
    case Parity::beta: {
      if (!bd) throw Error(ErrorKind::Domain, "parity beta needs a BetaDecomposition");
      const double c = coeff_C(t).get_d();
      const double q = BigRational(r(bd->pbar) * r(bd->pbar_prime) - r(bd->v) * r(bd->v_prime)).get_d();
      const double width = (bd->v + bd->v_prime - bd->pbar - bd->pbar_prime).to_double();
      return make_shift(2.0 * c * width, w * q);
    }
  }
  return {};
}

double angle_phi(AngleKind kind, const SpinSextuple& s, std::int64_t k, const TetGeometry& geo,
                 const std::optional<BetaDecomposition>& bd) {
  const double kd = static_cast<double>(k);
  double phi = 0.0;
  for (std::size_t i = 0; i < 6; ++i) {
    const double offset = kind == AngleKind::gamma ? 0.0 : 0.5;
    phi += (kd * s[i].to_double() + offset) * geo.theta_ext[i];
  }
  if (kind == AngleKind::beta) {
    if (!bd) throw Error(ErrorKind::Domain, "beta angle needs a BetaDecomposition");
    phi += 0.5 * geo.theta_ext[bd->jstar_index];
  }
  return phi;
}

AsymptoticResult asym_standard(const SpinSextuple& s, std::int64_t k, const TetGeometry& geo) {
  require_positive_k(k);
  const double kd = static_cast<double>(k);
  const double amplitude = 1.0 / std::sqrt(12.0 * kPi * kd * kd * kd * geo.volume);
  return finish(amplitude, kPi / 4.0 + angle_phi(AngleKind::standard_or_alpha, s, k, geo), 1, Formula::standard);
}

AsymptoticResult asym_alpha(const SpinSextuple& s, std::int64_t k, const TetGeometry& geo) {
  require_positive_k(k);
  const TriangleData t = triangle_sums(s);
  const ShiftPair sp = shift_pair(Parity::alpha, s, t, geo, std::nullopt);
  const double c = coeff_C(t).get_d();
  const double amplitude = sp.N / (std::sqrt(48.0 * kPi * static_cast<double>(k) * geo.volume) * std::sqrt(c));
  const double angle = kPi / 4.0 + angle_phi(AngleKind::standard_or_alpha, s, k, geo) - sp.psi;
  return finish(amplitude, angle, 1, Formula::alpha);
}

double asym_alpha_unshifted(const SpinSextuple& s, std::int64_t k, const TetGeometry& geo) {
  require_positive_k(k);
  const TriangleData t = triangle_sums(s);
  const double x = kPi / 4.0 + angle_phi(AngleKind::standard_or_alpha, s, k, geo);
  const double num = coeff_B(s).get_d() * std::cos(x) + 24.0 * geo.volume * std::sin(x);
  return num / (std::sqrt(48.0 * kPi * static_cast<double>(k) * geo.volume) * std::sqrt(coeff_C(t).get_d()));
}

AsymptoticResult asym_gamma(const SpinSextuple& s, std::int64_t k, const TetGeometry& geo) {
  require_odd(k, "gamma formula");
  const TriangleData t = triangle_sums(s);
  const ShiftPair alpha = shift_pair(Parity::alpha, s, t, geo, std::nullopt);
  const int sign = sign_of_exponent(1 + (t.p[0] + t.p[1] + t.p[2]).as_integer());
  const double amplitude = alpha.N / std::sqrt(48.0 * kPi * static_cast<double>(k) * geo.volume);
  const double angle = kPi / 4.0 + angle_phi(AngleKind::gamma, s, k, geo) + alpha.psi;
  return finish(amplitude, angle, sign, Formula::gamma);
}

std::pair<double, double> beta_preshift_coefficients(const SpinSextuple& s, const TriangleData& t,
                                                     const TetGeometry& geo, const BetaDecomposition& bd) {
  const BigRational q = r(bd.pbar) * r(bd.pbar_prime) - r(bd.v) * r(bd.v_prime);
  const BigRational a = 2 * coeff_C(t) * r(bd.v + bd.v_prime - bd.pbar - bd.pbar_prime) + coeff_B(s) * q;
  return {a.get_d(), 24.0 * geo.volume * q.get_d()};
}

AsymptoticResult asym_beta(const SpinSextuple& s, std::int64_t k, const TetGeometry& geo,
                           const BetaDecomposition& bd) {
  require_odd(k, "beta formula");
  const TriangleData t = triangle_sums(s);

  // ln of a product of positive factors; a non-positive factor is a degenerate triangle.
  auto log_factor = [](HalfInt x, std::string_view what) {
    if (x.twice() <= 0) {
      throw Error(ErrorKind::DegenerateFactor, std::string(what) + " = " + format(x) + " is not positive");
    }
    return std::log(x.to_double());
  };

  double log_pairs = 0.0;
  for (HalfInt pj : t.p) {
    for (HalfInt vi : t.v) log_pairs += log_factor(pj - vi, "p_j - v_i") + log_factor(vi, "v_i");
  }

  const double log_ratio = log_factor(bd.p - bd.v, "p - v") + log_factor(bd.p - bd.v_prime, "p - v'") -
                           log_factor(bd.vbar, "vbar") - log_factor(bd.vbar_prime, "vbar'");

  const double log_num = log_factor(bd.p - bd.v, "p - v") + log_factor(bd.p - bd.v_prime, "p - v'") +
                         log_factor(bd.pbar - bd.v, "pbar - v") + log_factor(bd.pbar - bd.v_prime, "pbar - v'") +
                         log_factor(bd.pbar_prime - bd.v, "pbar' - v") +
                         log_factor(bd.pbar_prime - bd.v_prime, "pbar' - v'") + log_factor(bd.v, "v") +
                         log_factor(bd.v_prime, "v'");
  const double log_den =
      log_factor(bd.pbar - bd.vbar, "pbar - vbar") + log_factor(bd.pbar - bd.vbar_prime, "pbar - vbar'") +
      log_factor(bd.pbar_prime - bd.vbar, "pbar' - vbar") +
      log_factor(bd.pbar_prime - bd.vbar_prime, "pbar' - vbar'") + log_factor(bd.p - bd.vbar, "p - vbar") +
      log_factor(bd.p - bd.vbar_prime, "p - vbar'") + log_factor(bd.vbar, "vbar") +
      log_factor(bd.vbar_prime, "vbar'");

  const ShiftPair sp = shift_pair(Parity::beta, s, t, geo, bd);
  const double log_amplitude = -0.5 * std::log(48.0 * kPi * static_cast<double>(k) * geo.volume) -
                               0.25 * log_pairs + 0.5 * log_ratio + 0.25 * (log_num - log_den) +
                               std::log(sp.N);
  const int sign = sign_of_exponent((bd.v + bd.v_prime - bd.p).as_integer());
  const double angle = kPi / 4.0 + angle_phi(AngleKind::beta, s, k, geo, bd) - sp.psi;
  return finish(std::exp(log_amplitude), angle, sign, Formula::beta);
}

AsymptoticResult asym_super(const SpinSextuple& s, std::int64_t k, const TetGeometry& geo) {
  require_positive_k(k);
  const TriangleData t = triangle_sums(s);
  check_admissible(t, Algebra::osp12);
  const Parity parity = classify_parity(t);
  if (parity == Parity::alpha || k % 2 == 0) return asym_alpha(s, k, geo);
  if (parity == Parity::gamma) return asym_gamma(s, k, geo);
  return asym_beta(s, k, geo, beta_decompose(s, t));
}

}  // namespace sixj
