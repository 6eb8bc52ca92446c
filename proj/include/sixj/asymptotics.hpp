#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "sixj/bigrational.hpp"
#include "sixj/geometry.hpp"
#include "sixj/symbols.hpp"

namespace sixj {

BigRational coeff_A(const SpinSextuple& s);
BigRational coeff_B(const SpinSextuple& s);
BigRational coeff_C(const TriangleData& t);

/// a cos x + b sin x = N cos(x - psi).
struct ShiftPair {
  double N = 0.0;
  double psi = 0.0;
  double a = 0.0;
  double b = 0.0;
};

/// Throws UndefinedShift when a = b = 0.
ShiftPair make_shift(double a, double b);

ShiftPair shift_pair(Parity parity, const SpinSextuple& s, const TriangleData& t, const TetGeometry& geo,
                     const std::optional<BetaDecomposition>& bd);

enum class AngleKind { standard_or_alpha, gamma, beta };

double angle_phi(AngleKind kind, const SpinSextuple& s, std::int64_t k, const TetGeometry& geo,
                 const std::optional<BetaDecomposition>& bd = std::nullopt);

enum class Formula { standard, alpha, beta, gamma };
std::string_view to_string(Formula f) noexcept;

struct AsymptoticResult {
  double amplitude = 0.0;
  double angle = 0.0;
  double value = 0.0;
  Formula formula = Formula::standard;
};

AsymptoticResult asym_standard(const SpinSextuple& s, std::int64_t k, const TetGeometry& geo);
AsymptoticResult asym_alpha(const SpinSextuple& s, std::int64_t k, const TetGeometry& geo);
/// Throws KParity for even k.
AsymptoticResult asym_gamma(const SpinSextuple& s, std::int64_t k, const TetGeometry& geo);
/// Throws KParity for even k and DegenerateFactor for a non-positive factor under a root.
AsymptoticResult asym_beta(const SpinSextuple& s, std::int64_t k, const TetGeometry& geo,
                           const BetaDecomposition& bd);

/// Picks the formula for k*s from the parity of s and of k.
AsymptoticResult asym_super(const SpinSextuple& s, std::int64_t k, const TetGeometry& geo);

/// B cos(pi/4 + phi) + 24 V sin(pi/4 + phi), over sqrt(48 pi k V) sqrt(C).
double asym_alpha_unshifted(const SpinSextuple& s, std::int64_t k, const TetGeometry& geo);

/// (a, b) of the beta brace before the shift: a = 2C[v + v' - pbar - pbar'] + B[pbar pbar' - v v'],
/// b = 24 V [pbar pbar' - v v'].
std::pair<double, double> beta_preshift_coefficients(const SpinSextuple& s, const TriangleData& t,
                                                     const TetGeometry& geo, const BetaDecomposition& bd);

}  // namespace sixj
