#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "sixj/bigrational.hpp"
#include "sixj/exact_symbol.hpp"
#include "sixj/halfint.hpp"

namespace sixj {

/// Positions inside a symbol {j1 j2 j3; J1 J2 J3}. Column c holds (j_c, J_c).
enum SpinIndex : std::size_t { j1 = 0, j2 = 1, j3 = 2, J1 = 3, J2 = 4, J3 = 5 };

constexpr std::size_t column_companion(std::size_t index) noexcept { return (index + 3) % 6; }
std::string_view spin_name(std::size_t index) noexcept;

/// The six spins of a symbol, each a non-negative half-integer.
class SpinSextuple {
 public:
  /// Throws IntegralityViolation for a negative spin.
  explicit SpinSextuple(const std::array<HalfInt, 6>& spins);

  static SpinSextuple from_twice(const std::array<std::int64_t, 6>& twice);
  static SpinSextuple parse(std::span<const std::string> texts);

  HalfInt operator[](std::size_t index) const noexcept { return spins_[index]; }
  const std::array<HalfInt, 6>& spins() const noexcept { return spins_; }

  SpinSextuple scaled(std::int64_t k) const;

  friend bool operator==(const SpinSextuple&, const SpinSextuple&) = default;

 private:
  std::array<HalfInt, 6> spins_;
};

std::string format(const SpinSextuple& s);

/// Triangle sums v1..v4 and column-pair (quadrangle) sums p1..p3.
struct TriangleData {
  std::array<HalfInt, 4> v;
  std::array<HalfInt, 3> p;

  int integer_triangle_count() const noexcept;
};

enum class Algebra { su2, osp12 };
enum class Parity { alpha, beta, gamma };

std::string_view to_string(Parity parity) noexcept;

/// Parity beta split: the integer triangles v, v', the half-integer ones vbar, vbar',
/// the integer quadrangle p, the half-integer ones pbar, pbar', and the spin jstar at the
/// vertex shared by vbar and vbar' together with its column companion Jstar.
struct BetaDecomposition {
  HalfInt v, v_prime;
  HalfInt vbar, vbar_prime;
  HalfInt p;
  HalfInt pbar, pbar_prime;
  HalfInt jstar, Jstar;
  std::size_t jstar_index = 0;  ///< SpinIndex of jstar
  std::array<std::size_t, 2> vbar_triangles{};  ///< 0-based indices into TriangleData::v
};

TriangleData triangle_sums(const SpinSextuple& s);

/// Throws TriangleViolation, IntegralityViolation or ParityViolation.
void check_admissible(const TriangleData& t, Algebra algebra);
void check_admissible(const SpinSextuple& s, Algebra algebra);
bool is_admissible(const SpinSextuple& s, Algebra algebra);

/// Classification by the number of integer v_i (4, 2, 0). Throws ParityViolation otherwise.
Parity classify_parity(const TriangleData& t);

/// Throws InternalConsistency if the two expressions for 2*jstar disagree or the
/// sextuple is not of parity beta.
BetaDecomposition beta_decompose(const SpinSextuple& s, const TriangleData& t);

/// (-1)^(4 k^2 sum j_i J_i), from the doubled spins.
int frontal_phase(const SpinSextuple& s, std::int64_t k);

/// The parity closed form of the frontal phase for odd k: +1 (alpha),
/// (-1)^(1 + sum p_j) (gamma), (-1)^(v + v' - p) (beta).
int frontal_phase_closed_form(Parity parity, const TriangleData& t, const std::optional<BetaDecomposition>& bd);

/// Pi_pi(t): 1, -t(2 jstar + 1) + (pbar + 1/2)(pbar' + 1/2) - v v', or
/// -t + 2 sum j_i J_i + sum spins + 1/2.
BigRational monomial(Parity parity, std::int64_t t, const SpinSextuple& s,
                     const std::optional<BetaDecomposition>& bd);

/// Same polynomial written around (t + 1): -(t+1)(2 jstar + 1) + [...] and
/// -(t+1) + [2 sum j_i J_i + sum p_j / 2 + 3/2].
BigRational monomial_shifted_form(Parity parity, std::int64_t t, const SpinSextuple& s,
                                  const std::optional<BetaDecomposition>& bd);

/// Gurau's prefactor prod (p_j - v_i)! / prod (v_i + 1)!, symbolic.
FactorialRatio prefactor_standard_factorials(const TriangleData& t);

/// R^S for the given parity, symbolic. Throws ShiftViolation if a factorial argument is
/// not a non-negative integer after the parity's half shifts.
FactorialRatio prefactor_factorials(Parity parity, const TriangleData& t,
                                    const std::optional<BetaDecomposition>& bd);
BigRational prefactor(Parity parity, const SpinSextuple& s, const TriangleData& t,
                      const std::optional<BetaDecomposition>& bd);

ExactSymbol sixj_standard_exact(const SpinSextuple& s);

struct SuperEvaluation {
  ExactSymbol value;
  Parity parity = Parity::alpha;
  bool empty_range = false;  ///< the t-sum had no terms; value is exactly 0
};

/// Generic single-sum formula with integer-part brackets; valid for every parity.
SuperEvaluation sixj_super_evaluate(const SpinSextuple& s);
ExactSymbol sixj_super_exact(const SpinSextuple& s);

/// Specialised alpha path: no brackets, monomial 1, phase +1. Throws ParityViolation
/// for non-alpha input.
ExactSymbol sixj_super_alpha_exact(const SpinSextuple& s);

/// k*s and its parity. Precondition: s admissible under osp12.
std::pair<SpinSextuple, Parity> rescale(const SpinSextuple& s, std::int64_t k);

}  // namespace sixj
