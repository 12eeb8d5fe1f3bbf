#pragma once

// The one-parameter family of rotationally invariant spin-(j,1/2) states,
// labeled by F in [0,1], with its known entanglement and discord measures,
// plus the closed thermal forms of the isotropic exchange model: LQFI/LQU
// against temperature, the entanglement threshold temperature, and the
// zero-temperature values.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "axialq/axial_core.hpp"
#include "axialq/thermal.hpp"

namespace axialq {

/// Rotationally invariant state, parameterized by the total weight F of the
/// spin-(j-1/2) multiplet. 1-F is carried alongside F: measures near F = 1
/// depend on 1-F with full relative precision, which a lone stored F cannot
/// provide.
class SU2State {
 public:
  SU2State(SpinJ spin, double f)
      : SU2State(spin, f, 1.0 - f) {}

  SU2State(SpinJ spin, double f, double one_minus_f)
      : spin_(spin), f_(f), omf_(one_minus_f) {
    if (!(f >= 0.0 && f <= 1.0)) {
      throw std::invalid_argument("SU2State: F must lie in [0, 1]");
    }
  }

  SpinJ spin() const { return spin_; }
  double f_param() const { return f_; }
  double one_minus_f() const { return omf_; }

  /// F at infinite temperature, j/(2j+1); every correlation measure of the
  /// family vanishes there.
  double f_critical() const { return spin_.j() / (spin_.twice_j() + 1.0); }

 private:
  SpinJ spin_;
  double f_;
  double omf_;
};

/// F of the thermal isotropic-exchange state, F = j w / (1 + j + j w) with
/// w = exp((2j+1) J0 / (2 T sqrt(j(j+1)))). Evaluated on the decaying-
/// exponential side for either sign of the exponent, so no T > 0 overflows.
inline SU2State su2_f_from_thermal(SpinJ spin, double j0, Temperature t) {
  detail::require_positive_temperature(t);
  detail::require_finite(j0, "su2_f_from_thermal j0");
  const double j = spin.j();
  const double x =
      (spin.twice_j() + 1.0) * j0 / (2.0 * t.t * std::sqrt(j * (j + 1.0)));
  if (x >= 0.0) {
    const double e = std::exp(-x);  // 1/w <= 1
    const double den = j + (1.0 + j) * e;
    return SU2State(spin, j / den, (1.0 + j) * e / den);
  }
  const double w = std::exp(x);  // w < 1
  const double den = 1.0 + j + j * w;
  return SU2State(spin, j * w / den, (1.0 + j) / den);
}

/// Double negativity, max[0, 2(F - 2j/(2j+1))]; positive only above the
/// separability threshold F = 2j/(2j+1).
inline double negativity(const SU2State& s) {
  const double twoj = s.spin().twice_j();
  return std::max(0.0, 2.0 * (s.f_param() - twoj / (twoj + 1.0)));
}

/// Binary entropy h(x) = -x log2 x - (1-x) log2(1-x), with h(0) = h(1) = 0.
inline double binary_entropy(double x) {
  auto xlog2x = [](double v) { return v > 0.0 ? v * std::log2(v) : 0.0; };
  return -xlog2x(x) - xlog2x(1.0 - x);
}

/// Entanglement of formation: 0 up to the separability threshold, then
/// h((sqrt(F) - sqrt(2j(1-F)))^2 / (2j+1)).
inline double eof(const SU2State& s) {
  const double twoj = s.spin().twice_j();
  if (s.f_param() <= twoj / (twoj + 1.0)) return 0.0;
  const double root =
      std::sqrt(s.f_param()) - std::sqrt(twoj * s.one_minus_f());
  return binary_entropy(root * root / (twoj + 1.0));
}

/// Eigenvalue list of the measured conditional state:
/// lambda_n(+/-) = 1/(2j+1) +/- (j-n)|(2j+1)F - j| / (j(j+1)(2j+1)),
/// n = 0..floor(j). For integer j the n = j level has both signs equal;
/// merge_degenerate_level=true counts it once, which yields exactly 2j+1
/// values summing to 1. With false it is counted twice (the list then sums
/// to (2j+2)/(2j+1)), which makes the resulting discord oscillate between
/// integer and half-integer spins.
inline std::vector<double> discord_spectrum(const SU2State& s,
                                            bool merge_degenerate_level = true) {
  const double j = s.spin().j();
  const double twoj1 = s.spin().twice_j() + 1.0;
  const double amp = std::abs(twoj1 * s.f_param() - j) / (j * (j + 1.0) * twoj1);
  const int n_max = s.spin().twice_j() / 2;  // floor(j)
  std::vector<double> lams;
  lams.reserve(2 * (n_max + 1));
  for (int n = 0; n <= n_max; ++n) {
    const double shift = (j - n) * amp;
    lams.push_back(1.0 / twoj1 + shift);
    if (!(merge_degenerate_level && s.spin().is_integer() && n == n_max)) {
      lams.push_back(std::max(0.0, 1.0 / twoj1 - shift));
    }
  }
  return lams;
}

/// Quantum discord of the family. Zero exactly at F = F_c.
inline double discord(const SU2State& s, bool merge_degenerate_level = true) {
  const double twoj = s.spin().twice_j();
  auto xlog2x = [](double v) { return v > 0.0 ? v * std::log2(v) : 0.0; };
  double q = 1.0;
  if (s.f_param() > 0.0) {
    q += xlog2x(s.f_param()) - s.f_param() * std::log2(twoj);
  }
  if (s.one_minus_f() > 0.0) {
    q += xlog2x(s.one_minus_f()) - s.one_minus_f() * std::log2(twoj + 2.0);
  }
  for (double lam : discord_spectrum(s, merge_degenerate_level)) {
    q -= xlog2x(lam);
  }
  return q;
}

/// LQU of the family: (8j(j+1)/(3(2j+1))) (sqrt(F/2j) - sqrt((1-F)/(2j+2)))^2.
inline double lqu_su2(const SU2State& s) {
  const double j = s.spin().j();
  const double twoj = s.spin().twice_j();
  const double root = std::sqrt(s.f_param() / twoj) -
                      std::sqrt(s.one_minus_f() / (twoj + 2.0));
  return 8.0 * j * (j + 1.0) / (3.0 * (twoj + 1.0)) * root * root;
}

/// LQFI of the family: (4/3) (j - (2j+1)F)^2 / ((2j+1)(j + F)). Both the
/// value and its F-derivative vanish at F_c.
inline double lqfi_su2(const SU2State& s) {
  const double j = s.spin().j();
  const double twoj1 = s.spin().twice_j() + 1.0;
  // j - (2j+1)F, written through (F, 1-F) so it stays exact near F = 1.
  const double num = j * s.one_minus_f() - (j + 1.0) * s.f_param();
  return 4.0 / 3.0 * num * num / (twoj1 * (j + s.f_param()));
}

struct XxxCorrelations {
  double f;
  double u;
};

/// Thermal LQFI and LQU of the normalized isotropic model in closed form.
/// Equals the branch route through gibbs_state to ~1e-12.
inline XxxCorrelations xxx_correlations_closed(SpinJ spin, double j0,
                                               Temperature t) {
  detail::require_positive_temperature(t);
  detail::require_finite(j0, "xxx_correlations_closed j0");
  const double j = spin.j();
  const double twoj1 = spin.twice_j() + 1.0;
  const double x = twoj1 * j0 / (2.0 * t.t * std::sqrt(j * (j + 1.0)));
  const double pre = 4.0 * j * (j + 1.0) / (3.0 * twoj1);
  if (x >= 0.0) {
    // Divide numerator and denominator by w^2 (resp. w); e = 1/w <= 1.
    const double e = std::exp(-x);
    const double se = std::exp(-0.5 * x);
    const double f =
        pre * (1.0 - e) * (1.0 - e) / (((1.0 + j) * e + j) * (1.0 + e));
    const double u = pre * (1.0 - se) * (1.0 - se) / (e + j * (1.0 + e));
    return {f, u};
  }
  const double w = std::exp(x);
  const double sw = std::exp(0.5 * x);
  const double f = pre * (1.0 - w) * (1.0 - w) / ((1.0 + j + j * w) * (1.0 + w));
  const double u = pre * (sw - 1.0) * (sw - 1.0) / (1.0 + j * (w + 1.0));
  return {f, u};
}

/// Temperature at which thermal entanglement (negativity and EoF alike)
/// vanishes: (2j+1) J0 / (2 sqrt(j(j+1)) ln(2j+2)), antiferromagnetic
/// coupling only. The unnormalized variant drops the sqrt(j(j+1)) rescaling
/// and grows without bound instead of decreasing to zero.
inline double threshold_temperature(SpinJ spin, double j0,
                                    bool normalized = true) {
  if (!(j0 > 0.0) || !std::isfinite(j0)) {
    throw std::invalid_argument(
        "threshold_temperature: requires antiferromagnetic j0 > 0");
  }
  const double j = spin.j();
  double den = 2.0 * std::log(spin.twice_j() + 2.0);
  if (normalized) den *= std::sqrt(j * (j + 1.0));
  return (spin.twice_j() + 1.0) * j0 / den;
}

struct XxxGroundMeasures {
  double fu;          // common LQFI = LQU value at T = 0
  double eof;
  double negativity;
  double discord;
};

/// Zero-temperature measures of the isotropic model. Ferromagnetic coupling
/// pins F = 0 (no entanglement); antiferromagnetic pins F = 1.
inline XxxGroundMeasures ground_state_xxx(SpinJ spin, bool ferro) {
  const double twoj1 = spin.twice_j() + 1.0;
  const double sign = ferro ? -1.0 : 1.0;
  const SU2State s = ferro ? SU2State(spin, 0.0, 1.0) : SU2State(spin, 1.0, 0.0);
  return XxxGroundMeasures{2.0 / 3.0 * (1.0 + sign / twoj1), eof(s),
                           negativity(s), discord(s)};
}

}  // namespace axialq
