#pragma once

// Exact data model for axially symmetric operators on a (2j+1)x2 Hilbert
// space: two 1x1 edge entries plus 2j two-by-two blocks, and the per-block
// spectral decomposition everything else is built on.
//
// Off-diagonal entries (g, u) are stored as signed reals. Every measure
// downstream depends only on |u|, and all supported interactions are real;
// complex phases are not modeled.

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace axialq {

/// Raised when a density matrix (or a block of one) violates positivity
/// or trace constraints.
class invalid_state : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string(what) + ": non-finite value");
  }
}

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// a*b - u*u with a single rounding (compensated with fused multiply-adds).
/// The naive expression loses everything to cancellation on nearly pure
/// blocks, where the result is the small eigenvalue scale.
inline double product_difference(double a, double b, double u) {
  const double w = u * u;
  const double err = std::fma(u, u, -w);
  return std::fma(a, b, -w) - err;
}

/// Snap floor for the block radicand a*b - u*u: the stored entries carry
/// O(eps) rounding, so any radicand below this bound is indistinguishable
/// from an exact zero (a pure block).
inline double radicand_floor(double a, double b, double u) {
  return 4.0 * kEps * (a * b + u * u);
}

}  // namespace detail

/// Half-integer spin magnitude j, stored exactly as the integer 2j.
class SpinJ {
 public:
  explicit SpinJ(int twice_j) : twice_j_(twice_j) {
    if (twice_j < 1) throw std::invalid_argument("SpinJ: twice_j must be >= 1");
  }

  int twice_j() const { return twice_j_; }
  double j() const { return 0.5 * twice_j_; }
  bool is_integer() const { return twice_j_ % 2 == 0; }

  /// Dimension of the spin-j factor, 2j+1.
  int qudit_dim() const { return twice_j_ + 1; }
  /// Total Hilbert-space dimension, 4j+2.
  int hilbert_dim() const { return 2 * (twice_j_ + 1); }

  friend bool operator==(SpinJ a, SpinJ b) { return a.twice_j_ == b.twice_j_; }

 private:
  int twice_j_;
};

struct HamiltonianBlock {
  double h;        // upper diagonal entry
  double h_prime;  // lower diagonal entry
  double g;        // real off-diagonal coupling
};

/// Edge energies plus 2j two-by-two blocks of an axially symmetric Hamiltonian.
struct AxialHamiltonian {
  SpinJ spin;
  double e_first;  // energy of the topmost 1x1 subblock
  double e_last;   // energy of the bottom 1x1 subblock
  std::vector<HamiltonianBlock> blocks;  // k = 1..2j, stored at index k-1

  AxialHamiltonian(SpinJ s, double e0, double elast,
                   std::vector<HamiltonianBlock> blk)
      : spin(s), e_first(e0), e_last(elast), blocks(std::move(blk)) {
    if (static_cast<int>(blocks.size()) != spin.twice_j()) {
      throw std::invalid_argument("AxialHamiltonian: blocks.size() != 2j");
    }
    detail::require_finite(e_first, "AxialHamiltonian e_first");
    detail::require_finite(e_last, "AxialHamiltonian e_last");
    for (const auto& b : blocks) {
      detail::require_finite(b.h, "AxialHamiltonian h");
      detail::require_finite(b.h_prime, "AxialHamiltonian h_prime");
      detail::require_finite(b.g, "AxialHamiltonian g");
    }
  }
};

/// Eigenvalues of one 2x2 Hamiltonian block.
struct BlockSpectrum {
  double e_plus;   // (h + h' + r) / 2
  double e_minus;  // (h + h' - r) / 2
  double r;        // sqrt((h - h')^2 + 4 g^2)
};

inline BlockSpectrum block_spectrum(double h, double h_prime, double g) {
  detail::require_finite(h, "block_spectrum h");
  detail::require_finite(h_prime, "block_spectrum h_prime");
  detail::require_finite(g, "block_spectrum g");
  const double r = std::hypot(h - h_prime, 2.0 * g);
  const double s = 0.5 * (h + h_prime);
  return BlockSpectrum{s + 0.5 * r, s - 0.5 * r, r};
}

struct StateBlock {
  double a;  // upper population
  double b;  // lower population
  double u;  // real off-diagonal coherence
};

/// Edge weights plus 2j two-by-two blocks of an axially symmetric state.
struct AxialDensityMatrix {
  SpinJ spin;
  double p_first;
  double p_last;
  std::vector<StateBlock> blocks;  // k = 1..2j, stored at index k-1

  AxialDensityMatrix(SpinJ s, double p0, double plast,
                     std::vector<StateBlock> blk)
      : spin(s), p_first(p0), p_last(plast), blocks(std::move(blk)) {
    if (static_cast<int>(blocks.size()) != spin.twice_j()) {
      throw std::invalid_argument("AxialDensityMatrix: blocks.size() != 2j");
    }
  }

  double trace() const {
    double t = p_first + p_last;
    for (const auto& b : blocks) t += b.a + b.b;
    return t;
  }
};

/// Eigenvalues of one state block and the squared eigenvector weights.
///
/// Convention: p >= q >= 0; kappa2 is the weight of the upper basis slot in
/// the p-eigenvector. A degenerate block (p == q, forced a == b and u == 0)
/// is proportional to the identity, so any orthonormal eigenbasis is valid;
/// we fix kappa2 = 1, usq = 0, consistent with the u -> 0 limit at a > b.
struct BlockEigen {
  double p;
  double q;
  double kappa2;  // kappa~_k^2
  double usq;     // |u~_k|^2
};

inline BlockEigen block_eigs(double a, double b, double u) {
  const double slack = 1e-10;
  if (!(a >= -slack) || !(b >= -slack) || u * u > a * b + slack) {
    throw invalid_state("block_eigs: block violates positivity");
  }
  const double d = std::hypot(a - b, 2.0 * u);
  const double p = 0.5 * (a + b + d);
  // q through the determinant form: (a+b-d) cancels catastrophically on
  // nearly pure blocks, while a*b - u*u stays relatively accurate under the
  // compensated product difference. Radicands at the entry-rounding floor
  // are exact zeros, which keeps sqrt(p*q) terms exact on rank-one blocks.
  double rad = detail::product_difference(a, b, u);
  if (rad <= detail::radicand_floor(a, b, u)) rad = 0.0;
  const double q = rad == 0.0 ? 0.0 : 2.0 * rad / (a + b + d);
  if (d > 0.0) {
    const double ratio = (a - b) / d;
    return BlockEigen{p, q, 0.5 * (1.0 + ratio), 0.5 * (1.0 - ratio)};
  }
  return BlockEigen{p, q, 1.0, 0.0};
}

struct Violation {
  std::string what;
  double magnitude;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  std::string to_string() const {
    std::string s;
    for (const auto& v : violations) {
      s += v.what + " (by " + std::to_string(v.magnitude) + ")\n";
    }
    return s;
  }
};

/// Report-only check of the density-matrix invariants: entry positivity,
/// block positivity u^2 <= a*b, and unit trace, all within tol.
inline ValidationReport validate_density(const AxialDensityMatrix& rho,
                                         double tol = 1e-9) {
  ValidationReport rep;
  auto flag = [&rep](std::string what, double magnitude) {
    rep.violations.push_back({std::move(what), magnitude});
  };
  if (!std::isfinite(rho.p_first) || rho.p_first < -tol) {
    flag("p_first < 0", -rho.p_first);
  }
  if (!std::isfinite(rho.p_last) || rho.p_last < -tol) {
    flag("p_last < 0", -rho.p_last);
  }
  for (std::size_t i = 0; i < rho.blocks.size(); ++i) {
    const auto& blk = rho.blocks[i];
    const std::string key = "block " + std::to_string(i + 1);
    if (!std::isfinite(blk.a) || blk.a < -tol) flag(key + ": a < 0", -blk.a);
    if (!std::isfinite(blk.b) || blk.b < -tol) flag(key + ": b < 0", -blk.b);
    const double excess = blk.u * blk.u - blk.a * blk.b;
    if (!std::isfinite(blk.u) || excess > tol) {
      flag(key + ": u^2 > a*b", excess);
    }
  }
  const double tr = rho.trace();
  if (!(std::abs(tr - 1.0) <= tol)) flag("trace != 1", std::abs(tr - 1.0));
  return rep;
}

}  // namespace axialq
