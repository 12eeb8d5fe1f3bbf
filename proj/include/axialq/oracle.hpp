#pragma once

// Independent dense brute-force route to every quantity the block formulas
// compute: full-matrix expansion, a cyclic Jacobi eigensolver, spectral
// matrix functions, the definitional variance / skew information / quantum
// Fisher information, the 3x3 correlation matrices, and direct minimization
// of the local-observable measures over the Bloch sphere.
//
// Everything here is real arithmetic. A local qubit observable n.sigma has
// an imaginary part only through sigma_y = i*K with K real antisymmetric;
// traces are assembled from the symmetric and antisymmetric parts, whose
// cross terms vanish identically (a trace with an odd number of
// antisymmetric factors is zero).

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "axialq/axial_core.hpp"
#include "axialq/thermal.hpp"

namespace axialq::oracle {

/// Dense real symmetric matrix, row-major.
struct DenseSym {
  int dim = 0;
  std::vector<double> a;

  DenseSym() = default;
  explicit DenseSym(int n) : dim(n), a(static_cast<std::size_t>(n) * n, 0.0) {}

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
  double at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * dim + j];
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
  }

  double max_asymmetry() const {
    double m = 0.0;
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        m = std::max(m, std::abs(at(i, j) - at(j, i)));
    return m;
  }
};

inline DenseSym matmul(const DenseSym& x, const DenseSym& y) {
  DenseSym z(x.dim);
  for (int i = 0; i < x.dim; ++i) {
    for (int k = 0; k < x.dim; ++k) {
      const double xik = x.at(i, k);
      if (xik == 0.0) continue;
      for (int j = 0; j < x.dim; ++j) z.at(i, j) += xik * y.at(k, j);
    }
  }
  return z;
}

/// X^T Y without forming the transpose.
inline DenseSym matmul_transposed_left(const DenseSym& x, const DenseSym& y) {
  DenseSym z(x.dim);
  for (int k = 0; k < x.dim; ++k) {
    for (int i = 0; i < x.dim; ++i) {
      const double xki = x.at(k, i);
      if (xki == 0.0) continue;
      for (int j = 0; j < x.dim; ++j) z.at(i, j) += xki * y.at(k, j);
    }
  }
  return z;
}

inline double trace(const DenseSym& x) {
  double t = 0.0;
  for (int i = 0; i < x.dim; ++i) t += x.at(i, i);
  return t;
}

/// tr(X Y) without forming the product.
inline double trace_product(const DenseSym& x, const DenseSym& y) {
  double t = 0.0;
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < x.dim; ++j) t += x.at(i, j) * y.at(j, i);
  return t;
}

/// Full matrix of an axially symmetric Hamiltonian: edges at (0,0) and
/// (4j+1,4j+1), block k at rows/cols (2k-1, 2k).
inline DenseSym expand(const AxialHamiltonian& h) {
  DenseSym m(h.spin.hilbert_dim());
  m.at(0, 0) = h.e_first;
  for (int k = 1; k <= h.spin.twice_j(); ++k) {
    const auto& blk = h.blocks[k - 1];
    m.at(2 * k - 1, 2 * k - 1) = blk.h;
    m.at(2 * k, 2 * k) = blk.h_prime;
    m.at(2 * k - 1, 2 * k) = blk.g;
    m.at(2 * k, 2 * k - 1) = blk.g;
  }
  m.at(m.dim - 1, m.dim - 1) = h.e_last;
  return m;
}

inline DenseSym expand(const AxialDensityMatrix& rho) {
  DenseSym m(rho.spin.hilbert_dim());
  m.at(0, 0) = rho.p_first;
  for (int k = 1; k <= rho.spin.twice_j(); ++k) {
    const auto& blk = rho.blocks[k - 1];
    m.at(2 * k - 1, 2 * k - 1) = blk.a;
    m.at(2 * k, 2 * k) = blk.b;
    m.at(2 * k - 1, 2 * k) = blk.u;
    m.at(2 * k, 2 * k - 1) = blk.u;
  }
  m.at(m.dim - 1, m.dim - 1) = rho.p_last;
  return m;
}

/// Diagonal of the total-spin z component in lattice order:
/// slot 2i is (m_A = j - i, up), slot 2i+1 is (m_A = j - i, down).
inline std::vector<double> sz_diagonal(SpinJ spin) {
  std::vector<double> d(static_cast<std::size_t>(spin.hilbert_dim()));
  for (int i = 0; i <= spin.twice_j(); ++i) {
    d[2 * i] = 0.5 * (spin.twice_j() - 2 * i + 1);
    d[2 * i + 1] = 0.5 * (spin.twice_j() - 2 * i - 1);
  }
  return d;
}

/// max |[M, Sz]| entry; zero for every axially symmetric matrix.
inline double max_commutator_with_sz(const DenseSym& m, SpinJ spin) {
  const auto sz = sz_diagonal(spin);
  double worst = 0.0;
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j)
      worst = std::max(worst, std::abs(m.at(i, j) * (sz[j] - sz[i])));
  return worst;
}

struct EigenSystem {
  std::vector<double> values;  // ascending
  DenseSym vectors;            // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi diagonalization of a real symmetric matrix. O(n^3) per
/// sweep; the dimensions here (a few hundred at most) make that irrelevant,
/// and the rotations keep eigenvectors orthonormal even through degenerate
/// clusters.
inline EigenSystem eigh(const DenseSym& input) {
  if (input.max_asymmetry() > 1e-12 * std::max(1.0, input.max_abs())) {
    throw std::invalid_argument("eigh: matrix is not symmetric");
  }
  const int n = input.dim;
  DenseSym m = input;
  DenseSym v(n);
  for (int i = 0; i < n; ++i) v.at(i, i) = 1.0;

  auto off_norm = [&m, n]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += m.at(i, j) * m.at(i, j);
    return std::sqrt(2.0 * s);
  };
  const double stop = 1e-15 * std::max(1.0, input.max_abs()) * n;

  for (int sweep = 0; sweep < 100 && off_norm() > stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m.at(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        m.at(p, p) -= t * apq;
        m.at(q, q) += t * apq;
        m.at(p, q) = 0.0;
        m.at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double mrp = m.at(r, p), mrq = m.at(r, q);
            m.at(r, p) = m.at(p, r) = mrp - s * (mrq + tau * mrp);
            m.at(r, q) = m.at(q, r) = mrq + s * (mrp - tau * mrq);
          }
          const double vrp = v.at(r, p), vrq = v.at(r, q);
          v.at(r, p) = vrp - s * (vrq + tau * vrp);
          v.at(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&m](int i, int j) { return m.at(i, i) < m.at(j, j); });
  EigenSystem es;
  es.values.resize(n);
  es.vectors = DenseSym(n);
  for (int k = 0; k < n; ++k) {
    es.values[k] = m.at(order[k], order[k]);
    for (int i = 0; i < n; ++i) es.vectors.at(i, k) = v.at(i, order[k]);
  }
  return es;
}

/// V f(diag) V^T for a nonnegative weight vector.
inline DenseSym compose_spectral(const EigenSystem& es,
                                 const std::vector<double>& f) {
  const int n = es.vectors.dim;
  DenseSym out(n);
  for (int k = 0; k < n; ++k) {
    if (f[k] == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const double w = f[k] * es.vectors.at(i, k);
      if (w == 0.0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += w * es.vectors.at(j, k);
    }
  }
  return out;
}

/// exp(-H/T)/Z by spectral application, exponents shifted by the ground
/// energy.
inline DenseSym dense_gibbs(const DenseSym& h, Temperature t) {
  detail::require_positive_temperature(t);
  const auto es = eigh(h);
  const double emin = es.values.front();
  std::vector<double> w(es.values.size());
  double z = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    w[k] = std::exp(-(es.values[k] - emin) / t.t);
    z += w[k];
  }
  for (double& x : w) x /= z;
  return compose_spectral(es, w);
}

/// Principal square root of a positive semidefinite matrix; eigenvalues at
/// the rounding floor are treated as exact zeros.
inline DenseSym dense_sqrt(const DenseSym& rho) {
  const auto es = eigh(rho);
  const double lam_max = std::max(0.0, es.values.back());
  std::vector<double> w(es.values.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double lam = es.values[k];
    if (lam < -1e-12) throw invalid_state("dense_sqrt: negative eigenvalue");
    w[k] = lam <= 64.0 * detail::kEps * lam_max ? 0.0 : std::sqrt(lam);
  }
  return compose_spectral(es, w);
}

/// Var(rho, H) = <H^2> - <H>^2.
inline double variance(const DenseSym& rho, const DenseSym& h) {
  const DenseSym rh = matmul(rho, h);
  const double mean = trace(rh);
  return trace_product(rh, h) - mean * mean;
}

/// Wigner-Yanase skew information -1/2 tr [sqrt(rho), H]^2
/// = tr(rho H^2) - tr(sqrt(rho) H sqrt(rho) H).
inline double wigner_yanase(const DenseSym& rho, const DenseSym& h) {
  const DenseSym b = dense_sqrt(rho);
  const DenseSym bh = matmul(b, h);
  return trace_product(matmul(rho, h), h) - trace_product(bh, bh);
}

/// Quantum Fisher information in the spectral form
/// 1/2 sum_{p_m + p_n > 0} (p_m - p_n)^2 / (p_m + p_n) |<m|H|n>|^2.
/// The 1/2 makes qfi(rho, I (x) n.sigma) equal 1 - n.M.n with the M matrix
/// below, and qfi = variance on pure states.
inline double qfi(const DenseSym& rho, const DenseSym& h) {
  const auto es = eigh(rho);
  const double lam_max = std::max(0.0, es.values.back());
  std::vector<double> p(es.values.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    p[k] = es.values[k] <= 64.0 * detail::kEps * lam_max
               ? 0.0
               : es.values[k];
  }
  const int n = es.vectors.dim;
  const DenseSym ht = matmul(matmul_transposed_left(es.vectors, h), es.vectors);
  double acc = 0.0;
  for (int m = 0; m < n; ++m) {
    for (int k = m + 1; k < n; ++k) {
      const double s = p[m] + p[k];
      if (s <= 0.0) continue;
      const double d = p[m] - p[k];
      acc += d * d / s * ht.at(m, k) * ht.at(m, k);
    }
  }
  return acc;
}

/// Unit direction on the Bloch sphere of the qubit subsystem.
struct BlochVector {
  double nx;
  double ny;
  double nz;

  static BlochVector from_angles(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
            std::cos(theta)};
  }

  double norm() const { return std::sqrt(nx * nx + ny * ny + nz * nz); }
};

// Right-multiplication by the local qubit operators, exploiting their
// 2x2-block-diagonal structure: O(d^2) instead of a dense product.

inline void right_mul_local_x(const DenseSym& b, DenseSym& out) {
  for (int i = 0; i < b.dim; ++i) {
    for (int c = 0; c < b.dim; c += 2) {
      out.at(i, c) = b.at(i, c + 1);
      out.at(i, c + 1) = b.at(i, c);
    }
  }
}

inline void right_mul_local_z(const DenseSym& b, DenseSym& out) {
  for (int i = 0; i < b.dim; ++i) {
    for (int c = 0; c < b.dim; c += 2) {
      out.at(i, c) = b.at(i, c);
      out.at(i, c + 1) = -b.at(i, c + 1);
    }
  }
}

/// B * K where sigma_y = i K, K = [[0,-1],[1,0]] per qudit level.
inline void right_mul_local_k(const DenseSym& b, DenseSym& out) {
  for (int i = 0; i < b.dim; ++i) {
    for (int c = 0; c < b.dim; c += 2) {
      out.at(i, c) = b.at(i, c + 1);
      out.at(i, c + 1) = -b.at(i, c);
    }
  }
}

/// Eigen-data of a density matrix plus everything the repeated-evaluation
/// paths need: the matrix square root and the local Pauli operators in the
/// eigenbasis.
class SpectralState {
 public:
  /// For arbitrary states: diagonalize rho directly. Eigenvalues at the
  /// rounding floor are snapped to exact zeros (rank-deficient inputs
  /// otherwise leak sqrt(noise) into every skew-information trace).
  static SpectralState from_density(const DenseSym& rho) {
    auto es = eigh(rho);
    const double lam_max = std::max(0.0, es.values.back());
    std::vector<double> w(es.values.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (es.values[k] < -1e-12) {
        throw invalid_state("SpectralState: negative eigenvalue");
      }
      w[k] = es.values[k] <= 64.0 * detail::kEps * lam_max ? 0.0
                                                           : es.values[k];
    }
    return SpectralState(std::move(es.vectors), std::move(w));
  }

  /// For thermal states: diagonalize H and form Boltzmann weights, which
  /// keeps exponentially small weights relatively accurate.
  static SpectralState from_hamiltonian(const DenseSym& h, Temperature t) {
    detail::require_positive_temperature(t);
    auto es = eigh(h);
    const double emin = es.values.front();
    std::vector<double> w(es.values.size());
    double z = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      w[k] = std::exp(-(es.values[k] - emin) / t.t);
      z += w[k];
    }
    for (double& x : w) x /= z;
    return SpectralState(std::move(es.vectors), std::move(w));
  }

  int dim() const { return vectors_.dim; }
  const std::vector<double>& weights() const { return weights_; }
  const DenseSym& vectors() const { return vectors_; }
  const DenseSym& sqrt_rho() const { return sqrt_rho_; }
  const DenseSym& pauli_x_eigen() const { return tx_; }
  const DenseSym& pauli_z_eigen() const { return tz_; }
  const DenseSym& pauli_k_eigen() const { return tk_; }

  DenseSym density() const { return compose_spectral({weights_, vectors_}, weights_); }

 private:
  SpectralState(DenseSym vectors, std::vector<double> weights)
      : vectors_(std::move(vectors)), weights_(std::move(weights)) {
    std::vector<double> roots(weights_.size());
    for (std::size_t k = 0; k < weights_.size(); ++k) {
      roots[k] = std::sqrt(weights_[k]);
    }
    sqrt_rho_ = compose_spectral({weights_, vectors_}, roots);
    tx_ = matmul_transposed_left(vectors_, sigma_apply_rows(vectors_, 'x'));
    tz_ = matmul_transposed_left(vectors_, sigma_apply_rows(vectors_, 'z'));
    tk_ = matmul_transposed_left(vectors_, sigma_apply_rows(vectors_, 'k'));
  }

  static DenseSym sigma_apply_rows(const DenseSym& v, char which) {
    DenseSym out(v.dim);
    for (int r = 0; r < v.dim; r += 2) {
      for (int j = 0; j < v.dim; ++j) {
        const double top = v.at(r, j), bot = v.at(r + 1, j);
        switch (which) {
          case 'x': out.at(r, j) = bot; out.at(r + 1, j) = top; break;
          case 'z': out.at(r, j) = top; out.at(r + 1, j) = -bot; break;
          default:  out.at(r, j) = -bot; out.at(r + 1, j) = top; break;  // K
        }
      }
    }
    return out;
  }

  DenseSym vectors_;
  std::vector<double> weights_;
  DenseSym sqrt_rho_;
  DenseSym tx_, tz_, tk_;
};

/// Real symmetric 3x3 with closed-form eigenvalues.
struct Matrix3 {
  double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

  double max_off_diagonal() const {
    return std::max({std::abs(m[0][1]), std::abs(m[0][2]), std::abs(m[1][2])});
  }

  /// Largest eigenvalue by the trigonometric closed form.
  double lambda_max() const {
    const double p1 =
        m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
    const double q = (m[0][0] + m[1][1] + m[2][2]) / 3.0;
    if (p1 == 0.0) return std::max({m[0][0], m[1][1], m[2][2]});
    const double d0 = m[0][0] - q, d1 = m[1][1] - q, d2 = m[2][2] - q;
    const double p2 = d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    double b[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) b[i][j] = (m[i][j] - (i == j ? q : 0.0)) / p;
    const double det =
        b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
        b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
        b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    const double r = std::clamp(det / 2.0, -1.0, 1.0);
    return q + 2.0 * p * std::cos(std::acos(r) / 3.0);
  }
};

/// W_{mu nu} = tr(sqrt(rho) Sigma_mu sqrt(rho) Sigma_nu). The xy and yz
/// entries carry an odd number of antisymmetric factors and vanish
/// identically for real symmetric states.
inline Matrix3 w_matrix(const SpectralState& s) {
  const int n = s.dim();
  DenseSym cx(n), cz(n), ck(n);
  right_mul_local_x(s.sqrt_rho(), cx);
  right_mul_local_z(s.sqrt_rho(), cz);
  right_mul_local_k(s.sqrt_rho(), ck);
  Matrix3 w;
  w.m[0][0] = trace_product(cx, cx);
  w.m[1][1] = -trace_product(ck, ck);
  w.m[2][2] = trace_product(cz, cz);
  w.m[0][2] = w.m[2][0] = trace_product(cx, cz);
  return w;
}

/// M_{mu nu} = sum 2 p_m p_n / (p_m + p_n) <m|Sigma_mu|n><n|Sigma_nu|m>,
/// pairs with p_m + p_n = 0 excluded.
inline Matrix3 m_matrix(const SpectralState& s) {
  const int n = s.dim();
  const auto& p = s.weights();
  const auto& tx = s.pauli_x_eigen();
  const auto& tz = s.pauli_z_eigen();
  const auto& tk = s.pauli_k_eigen();
  Matrix3 m;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double sum = p[i] + p[j];
      if (sum <= 0.0) continue;
      const double c = 2.0 * p[i] * p[j] / sum;
      if (c == 0.0) continue;
      m.m[0][0] += c * tx.at(i, j) * tx.at(i, j);
      m.m[1][1] += c * tk.at(i, j) * tk.at(i, j);
      m.m[2][2] += c * tz.at(i, j) * tz.at(i, j);
      m.m[0][2] += c * tx.at(i, j) * tz.at(i, j);
    }
  }
  m.m[2][0] = m.m[0][2];
  return m;
}

namespace detail_scan {

struct Scratch {
  DenseSym c;
  explicit Scratch(int n) : c(n) {}
};

inline double wy_direction(const SpectralState& s, const BlochVector& n,
                           Scratch& scratch) {
  const DenseSym& b = s.sqrt_rho();
  const int d = s.dim();
  DenseSym& c = scratch.c;
  // Symmetric part: C = B (nx Sigma_x + nz Sigma_z).
  for (int i = 0; i < d; ++i) {
    for (int col = 0; col < d; col += 2) {
      const double left = b.at(i, col), right = b.at(i, col + 1);
      c.at(i, col) = n.nz * left + n.nx * right;
      c.at(i, col + 1) = n.nx * left - n.nz * right;
    }
  }
  double tr_sym = trace_product(c, c);
  // Antisymmetric part: D = B (ny K); tr(B Sigma_y B Sigma_y) = -tr(D D).
  for (int i = 0; i < d; ++i) {
    for (int col = 0; col < d; col += 2) {
      c.at(i, col) = n.ny * b.at(i, col + 1);
      c.at(i, col + 1) = -n.ny * b.at(i, col);
    }
  }
  const double tr_asym = -trace_product(c, c);
  double tr_rho = 0.0;
  for (double w : s.weights()) tr_rho += w;
  const double n2 = n.nx * n.nx + n.ny * n.ny + n.nz * n.nz;
  return n2 * tr_rho - (tr_sym + tr_asym);
}

inline double qfi_direction(const SpectralState& s, const BlochVector& n) {
  const auto& p = s.weights();
  const auto& tx = s.pauli_x_eigen();
  const auto& tz = s.pauli_z_eigen();
  const auto& tk = s.pauli_k_eigen();
  const int d = s.dim();
  double acc = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double sum = p[i] + p[j];
      if (sum <= 0.0) continue;
      const double diff = p[i] - p[j];
      if (diff == 0.0) continue;
      const double re = n.nx * tx.at(i, j) + n.nz * tz.at(i, j);
      const double im = n.ny * tk.at(i, j);
      acc += diff * diff / sum * (re * re + im * im);
    }
  }
  return acc;
}

/// Deterministic sphere minimization: 64 x 128 (theta, phi) grid, then
/// alternating golden-section refinement of each angle to 1e-10.
template <typename F>
double minimize_on_sphere(F&& value) {
  constexpr int kThetaGrid = 64;
  constexpr int kPhiGrid = 128;
  constexpr double kPi = 3.14159265358979323846;
  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0, best_phi = 0.0;
  for (int it = 0; it < kThetaGrid; ++it) {
    const double theta = kPi * it / (kThetaGrid - 1);
    for (int ip = 0; ip < kPhiGrid; ++ip) {
      const double phi = 2.0 * kPi * ip / kPhiGrid;
      const double v = value(BlochVector::from_angles(theta, phi));
      if (v < best) {
        best = v;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  auto golden_min = [&](auto&& f, double lo, double hi) {
    double x1 = hi - golden * (hi - lo);
    double x2 = lo + golden * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > 1e-10) {
      if (f1 < f2) {
        hi = x2; x2 = x1; f2 = f1;
        x1 = hi - golden * (hi - lo); f1 = f(x1);
      } else {
        lo = x1; x1 = x2; f1 = f2;
        x2 = lo + golden * (hi - lo); f2 = f(x2);
      }
    }
    return 0.5 * (lo + hi);
  };
  const double dtheta = kPi / (kThetaGrid - 1);
  const double dphi = 2.0 * kPi / kPhiGrid;
  for (int round = 0; round < 3; ++round) {
    best_theta = golden_min(
        [&](double th) {
          return value(BlochVector::from_angles(th, best_phi));
        },
        best_theta - dtheta, best_theta + dtheta);
    best_phi = golden_min(
        [&](double ph) {
          return value(BlochVector::from_angles(best_theta, ph));
        },
        best_phi - dphi, best_phi + dphi);
  }
  return std::min(best, value(BlochVector::from_angles(best_theta, best_phi)));
}

}  // namespace detail_scan

/// Skew information of the local observable along n, from the definition.
inline double wigner_yanase_direction(const SpectralState& s,
                                      const BlochVector& n) {
  detail_scan::Scratch scratch(s.dim());
  return detail_scan::wy_direction(s, n, scratch);
}

/// Quantum Fisher information of the local observable along n.
inline double qfi_direction(const SpectralState& s, const BlochVector& n) {
  return detail_scan::qfi_direction(s, n);
}

/// A measure computed by its two independent oracle routes: the 3x3-matrix
/// eigensolve and the direct Bloch-sphere minimization.
struct OracleRoutes {
  double matrix_route;
  double sphere_route;
};

inline OracleRoutes oracle_lqu(const SpectralState& s) {
  const double via_matrix = 1.0 - w_matrix(s).lambda_max();
  detail_scan::Scratch scratch(s.dim());
  const double via_sphere = detail_scan::minimize_on_sphere(
      [&](const BlochVector& n) { return detail_scan::wy_direction(s, n, scratch); });
  return {via_matrix, via_sphere};
}

inline OracleRoutes oracle_lqfi(const SpectralState& s) {
  const double via_matrix = 1.0 - m_matrix(s).lambda_max();
  const double via_sphere = detail_scan::minimize_on_sphere(
      [&](const BlochVector& n) { return detail_scan::qfi_direction(s, n); });
  return {via_matrix, via_sphere};
}

}  // namespace axialq::oracle
