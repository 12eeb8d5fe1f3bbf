#pragma once

// Closed-form LQU / LQFI branches for axially symmetric spin-(j,1/2) states.
//
// Both measures are 1 - lambda_max of a diagonal 3x3 matrix whose xx = yy
// and zz entries come out of the block data; the z axis gives the 0-branch,
// the xy plane the 1-branch, and the measure is the branch minimum.

#include <algorithm>
#include <cmath>
#include <vector>

#include "axialq/axial_core.hpp"

namespace axialq {

enum class Branch { zero, one };

struct CorrelationResult {
  double f0;
  double f1;
  double u0;
  double u1;
  double f;  // min(f0, f1)
  double u;  // min(u0, u1)
  Branch active_branch_f;
  Branch active_branch_u;
};

namespace detail {

inline void require_valid(const AxialDensityMatrix& rho) {
  const auto rep = validate_density(rho);
  if (!rep.ok()) {
    throw invalid_state("invalid density matrix:\n" + rep.to_string());
  }
}

/// num/den with the 0-limit convention for empty spectral slots: every
/// vanishing denominator below pairs with a vanishing numerator.
inline double safe_frac(double num, double den) {
  return den > 0.0 ? num / den : 0.0;
}

/// a*b - u^2 for the skew-information denominator, compensated. Values at
/// the entry-rounding floor are snapped to zero so pure blocks (p*q = 0 in
/// exact arithmetic) do not pick up sqrt(noise) ~ 1e-9 artifacts.
inline double block_radicand(double a, double b, double u) {
  const double t = product_difference(a, b, u);
  if (t < -1e-10) {
    throw invalid_state("block radicand a*b - u^2 below -1e-10");
  }
  if (t <= radicand_floor(a, b, u)) return 0.0;
  return t;
}

/// (a_k - b_k)/(p_k - q_k); +1 on degenerate blocks, matching the
/// kappa2 = 1 eigenbasis convention of block_eigs.
inline double diag_ratio(const StateBlock& blk, const BlockEigen& eig) {
  return eig.p > eig.q ? (blk.a - blk.b) / (eig.p - eig.q) : 1.0;
}

inline std::vector<BlockEigen> all_block_eigs(const AxialDensityMatrix& rho) {
  std::vector<BlockEigen> eigs;
  eigs.reserve(rho.blocks.size());
  for (const auto& blk : rho.blocks) {
    eigs.push_back(block_eigs(blk.a, blk.b, blk.u));
  }
  return eigs;
}

inline double clamp_unit(double x) {
  return std::min(1.0, std::max(0.0, x));
}

inline double branch_f0_unchecked(const AxialDensityMatrix& rho) {
  double s = 0.0;
  for (const auto& blk : rho.blocks) {
    if (blk.a + blk.b > 0.0) s += blk.u * blk.u / (blk.a + blk.b);
  }
  return clamp_unit(4.0 * s);
}

inline double branch_u0_unchecked(const AxialDensityMatrix& rho) {
  double s = 0.0;
  for (const auto& blk : rho.blocks) {
    if (blk.a + blk.b > 0.0) {
      s += blk.u * blk.u /
           (blk.a + blk.b + 2.0 * std::sqrt(block_radicand(blk.a, blk.b, blk.u)));
    }
  }
  return clamp_unit(4.0 * s);
}

inline double branch_u1_unchecked(const AxialDensityMatrix& rho,
                                  const std::vector<BlockEigen>& eigs) {
  const auto& first = eigs.front();
  const auto& last = eigs.back();
  double s = safe_frac(rho.blocks.front().a + std::sqrt(first.p * first.q),
                       std::sqrt(first.p) + std::sqrt(first.q)) *
             std::sqrt(rho.p_first);
  s += safe_frac(rho.blocks.back().b + std::sqrt(last.p * last.q),
                 std::sqrt(last.p) + std::sqrt(last.q)) *
       std::sqrt(rho.p_last);
  for (std::size_t k = 0; k + 1 < eigs.size(); ++k) {
    const auto& e0 = eigs[k];
    const auto& e1 = eigs[k + 1];
    s += safe_frac((rho.blocks[k].b + std::sqrt(e0.p * e0.q)) *
                       (rho.blocks[k + 1].a + std::sqrt(e1.p * e1.q)),
                   (std::sqrt(e0.p) + std::sqrt(e0.q)) *
                       (std::sqrt(e1.p) + std::sqrt(e1.q)));
  }
  return clamp_unit(1.0 - 2.0 * s);
}

inline double branch_f1_unchecked(const AxialDensityMatrix& rho,
                                  const std::vector<BlockEigen>& eigs) {
  const auto& first = eigs.front();
  const auto& last = eigs.back();
  const double p0 = rho.p_first;
  const double pl = rho.p_last;
  double result =
      1.0 -
      4.0 * (safe_frac(p0 * (rho.blocks.front().a * p0 + first.p * first.q),
                       (p0 + first.p) * (p0 + first.q)) +
             safe_frac(pl * (rho.blocks.back().b * pl + last.p * last.q),
                       (last.p + pl) * (last.q + pl)));
  for (std::size_t k = 0; k + 1 < eigs.size(); ++k) {
    const auto& e0 = eigs[k];
    const auto& e1 = eigs[k + 1];
    const double ak1 = rho.blocks[k + 1].a;
    const double bk = rho.blocks[k].b;
    const double r0 = diag_ratio(rho.blocks[k], e0);
    const double r1 = diag_ratio(rho.blocks[k + 1], e1);
    result -= safe_frac(e0.q * (ak1 * e0.q + e1.p * e1.q),
                        (e0.q + e1.p) * (e0.q + e1.q)) *
              (1.0 + r0);
    result -= safe_frac(e0.p * (ak1 * e0.p + e1.p * e1.q),
                        (e0.p + e1.p) * (e0.p + e1.q)) *
              (1.0 - r0);
    result -= safe_frac(e1.p * (bk * e1.p + e0.p * e0.q),
                        (e0.p + e1.p) * (e0.q + e1.p)) *
              (1.0 + r1);
    result -= safe_frac(e1.q * (bk * e1.q + e0.p * e0.q),
                        (e0.p + e1.q) * (e0.q + e1.q)) *
              (1.0 - r1);
  }
  return clamp_unit(result);
}

}  // namespace detail

/// 0-branch of LQFI: 4 sum_k u_k^2 / (a_k + b_k).
inline double branch_f0(const AxialDensityMatrix& rho) {
  detail::require_valid(rho);
  return detail::branch_f0_unchecked(rho);
}

/// 0-branch of LQU: 4 sum_k u_k^2 / (a_k + b_k + 2 sqrt(a_k b_k - u_k^2)).
/// Never exceeds branch_f0 (the denominators only grow).
inline double branch_u0(const AxialDensityMatrix& rho) {
  detail::require_valid(rho);
  return detail::branch_u0_unchecked(rho);
}

/// 1-branch of LQU: 1 - W_xx written through block eigen-data, coupling each
/// block to its neighbors and the two edge weights.
inline double branch_u1(const AxialDensityMatrix& rho) {
  detail::require_valid(rho);
  return detail::branch_u1_unchecked(rho, detail::all_block_eigs(rho));
}

/// 1-branch of LQFI in the partial-fraction form (the expanded polynomial
/// form is branch_f1_expanded; the two agree to ~1e-12 and are cross-checked
/// in the verification suite).
inline double branch_f1(const AxialDensityMatrix& rho) {
  detail::require_valid(rho);
  return detail::branch_f1_unchecked(rho, detail::all_block_eigs(rho));
}

/// 1-branch of LQFI with the pair denominators multiplied through; kept as
/// an independent numerical route to the same quantity on full-rank states.
/// The lumped fraction turns 0/0 with a finite limit when block eigenvalues
/// vanish (T = 0 states); use branch_f1, whose partial-fraction terms carry
/// well-defined limits, anywhere near rank deficiency.
inline double branch_f1_expanded(const AxialDensityMatrix& rho) {
  detail::require_valid(rho);
  const auto eigs = detail::all_block_eigs(rho);
  const auto& first = eigs.front();
  const auto& last = eigs.back();
  const double p0 = rho.p_first;
  const double pl = rho.p_last;
  double result =
      1.0 -
      4.0 * (detail::safe_frac(
                 p0 * (rho.blocks.front().a * p0 + first.p * first.q),
                 (p0 + first.p) * (p0 + first.q)) +
             detail::safe_frac(
                 pl * (rho.blocks.back().b * pl + last.p * last.q),
                 (last.p + pl) * (last.q + pl)));
  for (std::size_t k = 0; k + 1 < eigs.size(); ++k) {
    const auto& e0 = eigs[k];
    const auto& e1 = eigs[k + 1];
    const double a0 = rho.blocks[k].a, b0 = rho.blocks[k].b;
    const double a1 = rho.blocks[k + 1].a, b1 = rho.blocks[k + 1].b;
    const double u2 = rho.blocks[k].u * rho.blocks[k].u;
    const double v2 = rho.blocks[k + 1].u * rho.blocks[k + 1].u;
    const double num =
        a1 * b0 * (a0 + a1) * (b0 + b1) * (a0 + b1) -
        a1 * u2 * (b1 * b1 + b0 * (2.0 * a0 + a1) + b1 * (a0 + b0)) -
        b0 * v2 * (a0 * a0 + a1 * (b0 + 2.0 * b1) + a0 * (a1 + b1)) +
        (a0 + b1) * u2 * v2 + a1 * u2 * u2 + b0 * v2 * v2;
    const double den =
        (e0.p + e1.p) * (e0.p + e1.q) * (e0.q + e1.p) * (e0.q + e1.q);
    result -= 4.0 * detail::safe_frac(num, den);
  }
  return detail::clamp_unit(result);
}

/// All four branches plus the branch minima. Ties report the 0-branch.
inline CorrelationResult correlations(const AxialDensityMatrix& rho) {
  detail::require_valid(rho);
  const auto eigs = detail::all_block_eigs(rho);
  CorrelationResult r{};
  r.f0 = detail::branch_f0_unchecked(rho);
  r.f1 = detail::branch_f1_unchecked(rho, eigs);
  r.u0 = detail::branch_u0_unchecked(rho);
  r.u1 = detail::branch_u1_unchecked(rho, eigs);
  r.f = std::min(r.f0, r.f1);
  r.u = std::min(r.u0, r.u1);
  r.active_branch_f = r.f0 <= r.f1 ? Branch::zero : Branch::one;
  r.active_branch_u = r.u0 <= r.u1 ? Branch::zero : Branch::one;
  return r;
}

// Diagonal entries of the two 3x3 correlation matrices, assembled from block
// eigen-data. The branches above are 1 minus these; the dense oracle computes
// the same entries from the full matrix, giving an independent route.

inline double fisher_matrix_zz(const AxialDensityMatrix& rho) {
  detail::require_valid(rho);
  double s = rho.p_first + rho.p_last;
  for (const auto& blk : rho.blocks) {
    const auto e = block_eigs(blk.a, blk.b, blk.u);
    const double diff = e.kappa2 - e.usq;
    s += (e.p + e.q) * diff * diff +
         16.0 * detail::safe_frac(e.p * e.q, e.p + e.q) * e.kappa2 * e.usq;
  }
  return s;
}

inline double fisher_matrix_xx(const AxialDensityMatrix& rho) {
  detail::require_valid(rho);
  const auto eigs = detail::all_block_eigs(rho);
  const auto& first = eigs.front();
  const auto& last = eigs.back();
  double s = detail::safe_frac(rho.p_first * first.p, rho.p_first + first.p) *
                 first.kappa2 +
             detail::safe_frac(rho.p_first * first.q, rho.p_first + first.q) *
                 first.usq;
  s += detail::safe_frac(last.q * rho.p_last, last.q + rho.p_last) *
           last.kappa2 +
       detail::safe_frac(last.p * rho.p_last, last.p + rho.p_last) * last.usq;
  for (std::size_t k = 0; k + 1 < eigs.size(); ++k) {
    const auto& e0 = eigs[k];
    const auto& e1 = eigs[k + 1];
    s += detail::safe_frac(e0.q * e1.p, e0.q + e1.p) * e0.kappa2 * e1.kappa2 +
         detail::safe_frac(e0.q * e1.q, e0.q + e1.q) * e0.kappa2 * e1.usq +
         detail::safe_frac(e0.p * e1.p, e0.p + e1.p) * e0.usq * e1.kappa2 +
         detail::safe_frac(e0.p * e1.q, e0.p + e1.q) * e0.usq * e1.usq;
  }
  return 4.0 * s;
}

inline double skew_matrix_zz(const AxialDensityMatrix& rho) {
  detail::require_valid(rho);
  double s = rho.p_first + rho.p_last;
  for (const auto& blk : rho.blocks) {
    const auto e = block_eigs(blk.a, blk.b, blk.u);
    const double diff = e.kappa2 - e.usq;
    s += (e.p + e.q) * diff * diff +
         8.0 * e.kappa2 * e.usq * std::sqrt(e.p * e.q);
  }
  return s;
}

inline double skew_matrix_xx(const AxialDensityMatrix& rho) {
  detail::require_valid(rho);
  const auto eigs = detail::all_block_eigs(rho);
  const auto& first = eigs.front();
  const auto& last = eigs.back();
  double s = first.kappa2 * std::sqrt(rho.p_first * first.p) +
             first.usq * std::sqrt(rho.p_first * first.q);
  s += last.kappa2 * std::sqrt(last.q * rho.p_last) +
       last.usq * std::sqrt(last.p * rho.p_last);
  for (std::size_t k = 0; k + 1 < eigs.size(); ++k) {
    const auto& e0 = eigs[k];
    const auto& e1 = eigs[k + 1];
    s += (e0.kappa2 * std::sqrt(e0.q) + e0.usq * std::sqrt(e0.p)) *
         (e1.kappa2 * std::sqrt(e1.p) + e1.usq * std::sqrt(e1.q));
  }
  return 2.0 * s;
}

}  // namespace axialq
