#pragma once

// Partition function, Gibbs state, and the zero-temperature limit for any
// axially symmetric Hamiltonian.
//
// All Boltzmann factors are formed with exponents shifted by the ground
// energy: exp((2j+1)J0 / (2T sqrt(j(j+1)))) alone overflows a double below
// T ~ 0.002 at j=1/2, so ratios like w/Z must never materialize unshifted.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "axialq/axial_core.hpp"

namespace axialq {

/// Temperature in the energy units of the Hamiltonian. Gibbs operations
/// require t > 0; the t = 0 case is served by ground_state.
struct Temperature {
  double t;
  explicit Temperature(double value) : t(value) {}
};

namespace detail {

inline void require_positive_temperature(Temperature t) {
  if (!(t.t > 0.0) || !std::isfinite(t.t)) {
    throw std::invalid_argument("temperature must be positive and finite");
  }
}

/// All 4j+2 level energies in slot order: e_first, (e_minus, e_plus) per
/// block, e_last.
inline std::vector<double> level_energies(const AxialHamiltonian& h) {
  std::vector<double> e;
  e.reserve(h.spin.hilbert_dim());
  e.push_back(h.e_first);
  for (const auto& blk : h.blocks) {
    const auto s = block_spectrum(blk.h, blk.h_prime, blk.g);
    e.push_back(s.e_minus);
    e.push_back(s.e_plus);
  }
  e.push_back(h.e_last);
  return e;
}

}  // namespace detail

/// Partition function in shifted form: z_shifted = Z * exp(e_min / T), so
/// log_z = log(z_shifted) - e_min / T is the overflow-free log of the true Z.
struct PartitionFunction {
  double log_z;
  double z_shifted;
  double e_min;

  double z() const { return std::exp(log_z); }
};

inline PartitionFunction partition_function(const AxialHamiltonian& h,
                                            Temperature t) {
  detail::require_positive_temperature(t);
  const auto energies = detail::level_energies(h);
  const double e_min = *std::min_element(energies.begin(), energies.end());
  double zs = 0.0;
  for (double e : energies) zs += std::exp(-(e - e_min) / t.t);
  return PartitionFunction{-e_min / t.t + std::log(zs), zs, e_min};
}

/// Thermal state exp(-H/T)/Z in block form. Passes validate_density at
/// tol 1e-9 by construction.
inline AxialDensityMatrix gibbs_state(const AxialHamiltonian& h,
                                      Temperature t) {
  detail::require_positive_temperature(t);
  const auto pf = partition_function(h, t);
  const auto weight = [&](double e) {
    return std::exp(-(e - pf.e_min) / t.t);
  };
  std::vector<StateBlock> blocks;
  blocks.reserve(h.blocks.size());
  for (const auto& blk : h.blocks) {
    const auto s = block_spectrum(blk.h, blk.h_prime, blk.g);
    const double wm = weight(s.e_minus);
    // wm - wp without cancellation when r/T is small.
    const double diff = wm * -std::expm1(-s.r / t.t);
    const double sum = wm + weight(s.e_plus);
    if (s.r > 0.0) {
      const double delta = (blk.h_prime - blk.h) / s.r;
      blocks.push_back({0.5 * (sum + delta * diff) / pf.z_shifted,
                        0.5 * (sum - delta * diff) / pf.z_shifted,
                        -(blk.g / s.r) * diff / pf.z_shifted});
    } else {
      // r = 0 forces h = h', g = 0: the block is already diagonal.
      blocks.push_back({0.5 * sum / pf.z_shifted, 0.5 * sum / pf.z_shifted,
                        0.0});
    }
  }
  return AxialDensityMatrix(h.spin, weight(h.e_first) / pf.z_shifted,
                            weight(h.e_last) / pf.z_shifted,
                            std::move(blocks));
}

/// T -> 0 limit of gibbs_state: the maximally mixed state on the ground
/// manifold, with the manifold's degeneracy and the gap to the first
/// excited level reported alongside.
struct GroundState {
  AxialDensityMatrix state;
  int degeneracy;
  double energy;
  double gap;  // 0 when every level belongs to the ground manifold
};

inline GroundState ground_state(const AxialHamiltonian& h,
                                double tie_tol = 1e-12) {
  const auto energies = detail::level_energies(h);
  const double e_min = *std::min_element(energies.begin(), energies.end());
  const double cutoff = e_min + tie_tol * (1.0 + std::abs(e_min));
  int degeneracy = 0;
  double gap = 0.0;
  bool has_gap = false;
  for (double e : energies) {
    if (e <= cutoff) {
      ++degeneracy;
    } else if (!has_gap || e - e_min < gap) {
      gap = e - e_min;
      has_gap = true;
    }
  }
  const double w = 1.0 / degeneracy;

  double p_first = h.e_first <= cutoff ? w : 0.0;
  double p_last = h.e_last <= cutoff ? w : 0.0;
  std::vector<StateBlock> blocks;
  blocks.reserve(h.blocks.size());
  for (const auto& blk : h.blocks) {
    const auto s = block_spectrum(blk.h, blk.h_prime, blk.g);
    const bool lower = s.e_minus <= cutoff;
    const bool upper = s.e_plus <= cutoff;
    StateBlock out{0.0, 0.0, 0.0};
    if (lower && upper) {
      // Both projectors contribute; their sum is the 2x2 identity.
      out = {w, w, 0.0};
    } else if (lower || upper) {
      if (s.r > 0.0) {
        // Eigenvector of the selected level: (x, y) up to normalization.
        const double x =
            lower ? 0.5 * (blk.h_prime - blk.h + s.r) : 0.5 * (blk.h - blk.h_prime + s.r);
        const double y = lower ? -blk.g : blk.g;
        const double n2 = x * x + y * y;
        out = {w * x * x / n2, w * y * y / n2, w * x * y / n2};
      } else {
        out = lower ? StateBlock{w, 0.0, 0.0} : StateBlock{0.0, w, 0.0};
      }
    }
    blocks.push_back(out);
  }
  return GroundState{
      AxialDensityMatrix(h.spin, p_first, p_last, std::move(blocks)),
      degeneracy, e_min, gap};
}

}  // namespace axialq
