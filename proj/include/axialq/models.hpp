#pragma once

// Builders for the concrete spin-(j,1/2) interactions studied here, plus the
// Brillouin/Langevin paramagnet functions.

#include <cmath>
#include <variant>
#include <vector>

#include "axialq/axial_core.hpp"

namespace axialq {

/// Isotropic exchange J0 * S.sigma. With normalized=true the coupling is
/// divided by 2*sqrt(j(j+1)) so that S is rescaled to unit length; with
/// normalized=false the matrix is J0 * S.sigma as is.
inline AxialHamiltonian xxx_hamiltonian(SpinJ spin, double j0,
                                        bool normalized = true) {
  detail::require_finite(j0, "xxx_hamiltonian j0");
  const double j = spin.j();
  const double c = normalized ? j0 / (2.0 * std::sqrt(j * (j + 1.0))) : j0;
  const int twoj = spin.twice_j();
  std::vector<HamiltonianBlock> blocks;
  blocks.reserve(twoj);
  for (int k = 1; k <= twoj; ++k) {
    blocks.push_back({c * (-j + k - 1), c * (j - k),
                      c * std::sqrt(double(k) * (twoj - k + 1))});
  }
  return AxialHamiltonian(spin, c * j, c * j, std::move(blocks));
}

/// Anisotropic exchange Jz * Sz sigma_z + J * (Sx sigma_x + Sy sigma_y).
inline AxialHamiltonian xxz_hamiltonian(SpinJ spin, double jz, double jxy) {
  detail::require_finite(jz, "xxz_hamiltonian jz");
  detail::require_finite(jxy, "xxz_hamiltonian jxy");
  const double j = spin.j();
  const int twoj = spin.twice_j();
  std::vector<HamiltonianBlock> blocks;
  blocks.reserve(twoj);
  for (int k = 1; k <= twoj; ++k) {
    blocks.push_back({(-j + k - 1) * jz, (j - k) * jz,
                      jxy * std::sqrt(double(k) * (twoj - k + 1))});
  }
  return AxialHamiltonian(spin, j * jz, j * jz, std::move(blocks));
}

/// XXZ exchange plus non-uniform longitudinal fields B1 * Sz + B2 * sigma_z.
inline AxialHamiltonian xxz_field_hamiltonian(SpinJ spin, double jz, double jxy,
                                              double b1, double b2) {
  detail::require_finite(jz, "xxz_field_hamiltonian jz");
  detail::require_finite(jxy, "xxz_field_hamiltonian jxy");
  detail::require_finite(b1, "xxz_field_hamiltonian b1");
  detail::require_finite(b2, "xxz_field_hamiltonian b2");
  const double j = spin.j();
  const int twoj = spin.twice_j();
  std::vector<HamiltonianBlock> blocks;
  blocks.reserve(twoj);
  for (int k = 1; k <= twoj; ++k) {
    blocks.push_back({(-j + k - 1) * (jz - b1) - b2, (j - k) * (jz + b1) + b2,
                      jxy * std::sqrt(double(k) * (twoj - k + 1))});
  }
  return AxialHamiltonian(spin, j * (jz + b1) + b2, j * (jz - b1) - b2,
                          std::move(blocks));
}

struct XxxParams {
  double j0;
  bool normalized = true;
};
struct XxzParams {
  double jz;
  double jxy;
};
struct XxzFieldParams {
  double jz;
  double jxy;
  double b1;
  double b2;
};

using ModelParams = std::variant<XxxParams, XxzParams, XxzFieldParams>;

inline AxialHamiltonian build_hamiltonian(const ModelParams& params,
                                          SpinJ spin) {
  return std::visit(
      [&](const auto& p) -> AxialHamiltonian {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, XxxParams>) {
          return xxx_hamiltonian(spin, p.j0, p.normalized);
        } else if constexpr (std::is_same_v<T, XxzParams>) {
          return xxz_hamiltonian(spin, p.jz, p.jxy);
        } else {
          return xxz_field_hamiltonian(spin, p.jz, p.jxy, p.b1, p.b2);
        }
      },
      params);
}

namespace detail {

/// coth(x) - 1/x with the removable singularity at 0 handled by series.
inline double cothm(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return x * (1.0 / 3.0 - x2 * (1.0 / 45.0 - x2 * (2.0 / 945.0)));
  }
  return 1.0 / std::tanh(x) - 1.0 / x;
}

}  // namespace detail

/// Langevin function L(x) = coth(x) - 1/x, the classical-spin magnetization
/// curve; odd, monotone, |L| < 1, L(0) = 0.
inline double langevin(double x) {
  detail::require_finite(x, "langevin x");
  return detail::cothm(x);
}

/// Brillouin function B_j(x). The two 1/x poles of the coth terms cancel,
/// so each is evaluated through the pole-free coth(x)-1/x form.
inline double brillouin(SpinJ spin, double x) {
  detail::require_finite(x, "brillouin x");
  const double twoj = spin.twice_j();
  const double ca = (twoj + 1.0) / twoj;
  const double cb = 1.0 / twoj;
  return ca * detail::cothm(ca * x) - cb * detail::cothm(cb * x);
}

}  // namespace axialq
