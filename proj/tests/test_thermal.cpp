#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "axialq/models.hpp"
#include "axialq/oracle.hpp"
#include "axialq/thermal.hpp"

using Catch::Approx;
using namespace axialq;

TEST_CASE("partition_function", "[thermal]") {
  SECTION("infinite-temperature limit counts the dimension") {
    for (int two_j : {1, 2, 7}) {
      const auto h = xxz_hamiltonian(SpinJ(two_j), 1.0, 0.8);
      const auto pf = partition_function(h, Temperature(1e9));
      REQUIRE(pf.z() ==
              Approx(2.0 * (two_j + 1)).epsilon(1e-6));
    }
  }
  SECTION("reference value at j=1/2, T=1") {
    const auto h = xxx_hamiltonian(SpinJ(1), 1.0);
    const auto pf = partition_function(h, Temperature(1.0));
    REQUIRE(pf.z() == Approx(4.6252093944911575).margin(1e-13));
  }
  SECTION("even in the transverse coupling, bit for bit") {
    const auto hp = xxz_hamiltonian(SpinJ(5), 0.7, 1.3);
    const auto hm = xxz_hamiltonian(SpinJ(5), 0.7, -1.3);
    for (double t : {0.05, 1.0, 30.0}) {
      const auto a = partition_function(hp, Temperature(t));
      const auto b = partition_function(hm, Temperature(t));
      REQUIRE(a.log_z == b.log_z);
      REQUIRE(a.z_shifted == b.z_shifted);
    }
  }
  SECTION("nonpositive temperature is rejected") {
    const auto h = xxx_hamiltonian(SpinJ(1), 1.0);
    REQUIRE_THROWS_AS(partition_function(h, Temperature(0.0)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(partition_function(h, Temperature(-1.0)),
                      std::invalid_argument);
  }
  SECTION("no overflow deep in the ordered phase") {
    const auto h = xxx_hamiltonian(SpinJ(1), 1.0);
    const auto pf = partition_function(h, Temperature(1e-4));
    REQUIRE(std::isfinite(pf.log_z));
    REQUIRE(std::isfinite(pf.z_shifted));
  }
}

TEST_CASE("gibbs_state", "[thermal]") {
  SECTION("diagonal Hamiltonian gives a diagonal state") {
    const SpinJ spin(2);
    AxialHamiltonian h(spin, 0.3, 0.3, {{0.1, 0.1, 0.0}, {-0.2, -0.2, 0.0}});
    const auto rho = gibbs_state(h, Temperature(0.7));
    for (const auto& blk : rho.blocks) {
      REQUIRE(blk.u == 0.0);
      REQUIRE(blk.a == blk.b);
    }
  }
  SECTION("reference entries at j=1, T=0.5") {
    const auto rho = gibbs_state(xxx_hamiltonian(SpinJ(2), 1.0),
                                 Temperature(0.5));
    REQUIRE(rho.blocks[0].a == Approx(0.28498746178471587).margin(1e-14));
    REQUIRE(rho.blocks[0].b == Approx(0.16666666666666667).margin(1e-14));
    REQUIRE(std::abs(rho.blocks[0].u) ==
            Approx(0.16733087316671347).margin(1e-14));
    REQUIRE(rho.blocks[1].a == Approx(0.16666666666666667).margin(1e-14));
    REQUIRE(rho.blocks[1].b == Approx(0.28498746178471587).margin(1e-14));
    REQUIRE(std::abs(rho.blocks[1].u) ==
            Approx(0.16733087316671347).margin(1e-14));
    // antiferromagnetic coupling: positive g forces negative coherence
    REQUIRE(rho.blocks[0].u < 0.0);
  }
  SECTION("matches the dense matrix exponential") {
    std::mt19937_64 gen(321);
    std::uniform_real_distribution<double> dist(-1.2, 1.2);
    for (int two_j : {1, 3, 6, 8}) {
      const SpinJ spin(two_j);
      const auto h = xxz_field_hamiltonian(spin, dist(gen), dist(gen),
                                           dist(gen), dist(gen));
      const Temperature t(0.3 + std::abs(dist(gen)));
      const auto dense = oracle::dense_gibbs(oracle::expand(h), t);
      const auto block_form = oracle::expand(gibbs_state(h, t));
      for (std::size_t i = 0; i < dense.a.size(); ++i) {
        REQUIRE(dense.a[i] == Approx(block_form.a[i]).margin(1e-10));
      }
    }
  }
  SECTION("block eigenvalues equal the Boltzmann weights") {
    const auto h = xxz_hamiltonian(SpinJ(4), 0.8, 1.1);
    const Temperature t(0.4);
    const auto rho = gibbs_state(h, t);
    const auto pf = partition_function(h, t);
    for (int k = 0; k < 4; ++k) {
      const auto s = block_spectrum(h.blocks[k].h, h.blocks[k].h_prime,
                                    h.blocks[k].g);
      const auto e = block_eigs(rho.blocks[k].a, rho.blocks[k].b,
                                rho.blocks[k].u);
      REQUIRE(e.p == Approx(std::exp(-(s.e_minus - pf.e_min) / t.t) /
                            pf.z_shifted)
                         .margin(1e-10));
      REQUIRE(e.q == Approx(std::exp(-(s.e_plus - pf.e_min) / t.t) /
                            pf.z_shifted)
                         .margin(1e-10));
    }
  }
  SECTION("unit trace and validity across the temperature range") {
    for (int two_j : {1, 9, 20, 40}) {
      const auto h = xxz_hamiltonian(SpinJ(two_j), -0.9, 1.2);
      for (double t : {1e-3, 0.05, 1.0, 1e4}) {
        const auto rho = gibbs_state(h, Temperature(t));
        REQUIRE(rho.trace() == Approx(1.0).margin(1e-12));
        REQUIRE(validate_density(rho).ok());
      }
    }
  }
}

TEST_CASE("ground_state", "[thermal]") {
  SECTION("antiferromagnetic j=1/2 ground state is the singlet") {
    const auto gs = ground_state(xxx_hamiltonian(SpinJ(1), 2.0));
    REQUIRE(gs.degeneracy == 1);
    REQUIRE(gs.state.p_first == 0.0);
    REQUIRE(gs.state.p_last == 0.0);
    REQUIRE(gs.state.blocks[0].a == Approx(0.5).margin(1e-15));
    REQUIRE(gs.state.blocks[0].b == Approx(0.5).margin(1e-15));
    REQUIRE(gs.state.blocks[0].u == Approx(-0.5).margin(1e-15));
  }
  SECTION("ferromagnetic j=1 ground manifold includes the edges") {
    const auto gs = ground_state(xxx_hamiltonian(SpinJ(2), -1.0));
    REQUIRE(gs.degeneracy == 4);  // 2(j+1)
    REQUIRE(gs.state.p_first == Approx(0.25).margin(1e-15));
    REQUIRE(gs.state.p_last == Approx(0.25).margin(1e-15));
    REQUIRE(gs.state.blocks[0].a == Approx(1.0 / 12).margin(1e-15));
    REQUIRE(gs.state.blocks[1].a == Approx(2.0 / 12).margin(1e-15));
    // ferromagnetic coupling: negative g forces positive coherence
    REQUIRE(gs.state.blocks[0].u > 0.0);
  }
  SECTION("agrees with a sufficiently cold Gibbs state") {
    for (auto h : {xxz_hamiltonian(SpinJ(3), 1.0, 1.1),
                   xxz_field_hamiltonian(SpinJ(4), -0.6, 0.9, 0.25, -0.1)}) {
      const auto gs = ground_state(h);
      REQUIRE(gs.gap > 0.0);
      const auto cold = gibbs_state(h, Temperature(1e-6 * gs.gap));
      REQUIRE(cold.p_first == Approx(gs.state.p_first).margin(1e-4));
      REQUIRE(cold.p_last == Approx(gs.state.p_last).margin(1e-4));
      for (int k = 0; k < h.spin.twice_j(); ++k) {
        REQUIRE(cold.blocks[k].a == Approx(gs.state.blocks[k].a).margin(1e-4));
        REQUIRE(cold.blocks[k].b == Approx(gs.state.blocks[k].b).margin(1e-4));
        REQUIRE(cold.blocks[k].u == Approx(gs.state.blocks[k].u).margin(1e-4));
      }
    }
  }
  SECTION("zero Hamiltonian collapses to the maximally mixed state") {
    const auto gs = ground_state(xxx_hamiltonian(SpinJ(2), 0.0));
    REQUIRE(gs.degeneracy == 6);
    REQUIRE(gs.gap == 0.0);
    REQUIRE(gs.state.p_first == Approx(1.0 / 6).margin(1e-15));
    for (const auto& blk : gs.state.blocks) {
      REQUIRE(blk.a == Approx(1.0 / 6).margin(1e-15));
      REQUIRE(blk.u == 0.0);
    }
  }
  SECTION("ground state is always a valid density matrix") {
    std::mt19937_64 gen(555);
    std::uniform_real_distribution<double> dist(-1.5, 1.5);
    for (int i = 0; i < 40; ++i) {
      const SpinJ spin(1 + i % 6);
      const auto h = xxz_field_hamiltonian(spin, dist(gen), dist(gen),
                                           dist(gen), dist(gen));
      const auto gs = ground_state(h);
      REQUIRE(validate_density(gs.state).ok());
      REQUIRE(gs.state.trace() == Approx(1.0).margin(1e-12));
    }
  }
}
