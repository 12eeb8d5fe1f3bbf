#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "axialq/models.hpp"
#include "axialq/oracle.hpp"

using Catch::Approx;
using namespace axialq;

TEST_CASE("xxx_hamiltonian", "[models]") {
  SECTION("j=1/2 spectrum: two levels with degeneracies 3 and 1") {
    const auto h = xxx_hamiltonian(SpinJ(1), 1.0);
    const auto es = oracle::eigh(oracle::expand(h));
    const double e_upper = 0.28867513459481288;   // j J0 / (2 sqrt(j(j+1)))
    const double e_lower = -0.86602540378443865;  // -(j+1) J0 / (2 sqrt(j(j+1)))
    int upper = 0, lower = 0;
    for (double e : es.values) {
      if (std::abs(e - e_upper) < 1e-12) ++upper;
      if (std::abs(e - e_lower) < 1e-12) ++lower;
    }
    REQUIRE(upper == 3);
    REQUIRE(lower == 1);
  }
  SECTION("zero coupling gives the zero matrix") {
    const auto h = xxx_hamiltonian(SpinJ(3), 0.0);
    REQUIRE(h.e_first == 0.0);
    REQUIRE(h.e_last == 0.0);
    for (const auto& blk : h.blocks) {
      REQUIRE(blk.h == 0.0);
      REQUIRE(blk.h_prime == 0.0);
      REQUIRE(blk.g == 0.0);
    }
  }
  SECTION("j=1 normalized off-diagonal") {
    const auto h = xxx_hamiltonian(SpinJ(2), 1.0);
    REQUIRE(h.blocks[0].g == Approx(0.5).margin(1e-15));
  }
  SECTION("unnormalized drops the spin rescaling") {
    const auto h = xxx_hamiltonian(SpinJ(2), 1.0, false);
    REQUIRE(h.e_first == 1.0);
    REQUIRE(h.blocks[0].h == -1.0);
    REQUIRE(h.blocks[0].g == Approx(std::sqrt(2.0)).margin(1e-15));
  }
}

TEST_CASE("xxz_hamiltonian", "[models]") {
  SECTION("jxy = 0 is the Ising limit: no off-diagonal couplings") {
    const auto h = xxz_hamiltonian(SpinJ(5), 1.3, 0.0);
    for (const auto& blk : h.blocks) REQUIRE(blk.g == 0.0);
  }
  SECTION("j=1/2 block radius") {
    // h = h' = -Jz/2, g = J: the radius is 2J.
    const auto h = xxz_hamiltonian(SpinJ(1), 1.0, 0.9);
    REQUIRE(h.blocks[0].h == Approx(-0.5).margin(1e-15));
    REQUIRE(h.blocks[0].h_prime == Approx(-0.5).margin(1e-15));
    REQUIRE(h.blocks[0].g == Approx(0.9).margin(1e-15));
    const auto s = block_spectrum(h.blocks[0].h, h.blocks[0].h_prime,
                                  h.blocks[0].g);
    REQUIRE(s.r == Approx(1.8).margin(1e-15));
  }
  SECTION("isotropic point matches the unnormalized exchange matrix") {
    const auto a = xxz_hamiltonian(SpinJ(2), 1.0, 1.0);
    const auto b = xxx_hamiltonian(SpinJ(2), 1.0, false);
    REQUIRE(a.e_first == b.e_first);
    REQUIRE(a.e_last == b.e_last);
    REQUIRE(a.blocks[0].h_prime == 0.0);
    REQUIRE(a.blocks[0].g == Approx(std::sqrt(2.0)).margin(1e-15));
    for (int k = 0; k < 2; ++k) {
      REQUIRE(a.blocks[k].h == b.blocks[k].h);
      REQUIRE(a.blocks[k].h_prime == b.blocks[k].h_prime);
      REQUIRE(a.blocks[k].g == b.blocks[k].g);
    }
  }
}

TEST_CASE("xxz_field_hamiltonian", "[models]") {
  SECTION("field-free reduction") {
    const auto a = xxz_field_hamiltonian(SpinJ(3), 0.7, -1.1, 0.0, 0.0);
    const auto b = xxz_hamiltonian(SpinJ(3), 0.7, -1.1);
    REQUIRE(a.e_first == b.e_first);
    for (int k = 0; k < 3; ++k) {
      REQUIRE(a.blocks[k].h == b.blocks[k].h);
      REQUIRE(a.blocks[k].h_prime == b.blocks[k].h_prime);
      REQUIRE(a.blocks[k].g == b.blocks[k].g);
    }
  }
  SECTION("j=1/2 entries") {
    const auto h = xxz_field_hamiltonian(SpinJ(1), 1.0, 1.1, 0.2, 0.0);
    REQUIRE(h.e_first == Approx(0.6).margin(1e-15));
    REQUIRE(h.e_last == Approx(0.4).margin(1e-15));
    REQUIRE(h.blocks[0].h == Approx(-0.4).margin(1e-15));
    REQUIRE(h.blocks[0].h_prime == Approx(-0.6).margin(1e-15));
    REQUIRE(h.blocks[0].g == Approx(1.1).margin(1e-15));
    // the full operator is traceless
    const double tr = h.e_first + h.e_last + h.blocks[0].h + h.blocks[0].h_prime;
    REQUIRE(tr == Approx(0.0).margin(1e-15));
  }
  SECTION("field reversal is the spin-reversed image") {
    const SpinJ spin(4);
    const auto a = xxz_field_hamiltonian(spin, 0.9, 1.2, 0.3, -0.4);
    const auto b = xxz_field_hamiltonian(spin, 0.9, 1.2, -0.3, 0.4);
    REQUIRE(b.e_first == Approx(a.e_last).margin(1e-14));
    REQUIRE(b.e_last == Approx(a.e_first).margin(1e-14));
    const int twoj = spin.twice_j();
    for (int k = 1; k <= twoj; ++k) {
      const auto& fwd = b.blocks[k - 1];
      const auto& rev = a.blocks[twoj - k];  // index 2j+1-k
      REQUIRE(fwd.h == Approx(rev.h_prime).margin(1e-14));
      REQUIRE(fwd.h_prime == Approx(rev.h).margin(1e-14));
      REQUIRE(std::abs(fwd.g) == Approx(std::abs(rev.g)).margin(1e-14));
    }
  }
}

TEST_CASE("brillouin and langevin functions", "[models]") {
  SECTION("spin-1/2 reduces to tanh") {
    REQUIRE(brillouin(SpinJ(1), 1.0) ==
            Approx(0.76159415595576489).margin(1e-14));
    for (double x : {-2.0, -0.3, 0.01, 0.5, 3.0}) {
      REQUIRE(brillouin(SpinJ(1), x) == Approx(std::tanh(x)).margin(1e-13));
    }
  }
  SECTION("odd functions vanishing at zero") {
    REQUIRE(brillouin(SpinJ(5), 0.0) == 0.0);
    REQUIRE(langevin(0.0) == 0.0);
    for (double x : {0.1, 1.0, 7.0}) {
      REQUIRE(brillouin(SpinJ(5), -x) ==
              Approx(-brillouin(SpinJ(5), x)).margin(1e-14));
      REQUIRE(langevin(-x) == Approx(-langevin(x)).margin(1e-14));
    }
  }
  SECTION("large-spin limit approaches the Langevin function") {
    REQUIRE(langevin(1.0) == Approx(0.31303528549933130).margin(1e-14));
    REQUIRE(std::abs(brillouin(SpinJ(2000), 1.0) - langevin(1.0)) < 1e-3);
  }
  SECTION("monotone increasing and bounded by one") {
    double prev_b = -1.0, prev_l = -1.0;
    for (int i = 0; i <= 100; ++i) {
      const double x = -10.0 + 0.2 * i;
      const double b = brillouin(SpinJ(4), x);
      const double l = langevin(x);
      REQUIRE(std::abs(b) < 1.0);
      REQUIRE(std::abs(l) < 1.0);
      REQUIRE(b > prev_b);
      REQUIRE(l > prev_l);
      prev_b = b;
      prev_l = l;
    }
  }
}
