#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "axialq/correlations.hpp"
#include "axialq/models.hpp"
#include "axialq/su2.hpp"
#include "axialq/thermal.hpp"

using Catch::Approx;
using namespace axialq;

TEST_CASE("thermal F parameter", "[su2]") {
  SECTION("infinite temperature sits at the critical point") {
    for (int two_j : {1, 2, 4, 105}) {
      const auto s = su2_f_from_thermal(SpinJ(two_j), 1.0, Temperature(1e12));
      REQUIRE(s.f_param() == Approx(s.f_critical()).margin(1e-9));
    }
  }
  SECTION("zero-temperature limits by coupling sign") {
    const auto af = su2_f_from_thermal(SpinJ(3), 1.0, Temperature(1e-6));
    REQUIRE(af.f_param() == Approx(1.0).margin(1e-12));
    REQUIRE(af.one_minus_f() == Approx(0.0).margin(1e-12));
    const auto fe = su2_f_from_thermal(SpinJ(3), -1.0, Temperature(1e-6));
    REQUIRE(fe.f_param() == Approx(0.0).margin(1e-12));
  }
  SECTION("guards") {
    REQUIRE_THROWS_AS(su2_f_from_thermal(SpinJ(1), 1.0, Temperature(0.0)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(SU2State(SpinJ(1), 1.5), std::invalid_argument);
  }
}

TEST_CASE("negativity", "[su2]") {
  SECTION("vanishes below the separability threshold") {
    for (int two_j : {1, 2, 5}) {
      const SpinJ spin(two_j);
      const double fth = two_j / (two_j + 1.0);
      REQUIRE(negativity(SU2State(spin, 0.5 * fth)) == 0.0);
      REQUIRE(negativity(SU2State(spin, fth)) == 0.0);
    }
  }
  SECTION("maximal at F = 1") {
    REQUIRE(negativity(SU2State(SpinJ(1), 1.0)) == Approx(1.0).margin(1e-15));
    REQUIRE(negativity(SU2State(SpinJ(4), 1.0)) ==
            Approx(2.0 / 5.0).margin(1e-15));
  }
}

TEST_CASE("entanglement of formation", "[su2]") {
  SECTION("threshold and maximal values") {
    const SpinJ spin(4);
    REQUIRE(eof(SU2State(spin, 4.0 / 5.0)) == 0.0);
    REQUIRE(eof(SU2State(spin, 1.0, 0.0)) ==
            Approx(0.72192809488736235).margin(1e-14));  // h(1/5)
    REQUIRE(eof(SU2State(SpinJ(1), 1.0, 0.0)) == Approx(1.0).margin(1e-14));
  }
  SECTION("binary entropy endpoints") {
    REQUIRE(binary_entropy(0.0) == 0.0);
    REQUIRE(binary_entropy(1.0) == 0.0);
    REQUIRE(binary_entropy(0.5) == Approx(1.0).margin(1e-15));
  }
}

TEST_CASE("discord", "[su2]") {
  SECTION("eigenvalue list sums to one for both parities") {
    for (int two_j : {1, 2, 3, 4, 41, 100}) {
      for (double f : {0.0, 0.3, 0.999, 1.0}) {
        const auto lams = discord_spectrum(SU2State(SpinJ(two_j), f));
        REQUIRE(lams.size() == static_cast<std::size_t>(two_j + 1));
        double sum = 0.0;
        for (double l : lams) {
          REQUIRE(l >= 0.0);
          sum += l;
        }
        REQUIRE(sum == Approx(1.0).margin(1e-12));
      }
    }
  }
  SECTION("zero at the critical point") {
    for (int two_j : {1, 2, 7, 100}) {
      const SpinJ spin(two_j);
      REQUIRE(std::abs(discord(SU2State(spin, SU2State(spin, 0.0).f_critical()))) <
              1e-12);
    }
  }
  SECTION("Bell-state value at j=1/2") {
    REQUIRE(discord(SU2State(SpinJ(1), 1.0, 0.0)) == Approx(1.0).margin(1e-12));
    REQUIRE(discord(SU2State(SpinJ(1), 0.0, 1.0)) ==
            Approx(1.0 / 3.0).margin(1e-12));
  }
  SECTION("large-spin plateau") {
    REQUIRE(discord(SU2State(SpinJ(10000), 1.0, 0.0)) ==
            Approx(0.7213).margin(5e-3));
  }
  SECTION("split-level summation oscillates, integer spins on top") {
    const double q_j1 = discord(SU2State(SpinJ(2), 1.0, 0.0), false);
    const double q_jhalf = discord(SU2State(SpinJ(1), 1.0, 0.0), false);
    const double q_j3half = discord(SU2State(SpinJ(3), 1.0, 0.0), false);
    REQUIRE(q_j1 > q_jhalf);
    REQUIRE(q_j1 > q_j3half);
    // half-integer values agree between the two conventions
    REQUIRE(q_jhalf == discord(SU2State(SpinJ(1), 1.0, 0.0)));
    REQUIRE(q_j3half == discord(SU2State(SpinJ(3), 1.0, 0.0)));
  }
}

TEST_CASE("family measures at reference points", "[su2]") {
  SECTION("both vanish quadratically at the critical point") {
    for (int two_j : {1, 2, 9}) {
      const SpinJ spin(two_j);
      const SU2State s(spin, SU2State(spin, 0.0).f_critical());
      REQUIRE(std::abs(lqu_su2(s)) < 1e-15);
      REQUIRE(std::abs(lqfi_su2(s)) < 1e-15);
    }
  }
  SECTION("table values") {
    REQUIRE(lqu_su2(SU2State(SpinJ(1), 1.0, 0.0)) == Approx(1.0).margin(1e-14));
    REQUIRE(lqu_su2(SU2State(SpinJ(2), 0.0, 1.0)) ==
            Approx(4.0 / 9.0).margin(1e-14));
    REQUIRE(lqfi_su2(SU2State(SpinJ(105), 0.0, 1.0)) ==
            Approx(0.66037735849056604).margin(1e-14));
    // F = 1: (4/3)(j+1)/(2j+1)
    REQUIRE(lqfi_su2(SU2State(SpinJ(3), 1.0, 0.0)) ==
            Approx(5.0 / 6.0).margin(1e-14));
  }
}

TEST_CASE("closed thermal forms", "[su2]") {
  SECTION("vanish at infinite temperature") {
    const auto c = xxx_correlations_closed(SpinJ(2), 1.0, Temperature(1e12));
    REQUIRE(std::abs(c.f) < 1e-20);
    REQUIRE(std::abs(c.u) < 1e-20);
  }
  SECTION("reach the ground-state plateau") {
    const auto c = xxx_correlations_closed(SpinJ(3), 1.0, Temperature(1e-4));
    REQUIRE(c.f == Approx(5.0 / 6.0).margin(1e-12));
    REQUIRE(c.u == Approx(5.0 / 6.0).margin(1e-12));
  }
  SECTION("equal the branch route through the Gibbs state") {
    for (int two_j : {1, 2, 5, 11}) {
      for (double j0 : {1.0, -0.8}) {
        const auto h = xxx_hamiltonian(SpinJ(two_j), j0);
        for (double t : {0.05, 0.4, 3.0, 40.0}) {
          const auto closed =
              xxx_correlations_closed(SpinJ(two_j), j0, Temperature(t));
          const auto c = correlations(gibbs_state(h, Temperature(t)));
          REQUIRE(closed.f == Approx(c.f).margin(1e-10));
          REQUIRE(closed.u == Approx(c.u).margin(1e-10));
        }
      }
    }
  }
  SECTION("reference thermal value at j=1, T=1") {
    const auto c = xxx_correlations_closed(SpinJ(2), 1.0, Temperature(1.0));
    REQUIRE(c.f == Approx(0.16675002621461443).margin(1e-15));
    REQUIRE(c.u == Approx(0.088973084446340247).margin(1e-15));
  }
  SECTION("guards") {
    REQUIRE_THROWS_AS(xxx_correlations_closed(SpinJ(1), 1.0, Temperature(-2.0)),
                      std::invalid_argument);
  }
}

TEST_CASE("threshold temperature", "[su2]") {
  SECTION("reference values") {
    REQUIRE(threshold_temperature(SpinJ(1), 1.0) ==
            Approx(1.0510537250399227).margin(1e-14));  // 2/(sqrt(3) ln 3)
    REQUIRE(threshold_temperature(SpinJ(2), 1.0) ==
            Approx(0.76510458494759211).margin(1e-14));  // 3/(2 sqrt(2) ln 4)
    REQUIRE(threshold_temperature(SpinJ(1), 1.0, false) ==
            Approx(2.0 / (2.0 * std::log(3.0))).margin(1e-14));
  }
  SECTION("entanglement dies exactly at the threshold") {
    for (int two_j : {1, 2, 3, 10}) {
      const SpinJ spin(two_j);
      const double tth = threshold_temperature(spin, 1.0);
      REQUIRE(negativity(su2_f_from_thermal(spin, 1.0, Temperature(tth))) ==
              Approx(0.0).margin(1e-10));
      REQUIRE(negativity(su2_f_from_thermal(spin, 1.0,
                                            Temperature(0.99 * tth))) > 0.0);
      REQUIRE(eof(su2_f_from_thermal(spin, 1.0, Temperature(1.01 * tth))) ==
              0.0);
    }
  }
  SECTION("ferromagnetic coupling is rejected") {
    REQUIRE_THROWS_AS(threshold_temperature(SpinJ(1), -1.0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(threshold_temperature(SpinJ(1), 0.0),
                      std::invalid_argument);
  }
}

TEST_CASE("zero-temperature reference table", "[su2]") {
  struct Row {
    int two_j;
    bool ferro;
    double fu;
  };
  const Row rows[] = {
      {1, false, 1.0},        {1, true, 1.0 / 3.0},
      {2, false, 8.0 / 9.0},  {2, true, 4.0 / 9.0},
      {3, false, 5.0 / 6.0},  {3, true, 0.5},
      {4, false, 4.0 / 5.0},  {4, true, 8.0 / 15.0},
  };
  for (const auto& row : rows) {
    const auto m = ground_state_xxx(SpinJ(row.two_j), row.ferro);
    REQUIRE(m.fu == Approx(row.fu).margin(1e-15));
    if (row.ferro) {
      REQUIRE(m.eof == 0.0);
      REQUIRE(m.negativity == 0.0);
    } else {
      REQUIRE(m.eof > 0.0);
      REQUIRE(m.negativity ==
              Approx(2.0 / (row.two_j + 1.0)).margin(1e-15));
    }
  }
  SECTION("large-spin limit of the common value") {
    REQUIRE(ground_state_xxx(SpinJ(1000000), false).fu ==
            Approx(2.0 / 3.0).margin(1e-6));
    REQUIRE(ground_state_xxx(SpinJ(1000000), true).fu ==
            Approx(2.0 / 3.0).margin(1e-6));
  }
}

TEST_CASE("dual LQU/LQFI routes through the family", "[su2][property]") {
  for (int two_j = 1; two_j <= 20; ++two_j) {
    const SpinJ spin(two_j);
    for (double j0 : {1.0, -1.0}) {
      for (int i = 0; i < 13; ++i) {
        const Temperature t(0.05 * std::pow(1000.0, i / 12.0));
        const auto closed = xxx_correlations_closed(spin, j0, t);
        const auto s = su2_f_from_thermal(spin, j0, t);
        REQUIRE(lqu_su2(s) == Approx(closed.u).margin(1e-12));
        REQUIRE(lqfi_su2(s) == Approx(closed.f).margin(1e-12));
      }
    }
  }
}
