#pragma once

// Sweep, table, figure, and verify drivers behind the command-line tool.
// All numeric output is written with 17 significant digits via
// std::to_chars, so CSV files are locale-free and round-trip exact doubles.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "axialq/axial_core.hpp"
#include "axialq/correlations.hpp"
#include "axialq/models.hpp"
#include "axialq/su2.hpp"
#include "axialq/thermal.hpp"
#include "axialq/verify.hpp"

namespace axialq::cli {

inline std::string fmt17(double x) {
  char buf[40];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

struct TemperatureGrid {
  double start = 0.1;
  double stop = 10.0;
  int count = 50;
  bool log_spacing = false;

  double at(int i) const {
    if (count == 1) return start;
    const double s = static_cast<double>(i) / (count - 1);
    if (log_spacing) return start * std::pow(stop / start, s);
    return start + s * (stop - start);
  }
};

/// One sweep request: a model, a list of 2j values, a temperature grid (or
/// the ground state), and the output columns to emit.
struct SweepSpec {
  ModelParams model;
  std::vector<int> two_j_list;
  std::optional<TemperatureGrid> t_grid;  // nullopt = ground state
  std::vector<std::string> outputs;
  int threads = 0;  // 0 = hardware concurrency
};

namespace detail_cli {

inline const std::vector<std::string>& canonical_outputs() {
  static const std::vector<std::string> names = {
      "f0", "f1", "u0", "u1", "f",          "u",
      "negativity", "eof", "discord", "z",  "f_param"};
  return names;
}

inline bool su2_only(const std::string& name) {
  return name == "negativity" || name == "eof" || name == "discord" ||
         name == "f_param";
}

inline std::string model_tag(const ModelParams& m) {
  if (std::holds_alternative<XxxParams>(m)) return "xxx";
  if (std::holds_alternative<XxzParams>(m)) return "xxz";
  return "xxzfield";
}

inline std::vector<std::pair<std::string, double>> model_columns(
    const ModelParams& m) {
  if (const auto* p = std::get_if<XxxParams>(&m)) {
    return {{"j0", p->j0}};
  }
  if (const auto* p = std::get_if<XxzParams>(&m)) {
    return {{"jz", p->jz}, {"j", p->jxy}};
  }
  const auto& p = std::get<XxzFieldParams>(m);
  return {{"jz", p.jz}, {"j", p.jxy}, {"b1", p.b1}, {"b2", p.b2}};
}

/// Sorted canonical-order copy of the requested outputs; rejects unknown
/// names, SU(2)-only outputs for non-XXX models, and z at T = 0.
inline std::vector<std::string> resolve_outputs(const SweepSpec& spec) {
  if (spec.outputs.empty()) {
    throw std::invalid_argument("sweep: at least one output is required");
  }
  const bool is_xxx = std::holds_alternative<XxxParams>(spec.model);
  for (const auto& want : spec.outputs) {
    bool found = false;
    for (const auto& name : canonical_outputs()) found |= want == name;
    if (!found) throw std::invalid_argument("sweep: unknown output '" + want + "'");
  }
  std::vector<std::string> ordered;
  for (const auto& name : canonical_outputs()) {
    bool requested = false;
    for (const auto& want : spec.outputs) requested |= want == name;
    if (!requested) continue;
    if (su2_only(name) && !is_xxx) {
      throw std::invalid_argument("sweep: output '" + name +
                                  "' is defined only for the xxx model");
    }
    if (name == "z" && !spec.t_grid) {
      throw std::invalid_argument("sweep: output 'z' requires a temperature grid");
    }
    ordered.push_back(name);
  }
  return ordered;
}

template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  int workers = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min<std::size_t>(workers, n > 0 ? n : 1);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail_cli

/// Writes header plus one row per (two_j, t) point in lexicographic order.
/// Rows are computed concurrently and emitted in order, so the bytes do not
/// depend on the thread count.
inline void run_sweep(const SweepSpec& spec, std::ostream& out) {
  if (spec.t_grid && spec.t_grid->count < 1) {
    throw std::invalid_argument("sweep: t-count must be >= 1");
  }
  const auto outputs = detail_cli::resolve_outputs(spec);
  const auto params = detail_cli::model_columns(spec.model);
  const std::string tag = detail_cli::model_tag(spec.model);

  std::string header = "model,two_j,t";
  for (const auto& [name, value] : params) header += "," + name;
  for (const auto& name : outputs) header += "," + name;
  out << header << "\n";

  std::vector<int> two_j_sorted = spec.two_j_list;
  for (int two_j : two_j_sorted) {
    if (two_j < 1) throw std::invalid_argument("sweep: two_j must be >= 1");
  }
  std::sort(two_j_sorted.begin(), two_j_sorted.end());

  const int points = spec.t_grid ? spec.t_grid->count : 1;
  const std::size_t total = two_j_sorted.size() * points;
  std::vector<std::string> rows(total);

  detail_cli::parallel_for(total, spec.threads, [&](std::size_t idx) {
    const int two_j = two_j_sorted[idx / points];
    const int ti = static_cast<int>(idx % points);
    const SpinJ spin(two_j);
    const auto h = build_hamiltonian(spec.model, spin);

    double t_value = 0.0;
    AxialDensityMatrix rho(spin, 0, 0,
                           std::vector<StateBlock>(spin.twice_j()));
    if (spec.t_grid) {
      t_value = spec.t_grid->at(ti);
      rho = gibbs_state(h, Temperature(t_value));
    } else {
      rho = ground_state(h).state;
    }

    bool need_branches = false;
    for (const auto& name : outputs) {
      need_branches |= !detail_cli::su2_only(name) && name != "z";
    }
    CorrelationResult corr{};
    if (need_branches) corr = correlations(rho);

    std::optional<SU2State> su2;
    const auto* xxx = std::get_if<XxxParams>(&spec.model);
    for (const auto& name : outputs) {
      if (detail_cli::su2_only(name) && !su2) {
        if (spec.t_grid) {
          su2 = su2_f_from_thermal(spin, xxx->j0, Temperature(t_value));
        } else if (xxx->j0 > 0.0) {
          su2 = SU2State(spin, 1.0, 0.0);
        } else if (xxx->j0 < 0.0) {
          su2 = SU2State(spin, 0.0, 1.0);
        } else {
          su2 = SU2State(spin, SU2State(spin, 0.0).f_critical());
        }
      }
    }

    std::string row = tag + "," + std::to_string(two_j) + "," +
                      (spec.t_grid ? fmt17(t_value) : std::string("0"));
    for (const auto& [name, value] : params) row += "," + fmt17(value);
    for (const auto& name : outputs) {
      double v = 0.0;
      if (name == "f0") v = corr.f0;
      else if (name == "f1") v = corr.f1;
      else if (name == "u0") v = corr.u0;
      else if (name == "u1") v = corr.u1;
      else if (name == "f") v = corr.f;
      else if (name == "u") v = corr.u;
      else if (name == "negativity") v = negativity(*su2);
      else if (name == "eof") v = eof(*su2);
      else if (name == "discord") v = discord(*su2);
      else if (name == "f_param") v = su2->f_param();
      else if (name == "z") v = partition_function(h, Temperature(t_value)).z();
      row += "," + fmt17(v);
    }
    rows[idx] = std::move(row);
  });

  for (const auto& row : rows) out << row << "\n";
}

/// Ground-state LQFI/LQU of the isotropic model for the reference spins,
/// with the entanglement columns alongside.
inline void run_table1(std::ostream& out) {
  out << "two_j,coupling,fu,eof,negativity\n";
  for (int two_j : {1, 2, 3, 4, 105}) {
    for (bool ferro : {false, true}) {
      const auto m = ground_state_xxx(SpinJ(two_j), ferro);
      out << two_j << "," << (ferro ? "ferro" : "antiferro") << ","
          << fmt17(m.fu) << "," << fmt17(m.eof) << "," << fmt17(m.negativity)
          << "\n";
    }
  }
}

namespace detail_cli {

inline void figure_thermal_xxx(double j0, std::ostream& out) {
  const std::vector<int> two_js = {2, 3, 4, 105};
  std::string header = "t_over_j0";
  for (int two_j : two_js) {
    header += ",f_tj" + std::to_string(two_j) + ",u_tj" + std::to_string(two_j);
  }
  out << header << "\n";
  const TemperatureGrid grid{0.02, 20.0, 121, true};
  for (int i = 0; i < grid.count; ++i) {
    const double t = grid.at(i);
    out << fmt17(t);
    for (int two_j : two_js) {
      const auto c =
          xxx_correlations_closed(SpinJ(two_j), j0, Temperature(t * std::abs(j0)));
      out << "," << fmt17(c.f) << "," << fmt17(c.u);
    }
    out << "\n";
  }
}

inline void figure_lqfi_vs_f(std::ostream& out) {
  const std::vector<int> two_js = {2, 3, 4, 105};
  std::string header = "f_param";
  for (int two_j : two_js) header += ",lqfi_tj" + std::to_string(two_j);
  out << header << "\n";
  for (int i = 0; i <= 200; ++i) {
    const double f = i / 200.0;
    out << fmt17(f);
    for (int two_j : two_js) {
      out << "," << fmt17(lqfi_su2(SU2State(SpinJ(two_j), f)));
    }
    out << "\n";
  }
}

inline void figure_threshold(std::ostream& out) {
  out << "two_j,j,t_th_over_j0\n";
  for (int two_j = 1; two_j <= 200; ++two_j) {
    out << two_j << "," << fmt17(0.5 * two_j) << ","
        << fmt17(threshold_temperature(SpinJ(two_j), 1.0)) << "\n";
  }
}

inline void figure_ground_series(
    const std::vector<std::pair<std::string, ModelParams>>& series,
    int max_two_j, std::ostream& out) {
  std::string header = "two_j,j";
  for (const auto& [name, params] : series) {
    header += ",f_" + name + ",u_" + name;
  }
  out << header << "\n";
  for (int two_j = 1; two_j <= max_two_j; ++two_j) {
    const SpinJ spin(two_j);
    out << two_j << "," << fmt17(spin.j());
    for (const auto& [name, params] : series) {
      const auto c =
          correlations(ground_state(build_hamiltonian(params, spin)).state);
      out << "," << fmt17(c.f) << "," << fmt17(c.u);
    }
    out << "\n";
  }
}

inline void figure_ground_discord(std::ostream& out) {
  out << "two_j,j,qd_antiferro,qd_ferro,qd_split_antiferro,qd_split_ferro,"
         "eof_antiferro,negativity_antiferro\n";
  for (int two_j = 1; two_j <= 20; ++two_j) {
    const SpinJ spin(two_j);
    const SU2State af(spin, 1.0, 0.0);
    const SU2State fe(spin, 0.0, 1.0);
    out << two_j << "," << fmt17(spin.j()) << "," << fmt17(discord(af)) << ","
        << fmt17(discord(fe)) << "," << fmt17(discord(af, false)) << ","
        << fmt17(discord(fe, false)) << "," << fmt17(eof(af)) << ","
        << fmt17(negativity(af)) << "\n";
  }
}

}  // namespace detail_cli

/// Plot-ready data behind the paper-style displays:
///   1, 2  thermal LQFI/LQU of the isotropic model (antiferro / ferro)
///   3     LQFI of the rotationally invariant family against F
///   4     normalized threshold temperature against j
///   5     ground-state correlations of the field-perturbed isotropic model
///   6     ground-state discord (both summation conventions) + entanglement
///   7     ground-state correlations, XXZ with dominant transverse coupling
///   8     ground-state correlations, XXZ with dominant longitudinal coupling
///   9     ground-state correlations, XXZ in a longitudinal field
inline void run_figure(int id, std::ostream& out) {
  switch (id) {
    case 1: detail_cli::figure_thermal_xxx(1.0, out); return;
    case 2: detail_cli::figure_thermal_xxx(-1.0, out); return;
    case 3: detail_cli::figure_lqfi_vs_f(out); return;
    case 4: detail_cli::figure_threshold(out); return;
    case 5:
      detail_cli::figure_ground_series(
          {{"set1", XxzFieldParams{1.0, 1.0, 0.05, 0.0}},
           {"set2", XxzFieldParams{1.0, 1.0, 0.0, 0.2}},
           {"set3", XxzFieldParams{1.0, 1.0, -0.5, 0.3}}},
          40, out);
      return;
    case 6: detail_cli::figure_ground_discord(out); return;
    case 7:
      detail_cli::figure_ground_series({{"jz_plus", XxzParams{1.0, 1.1}},
                                        {"jz_minus", XxzParams{-1.0, 1.1}}},
                                       100, out);
      return;
    case 8:
      detail_cli::figure_ground_series({{"decay", XxzParams{1.0, 0.9}}}, 80,
                                       out);
      return;
    case 9:
      detail_cli::figure_ground_series(
          {{"jz_plus", XxzFieldParams{1.0, 1.1, 0.2, 0.0}},
           {"jz_minus", XxzFieldParams{-1.0, 1.1, 0.2, 0.0}}},
          40, out);
      return;
    default:
      throw std::invalid_argument("figure: id must be 1..9");
  }
}

/// Runs every verification suite and prints one line per suite with its
/// worst deviation. Returns 0 iff all suites passed.
inline int run_verify(const verify::Options& opt, std::ostream& out) {
  const auto results = verify::run_all(opt);
  bool all_ok = true;
  for (const auto& res : results) {
    out << (res.passed ? "PASS" : "FAIL") << "  "
        << res.name;
    for (std::size_t i = res.name.size(); i < 36; ++i) out << ' ';
    out << " worst=" << fmt17(res.worst);
    if (!res.note.empty()) out << "  (" << res.note << ")";
    out << "\n";
    all_ok &= res.passed;
  }
  out << (all_ok ? "all suites passed" : "SUITE FAILURES PRESENT") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace axialq::cli
