// Command-line front end: parameter sweeps to CSV, reference table and
// figure data, and the self-verification suite.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "axialq/cli.hpp"

namespace {

struct OutputTarget {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  void open(const std::string& path) {
    if (path.empty() || path == "stdout" || path == "-") return;
    file.open(path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
    stream = &file;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum correlations of spin-(j,1/2) axially symmetric systems"};
  app.require_subcommand(1);

  // --- sweep ---
  auto* sweep = app.add_subcommand(
      "sweep", "Evaluate correlation measures over a (two_j, T) grid");
  std::string model_name = "xxx";
  double j0 = 1.0, jz = 1.0, jxy = 1.0, b1 = 0.0, b2 = 0.0;
  bool unnormalized = false;
  std::vector<int> two_j_list;
  double t_start = 0.1, t_stop = 10.0;
  int t_count = 50;
  bool t_log = false, ground = false;
  std::vector<std::string> outputs = {"f", "u"};
  std::string out_path = "stdout";
  int threads = 0;
  sweep->add_option("--model", model_name, "xxx | xxz | xxzfield")
      ->check(CLI::IsMember({"xxx", "xxz", "xxzfield"}));
  sweep->add_option("--j0", j0, "xxx exchange coupling");
  sweep->add_flag("--unnormalized", unnormalized,
                  "drop the 1/(2 sqrt(j(j+1))) spin rescaling (xxx only)");
  sweep->add_option("--jz", jz, "longitudinal coupling (xxz, xxzfield)");
  sweep->add_option("--j", jxy, "transverse coupling (xxz, xxzfield)");
  sweep->add_option("--b1", b1, "field on the spin-j site (xxzfield)");
  sweep->add_option("--b2", b2, "field on the qubit site (xxzfield)");
  sweep->add_option("--two-j", two_j_list, "list of 2j values (exact half-integers)");
  sweep->add_option("--t-start", t_start, "first temperature");
  sweep->add_option("--t-stop", t_stop, "last temperature");
  sweep->add_option("--t-count", t_count, "number of temperature points");
  sweep->add_flag("--t-log", t_log, "logarithmic temperature spacing");
  sweep->add_flag("--ground", ground, "evaluate the T -> 0 ground state instead");
  sweep->add_option("--outputs", outputs,
                    "subset of f0,f1,u0,u1,f,u,negativity,eof,discord,z,f_param");
  sweep->add_option("--out", out_path, "output path or 'stdout'");
  sweep->add_option("--threads", threads, "worker threads (0 = hardware)");

  // --- table1 ---
  auto* table = app.add_subcommand(
      "table1", "Ground-state LQFI/LQU reference values of the xxx model");
  std::string table_out = "stdout";
  table->add_option("--out", table_out, "output path or 'stdout'");

  // --- figure ---
  auto* figure = app.add_subcommand("figure", "Data behind a reference figure");
  int figure_id = 0;
  std::string figure_out = "stdout";
  figure->add_option("id", figure_id, "figure id, 1..9")->required();
  figure->add_option("--out", figure_out, "output path or 'stdout'");

  // --- verify ---
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run the closed-form-vs-oracle verification suites");
  axialq::verify::Options vopt;
  verify_cmd->add_option("--max-two-j", vopt.max_two_j, "largest 2j exercised");
  verify_cmd->add_option("--samples", vopt.samples, "random samples per suite point");
  verify_cmd->add_option("--tol", vopt.tol, "oracle-equivalence tolerance");
  verify_cmd->add_option("--seed", vopt.seed, "random-state suite seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      axialq::cli::SweepSpec spec;
      if (model_name == "xxx") {
        spec.model = axialq::XxxParams{j0, !unnormalized};
      } else if (model_name == "xxz") {
        spec.model = axialq::XxzParams{jz, jxy};
      } else {
        spec.model = axialq::XxzFieldParams{jz, jxy, b1, b2};
      }
      spec.two_j_list = two_j_list;
      if (!ground) {
        spec.t_grid = axialq::cli::TemperatureGrid{t_start, t_stop, t_count, t_log};
        if (t_count < 1) throw std::invalid_argument("sweep: t-count must be >= 1");
      }
      spec.outputs = outputs;
      spec.threads = threads;
      OutputTarget target;
      target.open(out_path);
      axialq::cli::run_sweep(spec, *target.stream);
      return 0;
    }
    if (table->parsed()) {
      OutputTarget target;
      target.open(table_out);
      axialq::cli::run_table1(*target.stream);
      return 0;
    }
    if (figure->parsed()) {
      OutputTarget target;
      target.open(figure_out);
      axialq::cli::run_figure(figure_id, *target.stream);
      return 0;
    }
    if (verify_cmd->parsed()) {
      return axialq::cli::run_verify(vopt, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
