// lqw: command-line front end for the lackadaisical quantum walk simulator.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lqw/errors.hpp"
#include "lqw/experiment.hpp"

namespace {

enum Exit : int { kOk = 0, kUsage = 2, kNumerical = 3, kIo = 4 };

struct GraphFlags {
  std::string graph = "complete";
  std::vector<std::size_t> dims;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t q = 0;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--graph", graph,
                   "complete|bipartite|johnson|paley|lattice|hypercube, or a full spec such as johnson:10,5")
        ->capture_default_str();
    cmd.add_option("--dims", dims, "bipartite part sizes or lattice side lengths")->delimiter(',');
    cmd.add_option("--n", n, "complete/johnson vertex count or hypercube dimension");
    cmd.add_option("--k", k, "johnson subset size");
    cmd.add_option("--q", q, "paley prime");
  }

  lqw::GraphSpec resolve() const {
    if (graph.find(':') != std::string::npos) return lqw::GraphSpec::parse(graph);
    lqw::GraphSpec spec;
    spec.family = lqw::parse_graph_family(graph);
    auto need = [&](std::size_t v, const char* flag) {
      if (v == 0) throw lqw::ParameterError(std::string("--graph ") + graph + " requires " + flag);
      return v;
    };
    switch (spec.family) {
      case lqw::GraphFamily::complete:
      case lqw::GraphFamily::hypercube:
        spec.params = {need(n, "--n")};
        break;
      case lqw::GraphFamily::johnson:
        spec.params = {need(n, "--n"), need(k, "--k")};
        break;
      case lqw::GraphFamily::paley:
        spec.params = {need(q, "--q")};
        break;
      case lqw::GraphFamily::bipartite:
      case lqw::GraphFamily::lattice:
        if (dims.empty()) throw lqw::ParameterError(std::string("--graph ") + graph + " requires --dims");
        spec.params = dims;
        break;
    }
    spec.validate();
    return spec;
  }
};

struct ConfigFlags {
  GraphFlags graph;
  std::string weights = "homog:0";
  lqw::Vertex marked = 0;
  std::string initial = "uniform";
  std::size_t steps = 100;
  std::uint64_t seed = 0;
  std::string out;

  void add_to(CLI::App& cmd) {
    graph.add_to(cmd);
    cmd.add_option("--weights", weights, "homog:L | twoclass:M,L,L' | rand:Lm,lo,hi | explicit:L0,L1,...")
        ->capture_default_str();
    cmd.add_option("--marked", marked, "marked vertex")->capture_default_str();
    cmd.add_option("--initial", initial, "uniform|stationary")->capture_default_str();
    cmd.add_option("--steps", steps, "number of steps")->capture_default_str();
    cmd.add_option("--seed", seed, "seed for random weights")->capture_default_str();
  }

  lqw::ExperimentConfig resolve() const {
    lqw::ExperimentConfig c;
    c.graph = graph.resolve();
    c.seed = seed;
    c.weights = lqw::parse_weight_spec(weights, seed);
    c.marked = marked;
    c.initial = lqw::parse_initial_state(initial);
    c.steps = steps;
    c.output = out;
    c.validate();
    return c;
  }
};

void report_time(const char* what, double seconds) {
  std::fprintf(stderr, "%s: %.3f s\n", what, seconds);
}

int handle_error() {
  try {
    throw;
  } catch (const lqw::InvariantViolation& e) {
    std::cerr << "lqw: invariant violation: " << e.what() << '\n';
    return kNumerical;
  } catch (const lqw::ModelError& e) {
    std::cerr << "lqw: model error: " << e.what() << '\n';
    return kNumerical;
  } catch (const lqw::IoError& e) {
    std::cerr << "lqw: " << e.what() << '\n';
    return kIo;
  } catch (const lqw::ParseError& e) {
    std::cerr << "lqw: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lqw: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "lqw: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "lqw: " << e.what() << '\n';
    return kNumerical;
  }
}

std::vector<std::string> split_values(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lackadaisical quantum walk search simulator"};
  app.require_subcommand(1);

  ConfigFlags sim;
  auto* simulate = app.add_subcommand("simulate", "evolve one configuration and write a t,p CSV");
  sim.add_to(*simulate);
  simulate->add_option("--out", sim.out, "output CSV (default stdout)");

  std::string figure_name;
  std::string figure_out;
  bool figure_list = false;
  auto* figure = app.add_subcommand("figure", "write the multi-series CSV of a figure preset");
  figure->add_option("name", figure_name, "preset name");
  figure->add_option("--out", figure_out, "output CSV (default stdout)");
  figure->add_flag("--list", figure_list, "list preset names");

  std::size_t cmp_n = 64, cmp_m = 16, cmp_steps = 100;
  double cmp_loop = 1.0, cmp_other = 1.0;
  std::string cmp_out;
  auto* compare = app.add_subcommand("compare", "full simulation vs 9D subspace vs closed form");
  compare->add_option("--n", cmp_n, "vertex count")->capture_default_str();
  compare->add_option("--M", cmp_m, "vertices with the marked vertex's loop weight")->capture_default_str();
  compare->add_option("--loop", cmp_loop, "loop weight of the first M vertices")->capture_default_str();
  compare->add_option("--other-loop", cmp_other, "loop weight of the remaining vertices")->capture_default_str();
  compare->add_option("--steps", cmp_steps, "number of steps")->capture_default_str();
  compare->add_option("--out", cmp_out, "report path (default stdout)");

  ConfigFlags base;
  std::string sweep_param = "ell";
  std::string sweep_values;
  std::size_t jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "run a one-parameter grid in parallel");
  base.add_to(*sweep);
  sweep->add_option("--param", sweep_param, "ell|seed|steps|marked|lo|hi")->capture_default_str();
  sweep->add_option("--values", sweep_values, "comma-separated grid values")->required();
  sweep->add_option("--out", base.out, "output directory")->required();
  sweep->add_option("--jobs", jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  std::vector<std::string> plot_inputs;
  std::string plot_out;
  auto* plot = app.add_subcommand("plot", "emit a matplotlib script for one or more CSVs");
  plot->add_option("csv", plot_inputs, "input CSVs")->required();
  plot->add_option("--out", plot_out, "script path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  try {
    if (*simulate) {
      const auto config = sim.resolve();
      const auto set = lqw::simulate(config);
      lqw::write_curve_table(config.output, set.to_table());
      report_time("simulate", set.wall_seconds);
      return kOk;
    }
    if (*figure) {
      if (figure_list) {
        for (const auto& p : lqw::figure_presets()) std::cout << p.name << '\n';
        return kOk;
      }
      if (figure_name.empty()) throw lqw::ParameterError("figure requires a preset name (see --list)");
      const auto set = lqw::run_figure(lqw::figure_preset(figure_name));
      lqw::write_curve_table(figure_out, set.to_table());
      report_time("figure", elapsed());
      return kOk;
    }
    if (*compare) {
      lqw::SubspaceModel model{cmp_n, cmp_m, cmp_loop, cmp_other};
      const auto report = lqw::compare_models(model, cmp_steps);
      if (cmp_out.empty() || cmp_out == "-") {
        lqw::write_compare_report(std::cout, report);
      } else {
        std::ofstream f(cmp_out, std::ios::binary);
        if (!f) throw lqw::IoError("cannot open '" + cmp_out + "' for writing");
        lqw::write_compare_report(f, report);
        if (!f.flush()) throw lqw::IoError("failed writing '" + cmp_out + "'");
      }
      report_time("compare", elapsed());
      if (report.full_vs_subspace > lqw::kSubspaceAgreement) {
        std::cerr << "lqw: full and subspace evolutions disagree by " << report.full_vs_subspace << '\n';
        return kNumerical;
      }
      return kOk;
    }
    if (*sweep) {
      const lqw::SweepGrid grid{sweep_param, split_values(sweep_values)};
      if (grid.values.empty()) throw lqw::ParameterError("sweep grid is empty");
      auto config = base.resolve();
      // Check every cell before any work starts.
      for (const auto& v : grid.values) lqw::apply_parameter(config, grid.parameter, v).validate();
      const auto result = lqw::run_sweep(config, grid, jobs, base.out);
      report_time("sweep", elapsed());
      if (!result.all_ok()) {
        for (const auto& c : result.cells) {
          if (!c.ok) std::cerr << "lqw: cell " << c.index << " (" << c.value << ") failed: " << c.error << '\n';
        }
        return kNumerical;
      }
      return kOk;
    }
    if (*plot) {
      std::vector<std::filesystem::path> paths(plot_inputs.begin(), plot_inputs.end());
      if (plot_out.empty() || plot_out == "-") {
        lqw::write_plot_script(std::cout, paths);
      } else {
        std::ostringstream script;
        lqw::write_plot_script(script, paths);
        std::ofstream f(plot_out, std::ios::binary);
        if (!f) throw lqw::IoError("cannot open '" + plot_out + "' for writing");
        f << script.str();
        if (!f.flush()) throw lqw::IoError("failed writing '" + plot_out + "'");
      }
      return kOk;
    }
  } catch (...) {
    return handle_error();
  }
  return kUsage;
}
