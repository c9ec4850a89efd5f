#include "lqw/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <thread>

#include "lqw/errors.hpp"

namespace lqw {

ExperimentConfig apply_parameter(ExperimentConfig config, const std::string& parameter,
                                 const std::string& value) {
  if (parameter == "ell") {
    const double l = parse_double(value);
    std::visit(
        [&](auto& w) {
          using T = std::decay_t<decltype(w)>;
          if constexpr (std::is_same_v<T, Homogeneous>) w.loop = l;
          else if constexpr (std::is_same_v<T, MarkedPlusUniform>) w.marked_loop = l;
          else if constexpr (std::is_same_v<T, TwoClass>) w.first = l;
          else throw ParameterError("'ell' cannot be swept for explicit weights");
        },
        config.weights);
  } else if (parameter == "seed") {
    std::uint64_t s = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), s);
    if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
      throw ParameterError("seed must be a nonnegative integer, got '" + value + "'");
    }
    config.seed = s;
    if (auto* r = std::get_if<MarkedPlusUniform>(&config.weights)) r->seed = s;
  } else if (parameter == "steps" || parameter == "marked") {
    const double v = parse_double(value);
    if (v < 0 || v != static_cast<double>(static_cast<std::uint64_t>(v))) {
      throw ParameterError(parameter + " must be a nonnegative integer, got '" + value + "'");
    }
    if (parameter == "steps") config.steps = static_cast<std::size_t>(v);
    else config.marked = static_cast<Vertex>(v);
  } else if (parameter == "lo" || parameter == "hi") {
    auto* r = std::get_if<MarkedPlusUniform>(&config.weights);
    if (!r) throw ParameterError("'" + parameter + "' can only be swept for random weights");
    (parameter == "lo" ? r->lo : r->hi) = parse_double(value);
  } else {
    throw ParameterError("unknown sweep parameter '" + parameter + "'");
  }
  return config;
}

bool SweepResult::all_ok() const {
  return std::all_of(cells.begin(), cells.end(), [](const SweepCell& c) { return c.ok; });
}

SweepResult run_sweep(const ExperimentConfig& base, const SweepGrid& grid, std::size_t jobs,
                      const std::filesystem::path& out_dir) {
  if (grid.values.empty()) throw ParameterError("sweep grid is empty");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create directory '" + out_dir.string() + "': " + ec.message());

  SweepResult result;
  result.cells.resize(grid.values.size());
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "cell_%03zu.csv", i);
    result.cells[i].index = i;
    result.cells[i].value = grid.values[i];
    result.cells[i].file = out_dir / name;
  }

  // Each worker claims cell indices from a shared counter and writes only to
  // its own cell.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < result.cells.size(); i = next++) {
      SweepCell& cell = result.cells[i];
      try {
        ExperimentConfig config = apply_parameter(base, grid.parameter, cell.value);
        config.output = cell.file.filename().string();
        CurveSet set = simulate(config);
        write_curve_table(cell.file, set.to_table());
        cell.peak_step = set.curves[0].peak_step;
        cell.peak_probability = set.curves[0].peak_probability;
        cell.ok = true;
      } catch (const std::exception& e) {
        cell.ok = false;
        cell.error = e.what();
      }
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, result.cells.size());
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  const auto summary_path = out_dir / "summary.csv";
  std::ofstream out(summary_path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + summary_path.string() + "' for writing");
  out << "# command: sweep\n# parameter: " << grid.parameter << '\n';
  for (const auto& h : base.header()) {
    if (h.rfind("out:", 0) != 0) out << "# base " << h << '\n';
  }
  out << "cell,value,peak_t,peak_p,status\n";
  for (const auto& c : result.cells) {
    out << c.index << ',' << c.value << ',';
    if (c.ok) {
      out << c.peak_step << ',' << format_probability(c.peak_probability) << ",ok\n";
    } else {
      std::string why = c.error;
      std::replace(why.begin(), why.end(), ',', ';');
      std::replace(why.begin(), why.end(), '\n', ' ');
      out << ",,failed: " << why << '\n';
    }
  }
  out.flush();
  if (!out) throw IoError("failed writing '" + summary_path.string() + "'");
  return result;
}

}  // namespace lqw
