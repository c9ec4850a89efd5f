#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lqw/analytic.hpp"
#include "lqw/csv.hpp"
#include "lqw/graphs.hpp"
#include "lqw/walk.hpp"
#include "lqw/weights.hpp"

namespace lqw {

enum class GraphFamily { complete, bipartite, johnson, paley, lattice, hypercube };

std::string_view to_string(GraphFamily family);
GraphFamily parse_graph_family(std::string_view text);

/// A graph family plus its integer parameters:
///   complete:n  bipartite:n1,n2  johnson:n,k  paley:q  lattice:d1,d2,...  hypercube:n
struct GraphSpec {
  GraphFamily family = GraphFamily::complete;
  std::vector<std::size_t> params;

  /// Checks the constructor preconditions without building anything.
  void validate() const;
  std::size_t vertex_count() const;
  /// Whether the graph will be regular (false only for unbalanced bipartite).
  bool regular() const;
  Graph build() const;

  std::string to_string() const;
  static GraphSpec parse(const std::string& text);

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

struct ExperimentConfig {
  GraphSpec graph;
  WeightSpec weights = Homogeneous{0.0};
  Vertex marked = 0;
  InitialState initial = InitialState::uniform;
  std::size_t steps = 100;
  std::uint64_t seed = 0;
  std::string output;  // empty or "-" means stdout

  /// Requires a regular graph, valid weights and an in-range marked vertex.
  void validate() const;

  /// "key: value" lines echoing every field.
  std::vector<std::string> header() const;
  static ExperimentConfig from_header(const CurveTable& table);

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct Curve {
  std::string label;  // column name, "p" or "p_<label>"
  std::vector<double> probability;
  std::size_t peak_step = 0;
  double peak_probability = 0.0;
  double max_norm_drift = 0.0;
};

struct CurveSet {
  std::vector<std::string> metadata;  // "key: value" lines
  std::vector<Curve> curves;
  double wall_seconds = 0.0;  // reported separately, never written to CSV

  CurveTable to_table() const;
};

/// Norm drift beyond this is an invariant violation.
inline constexpr double kNormDriftLimit = 1e-8;

/// First maximum of a series.
std::size_t argmax(std::span<const double> series);

/// Runs one configuration; throws InvariantViolation on norm drift.
Curve run_curve(const ExperimentConfig& config, const std::string& label = "p");

CurveSet simulate(const ExperimentConfig& config);

// ---------------------------------------------------------------------------
// Figure presets

struct FigureSeries {
  std::string label;  // column suffix
  WeightSpec weights;
};

struct FigurePreset {
  std::string name;
  GraphSpec graph;
  std::size_t steps = 0;
  double optimal_loop = 0.0;  // d/N as printed, e.g. 0.099206
  std::vector<FigureSeries> series;
};

/// Seeds for random-weight presets. The [0,10] curves use kFigureSeed, the
/// [0,1] curves kFigureSeedSmall.
inline constexpr std::uint64_t kFigureSeed = 1;
inline constexpr std::uint64_t kFigureSeedSmall = 2;

const std::vector<FigurePreset>& figure_presets();
const FigurePreset& figure_preset(std::string_view name);
CurveSet run_figure(const FigurePreset& preset);

// ---------------------------------------------------------------------------
// Full simulation vs 9D subspace vs asymptotic closed form.

struct CompareReport {
  SubspaceModel model;
  std::size_t steps = 0;
  double full_vs_subspace = 0.0;
  double full_vs_asymptotic = 0.0;
  double subspace_vs_asymptotic = 0.0;
  double max_norm_drift = 0.0;
};

/// Exact-agreement threshold between the full and 9D evolutions.
inline constexpr double kSubspaceAgreement = 1e-9;

CompareReport compare_models(const SubspaceModel& model, std::size_t steps);
void write_compare_report(std::ostream& out, const CompareReport& report);

// ---------------------------------------------------------------------------
// Parameter sweeps

/// One parameter varied over a list of values. Parameters: ell (the marked /
/// primary loop weight), seed, steps, marked, lo, hi.
struct SweepGrid {
  std::string parameter;
  std::vector<std::string> values;
};

ExperimentConfig apply_parameter(ExperimentConfig config, const std::string& parameter,
                                 const std::string& value);

struct SweepCell {
  std::size_t index = 0;
  std::string value;
  bool ok = false;
  std::string error;
  std::size_t peak_step = 0;
  double peak_probability = 0.0;
  std::filesystem::path file;
};

struct SweepResult {
  std::vector<SweepCell> cells;
  bool all_ok() const;
};

/// Runs every cell on up to `jobs` worker threads and writes cell_NNN.csv plus
/// summary.csv into `out_dir`. Output does not depend on `jobs`.
SweepResult run_sweep(const ExperimentConfig& base, const SweepGrid& grid, std::size_t jobs,
                      const std::filesystem::path& out_dir);

// ---------------------------------------------------------------------------
// Plot script generation

/// Emits a standalone matplotlib script plotting every series of every CSV
/// (one panel per file). Throws IoError / ParseError for unreadable input.
void write_plot_script(std::ostream& out, std::span<const std::filesystem::path> csv_paths);

}  // namespace lqw
