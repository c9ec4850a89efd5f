#include "lqw/experiment.hpp"

#include <chrono>

#include "lqw/errors.hpp"

namespace lqw {

namespace {

FigurePreset three_curves(std::string name, GraphSpec graph, std::size_t steps, double loop) {
  return {std::move(name), std::move(graph), steps, loop,
          {{"loopless", Homogeneous{0.0}},
           {"homog", Homogeneous{loop}},
           {"rand10", MarkedPlusUniform{loop, 0.0, 10.0, kFigureSeed}}}};
}

FigurePreset four_curves(std::string name, GraphSpec graph, std::size_t steps, double loop) {
  FigurePreset p = three_curves(std::move(name), std::move(graph), steps, loop);
  p.series.push_back({"rand1", MarkedPlusUniform{loop, 0.0, 1.0, kFigureSeedSmall}});
  return p;
}

std::vector<FigurePreset> make_presets() {
  std::vector<FigurePreset> p;
  const GraphSpec k256{GraphFamily::complete, {256}};

  FigurePreset complete{"complete_256", k256, 100, 1.0, {}};
  FigurePreset complete_rand{"complete_256_rand", k256, 100, 1.0, {}};
  for (double l : {0.0, 0.3, 1.0, 2.0}) {
    complete.series.push_back({"loop_" + format_shortest(l), Homogeneous{l}});
    complete_rand.series.push_back({"rand_" + format_shortest(l), MarkedPlusUniform{l, 0.0, 10.0, kFigureSeed}});
  }
  p.push_back(std::move(complete));
  p.push_back(std::move(complete_rand));

  // Loop weights are d/N at the precision they are usually quoted.
  p.push_back(three_curves("bipartite_128_128", {GraphFamily::bipartite, {128, 128}}, 100, 0.5));
  p.push_back(three_curves("johnson_10_5", {GraphFamily::johnson, {10, 5}}, 100, 0.099206));
  p.push_back(three_curves("paley_257", {GraphFamily::paley, {257}}, 100, 0.498054));
  p.push_back(four_curves("lattice_2_16", {GraphFamily::lattice, {16, 16}}, 150, 0.015625));
  p.push_back(four_curves("lattice_2_32", {GraphFamily::lattice, {32, 32}}, 300, 0.00390625));
  p.push_back(four_curves("lattice_5_4", {GraphFamily::lattice, {4, 4, 4, 4, 4}}, 200, 0.009765625));
  p.push_back(four_curves("hypercube_8", {GraphFamily::hypercube, {8}}, 100, 0.03125));
  p.push_back(four_curves("hypercube_10", {GraphFamily::hypercube, {10}}, 150, 0.009765625));
  p.push_back(four_curves("hypercube_14", {GraphFamily::hypercube, {14}}, 400, 0.0008544921875));
  return p;
}

}  // namespace

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = make_presets();
  return presets;
}

const FigurePreset& figure_preset(std::string_view name) {
  for (const auto& p : figure_presets()) {
    if (p.name == name) return p;
  }
  std::string known;
  for (const auto& p : figure_presets()) known += (known.empty() ? "" : ", ") + p.name;
  throw ParameterError("unknown figure '" + std::string(name) + "' (known: " + known + ")");
}

CurveSet run_figure(const FigurePreset& preset) {
  const auto start = std::chrono::steady_clock::now();
  CurveSet set;
  set.metadata = {
      "command: figure",
      "figure: " + preset.name,
      "graph: " + preset.graph.to_string(),
      "marked: 0",
      "initial: uniform",
      "steps: " + std::to_string(preset.steps),
  };
  for (const auto& s : preset.series) {
    ExperimentConfig config;
    config.graph = preset.graph;
    config.weights = s.weights;
    config.steps = preset.steps;
    std::string echo = format_weight_spec(s.weights);
    if (const auto* r = std::get_if<MarkedPlusUniform>(&s.weights)) {
      config.seed = r->seed;
      echo += " seed=" + std::to_string(r->seed);
    }
    Curve c = run_curve(config, "p_" + s.label);
    set.metadata.push_back("series " + c.label + ": " + echo + " peak_t=" + std::to_string(c.peak_step) +
                           " peak_p=" + format_probability(c.peak_probability));
    set.curves.push_back(std::move(c));
  }
  set.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return set;
}

}  // namespace lqw
