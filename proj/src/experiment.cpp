#include "lqw/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>

#include "lqw/errors.hpp"

namespace lqw {

namespace {

std::size_t parse_size(const std::string& text, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParameterError(std::string(what) + ": not a nonnegative integer: '" + text + "'");
  }
  return value;
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParameterError(std::string(what) + ": not a nonnegative integer: '" + text + "'");
  }
  return value;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(parse_size(item, "graph parameter"));
  return out;
}

}  // namespace

std::string_view to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::complete: return "complete";
    case GraphFamily::bipartite: return "bipartite";
    case GraphFamily::johnson: return "johnson";
    case GraphFamily::paley: return "paley";
    case GraphFamily::lattice: return "lattice";
    case GraphFamily::hypercube: return "hypercube";
  }
  return "?";
}

GraphFamily parse_graph_family(std::string_view text) {
  for (auto f : {GraphFamily::complete, GraphFamily::bipartite, GraphFamily::johnson,
                 GraphFamily::paley, GraphFamily::lattice, GraphFamily::hypercube}) {
    if (text == to_string(f)) return f;
  }
  throw ParameterError("unknown graph family '" + std::string(text) + "'");
}

void GraphSpec::validate() const {
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw ParameterError(std::string(lqw::to_string(family)) + " expects " + std::to_string(count) +
                           " parameter(s), got " + std::to_string(params.size()));
    }
  };
  switch (family) {
    case GraphFamily::complete: expect(1); check_complete(params[0]); break;
    case GraphFamily::bipartite: expect(2); check_complete_bipartite(params[0], params[1]); break;
    case GraphFamily::johnson: expect(2); check_johnson(params[0], params[1]); break;
    case GraphFamily::paley: expect(1); check_paley(params[0]); break;
    case GraphFamily::lattice: check_lattice(params); break;
    case GraphFamily::hypercube: expect(1); check_hypercube(params[0]); break;
  }
}

std::size_t GraphSpec::vertex_count() const {
  validate();
  switch (family) {
    case GraphFamily::complete:
    case GraphFamily::paley: return params[0];
    case GraphFamily::bipartite: return params[0] + params[1];
    case GraphFamily::johnson: return binomial(params[0], params[1]);
    case GraphFamily::lattice: {
      std::size_t n = 1;
      for (auto d : params) n *= d;
      return n;
    }
    case GraphFamily::hypercube: return std::size_t{1} << params[0];
  }
  return 0;
}

bool GraphSpec::regular() const {
  return family != GraphFamily::bipartite || params.size() != 2 || params[0] == params[1];
}

Graph GraphSpec::build() const {
  validate();
  switch (family) {
    case GraphFamily::complete: return build_complete(params[0]);
    case GraphFamily::bipartite: return build_complete_bipartite(params[0], params[1]);
    case GraphFamily::johnson: return build_johnson(params[0], params[1]);
    case GraphFamily::paley: return build_paley(params[0]);
    case GraphFamily::lattice: return build_lattice(params);
    case GraphFamily::hypercube: return build_hypercube(params[0]);
  }
  throw ParameterError("unknown graph family");
}

std::string GraphSpec::to_string() const {
  std::string s(lqw::to_string(family));
  s += ':';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(params[i]);
  }
  return s;
}

GraphSpec GraphSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParameterError("graph must look like family:params, got '" + text + "'");
  GraphSpec spec{parse_graph_family(text.substr(0, colon)), parse_size_list(text.substr(colon + 1))};
  spec.validate();
  return spec;
}

void ExperimentConfig::validate() const {
  graph.validate();
  if (!graph.regular()) throw ParameterError("search experiments require a regular graph, got " + graph.to_string());
  check_weight_spec(weights);
  const std::size_t n = graph.vertex_count();
  if (marked >= n) {
    throw ParameterError("marked vertex " + std::to_string(marked) + " out of range for " +
                         std::to_string(n) + " vertices");
  }
  if (const auto* e = std::get_if<Explicit>(&weights); e && e->loops.size() != n) {
    throw ParameterError("explicit weights need one value per vertex");
  }
  if (const auto* t = std::get_if<TwoClass>(&weights); t && t->count > n) {
    throw ParameterError("two-class count exceeds vertex count");
  }
  if (const auto* r = std::get_if<MarkedPlusUniform>(&weights); r && r->seed != seed) {
    throw ParameterError("random weight seed does not match the configured seed");
  }
}

std::vector<std::string> ExperimentConfig::header() const {
  return {
      "graph: " + graph.to_string(),
      "weights: " + format_weight_spec(weights),
      "seed: " + std::to_string(seed),
      "marked: " + std::to_string(marked),
      "initial: " + std::string(to_string(initial)),
      "steps: " + std::to_string(steps),
      "out: " + output,
  };
}

ExperimentConfig ExperimentConfig::from_header(const CurveTable& table) {
  auto field = [&](const char* key) {
    const std::string prefix = std::string(key) + ":";
    for (const auto& c : table.comments) {
      if (c.rfind(prefix, 0) == 0) {
        std::string v = c.substr(prefix.size());
        if (!v.empty() && v[0] == ' ') v.erase(0, 1);
        return v;
      }
    }
    throw ParameterError(std::string("CSV header lacks '") + key + "'");
  };
  ExperimentConfig c;
  c.graph = GraphSpec::parse(field("graph"));
  c.seed = parse_u64(field("seed"), "seed");
  c.weights = parse_weight_spec(field("weights"), c.seed);
  c.marked = static_cast<Vertex>(parse_size(field("marked"), "marked"));
  c.initial = parse_initial_state(field("initial"));
  c.steps = parse_size(field("steps"), "steps");
  c.output = field("out");
  c.validate();
  return c;
}

CurveTable CurveSet::to_table() const {
  CurveTable t;
  t.comments = metadata;
  if (!curves.empty()) {
    for (std::size_t s = 0; s < curves.front().probability.size(); ++s) {
      t.steps.push_back(static_cast<long long>(s));
    }
  }
  for (const auto& c : curves) {
    t.columns.push_back(c.label);
    t.series.push_back(c.probability);
  }
  return t;
}

std::size_t argmax(std::span<const double> series) {
  return static_cast<std::size_t>(std::max_element(series.begin(), series.end()) - series.begin());
}

Curve run_curve(const ExperimentConfig& config, const std::string& label) {
  config.validate();
  const Graph graph = config.graph.build();
  const LoopWeights loops = realize_weights(config.weights, graph.vertex_count(), config.marked);
  const LackadaisicalWalk walk(graph, loops);
  Trajectory traj = walk.evolve_record(config.marked, config.steps, config.initial);
  if (traj.max_norm_drift > kNormDriftLimit) {
    throw InvariantViolation("norm drift " + format_probability(traj.max_norm_drift) +
                             " exceeds limit for " + config.graph.to_string());
  }
  Curve curve;
  curve.label = label;
  curve.peak_step = argmax(traj.probability);
  curve.peak_probability = traj.probability[curve.peak_step];
  curve.max_norm_drift = traj.max_norm_drift;
  curve.probability = std::move(traj.probability);
  return curve;
}

CurveSet simulate(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  CurveSet set;
  set.curves.push_back(run_curve(config));
  set.metadata.push_back("command: simulate");
  for (auto& h : config.header()) set.metadata.push_back(std::move(h));
  set.metadata.push_back("peak_t: " + std::to_string(set.curves[0].peak_step));
  set.metadata.push_back("peak_p: " + format_probability(set.curves[0].peak_probability));
  set.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return set;
}

CompareReport compare_models(const SubspaceModel& model, std::size_t steps) {
  model.validate();
  ExperimentConfig config;
  config.graph = {GraphFamily::complete, {static_cast<std::size_t>(model.n)}};
  config.weights = TwoClass{static_cast<std::size_t>(model.m), model.loop, model.other_loop};
  config.steps = steps;
  const Curve full = run_curve(config);
  const std::vector<double> sub = subspace_evolve(model, steps);

  CompareReport report{model, steps, 0.0, 0.0, 0.0, full.max_norm_drift};
  for (std::size_t t = 0; t <= steps; ++t) {
    const double closed = p_homogeneous(model.n, model.loop, static_cast<double>(t));
    report.full_vs_subspace = std::max(report.full_vs_subspace, std::abs(full.probability[t] - sub[t]));
    report.full_vs_asymptotic = std::max(report.full_vs_asymptotic, std::abs(full.probability[t] - closed));
    report.subspace_vs_asymptotic = std::max(report.subspace_vs_asymptotic, std::abs(sub[t] - closed));
  }
  return report;
}

void write_compare_report(std::ostream& out, const CompareReport& r) {
  out << "# command: compare\n"
      << "# n: " << format_shortest(r.model.n) << '\n'
      << "# M: " << format_shortest(r.model.m) << '\n'
      << "# loop: " << format_shortest(r.model.loop) << '\n'
      << "# other_loop: " << format_shortest(r.model.other_loop) << '\n'
      << "# steps: " << r.steps << '\n'
      << "metric,value\n"
      << "max_full_vs_subspace," << format_probability(r.full_vs_subspace) << '\n'
      << "max_full_vs_asymptotic," << format_probability(r.full_vs_asymptotic) << '\n'
      << "max_subspace_vs_asymptotic," << format_probability(r.subspace_vs_asymptotic) << '\n'
      << "max_norm_drift," << format_probability(r.max_norm_drift) << '\n';
}

}  // namespace lqw
