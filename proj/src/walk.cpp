#include "lqw/walk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lqw/errors.hpp"

namespace lqw {

std::string_view to_string(InitialState initial) {
  return initial == InitialState::uniform ? "uniform" : "stationary";
}

InitialState parse_initial_state(std::string_view text) {
  if (text == "uniform") return InitialState::uniform;
  if (text == "stationary") return InitialState::stationary;
  throw ParameterError("initial state must be 'uniform' or 'stationary', got '" +
                       std::string(text) + "'");
}

double WalkState::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  return sum;
}

double WalkState::norm() const { return std::sqrt(norm_squared()); }

LackadaisicalWalk::LackadaisicalWalk(const Graph& graph, const LoopWeights& loops) {
  const std::size_t n = graph.vertex_count();
  if (loops.size() != n) {
    throw ParameterError("loop weights have length " + std::to_string(loops.size()) +
                         " but graph has " + std::to_string(n) + " vertices");
  }
  const std::uint64_t arcs = graph.directed_edge_count() + n;
  if (arcs > UINT32_MAX) throw ParameterError("graph too large for 32-bit arc indexing");

  block_start_.resize(n + 1);
  block_start_[0] = 0;
  for (Vertex v = 0; v < n; ++v) {
    block_start_[v + 1] = block_start_[v] + static_cast<std::uint32_t>(graph.degree(v) + 1);
  }

  partner_.resize(arcs);
  for (Vertex v = 0; v < n; ++v) {
    const auto nbrs = graph.neighbors(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const Vertex w = nbrs[k];
      const auto back = graph.neighbors(w);
      const auto pos = std::lower_bound(back.begin(), back.end(), v) - back.begin();
      partner_[block_start_[v] + k] = block_start_[w] + static_cast<std::uint32_t>(pos);
    }
    partner_[block_start_[v + 1] - 1] = block_start_[v + 1] - 1;
  }

  // Visiting the transpositions tile by tile keeps the touched pages few.
  constexpr Vertex kTile = 16;
  std::vector<std::pair<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>>> keyed;
  keyed.reserve(graph.directed_edge_count() / 2);
  const std::uint64_t tiles = n / kTile + 1;
  for (Vertex v = 0; v < n; ++v) {
    const auto nbrs = graph.neighbors(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const std::uint32_t a = block_start_[v] + static_cast<std::uint32_t>(k);
      if (partner_[a] > a) keyed.push_back({(v / kTile) * tiles + nbrs[k] / kTile, {a, partner_[a]}});
    }
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  swaps_.reserve(keyed.size());
  for (const auto& k : keyed) swaps_.push_back(k.second);

  loop_.assign(loops.values().begin(), loops.values().end());
  sqrt_loop_.resize(n);
  coin_scale_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    sqrt_loop_[v] = std::sqrt(loop_[v]);
    const double total = static_cast<double>(graph.degree(v)) + loop_[v];
    if (total <= 0.0) {
      throw ParameterError("vertex " + std::to_string(v) + " has no edges and a zero loop weight");
    }
    coin_scale_[v] = 2.0 / total;
  }
}

void LackadaisicalWalk::check_state(const WalkState& state) const {
  if (state.amplitudes.size() != arc_count()) {
    throw ParameterError("state has " + std::to_string(state.amplitudes.size()) +
                         " amplitudes, walk has " + std::to_string(arc_count()) + " arcs");
  }
}

void LackadaisicalWalk::check_vertex(Vertex v) const {
  if (v >= vertex_count()) {
    throw ParameterError("vertex " + std::to_string(v) + " out of range");
  }
}

WalkState LackadaisicalWalk::initial_uniform() const {
  const std::size_t n = vertex_count();
  WalkState state{std::vector<Complex>(arc_count())};
  for (Vertex v = 0; v < n; ++v) {
    const double a = 1.0 / std::sqrt(static_cast<double>(n) * (degree(v) + loop_[v]));
    std::fill(state.amplitudes.begin() + block_start_[v], state.amplitudes.begin() + loop_arc(v),
              Complex(a));
    state.amplitudes[loop_arc(v)] = a * sqrt_loop_[v];
  }
  return state;
}

WalkState LackadaisicalWalk::initial_stationary() const {
  const std::size_t n = vertex_count();
  double total = 0.0;
  for (Vertex v = 0; v < n; ++v) total += degree(v) + loop_[v];
  const double a = 1.0 / std::sqrt(total);
  WalkState state{std::vector<Complex>(arc_count(), Complex(a))};
  for (Vertex v = 0; v < n; ++v) state.amplitudes[loop_arc(v)] = a * sqrt_loop_[v];
  return state;
}

WalkState LackadaisicalWalk::initial(InitialState which) const {
  return which == InitialState::uniform ? initial_uniform() : initial_stationary();
}

void LackadaisicalWalk::apply_oracle(WalkState& state, Vertex marked) const {
  check_state(state);
  check_vertex(marked);
  for (std::size_t a = block_start_[marked]; a < block_start_[marked + 1]; ++a) {
    state.amplitudes[a] = -state.amplitudes[a];
  }
}

void LackadaisicalWalk::apply_coin(WalkState& state) const {
  check_state(state);
  coin_norm_squared(state.amplitudes.data());
}

double LackadaisicalWalk::coin_norm_squared(Complex* amp) const {
  const std::size_t n = vertex_count();
  double norm = 0.0;
  for (Vertex v = 0; v < n; ++v) {
    // c <- 2<s|c>|s> - c with s = (1, ..., 1, sqrt(l)) / sqrt(d + l).
    const std::size_t first = block_start_[v];
    const std::size_t loop = block_start_[v + 1] - 1;
    Complex sum(0.0);
    for (std::size_t a = first; a < loop; ++a) sum += amp[a];
    sum += sqrt_loop_[v] * amp[loop];
    const Complex scaled = coin_scale_[v] * sum;
    for (std::size_t a = first; a < loop; ++a) {
      amp[a] = scaled - amp[a];
      norm += std::norm(amp[a]);
    }
    amp[loop] = scaled * sqrt_loop_[v] - amp[loop];
    norm += std::norm(amp[loop]);
  }
  return norm;
}

void LackadaisicalWalk::apply_shift(WalkState& state) const {
  check_state(state);
  Complex* amp = state.amplitudes.data();
  for (const auto& [a, b] : swaps_) std::swap(amp[a], amp[b]);
}

void LackadaisicalWalk::step(WalkState& state, std::optional<Vertex> marked) const {
  if (marked) apply_oracle(state, *marked);
  apply_coin(state);
  apply_shift(state);
}

double LackadaisicalWalk::success_probability(const WalkState& state, Vertex marked) const {
  check_state(state);
  check_vertex(marked);
  double p = 0.0;
  for (std::size_t a = block_start_[marked]; a < block_start_[marked + 1]; ++a) {
    p += std::norm(state.amplitudes[a]);
  }
  return p;
}

Trajectory LackadaisicalWalk::evolve_record(Vertex marked, std::size_t steps,
                                            InitialState initial_state) const {
  check_vertex(marked);
  WalkState state = initial(initial_state);
  Trajectory out;
  out.probability.reserve(steps + 1);
  out.probability.push_back(success_probability(state, marked));
  out.max_norm_drift = std::abs(state.norm() - 1.0);
  for (std::size_t t = 1; t <= steps; ++t) {
    // Oracle and shift only negate and permute amplitudes, so the norm
    // measured during the coin pass is the norm of the stepped state.
    apply_oracle(state, marked);
    const double norm_squared = coin_norm_squared(state.amplitudes.data());
    apply_shift(state);
    out.probability.push_back(success_probability(state, marked));
    out.max_norm_drift = std::max(out.max_norm_drift, std::abs(std::sqrt(norm_squared) - 1.0));
  }
  return out;
}

}  // namespace lqw
