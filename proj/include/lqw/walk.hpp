#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lqw/graphs.hpp"
#include "lqw/weights.hpp"

namespace lqw {

using Complex = std::complex<double>;

enum class InitialState { uniform, stationary };

std::string_view to_string(InitialState initial);
InitialState parse_initial_state(std::string_view text);

/// Amplitude per directed arc. Arcs are grouped by tail vertex in ascending
/// order; inside a group come the arcs to each neighbor in ascending order,
/// then the loop arc (v, v).
struct WalkState {
  std::vector<Complex> amplitudes;

  double norm_squared() const;
  double norm() const;
};

struct Trajectory {
  std::vector<double> probability;  // p(t) for t = 0..steps
  double max_norm_drift = 0.0;      // max_t | ||psi(t)|| - 1 |
};

/// Lackadaisical coined quantum walk U = S C Q with per-vertex loop weights.
///
/// Holds only the arc layout and per-vertex coin constants, not the graph.
/// The coin is applied as one inner product and one rank-1 update per
/// vertex, so a step costs O(arcs).
class LackadaisicalWalk {
 public:
  LackadaisicalWalk(const Graph& graph, const LoopWeights& loops);

  std::size_t vertex_count() const { return block_start_.size() - 1; }
  std::size_t arc_count() const { return partner_.size(); }
  std::size_t degree(Vertex v) const { return block_start_[v + 1] - block_start_[v] - 1; }
  double loop_weight(Vertex v) const { return loop_[v]; }

  /// First arc index of vertex v's block; the block holds degree(v) + 1 arcs.
  std::size_t block_start(Vertex v) const { return block_start_[v]; }
  std::size_t loop_arc(Vertex v) const { return block_start_[v + 1] - 1; }
  /// Index of the reversed arc; loop arcs map to themselves.
  std::size_t reverse_arc(std::size_t arc) const { return partner_[arc]; }

  WalkState initial_uniform() const;
  WalkState initial_stationary() const;
  WalkState initial(InitialState which) const;

  void apply_oracle(WalkState& state, Vertex marked) const;
  void apply_coin(WalkState& state) const;
  void apply_shift(WalkState& state) const;

  /// state <- S C Q state; with no marked vertex the oracle is skipped.
  void step(WalkState& state, std::optional<Vertex> marked) const;

  double success_probability(const WalkState& state, Vertex marked) const;

  Trajectory evolve_record(Vertex marked, std::size_t steps, InitialState initial) const;

 private:
  void check_state(const WalkState& state) const;
  // Coin pass that also returns the squared norm of the result.
  double coin_norm_squared(Complex* amp) const;
  void check_vertex(Vertex v) const;

  std::vector<std::uint32_t> block_start_;
  std::vector<std::uint32_t> partner_;
  // Shift transpositions (a < partner[a]), grouped by tail-vertex tiles.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> swaps_;
  std::vector<double> loop_;
  std::vector<double> sqrt_loop_;
  std::vector<double> coin_scale_;  // 2 / (d_v + l_v)
};

}  // namespace lqw
