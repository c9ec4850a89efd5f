#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lqw/graphs.hpp"

namespace lqw {

/// Per-vertex self-loop weights, all nonnegative.
class LoopWeights {
 public:
  explicit LoopWeights(std::vector<double> weights);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t v) const { return weights_[v]; }
  std::span<const double> values() const { return weights_; }
  bool homogeneous() const;

  friend bool operator==(const LoopWeights&, const LoopWeights&) = default;

 private:
  std::vector<double> weights_;
};

struct Homogeneous {
  double loop = 0.0;
  friend bool operator==(const Homogeneous&, const Homogeneous&) = default;
};

struct Explicit {
  std::vector<double> loops;
  friend bool operator==(const Explicit&, const Explicit&) = default;
};

/// The marked vertex gets `marked_loop`; every other vertex, in ascending
/// order, gets SplitMix64(seed).uniform(lo, hi).
struct MarkedPlusUniform {
  double marked_loop = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::uint64_t seed = 0;
  friend bool operator==(const MarkedPlusUniform&, const MarkedPlusUniform&) = default;
};

/// The first `count` vertices get `first`, the rest get `rest`.
struct TwoClass {
  std::size_t count = 1;
  double first = 0.0;
  double rest = 0.0;
  friend bool operator==(const TwoClass&, const TwoClass&) = default;
};

using WeightSpec = std::variant<Homogeneous, Explicit, MarkedPlusUniform, TwoClass>;

/// Validates everything that does not depend on the graph.
void check_weight_spec(const WeightSpec& spec);

LoopWeights realize_weights(const WeightSpec& spec, std::size_t vertex_count, Vertex marked);

/// Text form used on the command line and in CSV headers:
/// homog:L | twoclass:M,L,L' | rand:Lm,lo,hi | explicit:w0,w1,...
/// The seed of a rand spec is not part of the text; parse takes it separately.
std::string format_weight_spec(const WeightSpec& spec);
WeightSpec parse_weight_spec(const std::string& text, std::uint64_t seed);

/// Shortest decimal string that parses back to exactly `value`.
std::string format_shortest(double value);
double parse_double(const std::string& text);

}  // namespace lqw
