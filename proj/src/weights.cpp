#include "lqw/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "lqw/errors.hpp"
#include "lqw/rng.hpp"

namespace lqw {

namespace {

void check_loop(double value, const char* what) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ParameterError(std::string(what) + " must be a finite nonnegative weight, got " +
                         format_shortest(value));
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

LoopWeights::LoopWeights(std::vector<double> weights) : weights_(std::move(weights)) {
  for (double w : weights_) check_loop(w, "self-loop weight");
}

bool LoopWeights::homogeneous() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [&](double w) { return w == weights_.front(); });
}

void check_weight_spec(const WeightSpec& spec) {
  std::visit(Overloaded{
                 [](const Homogeneous& h) { check_loop(h.loop, "homogeneous loop"); },
                 [](const Explicit& e) {
                   for (double w : e.loops) check_loop(w, "explicit loop");
                 },
                 [](const MarkedPlusUniform& r) {
                   check_loop(r.marked_loop, "marked loop");
                   check_loop(r.lo, "random lower bound");
                   check_loop(r.hi, "random upper bound");
                   if (r.lo > r.hi) throw ParameterError("random weights need lo <= hi");
                 },
                 [](const TwoClass& t) {
                   check_loop(t.first, "two-class first weight");
                   check_loop(t.rest, "two-class second weight");
                   if (t.count < 1) throw ParameterError("two-class count must be >= 1");
                 },
             },
             spec);
}

LoopWeights realize_weights(const WeightSpec& spec, std::size_t vertex_count, Vertex marked) {
  check_weight_spec(spec);
  if (marked >= vertex_count) {
    throw ParameterError("marked vertex " + std::to_string(marked) + " out of range for " +
                         std::to_string(vertex_count) + " vertices");
  }
  return std::visit(
      Overloaded{
          [&](const Homogeneous& h) { return LoopWeights(std::vector<double>(vertex_count, h.loop)); },
          [&](const Explicit& e) {
            if (e.loops.size() != vertex_count) {
              throw ParameterError("explicit weights have length " + std::to_string(e.loops.size()) +
                                   ", graph has " + std::to_string(vertex_count) + " vertices");
            }
            return LoopWeights(e.loops);
          },
          [&](const MarkedPlusUniform& r) {
            SplitMix64 rng(r.seed);
            std::vector<double> w(vertex_count);
            for (std::size_t v = 0; v < vertex_count; ++v) {
              w[v] = (v == marked) ? r.marked_loop : rng.uniform(r.lo, r.hi);
            }
            return LoopWeights(std::move(w));
          },
          [&](const TwoClass& t) {
            if (t.count > vertex_count) {
              throw ParameterError("two-class count " + std::to_string(t.count) + " exceeds " +
                                   std::to_string(vertex_count) + " vertices");
            }
            std::vector<double> w(vertex_count, t.rest);
            std::fill_n(w.begin(), t.count, t.first);
            return LoopWeights(std::move(w));
          },
      },
      spec);
}

std::string format_shortest(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ParameterError("not a number: '" + text + "'");
  }
  return value;
}

std::string format_weight_spec(const WeightSpec& spec) {
  return std::visit(
      Overloaded{
          [](const Homogeneous& h) { return "homog:" + format_shortest(h.loop); },
          [](const Explicit& e) {
            std::string s = "explicit:";
            for (std::size_t i = 0; i < e.loops.size(); ++i) {
              if (i) s += ',';
              s += format_shortest(e.loops[i]);
            }
            return s;
          },
          [](const MarkedPlusUniform& r) {
            return "rand:" + format_shortest(r.marked_loop) + ',' + format_shortest(r.lo) + ',' +
                   format_shortest(r.hi);
          },
          [](const TwoClass& t) {
            return "twoclass:" + std::to_string(t.count) + ',' + format_shortest(t.first) + ',' +
                   format_shortest(t.rest);
          },
      },
      spec);
}

WeightSpec parse_weight_spec(const std::string& text, std::uint64_t seed) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParameterError("weights must look like kind:values, got '" + text + "'");
  }
  const std::string kind = text.substr(0, colon);
  const auto fields = split(text.substr(colon + 1), ',');
  std::vector<double> values;
  for (const auto& f : fields) values.push_back(parse_double(f));

  auto expect = [&](std::size_t count) {
    if (values.size() != count) {
      throw ParameterError("weights '" + kind + "' expects " + std::to_string(count) +
                           " values, got " + std::to_string(values.size()));
    }
  };

  WeightSpec spec;
  if (kind == "homog") {
    expect(1);
    spec = Homogeneous{values[0]};
  } else if (kind == "twoclass") {
    expect(3);
    if (values[0] < 1 || values[0] != std::floor(values[0])) {
      throw ParameterError("two-class count must be a positive integer");
    }
    spec = TwoClass{static_cast<std::size_t>(values[0]), values[1], values[2]};
  } else if (kind == "rand") {
    expect(3);
    spec = MarkedPlusUniform{values[0], values[1], values[2], seed};
  } else if (kind == "explicit") {
    if (values.empty()) throw ParameterError("explicit weights need at least one value");
    spec = Explicit{std::move(values)};
  } else {
    throw ParameterError("unknown weight kind '" + kind + "'");
  }
  check_weight_spec(spec);
  return spec;
}

}  // namespace lqw
