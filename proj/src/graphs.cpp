#include "lqw/graphs.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "lqw/errors.hpp"

namespace lqw {

namespace {

// Arc indices are 32-bit throughout the walk code.
constexpr std::uint64_t kMaxArcs = std::numeric_limits<std::uint32_t>::max();

void check_arc_budget(std::uint64_t vertices, std::uint64_t degree, const char* family) {
  if (vertices > kMaxArcs || (degree + 1) > kMaxArcs / std::max<std::uint64_t>(vertices, 1)) {
    throw ParameterError(std::string(family) + ": graph too large for 32-bit arc indexing");
  }
}

}  // namespace

class GraphBuilder {
 public:
  static Graph make(std::vector<std::size_t> offsets, std::vector<Vertex> neighbors) {
    return Graph(std::move(offsets), std::move(neighbors));
  }

  // Fills each vertex's fixed-size neighbor block, then sorts it.
  template <typename Fill>
  static Graph regular(std::size_t n, std::size_t degree, Fill&& fill) {
    std::vector<std::size_t> offsets(n + 1);
    for (std::size_t v = 0; v <= n; ++v) offsets[v] = v * degree;
    std::vector<Vertex> neighbors(n * degree);
    for (std::size_t v = 0; v < n; ++v) {
      auto* first = neighbors.data() + v * degree;
      fill(static_cast<Vertex>(v), first);
      std::sort(first, first + degree);
    }
    return Graph(std::move(offsets), std::move(neighbors));
  }
};

Graph::Graph(std::vector<std::size_t> offsets, std::vector<Vertex> neighbors)
    : offsets_(std::move(offsets)), neighbors_(std::move(neighbors)) {}

Graph Graph::from_adjacency(const std::vector<std::vector<Vertex>>& adjacency) {
  if (adjacency.empty()) throw ParameterError("graph must have at least one vertex");
  std::vector<std::size_t> offsets{0};
  std::vector<Vertex> neighbors;
  for (const auto& list : adjacency) {
    neighbors.insert(neighbors.end(), list.begin(), list.end());
    offsets.push_back(neighbors.size());
  }
  Graph graph(std::move(offsets), std::move(neighbors));
  graph.check_invariants();
  return graph;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::optional<std::size_t> Graph::common_degree() const {
  const std::size_t d = degree(0);
  for (Vertex v = 1; v < vertex_count(); ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

std::size_t Graph::require_regular() const {
  auto d = common_degree();
  if (!d) throw ParameterError("graph is not regular");
  return *d;
}

void Graph::check_invariants() const {
  const std::size_t n = vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    const auto list = neighbors(v);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Vertex w = list[i];
      if (w >= n) throw ParameterError("neighbor index out of range at vertex " + std::to_string(v));
      if (w == v) throw ParameterError("self-loop in adjacency of vertex " + std::to_string(v));
      if (i > 0 && list[i - 1] >= w) {
        throw ParameterError("neighbor list not strictly increasing at vertex " + std::to_string(v));
      }
      if (!adjacent(w, v)) {
        throw ParameterError("asymmetric adjacency between " + std::to_string(v) + " and " +
                             std::to_string(w));
      }
    }
  }
}

void check_complete(std::size_t n) {
  if (n < 2) throw ParameterError("complete graph needs n >= 2, got " + std::to_string(n));
  check_arc_budget(n, n - 1, "complete");
}

Graph build_complete(std::size_t n) {
  check_complete(n);
  return GraphBuilder::regular(n, n - 1, [n](Vertex v, Vertex* out) {
    for (Vertex w = 0; w < n; ++w) {
      if (w != v) *out++ = w;
    }
  });
}

void check_complete_bipartite(std::size_t n1, std::size_t n2) {
  if (n1 < 1 || n2 < 1) throw ParameterError("complete bipartite graph needs both parts non-empty");
  check_arc_budget(n1 + n2, std::max(n1, n2), "bipartite");
}

Graph build_complete_bipartite(std::size_t n1, std::size_t n2) {
  check_complete_bipartite(n1, n2);
  const std::size_t n = n1 + n2;
  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<Vertex> neighbors;
  neighbors.reserve(2 * n1 * n2);
  for (std::size_t v = 0; v < n; ++v) {
    const bool side_a = v < n1;
    const std::size_t first = side_a ? n1 : 0;
    const std::size_t last = side_a ? n : n1;
    for (std::size_t w = first; w < last; ++w) neighbors.push_back(static_cast<Vertex>(w));
    offsets[v + 1] = neighbors.size();
  }
  return GraphBuilder::make(std::move(offsets), std::move(neighbors));
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // Exact at every step: result * (n-k+i) is divisible by i.
    result = result * (n - k + i) / i;
  }
  return result;
}

void check_johnson(std::size_t n, std::size_t k) {
  if (k < 1 || k + 1 > n) {
    throw ParameterError("Johnson graph needs 1 <= k <= n-1, got n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
  }
  if (n > 63) throw ParameterError("Johnson graph supports at most 63 symbols");
  check_arc_budget(binomial(n, k), k * (n - k), "johnson");
}

Graph build_johnson(std::size_t n, std::size_t k) {
  check_johnson(n, k);
  // k-subsets as bitmasks, in lexicographic order of their sorted elements.
  std::vector<std::uint64_t> subsets;
  subsets.reserve(binomial(n, k));
  std::vector<std::size_t> combo(k);
  for (std::size_t i = 0; i < k; ++i) combo[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (auto c : combo) mask |= std::uint64_t{1} << c;
    subsets.push_back(mask);
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  std::unordered_map<std::uint64_t, Vertex> index;
  index.reserve(subsets.size());
  for (std::size_t v = 0; v < subsets.size(); ++v) index.emplace(subsets[v], static_cast<Vertex>(v));

  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return GraphBuilder::regular(subsets.size(), k * (n - k), [&](Vertex v, Vertex* out) {
    const std::uint64_t mask = subsets[v];
    for (std::uint64_t in = mask; in; in &= in - 1) {
      const std::uint64_t drop = in & (~in + 1);
      for (std::uint64_t outside = full & ~mask; outside; outside &= outside - 1) {
        const std::uint64_t add = outside & (~outside + 1);
        *out++ = index.at((mask & ~drop) | add);
      }
    }
  });
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d <= value / d; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

void check_paley(std::size_t q) {
  if (!is_prime(q) || q % 4 != 1) {
    throw ParameterError("Paley graph needs a prime q = 1 (mod 4), got " + std::to_string(q));
  }
  check_arc_budget(q, (q - 1) / 2, "paley");
}

Graph build_paley(std::size_t q) {
  check_paley(q);
  std::vector<bool> residue(q, false);
  for (std::size_t x = 1; x < q; ++x) residue[(x * x) % q] = true;
  return GraphBuilder::regular(q, (q - 1) / 2, [&](Vertex v, Vertex* out) {
    for (std::size_t w = 0; w < q; ++w) {
      if (w != v && residue[(v + q - w) % q]) *out++ = static_cast<Vertex>(w);
    }
  });
}

void check_lattice(std::span<const std::size_t> dims) {
  if (dims.empty()) throw ParameterError("lattice needs at least one dimension");
  std::uint64_t n = 1;
  for (auto d : dims) {
    if (d < 3) throw ParameterError("lattice side lengths must be >= 3, got " + std::to_string(d));
    if (n > kMaxArcs / d) throw ParameterError("lattice: too many vertices");
    n *= d;
  }
  check_arc_budget(n, 2 * dims.size(), "lattice");
}

Graph build_lattice(std::span<const std::size_t> dims) {
  check_lattice(dims);
  const std::size_t axes = dims.size();
  // Row-major: the last axis varies fastest.
  std::vector<std::size_t> stride(axes, 1);
  for (std::size_t a = axes - 1; a > 0; --a) stride[a - 1] = stride[a] * dims[a];
  const std::size_t n = stride[0] * dims[0];
  return GraphBuilder::regular(n, 2 * axes, [&](Vertex v, Vertex* out) {
    for (std::size_t a = 0; a < axes; ++a) {
      const std::size_t coord = (v / stride[a]) % dims[a];
      const std::size_t base = v - coord * stride[a];
      *out++ = static_cast<Vertex>(base + ((coord + 1) % dims[a]) * stride[a]);
      *out++ = static_cast<Vertex>(base + ((coord + dims[a] - 1) % dims[a]) * stride[a]);
    }
  });
}

void check_hypercube(std::size_t n) {
  if (n < 1) throw ParameterError("hypercube needs dimension >= 1");
  if (n > 27) throw ParameterError("hypercube dimension too large (max 27)");
}

Graph build_hypercube(std::size_t n) {
  check_hypercube(n);
  return GraphBuilder::regular(std::size_t{1} << n, n, [n](Vertex v, Vertex* out) {
    for (std::size_t b = 0; b < n; ++b) *out++ = v ^ (Vertex{1} << b);
  });
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  for (Vertex u = 0; u < graph.vertex_count(); ++u) {
    for (Vertex v : graph.neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

}  // namespace lqw
