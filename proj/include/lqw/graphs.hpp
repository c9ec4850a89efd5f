#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace lqw {

using Vertex = std::uint32_t;

/// Undirected simple graph in compressed adjacency form.
///
/// Neighbor lists are strictly increasing and never contain the vertex
/// itself; self-loops are carried separately by LoopWeights. The arc order
/// of every walk state is derived from this ordering, so it must stay
/// canonical for CSV output to be reproducible.
class Graph {
 public:
  /// Builds a graph from per-vertex neighbor lists after checking symmetry,
  /// ordering and absence of self-loops. Throws ParameterError otherwise.
  static Graph from_adjacency(const std::vector<std::vector<Vertex>>& adjacency);

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], degree(v)};
  }
  bool adjacent(Vertex u, Vertex v) const;

  /// Number of directed non-loop arcs, i.e. twice the edge count.
  std::size_t directed_edge_count() const { return neighbors_.size(); }

  /// The common degree, or nullopt for an irregular graph.
  std::optional<std::size_t> common_degree() const;

  /// Returns the common degree; throws ParameterError if irregular.
  std::size_t require_regular() const;

  /// Re-checks every structural invariant. Throws ParameterError on failure.
  void check_invariants() const;

 private:
  Graph(std::vector<std::size_t> offsets, std::vector<Vertex> neighbors);

  friend class GraphBuilder;

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

Graph build_complete(std::size_t n);
Graph build_complete_bipartite(std::size_t n1, std::size_t n2);
Graph build_johnson(std::size_t n, std::size_t k);
Graph build_paley(std::size_t q);
Graph build_lattice(std::span<const std::size_t> dims);
Graph build_hypercube(std::size_t n);

// Precondition checks shared by the builders and by config validation, so
// that bad parameters are rejected before anything is allocated.
void check_complete(std::size_t n);
void check_complete_bipartite(std::size_t n1, std::size_t n2);
void check_johnson(std::size_t n, std::size_t k);
void check_paley(std::size_t q);
void check_lattice(std::span<const std::size_t> dims);
void check_hypercube(std::size_t n);

bool is_prime(std::uint64_t value);
std::uint64_t binomial(std::size_t n, std::size_t k);

/// Writes "u v" lines with u < v in ascending order.
void write_edge_list(std::ostream& out, const Graph& graph);

}  // namespace lqw
