#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramsey/exact.hpp"

namespace ramsey {

using VertexPair = std::pair<int, int>;  // always stored with first < second

inline VertexPair ordered_pair(int u, int v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

// Labeled simple undirected graph.  Edges are stored deduplicated and sorted
// lexicographically; that order is the canonical edge order every per-edge
// array and file format aligns with.
class Graph {
 public:
  Graph() = default;
  // Validates: no self-loops, no duplicates, endpoints in [0, n).
  Graph(int n, std::vector<VertexPair> edges);

  static Graph empty(int n) { return Graph(n, {}); }
  static Graph complete(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexPair>& edges() const { return edges_; }
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  // Canonical index of {u, v}, or -1.
  int edge_index(int u, int v) const;
  int degree(int v) const;
  int max_degree() const;

  // Neighborhood as a bitset; requires vertex_count() <= 64.
  uint64_t adjacency_bits(int v) const;

  // Same vertex set, edges restricted to those whose canonical index bit is
  // clear in `removed`.
  Graph without_edge_set(uint64_t removed) const;
  Graph minus_edge(VertexPair e) const;
  Graph plus_edge(VertexPair e) const;
  // Subgraph induced on `vertices`, relabeled 0..|vertices|-1 in given order.
  Graph induced(const std::vector<int>& vertices) const;

  bool operator==(const Graph& o) const = default;

 private:
  int n_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<uint64_t> adj_;  // built when n_ <= 64
};

// "n m" header, then m lines "u v"; '#' starts a comment line.  Throws
// parse_error with a 1-based line number; duplicate edges are an error, not
// silently merged.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

// A small fixed graph F with its cached statistics.  The vertex count k
// includes isolated vertices; copies of F occupy k vertex slots.
struct Pattern {
  Graph graph;
  int k = 0;            // v_F
  int edge_count = 0;   // e_F
  int max_degree = 0;   // largest vertex degree
  long automorphisms = 1;
  Rational d_density;   // (e_F - 1) / (v_F - 2), or 1/2 when e_F = 1
  Rational m_density;   // max of d_H over subgraphs H with an edge
  Graph m_witness;      // a subgraph achieving m_density
};

// Requires at least one edge (the densities are undefined otherwise).
Pattern make_pattern(const Graph& g);
Pattern parse_pattern(std::string_view text);

Rational density_dF(const Graph& f);
std::pair<Rational, Graph> max_density_mF(const Graph& f);

// k-admissible: exactly k vertices, and a single edge or max degree >= 2.
bool is_admissible(const Pattern& f, int k);

// One link of the edge-removal chain: `pattern` is F_i and `removed` is the
// edge whose deletion from F_i yields F_{i-1} (absent for F_1).
struct AdmissibleStep {
  Pattern pattern;
  std::optional<VertexPair> removed;
};

// Chain F_1 c F_2 c ... c F_e = F with every prefix k-admissible and F_1 a
// single edge plus k-2 isolated vertices.  Ties resolved by removing the
// lexicographically smallest feasible edge.
std::vector<AdmissibleStep> admissible_edge_order(const Pattern& f);

// Number of injective maps V(pat) -> V(host) sending edges to edges.
long long count_embeddings(const Graph& host, const Graph& pat);
// Number of subgraphs of g isomorphic to f (vertex set of size v_F including
// isolated slots); equals count_embeddings / aut(F).
long long count_copies(const Graph& g, const Pattern& f);
bool is_isomorphic(const Graph& a, const Graph& b);

// mu_F = C(n,k) * k!/aut(F) * p^{e_F}
ExactScalar expected_copies(long n, const ExactScalar& p, const Pattern& f);

enum class Color : uint8_t { Red = 0, Blue = 1 };
// The auxiliary rich-pair graph is colored with the same storage; pink is
// carried in the Red slot and azure in the Blue slot.
inline constexpr Color kPink = Color::Red;
inline constexpr Color kAzure = Color::Blue;

// Red/blue labels aligned with the host's canonical edge order.
struct EdgeColoring {
  Graph host;
  std::vector<Color> colors;

  EdgeColoring() = default;
  EdgeColoring(Graph h, std::vector<Color> c);
  static EdgeColoring uniform(const Graph& g, Color c);
  // Bit e set means edge e is blue; requires edge_count <= 64.
  static EdgeColoring from_blue_mask(const Graph& g, uint64_t mask);
  uint64_t blue_mask() const;
  Color at(int u, int v) const;
};

// e(host) lines of 0 (red) / 1 (blue) in canonical edge order.
EdgeColoring parse_coloring(const Graph& host, std::string_view text);
std::string format_coloring(const EdgeColoring& c);

// Copies of a pattern grouped by edge mask over the host's canonical edge
// order (several copies can share a mask when they differ only in isolated
// vertex slots).  Requires e(host) <= 64.
struct CopyMasks {
  std::vector<uint64_t> masks;
  std::vector<uint32_t> mults;
  long long total = 0;  // = count_copies
};
CopyMasks enumerate_copy_masks(const Graph& g, const Pattern& f);

}  // namespace ramsey
