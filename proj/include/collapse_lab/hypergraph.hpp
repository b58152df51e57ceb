#pragma once

#include "collapse_lab/complex.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace collapse_lab {

/// A finite hypergraph identified with its list of distinct, non-empty edges.
/// The ground set is the union of the edges together with any declared part
/// members. Edge order is preserved: complexes built from a hypergraph use
/// the edge index (0-based) as the complex vertex label.
class Hypergraph {
public:
  Hypergraph() = default;
  /// Throws InvalidInput on empty or repeated edges, or when `parts` does not
  /// partition the ground set with every edge meeting every part exactly once.
  explicit Hypergraph(std::vector<Simplex> edges,
                      std::optional<std::vector<Simplex>> parts = std::nullopt);

  const std::vector<Simplex>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& ground_set() const { return ground_; }
  const std::optional<std::vector<Simplex>>& parts() const { return parts_; }
  /// Maximal edge size; 0 for the hypergraph without edges.
  int rank() const;

  /// Edges as masks over ground-set positions.
  std::vector<VertexMask> edge_masks() const;

private:
  std::vector<Simplex> edges_;
  std::vector<Vertex> ground_;
  std::optional<std::vector<Simplex>> parts_;
};

/// Simple undirected graph without loops.
class Graph {
public:
  Graph() = default;
  /// Edge endpoints are added to the vertex set. Loops are rejected and
  /// repeated edges collapse.
  Graph(std::vector<Vertex> vertices, std::vector<std::pair<Vertex, Vertex>> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  /// Sorted (u, v) pairs with u < v.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  bool adjacent(Vertex u, Vertex v) const;
  /// Neighbourhoods as masks over vertex positions.
  const std::vector<VertexMask>& adjacency() const { return adjacency_; }

private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<VertexMask> adjacency_;
};

/// A set meeting every edge of a face in at least `threshold` vertices.
struct CoverWitness {
  Simplex cover_set;
  int threshold = 1;
};

/// Minimum size of a t-transversal, by exhaustive search in increasing size.
/// Throws InvalidInput when t < 1 or some edge has fewer than t vertices.
int covering_number(const Hypergraph& h, int t = 1);

/// Cov^t_{H,p}: subfamilies of H with a t-transversal of size ≤ p.
SimplicialComplex cov_complex(const Hypergraph& h, int p, int t = 1);

/// The facets of cov_complex together with a witness set C per facet, such
/// that the facet is exactly {A : |A ∩ C| ≥ t}.
std::vector<std::pair<Simplex, CoverWitness>> cov_complex_witnesses(const Hypergraph& h, int p,
                                                                    int t = 1);

/// Int^t_H: pairwise t-intersecting subfamilies. Edges with fewer than t
/// vertices never t-intersect themselves and are left out; their indices are
/// appended to `dropped` when given.
SimplicialComplex int_complex(const Hypergraph& h, int t = 1,
                              std::vector<std::size_t>* dropped = nullptr);

/// Graph on the edge indices of H (those with at least t vertices) joining
/// A and B when |A ∩ B| < t.
Graph disjointness_graph(const Hypergraph& h, int t = 1);

/// I(G): facets are the maximal independent sets, enumerated with pivoted
/// Bron–Kerbosch on the complement.
SimplicialComplex independence_complex(const Graph& g);

/// All r-subsets of {1, ..., n} in lexicographic order.
Hypergraph complete_uniform(int n, int r);

/// All transversals of consecutive parts {1..s1}, {s1+1..s1+s2}, ...
Hypergraph complete_r_partite(const std::vector<int>& sides);

/// {A ∪ [t] : A an (r-t)-subset of [r+p-t] ∖ [t]}; requires 0 ≤ t < min(r, p).
Hypergraph family_h1(int r, int p, int t);

/// {A ∪ [t] : A an (r-t)-subset of [2r-t] ∖ [t]}; requires 0 ≤ t < r.
Hypergraph family_h2(int r, int t);

} // namespace collapse_lab
