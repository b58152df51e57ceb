#pragma once

#include "collapse_lab/complex.hpp"
#include "collapse_lab/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace collapse_lab {

/// A sequence (σ₁, …, σ_m) of faces of X such that every face of X lies in
/// some σ_i. Positions are tied to the vertex list of the complex it was
/// validated against.
class FacetOrdering {
public:
  /// Throws InvalidInput when an entry is not a face of X or some facet of X
  /// is contained in no entry.
  FacetOrdering(const SimplicialComplex& x, std::vector<Simplex> faces);

  /// The facets of X in lexicographic order.
  static FacetOrdering lexicographic(const SimplicialComplex& x);

  const std::vector<Simplex>& faces() const { return faces_; }
  const std::vector<VertexMask>& masks() const { return masks_; }
  std::size_t size() const { return faces_.size(); }
  /// Vertex list of the complex the ordering was validated against.
  const std::vector<Vertex>& vertices() const { return vertices_; }

private:
  std::vector<Vertex> vertices_;
  std::vector<Simplex> faces_;
  std::vector<VertexMask> masks_;
};

struct MesEntry {
  Vertex vertex = 0;
  /// False when the vertex was reused from an earlier entry ("old").
  bool is_new = false;
  bool operator==(const MesEntry&) const = default;
};

struct MesResult {
  Simplex face;
  /// 1-based index of the first entry of the ordering containing the face.
  std::size_t first_index = 0;
  std::vector<MesEntry> sequence;
  /// The set of vertices appearing in the sequence.
  Simplex support;
};

/// Minimal exclusion sequence of `face` with respect to the ordering and the
/// vertex-label order. Throws InvalidInput when `face` is not a face of X.
MesResult mes(const SimplicialComplex& x, const FacetOrdering& ordering, const Simplex& face);

/// Largest support size of a minimal exclusion sequence over all faces of X.
int d_of_ordering(const SimplicialComplex& x, const FacetOrdering& ordering);

struct OrderingSearchResult {
  FacetOrdering ordering;
  int d = 0;
  std::uint64_t orderings_tried = 0;
};

/// Tries every permutation of the facets (at most `max_facets` of them) and
/// keeps the first one, in lexicographic permutation order, of least d.
OrderingSearchResult best_facet_ordering(const SimplicialComplex& x, std::size_t max_facets = 7);

/// Vertices v₁..v_k and facets σ₁..σ_{k+1} with v_i ∉ σ_i and v_i ∈ σ_j
/// whenever i < j.
struct SxWitness {
  std::vector<Vertex> vertices;
  std::vector<Simplex> facets;
};

struct DPrimeResult {
  int value = 0;
  SxWitness witness;
};

/// Exact d′(X), the largest size of a staircase set in S(X). Throws
/// InvalidInput on the void complex.
DPrimeResult d_prime(const SimplicialComplex& x);

bool is_sx_witness(const SimplicialComplex& x, const SxWitness& w);

/// v₁..v_k pairwise non-adjacent, v_i ~ u_i, and v_i ≁ u_j for i < j.
struct KgWitness {
  std::vector<Vertex> v;
  std::vector<Vertex> u;
};

struct KGraphResult {
  int value = 0;
  KgWitness witness;
};

/// Exact k(G) by depth-first search over the set of chosen v's.
KGraphResult k_graph(const Graph& g);

bool is_kg_witness(const Graph& g, const KgWitness& w);

/// Binomial coefficient; throws InvalidInput on overflow or bad arguments.
std::int64_t binomial(int n, int k);

/// C(r+p-2t, r-t) - 1; requires r, p ≥ 1 and 0 ≤ t ≤ min(r, p) - 1.
std::int64_t cov_collapsibility_bound(int r, int p, int t = 0);
/// C(2(r-t), r-t) / 2; requires r ≥ 1 and 0 ≤ t ≤ r - 1.
std::int64_t int_collapsibility_bound(int r, int t = 0);
/// 2^(r-1) for r-partite r-uniform hypergraphs; requires r ≥ 1.
std::int64_t rpartite_int_collapsibility_bound(int r);

struct TheoremBounds {
  std::int64_t cov_bound = 0;
  std::int64_t int_bound = 0;
  std::int64_t rpartite_int_bound = 0;
};

/// All three bounds; throws InvalidInput when any hypothesis fails.
TheoremBounds theorem_bounds(int r, int p, int t = 0);

} // namespace collapse_lab
