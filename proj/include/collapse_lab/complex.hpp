#pragma once

#include "collapse_lab/vertex_mask.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace collapse_lab {

/// Vertex label. Labels are compared by value; that order is the linear
/// vertex order used by the exclusion-sequence machinery.
using Vertex = std::uint32_t;

/// A finite set of vertices, stored sorted and duplicate free.
class Simplex {
public:
  Simplex() = default;
  Simplex(std::initializer_list<Vertex> vs);
  explicit Simplex(std::vector<Vertex> vs);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool contains(Vertex v) const;
  bool subset_of(const Simplex& other) const;

  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  /// Lexicographic on the sorted vertex sequence.
  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

  std::string to_string() const;

private:
  std::vector<Vertex> vertices_;
};

/// A finite simplicial complex stored as its antichain of facets.
///
/// The void complex has no faces at all and is distinct from the complex
/// {∅} whose only face is the empty set. Internally every face is a
/// VertexMask over positions into the sorted vertex list, so vertex position
/// order agrees with label order. Facets are kept lexicographically sorted.
class SimplicialComplex {
public:
  /// The void complex.
  SimplicialComplex() = default;

  static SimplicialComplex void_complex() { return {}; }
  /// The complex {∅}.
  static SimplicialComplex empty_complex();

  /// Builds from masks over `labels` (sorted ascending). Dominated and
  /// duplicate candidates are dropped; unused labels are discarded.
  static SimplicialComplex from_masks(std::span<const Vertex> labels,
                                      std::vector<VertexMask> candidates);

  bool is_void() const { return facets_.empty(); }
  /// True for {∅}.
  bool is_empty_face_only() const { return facets_.size() == 1 && facets_.front().empty(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t facet_count() const { return facets_.size(); }
  const std::vector<VertexMask>& facet_masks() const { return facets_; }
  std::vector<Simplex> facets() const;

  /// Largest facet size minus one; -1 for {∅}. Throws on the void complex.
  int dimension() const;

  std::optional<std::size_t> position_of(Vertex v) const;
  /// Mask of `s`, or nullopt when some vertex of `s` is not a vertex here.
  std::optional<VertexMask> mask_of(const Simplex& s) const;
  Simplex simplex_of(const VertexMask& m) const;

  bool operator==(const SimplicialComplex&) const = default;

private:
  std::vector<Vertex> vertices_;
  std::vector<VertexMask> facets_;
};

/// Removes duplicates and dominated sets, then sorts lexicographically.
void reduce_to_antichain(std::vector<VertexMask>& sets);

/// Downward closure of the candidates. An empty candidate list gives the void
/// complex; a list holding only ∅ gives {∅}.
SimplicialComplex make_complex(std::span<const Simplex> candidate_facets);
SimplicialComplex make_complex(std::initializer_list<Simplex> candidate_facets);

bool is_face(const SimplicialComplex& x, const Simplex& s);

/// X∖v: the faces avoiding v.
SimplicialComplex deletion(const SimplicialComplex& x, Vertex v);

/// lk(X, v): faces σ with v ∉ σ and σ ∪ {v} ∈ X. Throws InvalidInput when v
/// is not a vertex of X.
SimplicialComplex link(const SimplicialComplex& x, Vertex v);

/// Calls f(mask) exactly once per face, including ∅. Faces are grouped by the
/// first facet (in facet order) that contains them.
template <typename F>
void for_each_face(const SimplicialComplex& x, F&& f) {
  const auto& fs = x.facet_masks();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for_each_subset(fs[i], [&](const VertexMask& s) {
      for (std::size_t j = 0; j < i; ++j)
        if (s.subset_of(fs[j]))
          return;
      f(s);
    });
  }
}

/// All faces, lexicographically sorted. Exponential in facet size.
std::vector<Simplex> faces(const SimplicialComplex& x);
std::size_t face_count(const SimplicialComplex& x);

/// Alternating count of non-empty faces by dimension. Throws on void.
std::int64_t euler_characteristic(const SimplicialComplex& x);

/// Dimension n-1 when X is the boundary of the simplex on its n ≥ 2 vertices.
std::optional<int> recognize_boundary_of_simplex(const SimplicialComplex& x);

/// k when the vertices split into k antipodal pairs and the facets are all
/// 2^k transversals of those pairs.
std::optional<int> recognize_boundary_of_cross_polytope(const SimplicialComplex& x);

} // namespace collapse_lab
