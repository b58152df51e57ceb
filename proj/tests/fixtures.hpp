#pragma once

#include "collapse_lab/complex.hpp"

#include <vector>

namespace fixtures {

using collapse_lab::Simplex;
using collapse_lab::SimplicialComplex;
using collapse_lab::Vertex;

inline SimplicialComplex triangle_boundary() {
  return collapse_lab::make_complex({{1, 2}, {1, 3}, {2, 3}});
}

/// Boundary of the 3-dimensional cross-polytope with antipodal pairs
/// (1,4), (2,5), (3,6).
inline SimplicialComplex octahedron() {
  return collapse_lab::make_complex({{1, 2, 3}, {1, 2, 6}, {1, 3, 5}, {1, 5, 6},
                                     {2, 3, 4}, {2, 4, 6}, {3, 4, 5}, {4, 5, 6}});
}

/// The 4-cycle 1-2-3-4-1 as a 1-dimensional complex.
inline SimplicialComplex square() {
  return collapse_lab::make_complex({{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

/// Boundary of the k-dimensional cross-polytope with antipodes (2i-1, 2i).
inline SimplicialComplex cross_polytope(int k) {
  std::vector<Simplex> facets;
  for (int bits = 0; bits < (1 << k); ++bits) {
    std::vector<Vertex> vs;
    for (int i = 0; i < k; ++i)
      vs.push_back(static_cast<Vertex>(2 * i + 1 + ((bits >> i) & 1)));
    facets.emplace_back(std::move(vs));
  }
  return collapse_lab::make_complex(facets);
}

/// Named complexes used across the property tests.
inline std::vector<SimplicialComplex> named() {
  using collapse_lab::make_complex;
  return {
      make_complex({Simplex{}}),
      make_complex({{1}}),
      make_complex({{1}, {2}}),
      make_complex({{1, 2, 3}}),
      make_complex({{1, 2}, {2, 3}}),
      make_complex({{1, 2}, {3, 4}}),
      triangle_boundary(),
      square(),
      octahedron(),
      make_complex({{1, 2, 3}, {3, 4}, {4, 5}, {5, 3}}),
      make_complex({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 5}}),
      // Two triangles sharing a vertex.
      make_complex({{1, 2, 3}, {3, 4, 5}}),
  };
}

} // namespace fixtures
