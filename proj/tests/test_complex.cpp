#include "collapse_lab/complex.hpp"
#include "collapse_lab/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace collapse_lab;

TEST_CASE("make_complex normalizes to the facet antichain") {
  SUBCASE("path") {
    auto x = make_complex({{1, 2}, {2, 3}});
    CHECK(x.facets() == std::vector<Simplex>{{1, 2}, {2, 3}});
    CHECK(face_count(x) == 6);
  }
  SUBCASE("full triangle") {
    auto x = make_complex({{1, 2, 3}});
    CHECK(x.facet_count() == 1);
    CHECK(face_count(x) == 8);
  }
  SUBCASE("absorption") {
    auto x = make_complex({{1, 2}, {1, 2, 3}});
    CHECK(x.facets() == std::vector<Simplex>{{1, 2, 3}});
  }
  SUBCASE("void and {empty}") {
    auto v = make_complex(std::vector<Simplex>{});
    CHECK(v.is_void());
    CHECK(face_count(v) == 0);
    auto e = make_complex({Simplex{}});
    CHECK_FALSE(e.is_void());
    CHECK(e.is_empty_face_only());
    CHECK(face_count(e) == 1);
    CHECK(e.dimension() == -1);
    CHECK(v != e);
  }
  SUBCASE("too many vertices") {
    std::vector<Vertex> big;
    for (Vertex i = 0; i < 129; ++i)
      big.push_back(i);
    CHECK_THROWS_AS(make_complex({Simplex(big)}), InvalidInput);
  }
  SUBCASE("labels need not be contiguous") {
    auto x = make_complex({{10, 500}, {7}});
    CHECK(x.vertices() == std::vector<Vertex>{7, 10, 500});
    CHECK(x.facets() == std::vector<Simplex>{{7}, {10, 500}});
  }
}

TEST_CASE("is_face") {
  CHECK(is_face(make_complex({{1, 2, 3}}), {1, 3}));
  CHECK_FALSE(is_face(make_complex({{1, 2}, {2, 3}}), {1, 3}));
  CHECK(is_face(make_complex({{1, 2}, {2, 3}}), {}));
  CHECK_FALSE(is_face(make_complex({{1, 2}}), {4}));
  CHECK_FALSE(is_face(SimplicialComplex::void_complex(), {}));
}

TEST_CASE("deletion") {
  CHECK(deletion(fixtures::triangle_boundary(), 3).facets() == std::vector<Simplex>{{1, 2}});
  CHECK(deletion(make_complex({{1, 2, 3}}), 1) == make_complex({{2, 3}}));
  // Octahedron minus a vertex: cone over the 4-cycle with apex the antipode.
  const auto octa = fixtures::octahedron();
  const auto d = deletion(octa, 1);
  CHECK(d == make_complex({{2, 3, 4}, {2, 4, 6}, {3, 4, 5}, {4, 5, 6}}));
  CHECK(face_count(d) == 1 + 5 + 8 + 4);
  CHECK(deletion(make_complex({{1}}), 1).is_empty_face_only());
}

TEST_CASE("link") {
  CHECK(link(make_complex({{1, 2, 3}}), 1) == make_complex({{2, 3}}));
  CHECK(link(fixtures::triangle_boundary(), 1) == make_complex({{2}, {3}}));
  CHECK(link(fixtures::octahedron(), 1) == make_complex({{2, 3}, {2, 6}, {3, 5}, {5, 6}}));
  CHECK(link(make_complex({{1}}), 1).is_empty_face_only());
  CHECK_THROWS_AS(link(fixtures::triangle_boundary(), 9), InvalidInput);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(fixtures::triangle_boundary()) == 0);
  CHECK(euler_characteristic(fixtures::octahedron()) == 2);
  CHECK(euler_characteristic(make_complex({{1, 2, 3}})) == 1);
  CHECK(euler_characteristic(make_complex({Simplex{}})) == 0);
  CHECK_THROWS(euler_characteristic(SimplicialComplex::void_complex()));
}

TEST_CASE("shape recognition") {
  CHECK(recognize_boundary_of_simplex(fixtures::triangle_boundary()) == 2);
  CHECK(recognize_boundary_of_simplex(make_complex({{1}, {2}})) == 1);
  CHECK(recognize_boundary_of_cross_polytope(fixtures::octahedron()) == 3);
  CHECK(recognize_boundary_of_cross_polytope(make_complex({{1}, {2}})) == 1);
  CHECK(recognize_boundary_of_cross_polytope(fixtures::square()) == 2);
  CHECK_FALSE(recognize_boundary_of_simplex(fixtures::octahedron()));
  CHECK_FALSE(recognize_boundary_of_cross_polytope(fixtures::triangle_boundary()));
  const auto path = make_complex({{1, 2}, {2, 3}});
  CHECK_FALSE(recognize_boundary_of_simplex(path));
  CHECK_FALSE(recognize_boundary_of_cross_polytope(path));
  CHECK_FALSE(recognize_boundary_of_simplex(make_complex({{1, 2, 3}})));
  // Right facet count and sizes but one facet is not a transversal.
  CHECK_FALSE(recognize_boundary_of_cross_polytope(make_complex({{1, 2}, {1, 3}, {2, 4}, {1, 4}})));
  CHECK_FALSE(recognize_boundary_of_simplex(SimplicialComplex::void_complex()));
}

TEST_CASE("properties on random complexes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 7;
    const auto candidates = oracle::random_facets(rng, n, 1 + trial % 5, 4);
    const auto x = make_complex(candidates);
    const auto faces_oracle = oracle::closure(oracle::to_faces(candidates));

    CHECK(oracle::faces_of(x) == faces_oracle);
    CHECK(face_count(x) == faces_oracle.size());
    std::vector<oracle::Face> listed;
    for (const auto& f : faces(x))
      listed.emplace_back(f.vertices());
    CHECK(listed == std::vector<oracle::Face>(faces_oracle.begin(), faces_oracle.end()));

    const auto facets = x.facets();
    CHECK(make_complex(facets) == x);
    CHECK(oracle::facets_of_face_set(faces_oracle) == oracle::to_faces(facets));
    CHECK(euler_characteristic(x) == oracle::euler(faces_oracle));

    for (Vertex v : x.vertices()) {
      CHECK(oracle::faces_of(deletion(x, v)) == oracle::deletion(faces_oracle, v));
      CHECK(oracle::faces_of(link(x, v)) == oracle::link(faces_oracle, v));
    }

    // Relabel by an order-scrambling injection and compare.
    std::vector<Vertex> image;
    for (int i = 1; i <= n; ++i)
      image.push_back(static_cast<Vertex>(100 + 7 * i));
    std::shuffle(image.begin(), image.end(), rng);
    auto relabel = [&](const SimplicialComplex& c) {
      std::vector<Simplex> out;
      for (const auto& f : c.facets()) {
        std::vector<Vertex> vs;
        for (Vertex v : f)
          vs.push_back(image[v - 1]);
        out.emplace_back(std::move(vs));
      }
      return make_complex(out);
    };
    const auto y = relabel(x);
    for (Vertex v : x.vertices()) {
      CHECK(relabel(deletion(x, v)) == deletion(y, image[v - 1]));
      CHECK(relabel(link(x, v)) == link(y, image[v - 1]));
    }

    if (auto k = recognize_boundary_of_cross_polytope(x))
      CHECK(euler_characteristic(x) == 1 + ((*k - 1) % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("cross-polytope recognition implies the sphere Euler characteristic") {
  for (int k = 1; k <= 6; ++k) {
    const auto x = fixtures::cross_polytope(k);
    REQUIRE(recognize_boundary_of_cross_polytope(x) == k);
    CHECK(euler_characteristic(x) == 1 + ((k - 1) % 2 == 0 ? 1 : -1));
  }
}
