#include "collapse_lab/errors.hpp"
#include "collapse_lab/extremal.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace collapse_lab;

namespace {

SystemSearchResult search(Lemma lemma, int r, int p, int t, int ground,
                          std::vector<int> parts = {}) {
  SystemSearchParams params;
  params.lemma = lemma;
  params.r = r;
  params.p = p;
  params.t = t;
  params.ground_size = ground;
  params.part_sizes = std::move(parts);
  return max_system_search(params);
}

} // namespace

TEST_CASE("check_system") {
  SetPairSystem fk{{{1}, {2}}, {{2}, {1}}, 1, 1, 0, std::nullopt};
  CHECK(check_system(fk, Lemma::frankl_kalai));
  SetPairSystem big = fk;
  big.a[0] = {1, 3};
  CHECK_FALSE(check_system(big, Lemma::frankl_kalai));

  SetPairSystem lnp = fk;
  lnp.partition = std::vector<Simplex>{{1, 2}};
  CHECK(check_system(lnp, Lemma::lnp));
  CHECK_FALSE(check_system(fk, Lemma::lnp));

  // A_1 misses B_2.
  SetPairSystem broken{{{1}, {2}}, {{2}, {3}}, 1, 1, 0, std::nullopt};
  CHECK_FALSE(check_system(broken, Lemma::frankl_kalai));

  SetPairSystem furedi{{{1, 2}, {1, 3}}, {{1, 3}, {1, 2}}, 2, 2, 1, std::nullopt};
  CHECK(check_system(furedi, Lemma::furedi));
  CHECK_FALSE(check_system(furedi, Lemma::frankl_kalai));
}

TEST_CASE("frankl-kalai witness") {
  CHECK(frankl_kalai_witness(1, 1).a.size() == 2);
  const auto w = frankl_kalai_witness(2, 1);
  CHECK(w.a == std::vector<Simplex>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(w.b == std::vector<Simplex>{{3}, {2}, {1}});
  CHECK(frankl_kalai_witness(2, 2).a.size() == 6);
  for (int r = 1; r <= 6; ++r)
    for (int p = 1; r + p <= 7; ++p) {
      const auto sys = frankl_kalai_witness(r, p);
      CHECK(check_system(sys, Lemma::frankl_kalai));
      CHECK(static_cast<std::int64_t>(sys.a.size()) == lemma_bound(Lemma::frankl_kalai, r, p, 0, 0));
    }
  CHECK_THROWS_AS(frankl_kalai_witness(0, 1), InvalidInput);
}

TEST_CASE("lemma names") {
  CHECK(parse_lemma("frankl-kalai") == Lemma::frankl_kalai);
  CHECK(parse_lemma("frankl_kalai") == Lemma::frankl_kalai);
  CHECK(parse_lemma("lnp") == Lemma::lnp);
  CHECK_FALSE(parse_lemma("kalai"));
  CHECK(lemma_name(Lemma::furedi) == "furedi");
  CHECK(lemma_bound(Lemma::furedi, 3, 3, 1, 0) == 6);
  CHECK(lemma_bound(Lemma::lnp, 0, 0, 0, 3) == 8);
}

TEST_CASE("exhaustive system search examples") {
  const auto a = search(Lemma::frankl_kalai, 1, 1, 0, 3);
  CHECK(a.decided);
  CHECK(a.k_found == 2);
  CHECK(a.bound == 2);
  CHECK(check_system(a.witness, Lemma::frankl_kalai));

  CHECK(search(Lemma::frankl_kalai, 2, 1, 0, 4).k_found == 3);
  const auto l = search(Lemma::lnp, 1, 1, 0, 0, {2});
  CHECK(l.k_found == 2);
  CHECK(check_system(l.witness, Lemma::lnp));

  CHECK(search(Lemma::lnp, 1, 1, 0, 0, {1, 2}).k_found == 0);
  CHECK_THROWS_AS(search(Lemma::frankl_kalai, 1, 1, 0, 11), InvalidInput);
  CHECK_THROWS_AS(search(Lemma::furedi, 1, 1, 2, 4), InvalidInput);
}

TEST_CASE("system search agrees with plain enumeration") {
  struct Case {
    Lemma lemma;
    int r, p, t, n;
  };
  for (const Case& c : {Case{Lemma::frankl_kalai, 1, 1, 0, 3}, Case{Lemma::frankl_kalai, 1, 1, 0, 4},
                        Case{Lemma::frankl_kalai, 2, 1, 0, 3}, Case{Lemma::frankl_kalai, 2, 1, 0, 4},
                        Case{Lemma::frankl_kalai, 1, 2, 0, 4}, Case{Lemma::furedi, 2, 2, 1, 4},
                        Case{Lemma::furedi, 2, 1, 1, 4}, Case{Lemma::furedi, 1, 1, 1, 3}}) {
    CAPTURE(c.r);
    CAPTURE(c.p);
    CAPTURE(c.t);
    CAPTURE(c.n);
    const auto got = search(c.lemma, c.r, c.p, c.t, c.n);
    CHECK(got.decided);
    CHECK(got.k_found == oracle::set_pair_max(oracle::bounded_pairs(c.r, c.p, c.n),
                                              static_cast<std::size_t>(c.t)));
    CHECK(got.k_found <= got.bound);
    CHECK(static_cast<int>(got.witness.a.size()) == got.k_found);
    CHECK(check_system(got.witness, c.lemma));
  }
  for (const auto& parts : {std::vector<int>{2}, {3}, {2, 2}, {2, 3}, {3, 3}}) {
    const auto got = search(Lemma::lnp, static_cast<int>(parts.size()), 0, 0, 0, parts);
    CHECK(got.k_found == oracle::set_pair_max(oracle::transversal_pairs(parts), 0));
    CHECK(got.k_found <= got.bound);
    CHECK(check_system(got.witness, Lemma::lnp));
  }
}

TEST_CASE("searched maxima never exceed the closed-form bounds") {
  for (int r = 1; r <= 3; ++r)
    for (int p = 1; p <= 3 && r + p <= 5; ++p)
      for (int g = r + p; g <= std::min(r + p + 1, 6); ++g) {
        const auto fk = search(Lemma::frankl_kalai, r, p, 0, g);
        CHECK(fk.decided);
        CHECK(fk.k_found <= fk.bound);
        if (g >= r + p)
          CHECK(fk.k_found == fk.bound);
        for (int t = 1; t < std::min(r, p); ++t) {
          const auto fu = search(Lemma::furedi, r, p, t, g);
          CHECK(fu.k_found <= fu.bound);
        }
      }
  for (int r = 1; r <= 3; ++r) {
    const auto l = search(Lemma::lnp, r, 0, 0, 0);
    CHECK(l.decided);
    CHECK(l.k_found == l.bound);
  }
}

TEST_CASE("proof constructions give valid set-pair systems") {
  std::mt19937_64 rng(101);
  int paired = 0;
  int covered = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int rank = 1 + trial % 3;
    const auto h = oracle::random_hypergraph(rng, 3 + trial % 5, rank, 8);
    const int r = h.rank();

    const auto g = disjointness_graph(h);
    const auto k = k_graph(g);
    const auto sys = paired_system(h, k.witness, r);
    CHECK(check_system(sys, Lemma::frankl_kalai));
    CHECK(static_cast<std::int64_t>(sys.a.size()) <= 2 * int_collapsibility_bound(r));
    paired += k.value > 0;

    for (int p = 1; p <= 2; ++p) {
      const auto x = cov_complex(h, p);
      const auto w = d_prime(x);
      const auto cs = cover_system(h, w.witness, cov_complex_witnesses(h, p), r, p);
      CHECK(check_system(cs, Lemma::frankl_kalai));
      CHECK(static_cast<std::int64_t>(cs.a.size()) <= cov_collapsibility_bound(r, p) + 1);
      covered += w.value > 0;
    }
  }
  CHECK(paired > 50);
  CHECK(covered > 50);
}

TEST_CASE("extremal families") {
  for (auto [r, t] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 0}, std::pair{3, 2}}) {
    for (int p = t + 1; p <= t + 2; ++p) {
      CAPTURE(r);
      CAPTURE(p);
      CAPTURE(t);
      const auto rep = verify_extremal_complexes(r, p, t);
      CHECK(rep.ok);
      REQUIRE(rep.checks.size() == 3);
      for (const auto& c : rep.checks)
        CHECK((c.skipped || c.ok));
      CHECK_FALSE(rep.checks[0].skipped);
      CHECK(rep.checks[0].recognized_dimension == cov_collapsibility_bound(r, p, t));
      CHECK(rep.checks[1].recognized_dimension == int_collapsibility_bound(r, t));
      CHECK(rep.checks[2].recognized_dimension == rpartite_int_collapsibility_bound(r));
    }
  }
  const auto base = verify_extremal_complexes(2, 1, 0);
  CHECK(base.checks[0].recognized_dimension == 2);
  CHECK(base.checks[0].bound_attained == true);
  CHECK(base.checks[0].below_bound_refuted == true);
  CHECK(base.checks[1].recognized_dimension == 3);
  CHECK(base.checks[1].bound_attained == true);
  CHECK(base.checks[1].below_bound_refuted == true);

  const auto singles = verify_extremal_complexes(1, 2, 0);
  CHECK(singles.checks[0].recognized_dimension == 2);
  CHECK(singles.ok);

  const auto two_points = verify_extremal_complexes(2, 2, 1);
  CHECK(two_points.checks[1].recognized_dimension == 1);
}
