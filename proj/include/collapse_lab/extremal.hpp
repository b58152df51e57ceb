#pragma once

#include "collapse_lab/collapse.hpp"
#include "collapse_lab/complex.hpp"
#include "collapse_lab/hypergraph.hpp"
#include "collapse_lab/mes.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace collapse_lab {

/// The three cross-intersecting set-pair lemmas.
enum class Lemma {
  /// |A_i| ≤ r, |B_i| ≤ p, A_i ∩ B_i = ∅, A_i ∩ B_j ≠ ∅ (i < j); k ≤ C(r+p, r).
  frankl_kalai,
  /// |A_i| ≤ r, |B_i| ≤ p, |A_i ∩ B_i| ≤ t, |A_i ∩ B_j| > t (i < j); k ≤ C(r+p-2t, r-t).
  furedi,
  /// A_i, B_i transversals of an r-part partition, A_i ∩ B_i = ∅,
  /// A_i ∩ B_j ≠ ∅ (i < j); k ≤ 2^r.
  lnp,
};

std::string_view lemma_name(Lemma lemma);
/// Accepts "frankl-kalai", "furedi" and "lnp" (underscores also accepted).
std::optional<Lemma> parse_lemma(std::string_view name);

struct SetPairSystem {
  std::vector<Simplex> a;
  std::vector<Simplex> b;
  int r = 0;
  int p = 0;
  int t = 0;
  /// Required by the lnp lemma.
  std::optional<std::vector<Simplex>> partition;
};

/// True iff every hypothesis of `lemma` holds for the system.
bool check_system(const SetPairSystem& sys, Lemma lemma);

/// Closed-form bound of the lemma; `parts` is the number of parts for lnp.
std::int64_t lemma_bound(Lemma lemma, int r, int p, int t, int parts);

/// A_i = the r-subsets of {1..r+p} in lexicographic order, B_i = complements.
SetPairSystem frankl_kalai_witness(int r, int p);

struct SystemSearchParams {
  Lemma lemma = Lemma::frankl_kalai;
  int r = 1;
  int p = 1;
  int t = 0;
  /// Ground set {1..ground_size} for frankl_kalai and furedi.
  int ground_size = 0;
  /// Consecutive parts for lnp; defaults to r parts of size 2.
  std::vector<int> part_sizes;
  std::uint64_t budget = 10'000'000;
};

struct SystemSearchResult {
  bool decided = false;
  /// Longest system found (the maximum when decided).
  int k_found = 0;
  std::int64_t bound = 0;
  SetPairSystem witness;
  std::uint64_t nodes = 0;
};

/// Exact maximum length of a system satisfying the lemma's hypotheses over the
/// fixed ground set. Throws InvalidInput on parameters the lemma excludes or
/// ground sets above 10 elements.
SystemSearchResult max_system_search(const SystemSearchParams& params);

/// For k(G) witnesses of the disjointness graph of H (graph vertices are edge
/// indices): A-list (A₁..A_k, B_k..B₁) against B-list (B₁..B_k, A_k..A₁).
SetPairSystem paired_system(const Hypergraph& h, const KgWitness& w, int r);

/// For an S(Cov_{H,p}) witness whose facets carry cover sets: A-list
/// (A₁..A_k, ∅) against the covers (C₁..C_{k+1}).
SetPairSystem cover_system(const Hypergraph& h, const SxWitness& w,
                           const std::vector<std::pair<Simplex, CoverWitness>>& facet_covers, int r,
                           int p);

struct ExtremalCheck {
  /// "cov_h1", "int_h2" or "int_rpartite".
  std::string family;
  /// "simplex_boundary" or "cross_polytope_boundary".
  std::string shape;
  int r = 0;
  int p = 0;
  int t = 0;
  std::size_t edge_count = 0;
  std::int64_t expected_dimension = 0;
  std::optional<int> recognized_dimension;
  /// Set when the exact search ran: X is not (d-1)-collapsible.
  std::optional<bool> below_bound_refuted;
  /// Set when the exact search ran: X is d-collapsible.
  std::optional<bool> bound_attained;
  bool skipped = false;
  std::string note;
  bool ok = false;
};

struct ExtremalReport {
  std::vector<ExtremalCheck> checks;
  bool ok = false;
};

/// Builds the extremal hypergraphs for (r, p, t) and checks the shape of
/// their complexes; sharpness is confirmed by exact search up to dimension 3.
ExtremalReport verify_extremal_complexes(int r, int p, int t, const SearchOptions& options = {});

} // namespace collapse_lab
