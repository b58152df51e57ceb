#pragma once

#include "collapse_lab/complex.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace collapse_lab {

/// One elementary collapse: remove every face σ with eta ⊆ σ ⊆ tau, where
/// tau is the only facet containing eta.
struct CollapseStep {
  Simplex eta;
  Simplex tau;
  bool operator==(const CollapseStep&) const = default;
};

/// A sequence of elementary d-collapses that ends at the void complex.
struct CollapseCertificate {
  int d = 0;
  std::vector<CollapseStep> steps;
};

/// Every (eta, tau) with |eta| ≤ d and tau the unique facet containing eta,
/// ordered by |eta| and then lexicographically. Empty for the void complex.
std::vector<CollapseStep> free_faces(const SimplicialComplex& x, int d);

/// Removes the closed interval [eta, tau]. Throws InvalidInput unless tau is
/// the unique facet of X containing eta.
SimplicialComplex apply_collapse(const SimplicialComplex& x, const CollapseStep& step);

struct GreedyOutcome {
  bool collapsed = false;
  /// The steps taken; a full certificate when `collapsed`.
  CollapseCertificate certificate;
  /// The complex where no free face of size ≤ d was left.
  SimplicialComplex stuck;
};

/// Applies the first free face until none is left. Getting stuck says
/// nothing about d-collapsibility.
GreedyOutcome greedy_collapse(const SimplicialComplex& x, int d);

enum class Verdict { collapsible, not_collapsible, undecided };

enum class SearchOrder {
  /// Moves removing the most faces (largest |tau| - |eta|) first.
  largest_interval_first,
  /// The free_faces order.
  canonical,
  reverse_canonical,
  /// Uniformly shuffled per node from `seed`.
  shuffled,
};

struct SearchOptions {
  /// Maximum number of expanded search states before giving up.
  std::uint64_t budget = 10'000'000;
  SearchOrder order = SearchOrder::largest_interval_first;
  std::uint64_t seed = 0;
  /// Remember refuted states (up to vertex relabelling).
  bool memoize = true;
  /// Reject d below leray_lower_bound before searching.
  bool homology_refutation = true;
};

struct Decision {
  Verdict verdict = Verdict::undecided;
  /// Present exactly when the verdict is `collapsible`.
  std::optional<CollapseCertificate> certificate;
  std::uint64_t nodes = 0;
};

/// 1 + the largest j with nonzero reduced GF(2) homology H_j on some induced
/// subcomplex, so X is not d-collapsible for any d below it. Only computed up
/// to `max_vertices` vertices; larger complexes get 0.
int leray_lower_bound(const SimplicialComplex& x, std::size_t max_vertices = 12);

/// Exact decision by depth-first search over free-face choices.
Decision is_d_collapsible(const SimplicialComplex& x, int d, const SearchOptions& options = {});

struct CollapsibilityResult {
  Verdict verdict = Verdict::undecided;
  /// The least d for which X is d-collapsible, when decided.
  std::optional<int> value;
  std::optional<CollapseCertificate> certificate;
  /// When undecided: the d at which the budget ran out.
  int undecided_at = -1;
  std::uint64_t nodes = 0;
};

/// Tries d = 0, 1, ... until the search says yes or runs out of budget. The
/// budget applies to each value of d separately.
CollapsibilityResult collapsibility(const SimplicialComplex& x, const SearchOptions& options = {});

/// Replays the certificate, checking |eta| ≤ d and freeness at every step,
/// and accepts iff the final state is void.
bool verify_certificate(const SimplicialComplex& x, const CollapseCertificate& cert);

} // namespace collapse_lab
