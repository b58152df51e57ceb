#include "collapse_lab/collapse.hpp"

#include "collapse_lab/errors.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>
#include <unordered_set>

namespace collapse_lab {

namespace {

using State = std::vector<VertexMask>; // lexicographically sorted antichain

struct Move {
  VertexMask eta;
  std::size_t carrier; // index into the state
};

bool move_less(const State& s, const Move& a, const Move& b) {
  if (a.eta.count() != b.eta.count())
    return a.eta.count() < b.eta.count();
  if (a.eta != b.eta)
    return lex_less(a.eta, b.eta);
  return lex_less(s[a.carrier], s[b.carrier]);
}

std::vector<Move> free_moves(const State& s, int d) {
  std::vector<Move> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<VertexMask> overlaps;
    overlaps.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i)
        overlaps.push_back(s[i] & s[j]);
    for_each_subset_up_to(s[i], d, [&](const VertexMask& eta) {
      for (const auto& o : overlaps)
        if (eta.subset_of(o))
          return;
      out.push_back({eta, i});
    });
  }
  std::sort(out.begin(), out.end(), [&](const Move& a, const Move& b) { return move_less(s, a, b); });
  return out;
}

// Faces of tau that survive are those missing some vertex of eta.
State apply_move(const State& s, const VertexMask& eta, std::size_t carrier) {
  State next;
  next.reserve(s.size() + static_cast<std::size_t>(eta.count()));
  for (std::size_t j = 0; j < s.size(); ++j)
    if (j != carrier)
      next.push_back(s[j]);
  eta.for_each([&](std::size_t v) {
    VertexMask f = s[carrier];
    f.reset(v);
    next.push_back(f);
  });
  if (next.empty())
    return next;
  reduce_to_antichain(next);
  return next;
}

std::optional<std::size_t> unique_carrier(const State& s, const VertexMask& eta) {
  std::optional<std::size_t> found;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (eta.subset_of(s[j])) {
      if (found)
        return std::nullopt;
      found = j;
    }
  }
  return found;
}

struct Key {
  std::vector<VertexMask> facets;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = k.facets.size();
    for (const auto& f : k.facets)
      h ^= f.hash() + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Relabel vertices by first occurrence along the sorted facets, then re-sort.
Key canonical_key(const State& s) {
  std::vector<int> relabel(kMaxVertices, -1);
  int next = 0;
  for (const auto& f : s)
    f.for_each([&](std::size_t v) {
      if (relabel[v] < 0)
        relabel[v] = next++;
    });
  Key k;
  k.facets.reserve(s.size());
  for (const auto& f : s) {
    VertexMask g;
    f.for_each([&](std::size_t v) { g.set(static_cast<std::size_t>(relabel[v])); });
    k.facets.push_back(g);
  }
  std::sort(k.facets.begin(), k.facets.end(), lex_less);
  return k;
}

class Search {
public:
  Search(int d, const SearchOptions& opt) : d_(d), opt_(opt), rng_(opt.seed) {}

  Verdict run(const State& s) { return visit(s); }
  const std::vector<std::pair<VertexMask, VertexMask>>& steps() const { return steps_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  Verdict visit(const State& s) {
    if (s.empty())
      return Verdict::collapsible;
    if (s.size() == 1) {
      steps_.emplace_back(VertexMask{}, s.front());
      return Verdict::collapsible;
    }
    if (++nodes_ > opt_.budget)
      return Verdict::undecided;
    Key key;
    if (opt_.memoize) {
      key = canonical_key(s);
      if (refuted_.count(key))
        return Verdict::not_collapsible;
    }
    std::vector<Move> moves = free_moves(s, d_);
    order(s, moves);
    for (const auto& m : moves) {
      steps_.emplace_back(m.eta, s[m.carrier]);
      const Verdict v = visit(apply_move(s, m.eta, m.carrier));
      if (v == Verdict::collapsible)
        return v;
      steps_.pop_back();
      if (v == Verdict::undecided)
        return v;
    }
    if (opt_.memoize)
      refuted_.insert(std::move(key));
    return Verdict::not_collapsible;
  }

  void order(const State& s, std::vector<Move>& moves) {
    switch (opt_.order) {
    case SearchOrder::canonical:
      break;
    case SearchOrder::reverse_canonical:
      std::reverse(moves.begin(), moves.end());
      break;
    case SearchOrder::largest_interval_first:
      std::stable_sort(moves.begin(), moves.end(), [&](const Move& a, const Move& b) {
        return s[a.carrier].count() - a.eta.count() > s[b.carrier].count() - b.eta.count();
      });
      break;
    case SearchOrder::shuffled:
      std::shuffle(moves.begin(), moves.end(), rng_);
      break;
    }
  }

  int d_;
  SearchOptions opt_;
  std::mt19937_64 rng_;
  std::uint64_t nodes_ = 0;
  std::unordered_set<Key, KeyHash> refuted_;
  std::vector<std::pair<VertexMask, VertexMask>> steps_;
};

void require_d(int d) {
  if (d < 0)
    throw InvalidInput("d must be non-negative");
}

CollapseStep to_step(const SimplicialComplex& x, const VertexMask& eta, const VertexMask& tau) {
  return {x.simplex_of(eta), x.simplex_of(tau)};
}

// Rank over GF(2) of the boundary map from the faces in `upper` to those in
// `lower` (all faces of one induced subcomplex, masks as small integers).
std::size_t boundary_rank(const std::vector<std::uint32_t>& upper,
                          const std::vector<std::uint32_t>& lower) {
  if (upper.empty() || lower.empty())
    return 0;
  const std::size_t words = (lower.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivots(lower.size());
  std::size_t rank = 0;
  for (std::uint32_t f : upper) {
    std::vector<std::uint64_t> row(words, 0);
    for (std::uint32_t w = f; w != 0; w &= w - 1) {
      const std::uint32_t g = f & ~(w & (~w + 1));
      const auto col = static_cast<std::size_t>(
          std::lower_bound(lower.begin(), lower.end(), g) - lower.begin());
      row[col / 64] ^= std::uint64_t{1} << (col % 64);
    }
    for (std::size_t wi = words; wi-- > 0;) {
      while (row[wi] != 0) {
        const std::size_t col = wi * 64 + 63 - static_cast<std::size_t>(std::countl_zero(row[wi]));
        if (pivots[col].empty()) {
          pivots[col] = std::move(row);
          ++rank;
          goto next;
        }
        for (std::size_t k = 0; k <= wi; ++k)
          row[k] ^= pivots[col][k];
      }
    }
  next:;
  }
  return rank;
}

} // namespace

int leray_lower_bound(const SimplicialComplex& x, std::size_t max_vertices) {
  const std::size_t n = x.vertex_count();
  if (x.is_void() || n > std::min<std::size_t>(max_vertices, 20))
    return 0;

  auto small = [](const VertexMask& m) {
    std::uint32_t out = 0;
    m.for_each([&](std::size_t i) { out |= std::uint32_t{1} << i; });
    return out;
  };
  std::vector<std::uint32_t> facets;
  for (const auto& f : x.facet_masks())
    facets.push_back(small(f));
  std::vector<std::uint32_t> all;
  for_each_face(x, [&](const VertexMask& m) { all.push_back(small(m)); });
  std::sort(all.begin(), all.end());

  // The empty subcomplex already has reduced H_{-1}.
  int best = 0;
  const std::uint32_t top = std::uint32_t{1} << n;
  std::vector<std::vector<std::uint32_t>> by_size(n + 2);
  for (std::uint32_t w = 1; w < top; ++w) {
    // A face spans a simplex; nothing to find there.
    if (std::binary_search(all.begin(), all.end(), w))
      continue;
    for (auto& b : by_size)
      b.clear();
    int dim = -1;
    for (std::uint32_t f : all)
      if ((f & ~w) == 0) {
        const int size = std::popcount(f);
        by_size[static_cast<std::size_t>(size)].push_back(f);
        dim = std::max(dim, size - 1);
      }
    if (dim < best)
      continue;
    // Reduced Betti number in dimension j uses faces of sizes j, j+1, j+2.
    std::size_t rank_above = 0;
    for (int j = dim; j >= best; --j) {
      const auto& faces_j = by_size[static_cast<std::size_t>(j + 1)];
      const std::size_t rank_j = boundary_rank(faces_j, by_size[static_cast<std::size_t>(j)]);
      if (faces_j.size() > rank_j + rank_above) {
        best = j + 1;
        break;
      }
      rank_above = rank_j;
    }
  }
  return best;
}

namespace {

} // namespace

std::vector<CollapseStep> free_faces(const SimplicialComplex& x, int d) {
  require_d(d);
  const State& s = x.facet_masks();
  std::vector<CollapseStep> out;
  for (const auto& m : free_moves(s, d))
    out.push_back(to_step(x, m.eta, s[m.carrier]));
  return out;
}

SimplicialComplex apply_collapse(const SimplicialComplex& x, const CollapseStep& step) {
  auto eta = x.mask_of(step.eta);
  auto tau = x.mask_of(step.tau);
  const State& s = x.facet_masks();
  std::optional<std::size_t> carrier;
  if (eta && tau)
    carrier = unique_carrier(s, *eta);
  if (!carrier || s[*carrier] != *tau)
    throw InvalidInput("(" + step.eta.to_string() + ", " + step.tau.to_string() +
                       ") is not a free pair of the complex");
  return SimplicialComplex::from_masks(x.vertices(), apply_move(s, *eta, *carrier));
}

GreedyOutcome greedy_collapse(const SimplicialComplex& x, int d) {
  require_d(d);
  GreedyOutcome out;
  out.certificate.d = d;
  State s = x.facet_masks();
  while (!s.empty()) {
    const auto moves = free_moves(s, d);
    if (moves.empty())
      break;
    const Move& m = moves.front();
    out.certificate.steps.push_back(to_step(x, m.eta, s[m.carrier]));
    s = apply_move(s, m.eta, m.carrier);
  }
  out.collapsed = s.empty();
  out.stuck = SimplicialComplex::from_masks(x.vertices(), s);
  return out;
}

Decision is_d_collapsible(const SimplicialComplex& x, int d, const SearchOptions& options) {
  require_d(d);
  if (options.budget == 0)
    throw InvalidInput("search budget must be positive");
  Decision out;
  if (options.homology_refutation && d < leray_lower_bound(x)) {
    out.verdict = Verdict::not_collapsible;
    return out;
  }
  Search search(d, options);
  out.verdict = search.run(x.facet_masks());
  out.nodes = search.nodes();
  if (out.verdict == Verdict::collapsible) {
    CollapseCertificate cert;
    cert.d = d;
    for (const auto& [eta, tau] : search.steps())
      cert.steps.push_back(to_step(x, eta, tau));
    out.certificate = std::move(cert);
  }
  return out;
}

CollapsibilityResult collapsibility(const SimplicialComplex& x, const SearchOptions& options) {
  CollapsibilityResult out;
  SearchOptions searching = options;
  searching.homology_refutation = false;
  const int start = options.homology_refutation ? leray_lower_bound(x) : 0;
  for (int d = start;; ++d) {
    Decision dec = is_d_collapsible(x, d, searching);
    out.nodes += dec.nodes;
    if (dec.verdict == Verdict::collapsible) {
      out.verdict = Verdict::collapsible;
      out.value = d;
      out.certificate = std::move(dec.certificate);
      return out;
    }
    if (dec.verdict == Verdict::undecided) {
      out.undecided_at = d;
      return out;
    }
  }
}

bool verify_certificate(const SimplicialComplex& x, const CollapseCertificate& cert) {
  if (cert.d < 0)
    return false;
  State s = x.facet_masks();
  for (const auto& step : cert.steps) {
    if (static_cast<int>(step.eta.size()) > cert.d)
      return false;
    auto eta = x.mask_of(step.eta);
    auto tau = x.mask_of(step.tau);
    if (!eta || !tau)
      return false;
    auto carrier = unique_carrier(s, *eta);
    if (!carrier || s[*carrier] != *tau)
      return false;
    s = apply_move(s, *eta, *carrier);
  }
  return s.empty();
}

} // namespace collapse_lab
