#include "collapse_lab/extremal.hpp"

#include "collapse_lab/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace collapse_lab {

namespace {

std::size_t intersection_size(const Simplex& a, const Simplex& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

bool is_transversal(const Simplex& s, const std::vector<Simplex>& parts) {
  std::size_t total = 0;
  for (const auto& part : parts) {
    if (intersection_size(s, part) != 1)
      return false;
    ++total;
  }
  return total == s.size();
}

struct PairMasks {
  VertexMask a;
  VertexMask b;
};

// Longest-sequence search. Appending (A, B) needs the condition between every
// earlier A' and the new B; the future only depends on the set of A's used so
// far, so the best continuation is memoised per such set.
class SystemSearch {
public:
  SystemSearch(std::vector<PairMasks> pairs, Lemma lemma, int t, std::uint64_t budget)
      : pairs_(std::move(pairs)), lemma_(lemma), t_(t), budget_(budget) {}

  bool crosses(const VertexMask& earlier_a, const VertexMask& later_b) const {
    const int c = (earlier_a & later_b).count();
    return lemma_ == Lemma::furedi ? c > t_ : c > 0;
  }

  // Best continuation length after `used`; -1 when the budget ran out.
  int best_from(const std::vector<VertexMask>& used) {
    auto it = memo_.find(used);
    if (it != memo_.end())
      return it->second.first;
    if (++nodes_ > budget_)
      return -1;
    int best = 0;
    std::size_t choice = pairs_.size();
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const auto& cand = pairs_[i];
      if (std::find(used.begin(), used.end(), cand.a) != used.end())
        continue;
      const bool ok = std::all_of(used.begin(), used.end(),
                                  [&](const VertexMask& a) { return crosses(a, cand.b); });
      if (!ok)
        continue;
      std::vector<VertexMask> next = used;
      next.insert(std::upper_bound(next.begin(), next.end(), cand.a), cand.a);
      const int sub = best_from(next);
      if (sub < 0)
        return -1;
      if (sub + 1 > best) {
        best = sub + 1;
        choice = i;
      }
    }
    memo_.emplace(used, std::make_pair(best, choice));
    return best;
  }

  std::vector<PairMasks> reconstruct(std::vector<VertexMask> used) const {
    std::vector<PairMasks> out;
    while (true) {
      auto it = memo_.find(used);
      if (it == memo_.end() || it->second.second >= pairs_.size())
        return out;
      const auto& pr = pairs_[it->second.second];
      out.push_back(pr);
      used.insert(std::upper_bound(used.begin(), used.end(), pr.a), pr.a);
    }
  }

  std::uint64_t nodes() const { return nodes_; }

private:
  std::vector<PairMasks> pairs_;
  Lemma lemma_;
  int t_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::map<std::vector<VertexMask>, std::pair<int, std::size_t>> memo_;
};

Simplex labels_of(const VertexMask& m) {
  std::vector<Vertex> vs;
  m.for_each([&](std::size_t i) { vs.push_back(static_cast<Vertex>(i + 1)); });
  return Simplex(std::move(vs));
}

} // namespace

std::string_view lemma_name(Lemma lemma) {
  switch (lemma) {
  case Lemma::frankl_kalai:
    return "frankl-kalai";
  case Lemma::furedi:
    return "furedi";
  case Lemma::lnp:
    return "lnp";
  }
  return "unknown";
}

std::optional<Lemma> parse_lemma(std::string_view name) {
  std::string s(name);
  std::replace(s.begin(), s.end(), '_', '-');
  if (s == "frankl-kalai")
    return Lemma::frankl_kalai;
  if (s == "furedi")
    return Lemma::furedi;
  if (s == "lnp")
    return Lemma::lnp;
  return std::nullopt;
}

bool check_system(const SetPairSystem& sys, Lemma lemma) {
  const std::size_t k = sys.a.size();
  if (sys.b.size() != k)
    return false;
  const std::size_t threshold = lemma == Lemma::furedi ? static_cast<std::size_t>(sys.t) : 0;
  if (lemma == Lemma::furedi && sys.t < 0)
    return false;
  if (lemma == Lemma::lnp) {
    if (!sys.partition || sys.partition->empty())
      return false;
    for (std::size_t i = 0; i < k; ++i)
      if (!is_transversal(sys.a[i], *sys.partition) || !is_transversal(sys.b[i], *sys.partition))
        return false;
  } else {
    for (std::size_t i = 0; i < k; ++i)
      if (static_cast<int>(sys.a[i].size()) > sys.r || static_cast<int>(sys.b[i].size()) > sys.p)
        return false;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (intersection_size(sys.a[i], sys.b[i]) > threshold)
      return false;
    for (std::size_t j = i + 1; j < k; ++j)
      if (intersection_size(sys.a[i], sys.b[j]) <= threshold)
        return false;
  }
  return true;
}

std::int64_t lemma_bound(Lemma lemma, int r, int p, int t, int parts) {
  switch (lemma) {
  case Lemma::frankl_kalai:
    if (r < 0 || p < 0)
      throw InvalidInput("frankl-kalai requires r, p >= 0");
    return binomial(r + p, r);
  case Lemma::furedi:
    if (t < 0 || t > std::min(r, p))
      throw InvalidInput("furedi requires 0 <= t <= min(r,p) (got r=" + std::to_string(r) +
                         ", p=" + std::to_string(p) + ", t=" + std::to_string(t) + ")");
    return binomial(r + p - 2 * t, r - t);
  case Lemma::lnp:
    if (parts < 1 || parts > 62)
      throw InvalidInput("lnp requires between 1 and 62 parts");
    return std::int64_t{1} << parts;
  }
  return 0;
}

SetPairSystem frankl_kalai_witness(int r, int p) {
  if (r < 1 || p < 1)
    throw InvalidInput("frankl_kalai_witness requires r, p >= 1");
  if (r + p > 20)
    throw InvalidInput("frankl_kalai_witness is limited to r+p <= 20");
  SetPairSystem sys;
  sys.r = r;
  sys.p = p;
  const std::size_t n = static_cast<std::size_t>(r + p);
  const VertexMask all = VertexMask::first_n(n);
  for_each_k_subset(all, r, [&](const VertexMask& a) {
    sys.a.push_back(labels_of(a));
    sys.b.push_back(labels_of(all - a));
  });
  return sys;
}

SystemSearchResult max_system_search(const SystemSearchParams& params) {
  SystemSearchResult out;
  std::vector<PairMasks> pairs;
  std::optional<std::vector<Simplex>> partition;
  // The first pair of any system can be moved to a canonical position by a
  // relabelling of the ground set, so only canonical first pairs are tried.
  std::vector<PairMasks> first_pairs;

  if (params.lemma == Lemma::lnp) {
    std::vector<int> sizes = params.part_sizes;
    if (sizes.empty())
      sizes.assign(static_cast<std::size_t>(std::max(params.r, 0)), 2);
    if (sizes.empty())
      throw InvalidInput("lnp needs at least one part");
    int total = 0;
    for (int s : sizes) {
      if (s < 1)
        throw InvalidInput("every part must be non-empty");
      total += s;
    }
    if (total > 10)
      throw InvalidInput("exhaustive search is limited to ground sets of at most 10 elements");
    out.bound = lemma_bound(Lemma::lnp, 0, 0, 0, static_cast<int>(sizes.size()));
    std::vector<VertexMask> part_masks;
    partition.emplace();
    int next = 0;
    for (int s : sizes) {
      VertexMask m;
      for (int i = 0; i < s; ++i)
        m.set(static_cast<std::size_t>(next + i));
      next += s;
      part_masks.push_back(m);
      partition->push_back(labels_of(m));
    }
    // All transversals, then all disjoint pairs of them.
    std::vector<VertexMask> transversals{VertexMask{}};
    for (const auto& part : part_masks) {
      std::vector<VertexMask> grown;
      for (const auto& t : transversals)
        part.for_each([&](std::size_t v) {
          VertexMask g = t;
          g.set(v);
          grown.push_back(g);
        });
      transversals = std::move(grown);
    }
    for (const auto& a : transversals)
      for (const auto& b : transversals)
        if (!a.intersects(b))
          pairs.push_back({a, b});
    // Canonical first pair: the first two members of every part.
    bool possible = std::all_of(sizes.begin(), sizes.end(), [](int s) { return s >= 2; });
    if (possible) {
      PairMasks first;
      for (const auto& part : part_masks) {
        const auto pos = part.positions();
        first.a.set(pos[0]);
        first.b.set(pos[1]);
      }
      first_pairs.push_back(first);
    }
  } else {
    const int r = params.r;
    const int p = params.p;
    const int t = params.lemma == Lemma::furedi ? params.t : 0;
    const int g = params.ground_size;
    if (r < 0 || p < 0)
      throw InvalidInput("r and p must be non-negative");
    if (g < 0 || g > 10)
      throw InvalidInput("exhaustive search is limited to ground sets of at most 10 elements");
    out.bound = lemma_bound(params.lemma, r, p, t, 0);
    const std::size_t n = static_cast<std::size_t>(g);
    const VertexMask ground = VertexMask::first_n(n);
    // Enlarging A_i outside B_i keeps every hypothesis, so A_i ∖ B_i can be
    // taken as large as the size limit allows.
    for (int bs = 0; bs <= std::min(p, g); ++bs) {
      for_each_k_subset(ground, bs, [&](const VertexMask& b) {
        for (int ss = 0; ss <= std::min({t, r, bs}); ++ss) {
          const int es = std::min(r - ss, g - bs);
          for_each_k_subset(b, ss, [&](const VertexMask& s) {
            for_each_k_subset(ground - b, es, [&](const VertexMask& e) { pairs.push_back({s | e, b}); });
          });
        }
      });
      for (int ss = 0; ss <= std::min({t, r, bs}); ++ss) {
        const int es = std::min(r - ss, g - bs);
        // A = {0..es+ss-1}, B = {es..es+bs-1}, sharing ss elements.
        PairMasks first;
        for (int i = 0; i < es + ss; ++i)
          first.a.set(static_cast<std::size_t>(i));
        for (int i = es; i < es + bs; ++i)
          first.b.set(static_cast<std::size_t>(i));
        first_pairs.push_back(first);
      }
    }
  }

  SystemSearch search(pairs, params.lemma, params.t, params.budget);
  int best = 0;
  std::vector<PairMasks> best_seq;
  bool decided = true;
  for (const auto& first : first_pairs) {
    const int sub = search.best_from({first.a});
    if (sub < 0) {
      decided = false;
      break;
    }
    if (sub + 1 > best) {
      best = sub + 1;
      best_seq = {first};
      auto rest = search.reconstruct({first.a});
      best_seq.insert(best_seq.end(), rest.begin(), rest.end());
    }
  }
  out.decided = decided;
  out.k_found = best;
  out.nodes = search.nodes();
  out.witness.r = params.r;
  out.witness.p = params.p;
  out.witness.t = params.t;
  out.witness.partition = partition;
  for (const auto& pr : best_seq) {
    out.witness.a.push_back(labels_of(pr.a));
    out.witness.b.push_back(labels_of(pr.b));
  }
  return out;
}

SetPairSystem paired_system(const Hypergraph& h, const KgWitness& w, int r) {
  SetPairSystem sys;
  sys.r = r;
  sys.p = r;
  const auto& edges = h.edges();
  const std::size_t k = w.v.size();
  for (std::size_t i = 0; i < k; ++i) {
    sys.a.push_back(edges.at(w.v[i]));
    sys.b.push_back(edges.at(w.u[i]));
  }
  for (std::size_t i = k; i-- > 0;) {
    sys.a.push_back(edges.at(w.u[i]));
    sys.b.push_back(edges.at(w.v[i]));
  }
  return sys;
}

SetPairSystem cover_system(const Hypergraph& h, const SxWitness& w,
                           const std::vector<std::pair<Simplex, CoverWitness>>& facet_covers, int r,
                           int p) {
  SetPairSystem sys;
  sys.r = r;
  sys.p = p;
  for (Vertex v : w.vertices)
    sys.a.push_back(h.edges().at(v));
  sys.a.emplace_back();
  for (const auto& f : w.facets) {
    auto it = std::find_if(facet_covers.begin(), facet_covers.end(),
                           [&](const auto& fc) { return fc.first == f; });
    if (it == facet_covers.end())
      throw InvalidInput("witness facet " + f.to_string() + " has no recorded cover");
    sys.b.push_back(it->second.cover_set);
  }
  return sys;
}

namespace {

constexpr std::int64_t kMaxSearchedDimension = 3;
constexpr std::int64_t kMaxCrossPolytopeDimension = 16;

void confirm_sharpness(const SimplicialComplex& x, ExtremalCheck& check,
                       const SearchOptions& options) {
  const int d = static_cast<int>(check.expected_dimension);
  if (d > kMaxSearchedDimension)
    return;
  if (d >= 1) {
    const Decision below = is_d_collapsible(x, d - 1, options);
    if (below.verdict != Verdict::undecided)
      check.below_bound_refuted = below.verdict == Verdict::not_collapsible;
  }
  const Decision at = is_d_collapsible(x, d, options);
  if (at.verdict != Verdict::undecided)
    check.bound_attained = at.verdict == Verdict::collapsible;
}

void finish(ExtremalCheck& check) {
  check.ok = check.recognized_dimension == check.expected_dimension &&
             check.below_bound_refuted.value_or(true) && check.bound_attained.value_or(true);
}

ExtremalCheck make_check(std::string family, std::string shape, int r, int p, int t) {
  ExtremalCheck c;
  c.family = std::move(family);
  c.shape = std::move(shape);
  c.r = r;
  c.p = p;
  c.t = t;
  return c;
}

} // namespace

ExtremalReport verify_extremal_complexes(int r, int p, int t, const SearchOptions& options) {
  ExtremalReport report;

  ExtremalCheck cov = make_check("cov_h1", "simplex_boundary", r, p, t);
  if (r < 1 || p < 1 || t < 0 || t > std::min(r, p) - 1) {
    cov.skipped = true;
    cov.note = "requires r >= 1, p >= 1 and 0 <= t <= min(r,p)-1";
  } else {
    cov.expected_dimension = cov_collapsibility_bound(r, p, t);
    if (cov.expected_dimension + 1 > static_cast<std::int64_t>(kMaxVertices)) {
      cov.skipped = true;
      cov.note = "family has more edges than the complex size limit";
    } else {
      const Hypergraph h = family_h1(r, p, t);
      cov.edge_count = h.edge_count();
      const SimplicialComplex x = cov_complex(h, p, t + 1);
      cov.recognized_dimension = recognize_boundary_of_simplex(x);
      confirm_sharpness(x, cov, options);
      finish(cov);
    }
  }
  report.checks.push_back(cov);

  ExtremalCheck inter = make_check("int_h2", "cross_polytope_boundary", r, p, t);
  if (r < 1 || t < 0 || t > r - 1) {
    inter.skipped = true;
    inter.note = "requires r >= 1 and 0 <= t <= r-1";
  } else {
    inter.expected_dimension = int_collapsibility_bound(r, t);
    if (inter.expected_dimension > kMaxCrossPolytopeDimension) {
      inter.skipped = true;
      inter.note = "cross-polytope has too many facets to enumerate";
    } else {
      const Hypergraph h = family_h2(r, t);
      inter.edge_count = h.edge_count();
      const SimplicialComplex x = int_complex(h, t + 1);
      inter.recognized_dimension = recognize_boundary_of_cross_polytope(x);
      confirm_sharpness(x, inter, options);
      finish(inter);
    }
  }
  report.checks.push_back(inter);

  ExtremalCheck part = make_check("int_rpartite", "cross_polytope_boundary", r, p, t);
  if (r < 1) {
    part.skipped = true;
    part.note = "requires r >= 1";
  } else if (r - 1 > 4) {
    // 2^(2^(r-1)) facets.
    part.skipped = true;
    part.expected_dimension = rpartite_int_collapsibility_bound(std::min(r, 62));
    part.note = "cross-polytope has too many facets to enumerate";
  } else {
    part.expected_dimension = rpartite_int_collapsibility_bound(r);
    const Hypergraph h = complete_r_partite(std::vector<int>(static_cast<std::size_t>(r), 2));
    part.edge_count = h.edge_count();
    const SimplicialComplex x = int_complex(h, 1);
    part.recognized_dimension = recognize_boundary_of_cross_polytope(x);
    confirm_sharpness(x, part, options);
    finish(part);
  }
  report.checks.push_back(part);

  report.ok = std::all_of(report.checks.begin(), report.checks.end(),
                          [](const ExtremalCheck& c) { return c.skipped || c.ok; });
  return report;
}

} // namespace collapse_lab
