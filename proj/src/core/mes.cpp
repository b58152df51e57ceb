#include "collapse_lab/mes.hpp"

#include "collapse_lab/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace collapse_lab {

namespace {

void require_same_complex(const SimplicialComplex& x, const FacetOrdering& ordering) {
  if (ordering.vertices() != x.vertices())
    throw InvalidInput("facet ordering was built for a different complex");
}

struct MaskSequence {
  std::size_t first_index = 0; // 0-based
  std::vector<std::size_t> positions;
  std::vector<bool> is_new;
  VertexMask support;
};

// The recursion over j < i: reuse the earliest-index earlier vertex missing
// from σ_j if there is one, otherwise take the least vertex of σ ∖ σ_j.
MaskSequence exclusion_sequence(const std::vector<VertexMask>& entries, const VertexMask& face) {
  MaskSequence out;
  std::size_t i = 0;
  while (i < entries.size() && !face.subset_of(entries[i]))
    ++i;
  out.first_index = i;
  out.positions.reserve(i);
  out.is_new.reserve(i);
  for (std::size_t j = 0; j < i; ++j) {
    const VertexMask& sj = entries[j];
    bool reused = false;
    for (std::size_t k = 0; k < out.positions.size(); ++k) {
      if (!sj.test(out.positions[k])) {
        out.positions.push_back(out.positions[k]);
        out.is_new.push_back(false);
        reused = true;
        break;
      }
    }
    if (!reused) {
      const std::size_t v = (face - sj).lowest();
      out.positions.push_back(v);
      out.is_new.push_back(true);
      out.support.set(v);
    }
  }
  return out;
}

int support_size(const std::vector<VertexMask>& entries, const VertexMask& face) {
  return exclusion_sequence(entries, face).support.count();
}

} // namespace

FacetOrdering::FacetOrdering(const SimplicialComplex& x, std::vector<Simplex> faces)
    : vertices_(x.vertices()), faces_(std::move(faces)) {
  if (x.is_void())
    throw InvalidInput("a facet ordering needs a non-void complex");
  masks_.reserve(faces_.size());
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    auto m = x.mask_of(faces_[i]);
    const bool in_x = m && std::any_of(x.facet_masks().begin(), x.facet_masks().end(),
                                       [&](const VertexMask& f) { return m->subset_of(f); });
    if (!in_x)
      throw InvalidInput("ordering entry " + std::to_string(i + 1) + " " + faces_[i].to_string() +
                         " is not a face of the complex");
    masks_.push_back(*m);
  }
  for (const auto& f : x.facet_masks()) {
    const bool covered = std::any_of(masks_.begin(), masks_.end(),
                                     [&](const VertexMask& s) { return f.subset_of(s); });
    if (!covered)
      throw InvalidInput("facet " + x.simplex_of(f).to_string() +
                         " is not contained in any ordering entry");
  }
}

FacetOrdering FacetOrdering::lexicographic(const SimplicialComplex& x) {
  return FacetOrdering(x, x.facets());
}

MesResult mes(const SimplicialComplex& x, const FacetOrdering& ordering, const Simplex& face) {
  require_same_complex(x, ordering);
  if (!is_face(x, face))
    throw InvalidInput(face.to_string() + " is not a face of the complex");
  const MaskSequence seq = exclusion_sequence(ordering.masks(), *x.mask_of(face));
  MesResult out;
  out.face = face;
  out.first_index = seq.first_index + 1;
  for (std::size_t k = 0; k < seq.positions.size(); ++k)
    out.sequence.push_back({x.vertices()[seq.positions[k]], static_cast<bool>(seq.is_new[k])});
  out.support = x.simplex_of(seq.support);
  return out;
}

int d_of_ordering(const SimplicialComplex& x, const FacetOrdering& ordering) {
  require_same_complex(x, ordering);
  int best = 0;
  for_each_face(x, [&](const VertexMask& face) {
    best = std::max(best, support_size(ordering.masks(), face));
  });
  return best;
}

OrderingSearchResult best_facet_ordering(const SimplicialComplex& x, std::size_t max_facets) {
  if (x.is_void())
    throw InvalidInput("ordering search needs a non-void complex");
  const std::size_t m = x.facet_count();
  if (m > max_facets)
    throw InvalidInput("ordering search is limited to " + std::to_string(max_facets) +
                       " facets; the complex has " + std::to_string(m));
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  const auto& facets = x.facet_masks();

  std::vector<std::size_t> best_perm = perm;
  int best = std::numeric_limits<int>::max();
  std::uint64_t tried = 0;
  std::vector<VertexMask> entries(m);
  do {
    ++tried;
    for (std::size_t i = 0; i < m; ++i)
      entries[i] = facets[perm[i]];
    int d = 0;
    for_each_face(x, [&](const VertexMask& face) { d = std::max(d, support_size(entries, face)); });
    if (d < best) {
      best = d;
      best_perm = perm;
    }
  } while (best > 0 && std::next_permutation(perm.begin(), perm.end()));

  std::vector<Simplex> ordered;
  for (std::size_t i : best_perm)
    ordered.push_back(x.simplex_of(facets[i]));
  return {FacetOrdering(x, std::move(ordered)), best, tried};
}

DPrimeResult d_prime(const SimplicialComplex& x) {
  if (x.is_void())
    throw InvalidInput("d' is undefined for the void complex");
  const auto& facets = x.facet_masks();
  const std::size_t n = x.vertex_count();

  auto is_face_mask = [&](const VertexMask& s) {
    return std::any_of(facets.begin(), facets.end(), [&](const VertexMask& f) { return s.subset_of(f); });
  };

  // A set P = {v₁..v_j} can be extended by v iff some facet contains P but
  // not v, and P ∪ {v} is still a face (it must sit inside σ_{k+1}). This
  // depends only on the set P, so the search runs over sets layer by layer.
  struct Parent {
    VertexMask prev;
    std::size_t vertex;
    std::size_t facet;
  };
  auto lex = [](const VertexMask& a, const VertexMask& b) { return lex_less(a, b); };
  std::map<VertexMask, Parent, decltype(lex)> layer(lex);
  std::unordered_map<VertexMask, Parent, VertexMaskHash> parents;
  layer.emplace(VertexMask{}, Parent{});
  int depth = 0;
  while (true) {
    std::map<VertexMask, Parent, decltype(lex)> next(lex);
    for (const auto& [p, _] : layer) {
      for (std::size_t v = 0; v < n; ++v) {
        if (p.test(v))
          continue;
        VertexMask grown = p;
        grown.set(v);
        if (next.count(grown) || !is_face_mask(grown))
          continue;
        for (std::size_t f = 0; f < facets.size(); ++f) {
          if (p.subset_of(facets[f]) && !facets[f].test(v)) {
            next.emplace(grown, Parent{p, v, f});
            break;
          }
        }
      }
    }
    if (next.empty())
      break;
    for (const auto& [s, par] : next)
      parents.emplace(s, par);
    layer = std::move(next);
    ++depth;
  }

  DPrimeResult out;
  out.value = depth;
  VertexMask cur = layer.begin()->first;
  std::size_t top_facet = 0;
  while (!cur.subset_of(facets[top_facet]))
    ++top_facet;
  std::vector<Vertex> vs;
  std::vector<Simplex> fs;
  while (!cur.empty()) {
    const Parent& par = parents.at(cur);
    vs.push_back(x.vertices()[par.vertex]);
    fs.push_back(x.simplex_of(facets[par.facet]));
    cur = par.prev;
  }
  std::reverse(vs.begin(), vs.end());
  std::reverse(fs.begin(), fs.end());
  fs.push_back(x.simplex_of(facets[top_facet]));
  out.witness = {std::move(vs), std::move(fs)};
  return out;
}

bool is_sx_witness(const SimplicialComplex& x, const SxWitness& w) {
  const std::size_t k = w.vertices.size();
  if (w.facets.size() != k + 1)
    return false;
  for (const auto& f : w.facets) {
    auto m = x.mask_of(f);
    if (!m || std::find(x.facet_masks().begin(), x.facet_masks().end(), *m) == x.facet_masks().end())
      return false;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (w.facets[i].contains(w.vertices[i]))
      return false;
    for (std::size_t j = i + 1; j <= k; ++j)
      if (!w.facets[j].contains(w.vertices[i]))
        return false;
  }
  return true;
}

KGraphResult k_graph(const Graph& g) {
  const auto& adj = g.adjacency();
  const std::size_t n = g.vertex_count();

  std::unordered_set<VertexMask, VertexMaskHash> visited;
  std::vector<std::size_t> vs, us, best_v, best_u;
  VertexMask chosen, blocked;

  // `blocked` holds every vertex adjacent to some chosen v; a new v must
  // avoid it (independence) and its partner u must avoid it too (u_j ≁ v_i).
  auto dfs = [&](auto&& self) -> void {
    if (!visited.insert(chosen).second)
      return;
    if (vs.size() > best_v.size()) {
      best_v = vs;
      best_u = us;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (chosen.test(v) || blocked.test(v))
        continue;
      const VertexMask partners = adj[v] - blocked;
      if (partners.empty())
        continue;
      const VertexMask saved_blocked = blocked;
      vs.push_back(v);
      us.push_back(partners.lowest());
      chosen.set(v);
      blocked |= adj[v];
      self(self);
      chosen.reset(v);
      blocked = saved_blocked;
      vs.pop_back();
      us.pop_back();
    }
  };
  dfs(dfs);

  KGraphResult out;
  out.value = static_cast<int>(best_v.size());
  for (std::size_t i = 0; i < best_v.size(); ++i) {
    out.witness.v.push_back(g.vertices()[best_v[i]]);
    out.witness.u.push_back(g.vertices()[best_u[i]]);
  }
  return out;
}

bool is_kg_witness(const Graph& g, const KgWitness& w) {
  const std::size_t k = w.v.size();
  if (w.u.size() != k)
    return false;
  std::vector<Vertex> all = w.v;
  all.insert(all.end(), w.u.begin(), w.u.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.adjacent(w.v[i], w.u[i]))
      return false;
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && g.adjacent(w.v[i], w.v[j]))
        return false;
      if (i < j && g.adjacent(w.v[i], w.u[j]))
        return false;
    }
  }
  return true;
}

std::int64_t binomial(int n, int k) {
  if (n < 0 || k < 0)
    throw InvalidInput("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") is undefined");
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / (n - k + i))
      throw InvalidInput("binomial coefficient overflows 64 bits");
    r = r * (n - k + i) / i;
  }
  return r;
}

std::int64_t cov_collapsibility_bound(int r, int p, int t) {
  if (r < 1 || p < 1 || t < 0 || t > std::min(r, p) - 1)
    throw InvalidInput("the covering-complex bound requires r >= 1, p >= 1 and 0 <= t <= min(r,p)-1 "
                       "(got r=" + std::to_string(r) + ", p=" + std::to_string(p) +
                       ", t=" + std::to_string(t) + ")");
  return binomial(r + p - 2 * t, r - t) - 1;
}

std::int64_t int_collapsibility_bound(int r, int t) {
  if (r < 1 || t < 0 || t > r - 1)
    throw InvalidInput("the intersection-complex bound requires r >= 1 and 0 <= t <= r-1 (got r=" +
                       std::to_string(r) + ", t=" + std::to_string(t) + ")");
  return binomial(2 * (r - t), r - t) / 2;
}

std::int64_t rpartite_int_collapsibility_bound(int r) {
  if (r < 1 || r > 62)
    throw InvalidInput("the r-partite bound requires 1 <= r <= 62");
  return std::int64_t{1} << (r - 1);
}

TheoremBounds theorem_bounds(int r, int p, int t) {
  return {cov_collapsibility_bound(r, p, t), int_collapsibility_bound(r, t),
          rpartite_int_collapsibility_bound(r)};
}

} // namespace collapse_lab
