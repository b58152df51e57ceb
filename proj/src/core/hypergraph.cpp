#include "collapse_lab/hypergraph.hpp"

#include "collapse_lab/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace collapse_lab {

namespace {

std::size_t position_in(const std::vector<Vertex>& sorted, Vertex v) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                  sorted.begin());
}

VertexMask mask_in(const std::vector<Vertex>& sorted, const Simplex& s) {
  VertexMask m;
  for (Vertex v : s)
    m.set(position_in(sorted, v));
  return m;
}

std::vector<Vertex> index_labels(std::size_t n) {
  std::vector<Vertex> labels(n);
  for (std::size_t i = 0; i < n; ++i)
    labels[i] = static_cast<Vertex>(i);
  return labels;
}

// Tomita-style pivoting: branch only on candidates outside the neighbourhood
// of the pivot maximising |P ∩ N(u)|. Pivot ties go to the lowest position.
void bron_kerbosch(const std::vector<VertexMask>& adj, VertexMask r, VertexMask p, VertexMask x,
                   std::vector<VertexMask>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  std::size_t pivot = 0;
  int best = -1;
  (p | x).for_each([&](std::size_t u) {
    const int c = (p & adj[u]).count();
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  const VertexMask branch = p - adj[pivot];
  branch.for_each([&](std::size_t v) {
    VertexMask rv = r;
    rv.set(v);
    bron_kerbosch(adj, rv, p & adj[v], x & adj[v], out);
    p.reset(v);
    x.set(v);
  });
}

std::vector<VertexMask> maximal_cliques(const std::vector<VertexMask>& adj, VertexMask universe) {
  std::vector<VertexMask> out;
  bron_kerbosch(adj, VertexMask{}, universe, VertexMask{}, out);
  return out;
}

void check_size(std::size_t n, const char* what) {
  if (n > kMaxVertices)
    throw InvalidInput(std::string(what) + " has " + std::to_string(n) + " elements; at most " +
                       std::to_string(kMaxVertices) + " are supported");
}

// Calls f(C) for every C ⊆ ground of size min(p, |ground|), lexicographically.
template <typename F>
void for_each_witness_set(std::size_t ground_size, int p, F&& f) {
  const int k = std::min<int>(p, static_cast<int>(ground_size));
  for_each_k_subset(VertexMask::first_n(ground_size), k, f);
}

} // namespace

Hypergraph::Hypergraph(std::vector<Simplex> edges, std::optional<std::vector<Simplex>> parts)
    : edges_(std::move(edges)), parts_(std::move(parts)) {
  std::set<Simplex> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].empty())
      throw InvalidInput("edge " + std::to_string(i) + " is empty");
    if (!seen.insert(edges_[i]).second)
      throw InvalidInput("edge " + edges_[i].to_string() + " appears twice");
    ground_.insert(ground_.end(), edges_[i].begin(), edges_[i].end());
  }
  if (parts_) {
    std::set<Vertex> covered;
    for (const auto& part : *parts_) {
      if (part.empty())
        throw InvalidInput("partition has an empty part");
      for (Vertex v : part)
        if (!covered.insert(v).second)
          throw InvalidInput("vertex " + std::to_string(v) + " lies in two parts");
      ground_.insert(ground_.end(), part.begin(), part.end());
    }
    for (const auto& e : edges_) {
      for (Vertex v : e)
        if (!covered.count(v))
          throw InvalidInput("edge " + e.to_string() + " has vertex " + std::to_string(v) +
                             " outside every part");
      for (const auto& part : *parts_) {
        const auto hits = std::count_if(e.begin(), e.end(), [&](Vertex v) { return part.contains(v); });
        if (hits != 1)
          throw InvalidInput("edge " + e.to_string() + " meets part " + part.to_string() + " in " +
                             std::to_string(hits) + " vertices; expected exactly 1");
      }
    }
  }
  std::sort(ground_.begin(), ground_.end());
  ground_.erase(std::unique(ground_.begin(), ground_.end()), ground_.end());
  check_size(ground_.size(), "hypergraph ground set");
}

int Hypergraph::rank() const {
  std::size_t r = 0;
  for (const auto& e : edges_)
    r = std::max(r, e.size());
  return static_cast<int>(r);
}

std::vector<VertexMask> Hypergraph::edge_masks() const {
  std::vector<VertexMask> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_)
    out.push_back(mask_in(ground_, e));
  return out;
}

Graph::Graph(std::vector<Vertex> vertices, std::vector<std::pair<Vertex, Vertex>> edges)
    : vertices_(std::move(vertices)) {
  for (auto [u, v] : edges) {
    if (u == v)
      throw InvalidInput("loop at vertex " + std::to_string(u));
    vertices_.push_back(u);
    vertices_.push_back(v);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  check_size(vertices_.size(), "graph");
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adjacency_.assign(vertices_.size(), VertexMask{});
  for (auto [u, v] : edges_) {
    const std::size_t a = position_in(vertices_, u);
    const std::size_t b = position_in(vertices_, v);
    adjacency_[a].set(b);
    adjacency_[b].set(a);
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(edges_.begin(), edges_.end(),
                            std::pair<Vertex, Vertex>{std::min(u, v), std::max(u, v)});
}

int covering_number(const Hypergraph& h, int t) {
  if (t < 1)
    throw InvalidInput("threshold t must be at least 1");
  for (const auto& e : h.edges())
    if (static_cast<int>(e.size()) < t)
      throw InvalidInput("no t-transversal exists: edge " + e.to_string() + " has fewer than " +
                         std::to_string(t) + " vertices");
  const auto edges = h.edge_masks();
  const std::size_t n = h.ground_set().size();
  for (int size = 0; size <= static_cast<int>(n); ++size) {
    bool found = false;
    for_each_k_subset(VertexMask::first_n(n), size, [&](const VertexMask& c) {
      if (found)
        return;
      found = std::all_of(edges.begin(), edges.end(),
                          [&](const VertexMask& a) { return (a & c).count() >= t; });
    });
    if (found)
      return size;
  }
  // Unreachable: the whole ground set is a t-transversal once sizes are checked.
  return static_cast<int>(n);
}

std::vector<std::pair<Simplex, CoverWitness>> cov_complex_witnesses(const Hypergraph& h, int p,
                                                                    int t) {
  if (p < 0)
    throw InvalidInput("p must be non-negative");
  if (t < 1)
    throw InvalidInput("threshold t must be at least 1");
  check_size(h.edge_count(), "hypergraph edge list");
  const auto edges = h.edge_masks();
  const std::size_t n = h.ground_set().size();

  // F_C = {A : |A ∩ C| ≥ t} for |C| = min(p, n); keep the first C per face.
  std::map<VertexMask, VertexMask> first_witness;
  std::vector<VertexMask> candidates;
  for_each_witness_set(n, p, [&](const VertexMask& c) {
    VertexMask face;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((edges[i] & c).count() >= t)
        face.set(i);
    if (first_witness.emplace(face, c).second)
      candidates.push_back(face);
  });
  reduce_to_antichain(candidates);

  std::vector<std::pair<Simplex, CoverWitness>> out;
  out.reserve(candidates.size());
  for (const auto& f : candidates) {
    std::vector<Vertex> members;
    f.for_each([&](std::size_t i) { members.push_back(static_cast<Vertex>(i)); });
    std::vector<Vertex> cover;
    first_witness.at(f).for_each([&](std::size_t i) { cover.push_back(h.ground_set()[i]); });
    out.push_back({Simplex(std::move(members)), CoverWitness{Simplex(std::move(cover)), t}});
  }
  return out;
}

SimplicialComplex cov_complex(const Hypergraph& h, int p, int t) {
  auto facets = cov_complex_witnesses(h, p, t);
  std::vector<VertexMask> masks;
  masks.reserve(facets.size());
  for (const auto& [f, w] : facets) {
    VertexMask m;
    for (Vertex v : f)
      m.set(v);
    masks.push_back(m);
  }
  return SimplicialComplex::from_masks(index_labels(h.edge_count()), std::move(masks));
}

SimplicialComplex int_complex(const Hypergraph& h, int t, std::vector<std::size_t>* dropped) {
  if (t < 1)
    throw InvalidInput("threshold t must be at least 1");
  check_size(h.edge_count(), "hypergraph edge list");
  const auto edges = h.edge_masks();
  VertexMask kept;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].count() >= t)
      kept.set(i);
    else if (dropped)
      dropped->push_back(i);
  }
  std::vector<VertexMask> adj(edges.size());
  kept.for_each([&](std::size_t i) {
    kept.for_each([&](std::size_t j) {
      if (i != j && (edges[i] & edges[j]).count() >= t)
        adj[i].set(j);
    });
  });
  auto cliques = maximal_cliques(adj, kept);
  return SimplicialComplex::from_masks(index_labels(h.edge_count()), std::move(cliques));
}

Graph disjointness_graph(const Hypergraph& h, int t) {
  if (t < 1)
    throw InvalidInput("threshold t must be at least 1");
  const auto edges = h.edge_masks();
  std::vector<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].count() < t)
      continue;
    vertices.push_back(static_cast<Vertex>(i));
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (edges[j].count() >= t && (edges[i] & edges[j]).count() < t)
        pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph(std::move(vertices), std::move(pairs));
}

SimplicialComplex independence_complex(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const VertexMask all = VertexMask::first_n(n);
  std::vector<VertexMask> complement(n);
  for (std::size_t i = 0; i < n; ++i) {
    complement[i] = all - g.adjacency()[i];
    complement[i].reset(i);
  }
  auto cliques = maximal_cliques(complement, all);
  return SimplicialComplex::from_masks(g.vertices(), std::move(cliques));
}

namespace {

// Every k-subset of `pool` (sorted labels) joined with `base`.
std::vector<Simplex> joined_subsets(const std::vector<Vertex>& pool, int k,
                                    const std::vector<Vertex>& base) {
  std::vector<Simplex> out;
  check_size(pool.size(), "vertex pool");
  for_each_k_subset(VertexMask::first_n(pool.size()), k, [&](const VertexMask& m) {
    std::vector<Vertex> vs = base;
    m.for_each([&](std::size_t i) { vs.push_back(pool[i]); });
    out.emplace_back(std::move(vs));
  });
  return out;
}

std::vector<Vertex> interval(int lo, int hi) {
  std::vector<Vertex> out;
  for (int v = lo; v <= hi; ++v)
    out.push_back(static_cast<Vertex>(v));
  return out;
}

} // namespace

Hypergraph complete_uniform(int n, int r) {
  if (r < 1 || n < r)
    throw InvalidInput("complete_uniform requires 1 <= r <= n (got n=" + std::to_string(n) +
                       ", r=" + std::to_string(r) + ")");
  return Hypergraph(joined_subsets(interval(1, n), r, {}));
}

Hypergraph complete_r_partite(const std::vector<int>& sides) {
  if (sides.empty())
    throw InvalidInput("complete_r_partite requires at least one side");
  std::vector<Simplex> parts;
  int next = 1;
  std::size_t total = 0;
  for (int s : sides) {
    if (s < 1)
      throw InvalidInput("every side of complete_r_partite must have size >= 1");
    parts.emplace_back(interval(next, next + s - 1));
    next += s;
    total += static_cast<std::size_t>(s);
  }
  check_size(total, "r-partite ground set");
  std::size_t product = 1;
  for (int s : sides) {
    product *= static_cast<std::size_t>(s);
    if (product > (std::size_t{1} << 20))
      throw InvalidInput("complete_r_partite would have more than 2^20 edges");
  }
  // Transversals in lexicographic order: odometer over the parts.
  std::vector<Simplex> edges;
  std::vector<std::size_t> pick(parts.size(), 0);
  while (true) {
    std::vector<Vertex> e;
    for (std::size_t i = 0; i < parts.size(); ++i)
      e.push_back(parts[i].vertices()[pick[i]]);
    edges.emplace_back(std::move(e));
    std::size_t i = parts.size();
    while (i > 0 && pick[i - 1] + 1 == parts[i - 1].size()) {
      pick[i - 1] = 0;
      --i;
    }
    if (i == 0)
      break;
    ++pick[i - 1];
  }
  return Hypergraph(std::move(edges), std::move(parts));
}

Hypergraph family_h1(int r, int p, int t) {
  if (t < 0 || t >= std::min(r, p))
    throw InvalidInput("family H1 requires 0 <= t <= min(r,p)-1 (got r=" + std::to_string(r) +
                       ", p=" + std::to_string(p) + ", t=" + std::to_string(t) + ")");
  return Hypergraph(joined_subsets(interval(t + 1, r + p - t), r - t, interval(1, t)));
}

Hypergraph family_h2(int r, int t) {
  if (t < 0 || t >= r)
    throw InvalidInput("family H2 requires 0 <= t <= r-1 (got r=" + std::to_string(r) +
                       ", t=" + std::to_string(t) + ")");
  return Hypergraph(joined_subsets(interval(t + 1, 2 * r - t), r - t, interval(1, t)));
}

} // namespace collapse_lab
