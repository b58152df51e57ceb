#include "collapse_lab/complex.hpp"

#include "collapse_lab/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace collapse_lab {

Simplex::Simplex(std::initializer_list<Vertex> vs) : Simplex(std::vector<Vertex>(vs)) {}

Simplex::Simplex(std::vector<Vertex> vs) : vertices_(std::move(vs)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::subset_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    os << (i ? "," : "") << vertices_[i];
  os << '}';
  return os.str();
}

void reduce_to_antichain(std::vector<VertexMask>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::stable_sort(sets.begin(), sets.end(),
                   [](const VertexMask& a, const VertexMask& b) { return a.count() > b.count(); });
  std::vector<VertexMask> kept;
  kept.reserve(sets.size());
  for (const auto& s : sets) {
    bool dominated = false;
    for (const auto& k : kept)
      if (s.subset_of(k)) {
        dominated = true;
        break;
      }
    if (!dominated)
      kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  sets = std::move(kept);
}

SimplicialComplex SimplicialComplex::empty_complex() {
  SimplicialComplex x;
  x.facets_.push_back(VertexMask{});
  return x;
}

SimplicialComplex SimplicialComplex::from_masks(std::span<const Vertex> labels,
                                                std::vector<VertexMask> candidates) {
  SimplicialComplex x;
  if (candidates.empty())
    return x;
  reduce_to_antichain(candidates);
  VertexMask used;
  for (const auto& f : candidates)
    used |= f;
  // Compress positions so that only used labels remain, preserving order.
  std::vector<std::size_t> remap(labels.size(), 0);
  used.for_each([&](std::size_t i) {
    remap[i] = x.vertices_.size();
    x.vertices_.push_back(labels[i]);
  });
  x.facets_.reserve(candidates.size());
  for (const auto& f : candidates) {
    VertexMask g;
    f.for_each([&](std::size_t i) { g.set(remap[i]); });
    x.facets_.push_back(g);
  }
  // Compression is monotone, so lexicographic order is preserved.
  return x;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_)
    out.push_back(simplex_of(f));
  return out;
}

int SimplicialComplex::dimension() const {
  if (is_void())
    throw InvalidInput("the void complex has no dimension");
  int best = 0;
  for (const auto& f : facets_)
    best = std::max(best, f.count());
  return best - 1;
}

std::optional<std::size_t> SimplicialComplex::position_of(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<VertexMask> SimplicialComplex::mask_of(const Simplex& s) const {
  VertexMask m;
  for (Vertex v : s) {
    auto p = position_of(v);
    if (!p)
      return std::nullopt;
    m.set(*p);
  }
  return m;
}

Simplex SimplicialComplex::simplex_of(const VertexMask& m) const {
  std::vector<Vertex> vs;
  vs.reserve(static_cast<std::size_t>(m.count()));
  m.for_each([&](std::size_t i) { vs.push_back(vertices_[i]); });
  return Simplex(std::move(vs));
}

SimplicialComplex make_complex(std::span<const Simplex> candidate_facets) {
  std::vector<Vertex> labels;
  for (const auto& s : candidate_facets)
    labels.insert(labels.end(), s.begin(), s.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() > kMaxVertices)
    throw InvalidInput("complex has " + std::to_string(labels.size()) +
                       " vertices; at most " + std::to_string(kMaxVertices) + " are supported");
  std::vector<VertexMask> masks;
  masks.reserve(candidate_facets.size());
  for (const auto& s : candidate_facets) {
    VertexMask m;
    for (Vertex v : s)
      m.set(static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), v) -
                                     labels.begin()));
    masks.push_back(m);
  }
  return SimplicialComplex::from_masks(labels, std::move(masks));
}

SimplicialComplex make_complex(std::initializer_list<Simplex> candidate_facets) {
  return make_complex(std::span<const Simplex>(candidate_facets.begin(), candidate_facets.size()));
}

bool is_face(const SimplicialComplex& x, const Simplex& s) {
  auto m = x.mask_of(s);
  if (!m)
    return false;
  return std::any_of(x.facet_masks().begin(), x.facet_masks().end(),
                     [&](const VertexMask& f) { return m->subset_of(f); });
}

SimplicialComplex deletion(const SimplicialComplex& x, Vertex v) {
  auto p = x.position_of(v);
  if (!p || x.is_void())
    return x;
  std::vector<VertexMask> cand = x.facet_masks();
  for (auto& f : cand)
    f.reset(*p);
  return SimplicialComplex::from_masks(x.vertices(), std::move(cand));
}

SimplicialComplex link(const SimplicialComplex& x, Vertex v) {
  auto p = x.position_of(v);
  if (!p)
    throw InvalidInput("vertex " + std::to_string(v) + " is not a vertex of the complex");
  std::vector<VertexMask> cand;
  for (auto f : x.facet_masks())
    if (f.test(*p)) {
      f.reset(*p);
      cand.push_back(f);
    }
  return SimplicialComplex::from_masks(x.vertices(), std::move(cand));
}

std::vector<Simplex> faces(const SimplicialComplex& x) {
  std::vector<VertexMask> ms;
  for_each_face(x, [&](const VertexMask& m) { ms.push_back(m); });
  std::sort(ms.begin(), ms.end(), lex_less);
  std::vector<Simplex> out;
  out.reserve(ms.size());
  for (const auto& m : ms)
    out.push_back(x.simplex_of(m));
  return out;
}

std::size_t face_count(const SimplicialComplex& x) {
  std::size_t n = 0;
  for_each_face(x, [&](const VertexMask&) { ++n; });
  return n;
}

std::int64_t euler_characteristic(const SimplicialComplex& x) {
  if (x.is_void())
    throw InvalidInput("Euler characteristic of the void complex is undefined");
  std::int64_t chi = 0;
  for_each_face(x, [&](const VertexMask& m) {
    if (m.empty())
      return;
    chi += (m.count() % 2 == 1) ? 1 : -1;
  });
  return chi;
}

std::optional<int> recognize_boundary_of_simplex(const SimplicialComplex& x) {
  const std::size_t n = x.vertex_count();
  if (n < 2 || x.facet_count() != n)
    return std::nullopt;
  // The facets are an antichain, so n distinct facets of size n-1 are exactly
  // the n complements of single vertices.
  for (const auto& f : x.facet_masks())
    if (static_cast<std::size_t>(f.count()) != n - 1)
      return std::nullopt;
  return static_cast<int>(n) - 1;
}

std::optional<int> recognize_boundary_of_cross_polytope(const SimplicialComplex& x) {
  const std::size_t n = x.vertex_count();
  if (n < 2 || n % 2 != 0)
    return std::nullopt;
  const std::size_t k = n / 2;
  if (k >= 63 || x.facet_count() != (std::size_t{1} << k))
    return std::nullopt;
  // Each vertex must share a facet with every other vertex except exactly one.
  std::vector<VertexMask> neighbours(n);
  for (const auto& f : x.facet_masks()) {
    if (static_cast<std::size_t>(f.count()) != k)
      return std::nullopt;
    f.for_each([&](std::size_t i) { neighbours[i] |= f; });
  }
  const VertexMask all = VertexMask::first_n(n);
  std::vector<std::size_t> antipode(n);
  for (std::size_t i = 0; i < n; ++i) {
    VertexMask missing = all - neighbours[i];
    if (missing.count() != 1)
      return std::nullopt;
    antipode[i] = missing.lowest();
  }
  for (std::size_t i = 0; i < n; ++i)
    if (antipode[antipode[i]] != i || antipode[i] == i)
      return std::nullopt;
  // With 2^k distinct facets of size k avoiding every antipodal pair, the
  // facets are all transversals.
  for (const auto& f : x.facet_masks()) {
    bool ok = true;
    f.for_each([&](std::size_t i) { ok = ok && !f.test(antipode[i]); });
    if (!ok)
      return std::nullopt;
  }
  return static_cast<int>(k);
}

} // namespace collapse_lab
