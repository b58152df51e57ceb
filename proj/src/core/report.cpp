#include "collapse_lab/report.hpp"

#include "collapse_lab/errors.hpp"

namespace collapse_lab {

namespace {

Json simplex_json(const Simplex& s) {
  Json a = Json::array();
  for (Vertex v : s)
    a.push_back(v);
  return a;
}

Json simplices_json(const std::vector<Simplex>& ss) {
  Json a = Json::array();
  for (const auto& s : ss)
    a.push_back(simplex_json(s));
  return a;
}

Simplex simplex_from(const Json& j, const char* what) {
  if (!j.is_array())
    throw InvalidInput(std::string(what) + " must be an array of vertex ids");
  std::vector<Vertex> vs;
  for (const auto& e : j) {
    if (!e.is_number_unsigned())
      throw InvalidInput(std::string(what) + " must contain non-negative integers");
    vs.push_back(e.get<Vertex>());
  }
  return Simplex(std::move(vs));
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json optional_bool(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

Json sx_witness_json(const SxWitness& w) {
  Json j;
  j["vertices"] = w.vertices;
  j["facets"] = simplices_json(w.facets);
  return j;
}

} // namespace

Json complex_to_json(const SimplicialComplex& x) {
  Json j;
  j["vertices"] = x.vertices();
  j["facets"] = simplices_json(x.facets());
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("facets"))
    throw InvalidInput("complex JSON needs a \"facets\" array");
  std::vector<Simplex> facets;
  for (const auto& f : j.at("facets"))
    facets.push_back(simplex_from(f, "facet"));
  return make_complex(facets);
}

Json certificate_to_json(const CollapseCertificate& cert) {
  Json j;
  j["d"] = cert.d;
  Json steps = Json::array();
  for (const auto& s : cert.steps)
    steps.push_back(Json{{"eta", simplex_json(s.eta)}, {"tau", simplex_json(s.tau)}});
  j["steps"] = std::move(steps);
  return j;
}

CollapseCertificate certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("steps") || !j.at("d").is_number_integer() ||
      !j.at("steps").is_array())
    throw InvalidInput("certificate JSON needs an integer \"d\" and a \"steps\" array");
  CollapseCertificate cert;
  cert.d = j.at("d").get<int>();
  for (const auto& s : j.at("steps")) {
    if (!s.is_object() || !s.contains("eta") || !s.contains("tau"))
      throw InvalidInput("every certificate step needs \"eta\" and \"tau\"");
    cert.steps.push_back({simplex_from(s.at("eta"), "eta"), simplex_from(s.at("tau"), "tau")});
  }
  return cert;
}

Json system_to_json(const SetPairSystem& sys) {
  Json j;
  j["a"] = simplices_json(sys.a);
  j["b"] = simplices_json(sys.b);
  if (sys.partition)
    j["partition"] = simplices_json(*sys.partition);
  return j;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
  case Verdict::collapsible:
    return "collapsible";
  case Verdict::not_collapsible:
    return "not_collapsible";
  case Verdict::undecided:
    return "undecided";
  }
  return "undecided";
}

Json build_report(const std::string& command, const SimplicialComplex& x, const Hypergraph* source,
                  std::optional<int> p, std::optional<int> t,
                  const std::vector<std::size_t>& dropped_edges) {
  Json j;
  j["command"] = command;
  if (p)
    j["p"] = *p;
  if (t)
    j["t"] = *t;
  const Json cx = complex_to_json(x);
  j["vertices"] = cx["vertices"];
  j["facets"] = cx["facets"];
  j["facet_count"] = x.facet_count();
  if (source) {
    Json labels = Json::array();
    for (Vertex v : x.vertices())
      labels.push_back(simplex_json(source->edges().at(v)));
    j["labels"] = std::move(labels);
  }
  if (!dropped_edges.empty())
    j["dropped_edges"] = dropped_edges;
  j["simplex_boundary"] = optional_int(recognize_boundary_of_simplex(x));
  j["cross_polytope_boundary"] = optional_int(recognize_boundary_of_cross_polytope(x));
  return j;
}

Json mes_bound_report(const SimplicialComplex& x, OrderingMode mode,
                      const std::vector<Simplex>& given_ordering) {
  Json j;
  j["command"] = "mes-bound";
  if (x.is_void())
    throw InvalidInput("minimal exclusion sequences need a non-void complex");
  std::optional<FacetOrdering> ordering;
  int d_mes = 0;
  switch (mode) {
  case OrderingMode::lex:
    j["ordering_mode"] = "lex";
    ordering.emplace(FacetOrdering::lexicographic(x));
    d_mes = d_of_ordering(x, *ordering);
    break;
  case OrderingMode::given:
    j["ordering_mode"] = "given";
    ordering.emplace(x, given_ordering);
    d_mes = d_of_ordering(x, *ordering);
    break;
  case OrderingMode::search: {
    j["ordering_mode"] = "search";
    auto best = best_facet_ordering(x);
    j["orderings_tried"] = best.orderings_tried;
    d_mes = best.d;
    ordering.emplace(std::move(best.ordering));
    break;
  }
  }
  j["ordering"] = simplices_json(ordering->faces());
  j["d_mes"] = d_mes;
  const DPrimeResult dp = d_prime(x);
  j["d_prime"] = dp.value;
  j["witness"] = sx_witness_json(dp.witness);
  return j;
}

Json d_prime_report(const SimplicialComplex& x) {
  const DPrimeResult dp = d_prime(x);
  Json j;
  j["command"] = "d-prime";
  j["d_prime"] = dp.value;
  j["witness"] = sx_witness_json(dp.witness);
  return j;
}

Json k_graph_report(const Graph& g) {
  const KGraphResult k = k_graph(g);
  Json j;
  j["command"] = "k-graph";
  j["k"] = k.value;
  j["vertex_count"] = g.vertex_count();
  j["floor_half_n"] = g.vertex_count() / 2;
  j["witness"] = Json{{"v", k.witness.v}, {"u", k.witness.u}};
  return j;
}

Json collapse_report(const SimplicialComplex& x, int d, const SearchOptions& options) {
  const Decision dec = is_d_collapsible(x, d, options);
  const GreedyOutcome greedy = greedy_collapse(x, d);
  Json j;
  j["command"] = "collapse";
  j["d"] = d;
  j["verdict"] = verdict_name(dec.verdict);
  j["certificate"] = dec.certificate ? certificate_to_json(*dec.certificate) : Json(nullptr);
  j["nodes"] = dec.nodes;
  j["budget"] = options.budget;
  j["greedy"] = Json{{"collapsed", greedy.collapsed},
                     {"steps", greedy.certificate.steps.size()},
                     {"stuck_facets", greedy.collapsed ? Json(nullptr)
                                                       : simplices_json(greedy.stuck.facets())}};
  return j;
}

Json collapsibility_report(const SimplicialComplex& x, const SearchOptions& options) {
  const CollapsibilityResult res = collapsibility(x, options);
  Json j;
  j["command"] = "collapsibility";
  j["collapsibility"] = optional_int(res.value);
  j["verdict"] = verdict_name(res.verdict);
  if (res.verdict == Verdict::undecided)
    j["undecided_at"] = res.undecided_at;
  j["certificate"] = res.certificate ? certificate_to_json(*res.certificate) : Json(nullptr);
  j["nodes"] = res.nodes;
  j["budget"] = options.budget;
  return j;
}

Json verify_lemma_report(const SystemSearchParams& params) {
  const SystemSearchResult res = max_system_search(params);
  const bool witness_ok = res.k_found == 0 || check_system(res.witness, params.lemma);
  Json j;
  j["lemma"] = lemma_name(params.lemma);
  Json ps;
  if (params.lemma == Lemma::lnp) {
    ps["parts"] = res.witness.partition ? res.witness.partition->size() : 0;
    Json sizes = Json::array();
    if (res.witness.partition)
      for (const auto& part : *res.witness.partition)
        sizes.push_back(part.size());
    ps["part_sizes"] = std::move(sizes);
  } else {
    ps["r"] = params.r;
    ps["p"] = params.p;
    if (params.lemma == Lemma::furedi)
      ps["t"] = params.t;
    ps["ground"] = params.ground_size;
  }
  j["params"] = std::move(ps);
  j["k_found"] = res.k_found;
  j["bound"] = res.bound;
  j["decided"] = res.decided;
  j["ok"] = res.decided && witness_ok && res.k_found <= res.bound;
  j["witness"] = system_to_json(res.witness);
  j["nodes"] = res.nodes;
  return j;
}

Json verify_extremal_report(int r, int p, int t, const SearchOptions& options) {
  const ExtremalReport rep = verify_extremal_complexes(r, p, t, options);
  Json j;
  j["command"] = "verify-extremal";
  j["params"] = Json{{"r", r}, {"p", p}, {"t", t}};
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json cj;
    cj["family"] = c.family;
    cj["shape"] = c.shape;
    cj["skipped"] = c.skipped;
    if (!c.note.empty())
      cj["note"] = c.note;
    if (!c.skipped) {
      cj["edges"] = c.edge_count;
      cj["expected_dimension"] = c.expected_dimension;
      cj["recognized_dimension"] = optional_int(c.recognized_dimension);
      cj["below_bound_refuted"] = optional_bool(c.below_bound_refuted);
      cj["bound_attained"] = optional_bool(c.bound_attained);
      cj["ok"] = c.ok;
    }
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["ok"] = rep.ok;
  return j;
}

} // namespace collapse_lab
