#include "collapse_lab/collapse_lab.h"

#include "collapse_lab/collapse.hpp"
#include "collapse_lab/errors.hpp"
#include "collapse_lab/extremal.hpp"
#include "collapse_lab/hypergraph.hpp"
#include "collapse_lab/io.hpp"
#include "collapse_lab/mes.hpp"
#include "collapse_lab/report.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

using namespace collapse_lab;

struct cl_complex {
  explicit cl_complex(SimplicialComplex x, std::vector<Simplex> l = {})
      : complex(std::move(x)), lines(std::move(l)) {}

  SimplicialComplex complex;
  std::vector<Simplex> lines;
  std::string origin = "complex";
  std::optional<Hypergraph> source;
  std::optional<int> p;
  std::optional<int> t;
  std::vector<std::size_t> dropped;
};

struct cl_hypergraph {
  Hypergraph h;
};

struct cl_graph {
  Graph g;
};

namespace {

thread_local std::string last_error;

template <typename F>
cl_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const InvalidInput& e) {
    last_error = e.what();
    return CL_INVALID_INPUT;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return CL_INVALID_INPUT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CL_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CL_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return CL_INTERNAL_ERROR;
  }
}

cl_status null_argument(const char* name) {
  last_error = std::string("null argument: ") + name;
  return CL_INVALID_INPUT;
}

char* to_c_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cl_status emit(const Json& j, char** out, cl_status status = CL_OK) {
  *out = to_c_string(j.dump(2) + "\n");
  return status;
}

SearchOptions options_for(uint64_t budget) {
  if (budget == 0)
    throw InvalidInput("budget must be positive");
  SearchOptions o;
  o.budget = budget;
  return o;
}

} // namespace

#define CL_REQUIRE(arg)                                                                            \
  do {                                                                                             \
    if (!(arg))                                                                                    \
      return null_argument(#arg);                                                                  \
  } while (0)

extern "C" {

const char* cl_version(void) { return "0.1.0"; }

const char* cl_last_error(void) { return last_error.c_str(); }

void cl_string_free(char* s) { std::free(s); }

cl_status cl_complex_parse(const char* text, cl_complex** out) {
  CL_REQUIRE(text);
  CL_REQUIRE(out);
  return guarded([&] {
    ParsedComplex parsed = parse_complex(text);
    *out = new cl_complex{std::move(parsed.complex), std::move(parsed.lines)};
    return CL_OK;
  });
}

cl_status cl_complex_from_facets(const uint32_t* ids, const size_t* lengths, size_t count,
                                 cl_complex** out) {
  CL_REQUIRE(out);
  if (count > 0)
    CL_REQUIRE(lengths);
  return guarded([&] {
    std::vector<Simplex> lines;
    std::size_t at = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (lengths[i] > 0 && !ids)
        return null_argument("ids");
      lines.emplace_back(std::vector<Vertex>(ids + at, ids + at + lengths[i]));
      at += lengths[i];
    }
    SimplicialComplex x = make_complex(lines);
    *out = new cl_complex{std::move(x), std::move(lines)};
    return CL_OK;
  });
}

void cl_complex_free(cl_complex* x) { delete x; }

cl_status cl_complex_facet_count(const cl_complex* x, size_t* out) {
  CL_REQUIRE(x);
  CL_REQUIRE(out);
  *out = x->complex.facet_count();
  return CL_OK;
}

cl_status cl_complex_is_void(const cl_complex* x, int* out) {
  CL_REQUIRE(x);
  CL_REQUIRE(out);
  *out = x->complex.is_void() ? 1 : 0;
  return CL_OK;
}

cl_status cl_complex_euler_characteristic(const cl_complex* x, int64_t* out) {
  CL_REQUIRE(x);
  CL_REQUIRE(out);
  return guarded([&] {
    *out = euler_characteristic(x->complex);
    return CL_OK;
  });
}

cl_status cl_complex_simplex_boundary_dimension(const cl_complex* x, int* out) {
  CL_REQUIRE(x);
  CL_REQUIRE(out);
  *out = recognize_boundary_of_simplex(x->complex).value_or(-1);
  return CL_OK;
}

cl_status cl_complex_cross_polytope_dimension(const cl_complex* x, int* out) {
  CL_REQUIRE(x);
  CL_REQUIRE(out);
  *out = recognize_boundary_of_cross_polytope(x->complex).value_or(-1);
  return CL_OK;
}

cl_status cl_complex_to_text(const cl_complex* x, char** out) {
  CL_REQUIRE(x);
  CL_REQUIRE(out);
  return guarded([&] {
    *out = to_c_string(format_complex(x->complex));
    return CL_OK;
  });
}

cl_status cl_complex_to_json(const cl_complex* x, char** out) {
  CL_REQUIRE(x);
  CL_REQUIRE(out);
  return guarded([&] { return emit(complex_to_json(x->complex), out); });
}

cl_status cl_hypergraph_parse(const char* text, cl_hypergraph** out) {
  CL_REQUIRE(text);
  CL_REQUIRE(out);
  return guarded([&] {
    *out = new cl_hypergraph{parse_hypergraph(text)};
    return CL_OK;
  });
}

cl_status cl_hypergraph_complete_uniform(int n, int r, cl_hypergraph** out) {
  CL_REQUIRE(out);
  return guarded([&] {
    *out = new cl_hypergraph{complete_uniform(n, r)};
    return CL_OK;
  });
}

cl_status cl_hypergraph_complete_r_partite(const int* sides, size_t count, cl_hypergraph** out) {
  CL_REQUIRE(out);
  if (count > 0)
    CL_REQUIRE(sides);
  return guarded([&] {
    *out = new cl_hypergraph{complete_r_partite(std::vector<int>(sides, sides + count))};
    return CL_OK;
  });
}

cl_status cl_hypergraph_family_h1(int r, int p, int t, cl_hypergraph** out) {
  CL_REQUIRE(out);
  return guarded([&] {
    *out = new cl_hypergraph{family_h1(r, p, t)};
    return CL_OK;
  });
}

cl_status cl_hypergraph_family_h2(int r, int t, cl_hypergraph** out) {
  CL_REQUIRE(out);
  return guarded([&] {
    *out = new cl_hypergraph{family_h2(r, t)};
    return CL_OK;
  });
}

void cl_hypergraph_free(cl_hypergraph* h) { delete h; }

cl_status cl_hypergraph_edge_count(const cl_hypergraph* h, size_t* out) {
  CL_REQUIRE(h);
  CL_REQUIRE(out);
  *out = h->h.edge_count();
  return CL_OK;
}

cl_status cl_hypergraph_covering_number(const cl_hypergraph* h, int t, int* out) {
  CL_REQUIRE(h);
  CL_REQUIRE(out);
  return guarded([&] {
    *out = covering_number(h->h, t);
    return CL_OK;
  });
}

cl_status cl_graph_parse(const char* text, cl_graph** out) {
  CL_REQUIRE(text);
  CL_REQUIRE(out);
  return guarded([&] {
    *out = new cl_graph{parse_graph(text)};
    return CL_OK;
  });
}

cl_status cl_graph_disjointness(const cl_hypergraph* h, int t, cl_graph** out) {
  CL_REQUIRE(h);
  CL_REQUIRE(out);
  return guarded([&] {
    *out = new cl_graph{disjointness_graph(h->h, t)};
    return CL_OK;
  });
}

void cl_graph_free(cl_graph* g) { delete g; }

cl_status cl_build_cov(const cl_hypergraph* h, int p, int t, cl_complex** out) {
  CL_REQUIRE(h);
  CL_REQUIRE(out);
  return guarded([&] {
    auto* c = new cl_complex{cov_complex(h->h, p, t)};
    c->lines = c->complex.facets();
    c->origin = "build-cov";
    c->source = h->h;
    c->p = p;
    c->t = t;
    *out = c;
    return CL_OK;
  });
}

cl_status cl_build_int(const cl_hypergraph* h, int t, cl_complex** out) {
  CL_REQUIRE(h);
  CL_REQUIRE(out);
  return guarded([&] {
    std::vector<std::size_t> dropped;
    auto* c = new cl_complex{int_complex(h->h, t, &dropped)};
    c->lines = c->complex.facets();
    c->origin = "build-int";
    c->source = h->h;
    c->t = t;
    c->dropped = std::move(dropped);
    *out = c;
    return CL_OK;
  });
}

cl_status cl_build_ind(const cl_graph* g, cl_complex** out) {
  CL_REQUIRE(g);
  CL_REQUIRE(out);
  return guarded([&] {
    auto* c = new cl_complex{independence_complex(g->g)};
    c->lines = c->complex.facets();
    c->origin = "build-ind";
    *out = c;
    return CL_OK;
  });
}

cl_status cl_report_build(const cl_complex* x, char** json_out) {
  CL_REQUIRE(x);
  CL_REQUIRE(json_out);
  return guarded([&] {
    return emit(build_report(x->origin, x->complex, x->source ? &*x->source : nullptr, x->p, x->t,
                             x->dropped),
                json_out);
  });
}

cl_status cl_report_mes_bound(const cl_complex* x, cl_ordering_mode mode, char** json_out) {
  CL_REQUIRE(x);
  CL_REQUIRE(json_out);
  return guarded([&] {
    OrderingMode m;
    switch (mode) {
    case CL_ORDERING_LEX:
      m = OrderingMode::lex;
      break;
    case CL_ORDERING_GIVEN:
      m = OrderingMode::given;
      break;
    case CL_ORDERING_SEARCH:
      m = OrderingMode::search;
      break;
    default:
      throw InvalidInput("unknown ordering mode");
    }
    return emit(mes_bound_report(x->complex, m, x->lines), json_out);
  });
}

cl_status cl_report_d_prime(const cl_complex* x, char** json_out) {
  CL_REQUIRE(x);
  CL_REQUIRE(json_out);
  return guarded([&] { return emit(d_prime_report(x->complex), json_out); });
}

cl_status cl_report_k_graph(const cl_graph* g, char** json_out) {
  CL_REQUIRE(g);
  CL_REQUIRE(json_out);
  return guarded([&] { return emit(k_graph_report(g->g), json_out); });
}

cl_status cl_report_collapse(const cl_complex* x, int d, uint64_t budget, char** json_out) {
  CL_REQUIRE(x);
  CL_REQUIRE(json_out);
  return guarded([&] {
    const Json j = collapse_report(x->complex, d, options_for(budget));
    return emit(j, json_out, j["verdict"] == "undecided" ? CL_UNDECIDED : CL_OK);
  });
}

cl_status cl_report_collapsibility(const cl_complex* x, uint64_t budget, char** json_out) {
  CL_REQUIRE(x);
  CL_REQUIRE(json_out);
  return guarded([&] {
    const Json j = collapsibility_report(x->complex, options_for(budget));
    return emit(j, json_out, j["verdict"] == "undecided" ? CL_UNDECIDED : CL_OK);
  });
}

cl_status cl_report_verify_lemma(cl_lemma lemma, int r, int p, int t, int ground,
                                 const int* part_sizes, size_t part_count, uint64_t budget,
                                 char** json_out) {
  CL_REQUIRE(json_out);
  if (part_count > 0)
    CL_REQUIRE(part_sizes);
  return guarded([&] {
    SystemSearchParams params;
    switch (lemma) {
    case CL_LEMMA_FRANKL_KALAI:
      params.lemma = Lemma::frankl_kalai;
      break;
    case CL_LEMMA_FUREDI:
      params.lemma = Lemma::furedi;
      break;
    case CL_LEMMA_LNP:
      params.lemma = Lemma::lnp;
      break;
    default:
      throw InvalidInput("unknown lemma");
    }
    if (budget == 0)
      throw InvalidInput("budget must be positive");
    params.r = r;
    params.p = p;
    params.t = t;
    params.ground_size = ground;
    params.part_sizes.assign(part_sizes, part_sizes + part_count);
    params.budget = budget;
    const Json j = verify_lemma_report(params);
    return emit(j, json_out, j["decided"].get<bool>() ? CL_OK : CL_UNDECIDED);
  });
}

cl_status cl_report_verify_extremal(int r, int p, int t, uint64_t budget, char** json_out) {
  CL_REQUIRE(json_out);
  return guarded([&] { return emit(verify_extremal_report(r, p, t, options_for(budget)), json_out); });
}

cl_status cl_verify_certificate(const cl_complex* x, const char* certificate_json, int* ok) {
  CL_REQUIRE(x);
  CL_REQUIRE(certificate_json);
  CL_REQUIRE(ok);
  return guarded([&] {
    const CollapseCertificate cert = certificate_from_json(Json::parse(certificate_json));
    *ok = verify_certificate(x->complex, cert) ? 1 : 0;
    return CL_OK;
  });
}

} // extern "C"
