#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "collapse_lab/collapse_lab.h"

#include <json.hpp>

#include <string>

namespace {

nlohmann::json take_json(char* s) {
  REQUIRE(s != nullptr);
  auto j = nlohmann::json::parse(s);
  cl_string_free(s);
  return j;
}

} // namespace

TEST_CASE("complex handles") {
  cl_complex* x = nullptr;
  REQUIRE(cl_complex_parse("1 2 3\n1 2 6\n1 3 5\n1 5 6\n2 3 4\n2 4 6\n3 4 5\n4 5 6\n", &x) == CL_OK);
  size_t facets = 0;
  CHECK(cl_complex_facet_count(x, &facets) == CL_OK);
  CHECK(facets == 8);
  int64_t chi = 0;
  CHECK(cl_complex_euler_characteristic(x, &chi) == CL_OK);
  CHECK(chi == 2);
  int dim = 0;
  CHECK(cl_complex_cross_polytope_dimension(x, &dim) == CL_OK);
  CHECK(dim == 3);
  CHECK(cl_complex_simplex_boundary_dimension(x, &dim) == CL_OK);
  CHECK(dim == -1);

  char* json = nullptr;
  CHECK(cl_report_collapsibility(x, 1000000, &json) == CL_OK);
  const auto report = take_json(json);
  CHECK(report["collapsibility"] == 3);

  int ok = 0;
  CHECK(cl_verify_certificate(x, report["certificate"].dump().c_str(), &ok) == CL_OK);
  CHECK(ok == 1);
  CHECK(cl_verify_certificate(x, R"({"d":3,"steps":[]})", &ok) == CL_OK);
  CHECK(ok == 0);
  CHECK(cl_verify_certificate(x, "not json", &ok) == CL_INVALID_INPUT);

  CHECK(cl_report_collapse(x, 2, 1000000, &json) == CL_OK);
  CHECK(take_json(json)["verdict"] == "not_collapsible");
  CHECK(cl_report_collapse(x, 2, 0, &json) == CL_INVALID_INPUT);
  cl_complex_free(x);
}

TEST_CASE("building from facets") {
  const uint32_t ids[] = {1, 2, 2, 3, 1, 3};
  const size_t lengths[] = {2, 2, 2};
  cl_complex* x = nullptr;
  REQUIRE(cl_complex_from_facets(ids, lengths, 3, &x) == CL_OK);
  int dim = 0;
  CHECK(cl_complex_simplex_boundary_dimension(x, &dim) == CL_OK);
  CHECK(dim == 2);
  char* text = nullptr;
  CHECK(cl_complex_to_text(x, &text) == CL_OK);
  CHECK(std::string(text) == "1 2\n1 3\n2 3\n");
  cl_string_free(text);

  char* json = nullptr;
  CHECK(cl_report_mes_bound(x, CL_ORDERING_GIVEN, &json) == CL_OK);
  CHECK(take_json(json)["d_mes"] == 2);
  cl_complex_free(x);

  cl_complex* v = nullptr;
  REQUIRE(cl_complex_from_facets(nullptr, nullptr, 0, &v) == CL_OK);
  int is_void = 0;
  CHECK(cl_complex_is_void(v, &is_void) == CL_OK);
  CHECK(is_void == 1);
  cl_complex_free(v);
}

TEST_CASE("hypergraph constructions") {
  cl_hypergraph* h = nullptr;
  REQUIRE(cl_hypergraph_complete_uniform(4, 2, &h) == CL_OK);
  size_t edges = 0;
  CHECK(cl_hypergraph_edge_count(h, &edges) == CL_OK);
  CHECK(edges == 6);
  int tau = 0;
  CHECK(cl_hypergraph_covering_number(h, 1, &tau) == CL_OK);
  CHECK(tau == 3);

  cl_complex* octa = nullptr;
  REQUIRE(cl_build_int(h, 1, &octa) == CL_OK);
  int dim = 0;
  CHECK(cl_complex_cross_polytope_dimension(octa, &dim) == CL_OK);
  CHECK(dim == 3);
  char* json = nullptr;
  CHECK(cl_report_build(octa, &json) == CL_OK);
  const auto report = take_json(json);
  CHECK(report["command"] == "build-int");
  CHECK(report["labels"].size() == 6);
  cl_complex_free(octa);

  cl_graph* g = nullptr;
  REQUIRE(cl_graph_disjointness(h, 1, &g) == CL_OK);
  CHECK(cl_report_k_graph(g, &json) == CL_OK);
  CHECK(take_json(json)["k"] == 3);
  cl_complex* ind = nullptr;
  REQUIRE(cl_build_ind(g, &ind) == CL_OK);
  CHECK(cl_report_d_prime(ind, &json) == CL_OK);
  CHECK(take_json(json)["d_prime"] == 3);
  cl_complex_free(ind);
  cl_graph_free(g);
  cl_hypergraph_free(h);

  cl_hypergraph* k3 = nullptr;
  REQUIRE(cl_hypergraph_parse("1 2\n1 3\n2 3\n", &k3) == CL_OK);
  cl_complex* cov = nullptr;
  REQUIRE(cl_build_cov(k3, 1, 1, &cov) == CL_OK);
  CHECK(cl_complex_simplex_boundary_dimension(cov, &dim) == CL_OK);
  CHECK(dim == 2);
  cl_complex_free(cov);
  cl_hypergraph_free(k3);

  const int sides[] = {2, 2, 2};
  cl_hypergraph* kp = nullptr;
  REQUIRE(cl_hypergraph_complete_r_partite(sides, 3, &kp) == CL_OK);
  CHECK(cl_hypergraph_edge_count(kp, &edges) == CL_OK);
  CHECK(edges == 8);
  cl_hypergraph_free(kp);

  cl_hypergraph* h1 = nullptr;
  CHECK(cl_hypergraph_family_h1(2, 1, 1, &h1) == CL_INVALID_INPUT);
  CHECK(std::string(cl_last_error()).find("t") != std::string::npos);
  CHECK(cl_hypergraph_family_h2(2, 1, &h1) == CL_OK);
  cl_hypergraph_free(h1);
}

TEST_CASE("errors and undecided") {
  cl_complex* x = nullptr;
  CHECK(cl_complex_parse("1 2\nfoo\n", &x) == CL_INVALID_INPUT);
  CHECK(std::string(cl_last_error()).find("line 2") != std::string::npos);
  CHECK(x == nullptr);
  CHECK(cl_complex_parse(nullptr, &x) == CL_INVALID_INPUT);

  // Boundary of the 4-dimensional cross-polytope with a budget of one node.
  std::string text;
  for (int bits = 0; bits < 16; ++bits) {
    for (int i = 0; i < 4; ++i)
      text += std::to_string(2 * i + 1 + ((bits >> i) & 1)) + (i == 3 ? "\n" : " ");
  }
  REQUIRE(cl_complex_parse(text.c_str(), &x) == CL_OK);
  char* json = nullptr;
  CHECK(cl_report_collapsibility(x, 1, &json) == CL_UNDECIDED);
  const auto report = take_json(json);
  CHECK(report["verdict"] == "undecided");
  cl_complex_free(x);
}

TEST_CASE("lemma and extremal reports") {
  char* json = nullptr;
  CHECK(cl_report_verify_lemma(CL_LEMMA_FRANKL_KALAI, 1, 1, 0, 3, nullptr, 0, 1000000, &json) ==
        CL_OK);
  const auto fk = take_json(json);
  CHECK(fk["k_found"] == 2);
  CHECK(fk["bound"] == 2);
  CHECK(fk["ok"] == true);

  const int parts[] = {2};
  CHECK(cl_report_verify_lemma(CL_LEMMA_LNP, 1, 1, 0, 0, parts, 1, 1000000, &json) == CL_OK);
  CHECK(take_json(json)["k_found"] == 2);

  CHECK(cl_report_verify_extremal(2, 2, 1, 1000000, &json) == CL_OK);
  CHECK(take_json(json)["ok"] == true);
  CHECK(cl_report_verify_lemma(CL_LEMMA_FRANKL_KALAI, 1, 1, 0, 30, nullptr, 0, 10, &json) ==
        CL_INVALID_INPUT);
  CHECK(std::string(cl_version()) == "0.1.0");
}
