// collapse-lab: batch front end over the C library.
//
// Every subcommand writes one JSON report (stdout, or --json <path>) and a
// one-line summary on stderr. Exit status: 0 ok, 1 invalid input, 2 undecided.

#include "collapse_lab/collapse_lab.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitUndecided = 2;

struct Failure {
  int code;
  std::string message;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using ComplexPtr = std::unique_ptr<cl_complex, Deleter<cl_complex, cl_complex_free>>;
using HypergraphPtr = std::unique_ptr<cl_hypergraph, Deleter<cl_hypergraph, cl_hypergraph_free>>;
using GraphPtr = std::unique_ptr<cl_graph, Deleter<cl_graph, cl_graph_free>>;

void check(cl_status s) {
  if (s == CL_OK || s == CL_UNDECIDED)
    return;
  throw Failure{s == CL_INVALID_INPUT ? kExitInvalid : 3, cl_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  cl_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Failure{kExitInvalid, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ComplexPtr load_complex(const std::string& path) {
  cl_complex* x = nullptr;
  check(cl_complex_parse(read_input(path).c_str(), &x));
  return ComplexPtr(x);
}

HypergraphPtr load_hypergraph(const std::string& path) {
  cl_hypergraph* h = nullptr;
  check(cl_hypergraph_parse(read_input(path).c_str(), &h));
  return HypergraphPtr(h);
}

GraphPtr load_graph(const std::string& path) {
  cl_graph* g = nullptr;
  check(cl_graph_parse(read_input(path).c_str(), &g));
  return GraphPtr(g);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Failure{kExitInvalid, "cannot write " + path};
  out << text;
}

struct Config {
  std::string input;
  std::string lemma;
  std::string json_path;
  std::string out_complex;
  std::string ordering = "lex";
  std::optional<int> p, t, d, r, ground;
  std::vector<int> parts;
  std::uint64_t budget = 10'000'000;
};

using Report = std::pair<cl_status, std::string>;

Report finish(cl_status s, char** json) {
  check(s);
  return {s, take(*json)};
}

std::string summary(const std::string& command, const nlohmann::ordered_json& j) {
  std::ostringstream out;
  out << command << ":";
  for (const char* key : {"facet_count", "d_mes", "d_prime", "k", "verdict", "collapsibility",
                          "k_found", "bound", "ok", "nodes"}) {
    if (j.contains(key))
      out << " " << key << "=" << j[key].dump();
  }
  return out.str();
}

Report dispatch(const std::string& command, const Config& cfg) {
  char* json = nullptr;
  if (command == "build-cov" || command == "build-int" || command == "build-ind") {
    cl_complex* raw = nullptr;
    if (command == "build-ind") {
      GraphPtr g = load_graph(cfg.input);
      check(cl_build_ind(g.get(), &raw));
    } else {
      HypergraphPtr h = load_hypergraph(cfg.input);
      if (command == "build-cov") {
        if (!cfg.p)
          throw Failure{kExitInvalid, "build-cov requires -p"};
        check(cl_build_cov(h.get(), *cfg.p, cfg.t.value_or(1), &raw));
      } else {
        check(cl_build_int(h.get(), cfg.t.value_or(1), &raw));
      }
    }
    ComplexPtr x(raw);
    if (!cfg.out_complex.empty()) {
      char* text = nullptr;
      check(cl_complex_to_text(x.get(), &text));
      write_text(cfg.out_complex, take(text));
    }
    return finish(cl_report_build(x.get(), &json), &json);
  }
  if (command == "mes-bound") {
    cl_ordering_mode mode;
    if (cfg.ordering == "lex")
      mode = CL_ORDERING_LEX;
    else if (cfg.ordering == "given")
      mode = CL_ORDERING_GIVEN;
    else
      mode = CL_ORDERING_SEARCH;
    ComplexPtr x = load_complex(cfg.input);
    return finish(cl_report_mes_bound(x.get(), mode, &json), &json);
  }
  if (command == "d-prime") {
    ComplexPtr x = load_complex(cfg.input);
    return finish(cl_report_d_prime(x.get(), &json), &json);
  }
  if (command == "k-graph") {
    GraphPtr g = load_graph(cfg.input);
    return finish(cl_report_k_graph(g.get(), &json), &json);
  }
  if (command == "collapse") {
    if (!cfg.d)
      throw Failure{kExitInvalid, "collapse requires -d"};
    ComplexPtr x = load_complex(cfg.input);
    return finish(cl_report_collapse(x.get(), *cfg.d, cfg.budget, &json), &json);
  }
  if (command == "collapsibility") {
    ComplexPtr x = load_complex(cfg.input);
    return finish(cl_report_collapsibility(x.get(), cfg.budget, &json), &json);
  }
  if (command == "verify-lemma") {
    cl_lemma lemma;
    if (cfg.lemma == "frankl-kalai" || cfg.lemma == "frankl_kalai")
      lemma = CL_LEMMA_FRANKL_KALAI;
    else if (cfg.lemma == "furedi")
      lemma = CL_LEMMA_FUREDI;
    else if (cfg.lemma == "lnp")
      lemma = CL_LEMMA_LNP;
    else
      throw Failure{kExitInvalid, "unknown lemma '" + cfg.lemma + "'"};
    if (!cfg.r)
      throw Failure{kExitInvalid, "verify-lemma requires -r"};
    const int r = *cfg.r;
    const int p = cfg.p.value_or(r);
    const int ground = cfg.ground.value_or(0);
    return finish(cl_report_verify_lemma(lemma, r, p, cfg.t.value_or(0), ground,
                                         cfg.parts.empty() ? nullptr : cfg.parts.data(),
                                         cfg.parts.size(), cfg.budget, &json),
                  &json);
  }
  if (command == "verify-extremal") {
    if (!cfg.r || !cfg.t)
      throw Failure{kExitInvalid, "verify-extremal requires -r and -t"};
    const int p = cfg.p.value_or(*cfg.t + 1);
    return finish(cl_report_verify_extremal(*cfg.r, p, *cfg.t, cfg.budget, &json), &json);
  }
  throw Failure{kExitInvalid, "unknown command " + command};
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial complexes of hypergraphs and their collapsibility"};
  app.set_version_flag("--version", std::string(cl_version()));
  app.require_subcommand(1);

  Config cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", cfg.json_path, "Write the JSON report here instead of stdout");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, "Node cap for exact searches")
        ->check(CLI::PositiveNumber);
  };
  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", cfg.input, what)->required();
  };

  auto* build_cov = app.add_subcommand("build-cov", "Covering complex of a hypergraph");
  add_input(build_cov, "Hypergraph file");
  build_cov->add_option("-p", cfg.p, "Cover size")->required();
  build_cov->add_option("-t", cfg.t, "Intersection threshold (default 1)");
  build_cov->add_option("--out-complex", cfg.out_complex, "Also write the complex file");

  auto* build_int = app.add_subcommand("build-int", "Intersection complex of a hypergraph");
  add_input(build_int, "Hypergraph file");
  build_int->add_option("-t", cfg.t, "Intersection threshold (default 1)");
  build_int->add_option("--out-complex", cfg.out_complex, "Also write the complex file");

  auto* build_ind = app.add_subcommand("build-ind", "Independence complex of a graph");
  add_input(build_ind, "Graph file");
  build_ind->add_option("--out-complex", cfg.out_complex, "Also write the complex file");

  auto* mes_bound = app.add_subcommand("mes-bound", "Minimal exclusion sequence bound");
  add_input(mes_bound, "Complex file");
  mes_bound->add_option("--ordering", cfg.ordering, "Facet ordering")
      ->check(CLI::IsMember({"lex", "given", "search"}));

  auto* d_prime = app.add_subcommand("d-prime", "Largest S(X) witness size");
  add_input(d_prime, "Complex file");

  auto* k_graph = app.add_subcommand("k-graph", "k(G) of a graph");
  add_input(k_graph, "Graph file");

  auto* collapse = app.add_subcommand("collapse", "Decide d-collapsibility");
  add_input(collapse, "Complex file");
  collapse->add_option("-d", cfg.d, "Collapse dimension")->required();
  add_budget(collapse);

  auto* collapsibility = app.add_subcommand("collapsibility", "Least d with X d-collapsible");
  add_input(collapsibility, "Complex file");
  add_budget(collapsibility);

  auto* verify_lemma = app.add_subcommand("verify-lemma", "Exhaustive set-pair system search");
  verify_lemma->add_option("lemma", cfg.lemma, "frankl-kalai, furedi or lnp")->required();
  verify_lemma->add_option("-r", cfg.r, "Bound on |A_i|")->required();
  verify_lemma->add_option("-p", cfg.p, "Bound on |B_i| (default r)");
  verify_lemma->add_option("-t", cfg.t, "Intersection threshold (furedi)");
  verify_lemma->add_option("-g,--ground", cfg.ground, "Ground set size");
  verify_lemma->add_option("--parts", cfg.parts, "Part sizes (lnp)")->delimiter(',');
  add_budget(verify_lemma);

  auto* verify_extremal = app.add_subcommand("verify-extremal", "Check the extremal families");
  verify_extremal->add_option("-r", cfg.r, "Uniformity")->required();
  verify_extremal->add_option("-t", cfg.t, "Threshold")->required();
  verify_extremal->add_option("-p", cfg.p, "Cover size for the covering family (default t+1)");
  add_budget(verify_extremal);

  for (auto* sub : app.get_subcommands({}))
    add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    auto [status, json] = dispatch(command, cfg);
    write_text(cfg.json_path, json);
    std::cerr << summary(command, nlohmann::ordered_json::parse(json)) << "\n";
    return status == CL_UNDECIDED ? kExitUndecided : 0;
  } catch (const Failure& f) {
    std::cerr << "collapse-lab " << command << ": " << f.message << "\n";
    return f.code;
  }
}
