#pragma once

#include "collapse_lab/collapse.hpp"
#include "collapse_lab/complex.hpp"
#include "collapse_lab/extremal.hpp"
#include "collapse_lab/hypergraph.hpp"
#include "collapse_lab/mes.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace collapse_lab {

using Json = nlohmann::ordered_json;

/// {"vertices":[…],"facets":[[…],…]}. The void complex has no facets; {∅}
/// has the single facet [].
Json complex_to_json(const SimplicialComplex& x);
SimplicialComplex complex_from_json(const Json& j);

/// {"d":…,"steps":[{"eta":[…],"tau":[…]},…]}
Json certificate_to_json(const CollapseCertificate& cert);
/// Throws InvalidInput on malformed documents.
CollapseCertificate certificate_from_json(const Json& j);

Json system_to_json(const SetPairSystem& sys);

std::string_view verdict_name(Verdict v);

enum class OrderingMode { lex, given, search };

/// Reports behind the command-line subcommands. Each is deterministic in its
/// inputs.
Json build_report(const std::string& command, const SimplicialComplex& x, const Hypergraph* source,
                  std::optional<int> p, std::optional<int> t,
                  const std::vector<std::size_t>& dropped_edges);
Json mes_bound_report(const SimplicialComplex& x, OrderingMode mode,
                      const std::vector<Simplex>& given_ordering);
Json d_prime_report(const SimplicialComplex& x);
Json k_graph_report(const Graph& g);
Json collapse_report(const SimplicialComplex& x, int d, const SearchOptions& options);
Json collapsibility_report(const SimplicialComplex& x, const SearchOptions& options);
Json verify_lemma_report(const SystemSearchParams& params);
Json verify_extremal_report(int r, int p, int t, const SearchOptions& options);

} // namespace collapse_lab
