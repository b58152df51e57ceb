#pragma once

#include "collapse_lab/complex.hpp"
#include "collapse_lab/hypergraph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace collapse_lab {

/// A complex read from text, with the facet lines in file order (dominated
/// lines included) so they can serve as a given facet ordering.
struct ParsedComplex {
  SimplicialComplex complex;
  std::vector<Simplex> lines;
};

/// Complex text format: one facet per line, vertex ids separated by blanks.
/// A line "#void" denotes the void complex and "#empty" the complex {∅};
/// neither may be combined with facet lines. Other lines starting with '#'
/// are comments and blank lines are ignored. Errors name the line number.
ParsedComplex parse_complex(std::string_view text);
std::string format_complex(const SimplicialComplex& x);

/// Hypergraph text format: one edge per line; an optional "#parts: 1-3,4-6"
/// header declares a partition; parts are comma separated, each a range
/// "a-b" or a blank-separated list of ids.
Hypergraph parse_hypergraph(std::string_view text);
std::string format_hypergraph(const Hypergraph& h);

/// Graph text format: "u v" per edge; a line with a single id declares a
/// (possibly isolated) vertex.
Graph parse_graph(std::string_view text);

} // namespace collapse_lab
