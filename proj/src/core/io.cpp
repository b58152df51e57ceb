#include "collapse_lab/io.hpp"

#include "collapse_lab/errors.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>

namespace collapse_lab {

namespace {

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && blank(s.front()))
    s.remove_prefix(1);
  while (!s.empty() && blank(s.back()))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw InvalidInput("line " + std::to_string(line) + ": " + msg);
}

Vertex parse_id(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() ||
      value > std::numeric_limits<Vertex>::max())
    fail(line, "invalid vertex id '" + std::string(tok) + "'");
  return static_cast<Vertex>(value);
}

std::vector<Vertex> parse_ids(std::string_view s, std::size_t line) {
  std::vector<Vertex> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
      ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t')
      ++j;
    if (j > i)
      out.push_back(parse_id(s.substr(i, j - i), line));
    i = j;
  }
  std::vector<Vertex> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(line, "repeated vertex id");
  return out;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line = 0;
  while (!text.empty()) {
    ++line;
    const std::size_t nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    f(line, trim(raw));
    if (nl == std::string_view::npos)
      break;
    text.remove_prefix(nl + 1);
  }
}

std::vector<Simplex> parse_parts(std::string_view spec, std::size_t line) {
  std::vector<Simplex> parts;
  while (true) {
    const std::size_t comma = spec.find(',');
    const std::string_view item = trim(spec.substr(0, comma));
    if (item.empty())
      fail(line, "empty part in #parts header");
    const std::size_t dash = item.find('-');
    std::vector<Vertex> members;
    if (dash == std::string_view::npos) {
      members = parse_ids(item, line);
    } else {
      const Vertex lo = parse_id(trim(item.substr(0, dash)), line);
      const Vertex hi = parse_id(trim(item.substr(dash + 1)), line);
      if (hi < lo)
        fail(line, "part range " + std::string(item) + " is reversed");
      if (hi - lo >= kMaxVertices)
        fail(line, "part range " + std::string(item) + " is too large");
      for (Vertex v = lo; v <= hi; ++v)
        members.push_back(v);
    }
    parts.emplace_back(std::move(members));
    if (comma == std::string_view::npos)
      break;
    spec.remove_prefix(comma + 1);
  }
  return parts;
}

} // namespace

ParsedComplex parse_complex(std::string_view text) {
  ParsedComplex out;
  bool is_void = false;
  bool is_empty = false;
  std::size_t header_line = 0;
  for_each_line(text, [&](std::size_t line, std::string_view s) {
    if (s.empty())
      return;
    if (s.front() == '#') {
      if (s == "#void" || s == "#empty") {
        if (is_void || is_empty)
          fail(line, "more than one #void/#empty header");
        (s == "#void" ? is_void : is_empty) = true;
        header_line = line;
      }
      return;
    }
    out.lines.emplace_back(parse_ids(s, line));
  });
  if ((is_void || is_empty) && !out.lines.empty())
    fail(header_line, "#void and #empty cannot be combined with facet lines");
  if (is_void)
    return out;
  if (is_empty) {
    out.complex = SimplicialComplex::empty_complex();
    out.lines.emplace_back();
    return out;
  }
  if (out.lines.empty())
    throw InvalidInput("no facets found; write #void or #empty for the degenerate complexes");
  out.complex = make_complex(out.lines);
  return out;
}

std::string format_complex(const SimplicialComplex& x) {
  if (x.is_void())
    return "#void\n";
  if (x.is_empty_face_only())
    return "#empty\n";
  std::ostringstream os;
  for (const auto& f : x.facets()) {
    bool first = true;
    for (Vertex v : f) {
      os << (first ? "" : " ") << v;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::vector<Simplex> edges;
  std::optional<std::vector<Simplex>> parts;
  std::set<Simplex> seen;
  for_each_line(text, [&](std::size_t line, std::string_view s) {
    if (s.empty())
      return;
    if (s.front() == '#') {
      constexpr std::string_view key = "#parts:";
      if (s.substr(0, key.size()) == key) {
        if (parts)
          fail(line, "more than one #parts header");
        parts = parse_parts(s.substr(key.size()), line);
      }
      return;
    }
    Simplex e(parse_ids(s, line));
    if (!seen.insert(e).second)
      fail(line, "edge " + e.to_string() + " appears twice");
    edges.push_back(std::move(e));
  });
  return Hypergraph(std::move(edges), std::move(parts));
}

std::string format_hypergraph(const Hypergraph& h) {
  std::ostringstream os;
  if (h.parts()) {
    os << "#parts:";
    bool first = true;
    for (const auto& part : *h.parts()) {
      os << (first ? " " : ",");
      first = false;
      bool inner = true;
      for (Vertex v : part) {
        os << (inner ? "" : " ") << v;
        inner = false;
      }
    }
    os << '\n';
  }
  for (const auto& e : h.edges()) {
    bool first = true;
    for (Vertex v : e) {
      os << (first ? "" : " ") << v;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

Graph parse_graph(std::string_view text) {
  std::vector<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for_each_line(text, [&](std::size_t line, std::string_view s) {
    if (s.empty() || s.front() == '#')
      return;
    const auto ids = parse_ids(s, line);
    if (ids.size() == 1)
      vertices.push_back(ids[0]);
    else if (ids.size() == 2)
      edges.emplace_back(ids[0], ids[1]);
    else
      fail(line, "expected one vertex id or an edge 'u v'");
  });
  return Graph(std::move(vertices), std::move(edges));
}

} // namespace collapse_lab
