#include <set>
#include <sstream>

#include "edcol/error.hpp"
#include "edcol/graph.hpp"
#include "text_util.hpp"

namespace edcol {

Graph parse_graph(std::string_view text) {
  int n = -1;
  long long declared_m = -1;
  int header_line = 0;
  std::set<Edge> seen;
  std::vector<Edge> edges;
  std::vector<std::pair<int, std::pair<Vertex, std::string>>> pending_labels;

  int line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    if (detail::is_comment(line)) {
      if (auto lab = detail::parse_label_comment(line, line_no))
        pending_labels.push_back({line_no, *lab});
      continue;
    }
    auto tok = detail::split_tokens(line);
    if (!tok) throw ParseError(ParseErrorKind::Malformed, line_no, "stray whitespace");
    if (tok->empty()) throw ParseError(ParseErrorKind::Malformed, line_no, "empty line");
    const auto& t = *tok;
    if (t[0] == "p") {
      if (n >= 0) throw ParseError(ParseErrorKind::DuplicateHeader, line_no, "");
      if (t.size() != 4 || t[1] != "edge")
        throw ParseError(ParseErrorKind::Malformed, line_no, "expected 'p edge <n> <m>'");
      auto nn = detail::parse_int(t[2]);
      auto mm = detail::parse_int(t[3]);
      if (!nn || !mm || *nn < 0 || *mm < 0)
        throw ParseError(ParseErrorKind::Malformed, line_no, "bad header counts");
      n = static_cast<int>(*nn);
      declared_m = *mm;
      header_line = line_no;
    } else if (t[0] == "e") {
      if (n < 0) throw ParseError(ParseErrorKind::MissingHeader, line_no, "edge before header");
      if (t.size() != 3) throw ParseError(ParseErrorKind::Malformed, line_no, "expected 'e <u> <v>'");
      auto u = detail::parse_int(t[1]);
      auto v = detail::parse_int(t[2]);
      if (!u || !v) throw ParseError(ParseErrorKind::Malformed, line_no, "bad vertex id");
      if (*u < 1 || *u > n || *v < 1 || *v > n)
        throw ParseError(ParseErrorKind::VertexOutOfRange, line_no,
                         std::string(t[1]) + " " + std::string(t[2]));
      if (*u == *v) throw ParseError(ParseErrorKind::SelfLoop, line_no, std::string(t[1]));
      Edge e = Edge::of(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
      if (!seen.insert(e).second)
        throw ParseError(ParseErrorKind::DuplicateEdge, line_no,
                         std::to_string(e.u) + " " + std::to_string(e.v));
      edges.push_back(e);
    } else {
      throw ParseError(ParseErrorKind::Malformed, line_no, "unknown line type");
    }
  }
  if (n < 0) throw ParseError(ParseErrorKind::MissingHeader, 0, "");
  if (static_cast<long long>(edges.size()) != declared_m)
    throw ParseError(ParseErrorKind::EdgeCountMismatch, header_line,
                     "header says " + std::to_string(declared_m) + ", found " +
                         std::to_string(edges.size()));
  Graph g(n, edges);
  for (const auto& [ln, lab] : pending_labels) {
    if (!g.contains(lab.first))
      throw ParseError(ParseErrorKind::VertexOutOfRange, ln, "label vertex");
    g.set_label(lab.first, lab.second);
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  for (const auto& [v, name] : g.labels()) out << "c label " << v << ' ' << name << '\n';
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) { return parse_graph(detail::read_file(path)); }

void write_graph_file(const Graph& g, const std::string& path) {
  detail::write_file(path, format_graph(g));
}

}  // namespace edcol
