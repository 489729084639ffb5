#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pi1trunc/invariant.hpp"
#include "pi1trunc/multigraph.hpp"
#include "pi1trunc/reconstruct.hpp"

namespace pi1trunc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

// Whitespace-separated tokens of one line; '#' starts a comment.
inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

template <class Fn>
void for_each_line(const std::string& text, Fn&& fn) {
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) fn(++number, detail::tokenize(line));
}

}  // namespace detail

// Graph document:
//   basepoint <vertex>          exactly once
//   edge <id> <tail> <head>     one per edge
//   vertex <id>                 optional
//   # comment
// Without any `vertex` line, vertices are the basepoint and all edge endpoints.
// Once a `vertex` line is present every vertex must be declared, and any other
// name is reported as unknown.
inline Multigraph parse_graph(const std::string& text) {
  std::optional<std::string> base;
  std::size_t base_line = 0, base_col = 0;
  std::vector<Edge> edges;
  std::vector<std::pair<std::size_t, std::size_t>> edge_pos;
  std::vector<std::vector<detail::Token>> edge_tokens;
  std::set<std::string> declared;
  std::set<std::string> edge_ids;
  detail::for_each_line(text, [&](std::size_t ln, const std::vector<detail::Token>& toks) {
    if (toks.empty()) return;
    const auto& kw = toks[0].text;
    if (kw == "basepoint") {
      if (toks.size() != 2) throw ParseError(ln, toks[0].column, "expected 'basepoint <vertex>'");
      if (base) throw ParseError(ln, toks[0].column, "duplicate basepoint (first given on line " +
                                                        std::to_string(base_line) + ")");
      base = toks[1].text;
      base_line = ln;
      base_col = toks[1].column;
    } else if (kw == "edge") {
      if (toks.size() != 4) throw ParseError(ln, toks[0].column, "expected 'edge <id> <tail> <head>'");
      if (!edge_ids.insert(toks[1].text).second)
        throw ParseError(ln, toks[1].column, "duplicate edge id '" + toks[1].text + "'");
      edges.push_back({toks[1].text, toks[2].text, toks[3].text});
      edge_tokens.push_back(toks);
      edge_pos.emplace_back(ln, toks[0].column);
    } else if (kw == "vertex") {
      if (toks.size() != 2) throw ParseError(ln, toks[0].column, "expected 'vertex <id>'");
      if (!declared.insert(toks[1].text).second)
        throw ParseError(ln, toks[1].column, "duplicate vertex '" + toks[1].text + "'");
    } else {
      throw ParseError(ln, toks[0].column, "unknown directive '" + kw + "'");
    }
  });
  if (!base) throw ParseError(1, 1, "missing basepoint");
  if (!declared.empty()) {
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t k : {2U, 3U})
        if (!declared.count(edge_tokens[i][k].text))
          throw ParseError(edge_pos[i].first, edge_tokens[i][k].column,
                           "unknown vertex '" + edge_tokens[i][k].text + "'");
    if (!declared.count(*base)) throw ParseError(base_line, base_col, "unknown vertex '" + *base + "'");
    return Multigraph({declared.begin(), declared.end()}, std::move(edges), *base);
  }
  return Multigraph::from_edges(std::move(edges), *base);
}

// Canonical document: basepoint, then (only when some vertex other than the
// basepoint carries no edge) every vertex, then edges by id.
inline std::string serialize_graph(const Multigraph& g) {
  std::set<std::string> touched{g.basepoint()};
  for (const auto& e : g.edges()) {
    touched.insert(e.tail);
    touched.insert(e.head);
  }
  std::ostringstream out;
  out << "basepoint " << g.basepoint() << "\n";
  if (touched.size() != g.vertex_count())
    for (const auto& v : g.vertices()) out << "vertex " << v << "\n";
  for (const auto& e : g.edges()) out << "edge " << e.id << " " << e.tail << " " << e.head << "\n";
  return out.str();
}

// Bijection document: one "<edge> -> <edge> <+|->" line per source edge.
inline EdgeBijection parse_bijection(const std::string& text, const Multigraph& g, const Multigraph& g2) {
  std::map<std::string, EdgeBijection::Image> map;
  std::set<std::string> targets;
  detail::for_each_line(text, [&](std::size_t ln, const std::vector<detail::Token>& toks) {
    if (toks.empty()) return;
    if (toks.size() != 4 || toks[1].text != "->")
      throw ParseError(ln, toks[0].column, "expected '<edge> -> <edge> <+|->'");
    if (toks[3].text != "+" && toks[3].text != "-")
      throw ParseError(ln, toks[3].column, "orientation must be '+' or '-'");
    if (!g.has_edge(toks[0].text))
      throw ParseError(ln, toks[0].column, "'" + toks[0].text + "' is not an edge of the source graph");
    if (!g2.has_edge(toks[2].text))
      throw ParseError(ln, toks[2].column, "'" + toks[2].text + "' is not an edge of the target graph");
    if (map.count(toks[0].text))
      throw ParseError(ln, toks[0].column, "source edge '" + toks[0].text + "' mapped twice");
    if (!targets.insert(toks[2].text).second)
      throw ParseError(ln, toks[2].column, "target edge '" + toks[2].text + "' hit twice");
    map[toks[0].text] = {toks[2].text, toks[3].text == "+" ? 1 : -1};
  });
  if (map.size() != g.edge_count()) throw ParseError(1, 1, "bijection does not cover every source edge");
  if (targets.size() != g2.edge_count()) throw ParseError(1, 1, "bijection does not cover every target edge");
  return EdgeBijection(std::move(map));
}

inline std::string serialize_bijection(const EdgeBijection& phi) {
  std::ostringstream out;
  for (const auto& [src, img] : phi.map()) out << src << " -> " << img.edge << " " << (img.sign > 0 ? "+" : "-") << "\n";
  return out.str();
}

template <class T>
nlohmann::json matrix_json(const Matrix<T>& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = nlohmann::json::array();
    for (const auto& x : m.row(i)) r.push_back(x.to_string());
    rows.push_back(std::move(r));
  }
  return rows;
}

template <class T>
nlohmann::json subalgebra_json(const Subalgebra<T>& s, const std::string& field_name) {
  return {{"level", s.level}, {"edge_order", s.edge_order}, {"basis", matrix_json(s.basis)}, {"field", field_name}};
}

inline nlohmann::json reconstruct_json(const ReconstructResult& r) {
  if (const auto* psi = std::get_if<VertexMap>(&r)) return {{"ok", true}, {"vertex_map", *psi}};
  const auto& f = std::get<ReconstructFailure>(r);
  return {{"ok", false},
          {"failure", {{"edge", f.edge}, {"expected", f.expected}, {"found", f.found}, {"reason", f.reason}}}};
}

}  // namespace pi1trunc
