#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pi1trunc/multigraph.hpp"

namespace pi1trunc {

struct TwistResult {
  Multigraph graph;
  EdgeBijection phi;
};

// Whitney twist at the 2-separation {u, v}: the side's attachments at u and v
// are exchanged. Edges with both ends in {u, v} stay on the untwisted side. The
// returned bijection is the identity on ids with sign -1 on twisted edges.
inline TwistResult whitney_twist(const Multigraph& g, const std::string& u, const std::string& v,
                                 const std::set<std::string>& side) {
  if (u == v) throw std::invalid_argument("twist: cut vertices must be distinct");
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw std::invalid_argument("twist: cut vertex is not in the graph");
  for (const auto& id : side)
    if (!g.has_edge(id)) throw std::invalid_argument("twist: side edge '" + id + "' is not in the graph");

  auto on_cut = [&](const std::string& x) { return x == u || x == v; };
  std::set<std::string> twisted, side_interior, rest_interior;
  for (const auto& e : g.edges()) {
    const bool in_side = side.count(e.id) && !(on_cut(e.tail) && on_cut(e.head));
    if (in_side) twisted.insert(e.id);
    auto& interior = in_side ? side_interior : rest_interior;
    if (!on_cut(e.tail)) interior.insert(e.tail);
    if (!on_cut(e.head)) interior.insert(e.head);
  }
  for (const auto& x : side_interior)
    if (rest_interior.count(x))
      throw std::invalid_argument("twist: {" + u + ", " + v + "} does not separate the side (vertex '" + x + "')");
  if (side_interior.count(g.basepoint()))
    throw std::invalid_argument("twist: basepoint lies inside the twisted side");

  auto swap_cut = [&](const std::string& x) { return x == u ? v : (x == v ? u : x); };
  std::vector<Edge> edges;
  std::map<std::string, EdgeBijection::Image> phi;
  for (const auto& e : g.edges()) {
    if (twisted.count(e.id)) {
      edges.push_back({e.id, swap_cut(e.tail), swap_cut(e.head)});
      phi[e.id] = {e.id, -1};
    } else {
      edges.push_back(e);
      phi[e.id] = {e.id, 1};
    }
  }
  return {Multigraph(g.vertices(), std::move(edges), g.basepoint()), EdgeBijection(std::move(phi))};
}

// Quotient identifying p and q into min(p, q); p-q edges become loops.
inline Multigraph identify_vertices(const Multigraph& g, const std::string& p, const std::string& q) {
  if (p == q) throw std::invalid_argument("identify: vertices must be distinct");
  if (!g.has_vertex(p) || !g.has_vertex(q)) throw std::invalid_argument("identify: vertex is not in the graph");
  const std::string keep = std::min(p, q), drop = std::max(p, q);
  auto rename = [&](const std::string& x) { return x == drop ? keep : x; };
  std::vector<std::string> vertices;
  for (const auto& x : g.vertices())
    if (x != drop) vertices.push_back(x);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({e.id, rename(e.tail), rename(e.head)});
  return Multigraph(std::move(vertices), std::move(edges), rename(g.basepoint()));
}

}  // namespace pi1trunc
