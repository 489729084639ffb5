#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pi1trunc/field.hpp"
#include "pi1trunc/graph_core.hpp"
#include "pi1trunc/multigraph.hpp"
#include "pi1trunc/trunc_algebra.hpp"

namespace pi1trunc {

// Sum of the (e_j - 1)(e - 1) coefficients of w(gamma), read as a 1-chain in the
// e_j. For e occurring once and positively this is the chain of the prefix of
// gamma before e, so its boundary is tail(e) - v0.
template <Field F>
Chain1<typename F::value_type> eta_chain(const Word& gamma, const std::string& e, const F& field) {
  std::size_t count = 0;
  bool reversed = false;
  for (const auto& l : gamma) {
    if (l.edge != e) continue;
    ++count;
    reversed = reversed || l.sign < 0;
  }
  if (count == 0) throw std::invalid_argument("eta_chain: edge '" + e + "' does not occur in the walk");
  if (count > 1) throw std::invalid_argument("eta_chain: edge '" + e + "' occurs more than once");
  if (reversed) throw std::invalid_argument("eta_chain: edge '" + e + "' occurs against its orientation");
  const auto image = embed_word(gamma, 2, field);
  Chain1<typename F::value_type> eta;
  for (const auto& [ef, x] : image.deg2)
    if (ef.second == e) add_to(eta, ef.first, x);
  return eta;
}

struct ReconstructFailure {
  std::string edge;      // offending edge of G (empty for global checks)
  std::string expected;  // vertex of G' the extension requires
  std::string found;     // vertex of G' actually met
  std::string reason;

  friend bool operator==(const ReconstructFailure&, const ReconstructFailure&) = default;
};

using ReconstructResult = std::variant<VertexMap, ReconstructFailure>;

inline bool succeeded(const ReconstructResult& r) { return std::holds_alternative<VertexMap>(r); }

// Grows a connected subgraph H from {v0}, one frontier edge at a time (smallest
// id first), extending psi with the endpoint that phi(e) dictates. Under equal
// level-2 invariants no assignment can conflict, so any conflict is reported
// rather than searched around. Loops at the basepoints are matched last.
inline ReconstructResult reconstruct_isomorphism(const Multigraph& g, const Multigraph& g2, const EdgeBijection& phi) {
  if (!is_two_edge_connected(g)) throw std::invalid_argument("reconstruct: source graph is not 2-edge-connected");
  if (!is_two_edge_connected(g2)) throw std::invalid_argument("reconstruct: target graph is not 2-edge-connected");
  phi.check_between(g, g2);

  auto is_base_loop = [](const Multigraph& h, const Edge& e) { return e.is_loop() && e.tail == h.basepoint(); };

  VertexMap psi{{g.basepoint(), g2.basepoint()}};
  std::set<std::string> image{g2.basepoint()};
  std::set<std::string> in_h{g.basepoint()};
  std::set<std::string> used_edges;

  for (;;) {
    const Edge* next = nullptr;
    for (const auto& e : g.edges()) {
      if (used_edges.count(e.id) || is_base_loop(g, e)) continue;
      if (in_h.count(e.tail) || in_h.count(e.head)) {
        next = &e;
        break;
      }
    }
    if (!next) break;
    const Edge& e = *next;
    const bool from_tail = in_h.count(e.tail) != 0;
    const std::string& x = from_tail ? e.tail : e.head;
    const std::string& y = from_tail ? e.head : e.tail;
    const auto& img = phi(e.id);
    const int sign = from_tail ? img.sign : -img.sign;
    const Edge& e2 = g2.edge(img.edge);
    const std::string& x2 = signed_tail(e2, sign);
    const std::string& y2 = signed_head(e2, sign);

    if (psi.at(x) != x2) return ReconstructFailure{e.id, psi.at(x), x2, "initial vertex of the image edge"};
    if (in_h.count(y)) {
      if (psi.at(y) != y2) return ReconstructFailure{e.id, psi.at(y), y2, "terminal vertex of the image edge"};
    } else {
      if (image.count(y2)) return ReconstructFailure{e.id, "", y2, "terminal vertex already matched"};
      psi[y] = y2;
      image.insert(y2);
      in_h.insert(y);
    }
    used_edges.insert(e.id);
  }

  for (const auto& e : g.edges()) {
    if (!is_base_loop(g, e)) continue;
    const auto& img = phi(e.id);
    const Edge& e2 = g2.edge(img.edge);
    if (!is_base_loop(g2, e2))
      return ReconstructFailure{e.id, g2.basepoint(), signed_tail(e2, img.sign), "base loop maps off the base loops"};
  }
  std::size_t loops = 0, loops2 = 0;
  for (const auto& e : g.edges()) loops += is_base_loop(g, e) ? 1 : 0;
  for (const auto& e : g2.edges()) loops2 += is_base_loop(g2, e) ? 1 : 0;
  if (loops != loops2) return ReconstructFailure{"", "", "", "base loop counts differ"};
  if (psi.size() != g.vertex_count() || image.size() != g2.vertex_count())
    return ReconstructFailure{"", "", "", "vertex sets are not matched bijectively"};
  return psi;
}

}  // namespace pi1trunc
