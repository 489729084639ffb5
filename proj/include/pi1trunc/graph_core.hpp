#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pi1trunc/field.hpp"
#include "pi1trunc/matrix.hpp"
#include "pi1trunc/multigraph.hpp"

namespace pi1trunc {

// Finitely supported chains; absent keys are zero and zero entries are never stored.
template <class T>
using Chain1 = std::map<std::string, T>;
template <class T>
using Chain0 = std::map<std::string, T>;

template <class T>
void add_to(std::map<std::string, T>& chain, const std::string& key, const T& value) {
  if (is_zero(value)) return;
  auto [it, inserted] = chain.try_emplace(key, value);
  if (inserted) return;
  it->second += value;
  if (is_zero(it->second)) chain.erase(it);
}

inline bool is_connected(const Multigraph& g) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue{g.base_index()};
  seen[g.base_index()] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto ei : g.incident(x)) {
      const auto& e = g.edges()[ei];
      for (const auto* end : {&e.tail, &e.head}) {
        const auto y = g.vertex_index(*end);
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          queue.push_back(y);
        }
      }
    }
  }
  return reached == g.vertex_count();
}

inline void require_connected(const Multigraph& g, const char* op) {
  if (!is_connected(g)) throw std::invalid_argument(std::string(op) + ": graph is disconnected");
}

// Bridges via DFS low-points. Parallel edges are distinguished by edge index, so a
// doubled edge is never a bridge; loops are skipped.
inline std::vector<std::string> bridges(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::string> found;
  int clock = 0;
  std::function<void(std::size_t, std::optional<std::size_t>)> dfs = [&](std::size_t x,
                                                                        std::optional<std::size_t> via) {
    disc[x] = low[x] = clock++;
    for (auto ei : g.incident(x)) {
      const auto& e = g.edges()[ei];
      if (e.is_loop() || (via && *via == ei)) continue;
      const auto y = g.vertex_index(e.tail == g.vertices()[x] ? e.head : e.tail);
      if (disc[y] < 0) {
        dfs(y, ei);
        low[x] = std::min(low[x], low[y]);
        if (low[y] > disc[x]) found.push_back(e.id);
      } else {
        low[x] = std::min(low[x], disc[y]);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, std::nullopt);
  std::sort(found.begin(), found.end());
  return found;
}

inline bool is_two_edge_connected(const Multigraph& g) { return is_connected(g) && bridges(g).empty(); }

// Breadth-first spanning tree from the basepoint. Vertices are expanded in queue
// order and each vertex scans its incident edges by increasing id.
inline std::set<std::string> spanning_tree(const Multigraph& g) {
  require_connected(g, "spanning_tree");
  std::set<std::string> tree;
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue{g.base_index()};
  seen[g.base_index()] = true;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto ei : g.incident(x)) {
      const auto& e = g.edges()[ei];
      if (e.is_loop()) continue;
      const auto y = g.vertex_index(e.tail == g.vertices()[x] ? e.head : e.tail);
      if (seen[y]) continue;
      seen[y] = true;
      tree.insert(e.id);
      queue.push_back(y);
    }
  }
  return tree;
}

// Uniformly shuffled Kruskal; used to check that nothing downstream depends on
// the choice of tree.
template <class Rng>
std::set<std::string> random_spanning_tree(const Multigraph& g, Rng& rng) {
  require_connected(g, "random_spanning_tree");
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  std::set<std::string> tree;
  for (auto ei : order) {
    const auto& e = g.edges()[ei];
    const auto a = root(g.vertex_index(e.tail)), b = root(g.vertex_index(e.head));
    if (a == b) continue;
    parent[a] = b;
    tree.insert(e.id);
  }
  return tree;
}

// Tree path from the basepoint to every vertex, as a walk.
inline std::vector<Word> tree_paths(const Multigraph& g, const std::set<std::string>& tree) {
  std::vector<Word> path(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue{g.base_index()};
  seen[g.base_index()] = true;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto ei : g.incident(x)) {
      const auto& e = g.edges()[ei];
      if (!tree.count(e.id) || e.is_loop()) continue;
      const bool forward = e.tail == g.vertices()[x];
      const auto y = g.vertex_index(forward ? e.head : e.tail);
      if (seen[y]) continue;
      seen[y] = true;
      path[y] = path[x];
      path[y].push_back({e.id, forward ? 1 : -1});
      queue.push_back(y);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::invalid_argument("edge set is not a spanning tree");
  return path;
}

// Closed walks (tree path to tail) . e . (tree path from head), one per non-tree
// edge in increasing id order.
inline std::vector<Word> fundamental_cycles(const Multigraph& g, const std::set<std::string>& tree) {
  require_connected(g, "fundamental_cycles");
  if (tree.size() + 1 != g.vertex_count()) throw std::invalid_argument("edge set is not a spanning tree");
  const auto paths = tree_paths(g, tree);
  std::vector<Word> cycles;
  for (const auto& e : g.edges()) {
    if (tree.count(e.id)) continue;
    Word w = paths[g.vertex_index(e.tail)];
    w.push_back({e.id, 1});
    cycles.push_back(concat(std::move(w), inverse(paths[g.vertex_index(e.head)])));
  }
  return cycles;
}

inline std::vector<Word> fundamental_cycles(const Multigraph& g) { return fundamental_cycles(g, spanning_tree(g)); }

inline std::size_t cyclomatic_number(const Multigraph& g) {
  require_connected(g, "cyclomatic_number");
  return g.edge_count() + 1 - g.vertex_count();
}

// Signed letter count of a word.
template <Field F>
Chain1<typename F::value_type> chain_of(const Word& w, const F& field) {
  Chain1<typename F::value_type> c;
  for (const auto& l : w) add_to(c, l.edge, field.from_int(l.sign));
  return c;
}

template <Field F>
Chain0<typename F::value_type> boundary(const Chain1<typename F::value_type>& c, const Multigraph& g, const F& field) {
  Chain0<typename F::value_type> out;
  for (const auto& [id, coeff] : c) {
    if (!g.has_edge(id)) throw std::out_of_range("boundary: unknown edge '" + id + "'");
    const Edge& e = g.edge(id);
    if (e.is_loop()) continue;
    add_to(out, e.head, coeff);
    add_to(out, e.tail, field.zero() - coeff);
  }
  return out;
}

// Dense coordinate row of a chain in sorted edge-id order.
template <Field F>
std::vector<typename F::value_type> chain_row(const Chain1<typename F::value_type>& c, const Multigraph& g,
                                              const F& field) {
  std::vector<typename F::value_type> row(g.edge_count(), field.zero());
  for (const auto& [id, coeff] : c) row[g.edge_index(id)] = coeff;
  return row;
}

// Vertex-by-edge incidence matrix (rows: sorted vertices, columns: sorted edges).
template <Field F>
Matrix<typename F::value_type> incidence_matrix(const Multigraph& g, const F& field) {
  Matrix<typename F::value_type> m(g.vertex_count(), g.edge_count(), field.zero());
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const auto& e = g.edges()[j];
    if (e.is_loop()) continue;
    m(g.vertex_index(e.head), j) += field.one();
    m(g.vertex_index(e.tail), j) -= field.one();
  }
  return m;
}

// rref basis of ker(boundary) in sorted edge coordinates, computed as the null
// space of the incidence matrix.
template <Field F>
Matrix<typename F::value_type> cycle_space(const Multigraph& g, const F& field) {
  require_connected(g, "cycle_space");
  return nullspace(incidence_matrix(g, field), field);
}

// Vertex bijection psi with psi(base) = base' making phi an isomorphism of
// oriented graphs, if any. Every edge forces the images of both of its endpoints,
// so the search reduces to propagation plus a consistency check; vertices that
// carry no edge are matched in sorted order.
inline std::optional<VertexMap> phi_is_isomorphism(const Multigraph& g, const Multigraph& g2,
                                                   const EdgeBijection& phi) {
  if (g.vertex_count() != g2.vertex_count() || g.edge_count() != g2.edge_count()) return std::nullopt;
  phi.check_between(g, g2);
  VertexMap psi{{g.basepoint(), g2.basepoint()}};
  std::set<std::string> used{g2.basepoint()};
  auto assign = [&](const std::string& v, const std::string& v2) {
    auto [it, inserted] = psi.try_emplace(v, v2);
    if (!inserted) return it->second == v2;
    return used.insert(v2).second;
  };
  for (const auto& e : g.edges()) {
    const auto& img = phi(e.id);
    const Edge& e2 = g2.edge(img.edge);
    if (!assign(e.tail, signed_tail(e2, img.sign)) || !assign(e.head, signed_head(e2, img.sign)))
      return std::nullopt;
  }
  auto free_target = g2.vertices().begin();
  for (const auto& v : g.vertices()) {
    if (psi.count(v)) continue;
    while (used.count(*free_target)) ++free_target;
    psi[v] = *free_target;
    used.insert(*free_target);
  }
  return psi;
}

// Independent check that psi is a base-preserving vertex bijection compatible
// with phi on every edge.
inline bool is_isomorphism_witness(const Multigraph& g, const Multigraph& g2, const EdgeBijection& phi,
                                   const VertexMap& psi) {
  if (psi.size() != g.vertex_count() || g.vertex_count() != g2.vertex_count()) return false;
  std::set<std::string> image;
  for (const auto& [v, v2] : psi) {
    if (!g.has_vertex(v) || !g2.has_vertex(v2)) return false;
    image.insert(v2);
  }
  if (image.size() != psi.size()) return false;
  auto at = psi.find(g.basepoint());
  if (at == psi.end() || at->second != g2.basepoint()) return false;
  if (phi.size() != g.edge_count()) return false;
  for (const auto& e : g.edges()) {
    if (!phi.contains(e.id)) return false;
    const auto& img = phi(e.id);
    if (!g2.has_edge(img.edge)) return false;
    const Edge& e2 = g2.edge(img.edge);
    if (psi.at(e.tail) != signed_tail(e2, img.sign) || psi.at(e.head) != signed_head(e2, img.sign)) return false;
  }
  return true;
}

}  // namespace pi1trunc
