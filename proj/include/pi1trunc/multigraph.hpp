#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pi1trunc {

struct Edge {
  std::string id;
  std::string tail;
  std::string head;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite multigraph with a base vertex and a reference orientation (tail -> head)
// on every edge. Parallel edges and self-loops are allowed. Vertices and edges are
// kept sorted by identifier; identifiers are opaque strings.
class Multigraph {
 public:
  Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges, std::string basepoint)
      : vertices_(std::move(vertices)), edges_(std::move(edges)), basepoint_(std::move(basepoint)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw std::invalid_argument("duplicate vertex id");
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (i > 0 && edges_[i - 1].id == edges_[i].id)
        throw std::invalid_argument("duplicate edge id '" + edges_[i].id + "'");
      if (!has_vertex(edges_[i].tail) || !has_vertex(edges_[i].head))
        throw std::invalid_argument("edge '" + edges_[i].id + "' has an endpoint outside the vertex set");
    }
    if (!has_vertex(basepoint_)) throw std::invalid_argument("basepoint '" + basepoint_ + "' is not a vertex");
    incident_.assign(vertices_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto t = vertex_index(edges_[i].tail), h = vertex_index(edges_[i].head);
      incident_[t].push_back(i);
      if (h != t) incident_[h].push_back(i);
    }
  }

  // Vertex set is the basepoint plus all edge endpoints.
  static Multigraph from_edges(std::vector<Edge> edges, std::string basepoint) {
    std::set<std::string> vs{basepoint};
    for (const auto& e : edges) {
      vs.insert(e.tail);
      vs.insert(e.head);
    }
    return Multigraph({vs.begin(), vs.end()}, std::move(edges), std::move(basepoint));
  }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& basepoint() const { return basepoint_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(const std::string& v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }
  bool has_edge(const std::string& id) const { return find_edge(id) != edges_.end(); }

  std::size_t vertex_index(const std::string& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) throw std::out_of_range("unknown vertex '" + v + "'");
    return static_cast<std::size_t>(it - vertices_.begin());
  }
  std::size_t edge_index(const std::string& id) const {
    auto it = find_edge(id);
    if (it == edges_.end()) throw std::out_of_range("unknown edge '" + id + "'");
    return static_cast<std::size_t>(it - edges_.begin());
  }
  const Edge& edge(const std::string& id) const { return edges_[edge_index(id)]; }
  std::size_t base_index() const { return vertex_index(basepoint_); }

  // Edge indices incident to a vertex (loops listed once), increasing id order.
  const std::vector<std::size_t>& incident(std::size_t vertex) const { return incident_[vertex]; }

  std::vector<std::string> edge_ids() const {
    std::vector<std::string> ids;
    ids.reserve(edges_.size());
    for (const auto& e : edges_) ids.push_back(e.id);
    return ids;
  }

  Multigraph with_basepoint(std::string v) const { return Multigraph(vertices_, edges_, std::move(v)); }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.basepoint_ == b.basepoint_;
  }

 private:
  std::vector<Edge>::const_iterator find_edge(const std::string& id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, const std::string& key) { return e.id < key; });
    return (it != edges_.end() && it->id == id) ? it : edges_.end();
  }

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::string basepoint_;
  std::vector<std::vector<std::size_t>> incident_;
};

struct Letter {
  std::string edge;
  int sign = 1;  // +1 along the reference orientation, -1 against it
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A walk, or an element of the free group on the edges.
using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->edge, -it->sign});
  return r;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline const std::string& signed_tail(const Edge& e, int sign) { return sign > 0 ? e.tail : e.head; }
inline const std::string& signed_head(const Edge& e, int sign) { return sign > 0 ? e.head : e.tail; }

// True iff the word is a walk in g starting at `from` and ending at `to`.
inline bool is_walk(const Word& w, const Multigraph& g, const std::string& from, const std::string& to) {
  std::string at = from;
  for (const auto& l : w) {
    if (!g.has_edge(l.edge) || (l.sign != 1 && l.sign != -1)) return false;
    const Edge& e = g.edge(l.edge);
    if (signed_tail(e, l.sign) != at) return false;
    at = signed_head(e, l.sign);
  }
  return at == to;
}

// Orientation-respecting bijection of edge sets: edge of G -> (edge of G', sign).
class EdgeBijection {
 public:
  struct Image {
    std::string edge;
    int sign = 1;
    friend bool operator==(const Image&, const Image&) = default;
  };

  EdgeBijection() = default;
  explicit EdgeBijection(std::map<std::string, Image> map) : map_(std::move(map)) {
    std::set<std::string> targets;
    for (const auto& [src, img] : map_) {
      if (img.sign != 1 && img.sign != -1) throw std::invalid_argument("sign must be +1 or -1 for '" + src + "'");
      if (!targets.insert(img.edge).second)
        throw std::invalid_argument("edge '" + img.edge + "' is hit twice; map is not injective");
    }
  }

  static EdgeBijection identity(const Multigraph& g) {
    std::map<std::string, Image> m;
    for (const auto& e : g.edges()) m[e.id] = {e.id, 1};
    return EdgeBijection(std::move(m));
  }

  const std::map<std::string, Image>& map() const { return map_; }
  std::size_t size() const { return map_.size(); }
  bool contains(const std::string& e) const { return map_.count(e) != 0; }

  const Image& operator()(const std::string& e) const {
    auto it = map_.find(e);
    if (it == map_.end()) throw std::out_of_range("edge '" + e + "' is outside the bijection's domain");
    return it->second;
  }

  EdgeBijection inverse() const {
    std::map<std::string, Image> m;
    for (const auto& [src, img] : map_) m[img.edge] = {src, img.sign};
    return EdgeBijection(std::move(m));
  }

  // Composition (this after first): e -> this(first(e)).
  EdgeBijection after(const EdgeBijection& first) const {
    std::map<std::string, Image> m;
    for (const auto& [src, img] : first.map_) {
      const Image& second = (*this)(img.edge);
      m[src] = {second.edge, img.sign * second.sign};
    }
    return EdgeBijection(std::move(m));
  }

  Word apply(const Word& w) const {
    Word r;
    r.reserve(w.size());
    for (const auto& l : w) {
      const Image& img = (*this)(l.edge);
      r.push_back({img.edge, l.sign * img.sign});
    }
    return r;
  }

  // Throws unless the domain is exactly E(g) and the range exactly E(g2).
  void check_between(const Multigraph& g, const Multigraph& g2) const {
    if (map_.size() != g.edge_count() || g.edge_count() != g2.edge_count())
      throw std::invalid_argument("edge bijection size does not match the graphs");
    for (const auto& [src, img] : map_) {
      if (!g.has_edge(src)) throw std::invalid_argument("edge '" + src + "' is not an edge of the source graph");
      if (!g2.has_edge(img.edge))
        throw std::invalid_argument("edge '" + img.edge + "' is not an edge of the target graph");
    }
  }

  friend bool operator==(const EdgeBijection&, const EdgeBijection&) = default;

 private:
  std::map<std::string, Image> map_;
};

using VertexMap = std::map<std::string, std::string>;

}  // namespace pi1trunc
