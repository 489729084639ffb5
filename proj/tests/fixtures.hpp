#pragma once

#include <random>
#include <string>
#include <vector>

#include "pi1trunc/pi1trunc.hpp"

namespace pi1trunc::testing {

// Theta: a, b joined by three parallel edges a -> b.
inline Multigraph theta() {
  return Multigraph::from_edges({{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "a", "b"}}, "a");
}
// Digon.
inline Multigraph digon() { return Multigraph::from_edges({{"e1", "a", "b"}, {"e2", "a", "b"}}, "a"); }
// One vertex, one loop.
inline Multigraph loop() { return Multigraph::from_edges({{"e1", "a", "a"}}, "a"); }
inline Multigraph bouquet(int loops) {
  std::vector<Edge> es;
  for (int i = 1; i <= loops; ++i) es.push_back({"e" + std::to_string(i), "a", "a"});
  return Multigraph::from_edges(std::move(es), "a");
}
inline Multigraph path_ab() { return Multigraph::from_edges({{"e1", "a", "b"}}, "a"); }
inline Multigraph single_vertex() { return Multigraph({"a"}, {}, "a"); }

// u-a doubled, a-v, and the twistable side u-b, b-v doubled.
inline Multigraph whitney_w() {
  return Multigraph::from_edges({{"ua", "u", "a"},
                                 {"ua2", "u", "a"},
                                 {"av", "a", "v"},
                                 {"ub", "u", "b"},
                                 {"bv", "b", "v"},
                                 {"bv2", "b", "v"}},
                                "u");
}
inline std::set<std::string> whitney_side() { return {"ub", "bv", "bv2"}; }

inline Word random_word(std::mt19937_64& rng, const std::vector<std::string>& alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, alphabet.size() - 1);
  std::bernoulli_distribution flip(0.5);
  Word w;
  const auto n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w.push_back({alphabet[pick(rng)], flip(rng) ? -1 : 1});
  return w;
}

// Random element of the truncation with small integer coefficients.
template <Field F>
TruncElement<typename F::value_type> random_element(std::mt19937_64& rng, const std::vector<std::string>& alphabet,
                                                    int level, const F& field, bool augmentation = false) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  TruncElement<typename F::value_type> a{level, augmentation ? field.zero() : field.from_int(coeff(rng)), {}, {}};
  for (const auto& e : alphabet) {
    const auto x = field.from_int(coeff(rng));
    if (!is_zero(x)) a.deg1[e] = x;
    if (level < 2) continue;
    for (const auto& f : alphabet) {
      const auto y = field.from_int(coeff(rng));
      if (!is_zero(y)) a.deg2[{e, f}] = y;
    }
  }
  return a;
}

// Random signed bijection between the edge sets of g and g2.
inline EdgeBijection random_bijection(std::mt19937_64& rng, const Multigraph& g, const Multigraph& g2) {
  auto dst = g2.edge_ids();
  std::shuffle(dst.begin(), dst.end(), rng);
  std::bernoulli_distribution flip(0.5);
  std::map<std::string, EdgeBijection::Image> m;
  const auto src = g.edge_ids();
  for (std::size_t i = 0; i < src.size(); ++i) m[src[i]] = {dst[i], flip(rng) ? -1 : 1};
  return EdgeBijection(std::move(m));
}

}  // namespace pi1trunc::testing

namespace pi1trunc::testing {

// Random connected multigraph: a random tree on n vertices plus `extra` random
// edges (loops and parallels allowed), random orientations, random basepoint.
inline Multigraph random_connected(std::mt19937_64& rng, int n, int extra) {
  std::vector<std::string> vs;
  for (int i = 0; i < n; ++i) vs.push_back("x" + std::to_string(i));
  std::vector<Edge> es;
  std::bernoulli_distribution flip(0.5);
  auto add = [&](int a, int b) {
    const auto id = "f" + std::string(es.size() < 10 ? "0" : "") + std::to_string(es.size());
    if (flip(rng)) std::swap(a, b);
    es.push_back({id, vs[static_cast<std::size_t>(a)], vs[static_cast<std::size_t>(b)]});
  };
  for (int i = 1; i < n; ++i) add(std::uniform_int_distribution<int>(0, i - 1)(rng), i);
  std::uniform_int_distribution<int> any(0, n - 1);
  for (int k = 0; k < extra; ++k) add(any(rng), any(rng));
  return Multigraph(vs, std::move(es), vs[static_cast<std::size_t>(any(rng))]);
}

// Small corpus used by several property tests: every based 2-edge-connected graph
// with at most 3 edges, the named examples, and some random connected graphs.
inline std::vector<Multigraph> property_corpus() {
  std::vector<Multigraph> out;
  for (std::size_t m = 0; m <= 3; ++m)
    for (auto& g : based_two_edge_connected_graphs(m)) out.push_back(std::move(g));
  out.push_back(theta());
  out.push_back(digon());
  out.push_back(loop());
  out.push_back(whitney_w());
  out.push_back(path_ab());
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 12; ++i) out.push_back(random_connected(rng, 2 + i % 4, i % 4));
  return out;
}

}  // namespace pi1trunc::testing

namespace pi1trunc::testing {

struct TwistInstance {
  Multigraph graph;
  std::string u, v;
  std::set<std::string> side;
};

// Random 2-edge-connected graph with the 2-separation {u, v}: side A holds the
// basepoint, side B (at least one interior vertex) is the one to twist.
inline TwistInstance random_twist_instance(std::mt19937_64& rng) {
  std::bernoulli_distribution flip(0.5);
  for (;;) {
    std::vector<Edge> edges;
    std::set<std::string> side;
    auto build = [&](const std::string& prefix, int interior, bool twisted) {
      std::vector<std::string> vs{"u"};
      for (int i = 0; i < interior; ++i) vs.push_back(prefix + std::to_string(i));
      vs.push_back("v");
      int count = 0;
      auto add = [&](std::string x, std::string y) {
        if (flip(rng)) std::swap(x, y);
        const auto id = prefix + "e" + std::to_string(count++);
        edges.push_back({id, x, y});
        if (twisted) side.insert(id);
      };
      for (std::size_t i = 0; i + 1 < vs.size(); ++i) add(vs[i], vs[i + 1]);
      std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
      const int extra = std::uniform_int_distribution<int>(0, 3)(rng);
      for (int k = 0; k < extra; ++k) add(vs[pick(rng)], vs[pick(rng)]);
      return vs;
    };
    const auto a = build("a", std::uniform_int_distribution<int>(0, 2)(rng), false);
    build("b", std::uniform_int_distribution<int>(1, 2)(rng), true);
    const auto base = a[std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng)];
    auto g = Multigraph::from_edges(std::move(edges), base);
    if (is_two_edge_connected(g)) return {std::move(g), "u", "v", std::move(side)};
  }
}

}  // namespace pi1trunc::testing
