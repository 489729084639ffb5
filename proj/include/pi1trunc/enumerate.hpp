#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pi1trunc/field.hpp"
#include "pi1trunc/graph_core.hpp"
#include "pi1trunc/invariant.hpp"
#include "pi1trunc/multigraph.hpp"
#include "pi1trunc/reconstruct.hpp"

namespace pi1trunc {

namespace detail {

using PairList = std::vector<std::pair<int, int>>;

inline PairList relabel(const PairList& edges, const std::vector<int>& perm) {
  PairList out;
  out.reserve(edges.size());
  for (auto [a, b] : edges) {
    const int x = perm[a], y = perm[b];
    out.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Lexicographically least relabelling over all vertex permutations (those sending
// `fixed` to 0 when given). Brute force; fine for the handful of vertices here.
inline PairList canonical_form(const PairList& edges, int n, int fixed = -1) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  PairList best;
  bool have = false;
  do {
    if (fixed >= 0 && perm[fixed] != 0) continue;
    auto cand = relabel(edges, perm);
    if (!have || cand < best) {
      best = std::move(cand);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Multigraph graph_from_pairs(const PairList& edges, int n, int base) {
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<Edge> es;
  for (std::size_t k = 0; k < edges.size(); ++k)
    es.push_back({"e" + std::to_string(k + 1), vertices[edges[k].first], vertices[edges[k].second]});
  return Multigraph(vertices, std::move(es), vertices[base]);
}

}  // namespace detail

// All connected, bridgeless multigraphs with exactly m edges (loops and parallel
// edges allowed), one per isomorphism class, vertices v0..v{n-1}, edges e1..em,
// each edge oriented from its smaller to its larger vertex label.
inline std::vector<Multigraph> two_edge_connected_graphs(std::size_t m) {
  std::vector<Multigraph> out;
  const int max_vertices = std::max<int>(1, static_cast<int>(m));
  for (int n = 1; n <= max_vertices; ++n) {
    detail::PairList slots;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) slots.emplace_back(i, j);
    std::set<detail::PairList> seen;
    std::vector<std::size_t> pick(m, 0);
    // Multisets of size m over `slots`, as nondecreasing index sequences.
    auto visit = [&](const std::vector<std::size_t>& idx) {
      detail::PairList edges;
      for (auto k : idx) edges.push_back(slots[k]);
      std::vector<int> degree(n, 0);
      for (auto [a, b] : edges) ++degree[a], ++degree[b];
      if (n > 1 && std::count(degree.begin(), degree.end(), 0) > 0) return;
      auto canon = detail::canonical_form(edges, n);
      if (seen.count(canon)) return;
      auto g = detail::graph_from_pairs(canon, n, 0);
      if (!is_two_edge_connected(g)) return;
      seen.insert(canon);
      out.push_back(std::move(g));
    };
    if (m == 0) {
      if (n == 1) visit({});
      continue;
    }
    for (;;) {
      visit(pick);
      std::size_t k = m;
      while (k > 0 && pick[k - 1] + 1 == slots.size()) --k;
      if (k == 0) break;
      const auto v = ++pick[k - 1];
      for (std::size_t t = k; t < m; ++t) pick[t] = v;
    }
  }
  return out;
}

// Every based version of every graph from two_edge_connected_graphs(m), one per
// based-isomorphism class. The basepoint is always relabelled to v0.
inline std::vector<Multigraph> based_two_edge_connected_graphs(std::size_t m) {
  std::vector<Multigraph> out;
  for (const auto& g : two_edge_connected_graphs(m)) {
    const int n = static_cast<int>(g.vertex_count());
    detail::PairList edges;
    for (const auto& e : g.edges())
      edges.emplace_back(static_cast<int>(g.vertex_index(e.tail)), static_cast<int>(g.vertex_index(e.head)));
    std::set<detail::PairList> seen;
    for (int b = 0; b < n; ++b) {
      auto canon = detail::canonical_form(edges, n, b);
      if (seen.insert(canon).second) out.push_back(detail::graph_from_pairs(canon, n, 0));
    }
  }
  return out;
}

// Every orientation-signed bijection between the edge sets of g and g2 (equal
// sizes): m! permutations times 2^m sign patterns, in a fixed order.
inline std::vector<EdgeBijection> all_signed_bijections(const Multigraph& g, const Multigraph& g2) {
  if (g.edge_count() != g2.edge_count()) throw std::invalid_argument("edge counts differ");
  const auto m = g.edge_count();
  const auto src = g.edge_ids(), dst = g2.edge_ids();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<EdgeBijection> out;
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      std::map<std::string, EdgeBijection::Image> map;
      for (std::size_t i = 0; i < m; ++i) map[src[i]] = {dst[perm[i]], (mask >> i) & 1U ? -1 : 1};
      out.emplace_back(std::move(map));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct VerifyOptions {
  std::size_t max_edges = 4;
  std::size_t cap = 5;
  int level = 2;
  unsigned threads = 1;
  std::size_t max_samples = 10;
};

struct Disagreement {
  std::string g;
  std::string g2;
  std::string phi;
  bool equal = false;
  bool isomorphic = false;
  bool reconstructed = false;
};

struct VerifyReport {
  std::size_t max_edges = 0;
  int level = 2;
  std::string field;
  std::map<std::size_t, std::size_t> graphs_by_edges;
  std::map<std::size_t, std::size_t> based_graphs_by_edges;
  std::size_t pairs = 0;
  std::size_t cells = 0;
  // (equal, isomorphic, reconstructed) -> number of cells
  std::map<std::tuple<bool, bool, bool>, std::size_t> outcomes;
  std::size_t disagreements = 0;
  std::vector<Disagreement> samples;
  // Based graphs whose level-2 rank differs from 1 + c + c^2 (c = cyclomatic number).
  std::vector<std::string> rank_formula_exceptions;
};

// Exhaustive check of the three verdicts (invariant equality, brute-force
// isomorphism with matched basepoints, greedy reconstruction) on every signed
// bijection between every pair of based graphs with the same number of edges.
template <Field F>
VerifyReport enumerate_and_verify(const VerifyOptions& opts, const F& field) {
  using T = typename F::value_type;
  if (opts.max_edges > opts.cap)
    throw std::invalid_argument("max_edges " + std::to_string(opts.max_edges) + " exceeds the cap of " +
                                std::to_string(opts.cap));
  check_level(opts.level);
  VerifyReport report;
  report.max_edges = opts.max_edges;
  report.level = opts.level;
  report.field = field.name();

  for (std::size_t m = 0; m <= opts.max_edges; ++m) {
    report.graphs_by_edges[m] = two_edge_connected_graphs(m).size();
    const auto based = based_two_edge_connected_graphs(m);
    report.based_graphs_by_edges[m] = based.size();
    std::vector<Subalgebra<T>> inv;
    inv.reserve(based.size());
    for (const auto& g : based) {
      inv.push_back(image_subalgebra(g, opts.level, field));
      const auto c = cyclomatic_number(g);
      const auto expected = opts.level == 1 ? 1 + c : 1 + c + c * c;
      if (inv.back().rank() != expected) report.rank_formula_exceptions.push_back(serialize_graph(g));
    }

    struct PairResult {
      std::size_t cells = 0;
      std::map<std::tuple<bool, bool, bool>, std::size_t> outcomes;
      std::size_t disagreements = 0;
      std::vector<Disagreement> samples;
    };
    const std::size_t n = based.size();
    std::vector<PairResult> results(n * n);
    auto work = [&](unsigned worker, unsigned workers) {
      for (std::size_t p = worker; p < n * n; p += workers) {
        const auto& g = based[p / n];
        const auto& g2 = based[p % n];
        auto& res = results[p];
        for (const auto& phi : all_signed_bijections(g, g2)) {
          const bool eq = subalgebras_equal_under(inv[p / n], inv[p % n], phi, field);
          const bool iso = phi_is_isomorphism(g, g2, phi).has_value();
          const bool rec = succeeded(reconstruct_isomorphism(g, g2, phi));
          ++res.cells;
          ++res.outcomes[{eq, iso, rec}];
          if (eq != iso || iso != rec) {
            ++res.disagreements;
            if (res.samples.size() < opts.max_samples)
              res.samples.push_back({serialize_graph(g), serialize_graph(g2), serialize_bijection(phi), eq, iso, rec});
          }
        }
      }
    };
    const unsigned workers = std::max(1U, opts.threads);
    if (workers == 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
      for (auto& t : pool) t.join();
    }
    for (auto& res : results) {
      ++report.pairs;
      report.cells += res.cells;
      for (const auto& [k, v] : res.outcomes) report.outcomes[k] += v;
      report.disagreements += res.disagreements;
      for (auto& s : res.samples)
        if (report.samples.size() < opts.max_samples) report.samples.push_back(std::move(s));
    }
  }
  return report;
}

}  // namespace pi1trunc
