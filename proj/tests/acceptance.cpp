// Acceptance suite. Every check is exact; one PASS/FAIL line per criterion.
// Usage: acceptance [--extended]   (--extended runs only criterion 1, at 5 edges)

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace pi1trunc;
using namespace pi1trunc::testing;
using Q = Rational;

const RationalField kQ;
const PrimeField kP(1000003);

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<Multigraph> enumerated(std::size_t max_edges) {
  std::vector<Multigraph> out;
  for (std::size_t m = 0; m <= max_edges; ++m)
    for (auto& g : based_two_edge_connected_graphs(m)) out.push_back(std::move(g));
  return out;
}

std::string counts(const VerifyReport& r) {
  std::ostringstream s;
  s << r.cells << " cells over " << r.pairs << " pairs, " << r.disagreements << " disagreements";
  for (const auto& [k, v] : r.outcomes)
    s << "; (eq=" << std::get<0>(k) << ",iso=" << std::get<1>(k) << ",rec=" << std::get<2>(k) << "):" << v;
  return s.str();
}

// 1. Invariant equality at level 2 <=> base-preserving isomorphism <=> reconstruction.
Outcome verdict_agreement(std::size_t max_edges, double budget_seconds) {
  const auto start = std::chrono::steady_clock::now();
  const auto report = enumerate_and_verify(VerifyOptions{max_edges, 5, 2, 1, 10}, kQ);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = report.disagreements == 0 && secs < budget_seconds;
  std::ostringstream s;
  s << "<= " << max_edges << " edges: " << counts(report) << "; " << secs << " s (budget " << budget_seconds << " s)";
  if (!report.rank_formula_exceptions.empty())
    s << "; note: " << report.rank_formula_exceptions.size() << " graphs break rank 1+c+c^2";
  o.detail = s.str();
  return o;
}

// 2. Level-1 invariant is constants plus the cycle space.
Outcome level_one_is_cycle_space() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& g : enumerated(4)) {
    const auto s = image_subalgebra(g, 1, kQ);
    const auto c = g.edge_count() + 1 - g.vertex_count();
    if (!(degree_one_part(s, kQ) == cycle_space(g, kQ)) || s.rank() != 1 + c) {
      o.pass = false;
      o.detail = "mismatch on\n" + serialize_graph(g);
      return o;
    }
    ++n;
  }
  o.detail = std::to_string(n) + " based graphs, grid-equal and rank 1 + c";
  return o;
}

// 3. Whitney twist witness and 50 random twists.
Outcome whitney_separation() {
  Outcome o;
  const auto w = whitney_w();
  const auto [w2, phi] = whitney_twist(w, "u", "v", whitney_side());
  const bool l1 = invariants_equal(w, w2, phi, 1, kQ), l2 = invariants_equal(w, w2, phi, 2, kQ);
  const bool iso = phi_is_isomorphism(w, w2, phi).has_value();
  std::mt19937_64 rng(20240501);
  int level_one = 0, level_two = 0, non_iso = 0;
  for (int i = 0; i < 50; ++i) {
    const auto inst = random_twist_instance(rng);
    const auto [g2, psi] = whitney_twist(inst.graph, inst.u, inst.v, inst.side);
    level_one += invariants_equal(inst.graph, g2, psi, 1, kQ) ? 1 : 0;
    const bool is_iso = phi_is_isomorphism(inst.graph, g2, psi).has_value();
    non_iso += is_iso ? 0 : 1;
    level_two += invariants_equal(inst.graph, g2, psi, 2, kQ) == is_iso ? 1 : 0;
  }
  o.pass = l1 && !l2 && !iso && level_one == 50 && level_two == 50;
  std::ostringstream s;
  s << "W/W': level1=" << l1 << " level2=" << l2 << " iso=" << iso << "; random twists: level-1 equal " << level_one
    << "/50, level-2 equal iff isomorphic " << level_two << "/50 (" << non_iso << " non-isomorphic)";
  o.detail = s.str();
  return o;
}

// 4. Algebra laws on random inputs.
Outcome algebra_laws() {
  Outcome o;
  std::mt19937_64 rng(4242);
  const std::vector<std::string> alphabet{"e1", "e2", "e3", "e4", "e5"};
  int mult = 0, inv = 0, nil = 0, closed = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto u = random_word(rng, alphabet, 8), v = random_word(rng, alphabet, 8);
    mult += embed_word(concat(u, v), 2, kQ) == multiply(embed_word(u, 2, kQ), embed_word(v, 2, kQ)) ? 1 : 0;
    inv += multiply(embed_word(u, 2, kQ), embed_word(inverse(u), 2, kQ)) == trunc_one(2, kQ) ? 1 : 0;
  }
  const TruncElement<Q> zero{2, Q(0), {}, {}};
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_element(rng, alphabet, 2, kQ, true), b = random_element(rng, alphabet, 2, kQ, true),
               c = random_element(rng, alphabet, 2, kQ, true);
    nil += multiply(multiply(a, b), c) == zero ? 1 : 0;
  }
  for (int i = 0; i < 1000; ++i) {
    const auto w = random_word(rng, alphabet, 10);
    closed += oracle::closed_form_embedding(w, 2, kQ) == embed_word(w, 2, kQ) ? 1 : 0;
  }
  o.pass = mult == 1000 && inv == 1000 && nil == 1000 && closed == 1000;
  std::ostringstream s;
  s << "multiplicative " << mult << "/1000, inverse " << inv << "/1000, J^3 = 0 " << nil
    << "/1000, closed form = letter product " << closed << "/1000";
  o.detail = s.str();
  return o;
}

// 5. boundary(eta) = tail(e) - v0.
Outcome eta_boundary() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& g : enumerated(4))
    for (const auto& gamma : fundamental_cycles(g))
      for (const auto& l : gamma) {
        const auto n = std::count_if(gamma.begin(), gamma.end(), [&](const Letter& x) { return x.edge == l.edge; });
        if (n != 1 || l.sign != 1) continue;
        Chain0<Q> expected;
        add_to(expected, g.edge(l.edge).tail, Q(1));
        add_to(expected, g.basepoint(), Q(-1));
        ++checked;
        if (boundary(eta_chain(gamma, l.edge, kQ), g, kQ) != expected) {
          o.pass = false;
          o.detail = "failed at edge " + l.edge + " of\n" + serialize_graph(g);
          return o;
        }
      }
  o.pass = checked > 0;
  o.detail = std::to_string(checked) + " (cycle, edge) instances";
  return o;
}

// 6. Tree independence and field independence of the rref grids.
Outcome determinism() {
  Outcome o;
  std::mt19937_64 rng(6006);
  std::size_t graphs = 0;
  for (const auto& g : enumerated(4))
    for (int level : {1, 2}) {
      const auto s = image_subalgebra(g, level, kQ);
      const auto canonical = subalgebra_json(s, "q").dump();
      for (int t = 0; t < 20; ++t) {
        if (subalgebra_json(image_subalgebra(g, random_spanning_tree(g, rng), level, kQ), "q").dump() != canonical) {
          o.pass = false;
          o.detail = "tree dependence on\n" + serialize_graph(g);
          return o;
        }
      }
      Matrix<ModP> reduced = Matrix<ModP>::empty(s.basis.cols());
      for (std::size_t i = 0; i < s.basis.rows(); ++i) {
        std::vector<ModP> r;
        for (const auto& x : s.basis.row(i)) r.push_back(kP.reduce(x));
        reduced.append_row(r);
      }
      const auto sp = image_subalgebra(g, level, kP);
      if (matrix_json(reduced).dump() != matrix_json(sp.basis).dump()) {
        o.pass = false;
        o.detail = "Q and GF(1000003) disagree on\n" + serialize_graph(g);
        return o;
      }
      ++graphs;
    }
  o.detail = std::to_string(graphs) + " (graph, level) invariants; 20 random trees each; Q == GF(1000003)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool extended = argc > 1 && std::strcmp(argv[1], "--extended") == 0;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria;
  if (extended) {
    criteria.push_back({"C1-extended verdict agreement (<= 5 edges)", [] { return verdict_agreement(5, 1800); }});
  } else {
    criteria = {
        {"C1 verdict agreement (<= 4 edges)", [] { return verdict_agreement(4, 300); }},
        {"C2 level-1 image is the cycle space", level_one_is_cycle_space},
        {"C3 Whitney separation witness", whitney_separation},
        {"C4 algebra law suite", algebra_laws},
        {"C5 eta boundary identity", eta_boundary},
        {"C6 determinism and tree/field independence", determinism},
    };
  }
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.name << " -- " << o.detail << "\n";
  }
  return failures == 0 ? 0 : 1;
}
