#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace pi1trunc {
namespace {

using namespace pi1trunc::testing;
using Q = Rational;
const RationalField kQ;

Matrix<Q> mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Q>> r;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    r.emplace_back(row.begin(), row.end());
    cols = row.size();
  }
  return Matrix<Q>::from_rows(r, cols);
}

// Copy of g with fresh vertex/edge names and random edge orientations, and the
// bijection that maps g onto it (an isomorphism preserving the basepoint).
std::pair<Multigraph, EdgeBijection> scrambled_copy(const Multigraph& g, std::mt19937_64& rng) {
  auto vnames = g.vertices();
  std::shuffle(vnames.begin(), vnames.end(), rng);
  std::map<std::string, std::string> vmap;
  for (std::size_t i = 0; i < vnames.size(); ++i) vmap[g.vertices()[i]] = "w" + vnames[i];
  auto enames = g.edge_ids();
  std::shuffle(enames.begin(), enames.end(), rng);
  std::vector<Edge> edges;
  std::map<std::string, EdgeBijection::Image> phi;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    const bool flip = rng() % 2;
    const auto id = "z" + enames[i];
    edges.push_back({id, vmap[flip ? e.head : e.tail], vmap[flip ? e.tail : e.head]});
    phi[e.id] = {id, flip ? -1 : 1};
  }
  std::vector<std::string> vs;
  for (const auto& [k, v] : vmap) vs.push_back(v);
  return {Multigraph(vs, std::move(edges), vmap[g.basepoint()]), EdgeBijection(phi)};
}

TEST(ImageSubalgebra, TreeIsSpanOfOne) {
  const auto tree = Multigraph::from_edges({{"e1", "a", "b"}}, "a");
  const auto s = image_subalgebra(tree, 2, kQ);
  EXPECT_EQ(s.rank(), 1U);
  EXPECT_EQ(s.basis, mat({{1, 0, 0}}));
}

TEST(ImageSubalgebra, ThetaLevelOneIsConstantsPlusCycleSpace) {
  const auto s = image_subalgebra(theta(), 1, kQ);
  EXPECT_EQ(s.rank(), 3U);
  EXPECT_EQ(s.basis, rref(mat({{1, 0, 0, 0}, {0, -1, 1, 0}, {0, -1, 0, 1}})));
  EXPECT_EQ(s.edge_order, (std::vector<std::string>{"e1", "e2", "e3"}));
}

TEST(ImageSubalgebra, ThetaLevelTwoMatchesWordEnumeration) {
  const auto g = theta();
  const auto s = image_subalgebra(g, 2, kQ);
  EXPECT_EQ(s.rank(), 7U);
  const CoordinateLayout lay(g, 2);
  Matrix<Q> words = Matrix<Q>::empty(lay.dimension());
  for (const auto& w : oracle::reduced_products(fundamental_cycles(g), 4))
    words.append_row(lay.flatten(oracle::closed_form_embedding(w, 2, kQ), Q(0)));
  EXPECT_EQ(rref(words), s.basis);
}

TEST(ImageSubalgebra, WordEnumerationOracleOnCorpus) {
  for (const auto& g : property_corpus()) {
    if (cyclomatic_number(g) > 3) continue;
    SCOPED_TRACE(serialize_graph(g));
    const CoordinateLayout lay(g, 2);
    Matrix<Q> words = Matrix<Q>::empty(lay.dimension());
    for (const auto& w : oracle::reduced_products(fundamental_cycles(g), 3))
      words.append_row(lay.flatten(oracle::closed_form_embedding(w, 2, kQ), Q(0)));
    EXPECT_EQ(rref(words), image_subalgebra(g, 2, kQ).basis);
  }
}

TEST(ImageSubalgebra, DisconnectedThrows) {
  EXPECT_THROW(image_subalgebra(Multigraph({"a", "b"}, {}, "a"), 2, kQ), std::invalid_argument);
}

TEST(ImageSubalgebra, StructuralProperties) {
  std::mt19937_64 rng(21);
  for (const auto& g : property_corpus()) {
    SCOPED_TRACE(serialize_graph(g));
    const auto c = cyclomatic_number(g);
    for (int level : {1, 2}) {
      ClosureStats stats;
      const auto s = closure_from_generators(g, fundamental_cycles(g), level, kQ, &stats);
      const auto lay = s.layout();
      EXPECT_LE(stats.iterations, lay.dimension() + 1);
      EXPECT_TRUE(in_span(lay.flatten(trunc_one(level, kQ), Q(0)), s.basis));
      EXPECT_TRUE(is_closed_under_multiplication(s, Q(0)));
      EXPECT_EQ(s.rank(), level == 1 ? 1 + c : 1 + c + c * c);
      // Left multiplication by generators adds nothing.
      for (const auto& w : fundamental_cycles(g))
        for (const auto& u : {w, inverse(w)}) {
          const auto ur = lay.flatten(embed_word(u, level, kQ), Q(0));
          for (std::size_t i = 0; i < s.rank(); ++i)
            EXPECT_TRUE(in_span(lay.multiply_rows<Q>(ur, s.basis.row(i), Q(0)), s.basis));
        }
      for (int t = 0; t < 20; ++t)
        EXPECT_EQ(image_subalgebra(g, random_spanning_tree(g, rng), level, kQ), s);
    }
  }
}

TEST(InvariantsEqual, Examples) {
  const auto th = theta();
  EXPECT_TRUE(invariants_equal(th, th, EdgeBijection::identity(th), 2, kQ));
  const EdgeBijection swap({{"e1", {"e1", 1}}, {"e2", {"e3", 1}}, {"e3", {"e2", 1}}});
  EXPECT_TRUE(invariants_equal(th, th, swap, 2, kQ));

  const auto w = whitney_w();
  const auto [w2, phi] = whitney_twist(w, "u", "v", whitney_side());
  EXPECT_TRUE(invariants_equal(w, w2, phi, 1, kQ));
  EXPECT_FALSE(invariants_equal(w, w2, phi, 2, kQ));
}

TEST(InvariantsEqual, Preconditions) {
  const auto th = theta();
  EXPECT_THROW(invariants_equal(th, digon(), EdgeBijection::identity(th), 2, kQ), std::invalid_argument);
  const PrimeField gf2(2);
  EXPECT_THROW(invariants_equal(th, th, EdgeBijection::identity(th), 2, gf2), std::invalid_argument);
  EXPECT_TRUE(invariants_equal(th, th, EdgeBijection::identity(th), 2, gf2, CompareOptions{true}));
}

TEST(InvariantsEqual, IsomorphismInvariance) {
  std::mt19937_64 rng(31);
  for (const auto& g : property_corpus()) {
    for (int rep = 0; rep < 3; ++rep) {
      const auto [g2, phi] = scrambled_copy(g, rng);
      ASSERT_TRUE(phi_is_isomorphism(g, g2, phi).has_value());
      for (int level : {1, 2}) EXPECT_TRUE(invariants_equal(g, g2, phi, level, kQ)) << serialize_graph(g);
    }
  }
}

TEST(InvariantsEqual, FastContainmentMatchesRrefEquality) {
  std::mt19937_64 rng(41);
  for (std::size_t m = 2; m <= 3; ++m) {
    const auto graphs = based_two_edge_connected_graphs(m);
    for (const auto& g : graphs)
      for (const auto& g2 : graphs) {
        const auto s = image_subalgebra(g, 2, kQ), s2 = image_subalgebra(g2, 2, kQ);
        for (int t = 0; t < 8; ++t) {
          const auto phi = random_bijection(rng, g, g2);
          EXPECT_EQ(subalgebras_equal_under(s, s2, phi, kQ),
                    subspace_equal(pushforward_basis(s, phi, s2.layout(), kQ), s2.basis));
        }
      }
  }
}

TEST(DegreeOnePart, EqualsCycleSpace) {
  const auto th = theta();
  EXPECT_EQ(degree_one_part(image_subalgebra(th, 1, kQ), kQ), cycle_space(th, kQ));
  EXPECT_EQ(degree_one_part(image_subalgebra(th, 2, kQ), kQ), cycle_space(th, kQ));
  const auto tree = Multigraph::from_edges({{"e1", "a", "b"}}, "a");
  EXPECT_EQ(degree_one_part(image_subalgebra(tree, 2, kQ), kQ).rows(), 0U);
  for (const auto& g : property_corpus())
    for (int level : {1, 2}) EXPECT_EQ(degree_one_part(image_subalgebra(g, level, kQ), kQ), cycle_space(g, kQ));
}

}  // namespace
}  // namespace pi1trunc
