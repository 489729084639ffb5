#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pi1trunc/field.hpp"
#include "pi1trunc/graph_core.hpp"
#include "pi1trunc/matrix.hpp"
#include "pi1trunc/multigraph.hpp"
#include "pi1trunc/trunc_algebra.hpp"

namespace pi1trunc {

// Image of the truncated group algebra of pi_1(G, v0) inside the truncated free
// algebra on the edges, as an rref basis in the layout's coordinates.
template <class T>
struct Subalgebra {
  int level = 2;
  std::vector<std::string> edge_order;
  Matrix<T> basis;

  CoordinateLayout layout() const { return CoordinateLayout(edge_order, level); }
  std::size_t rank() const { return basis.rows(); }

  friend bool operator==(const Subalgebra&, const Subalgebra&) = default;
};

struct ClosureStats {
  std::size_t iterations = 0;
};

// Smallest subspace containing 1 and closed under right multiplication by the
// images of the given generators of pi_1 and their inverses.
template <Field F>
Subalgebra<typename F::value_type> closure_from_generators(const Multigraph& g, const std::vector<Word>& generators,
                                                           int level, const F& field, ClosureStats* stats = nullptr) {
  using T = typename F::value_type;
  const CoordinateLayout layout(g, level);
  std::vector<std::vector<T>> gens;
  for (const auto& w : generators) {
    gens.push_back(layout.flatten(embed_word(w, level, field), field.zero()));
    gens.push_back(layout.flatten(embed_word(inverse(w), level, field), field.zero()));
  }
  Matrix<T> span = Matrix<T>::empty(layout.dimension());
  span.append_row(layout.flatten(trunc_one(level, field), field.zero()));
  std::size_t iterations = 0;
  for (;;) {
    ++iterations;
    Matrix<T> grown = span;
    for (std::size_t i = 0; i < span.rows(); ++i)
      for (const auto& u : gens) grown.append_row(layout.multiply_rows<T>(span.row(i), u, field.zero()));
    Matrix<T> next = rref(std::move(grown));
    const bool stable = next.rows() == span.rows();
    span = std::move(next);
    if (stable) break;
    if (iterations > layout.dimension() + 1) throw std::logic_error("closure did not stabilise");
  }
  if (stats) stats->iterations = iterations;
  return {level, layout.edge_order(), std::move(span)};
}

template <Field F>
Subalgebra<typename F::value_type> image_subalgebra(const Multigraph& g, int level, const F& field) {
  require_connected(g, "image_subalgebra");
  return closure_from_generators(g, fundamental_cycles(g), level, field);
}

template <Field F>
Subalgebra<typename F::value_type> image_subalgebra(const Multigraph& g, const std::set<std::string>& tree, int level,
                                                    const F& field) {
  require_connected(g, "image_subalgebra");
  return closure_from_generators(g, fundamental_cycles(g, tree), level, field);
}

// True iff every product of two basis rows lies in the span (in either order).
template <class T>
bool is_closed_under_multiplication(const Subalgebra<T>& s, const T& zero) {
  const auto layout = s.layout();
  const auto pivots = pivot_columns(s.basis);
  for (std::size_t i = 0; i < s.basis.rows(); ++i)
    for (std::size_t j = 0; j < s.basis.rows(); ++j)
      if (!in_rref_span<T>(layout.template multiply_rows<T>(s.basis.row(i), s.basis.row(j), zero), s.basis, pivots))
        return false;
  return true;
}

// Pushes every basis row of s along phi into the coordinates of `target`.
template <Field F>
Matrix<typename F::value_type> pushforward_basis(const Subalgebra<typename F::value_type>& s, const EdgeBijection& phi,
                                                 const CoordinateLayout& target, const F& field) {
  using T = typename F::value_type;
  const auto from = s.layout();
  const IndexedBijection idx(phi, from, target);
  Matrix<T> out = Matrix<T>::empty(target.dimension());
  for (std::size_t i = 0; i < s.basis.rows(); ++i)
    out.append_row(pushforward_row<T>(idx, s.basis.row(i), from, target, field.zero()));
  return out;
}

struct CompareOptions {
  // The signed comparison degenerates in characteristic 2; refuse unless asked.
  bool allow_characteristic_two = false;
};

template <Field F>
void check_characteristic(const F& field, const CompareOptions& opts) {
  if (field.characteristic() == 2 && !opts.allow_characteristic_two)
    throw std::invalid_argument("invariant comparison in characteristic 2 is disabled");
}

// phi_*(s) == s2, for subalgebras already computed. phi_* is an algebra
// automorphism of the truncation, so the pushed rows are independent; equality
// then holds iff the ranks agree and every pushed row lies in s2, which is what
// is tested (with early exit). subspace_equal on the pushed basis gives the same
// answer and is cross-checked in the tests.
template <Field F>
bool subalgebras_equal_under(const Subalgebra<typename F::value_type>& s, const Subalgebra<typename F::value_type>& s2,
                             const EdgeBijection& phi, const F& field, const CompareOptions& opts = {}) {
  using T = typename F::value_type;
  check_characteristic(field, opts);
  if (s.level != s2.level) throw std::invalid_argument("level mismatch");
  if (s.edge_order.size() != s2.edge_order.size()) throw std::invalid_argument("edge count mismatch");
  if (s.rank() != s2.rank()) return false;
  const auto from = s.layout(), to = s2.layout();
  const IndexedBijection idx(phi, from, to);
  const auto pivots = pivot_columns(s2.basis);
  for (std::size_t i = 0; i < s.basis.rows(); ++i) {
    const auto row = pushforward_row<T>(idx, s.basis.row(i), from, to, field.zero());
    if (!in_rref_span<T>(row, s2.basis, pivots)) return false;
  }
  return true;
}

template <Field F>
bool invariants_equal(const Multigraph& g, const Multigraph& g2, const EdgeBijection& phi, int level, const F& field,
                      const CompareOptions& opts = {}) {
  check_characteristic(field, opts);
  require_connected(g, "invariants_equal");
  require_connected(g2, "invariants_equal");
  phi.check_between(g, g2);
  return subalgebras_equal_under(image_subalgebra(g, level, field), image_subalgebra(g2, level, field), phi, field,
                                 opts);
}

// Degree-one block of the augmentation part of s; equals the cycle space.
template <Field F>
Matrix<typename F::value_type> degree_one_part(const Subalgebra<typename F::value_type>& s, const F& field) {
  using T = typename F::value_type;
  const auto layout = s.layout();
  const auto m = layout.edge_count();
  Matrix<T> out = Matrix<T>::empty(m);
  for (std::size_t i = 0; i < s.basis.rows(); ++i) {
    if (!is_zero(s.basis(i, 0))) continue;
    std::vector<T> r(m, field.zero());
    for (std::size_t j = 0; j < m; ++j) r[j] = s.basis(i, layout.deg1_coord(j));
    out.append_row(r);
  }
  return rref(std::move(out));
}

}  // namespace pi1trunc
