#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pi1trunc/field.hpp"
#include "pi1trunc/multigraph.hpp"

namespace pi1trunc {

inline void check_level(int level) {
  if (level != 1 && level != 2) throw std::invalid_argument("truncation level must be 1 or 2");
}

// Element of k[F_E]/J^{k+1} in the basis 1, (e-1), (e-1)(f-1). Mappings are
// sparse and never store zero coefficients.
template <class T>
struct TruncElement {
  int level = 2;
  T constant{};
  std::map<std::string, T> deg1;
  std::map<std::pair<std::string, std::string>, T> deg2;

  friend bool operator==(const TruncElement&, const TruncElement&) = default;
};

namespace detail {

template <class K, class T>
void accumulate(std::map<K, T>& m, const K& key, const T& value) {
  if (is_zero(value)) return;
  auto [it, inserted] = m.try_emplace(key, value);
  if (inserted) return;
  it->second += value;
  if (is_zero(it->second)) m.erase(it);
}

}  // namespace detail

template <Field F>
TruncElement<typename F::value_type> trunc_one(int level, const F& field) {
  check_level(level);
  return {level, field.one(), {}, {}};
}

// (e - 1) as an element of the truncation.
template <Field F>
TruncElement<typename F::value_type> trunc_generator(const std::string& e, int level, const F& field) {
  check_level(level);
  return {level, field.zero(), {{e, field.one()}}, {}};
}

template <class T>
TruncElement<T> multiply(const TruncElement<T>& a, const TruncElement<T>& b) {
  if (a.level != b.level) throw std::invalid_argument("multiply: truncation level mismatch");
  TruncElement<T> r;
  r.level = a.level;
  r.constant = a.constant * b.constant;
  for (const auto& [e, x] : b.deg1) detail::accumulate(r.deg1, e, a.constant * x);
  for (const auto& [e, x] : a.deg1) detail::accumulate(r.deg1, e, b.constant * x);
  if (r.level >= 2) {
    for (const auto& [ef, x] : b.deg2) detail::accumulate(r.deg2, ef, a.constant * x);
    for (const auto& [ef, x] : a.deg2) detail::accumulate(r.deg2, ef, b.constant * x);
    for (const auto& [e, x] : a.deg1)
      for (const auto& [f, y] : b.deg1) detail::accumulate(r.deg2, std::pair{e, f}, x * y);
  }
  return r;
}

template <class T>
TruncElement<T> add(TruncElement<T> a, const TruncElement<T>& b, const T& scale) {
  if (a.level != b.level) throw std::invalid_argument("add: truncation level mismatch");
  a.constant += scale * b.constant;
  for (const auto& [e, x] : b.deg1) detail::accumulate(a.deg1, e, scale * x);
  for (const auto& [ef, x] : b.deg2) detail::accumulate(a.deg2, ef, scale * x);
  return a;
}

// Image of a single letter: x -> 1 + (x-1); x^-1 -> 1 - (x-1) + (x-1)^2 at level 2.
template <Field F>
TruncElement<typename F::value_type> embed_letter(const Letter& l, int level, const F& field) {
  check_level(level);
  if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("embed: exponents must be +1 or -1");
  TruncElement<typename F::value_type> r{level, field.one(), {{l.edge, field.from_int(l.sign)}}, {}};
  if (l.sign < 0 && level >= 2) r.deg2[{l.edge, l.edge}] = field.one();
  return r;
}

// Word embedding into the truncation, as the product of the letter images.
template <Field F>
TruncElement<typename F::value_type> embed_word(const Word& w, int level, const F& field) {
  auto r = trunc_one(level, field);
  for (const auto& l : w) r = multiply(r, embed_letter(l, level, field));
  return r;
}

// Expands general integer exponents into repeated +-1 letters.
inline Word expand_powers(const std::vector<std::pair<std::string, long>>& powers) {
  Word w;
  for (const auto& [e, n] : powers)
    for (long i = 0; i < (n < 0 ? -n : n); ++i) w.push_back({e, n < 0 ? -1 : 1});
  return w;
}

// Algebra map induced by phi: (e-1) -> s(e'-1) + [s = -1](e'-1)^2, truncated.
template <Field F>
TruncElement<typename F::value_type> pushforward(const EdgeBijection& phi, const TruncElement<typename F::value_type>& a,
                                                 const F& field) {
  TruncElement<typename F::value_type> r{a.level, a.constant, {}, {}};
  for (const auto& [e, x] : a.deg1) {
    const auto& img = phi(e);
    detail::accumulate(r.deg1, img.edge, img.sign > 0 ? x : field.zero() - x);
    if (img.sign < 0 && a.level >= 2) detail::accumulate(r.deg2, std::pair{img.edge, img.edge}, x);
  }
  for (const auto& [ef, x] : a.deg2) {
    const auto& ie = phi(ef.first);
    const auto& jf = phi(ef.second);
    detail::accumulate(r.deg2, std::pair{ie.edge, jf.edge}, ie.sign * jf.sign > 0 ? x : field.zero() - x);
  }
  return r;
}

// Fixed coordinate order: 1, then (e-1) by sorted edge id, then (e-1)(f-1)
// lexicographic in (e, f). Ambient dimension is 1 + m (+ m^2 at level 2).
class CoordinateLayout {
 public:
  CoordinateLayout(std::vector<std::string> edge_order, int level)
      : edges_(std::move(edge_order)), level_(level) {
    check_level(level);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (i > 0 && !(edges_[i - 1] < edges_[i])) throw std::invalid_argument("edge order must be strictly sorted");
      index_[edges_[i]] = i;
    }
  }
  explicit CoordinateLayout(const Multigraph& g, int level) : CoordinateLayout(g.edge_ids(), level) {}

  const std::vector<std::string>& edge_order() const { return edges_; }
  int level() const { return level_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t dimension() const {
    const auto m = edges_.size();
    return 1 + m + (level_ >= 2 ? m * m : 0);
  }
  std::size_t edge_index(const std::string& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw std::out_of_range("edge '" + e + "' is not in the coordinate layout");
    return it->second;
  }
  std::size_t deg1_coord(std::size_t i) const { return 1 + i; }
  std::size_t deg2_coord(std::size_t i, std::size_t j) const { return 1 + edges_.size() * (1 + i) + j; }

  template <class T>
  std::vector<T> flatten(const TruncElement<T>& a, const T& zero) const {
    if (a.level != level_) throw std::invalid_argument("flatten: level mismatch");
    std::vector<T> row(dimension(), zero);
    row[0] = a.constant;
    for (const auto& [e, x] : a.deg1) row[deg1_coord(edge_index(e))] = x;
    for (const auto& [ef, x] : a.deg2) row[deg2_coord(edge_index(ef.first), edge_index(ef.second))] = x;
    return row;
  }

  template <class T>
  TruncElement<T> unflatten(std::span<const T> row) const {
    if (row.size() != dimension()) throw std::invalid_argument("unflatten: length mismatch");
    TruncElement<T> a{level_, row[0], {}, {}};
    const auto m = edges_.size();
    for (std::size_t i = 0; i < m; ++i)
      if (!is_zero(row[deg1_coord(i)])) a.deg1[edges_[i]] = row[deg1_coord(i)];
    if (level_ >= 2)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (!is_zero(row[deg2_coord(i, j)])) a.deg2[{edges_[i], edges_[j]}] = row[deg2_coord(i, j)];
    return a;
  }

  // Truncated product of two coordinate rows.
  template <class T>
  std::vector<T> multiply_rows(std::span<const T> a, std::span<const T> b, const T& zero) const {
    const auto m = edges_.size();
    std::vector<T> r(dimension(), zero);
    r[0] = a[0] * b[0];
    const bool a0 = !is_zero(a[0]), b0 = !is_zero(b[0]);
    for (std::size_t i = 0; i < m; ++i) {
      const auto c = deg1_coord(i);
      if (b0 && !is_zero(a[c])) r[c] += b[0] * a[c];
      if (a0 && !is_zero(b[c])) r[c] += a[0] * b[c];
    }
    if (level_ >= 2) {
      for (std::size_t i = 0; i < m; ++i) {
        const auto& ai = a[deg1_coord(i)];
        for (std::size_t j = 0; j < m; ++j) {
          const auto c = deg2_coord(i, j);
          if (b0 && !is_zero(a[c])) r[c] += b[0] * a[c];
          if (a0 && !is_zero(b[c])) r[c] += a[0] * b[c];
          if (!is_zero(ai) && !is_zero(b[deg1_coord(j)])) r[c] += ai * b[deg1_coord(j)];
        }
      }
    }
    return r;
  }

 private:
  std::vector<std::string> edges_;
  std::map<std::string, std::size_t> index_;
  int level_;
};

// phi expressed on coordinate indices: source edge index -> (target index, sign).
struct IndexedBijection {
  std::vector<std::size_t> target;
  std::vector<int> sign;

  IndexedBijection(const EdgeBijection& phi, const CoordinateLayout& from, const CoordinateLayout& to) {
    if (phi.size() != from.edge_count() || from.edge_count() != to.edge_count())
      throw std::invalid_argument("edge bijection size does not match the coordinate layouts");
    target.resize(from.edge_count());
    sign.resize(from.edge_count());
    for (std::size_t i = 0; i < from.edge_count(); ++i) {
      const auto& img = phi(from.edge_order()[i]);
      target[i] = to.edge_index(img.edge);
      sign[i] = img.sign;
    }
  }
};

// Dense counterpart of pushforward, on coordinate rows.
template <class T>
std::vector<T> pushforward_row(const IndexedBijection& phi, std::span<const T> row, const CoordinateLayout& from,
                               const CoordinateLayout& to, const T& zero) {
  const auto m = from.edge_count();
  std::vector<T> r(to.dimension(), zero);
  r[0] = row[0];
  for (std::size_t i = 0; i < m; ++i) {
    const auto& x = row[from.deg1_coord(i)];
    if (is_zero(x)) continue;
    const auto t = phi.target[i];
    if (phi.sign[i] > 0) {
      r[to.deg1_coord(t)] += x;
    } else {
      r[to.deg1_coord(t)] -= x;
      if (to.level() >= 2) r[to.deg2_coord(t, t)] += x;
    }
  }
  if (from.level() >= 2) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const auto& x = row[from.deg2_coord(i, j)];
        if (is_zero(x)) continue;
        const auto c = to.deg2_coord(phi.target[i], phi.target[j]);
        if (phi.sign[i] * phi.sign[j] > 0)
          r[c] += x;
        else
          r[c] -= x;
      }
  }
  return r;
}

}  // namespace pi1trunc
