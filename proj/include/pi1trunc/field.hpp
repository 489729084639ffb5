#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace pi1trunc {

// Arbitrary-precision rational. Thin wrapper over mpq_class so that division
// by zero raises instead of trapping inside GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

  // Canonical "p/q" with q > 0 and gcd(p, q) = 1. Integers keep the "/1".
  std::string to_string() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }

// Residue modulo a prime. The modulus travels with the value so that several
// prime fields can coexist in one process.
class ModP {
 public:
  ModP() = default;
  ModP(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  ModP operator-() const { return ModP(v_ == 0 ? 0 : p_ - v_, p_); }
  ModP& operator+=(const ModP& o) {
    check(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    check(o);
    v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % p_);
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }
  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  ModP inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero");
    // Fermat: a^(p-2)
    ModP base = *this, acc(1, p_);
    for (std::uint64_t e = p_ - 2; e > 0; e >>= 1) {
      if (e & 1U) acc *= base;
      base *= base;
    }
    return acc;
  }

  std::string to_string() const { return std::to_string(v_) + "/1"; }

 private:
  void check(const ModP& o) const {
    if (o.p_ != p_) throw std::invalid_argument("mixing residues of different primes");
  }
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 2;
};

inline bool is_zero(const ModP& x) { return x.is_zero(); }

template <class F>
concept Field = requires(const F& f, long n) {
  typename F::value_type;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(n) } -> std::same_as<typename F::value_type>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.name() } -> std::convertible_to<std::string>;
};

struct RationalField {
  using value_type = Rational;
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long n) const { return Rational(n); }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "q"; }
};

class PrimeField {
 public:
  using value_type = ModP;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("prime out of range");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
  }

  ModP zero() const { return ModP(0, p_); }
  ModP one() const { return ModP(1, p_); }
  ModP from_int(long n) const {
    auto r = static_cast<std::int64_t>(n % static_cast<std::int64_t>(p_));
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return ModP(static_cast<std::uint64_t>(r), p_);
  }
  // Image of a rational under k -> Z/p; fails when p divides the denominator.
  ModP reduce(const Rational& q) const {
    mpz_class num = q.raw().get_num() % mpz_class(static_cast<unsigned long>(p_));
    mpz_class den = q.raw().get_den() % mpz_class(static_cast<unsigned long>(p_));
    if (num < 0) num += static_cast<unsigned long>(p_);
    if (den == 0) throw std::domain_error("denominator vanishes mod p");
    return ModP(num.get_ui(), p_) / ModP(den.get_ui(), p_);
  }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const { return "gf:" + std::to_string(p_); }

 private:
  std::uint64_t p_;
};

static_assert(Field<RationalField>);
static_assert(Field<PrimeField>);

}  // namespace pi1trunc
