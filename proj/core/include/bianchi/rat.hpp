#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "bianchi/errors.hpp"

namespace bianchi {

using Int = mpz_class;

// Exact rational scalar. Always stored normalized: gcd(num, den) = 1,
// den > 0 (mpq_class canonicalizes on construction and after arithmetic).
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors integer literals
  explicit Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw DivisionByZero();
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rat parse(const std::string& s);

  const mpq_class& raw() const { return v_; }
  Int num() const { return Int(v_.get_num()); }
  Int den() const { return Int(v_.get_den()); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat zero_like() const { return Rat(); }
  Rat one_like() const { return Rat(1); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat::wrap(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat::wrap(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat::wrap(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Rat::wrap(a.v_ / b.v_);
  }
  Rat operator-() const { return wrap(-v_); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  Rat inverse() const {
    if (is_zero()) throw DivisionByZero();
    return wrap(1 / v_);
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  // "n" for integers, "n/d" otherwise.
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  // Nearest integer, ties to even.
  Int round_half_even() const;

  Int floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }

 private:
  static Rat wrap(const mpq_class& q) {
    Rat r;
    r.v_ = q;
    return r;
  }
  mpq_class v_;
};

inline Int Rat::round_half_even() const {
  Int fl = floor();
  Rat frac = *this - Rat(fl);          // in [0, 1)
  Rat half(Int(1), Int(2));
  if (frac < half) return fl;
  if (frac > half) return fl + 1;
  return mpz_even_p(fl.get_mpz_t()) ? fl : Int(fl + 1);
}

inline Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal '" + s + "'");
  }
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace bianchi
