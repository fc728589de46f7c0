#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "bianchi/errors.hpp"

namespace bianchi {

// Dense univariate polynomial over a field type F. F needs value semantics,
// +,-,*, inverse(), is_zero(), zero_like(), one_like().
template <typename F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(F proto) : proto_(std::move(proto)) {}
  Poly(F proto, std::vector<F> coeffs) : proto_(std::move(proto)), c_(std::move(coeffs)) {
    trim();
  }

  static Poly zero(const F& proto) { return Poly(proto); }
  static Poly constant(const F& value) { return Poly(value.zero_like(), {value}); }
  static Poly x(const F& proto) { return Poly(proto, {proto.zero_like(), proto.one_like()}); }
  static Poly x_power(const F& proto, int n) {
    std::vector<F> c(size_t(n) + 1, proto.zero_like());
    c.back() = proto.one_like();
    return Poly(proto, std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
  const F& proto() const { return proto_; }
  const std::vector<F>& coeffs() const { return c_; }

  F coeff(int i) const {
    if (i < 0 || i >= int(c_.size())) return proto_.zero_like();
    return c_[size_t(i)];
  }
  const F& leading() const {
    assert(!c_.empty());
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && (c_.back() - proto_.one_like()).is_zero(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<F> c(std::max(a.c_.size(), b.c_.size()), a.proto_.zero_like());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
    return Poly(a.proto_, std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<F> c(std::max(a.c_.size(), b.c_.size()), a.proto_.zero_like());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) - b.coeff(int(i));
    return Poly(a.proto_, std::move(c));
  }
  Poly operator-() const {
    std::vector<F> c(c_);
    for (auto& e : c) e = proto_.zero_like() - e;
    return Poly(proto_, std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.proto_);
    std::vector<F> c(a.c_.size() + b.c_.size() - 1, a.proto_.zero_like());
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(a.proto_, std::move(c));
  }
  Poly scaled(const F& s) const {
    std::vector<F> c(c_);
    for (auto& e : c) e = e * s;
    return Poly(proto_, std::move(c));
  }

  // Euclidean division; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& b) const {
    if (b.is_zero()) throw DivisionByZero();
    Poly r = *this;
    Poly q(proto_);
    F lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int shift = r.degree() - b.degree();
      F factor = r.leading() * lead_inv;
      // q += factor * x^shift; r -= factor * x^shift * b
      std::vector<F> qc(q.c_);
      if (int(qc.size()) < shift + 1) qc.resize(size_t(shift) + 1, proto_.zero_like());
      qc[size_t(shift)] += factor;
      q = Poly(proto_, std::move(qc));
      std::vector<F> rc(r.c_);
      for (int i = 0; i <= b.degree(); ++i)
        rc[size_t(i + shift)] -= factor * b.c_[size_t(i)];
      r = Poly(proto_, std::move(rc));
    }
    return {q, r};
  }

  Poly mod(const Poly& b) const { return divmod(b).second; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(proto_);
    std::vector<F> c(c_.size() - 1, proto_.zero_like());
    for (size_t i = 1; i < c_.size(); ++i) {
      F n = proto_.zero_like();
      for (size_t j = 0; j < i; ++j) n += proto_.one_like();
      c[i - 1] = c_[i] * n;
    }
    return Poly(proto_, std::move(c));
  }

  F eval(const F& x) const {
    F acc = proto_.zero_like();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Evaluate with coefficients mapped into another domain first.
  template <typename G, typename MapFn>
  G eval_mapped(const G& x, MapFn&& map) const {
    G acc = x.zero_like();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + map(c_[i]);
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
  }

  friend Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
      Poly r = x.mod(y);
      x = y;
      y = r;
    }
    return x.monic();
  }

  // g = gcd(a,b) together with u,v such that u*a + v*b = g.
  struct XgcdResult {
    Poly g, u, v;
  };
  friend XgcdResult xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(a.proto_.one_like()), s1(a.proto_);
    Poly t0(a.proto_), t1 = Poly::constant(a.proto_.one_like());
    while (!r1.is_zero()) {
      auto [q, r] = r0.divmod(r1);
      r0 = r1; r1 = r;
      Poly s = s0 - q * s1; s0 = s1; s1 = s;
      Poly t = t0 - q * t1; t0 = t1; t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F inv = r0.leading().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] - b.c_[i]).is_zero()) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  F proto_;
  std::vector<F> c_;
};

}  // namespace bianchi
