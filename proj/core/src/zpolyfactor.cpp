#include "bianchi/zpolyfactor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bianchi/errors.hpp"
#include "bianchi/intfactor.hpp"

namespace bianchi {

int zp_degree(const ZPoly& f) { return int(f.size()) - 1; }

ZPoly zp_trim(ZPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

ZPoly zp_primitive_part(const ZPoly& f, Int* content_out) {
  ZPoly g = zp_trim(f);
  if (g.empty()) {
    if (content_out) *content_out = 0;
    return g;
  }
  Int c = 0;
  for (const auto& e : g) c = gcd(c, e);
  if (sgn(g.back().get_mpz_t()) < 0) c = -c;
  for (auto& e : g) e /= c;
  if (content_out) *content_out = c;
  return g;
}

Poly<Rat> zp_to_q(const ZPoly& f) {
  std::vector<Rat> c;
  c.reserve(f.size());
  for (const auto& e : f) c.emplace_back(e);
  return Poly<Rat>(Rat(), std::move(c));
}

ZPoly q_to_zp_primitive(const Poly<Rat>& f, Rat* scale_out) {
  Int den = 1;
  for (const auto& e : f.coeffs()) den = lcm(den, e.den());
  ZPoly g;
  g.reserve(f.coeffs().size());
  for (const auto& e : f.coeffs()) g.push_back(e.num() * (den / e.den()));
  Int content;
  ZPoly pp = zp_primitive_part(g, &content);
  if (scale_out) *scale_out = Rat(content, den);
  return pp;
}

namespace {

// ---- arithmetic mod m (m = p or a prime power during lifting) ----

Int mod_pos(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Symmetric representative in (-m/2, m/2].
Int mod_sym(const Int& a, const Int& m) {
  Int r = mod_pos(a, m);
  if (2 * r > m) r -= m;
  return r;
}

Int inv_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw DivisionByZero();
  return r;
}

struct MPoly {
  // coefficients in [0, m)
  std::vector<Int> c;
};

MPoly mp_trim(MPoly f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
  return f;
}

int mp_deg(const MPoly& f) { return int(f.c.size()) - 1; }

MPoly mp_from(const ZPoly& f, const Int& m) {
  MPoly g;
  g.c.reserve(f.size());
  for (const auto& e : f) g.c.push_back(mod_pos(e, m));
  return mp_trim(g);
}

MPoly mp_add(const MPoly& a, const MPoly& b, const Int& m) {
  MPoly c;
  c.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < c.c.size(); ++i) {
    Int v = (i < a.c.size() ? a.c[i] : Int(0)) + (i < b.c.size() ? b.c[i] : Int(0));
    c.c[i] = mod_pos(v, m);
  }
  return mp_trim(c);
}

MPoly mp_sub(const MPoly& a, const MPoly& b, const Int& m) {
  MPoly c;
  c.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < c.c.size(); ++i) {
    Int v = (i < a.c.size() ? a.c[i] : Int(0)) - (i < b.c.size() ? b.c[i] : Int(0));
    c.c[i] = mod_pos(v, m);
  }
  return mp_trim(c);
}

MPoly mp_mul(const MPoly& a, const MPoly& b, const Int& m) {
  if (a.c.empty() || b.c.empty()) return {};
  MPoly c;
  c.c.resize(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) c.c[i + j] += a.c[i] * b.c[j];
  for (auto& e : c.c) e = mod_pos(e, m);
  return mp_trim(c);
}

MPoly mp_scale(const MPoly& a, const Int& s, const Int& m) {
  MPoly c = a;
  for (auto& e : c.c) e = mod_pos(e * s, m);
  return mp_trim(c);
}

// Division with remainder; divisor's leading coefficient must be a unit mod m.
std::pair<MPoly, MPoly> mp_divmod(const MPoly& a, const MPoly& b, const Int& m) {
  if (b.c.empty()) throw DivisionByZero();
  Int linv = inv_mod(b.c.back(), m);
  MPoly r = a, q;
  if (mp_deg(a) >= mp_deg(b)) q.c.resize(size_t(mp_deg(a) - mp_deg(b)) + 1, Int(0));
  while (mp_deg(r) >= mp_deg(b)) {
    int shift = mp_deg(r) - mp_deg(b);
    Int f = mod_pos(r.c.back() * linv, m);
    q.c[size_t(shift)] = f;
    for (int i = 0; i <= mp_deg(b); ++i)
      r.c[size_t(i + shift)] = mod_pos(r.c[size_t(i + shift)] - f * b.c[size_t(i)], m);
    r = mp_trim(r);
  }
  return {mp_trim(q), r};
}

MPoly mp_mod(const MPoly& a, const MPoly& b, const Int& m) { return mp_divmod(a, b, m).second; }

MPoly mp_monic(const MPoly& a, const Int& m) {
  if (a.c.empty()) return a;
  return mp_scale(a, inv_mod(a.c.back(), m), m);
}

MPoly mp_gcd(MPoly a, MPoly b, const Int& p) {
  while (!b.c.empty()) {
    MPoly r = mp_mod(a, mp_monic(b, p), p);
    a = b;
    b = r;
  }
  return mp_monic(a, p);
}

// u*a + v*b = 1 for coprime a, b (mod prime p).
void mp_xgcd_coprime(const MPoly& a, const MPoly& b, const Int& p, MPoly& u, MPoly& v) {
  MPoly r0 = a, r1 = b;
  MPoly s0{{Int(1)}}, s1{}, t0{}, t1{{Int(1)}};
  while (!r1.c.empty()) {
    auto [q, r] = mp_divmod(r0, mp_monic(r1, p), p);
    q = mp_scale(q, inv_mod(r1.c.back(), p), p);
    r = mp_sub(r0, mp_mul(q, r1, p), p);
    r0 = r1; r1 = r;
    MPoly s = mp_sub(s0, mp_mul(q, s1, p), p); s0 = s1; s1 = s;
    MPoly t = mp_sub(t0, mp_mul(q, t1, p), p); t0 = t1; t1 = t;
  }
  if (mp_deg(r0) != 0) throw std::logic_error("mp_xgcd_coprime: inputs not coprime");
  Int inv = inv_mod(r0.c[0], p);
  u = mp_scale(s0, inv, p);
  v = mp_scale(t0, inv, p);
}

MPoly mp_powmod(const MPoly& base, Int e, const MPoly& mod, const Int& p) {
  MPoly result{{Int(1)}};
  MPoly b = mp_mod(base, mod, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mp_mod(mp_mul(result, b, p), mod, p);
    b = mp_mod(mp_mul(b, b, p), mod, p);
    e >>= 1;
  }
  return result;
}

MPoly mp_derivative(const MPoly& f, const Int& p) {
  MPoly d;
  if (f.c.size() <= 1) return d;
  d.c.resize(f.c.size() - 1);
  for (size_t i = 1; i < f.c.size(); ++i) d.c[i - 1] = mod_pos(f.c[i] * Int(long(i)), p);
  return mp_trim(d);
}

// ---- Cantor-Zassenhaus factorization mod a prime ----

// Deterministic PRNG for the splitting attempts.
struct SplitRng {
  unsigned long state = 0x9e3779b97f4a7c15ul;
  unsigned long next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  MPoly random_poly(int max_deg, const Int& p) {
    MPoly r;
    r.c.resize(size_t(max_deg) + 1);
    for (auto& e : r.c) e = mod_pos(Int(long(next() >> 1)), p);
    return mp_trim(r);
  }
};

// Splits a monic squarefree product of degree-d irreducibles.
void equal_degree_split(const MPoly& f, int d, const Int& p, SplitRng& rng,
                        std::vector<MPoly>& out) {
  if (mp_deg(f) == d) {
    out.push_back(f);
    return;
  }
  MPoly factor;
  while (true) {
    MPoly a = rng.random_poly(mp_deg(f) - 1, p);
    if (mp_deg(a) < 1) continue;
    MPoly g = mp_gcd(f, a, p);
    if (mp_deg(g) > 0 && mp_deg(g) < mp_deg(f)) {
      factor = g;
      break;
    }
    MPoly b;
    if (p == 2) {
      // trace map a + a^2 + a^4 + ... over F_2[x]/(f)
      b = MPoly{};
      MPoly t = mp_mod(a, f, p);
      for (int i = 0; i < d; ++i) {
        b = mp_add(b, t, p);
        t = mp_mod(mp_mul(t, t, p), f, p);
      }
    } else {
      Int e = (pow_int(p, (unsigned long)d) - 1) / 2;
      b = mp_powmod(a, e, f, p);
      b = mp_sub(b, MPoly{{Int(1)}}, p);
    }
    MPoly h = mp_gcd(f, b, p);
    if (mp_deg(h) > 0 && mp_deg(h) < mp_deg(f)) {
      factor = h;
      break;
    }
  }
  auto [q, r] = mp_divmod(f, factor, p);
  (void)r;
  equal_degree_split(factor, d, p, rng, out);
  equal_degree_split(mp_monic(q, p), d, p, rng, out);
}

// Monic squarefree f -> monic irreducible factors.
std::vector<MPoly> factor_squarefree_mod_p(const MPoly& f, const Int& p) {
  std::vector<MPoly> out;
  SplitRng rng;
  MPoly rest = f;
  MPoly x{{Int(0), Int(1)}};
  MPoly h = x;  // x^(p^d) mod rest, iteratively
  int d = 0;
  while (mp_deg(rest) > 0) {
    ++d;
    if (2 * d > mp_deg(rest)) {
      out.push_back(rest);  // remainder is irreducible
      break;
    }
    h = mp_powmod(h, p, rest, p);
    MPoly g = mp_gcd(rest, mp_sub(h, x, p), p);
    if (mp_deg(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      rest = mp_monic(mp_divmod(rest, g, p).first, p);
      h = mp_mod(h, rest, p);
    }
  }
  return out;
}

bool zpoly_less(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

ZPoly mp_to_zp(const MPoly& f) {
  ZPoly g;
  g.reserve(f.c.size());
  for (const auto& e : f.c) g.push_back(e);
  return g;
}

// ---- Hensel lifting (quadratic, on a factor tree) ----

struct HenselNode {
  MPoly f;        // product of the leaves below, mod current modulus
  MPoly g, h;     // children products: f = g*h
  MPoly s, t;     // s*g + t*h = 1
  int left = -1, right = -1;  // child node indices, -1 for leaf wrapper
};

// Lift f = g*h (mod m), s*g + t*h = 1 (mod m) to the same data mod m^2.
void hensel_step(const MPoly& f, MPoly& g, MPoly& h, MPoly& s, MPoly& t, const Int& m) {
  Int m2 = m * m;
  MPoly e = mp_sub(f, mp_mul(g, h, m2), m2);
  auto [q, r] = mp_divmod(mp_mul(s, e, m2), h, m2);
  MPoly g1 = mp_add(g, mp_add(mp_mul(t, e, m2), mp_mul(q, g, m2), m2), m2);
  MPoly h1 = mp_add(h, r, m2);
  MPoly b = mp_sub(mp_add(mp_mul(s, g1, m2), mp_mul(t, h1, m2), m2), MPoly{{Int(1)}}, m2);
  auto [c, d] = mp_divmod(mp_mul(s, b, m2), h1, m2);
  MPoly s1 = mp_sub(s, d, m2);
  MPoly t1 = mp_sub(t, mp_add(mp_mul(t, b, m2), mp_mul(c, g1, m2), m2), m2);
  g = g1; h = h1; s = s1; t = t1;
}

// Lift the monic factors of f (monic mod p after scaling) to mod p^2^iters.
// Returns factors mod the final modulus together with the modulus.
std::pair<std::vector<MPoly>, Int> hensel_lift_tree(const ZPoly& f_in,
                                                    std::vector<MPoly> factors,
                                                    const Int& p, const Int& bound) {
  // Build a balanced product tree over the factor list.
  struct Node {
    MPoly prod;
    int lo, hi;  // factor index range [lo, hi)
    int left = -1, right = -1;
    MPoly s, t;  // Bezout data for (left.prod, right.prod)
  };
  std::vector<Node> tree;
  // recursive builder
  auto build = [&](auto&& self, int lo, int hi) -> int {
    Node n;
    n.lo = lo; n.hi = hi;
    if (hi - lo == 1) {
      n.prod = factors[size_t(lo)];
      tree.push_back(n);
      return int(tree.size()) - 1;
    }
    int mid = (lo + hi) / 2;
    int l = self(self, lo, mid);
    int r = self(self, mid, hi);
    n.left = l; n.right = r;
    n.prod = mp_mul(tree[size_t(l)].prod, tree[size_t(r)].prod, p);
    mp_xgcd_coprime(tree[size_t(l)].prod, tree[size_t(r)].prod, p, n.s, n.t);
    tree.push_back(n);
    return int(tree.size()) - 1;
  };
  int root = build(build, 0, int(factors.size()));

  Int m = p;
  // The root product is f made monic mod m; track the monic version of f.
  while (m <= bound) {
    Int m2 = m * m;
    // refresh root product as monic f mod m^2
    MPoly fm = mp_from(f_in, m2);
    Int linv = inv_mod(fm.c.back(), m2);
    fm = mp_scale(fm, linv, m2);
    // descend the tree lifting every split
    auto lift = [&](auto&& self, int idx, const MPoly& target) -> void {
      Node& n = tree[size_t(idx)];
      n.prod = target;
      if (n.left < 0) return;
      MPoly g = tree[size_t(n.left)].prod, h = tree[size_t(n.right)].prod;
      MPoly s = n.s, t = n.t;
      hensel_step(target, g, h, s, t, m);
      n.s = s; n.t = t;
      self(self, n.left, g);
      self(self, n.right, h);
    };
    lift(lift, root, fm);
    m = m2;
  }

  std::vector<MPoly> lifted(factors.size());
  for (const auto& n : tree)
    if (n.left < 0) lifted[size_t(n.lo)] = n.prod;
  return {lifted, m};
}

// ---- squarefree factorization over Z (via Q) ----

std::vector<std::pair<ZPoly, unsigned>> squarefree_decompose(const ZPoly& f) {
  // Yun's algorithm over Q, outputs primitive integer polynomials.
  std::vector<std::pair<ZPoly, unsigned>> out;
  Poly<Rat> a = zp_to_q(f);
  Poly<Rat> da = a.derivative();
  Poly<Rat> g = gcd(a, da);
  if (g.degree() == 0) {
    out.emplace_back(zp_primitive_part(f), 1);
    return out;
  }
  Poly<Rat> w = a.divmod(g).first;
  Poly<Rat> y = da.divmod(g).first;
  Poly<Rat> z = y - w.derivative();
  unsigned i = 1;
  while (!z.is_zero()) {
    Poly<Rat> gi = gcd(w, z);
    if (gi.degree() > 0) out.emplace_back(q_to_zp_primitive(gi), i);
    w = w.divmod(gi).first;
    y = z.divmod(gi).first;
    z = y - w.derivative();
    ++i;
  }
  if (w.degree() > 0) out.emplace_back(q_to_zp_primitive(w), i);
  return out;
}

// Landau-Mignotte style coefficient bound for factors of f.
Int factor_coeff_bound(const ZPoly& f) {
  Int maxc = 0;
  for (const auto& e : f) {
    Int a = abs(e);
    if (a > maxc) maxc = a;
  }
  int n = zp_degree(f);
  Int two_n = pow_int(2, (unsigned long)(n + 1));
  // sqrt(n+1) <= n+1
  return Int(n + 1) * two_n * maxc * abs(f.back());
}

// Factor a primitive squarefree integer polynomial of degree >= 1.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
  if (zp_degree(f) == 1) return {f};
  // Pick a prime: p odd, p does not divide lc, f stays squarefree mod p.
  Int p = 3;
  while (true) {
    if (is_prime(p) && f.back() % p != 0) {
      MPoly fp = mp_from(f, p);
      if (mp_deg(fp) == zp_degree(f)) {
        MPoly d = mp_derivative(fp, p);
        if (!d.c.empty() && mp_deg(mp_gcd(fp, d, p)) == 0) break;
      }
    }
    p += 2;
  }

  MPoly fp = mp_monic(mp_from(f, p), p);
  std::vector<MPoly> modular = factor_squarefree_mod_p(fp, p);
  if (modular.size() == 1) return {f};
  std::sort(modular.begin(), modular.end(),
            [](const MPoly& a, const MPoly& b) { return zpoly_less(mp_to_zp(a), mp_to_zp(b)); });

  Int bound = 2 * factor_coeff_bound(f) + 1;
  auto [lifted, m] = hensel_lift_tree(f, modular, p, bound);

  // Subset recombination over the lifted factors.
  std::vector<int> alive(lifted.size());
  std::iota(alive.begin(), alive.end(), 0);
  ZPoly rest = f;
  std::vector<ZPoly> out;

  auto try_subset = [&](const std::vector<int>& subset) -> bool {
    MPoly prod{{mod_pos(rest.back(), m)}};
    for (int idx : subset) prod = mp_mul(prod, lifted[size_t(idx)], m);
    ZPoly cand(prod.c.size());
    for (size_t i = 0; i < prod.c.size(); ++i) cand[i] = mod_sym(prod.c[i], m);
    cand = zp_primitive_part(cand);
    // trial division over Q
    auto [q, r] = zp_to_q(rest).divmod(zp_to_q(cand));
    if (!r.is_zero()) return false;
    for (const auto& e : q.coeffs())
      if (!e.is_integer() && false) return false;  // q need not be integral midway; primitive parts fix it
    out.push_back(cand);
    rest = q_to_zp_primitive(q);
    std::vector<int> next;
    for (int idx : alive)
      if (std::find(subset.begin(), subset.end(), idx) == subset.end()) next.push_back(idx);
    alive = next;
    return true;
  };

  size_t k = 1;
  while (2 * k <= alive.size()) {
    bool found = true;
    while (found && 2 * k <= alive.size()) {
      found = false;
      // iterate k-subsets of alive
      std::vector<int> idx(k);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        std::vector<int> subset(k);
        for (size_t i = 0; i < k; ++i) subset[i] = alive[size_t(idx[i])];
        if (try_subset(subset)) {
          found = true;
          break;
        }
        // next combination
        int i = int(k) - 1;
        while (i >= 0 && idx[size_t(i)] == int(alive.size()) - int(k) + i) --i;
        if (i < 0) break;
        ++idx[size_t(i)];
        for (size_t j = size_t(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    ++k;
  }
  if (!alive.empty()) out.push_back(rest);
  return out;
}

}  // namespace

ZFactorization factor_poly_z(const ZPoly& f_in) {
  ZPoly f = zp_trim(f_in);
  if (f.empty()) throw std::invalid_argument("factor_poly_z requires a nonzero polynomial");
  if (zp_degree(f) > 16) throw DegreeCapExceeded(zp_degree(f));

  ZFactorization result;
  ZPoly pp = zp_primitive_part(f, &result.content);
  if (zp_degree(pp) == 0) return result;

  for (const auto& [sq, mult] : squarefree_decompose(pp)) {
    for (const auto& irr : factor_squarefree_z(sq)) {
      result.factors.emplace_back(irr, mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return zpoly_less(a.first, b.first); });
  return result;
}

bool is_irreducible_z(const ZPoly& f) {
  ZPoly g = zp_trim(f);
  if (zp_degree(g) < 1) return false;
  auto fac = factor_poly_z(g);
  return fac.factors.size() == 1 && fac.factors[0].second == 1 &&
         abs(fac.content) == 1;
}

std::vector<std::pair<ZPoly, unsigned>> factor_mod_p(const ZPoly& f, const Int& p) {
  MPoly fp = mp_from(f, p);
  if (fp.c.empty()) throw std::invalid_argument("factor_mod_p: zero polynomial mod p");
  fp = mp_monic(fp, p);
  std::map<ZPoly, unsigned, bool (*)(const ZPoly&, const ZPoly&)> acc(zpoly_less);
  // Strip repeated factors via gcd with derivative, handling f' = 0 (x^p powers).
  auto rec = [&](auto&& self, MPoly g, unsigned mult) -> void {
    if (mp_deg(g) < 1) return;
    MPoly d = mp_derivative(g, p);
    if (d.c.empty()) {
      // g(x) = h(x^p); over F_p, g = h(x)^p
      unsigned long pl = p.get_ui();
      MPoly h;
      h.c.resize(size_t(mp_deg(g) / long(pl)) + 1, Int(0));
      for (size_t i = 0; i < h.c.size(); ++i) h.c[i] = g.c[i * pl];
      self(self, mp_trim(h), mult * unsigned(pl));
      return;
    }
    MPoly sq = mp_gcd(g, d, p);
    MPoly sfpart = mp_monic(mp_divmod(g, sq, p).first, p);
    for (const auto& irr : factor_squarefree_mod_p(sfpart, p)) {
      // multiplicity of irr in g
      unsigned e = 0;
      MPoly rest = g;
      while (true) {
        auto [q, r] = mp_divmod(rest, irr, p);
        if (!r.c.empty()) break;
        rest = q;
        ++e;
      }
      acc[mp_to_zp(irr)] += mult * e;
    }
  };
  rec(rec, fp, 1);
  return {acc.begin(), acc.end()};
}

bool is_irreducible_mod_p(const ZPoly& f, const Int& p) {
  auto fac = factor_mod_p(f, p);
  return fac.size() == 1 && fac[0].second == 1 &&
         zp_degree(fac[0].first) == int(mp_deg(mp_from(f, p)));
}

}  // namespace bianchi
