#include "bianchi/intfactor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bianchi {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
  // Brent's variant; n must be composite, odd, not a prime power of 2.
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xb1a2c41ul);
  while (true) {
    Int y = rng.get_z_range(n - 3) + 2;
    Int c = rng.get_z_range(n - 2) + 1;
    Int x = y, d = 1, q = 1, ys = y;
    unsigned long r = 1;
    const unsigned long m = 128;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = (y * y + c) % n;
          q = q * ((x - y) % n + n) % n;
        }
        d = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (d == n) {
      // Backtrack one step at a time.
      do {
        ys = (ys * ys + c) % n;
        d = gcd(((x - ys) % n + n) % n, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n) {
  if (n < 1) throw std::invalid_argument("factor_integer requires n >= 1");
  std::map<Int, unsigned> acc;
  Int m = n;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (m % p == 0) {
      acc[Int(p)] += 1;
      m /= p;
    }
  }
  factor_rec(m, acc);
  return {acc.begin(), acc.end()};
}

std::vector<std::pair<Int, long>> factor_rational(const Rat& q) {
  if (q.is_zero() || q.sign() < 0)
    throw std::invalid_argument("factor_rational requires a positive value");
  std::map<Int, long> acc;
  for (const auto& [p, e] : factor_integer(q.num())) acc[p] += long(e);
  for (const auto& [p, e] : factor_integer(q.den())) acc[p] -= long(e);
  std::vector<std::pair<Int, long>> out;
  for (const auto& [p, e] : acc)
    if (e != 0) out.emplace_back(p, e);
  return out;
}

std::string factorization_str(const std::vector<std::pair<Int, long>>& f) {
  if (f.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += " * ";
    s += f[i].first.get_str();
    if (f[i].second != 1) s += "^" + std::to_string(f[i].second);
  }
  return s;
}

}  // namespace bianchi
