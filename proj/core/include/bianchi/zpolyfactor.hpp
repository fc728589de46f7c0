#pragma once

#include <utility>
#include <vector>

#include "bianchi/poly.hpp"
#include "bianchi/rat.hpp"

namespace bianchi {

// Integer polynomial, coefficient of x^i at index i. No trailing zeros.
using ZPoly = std::vector<Int>;

int zp_degree(const ZPoly& f);
ZPoly zp_trim(ZPoly f);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_primitive_part(const ZPoly& f, Int* content_out = nullptr);
Poly<Rat> zp_to_q(const ZPoly& f);
ZPoly q_to_zp_primitive(const Poly<Rat>& f, Rat* scale_out = nullptr);

struct ZFactorization {
  Int content;  // signed integer content; product of content * factors^mult = input
  std::vector<std::pair<ZPoly, unsigned>> factors;  // primitive, irreducible, sorted
};

// Full factorization over the integers. Squarefree decomposition (Yun), then
// factorization modulo a good prime, Hensel lifting to the Landau-Mignotte
// bound, and subset recombination. Degree is capped at 16.
ZFactorization factor_poly_z(const ZPoly& f);

bool is_irreducible_z(const ZPoly& f);

// Monic irreducible factors with multiplicity of f mod p (f need not be monic;
// the unit leading coefficient is discarded). Deterministic output order.
std::vector<std::pair<ZPoly, unsigned>> factor_mod_p(const ZPoly& f, const Int& p);

bool is_irreducible_mod_p(const ZPoly& f, const Int& p);

}  // namespace bianchi
