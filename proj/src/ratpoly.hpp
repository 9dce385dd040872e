#pragma once

// Dense univariate polynomials over Q, lowest degree first. Used for the
// cyclotomic reduction and nothing else; not part of the public surface.

#include <gmpxx.h>

#include <vector>

namespace qplane::detail {

using RatPoly = std::vector<mpq_class>;

void trim(RatPoly& p);
int degree(const RatPoly& p);  // -1 for the zero polynomial

RatPoly add(const RatPoly& a, const RatPoly& b);
RatPoly sub(const RatPoly& a, const RatPoly& b);
RatPoly mul(const RatPoly& a, const RatPoly& b);

// a = quot * b + rem with deg rem < deg b. b must be nonzero.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& quot, RatPoly& rem);
RatPoly rem(const RatPoly& a, const RatPoly& b);

// Inverse of a modulo m; a and m must be coprime.
RatPoly inverse_mod(const RatPoly& a, const RatPoly& m);

// Integer coefficients of the n-th cyclotomic polynomial.
RatPoly cyclotomic_polynomial(int n);

int euler_phi(int n);

}  // namespace qplane::detail
