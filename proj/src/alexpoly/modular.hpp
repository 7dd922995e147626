#pragma once

// Polynomials over a small prime field F_p, coefficients low to high.

#include <cstdint>
#include <vector>

#include "brunnel/intpoly.hpp"

namespace brunnel::modp {

using Poly = std::vector<std::int64_t>;

struct Field {
  std::int64_t p;

  std::int64_t reduce(std::int64_t a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p; }
  std::int64_t inv(std::int64_t a) const;
};

void trim(Poly& a);
int degree(const Poly& a);
Poly reduce(const Field& f, const IntPoly& a);
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
Poly scale(const Field& f, const Poly& a, std::int64_t k);
// Quotient and remainder; b must be nonzero.
void divmod(const Field& f, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly rem(const Field& f, const Poly& a, const Poly& b);
Poly monic(const Field& f, const Poly& a);
Poly gcd(const Field& f, Poly a, Poly b);
// s*a + t*b = gcd(a,b), gcd returned monic.
Poly ext_gcd(const Field& f, const Poly& a, const Poly& b, Poly& s, Poly& t);
Poly derivative(const Field& f, const Poly& a);

// Monic irreducible factors of a monic square-free polynomial, by
// Berlekamp's algorithm. Output sorted by (degree, coefficients).
std::vector<Poly> berlekamp(const Field& f, const Poly& a);

}  // namespace brunnel::modp
