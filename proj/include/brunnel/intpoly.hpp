#pragma once

// Dense univariate polynomials over the integers, coefficients stored from
// the constant term upward. The zero polynomial has no coefficients.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace brunnel {

using Integer = mpz_class;

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, int degree);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(int i) const;
  const Integer& leading() const { return c_.back(); }

  Integer content() const;
  // Divides out the content and makes the leading coefficient positive.
  IntPoly primitive_part() const;
  IntPoly derivative() const;
  Integer evaluate(const Integer& x) const;
  // Largest absolute coefficient.
  Integer max_norm() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& k);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& k) { return a *= k; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Exact division: returns q with a = q*b, or throws if b does not divide a
// over the integers.
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);

// Division with remainder when the leading coefficient of b divides every
// intermediate leading coefficient; returns false otherwise.
bool try_divide(const IntPoly& a, const IntPoly& b, IntPoly& quotient);

// Greatest common divisor over Q[t], returned primitive with positive
// leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace brunnel
