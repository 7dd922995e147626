#pragma once

// Integer Laurent polynomials in one variable t, factor counting over Q,
// and the Alexander polynomial of a knot diagram.

#include <map>
#include <string>
#include <vector>

#include "brunnel/intpoly.hpp"

namespace brunnel {

class LinkDiagram;

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::map<int, Integer> terms);

  static LaurentPolynomial constant(const Integer& c);
  static LaurentPolynomial monomial(const Integer& c, int exponent);
  static LaurentPolynomial from_intpoly(const IntPoly& p, int shift = 0);
  // Accepts the text form produced by to_string, e.g. "t^2 - t + 1",
  // "-t^-1 + 3", "2*t^4". Whitespace is ignored.
  static LaurentPolynomial parse(const std::string& text);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Integer>& terms() const { return terms_; }
  Integer coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  // Lowest exponent 0 and positive leading coefficient.
  LaurentPolynomial normalized() const;
  bool is_normalized() const;
  // The ordinary polynomial t^{-min_exponent} * p.
  IntPoly to_intpoly() const;
  LaurentPolynomial substitute_inverse() const;
  Integer evaluate_at_one() const;
  bool is_unit() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a += -b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<int, Integer> terms_;
};

// Ring product, renormalized.
LaurentPolynomial multiply(const LaurentPolynomial& a, const LaurentPolynomial& b);

// True iff a = ±t^k b for some k.
bool equivalent_up_to_units(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Irreducible factors over Q of the normalized representative, with
// multiplicity. Units and integer content contribute nothing.
int factor_count(const LaurentPolynomial& p);

struct Factorization {
  Integer content;
  // Primitive irreducible factors with positive leading coefficient, sorted
  // by (degree, coefficients); repeated factors are listed repeatedly.
  std::vector<IntPoly> factors;
};

// Complete factorization of a nonzero polynomial over Z. The product of the
// factors times content equals p.
Factorization factor(const IntPoly& p);

// Square-free decomposition of a primitive polynomial: pairs (g, e) with
// p = prod g^e, each g square-free and pairwise coprime.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Factors of a square-free primitive polynomial with positive leading
// coefficient and nonzero constant term.
std::vector<IntPoly> factor_squarefree(const IntPoly& p);

// Determinant of a square matrix over Z[t] by fraction-free elimination.
// The parallel variant distributes row updates with OpenMP; the serial
// variant is the reference both are tested against.
using PolyMatrix = std::vector<std::vector<IntPoly>>;
IntPoly determinant(PolyMatrix m);
IntPoly determinant_serial(PolyMatrix m);

// Normalized Alexander polynomial of a knot diagram from the Wirtinger
// presentation and Fox calculus.
LaurentPolynomial alexander_of_knot(const LinkDiagram& d);

// The Alexander matrix (abelianized Fox Jacobian), rows = relators,
// columns = generators. Entries are Laurent polynomials shifted to be
// ordinary polynomials row by row.
PolyMatrix alexander_matrix(const LinkDiagram& d);

}  // namespace brunnel
