#include "doctest.h"

#include <random>

#include "brunnel/alexpoly.hpp"
#include "brunnel/catalog.hpp"
#include "brunnel/errors.hpp"
#include "brunnel/satellite.hpp"
#include "oracles.hpp"

using namespace brunnel;

namespace {

oracle::Poly to_oracle(const LaurentPolynomial& p) {
  const LaurentPolynomial n = p.normalized();
  oracle::Poly out;
  for (int e = 0; e <= n.max_exponent(); ++e) out.push_back(n.coeff(e).get_si());
  return out;
}

IntPoly from_oracle(const oracle::Poly& p) {
  std::vector<Integer> c;
  for (long long x : p) c.emplace_back(static_cast<long>(x));
  return IntPoly(c);
}

int divisor_count(int n) {
  int c = 0;
  for (int d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

}  // namespace

TEST_CASE("Laurent text round trip") {
  for (const std::string s : {"t^2 - t + 1", "2*t^2 - 3*t + 2", "-t^-1 + 3", "1", "t^4 - t^3 + t^2 - t + 1", "0"}) {
    CAPTURE(s);
    const LaurentPolynomial p = LaurentPolynomial::parse(s);
    CHECK(LaurentPolynomial::parse(p.to_string()) == p);
  }
  CHECK(LaurentPolynomial::parse("t^2-t+1").to_string() == "t^2 - t + 1");
  CHECK(LaurentPolynomial::parse("t - t") .is_zero());
  CHECK_THROWS_AS(LaurentPolynomial::parse("t^"), SyntaxError);
  CHECK_THROWS_AS(LaurentPolynomial::parse("t^2 + y"), SyntaxError);
}

TEST_CASE("Laurent arithmetic and units") {
  const LaurentPolynomial a = LaurentPolynomial::parse("t^2 - t + 1");
  const LaurentPolynomial b = LaurentPolynomial::parse("-t^-2 + t^-3 - t^-4");
  CHECK(equivalent_up_to_units(a, b));
  CHECK(b.normalized() == a);
  CHECK(a.substitute_inverse().normalized() == a);
  CHECK(a.evaluate_at_one() == 1);
  CHECK(LaurentPolynomial::parse("-t^5").is_unit());
  CHECK_FALSE(LaurentPolynomial::parse("2").is_unit());
  CHECK(multiply(a, a) == LaurentPolynomial::parse("t^4 - 2*t^3 + 3*t^2 - 2*t + 1"));
}

TEST_CASE("factor counts") {
  CHECK(factor_count(LaurentPolynomial::parse("1")) == 0);
  CHECK(factor_count(LaurentPolynomial::parse("t^2 - t + 1")) == 1);
  CHECK(factor_count(LaurentPolynomial::parse("t^4 - 2*t^3 + 3*t^2 - 2*t + 1")) == 2);
  CHECK(factor_count(LaurentPolynomial::parse("t^4 + 1")) == 1);
  CHECK(factor_count(LaurentPolynomial::parse("6*t^2 - 6")) == 2);
  CHECK(factor_count(LaurentPolynomial::parse("-t^-3")) == 0);
  CHECK_THROWS_AS(factor_count(LaurentPolynomial()), PreconditionError);
}

TEST_CASE("t^n - 1 has one factor per divisor of n") {
  for (int n = 1; n <= 30; ++n) {
    CAPTURE(n);
    const LaurentPolynomial p = LaurentPolynomial::monomial(1, n) - LaurentPolynomial::constant(1);
    CHECK(factor_count(p) == divisor_count(n));
  }
}

TEST_CASE("factorization multiplies back") {
  const std::vector<oracle::Poly> irreducible = {{1, -1, 1}, {1, -3, 1}, {2, -3, 2}, {1, -1, 1, -1, 1}, {1, 1}, {-2, 0, 0, 1}, {1, 0, 1}};
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    oracle::Poly prod = {1};
    for (int i = 0; i < k; ++i) prod = oracle::mul(prod, irreducible[rng() % irreducible.size()]);
    const IntPoly p = from_oracle(prod);
    const Factorization f = factor(p);
    CHECK(static_cast<int>(f.factors.size()) == k);
    IntPoly back = IntPoly::constant(f.content);
    for (const auto& g : f.factors) back = back * g;
    CHECK(back == p);
    CHECK(factor_count(LaurentPolynomial::from_intpoly(p)) == k);
  }
}

TEST_CASE("determinant agrees with Laplace expansion, parallel agrees with serial") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    PolyMatrix m(static_cast<std::size_t>(n), std::vector<IntPoly>(static_cast<std::size_t>(n)));
    std::vector<std::vector<oracle::Poly>> o(static_cast<std::size_t>(n), std::vector<oracle::Poly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        oracle::Poly p;
        const int deg = static_cast<int>(rng() % 3);
        for (int d = 0; d <= deg; ++d) p.push_back(static_cast<long long>(rng() % 7) - 3);
        p = oracle::trim(p);
        o[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p;
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = from_oracle(p);
      }
    }
    const IntPoly d = determinant(m);
    CHECK(d == from_oracle(oracle::laplace_det(o)));
    CHECK(d == determinant_serial(m));
  }
  CHECK(determinant(PolyMatrix{}) == IntPoly::constant(1));
}

TEST_CASE("Fox calculus agrees with the Seifert-matrix oracle") {
  for (const auto& [name, v] : oracle::seifert_table()) {
    CAPTURE(name);
    const LaurentPolynomial fox = alexander_of_knot(catalog_diagram(name));
    CHECK(to_oracle(fox) == oracle::seifert_alexander(v));
  }
}

TEST_CASE("trefoil Seifert oracle") {
  CHECK(oracle::seifert_alexander({{-1, 1}, {0, -1}}) == oracle::Poly{1, -1, 1});
}

TEST_CASE("Alexander polynomials are palindromic and evaluate to 1 at t = 1") {
  for (const auto& name : {"unknot", "trefoil", "left-trefoil", "figure-eight", "5_1", "5_2", "granny", "square", "wh+trefoil", "trefoil#3", "slice-k"}) {
    CAPTURE(name);
    const LaurentPolynomial p = alexander_of_knot(catalog_diagram(name));
    CHECK(p.is_normalized());
    CHECK(p.substitute_inverse().normalized() == p);
    CHECK(abs(p.evaluate_at_one()) == 1);
  }
}

TEST_CASE("mirror and simplify do not change the Alexander polynomial") {
  for (const auto& name : {"trefoil", "5_2", "granny"}) {
    const LinkDiagram d = catalog_diagram(name);
    CHECK(alexander_of_knot(d.mirror()) == alexander_of_knot(d));
    CHECK(alexander_of_knot(simplify(whitehead_double(d, 0, 1))) == LaurentPolynomial::constant(1));
  }
}

TEST_CASE("connected sums of trefoils") {
  const LaurentPolynomial t = LaurentPolynomial::parse("t^2 - t + 1");
  LaurentPolynomial expect = LaurentPolynomial::constant(1);
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    const LaurentPolynomial p = alexander_of_knot(catalog_diagram("trefoil#" + std::to_string(n)));
    CHECK(p == expect);
    CHECK(factor_count(p) == n);
    expect = multiply(expect, t);
  }
}

TEST_CASE("Alexander polynomial needs a knot") {
  CHECK_THROWS_AS(alexander_of_knot(catalog_diagram("hopf")), UnsupportedError);
}
