#include <algorithm>
#include <cstdlib>

#include "brunnel/alexpoly.hpp"
#include "brunnel/diagram.hpp"
#include "brunnel/errors.hpp"
#include "brunnel/grouppres.hpp"

namespace brunnel {

namespace {

// Fox derivatives of w with every generator sent to t.
std::vector<LaurentPolynomial> fox_row(const Word& w, int generators) {
  std::vector<LaurentPolynomial> row(static_cast<std::size_t>(generators));
  int prefix = 0;
  for (int a : w) {
    auto& cell = row[static_cast<std::size_t>(std::abs(a) - 1)];
    if (a > 0) {
      cell += LaurentPolynomial::monomial(1, prefix);
      ++prefix;
    } else {
      --prefix;
      cell += LaurentPolynomial::monomial(-1, prefix);
    }
  }
  return row;
}

// t^-low * p as an ordinary polynomial, low <= min exponent of p.
IntPoly shifted(const LaurentPolynomial& p, int low) {
  if (p.is_zero()) return IntPoly();
  std::vector<Integer> c(static_cast<std::size_t>(p.max_exponent() - low + 1), 0);
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e - low)] = v;
  return IntPoly(std::move(c));
}

PolyMatrix shift_rows(const std::vector<std::vector<LaurentPolynomial>>& rows) {
  PolyMatrix m;
  for (const auto& row : rows) {
    int low = 0;
    bool any = false;
    for (const auto& p : row) {
      if (p.is_zero()) continue;
      low = any ? std::min(low, p.min_exponent()) : p.min_exponent();
      any = true;
    }
    std::vector<IntPoly> out;
    for (const auto& p : row) out.push_back(shifted(p, low));
    m.push_back(std::move(out));
  }
  return m;
}

}  // namespace

PolyMatrix alexander_matrix(const LinkDiagram& d) {
  GroupPresentation g = wirtinger(d);
  std::vector<std::vector<LaurentPolynomial>> rows;
  for (const auto& r : g.relators()) rows.push_back(fox_row(r, g.generator_count()));
  return shift_rows(rows);
}

LaurentPolynomial alexander_of_knot(const LinkDiagram& d) {
  if (d.component_count() != 1) {
    throw UnsupportedError("Alexander polynomial is computed for knots only (got " +
                           std::to_string(d.component_count()) + " components)");
  }
  PolyMatrix m = alexander_matrix(d);
  const int gens = wirtinger(d).generator_count();
  const std::size_t size = static_cast<std::size_t>(gens - 1);
  if (m.size() < size) throw Error("Wirtinger presentation lost more than one relator");
  m.resize(size);
  for (auto& row : m) row.resize(size);
  IntPoly det = determinant(std::move(m));
  if (det.is_zero()) throw Error("Alexander matrix minor vanished on a knot diagram");
  return LaurentPolynomial::from_intpoly(det).normalized();
}

}  // namespace brunnel
