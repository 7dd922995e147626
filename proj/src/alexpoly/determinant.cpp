#include "brunnel/alexpoly.hpp"
#include "brunnel/errors.hpp"

namespace brunnel {

namespace {

void check_square(const PolyMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw PreconditionError("determinant of a non-square matrix");
  }
}

// Moves a row with a nonzero entry in column k to position k. Returns false
// if the column is zero below the diagonal.
bool pivot(PolyMatrix& m, std::size_t k, int& sign) {
  if (!m[k][k].is_zero()) return true;
  for (std::size_t i = k + 1; i < m.size(); ++i) {
    if (!m[i][k].is_zero()) {
      std::swap(m[i], m[k]);
      sign = -sign;
      return true;
    }
  }
  return false;
}

void update_row(PolyMatrix& m, std::size_t k, std::size_t i, const IntPoly& prev) {
  const IntPoly& akk = m[k][k];
  const IntPoly aik = m[i][k];
  for (std::size_t j = k + 1; j < m.size(); ++j) {
    IntPoly v = m[i][j] * akk - aik * m[k][j];
    m[i][j] = exact_divide(v, prev);
  }
  m[i][k] = IntPoly();
}

}  // namespace

IntPoly determinant_serial(PolyMatrix m) {
  check_square(m);
  const std::size_t n = m.size();
  if (n == 0) return IntPoly{1};
  int sign = 1;
  IntPoly prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot(m, k, sign)) return {};
    for (std::size_t i = k + 1; i < n; ++i) update_row(m, k, i, prev);
    prev = m[k][k];
  }
  IntPoly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

IntPoly determinant(PolyMatrix m) {
  check_square(m);
  const std::size_t n = m.size();
  if (n == 0) return IntPoly{1};
  int sign = 1;
  IntPoly prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot(m, k, sign)) return {};
    const long first = static_cast<long>(k + 1);
    const long last = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = first; i < last; ++i) update_row(m, k, static_cast<std::size_t>(i), prev);
    prev = m[k][k];
  }
  IntPoly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

}  // namespace brunnel
