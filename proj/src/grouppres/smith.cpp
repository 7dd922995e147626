#include <algorithm>
#include <cstdlib>

#include "brunnel/grouppres.hpp"

namespace brunnel {

std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      Integer q = m[i][t] / m[t][t];
      for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      Integer q = m[t][j] / m[t][t];
      for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // Divisibility: fold a row that the pivot does not divide into row t.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i) {
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          divides = false;
          break;
        }
      }
    }
    if (!divides) continue;
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

Abelianization abelianization(const GroupPresentation& g) {
  const int n = g.generator_count();
  std::vector<std::vector<Integer>> m;
  for (const auto& r : g.relators()) {
    std::vector<Integer> row(static_cast<std::size_t>(n), 0);
    for (int a : r) row[static_cast<std::size_t>(std::abs(a) - 1)] += a > 0 ? 1 : -1;
    m.push_back(std::move(row));
  }
  Abelianization out;
  std::vector<Integer> d = smith_diagonal(std::move(m));
  out.free_rank = n - static_cast<int>(d.size());
  for (const auto& x : d) {
    if (x != 1) out.torsion.push_back(x);
  }
  return out;
}

std::string Abelianization::to_string() const {
  std::string s;
  if (free_rank > 0) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& x : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + x.get_str();
  }
  return s.empty() ? "0" : s;
}

}  // namespace brunnel
