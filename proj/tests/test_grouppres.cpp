#include "doctest.h"

#include <random>

#include "brunnel/catalog.hpp"
#include "brunnel/errors.hpp"
#include "brunnel/grouppres.hpp"
#include "brunnel/satellite.hpp"

using namespace brunnel;

namespace {

GroupPresentation pres(int n, std::vector<std::string> rels) {
  std::vector<Word> w;
  for (const auto& r : rels) w.push_back(parse_word(r));
  return GroupPresentation(n, w);
}

// Product of the nonzero invariant factors from gcds of k x k minors over
// small integer matrices (determinantal divisors).
long long det_ll(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    total += (c % 2 == 0 ? 1 : -1) * m[0][c] * det_ll(minor);
  }
  return total;
}

long long gcd_ll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::vector<long long> determinantal_divisors(const std::vector<std::vector<long long>>& m) {
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  std::vector<long long> out;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    long long g = 0;
    std::vector<bool> rs(rows, false), cs(cols, false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        std::vector<std::vector<long long>> sub;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!rs[r]) continue;
          std::vector<long long> row;
          for (std::size_t c = 0; c < cols; ++c) {
            if (cs[c]) row.push_back(m[r][c]);
          }
          sub.push_back(row);
        }
        g = gcd_ll(g, det_ll(sub));
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    if (g == 0) break;
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("word syntax") {
  CHECK(parse_word("x1 X2 x10") == Word{1, -2, 10});
  CHECK(parse_word("") == Word{});
  CHECK(word_to_string(Word{1, -2, 10}) == "x1 X2 x10");
  CHECK_THROWS_AS(parse_word("y1"), SyntaxError);
  CHECK_THROWS_AS(parse_word("x0"), SyntaxError);
}

TEST_CASE("free and cyclic reduction") {
  CHECK(free_reduce(parse_word("x1 X1 x2 x3 X3 X2 x1")) == parse_word("x1"));
  CHECK(cyclic_reduce(parse_word("x2 x1 x3 X2")) == parse_word("x1 x3"));
  CHECK(inverse(parse_word("x1 X2")) == parse_word("x2 X1"));
  CHECK(free_reduce(parse_word("X1 x1 X2 X1 x2")) == parse_word("X2 X1 x2"));
}

TEST_CASE("presentation validation and printing") {
  CHECK_THROWS_AS(pres(1, {"x2"}), ValidationError);
  const GroupPresentation g = pres(2, {"x1 X1", "X1 x1 X2 X1 x2"});
  CHECK(g.relators().size() == 1);
  CHECK(g.to_string() == "<x1, x2 | X2 X1 x2>");
}

TEST_CASE("the two printed presentations are infinite cyclic") {
  for (const auto& r : {"X1 x1 X2 X1 x2", "x1 X1 X1 x1 x2 X1 X2"}) {
    CAPTURE(r);
    const GroupPresentation g = pres(2, {r});
    const TietzeResult t = tietze_simplify(g, 50);
    CHECK(t.presentation.generator_count() == 1);
    CHECK(t.presentation.relators().empty());
    CHECK_FALSE(t.exhausted);
    CHECK(abelianization(g).is_infinite_cyclic());
    CHECK(is_infinite_cyclic_certificate(g, 50));
  }
}

TEST_CASE("certificate is not issued for the trefoil group") {
  const GroupPresentation g = wirtinger(catalog_diagram("trefoil"));
  CHECK(g.generator_count() == 3);
  CHECK(g.relators().size() == 3);
  CHECK(abelianization(g).is_infinite_cyclic());
  CHECK_FALSE(is_infinite_cyclic_certificate(g, 50));
  const TietzeResult t = tietze_simplify(g, 50);
  CHECK(t.presentation.generator_count() == 2);
  CHECK(t.presentation.relators().size() == 1);
  CHECK(t.presentation.relators()[0].size() == 6);
}

TEST_CASE("unknot group is certified") {
  CHECK(is_infinite_cyclic_certificate(wirtinger(LinkDiagram::unknot()), 5));
  CHECK(is_infinite_cyclic_certificate(wirtinger(from_gauss_code({{1, -1}}, {1})), 5));
}

TEST_CASE("budget exhaustion") {
  const GroupPresentation g = wirtinger(catalog_diagram("5_2"));
  const TietzeResult t = tietze_simplify(g, 1);
  CHECK(t.moves == 1);
  CHECK(t.exhausted);
  CHECK_THROWS_AS(tietze_simplify(g, 0), PreconditionError);
}

TEST_CASE("abelianizations") {
  CHECK(abelianization(wirtinger(catalog_diagram("hopf"))).to_string() == "Z^2");
  CHECK(abelianization(pres(1, {"x1 x1"})).to_string() == "Z/2");
  CHECK(abelianization(pres(2, {"x1 x1", "x2 x2 x2 x2"})).to_string() == "Z/2 + Z/4");
  CHECK(abelianization(pres(2, {"x1 x1 x2 x2 x2", "x1 x2 X1 X2"})).to_string() == "Z");
  CHECK(abelianization(pres(1, {"x1"})).to_string() == "0");
  CHECK(abelianization(wirtinger(iterated_bing_double(LinkDiagram::unknot(), 3))).to_string() == "Z^4");
}

TEST_CASE("Wirtinger presentation of links") {
  for (int n = 1; n <= 4; ++n) {
    const GroupPresentation g = wirtinger(LinkDiagram::unlink(n));
    CHECK(g.generator_count() == n);
    CHECK(abelianization(g).free_rank == n);
  }
  const LinkDiagram b = bing_double(catalog_diagram("trefoil"), 0);
  CHECK(abelianization(wirtinger(b)).to_string() == "Z^2");
}

TEST_CASE("Smith diagonal agrees with determinantal divisors") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    std::vector<std::vector<Integer>> z(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        m[r][c] = static_cast<long long>(rng() % 13) - 6;
        z[r][c] = static_cast<long>(m[r][c]);
      }
    }
    const std::vector<Integer> diag = smith_diagonal(z);
    const std::vector<long long> dd = determinantal_divisors(m);
    REQUIRE(diag.size() == dd.size());
    long long prod = 1;
    for (std::size_t k = 0; k < diag.size(); ++k) {
      prod *= diag[k].get_si();
      CHECK(prod == dd[k]);
      if (k > 0) CHECK(diag[k] % diag[k - 1] == 0);
    }
  }
}

TEST_CASE("Tietze simplification preserves the abelianization") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    std::vector<Word> rels;
    const int r = static_cast<int>(rng() % 3);
    for (int i = 0; i < r; ++i) {
      Word w;
      const int len = 1 + static_cast<int>(rng() % 6);
      for (int k = 0; k < len; ++k) {
        const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        w.push_back(rng() % 2 ? g : -g);
      }
      rels.push_back(w);
    }
    const GroupPresentation g(n, rels);
    const TietzeResult t = tietze_simplify(g, 50);
    CHECK(abelianization(t.presentation).to_string() == abelianization(g).to_string());
    if (is_infinite_cyclic_certificate(g, 50)) CHECK(abelianization(g).is_infinite_cyclic());
  }
}
