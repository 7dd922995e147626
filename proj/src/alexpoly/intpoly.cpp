#include "brunnel/intpoly.hpp"

#include <algorithm>
#include <sstream>

#include "brunnel/errors.hpp"

namespace brunnel {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int degree) {
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(out));
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer IntPoly::max_norm() const {
  Integer m = 0;
  for (const auto& v : c_) {
    Integer a = abs(v);
    if (a > m) m = a;
  }
  return m;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= k;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& v = c_[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    Integer a = abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0 && a != 1) os << "*";
    if (i >= 1) os << "t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

bool try_divide(const IntPoly& a, const IntPoly& b, IntPoly& quotient) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.is_zero()) {
    quotient = {};
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  const Integer& lb = b.leading();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    Integer& top = rem[static_cast<std::size_t>(i + b.degree())];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    Integer f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(i)] = f;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      mpz_submul(rem[static_cast<std::size_t>(i) + j].get_mpz_t(), f.get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  for (const auto& v : rem) {
    if (v != 0) return false;
  }
  quotient = IntPoly(std::move(q));
  return true;
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  IntPoly q;
  if (!try_divide(a, b, q)) throw Error("inexact polynomial division");
  return q;
}

namespace {

// Pseudo-remainder of a by b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = b.degree();
  const Integer& lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    Integer la = a.leading();
    int shift = a.degree() - db;
    a *= lb;
    a -= IntPoly::monomial(la, shift) * b;
  }
  return a;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

}  // namespace brunnel
