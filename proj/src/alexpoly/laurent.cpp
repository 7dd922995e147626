#include <cctype>
#include <sstream>

#include "brunnel/alexpoly.hpp"
#include "brunnel/errors.hpp"

namespace brunnel {

LaurentPolynomial::LaurentPolynomial(std::map<int, Integer> terms) {
  for (auto& [e, c] : terms) {
    if (c != 0) terms_.emplace(e, std::move(c));
  }
}

LaurentPolynomial LaurentPolynomial::constant(const Integer& c) { return monomial(c, 0); }

LaurentPolynomial LaurentPolynomial::monomial(const Integer& c, int exponent) {
  LaurentPolynomial p;
  if (c != 0) p.terms_.emplace(exponent, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::from_intpoly(const IntPoly& p, int shift) {
  LaurentPolynomial r;
  for (int i = 0; i <= p.degree(); ++i) {
    const Integer& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c != 0) r.terms_.emplace(i + shift, c);
  }
  return r;
}

Integer LaurentPolynomial::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (terms_.empty()) return {};
  int lo = min_exponent();
  bool flip = terms_.rbegin()->second < 0;
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e - lo, flip ? Integer(-c) : c);
  return r;
}

bool LaurentPolynomial::is_normalized() const {
  return terms_.empty() || (terms_.begin()->first == 0 && terms_.rbegin()->second > 0);
}

IntPoly LaurentPolynomial::to_intpoly() const {
  if (terms_.empty()) return {};
  int lo = min_exponent();
  std::vector<Integer> v(static_cast<std::size_t>(max_exponent() - lo) + 1);
  for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e - lo)] = c;
  return IntPoly(std::move(v));
}

LaurentPolynomial LaurentPolynomial::substitute_inverse() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

Integer LaurentPolynomial::evaluate_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool LaurentPolynomial::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  int shift = a.min_exponent() + b.min_exponent();
  return LaurentPolynomial::from_intpoly(a.to_intpoly() * b.to_intpoly(), shift);
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0 || a != 1) os << a.get_str();
    if (e != 0 && a != 1) os << "*";
    if (e != 0) os << "t";
    if (e != 0 && e != 1) os << "^" << e;
  }
  return os.str();
}

namespace {

class TermParser {
 public:
  explicit TermParser(const std::string& text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }
  }

  LaurentPolynomial run() {
    if (s_.empty()) throw SyntaxError("empty polynomial");
    LaurentPolynomial acc;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      acc += term(sign);
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("polynomial: " + what + " at position " + std::to_string(pos_));
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(get());
    return d;
  }

  LaurentPolynomial term(int sign) {
    Integer c = 1;
    bool have_coeff = false;
    std::string d = digits();
    if (!d.empty()) {
      c = Integer(d);
      have_coeff = true;
      if (peek() == '*') {
        get();
        if (peek() != 't') fail("expected 't' after '*'");
      }
    }
    int e = 0;
    if (peek() == 't') {
      get();
      e = 1;
      if (peek() == '^') {
        get();
        int es = 1;
        if (peek() == '-') {
          get();
          es = -1;
        } else if (peek() == '+') {
          get();
        }
        std::string ed = digits();
        if (ed.empty()) fail("expected exponent");
        if (ed.size() > 6) fail("exponent too large");
        e = es * std::stoi(ed);
      }
    } else if (!have_coeff) {
      fail("expected coefficient or 't'");
    }
    return LaurentPolynomial::monomial(c * sign, e);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(const std::string& text) { return TermParser(text).run(); }

LaurentPolynomial multiply(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return (a * b).normalized();
}

bool equivalent_up_to_units(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.normalized() == b.normalized();
}

int factor_count(const LaurentPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("factor count of the zero polynomial");
  IntPoly q = p.normalized().to_intpoly();
  if (q.degree() == 0) return 0;
  return static_cast<int>(factor(q).factors.size());
}

}  // namespace brunnel
