#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <cstdlib>
#include <set>
#include <sstream>

#include "brunnel/diagram.hpp"
#include "brunnel/errors.hpp"

namespace brunnel {

namespace {

struct PdItems {
  std::vector<std::array<long, 4>> crossings;
  std::vector<long> loops;
};

class PdParser {
 public:
  explicit PdParser(const std::string& text) : s_(text) {}

  PdItems run() {
    skip();
    expect_word("PD");
    expect('[');
    PdItems out;
    skip();
    if (peek() == ']') {
      get();
      finish();
      return out;
    }
    while (true) {
      skip();
      if (peek() == 'X') {
        get();
        char close = open();
        std::array<long, 4> t{};
        for (int i = 0; i < 4; ++i) {
          if (i > 0) expect(',');
          t[static_cast<std::size_t>(i)] = integer();
        }
        expect(close);
        out.crossings.push_back(t);
      } else if (peek() == 'L') {
        expect_word("Loop");
        char close = open();
        out.loops.push_back(integer());
        expect(close);
      } else {
        fail("expected X(...) or Loop(...)");
      }
      skip();
      if (peek() == ',') {
        get();
        continue;
      }
      expect(']');
      break;
    }
    finish();
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void skip() {
    while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("PD: " + what + " at position " + std::to_string(pos_));
  }
  void expect(char c) {
    skip();
    if (get() != c) fail(std::string("expected '") + c + "'");
  }
  void expect_word(const std::string& w) {
    if (s_.compare(pos_, w.size(), w) != 0) fail("expected '" + w + "'");
    pos_ += w.size();
  }
  char open() {
    skip();
    char c = get();
    if (c == '(') return ')';
    if (c == '[') return ']';
    fail("expected '(' or '['");
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) fail("expected integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stol(s_.substr(start, pos_ - start));
  }
  void finish() {
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

enum Dir : signed char { kUnknown = 0, kIn = 1, kOut = -1 };

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
  PdItems items = PdParser(text).run();
  const std::size_t nx = items.crossings.size();

  // Ends of every label: (crossing, slot).
  std::map<long, std::vector<std::pair<int, int>>> ends;
  for (std::size_t x = 0; x < nx; ++x) {
    for (int s = 0; s < 4; ++s) {
      long l = items.crossings[x][static_cast<std::size_t>(s)];
      if (l <= 0) throw ValidationError("PD label " + std::to_string(l) + " is not positive");
      ends[l].emplace_back(static_cast<int>(x), s);
    }
  }
  for (long l : items.loops) {
    if (l <= 0) throw ValidationError("PD label " + std::to_string(l) + " is not positive");
    if (ends.count(l)) throw ValidationError("Loop label " + std::to_string(l) + " also used by a crossing");
    ends[l];
  }
  if (std::set<long>(items.loops.begin(), items.loops.end()).size() != items.loops.size()) {
    throw ValidationError("repeated Loop label");
  }
  for (const auto& [l, e] : ends) {
    bool loop = e.empty();
    if (!loop && e.size() != 2) {
      throw ValidationError("PD label " + std::to_string(l) + " appears " + std::to_string(e.size()) + " times");
    }
  }

  std::vector<std::array<Dir, 4>> dir(nx, {kUnknown, kUnknown, kUnknown, kUnknown});
  for (auto& d : dir) {
    d[0] = kIn;
    d[2] = kOut;
  }
  auto label_at = [&](int x, int s) { return items.crossings[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)]; };
  auto propagate = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& [l, e] : ends) {
        if (e.size() != 2) continue;
        auto& a = dir[static_cast<std::size_t>(e[0].first)][static_cast<std::size_t>(e[0].second)];
        auto& b = dir[static_cast<std::size_t>(e[1].first)][static_cast<std::size_t>(e[1].second)];
        if (a != kUnknown && b != kUnknown && a == b) {
          throw ValidationError("PD label " + std::to_string(l) + " is inconsistently oriented");
        }
        if (a != kUnknown && b == kUnknown) {
          b = static_cast<Dir>(-a);
          changed = true;
        } else if (b != kUnknown && a == kUnknown) {
          a = static_cast<Dir>(-b);
          changed = true;
        }
      }
      for (auto& d : dir) {
        if (d[1] != kUnknown && d[3] == kUnknown) {
          d[3] = static_cast<Dir>(-d[1]);
          changed = true;
        } else if (d[3] != kUnknown && d[1] == kUnknown) {
          d[1] = static_cast<Dir>(-d[3]);
          changed = true;
        } else if (d[1] != kUnknown && d[1] == d[3]) {
          throw ValidationError("PD over strand is inconsistently oriented");
        }
      }
    }
  };
  propagate();
  // Components that only pass over: consecutive labels give the direction.
  for (std::size_t x = 0; x < nx; ++x) {
    if (dir[x][1] != kUnknown) continue;
    long b = label_at(static_cast<int>(x), 1);
    long d = label_at(static_cast<int>(x), 3);
    bool b_in = std::labs(b - d) == 1 ? b < d : b > d;
    dir[x][1] = b_in ? kIn : kOut;
    propagate();
  }

  std::vector<int> signs(nx);
  for (std::size_t x = 0; x < nx; ++x) signs[x] = dir[x][1] == kOut ? 1 : -1;

  // Follow each label to its head and through the crossing.
  std::map<long, std::pair<int, int>> head;
  for (const auto& [l, e] : ends) {
    for (const auto& [x, s] : e) {
      if (dir[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)] == kIn) head[l] = {x, s};
    }
  }
  std::set<long> used;
  std::vector<std::vector<Visit>> comps;
  for (const auto& [l0, e0] : ends) {
    if (used.count(l0)) continue;
    std::vector<Visit> comp;
    used.insert(l0);
    if (!e0.empty()) {
      long l = l0;
      while (true) {
        auto [x, s] = head.at(l);
        comp.push_back(Visit{x, s % 2 == 1});
        long next = label_at(x, (s + 2) % 4);
        if (next == l0) break;
        if (!used.insert(next).second) throw ValidationError("PD strands do not form cycles");
        l = next;
      }
    }
    comps.push_back(std::move(comp));
  }
  LinkDiagram d(std::move(signs), std::move(comps));
  d.validate_planar();
  return d;
}

std::string to_pd(const LinkDiagram& d) {
  std::vector<long> base(static_cast<std::size_t>(d.component_count()));
  long next = 1;
  for (int c = 0; c < d.component_count(); ++c) {
    base[static_cast<std::size_t>(c)] = next;
    next += std::max<long>(1, static_cast<long>(d.component(c).size()));
  }
  auto label = [&](int c, int t) {
    long n = static_cast<long>(d.component(c).size());
    return base[static_cast<std::size_t>(c)] + ((t % n) + n) % n;
  };
  std::ostringstream os;
  os << "PD[";
  bool first = true;
  for (int x = 0; x < d.crossing_count(); ++x) {
    VisitRef u = d.under_visit(x);
    VisitRef o = d.over_visit(x);
    long ui = label(u.component, u.index), uo = label(u.component, u.index + 1);
    long oi = label(o.component, o.index), oo = label(o.component, o.index + 1);
    if (!first) os << ", ";
    first = false;
    if (d.sign(x) > 0) {
      os << "X(" << ui << "," << oo << "," << uo << "," << oi << ")";
    } else {
      os << "X(" << ui << "," << oi << "," << uo << "," << oo << ")";
    }
  }
  for (int c = 0; c < d.component_count(); ++c) {
    if (!d.component(c).empty()) continue;
    if (!first) os << ", ";
    first = false;
    os << "Loop(" << base[static_cast<std::size_t>(c)] << ")";
  }
  os << "]";
  return os.str();
}

}  // namespace brunnel
