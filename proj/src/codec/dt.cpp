#include <cctype>
#include <cstdlib>
#include <sstream>

#include "brunnel/codec.hpp"
#include "brunnel/errors.hpp"

namespace brunnel {

DtCode make_dt(std::vector<std::vector<int>> components) {
  std::size_t total = 0;
  for (const auto& comp : components) {
    if (comp.empty()) throw ValidationError("DT component with no entries");
    total += comp.size();
  }
  std::vector<char> seen(total + 1, 0);
  for (const auto& comp : components) {
    for (int e : comp) {
      if (e == 0) throw ValidationError("DT entry 0 is not allowed");
      if (e % 2 != 0) throw ValidationError("DT entry " + std::to_string(e) + " is odd");
      std::size_t half = static_cast<std::size_t>(std::abs(e) / 2);
      if (half > total) {
        throw ValidationError("DT entry " + std::to_string(e) + " exceeds 2*" + std::to_string(total));
      }
      if (seen[half]) {
        throw ValidationError("DT entry " + std::to_string(e) + " repeats absolute value " + std::to_string(std::abs(e)));
      }
      seen[half] = 1;
    }
  }
  DtCode code;
  code.components = std::move(components);
  code.crossing_count = static_cast<int>(total);
  return code;
}

namespace {

class DtParser {
 public:
  explicit DtParser(const std::string& s) : s_(s) {}

  DtCode run() {
    skip();
    if (s_.compare(pos_, 3, "DT:") != 0) fail("expected 'DT:'");
    pos_ += 3;
    expect('[');
    std::vector<std::vector<int>> comps;
    while (true) {
      expect('(');
      std::vector<int> comp;
      while (true) {
        comp.push_back(integer());
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
      comps.push_back(std::move(comp));
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      break;
    }
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return make_dt(std::move(comps));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("DT: " + what + " at position " + std::to_string(pos_));
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    if (pos_ - digits > 8) fail("integer too large");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

DtCode parse_dt(const std::string& text) { return DtParser(text).run(); }

std::string serialize_dt(const DtCode& code) {
  std::ostringstream os;
  os << "DT:[";
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    if (c) os << ",";
    os << "(";
    for (std::size_t i = 0; i < code.components[c].size(); ++i) {
      if (i) os << ",";
      os << code.components[c][i];
    }
    os << ")";
  }
  os << "]";
  return os.str();
}

DtCode diagram_to_dt(const LinkDiagram& d) {
  if (d.component_count() != 1) throw UnsupportedError("DT export is implemented for knots only");
  if (d.crossing_count() == 0) throw PreconditionError("DT code of a crossingless diagram is empty");
  const auto& comp = d.component(0);
  std::vector<int> entries(static_cast<std::size_t>(d.crossing_count()), 0);
  for (int x = 0; x < d.crossing_count(); ++x) {
    int a = d.over_visit(x).index;
    int b = d.under_visit(x).index;
    // Labels are index + 1, so the odd label sits at the even index.
    if ((a % 2) == (b % 2)) throw ValidationError("crossing visits have equal label parity");
    int odd_index = a % 2 == 0 ? a : b;
    int even_label = (a % 2 == 0 ? b : a) + 1;
    bool odd_over = comp[static_cast<std::size_t>(odd_index)].over;
    entries[static_cast<std::size_t>(odd_index / 2)] = odd_over ? even_label : -even_label;
  }
  return make_dt({entries});
}

std::string export_verification_script(const DtCode& code, const std::string& label) {
  std::string name;
  for (char ch : label) name.push_back(std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_');
  if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0]))) name.insert(name.begin(), '_');
  std::ostringstream os;
  os << "import snappy\n";
  os << name << " = snappy.Manifold('" << serialize_dt(code) << "')\n";
  os << name << ".solution_type()\n";
  os << name << ".verify_hyperbolicity()\n";
  os << "R = " << name << ".canonical_retriangulation(verified = True)\n";
  os << "len(R.isomorphisms_to(R))\n";
  return os.str();
}

}  // namespace brunnel
