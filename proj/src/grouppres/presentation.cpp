#include <cctype>
#include <cstdlib>
#include <sstream>

#include "brunnel/errors.hpp"
#include "brunnel/grouppres.hpp"

namespace brunnel {

Word free_reduce(const Word& w) {
  Word out;
  for (int a : w) {
    if (!out.empty() && out.back() == -a) {
      out.pop_back();
    } else {
      out.push_back(a);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& a : out) a = -a;
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X')) {
      throw SyntaxError("bad word token '" + tok + "' (expected x<k> or X<k>)");
    }
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i]))) throw SyntaxError("bad word token '" + tok + "'");
    }
    if (tok.size() > 7) throw SyntaxError("generator index too large in '" + tok + "'");
    int g = std::stoi(tok.substr(1));
    if (g < 1) throw SyntaxError("generator indices start at 1, got '" + tok + "'");
    w.push_back(tok[0] == 'x' ? g : -g);
  }
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += w[i] > 0 ? 'x' : 'X';
    s += std::to_string(std::abs(w[i]));
  }
  return s;
}

GroupPresentation::GroupPresentation(int generator_count, std::vector<Word> relators) : generators_(generator_count) {
  if (generator_count < 0) throw ValidationError("negative generator count");
  for (auto& r : relators) {
    for (int a : r) {
      if (a == 0 || std::abs(a) > generator_count) {
        throw ValidationError("letter " + std::to_string(a) + " out of range for " + std::to_string(generator_count) +
                              " generators");
      }
    }
    Word w = free_reduce(r);
    if (!w.empty()) relators_.push_back(std::move(w));
  }
}

std::string GroupPresentation::to_string() const {
  std::string s = "<";
  for (int g = 1; g <= generators_; ++g) {
    if (g > 1) s += ", ";
    s += "x" + std::to_string(g);
  }
  s += " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (i) s += ", ";
    s += word_to_string(relators_[i]);
  }
  s += ">";
  return s;
}

}  // namespace brunnel
