#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>

#include "brunnel/errors.hpp"
#include "brunnel/grouppres.hpp"

namespace brunnel {

namespace {

struct State {
  int gens = 0;
  std::vector<Word> rels;
};

Word rotate(const Word& w, std::size_t k) {
  Word out(w.begin() + static_cast<long>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(k));
  return out;
}

bool cyclically_equal(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (rotate(a, k) == b) return true;
  }
  return a.empty();
}

std::vector<std::size_t> by_length(const std::vector<Word>& rels) {
  std::vector<std::size_t> order(rels.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rels[a].size() < rels[b].size(); });
  return order;
}

bool remove_trivial(State& s) {
  for (std::size_t i = 0; i < s.rels.size(); ++i) {
    if (s.rels[i].empty()) {
      s.rels.erase(s.rels.begin() + static_cast<long>(i));
      return true;
    }
  }
  return false;
}

bool remove_repeated(State& s) {
  for (std::size_t i = 0; i < s.rels.size(); ++i) {
    Word inv = inverse(s.rels[i]);
    for (std::size_t j = i + 1; j < s.rels.size(); ++j) {
      if (cyclically_equal(s.rels[i], s.rels[j]) || cyclically_equal(inv, s.rels[j])) {
        s.rels.erase(s.rels.begin() + static_cast<long>(j));
        return true;
      }
    }
  }
  return false;
}

bool eliminate(State& s) {
  for (std::size_t i : by_length(s.rels)) {
    const Word& r = s.rels[i];
    std::vector<int> count(static_cast<std::size_t>(s.gens) + 1, 0);
    for (int a : r) ++count[static_cast<std::size_t>(std::abs(a))];
    for (std::size_t k = 0; k < r.size(); ++k) {
      int g = std::abs(r[k]);
      if (count[static_cast<std::size_t>(g)] != 1) continue;
      // r rotated to g^e w, so g = w^-1 (e = 1) or g = w (e = -1).
      Word rot = rotate(r, k);
      Word rest(rot.begin() + 1, rot.end());
      Word image = rot[0] > 0 ? inverse(rest) : rest;
      Word image_inv = inverse(image);
      std::vector<Word> next;
      for (std::size_t j = 0; j < s.rels.size(); ++j) {
        if (j == i) continue;
        Word w;
        for (int a : s.rels[j]) {
          if (std::abs(a) == g) {
            const Word& sub = a > 0 ? image : image_inv;
            w.insert(w.end(), sub.begin(), sub.end());
          } else {
            w.push_back(a);
          }
        }
        for (int& a : w) {
          if (std::abs(a) > g) a += a > 0 ? -1 : 1;
        }
        next.push_back(cyclic_reduce(w));
      }
      s.rels = std::move(next);
      --s.gens;
      return true;
    }
  }
  return false;
}

std::optional<std::size_t> find(const Word& hay, const Word& needle) {
  if (needle.size() > hay.size()) return std::nullopt;
  auto it = std::search(hay.begin(), hay.end(), needle.begin(), needle.end());
  if (it == hay.end()) return std::nullopt;
  return static_cast<std::size_t>(it - hay.begin());
}

bool substitute(State& s) {
  for (std::size_t i : by_length(s.rels)) {
    const Word& r = s.rels[i];
    const std::size_t len = r.size();
    for (const Word& base : {r, inverse(r)}) {
      for (std::size_t k = 0; k < len; ++k) {
        Word rot = rotate(base, k);
        for (std::size_t p = len; p * 2 > len; --p) {
          Word piece(rot.begin(), rot.begin() + static_cast<long>(p));
          Word rest(rot.begin() + static_cast<long>(p), rot.end());
          for (std::size_t j = 0; j < s.rels.size(); ++j) {
            if (j == i) continue;
            auto at = find(s.rels[j], piece);
            if (!at) continue;
            Word w(s.rels[j].begin(), s.rels[j].begin() + static_cast<long>(*at));
            Word repl = inverse(rest);
            w.insert(w.end(), repl.begin(), repl.end());
            w.insert(w.end(), s.rels[j].begin() + static_cast<long>(*at + p), s.rels[j].end());
            s.rels[j] = cyclic_reduce(w);
            return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

TietzeResult tietze_simplify(const GroupPresentation& g, int budget) {
  if (budget < 1) throw PreconditionError("Tietze budget must be positive, got " + std::to_string(budget));
  State s{g.generator_count(), {}};
  for (const auto& r : g.relators()) s.rels.push_back(cyclic_reduce(r));
  TietzeResult out;
  using Move = bool (*)(State&);
  const Move moves[] = {remove_trivial, remove_repeated, eliminate, substitute};
  while (true) {
    State trial = s;
    bool applied = false;
    for (Move m : moves) {
      if (m(trial)) {
        applied = true;
        break;
      }
    }
    if (!applied) break;
    if (out.moves == budget) {
      out.exhausted = true;
      break;
    }
    s = std::move(trial);
    ++out.moves;
  }
  out.presentation = GroupPresentation(s.gens, s.rels);
  return out;
}

bool is_infinite_cyclic_certificate(const GroupPresentation& g, int budget) {
  TietzeResult r = tietze_simplify(g, budget);
  if (r.presentation.generator_count() != 1 || !r.presentation.relators().empty()) return false;
  return abelianization(g).is_infinite_cyclic();
}

}  // namespace brunnel
