#pragma once

// Finite group presentations: Wirtinger presentations, Tietze
// simplification, abelianization.

#include <string>
#include <vector>

#include "brunnel/intpoly.hpp"

namespace brunnel {

class LinkDiagram;

// Letters are +-(g+1) for generator g; negative means inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
// Free reduction followed by cancelling inverse pairs at the two ends.
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);

// Word syntax: space separated tokens `x1 X1 x2`, uppercase is the
// inverse. The empty string is the empty word.
Word parse_word(const std::string& text);
std::string word_to_string(const Word& w);

class GroupPresentation {
 public:
  GroupPresentation() = default;
  // Checks letter ranges and stores freely reduced relators; empty
  // relators are kept out.
  GroupPresentation(int generator_count, std::vector<Word> relators);

  int generator_count() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  // `<x1, x2 | x1 X2, ...>`
  std::string to_string() const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

 private:
  int generators_ = 0;
  std::vector<Word> relators_;
};

// One generator per arc (arcs numbered along the components starting after
// each under visit), one relator per crossing.
GroupPresentation wirtinger(const LinkDiagram& d);

// Arc index of the edge entering each visit, per component.
std::vector<std::vector<int>> wirtinger_arcs(const LinkDiagram& d, int* arc_count = nullptr);

struct TietzeResult {
  GroupPresentation presentation;
  int moves = 0;
  // True when the budget ran out before no move applied.
  bool exhausted = false;
};

// Deterministic greedy simplification. Moves: cyclic reduction, removal of
// trivial or repeated relators, elimination of a generator that occurs
// exactly once in some relator (shortest relator first), and replacing a
// long piece of one relator by the shorter rest of another.
TietzeResult tietze_simplify(const GroupPresentation& g, int budget);

struct Abelianization {
  int free_rank = 0;
  // Invariant factors greater than 1, each dividing the next.
  std::vector<Integer> torsion;

  bool is_infinite_cyclic() const { return free_rank == 1 && torsion.empty(); }
  // "Z^2 + Z/2"-style text; "0" for the trivial group.
  std::string to_string() const;
};

Abelianization abelianization(const GroupPresentation& g);

// Invariant factors of an integer matrix (nonzero diagonal of the Smith
// normal form).
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m);

// True iff simplification reaches one generator and no relators within the
// budget and the abelianization is Z. False means "not certified".
bool is_infinite_cyclic_certificate(const GroupPresentation& g, int budget);

}  // namespace brunnel
