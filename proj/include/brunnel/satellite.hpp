#pragma once

// Bing and Whitehead doubling of one component of a link diagram.

#include "brunnel/diagram.hpp"

namespace brunnel {

enum class PatternKind { Bing, WhiteheadPositive, WhiteheadNegative };

struct DoublingPattern {
  PatternKind kind = PatternKind::Bing;
  int framing = 0;
};

// Replaces component c by its Bing double. The companion is first given
// |w| curls of sign -sign(w), w its self-writhe, so the blackboard 2-cable
// is 0-framed. The new components sit at indices c and c+1 (the one
// starting along the left cable strand first); later components shift by
// one. Clasps sit at edge 0 (positive) and at the middle of the component
// (negative).
LinkDiagram bing_double(const LinkDiagram& d, int c);

// n-fold Bing doubling of component 0.
LinkDiagram iterated_bing_double(const LinkDiagram& d, int n);

// Replaces component c by its untwisted Whitehead double with a clasp of
// the given sign (+1 or -1).
LinkDiagram whitehead_double(const LinkDiagram& d, int c, int sign);

LinkDiagram apply_pattern(const LinkDiagram& d, int c, const DoublingPattern& p);

// Expected crossing counts of the outputs, as functions of the input.
int bing_double_crossings(const LinkDiagram& d, int c);
int whitehead_double_crossings(const LinkDiagram& d, int c);

}  // namespace brunnel
