#pragma once

#include <cstdint>
#include <string>

#include "eb/section.hpp"
#include "eb/word.hpp"

namespace eb {

// Outcome of the closure prover. A RefutedAt witness genuinely moves under
// the word (re-checkable via act). TrivialToDepth means no refutation was
// found before the depth cap; Unknown means the closure budget ran out.
struct TrivialityVerdict {
  enum class Kind { Proven, RefutedAt, TrivialToDepth, Unknown };
  Kind kind = Kind::Unknown;
  Vertex witness;
  int64_t depth = 0;
  int64_t explored = 0;

  bool proven() const { return kind == Kind::Proven; }
};

std::string verdict_name(TrivialityVerdict::Kind kind);

// Searches for a closed set of section words that all fix their first
// layer and whose far-class sections vanish identically. Over regular
// signatures words at different levels are identified by letter pattern, so
// self-similar elements close up; over growing signatures the prover may
// legitimately stop at the depth cap.
TrivialityVerdict prove_trivial(const Word& w, int64_t budget = 4096, int64_t depth_cap = 64);

// True iff the word fixes every vertex up to depth d, decided through the
// active-letter recursion (the alphabets are never enumerated).
bool is_trivial_to_depth(const Word& w, int64_t d);

bool equal_to_depth(const Word& g, const Word& h, int64_t d);

}  // namespace eb
