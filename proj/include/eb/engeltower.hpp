#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eb/freeword.hpp"
#include "eb/genset.hpp"
#include "eb/triviality.hpp"

namespace eb {

// Word elements as a group oracle for free-word evaluation.
struct WordGroup {
  using Elem = Word;
  TreeSignature sig;
  int64_t base = 0;
  Word id() const { return empty_word(sig, base); }
  Word mul(const Word& a, const Word& b) const { return word_mul(a, b); }
  Word inv(const Word& a) const { return inverse(a); }
};

// How tower steps are tested for triviality: in the depth-d congruence
// quotient, or by the closure prover.
struct TrivMode {
  enum class Kind { Depth, Closure };
  Kind kind = Kind::Depth;
  int64_t depth = 3;
  int64_t budget = 4096;
  int64_t depth_cap = 64;
};

struct TowerResult {
  enum class Kind { Found, NotFoundWithin, BudgetExhausted };
  Kind kind = Kind::NotFoundWithin;
  int64_t index = -1;  // least n with [g,_n h] trivial in the mode
  std::vector<std::string> trace;
};

// Successive commutators [g,_n h], renormalized each step; without the
// renormalization word lengths double per step.
TowerResult engel_tower(const Word& g, const Word& h, int64_t limit, const TrivMode& mode);

// Section of the iterate w∘count(g, hs) at u, provided the iterate
// stabilizes level |u| (checked to that depth; NotStabilized otherwise).
Word stabilized_section(const FreeWord& w, const Word& g, const std::vector<Word>& hs, const Vertex& u,
                        int64_t iterate_count);

struct GrowthResult {
  bool found = true;
  int64_t value = 0;
  std::string witness_g, witness_h;
  int64_t pairs = 0;
};

// Max over ball pairs of the least k >= 1 with [g,_k h] trivial to depth d;
// 0 for a ball containing only the identity. Pairs beyond `limit` report
// found = false.
GrowthResult engel_growth(const TreeSignature& sig, int64_t depth, int64_t radius, int64_t limit, int64_t cap);

// Verifies [g,_{n+1} h] = [g,h]^((-2)^n) in the depth-d quotient; h must be
// an involution there.
bool involution_engel_check(const Word& g, const Word& h, int64_t n, int64_t depth);

}  // namespace eb
