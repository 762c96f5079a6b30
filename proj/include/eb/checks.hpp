#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eb/genset.hpp"
#include "eb/triviality.hpp"

namespace eb {

struct Violation {
  std::string item;
  std::string detail;
};

struct CheckReport {
  std::string check;
  std::string sig;
  int64_t level = -1;
  int64_t t = -1;
  int64_t radius = -1;
  int64_t depth = -1;
  std::string mode;  // exhaustive | sampled
  uint64_t seed = 0;
  int64_t tested = 0;
  int64_t max_section_len = 0;
  std::vector<Violation> violations;
  std::string note;

  bool pass() const { return violations.empty(); }
};

// Least m <= max_depth such that every reachable section at level m has
// S-length <= c; -1 when none. Sections of short words stay short, so only
// the long frontier needs expanding.
int64_t depth_estimate(const Word& w, int64_t c, int64_t max_depth);

// Every word in the E-ball of radius d(n) at level n has two-level sections
// of E-length <= 1 (and one-level sections of S-length <= 1; the latter is
// internal to the argument and flagged separately in violation details).
CheckReport contraction_check(const TreeSignature& sig, int64_t n, int64_t cap, uint64_t seed,
                              int64_t sample_count);

// l_{E|n+1}(g|_x) <= l_{S|n}(g) over sampled words and letters.
CheckReport s_to_e_check(const TreeSignature& sig, int64_t n, int64_t radius, int64_t samples, uint64_t seed);

// Sections of the radius-t ball lie in <b_{n+1}>, X_{n+1} or {id} according
// to the first-layer letter's E-length; also the distance corollary on
// sampled pairs with non-commuting sections.
CheckReport separation_check(const TreeSignature& sig, int64_t n, int64_t t, int64_t cap, uint64_t seed,
                             int64_t corollary_samples);

// [b_n, g, b_n] trivial over the radius-t ball; bounded depth for growing
// signatures, closure proof for regular ones.
CheckReport vanishing_commutator_check(const TreeSignature& sig, int64_t n, int64_t t, int64_t cap,
                                       uint64_t seed, int64_t depth);

}  // namespace eb
