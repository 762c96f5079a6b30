#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eb/errors.hpp"

namespace eb {

// Tetration: tetr(n, 0) = 1, tetr(n, m+1) = n^tetr(n, m).
int64_t tetr(int64_t base, int64_t m);

// Iterated binomial: iter_binom(n0, m, 0) = n0, then k -> C(prev, m).
int64_t iter_binom(int64_t n0, int64_t m, int64_t k);

enum class Family { Growing, Regular, Explicit };

// Descriptor for the level sequence of alphabet groups X_0, X_1, ...
// Growing: rank tetr_2(n) for odd p, iter_binom(5,3)(n) for p = 2.
// Regular: constant rank r (p odd). Explicit: a finite rank list.
// `shift` reindexes a Growing family by m levels (the sequence sigma^m X).
struct TreeSignature {
  Family family = Family::Growing;
  int32_t p = 3;
  int64_t regular_rank = 0;
  std::vector<int64_t> ranks;  // Explicit only
  int64_t shift = 0;           // Growing only

  bool operator==(const TreeSignature& o) const {
    return family == o.family && p == o.p && regular_rank == o.regular_rank && ranks == o.ranks &&
           shift == o.shift;
  }
};

TreeSignature growing_signature(int32_t p);
TreeSignature regular_signature(int32_t p, int64_t r);
TreeSignature explicit_signature(int32_t p, std::vector<int64_t> ranks);

int64_t rank_at(const TreeSignature& sig, int64_t n);

// Number of levels; -1 when infinite.
int64_t signature_length(const TreeSignature& sig);

TreeSignature shift_signature(const TreeSignature& sig, int64_t m);
TreeSignature truncate_signature(const TreeSignature& sig, int64_t m);

// Minimal E-length over the far set: tetr_2(n) for odd p, iter_binom-3 for
// p = 2. Growing family only.
int64_t d_fn(const TreeSignature& sig, int64_t n);

// g(0) = g(1) = 1, g(n) = prod of d(i) over i in [0, n) with i = n mod 2.
int64_t g_fn(const TreeSignature& sig, int64_t n);

// Formats: growing:p=3 | regular:p=3,r=5 | explicit:p=3,ranks=1,2,4
std::string format_signature(const TreeSignature& sig);
TreeSignature parse_signature(const std::string& text);

}  // namespace eb
