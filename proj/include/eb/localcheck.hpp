#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "eb/farset.hpp"
#include "eb/fpvec.hpp"
#include "eb/freeword.hpp"

namespace eb {

// G wr_X T with abelian components G = C_p^comp_rank and the top group a
// subgroup of X = C_p^x_rank acting on itself by translation — the shape in
// which orbit-restricted checking of iterated identities happens. The
// domain may be all of X or one orbit (any translation-closed subset).
struct DomainWreath {
  int32_t p = 3;
  int64_t x_rank = 1;
  int64_t comp_rank = 1;
  std::vector<int64_t> domain;  // codes of the domain points, sorted
  std::unordered_map<int64_t, int64_t> position;

  struct Elem {
    std::vector<FpVector> comps;  // by domain position
    FpVector top;
  };

  static DomainWreath full(int32_t p, int64_t x_rank, int64_t comp_rank);
  static DomainWreath restricted(int32_t p, int64_t x_rank, int64_t comp_rank, std::vector<int64_t> domain);

  Elem id() const;
  Elem make(const std::vector<FpVector>& comps, const FpVector& top) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  bool is_id(const Elem& e) const;
};

// An instance of the orbit-checking lemma: g in the base group, elements
// h_i = (h_{i,x}) t_i with translation tops.
struct LocalInstance {
  int32_t p = 3;
  int64_t x_rank = 1;
  int64_t comp_rank = 1;
  std::vector<FpVector> g_base;                // size p^x_rank
  std::vector<std::vector<FpVector>> h_bases;  // one tuple per h_i
  std::vector<FpVector> tops;                  // one top per h_i
};

// Orbits of X under the group generated by the tops (cosets of their span).
std::vector<std::vector<int64_t>> top_orbits(const LocalInstance& inst);

// The orbit-restricted tuples: triviality of w∘m globally equals
// triviality on every restriction.
struct LocalRestriction {
  std::vector<int64_t> orbit;
  std::vector<FpVector> g_comps;
  std::vector<std::vector<FpVector>> h_comps;
};

std::vector<LocalRestriction> local_decomposition(const LocalInstance& inst);

bool local_global_trivial(const LocalInstance& inst, const FreeWord& w, int64_t m);
bool local_restricted_trivial(const LocalInstance& inst, const LocalRestriction& r, const FreeWord& w, int64_t m);

// Both directions of the equivalence on one instance.
bool local_checking_agrees(const LocalInstance& inst, const FreeWord& w, int64_t m);

}  // namespace eb
