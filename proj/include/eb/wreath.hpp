#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "eb/fpvec.hpp"
#include "eb/word.hpp"

namespace eb {

// Iterated wreath product of elementary abelian p-groups, stored as
// automorphisms of the finite tree with alphabets A_{n-1}, ..., A_0 from
// the top: W_0 trivial, W_{k+1} = W_k wr A_k. Base maps are dense; this
// module trades memory for exhaustiveness.
struct WreathSpec {
  int32_t p = 2;
  std::vector<int64_t> ranks;  // ranks of A_0 ... A_{n-1}

  int64_t depth() const { return static_cast<int64_t>(ranks.size()); }
  // Alphabet rank at tree level i (top-down): A_{n-1-i}.
  int64_t level_rank(int64_t i) const { return ranks[ranks.size() - 1 - static_cast<size_t>(i)]; }
  int64_t level_size(int64_t i) const;
  bool operator==(const WreathSpec& o) const { return p == o.p && ranks == o.ranks; }
};

int64_t wreath_order(const WreathSpec& spec);

struct WreathElem {
  struct Node {
    int64_t top = 0;                // code of the translating alphabet element
    std::vector<Node> base;         // one child per alphabet letter; empty at the last level
    bool operator==(const Node& o) const { return top == o.top && base == o.base; }
  };
  WreathSpec spec;
  Node root;

  bool operator==(const WreathElem& o) const { return spec == o.spec && root == o.root; }
};

WreathElem w_id(const WreathSpec& spec);
WreathElem w_mul(const WreathElem& a, const WreathElem& b);
WreathElem w_inv(const WreathElem& a);
bool w_is_id(const WreathElem& a);
std::string w_format(const WreathElem& a);  // nested-list serialization

// Every element exactly once; throws cap_exceeded when the order is above
// cap.
void enumerate_group(const WreathSpec& spec, int64_t cap, const std::function<void(const WreathElem&)>& fn);

// Least k <= limit with [g,_k h] = id; -1 when the limit is hit.
int64_t engel_class_pair(const WreathElem& g, const WreathElem& h, int64_t limit);

struct EngelBoundReport {
  int64_t bound = 0;        // (p^n - 1)/(p - 1)
  int64_t observed_max = 0;
  int64_t pairs = 0;
  int64_t violations = 0;
  std::string witness_g, witness_h;
};

// Exhaustively confirms every pair satisfies the (p^n-1)/(p-1) bound.
EngelBoundReport verify_engel_bound(const WreathSpec& spec, int64_t cap);

// G wr C_m with the cyclic top acting by shift and abelian components:
// exactly the shape of the wreath lemma instances. Components are vectors
// of C_p^rank.
struct CyclicWreathElem {
  int32_t p = 0;
  int64_t comp_rank = 0;
  int64_t m = 0;  // top order
  std::vector<FpVector> base;  // size m, position i = component over point i
  int64_t top = 0;             // shift mod m
};

CyclicWreathElem cw_id(int32_t p, int64_t comp_rank, int64_t m);
CyclicWreathElem cw_mul(const CyclicWreathElem& a, const CyclicWreathElem& b);
CyclicWreathElem cw_inv(const CyclicWreathElem& a);
bool cw_is_id(const CyclicWreathElem& a);

// Evaluates [(g_x),_{m} (h_x)*sigma] in G wr C_m where m = p^r, g
// components of order dividing p, G abelian; true iff the result is
// trivial (the wreath lemma predicts always).
bool abelian_wreath_check(int32_t p, int64_t top_exponent, int64_t comp_rank,
                          const std::vector<FpVector>& g_tuple, const std::vector<FpVector>& h_tuple);

// Compares the directly computed component of [(g,id,...,id),_n sigma]
// with the binomial closed form prod_j g^((-1)^(n-j) C(n,j)) over j = x
// mod m. Returns equality (expected always).
bool component_formula_check(int32_t p, int64_t comp_rank, int64_t m, const FpVector& g, int64_t n, int64_t x);

// Embedding of the depth-d congruence quotient into the iterated wreath
// product over X_0, ..., X_{d-1}. Multiplication-preserving; the kernel is
// the layer stabilizer St(d).
WreathSpec quotient_wreath_spec(const TreeSignature& sig, int64_t d, int64_t cap);
WreathElem quotient_to_wreath(const TreeSignature& sig, int64_t d, const Word& w, int64_t cap);

std::string format_wreath_spec(const WreathSpec& spec);
WreathSpec parse_wreath_spec(const std::string& text);  // wreath:p=3,ranks=1,1

}  // namespace eb
