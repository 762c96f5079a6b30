#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eb/checked.hpp"
#include "eb/errors.hpp"

namespace eb {

// A freely reduced word in x, y_1, ..., y_k. Symbol 0 is x, symbol i >= 1
// is y_i; sign -1 marks the inverse letter.
struct FreeLetter {
  int32_t sym = 0;
  int32_t sign = 1;
  bool operator==(const FreeLetter& o) const { return sym == o.sym && sign == o.sign; }
};

struct FreeWord {
  int32_t arity = 0;  // number of y symbols
  std::vector<FreeLetter> letters;
  bool operator==(const FreeWord& o) const { return arity == o.arity && letters == o.letters; }
};

FreeWord free_reduce(FreeWord w);
FreeWord free_commutator();       // [x, y1] = X Y1 x y1
FreeWord free_power(int64_t p);   // x^p

// Erschler iterate: w∘0 = x, w∘(n+1) substitutes w∘n for x in w.
FreeWord iterate_word(const FreeWord& w, int64_t n);

struct SymbolCounts {
  int64_t a = 0;                // occurrences of x and x^-1
  std::vector<int64_t> a_i;     // occurrences of y_i and y_i^-1
};
SymbolCounts counts(const FreeWord& w);

// a(w)^n * len_g + sum_{i=0}^{n} a(w)^i * sum_j a_j(w) * len_h[j].
int64_t length_bound(const FreeWord& w, int64_t n, int64_t len_g, const std::vector<int64_t>& len_h);

// Letters `x`/`X` (inverse), `y1`/`Y1`, ... separated by spaces.
std::string format_free_word(const FreeWord& w);
FreeWord parse_free_word(const std::string& text);

// Homomorphic evaluation against any group oracle providing Elem, mul,
// inv and id.
template <class Group>
typename Group::Elem evaluate(const FreeWord& w, const typename Group::Elem& g,
                              const std::vector<typename Group::Elem>& hs, const Group& group) {
  if (static_cast<int32_t>(hs.size()) != w.arity)
    throw arity_mismatch("evaluate: expected " + std::to_string(w.arity) + " y-arguments");
  typename Group::Elem acc = group.id();
  for (const auto& l : w.letters) {
    const typename Group::Elem& base = l.sym == 0 ? g : hs[static_cast<size_t>(l.sym - 1)];
    acc = group.mul(acc, l.sign < 0 ? group.inv(base) : base);
  }
  return acc;
}

}  // namespace eb
