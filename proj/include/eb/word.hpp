#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eb/farset.hpp"
#include "eb/fpvec.hpp"
#include "eb/signature.hpp"

namespace eb {

// A vertex of the tree below level `base`: letter i lies in X_{base+i}.
struct Vertex {
  TreeSignature sig;
  int64_t base = 0;
  std::vector<FpVector> letters;

  int64_t level() const { return static_cast<int64_t>(letters.size()); }
  bool operator==(const Vertex& o) const { return base == o.base && letters == o.letters; }
};

Vertex root_vertex(const TreeSignature& sig, int64_t base = 0);
Vertex vertex_extend(const Vertex& u, const FpVector& letter);
std::string format_vertex(const Vertex& u);
Vertex parse_vertex(const std::string& text, const TreeSignature& sig, int64_t base = 0);
std::string vertex_key(const Vertex& u);

// One generator letter at a fixed level: either a rooted translation by a
// nonzero vector of X_n, or a power b_n^k of the recursively defined
// generator (k in [1, p-1]; inverses are exponent negation since every
// generator has order p).
struct GenLetter {
  enum class Kind { Rooted, B };
  Kind kind = Kind::Rooted;
  int64_t level = 0;
  FpVector vec;     // Rooted
  int32_t exp = 0;  // B

  static GenLetter rooted(int64_t level, FpVector v) {
    GenLetter l;
    l.kind = Kind::Rooted;
    l.level = level;
    l.vec = std::move(v);
    return l;
  }
  static GenLetter b(int64_t level, int32_t p, int64_t exp) {
    GenLetter l;
    l.kind = Kind::B;
    l.level = level;
    int64_t e = exp % p;
    if (e < 0) e += p;
    l.exp = static_cast<int32_t>(e);
    return l;
  }
  bool operator==(const GenLetter& o) const {
    return kind == o.kind && level == o.level && vec == o.vec && exp == o.exp;
  }
};

// A product of generator letters, all at the word's base level, denoting an
// automorphism of the subtree hanging at that level.
struct Word {
  TreeSignature sig;
  int64_t base = 0;
  std::vector<GenLetter> letters;

  bool empty() const { return letters.empty(); }
};

Word empty_word(const TreeSignature& sig, int64_t base = 0);
Word single_letter(const TreeSignature& sig, int64_t base, GenLetter letter);

// Merges adjacent rooted letters, drops trivial ones, reduces b-exponents
// mod p and merges adjacent b-powers. The result denotes the same
// automorphism and satisfies: no two adjacent rooted letters, no trivial
// letters.
Word normalize(const Word& w);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);          // not normalized
Word word_mul(const Word& a, const Word& b);        // normalized
Word conjugate(const Word& g, const Word& by);      // by^-1 g by, normalized
Word commutator(const Word& a, const Word& b);      // [a,b] = a^-1 b^-1 a b, normalized
Word word_pow(const Word& w, int64_t e);            // normalized

// Sum of the rooted letters' vectors: the action of the word on the first
// letter of any vertex is right-addition of this vector.
FpVector first_layer_vector(const Word& w);

bool words_identical(const Word& a, const Word& b);

// Canonicalized serialization; with level_invariant the base level is
// omitted so that structurally equal words at different levels of a regular
// tree share a key.
std::string word_key(const Word& w, bool level_invariant = false);

// Grammar: word := term (SP term)*; term := ('b' LEVEL | 'r' LEVEL ':' VEC)
// ('^' EXP)?. Example: "b0^2 r0:[1,2]". The empty string parses to the
// identity.
std::string format_word(const Word& w);
Word parse_word(const std::string& text, const TreeSignature& sig, int64_t base = 0);

}  // namespace eb
