#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "eb/section.hpp"
#include "eb/word.hpp"

namespace eb {

// E|_n: powers of b_n plus powers of the basis axes of X_n (one letter per
// axis power). S|_n: X_n-conjugates of b_n powers plus all rooted vectors
// (one letter each).
struct GenSetTag {
  enum class Kind { E, S };
  Kind kind = Kind::E;
  int64_t level = 0;
};

// Length of the normalized representative in the tag alphabet: an upper
// bound for the true word length, exact on rooted-only words under E.
int64_t word_length(const Word& w, const GenSetTag& tag);

// The E|_n letter alphabet (b-powers first, then axis powers in basis
// order). Rank must be materializable.
std::vector<GenLetter> e_alphabet(const TreeSignature& sig, int64_t level);
int64_t e_alphabet_size(const TreeSignature& sig, int64_t level);

// One-letter words of E|_n (the generating set as words).
std::vector<Word> e_generators(const TreeSignature& sig, int64_t level);

// Streams every normalized word spelled by at most t letters of E|_n in
// graded lexicographic order; every element of the E-ball of radius t has
// such a spelling. Throws cap_exceeded when the sequence count (sum of
// alphabet^k) exceeds cap.
void for_each_ball_word(const TreeSignature& sig, int64_t level, int64_t radius, int64_t cap,
                        const std::function<void(const Word&)>& fn);
std::vector<Word> enumerate_ball(const TreeSignature& sig, const GenSetTag& tag, int64_t radius, int64_t cap);
int64_t ball_sequence_count(const TreeSignature& sig, const GenSetTag& tag, int64_t radius);

// Seeded, size-stratified sampling: length uniform in [0, t], letters
// uniform. For S-tags the conjugating offsets are uniform over X_n.
Word sample_ball_word(const TreeSignature& sig, const GenSetTag& tag, int64_t radius, std::mt19937_64& rng);
std::vector<Word> sample_ball(const TreeSignature& sig, const GenSetTag& tag, int64_t radius, int64_t count,
                              uint64_t seed);

// Uniform element of X_level (coordinates independently uniform mod p);
// feasible while the rank stays materializable.
FpVector sample_vector(const TreeSignature& sig, int64_t level, std::mt19937_64& rng);

// Uniform vertex of the given depth below `base`.
Vertex sample_vertex(const TreeSignature& sig, int64_t base, int64_t depth, std::mt19937_64& rng);

}  // namespace eb
