#pragma once

#include <cstdint>
#include <vector>

#include "eb/section.hpp"
#include "eb/triviality.hpp"
#include "eb/word.hpp"

namespace eb {

struct OrbitResult {
  std::vector<Vertex> elements;
  bool cap_exceeded = false;
};

// BFS closure of u under the given words and their inverses, halted at cap.
OrbitResult orbit(const Vertex& u, const std::vector<Word>& gens, int64_t cap);

// Size of the cyclic orbit of u under a single word; stops after cap steps.
// Returns -1 when the cap is hit.
int64_t cyclic_orbit_size(const Word& g, const Vertex& u, int64_t cap);

// An element of <E> that fixes u and whose section at u is the target
// letter, built by the inductive conjugation scheme and verified (fixes u,
// section equal to the target to depth 3) before returning.
Word fractality_witness(const TreeSignature& sig, const GenLetter& target, const Vertex& u);

}  // namespace eb
