#pragma once

#include <cstdint>
#include <vector>

#include "eb/word.hpp"

namespace eb {

// Section of a single generator letter at a first-layer letter x of X_n.
// Rooted letters have trivial sections. For b_n^k: b_{n+1}^k at x = 0,
// the rooted letter k*e_x (basis vector labelled by the far vector x, or
// by the basis position of x in V for regular trees) when x is a label,
// trivial otherwise. Result lives at level n+1 and has at most one letter.
Word letter_section(const TreeSignature& sig, const GenLetter& l, const FpVector& x);

// Image of a vertex under the word (right action). The first letter is
// translated by first_layer_vector, the tail is acted on by the section.
Vertex act(const Word& w, const Vertex& u);

// Section at a one-letter vertex, normalized; level base+1.
Word section_at_letter(const Word& w, const FpVector& x);

// Section at an arbitrary vertex below the word's level (g|_u|_v = g|_{uv}).
Word section(const Word& w, const Vertex& u);

// A normalized word with rooted letters collected rightward factors as
// (b^k1)^{y1} ... (b^kt)^{yt} * trailing, with trailing equal to the first
// layer vector. Sections are nontrivial only at the offsets y_i (giving
// b-powers) and at the classes F(n)+y_i (giving pure rooted letters), which
// is what makes triviality decidable without enumerating X_n.
struct ConjFactor {
  FpVector offset;
  int32_t exp = 0;
};

struct ActiveDecomposition {
  std::vector<ConjFactor> factors;  // product order
  FpVector trailing;
  // Distinct offsets in order of first occurrence.
  std::vector<FpVector> b_offsets;
  // Distinct offsets with their summed exponent K_y mod p. A class F(n)+y
  // contributes nontrivial pure-rooted sections iff K_y != 0.
  std::vector<std::pair<FpVector, int32_t>> class_sums;
};

// Requires w normalized.
ActiveDecomposition active_letters(const Word& w);

// All first-layer letters with possibly nontrivial sections, as concrete
// points. Finite for regular signatures (offsets and offsets+V); for
// growing signatures this returns the b-offsets only, far classes being
// handled symbolically by the callers.
std::vector<FpVector> active_points(const Word& w, const ActiveDecomposition& dec);

// The basis V of a regular signature's alphabet, as used by b's sections.
const std::vector<FpVector>& regular_basis(const TreeSignature& sig);

}  // namespace eb
