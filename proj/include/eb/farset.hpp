#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "eb/fpvec.hpp"
#include "eb/signature.hpp"

namespace eb {

// The far set F(n) of the level alphabet X_n: for odd p all vectors with
// every coordinate in {d, p-d} where d = (p-1)/2; for p = 2 all 0/1 vectors
// with exactly three zero coordinates. Far vectors label the basis of the
// next alphabet X_{n+1} in growing signatures, ordered lexicographically on
// the dense tuple so that basis indices are reproducible.

int64_t far_set_size(const TreeSignature& sig, int64_t level);

bool is_far(const TreeSignature& sig, int64_t level, const FpVector& v);

// Lex position of a far vector within F(level).
int64_t far_index(const TreeSignature& sig, int64_t level, const FpVector& f);

// Inverse of far_index.
FpVector far_by_index(const TreeSignature& sig, int64_t level, int64_t index);

// Lazily streams F(level) in canonical (lex) order.
class FarStream {
 public:
  FarStream(const TreeSignature& sig, int64_t level);
  // Returns false when exhausted.
  bool next(FpVector& out);
  int64_t size() const { return size_; }

 private:
  TreeSignature sig_;
  int64_t level_ = 0;
  int64_t index_ = 0;
  int64_t size_ = 0;
};

// Materialization is refused above rank 20: |F| is 2^r resp. C(r,3).
std::vector<FpVector> far_materialize(const TreeSignature& sig, int64_t level);

// Basis vector e_i of X_level (index within the canonical level basis).
FpVector basis_vector(const TreeSignature& sig, int64_t level, int64_t index);

// Identifies each basis index of X_level with its defining label: the
// far vector f in F(level-1) for growing signatures at level >= 1, the
// canonical axes otherwise.
struct LevelBasis {
  int64_t level = 0;
  int64_t rank = 0;
  // Empty for canonical-axis levels; otherwise label i is the far vector
  // of basis index i. Only available when the rank is materializable.
  std::vector<FpVector> labels;
};

LevelBasis level_basis(const TreeSignature& sig, int64_t level);

// A deterministic basis V = {v_1, ..., v_r} of C_p^r drawn from the far
// set: the pattern (d,...,d,-d,d,...,d) when invertible, otherwise greedy
// lex-order Gaussian elimination over the far stream. Cached per (p, r).
const std::vector<FpVector>& choose_basis_V(int32_t p, int64_t r);

// Enumerates all of C_p^rank in lex order; guarded by cap.
std::vector<FpVector> enumerate_vectors(int32_t p, int64_t rank, int64_t cap);

// Dense-code helpers for small alphabets: code = sum coord_i * p^(rank-1-i).
int64_t vector_code(const FpVector& v);
FpVector vector_from_code(int32_t p, int64_t rank, int64_t code);

}  // namespace eb
