#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eb/errors.hpp"

namespace eb {

// An element of C_p^rank as a sparse coordinate list. Entries are sorted by
// index, values always in [1, p). Ranks reach 2^16 and beyond while typical
// vectors touch few coordinates, so a dense array is never stored.
struct FpVector {
  int32_t p = 0;
  int64_t rank = 0;
  std::vector<std::pair<int64_t, int32_t>> coords;

  FpVector() = default;
  FpVector(int32_t p_, int64_t rank_) : p(p_), rank(rank_) {}

  bool is_zero() const { return coords.empty(); }
  int32_t at(int64_t index) const;

  bool operator==(const FpVector& o) const {
    return p == o.p && rank == o.rank && coords == o.coords;
  }
  bool operator!=(const FpVector& o) const { return !(*this == o); }
};

FpVector fp_zero(int32_t p, int64_t rank);

// Single nonzero coordinate; value reduced mod p, zero result collapses.
FpVector fp_unit(int32_t p, int64_t rank, int64_t index, int64_t value);

// Builds from a dense coefficient list (values reduced mod p).
FpVector fp_from_dense(int32_t p, const std::vector<int64_t>& dense);

FpVector vec_add(const FpVector& a, const FpVector& b);
FpVector vec_neg(const FpVector& a);
FpVector vec_sub(const FpVector& a, const FpVector& b);
FpVector vec_scale(const FpVector& a, int64_t k);

// Number of nonzero coordinates; the length in the axis generating set E.
int64_t e_length(const FpVector& v);

// Sum over axes of min(k, p-k); the length in the basis generating set T.
int64_t t_length(const FpVector& v);

// Lexicographic order on the dense coordinate tuple.
bool lex_less(const FpVector& a, const FpVector& b);

size_t hash_value(const FpVector& v);

void append_key(std::string& out, const FpVector& v);

// Text formats: dense `[c0,c1,...]` (rank <= 32) or sparse `{i:v,...}`.
std::string format_vector(const FpVector& v);
// Accepts both forms; a dense list shorter than `rank` is zero-padded.
FpVector parse_vector(const std::string& text, int32_t p, int64_t rank);

}  // namespace eb
