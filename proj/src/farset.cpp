#include "eb/farset.hpp"

#include <map>
#include <mutex>

#include "eb/checked.hpp"

namespace eb {

namespace {

// Rows reduced mod p; returns the rank of the span.
int64_t fp_matrix_rank(int32_t p, std::vector<std::vector<int32_t>> rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  int64_t rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows.size(); ++col) {
    size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[row], rows[pivot]);
    // Scale pivot row to 1.
    int32_t inv = 1;
    for (int32_t x = 1; x < p; ++x)
      if (x * rows[row][col] % p == 1) {
        inv = x;
        break;
      }
    for (size_t c = col; c < cols; ++c) rows[row][c] = static_cast<int32_t>(rows[row][c] * static_cast<int64_t>(inv) % p);
    for (size_t r2 = 0; r2 < rows.size(); ++r2) {
      if (r2 == row || rows[r2][col] == 0) continue;
      int32_t factor = rows[r2][col];
      for (size_t c = col; c < cols; ++c) {
        int64_t v = rows[r2][c] - static_cast<int64_t>(factor) * rows[row][c];
        v %= p;
        if (v < 0) v += p;
        rows[r2][c] = static_cast<int32_t>(v);
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::vector<int32_t> dense_of(const FpVector& v) {
  std::vector<int32_t> out(static_cast<size_t>(v.rank), 0);
  for (const auto& [i, val] : v.coords) out[static_cast<size_t>(i)] = val;
  return out;
}

}  // namespace

int64_t far_set_size(const TreeSignature& sig, int64_t level) {
  int64_t r = rank_at(sig, level);
  if (sig.p == 2) {
    if (r <= 3) throw rank_too_small("p=2 far set needs rank > 3");
    return checked_binom(r, 3);
  }
  return checked_pow(2, r);
}

bool is_far(const TreeSignature& sig, int64_t level, const FpVector& v) {
  int64_t r = rank_at(sig, level);
  if (v.p != sig.p || v.rank != r) throw shape_mismatch("is_far: vector not in X_level");
  if (sig.p == 2) {
    if (r <= 3) throw rank_too_small("p=2 far set needs rank > 3");
    return e_length(v) == r - 3;
  }
  if (e_length(v) != r) return false;
  int32_t d = (sig.p - 1) / 2;
  for (const auto& [i, val] : v.coords)
    if (val != d && val != sig.p - d) return false;
  return true;
}

int64_t far_index(const TreeSignature& sig, int64_t level, const FpVector& f) {
  if (!is_far(sig, level, f)) throw precondition_error("far_index: vector is not in the far set");
  int64_t r = rank_at(sig, level);
  if (sig.p == 2) {
    // Lex rank of the sorted zero-index triple (z1 < z2 < z3).
    std::vector<int64_t> zeros;
    size_t ci = 0;
    for (int64_t i = 0; i < r; ++i) {
      if (ci < f.coords.size() && f.coords[ci].first == i) {
        ++ci;
      } else {
        zeros.push_back(i);
      }
    }
    int64_t idx = 0;
    for (int64_t a = 0; a < zeros[0]; ++a) idx = checked_add(idx, checked_binom(r - 1 - a, 2));
    for (int64_t b = zeros[0] + 1; b < zeros[1]; ++b) idx = checked_add(idx, r - 1 - b);
    idx = checked_add(idx, zeros[2] - zeros[1] - 1);
    return idx;
  }
  int32_t d = (sig.p - 1) / 2;
  int64_t idx = 0;
  for (const auto& [i, val] : f.coords) {
    (void)i;
    idx <<= 1;
    if (val == sig.p - d) idx |= 1;
  }
  return idx;
}

FpVector far_by_index(const TreeSignature& sig, int64_t level, int64_t index) {
  int64_t size = far_set_size(sig, level);
  if (index < 0 || index >= size) throw precondition_error("far_by_index: index out of range");
  int64_t r = rank_at(sig, level);
  FpVector v(sig.p, r);
  if (sig.p == 2) {
    // Decode the lex rank back into the zero triple.
    int64_t z1 = 0, rest = index;
    while (rest >= checked_binom(r - 1 - z1, 2)) {
      rest -= checked_binom(r - 1 - z1, 2);
      ++z1;
    }
    int64_t z2 = z1 + 1;
    while (rest >= r - 1 - z2) {
      rest -= r - 1 - z2;
      ++z2;
    }
    int64_t z3 = z2 + 1 + rest;
    for (int64_t i = 0; i < r; ++i)
      if (i != z1 && i != z2 && i != z3) v.coords.emplace_back(i, 1);
    return v;
  }
  int32_t d = (sig.p - 1) / 2;
  for (int64_t i = 0; i < r; ++i) {
    bool high = (index >> (r - 1 - i)) & 1;
    v.coords.emplace_back(i, high ? sig.p - d : d);
  }
  return v;
}

FarStream::FarStream(const TreeSignature& sig, int64_t level) : sig_(sig), level_(level) {
  size_ = far_set_size(sig, level);
}

bool FarStream::next(FpVector& out) {
  if (index_ >= size_) return false;
  out = far_by_index(sig_, level_, index_++);
  return true;
}

std::vector<FpVector> far_materialize(const TreeSignature& sig, int64_t level) {
  if (rank_at(sig, level) > 20) throw cap_exceeded("far_materialize refused above rank 20");
  std::vector<FpVector> out;
  out.reserve(static_cast<size_t>(far_set_size(sig, level)));
  FarStream fs(sig, level);
  FpVector f;
  while (fs.next(f)) out.push_back(f);
  return out;
}

FpVector basis_vector(const TreeSignature& sig, int64_t level, int64_t index) {
  return fp_unit(sig.p, rank_at(sig, level), index, 1);
}

LevelBasis level_basis(const TreeSignature& sig, int64_t level) {
  LevelBasis b;
  b.level = level;
  b.rank = rank_at(sig, level);
  if (sig.family == Family::Growing && level >= 1) b.labels = far_materialize(sig, level - 1);
  return b;
}

const std::vector<FpVector>& choose_basis_V(int32_t p, int64_t r) {
  if (p < 3 || p % 2 == 0) throw precondition_error("choose_basis_V needs an odd prime");
  if (r < 1) throw precondition_error("choose_basis_V needs r >= 1");
  static std::map<std::pair<int32_t, int64_t>, std::vector<FpVector>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({p, r});
  if (it != cache.end()) return it->second;

  int32_t d = (p - 1) / 2;
  std::vector<FpVector> pattern;
  std::vector<std::vector<int32_t>> rows;
  for (int64_t i = 0; i < r; ++i) {
    FpVector v(p, r);
    for (int64_t j = 0; j < r; ++j) v.coords.emplace_back(j, j == i ? p - d : d);
    rows.push_back(dense_of(v));
    pattern.push_back(std::move(v));
  }
  if (fp_matrix_rank(p, rows) == r) return cache.emplace(std::make_pair(p, r), std::move(pattern)).first->second;

  // Greedy fallback: scan the far set in lex order, keeping vectors that
  // enlarge the span.
  std::vector<FpVector> greedy;
  std::vector<std::vector<int32_t>> kept;
  TreeSignature box = regular_signature(p, r);
  FarStream fs(box, 0);
  FpVector f;
  while (static_cast<int64_t>(greedy.size()) < r && fs.next(f)) {
    auto trial = kept;
    trial.push_back(dense_of(f));
    if (fp_matrix_rank(p, trial) == static_cast<int64_t>(trial.size())) {
      kept = std::move(trial);
      greedy.push_back(f);
    }
  }
  if (static_cast<int64_t>(greedy.size()) != r) throw construction_failed("far set failed to span C_p^r");
  return cache.emplace(std::make_pair(p, r), std::move(greedy)).first->second;
}

std::vector<FpVector> enumerate_vectors(int32_t p, int64_t rank, int64_t cap) {
  int64_t total = checked_pow(p, rank);
  if (total > cap) throw cap_exceeded("enumerate_vectors: alphabet above cap");
  std::vector<FpVector> out;
  out.reserve(static_cast<size_t>(total));
  for (int64_t code = 0; code < total; ++code) out.push_back(vector_from_code(p, rank, code));
  return out;
}

int64_t vector_code(const FpVector& v) {
  int64_t code = 0;
  for (int64_t i = 0; i < v.rank; ++i) code = checked_add(checked_mul(code, v.p), v.at(i));
  return code;
}

FpVector vector_from_code(int32_t p, int64_t rank, int64_t code) {
  FpVector v(p, rank);
  for (int64_t i = rank - 1; i >= 0; --i) {
    int32_t digit = static_cast<int32_t>(code % p);
    code /= p;
    if (digit != 0) v.coords.emplace_back(i, digit);
  }
  std::reverse(v.coords.begin(), v.coords.end());
  return v;
}

}  // namespace eb
