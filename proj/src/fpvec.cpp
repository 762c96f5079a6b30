#include "eb/fpvec.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace eb {

namespace {

int32_t mod_p(int64_t v, int32_t p) {
  int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<int32_t>(r);
}

void check_same_shape(const FpVector& a, const FpVector& b) {
  if (a.p != b.p || a.rank != b.rank)
    throw shape_mismatch("vector shape mismatch: p=" + std::to_string(a.p) + ",r=" + std::to_string(a.rank) +
                         " vs p=" + std::to_string(b.p) + ",r=" + std::to_string(b.rank));
}

}  // namespace

int32_t FpVector::at(int64_t index) const {
  auto it = std::lower_bound(coords.begin(), coords.end(), index,
                             [](const auto& e, int64_t i) { return e.first < i; });
  if (it != coords.end() && it->first == index) return it->second;
  return 0;
}

FpVector fp_zero(int32_t p, int64_t rank) { return FpVector(p, rank); }

FpVector fp_unit(int32_t p, int64_t rank, int64_t index, int64_t value) {
  if (index < 0 || index >= rank) throw shape_mismatch("fp_unit: index out of range");
  FpVector v(p, rank);
  int32_t val = mod_p(value, p);
  if (val != 0) v.coords.emplace_back(index, val);
  return v;
}

FpVector fp_from_dense(int32_t p, const std::vector<int64_t>& dense) {
  FpVector v(p, static_cast<int64_t>(dense.size()));
  for (size_t i = 0; i < dense.size(); ++i) {
    int32_t val = mod_p(dense[i], p);
    if (val != 0) v.coords.emplace_back(static_cast<int64_t>(i), val);
  }
  return v;
}

FpVector vec_add(const FpVector& a, const FpVector& b) {
  check_same_shape(a, b);
  FpVector out(a.p, a.rank);
  out.coords.reserve(a.coords.size() + b.coords.size());
  size_t i = 0, j = 0;
  while (i < a.coords.size() || j < b.coords.size()) {
    if (j == b.coords.size() || (i < a.coords.size() && a.coords[i].first < b.coords[j].first)) {
      out.coords.push_back(a.coords[i++]);
    } else if (i == a.coords.size() || b.coords[j].first < a.coords[i].first) {
      out.coords.push_back(b.coords[j++]);
    } else {
      int32_t v = mod_p(static_cast<int64_t>(a.coords[i].second) + b.coords[j].second, a.p);
      if (v != 0) out.coords.emplace_back(a.coords[i].first, v);
      ++i, ++j;
    }
  }
  return out;
}

FpVector vec_neg(const FpVector& a) {
  FpVector out(a.p, a.rank);
  out.coords.reserve(a.coords.size());
  for (const auto& [i, v] : a.coords) out.coords.emplace_back(i, a.p - v);
  return out;
}

FpVector vec_sub(const FpVector& a, const FpVector& b) { return vec_add(a, vec_neg(b)); }

FpVector vec_scale(const FpVector& a, int64_t k) {
  int32_t kk = mod_p(k, a.p);
  FpVector out(a.p, a.rank);
  if (kk == 0) return out;
  out.coords.reserve(a.coords.size());
  for (const auto& [i, v] : a.coords) {
    int32_t nv = mod_p(static_cast<int64_t>(v) * kk, a.p);
    if (nv != 0) out.coords.emplace_back(i, nv);
  }
  return out;
}

int64_t e_length(const FpVector& v) { return static_cast<int64_t>(v.coords.size()); }

int64_t t_length(const FpVector& v) {
  int64_t total = 0;
  for (const auto& [i, val] : v.coords) total += std::min<int64_t>(val, v.p - val);
  return total;
}

bool lex_less(const FpVector& a, const FpVector& b) {
  check_same_shape(a, b);
  // Walk both sparse lists; gaps are zeros.
  size_t i = 0, j = 0;
  while (i < a.coords.size() && j < b.coords.size()) {
    if (a.coords[i].first == b.coords[j].first) {
      if (a.coords[i].second != b.coords[j].second) return a.coords[i].second < b.coords[j].second;
      ++i, ++j;
    } else if (a.coords[i].first < b.coords[j].first) {
      return false;  // a nonzero where b is zero
    } else {
      return true;  // a zero where b is nonzero
    }
  }
  if (i < a.coords.size()) return false;
  return j < b.coords.size();
}

size_t hash_value(const FpVector& v) {
  size_t h = static_cast<size_t>(v.p) * 1000003u + static_cast<size_t>(v.rank);
  for (const auto& [i, val] : v.coords) {
    h ^= (static_cast<size_t>(i) * 0x9e3779b97f4a7c15ull + static_cast<size_t>(val)) + (h << 6) + (h >> 2);
  }
  return h;
}

void append_key(std::string& out, const FpVector& v) {
  out += 'v';
  out += std::to_string(v.rank);
  for (const auto& [i, val] : v.coords) {
    out += ',';
    out += std::to_string(i);
    out += ':';
    out += std::to_string(val);
  }
  out += ';';
}

std::string format_vector(const FpVector& v) {
  std::ostringstream os;
  if (v.rank <= 32) {
    os << '[';
    for (int64_t i = 0; i < v.rank; ++i) {
      if (i) os << ',';
      os << v.at(i);
    }
    os << ']';
  } else {
    os << '{';
    bool first = true;
    for (const auto& [i, val] : v.coords) {
      if (!first) os << ',';
      os << i << ':' << val;
      first = false;
    }
    os << '}';
  }
  return os.str();
}

namespace {

int64_t parse_int(const std::string& s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) {
    throw parse_error("expected integer in vector at position " + std::to_string(start) + " of '" + s + "'");
  }
  int64_t value = 0;
  auto res = std::from_chars(s.data() + start, s.data() + pos, value);
  if (res.ec != std::errc()) throw parse_error("bad integer in '" + s + "'");
  return value;
}

}  // namespace

FpVector parse_vector(const std::string& text, int32_t p, int64_t rank) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size()) throw parse_error("empty vector text");
  FpVector v(p, rank);
  if (text[pos] == '[') {
    ++pos;
    std::vector<int64_t> dense;
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
    } else {
      while (true) {
        skip_ws();
        dense.push_back(parse_int(text, pos));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ']') {
          ++pos;
          break;
        }
        throw parse_error("expected ',' or ']' in vector '" + text + "'");
      }
    }
    if (static_cast<int64_t>(dense.size()) > rank)
      throw parse_error("dense vector longer than rank " + std::to_string(rank));
    for (size_t i = 0; i < dense.size(); ++i) {
      int64_t r = dense[i] % p;
      if (r < 0) r += p;
      if (r != 0) v.coords.emplace_back(static_cast<int64_t>(i), static_cast<int32_t>(r));
    }
  } else if (text[pos] == '{') {
    ++pos;
    skip_ws();
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
    } else {
      while (true) {
        skip_ws();
        int64_t idx = parse_int(text, pos);
        skip_ws();
        if (pos >= text.size() || text[pos] != ':') throw parse_error("expected ':' in sparse vector '" + text + "'");
        ++pos;
        skip_ws();
        int64_t val = parse_int(text, pos);
        if (idx < 0 || idx >= rank) throw parse_error("sparse index out of range in '" + text + "'");
        int64_t r = val % p;
        if (r < 0) r += p;
        if (r != 0) v.coords.emplace_back(idx, static_cast<int32_t>(r));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == '}') {
          ++pos;
          break;
        }
        throw parse_error("expected ',' or '}' in vector '" + text + "'");
      }
      std::sort(v.coords.begin(), v.coords.end());
      for (size_t i = 1; i < v.coords.size(); ++i)
        if (v.coords[i].first == v.coords[i - 1].first) throw parse_error("duplicate index in '" + text + "'");
    }
  } else {
    throw parse_error("vector must start with '[' or '{': '" + text + "'");
  }
  skip_ws();
  if (pos != text.size()) throw parse_error("trailing characters in vector '" + text + "'");
  return v;
}

}  // namespace eb
