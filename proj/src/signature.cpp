#include "eb/signature.hpp"

#include <sstream>

#include "eb/checked.hpp"

namespace eb {

int64_t tetr(int64_t base, int64_t m) {
  if (base < 2) throw precondition_error("tetr: base must be >= 2");
  if (m < 0) throw precondition_error("tetr: negative height");
  int64_t r = 1;
  for (int64_t i = 0; i < m; ++i) {
    if (r > 62 && base >= 2) throw overflow_error("tetr exceeds integer budget");
    r = checked_pow(base, r);
  }
  return r;
}

int64_t iter_binom(int64_t n0, int64_t m, int64_t k) {
  if (!(n0 > m && m >= 1)) throw precondition_error("iter_binom: need n0 > m >= 1");
  if (k < 0) throw precondition_error("iter_binom: negative iterate");
  int64_t r = n0;
  for (int64_t i = 0; i < k; ++i) r = checked_binom(r, m);
  return r;
}

TreeSignature growing_signature(int32_t p) {
  if (p < 2) throw precondition_error("prime must be >= 2");
  TreeSignature s;
  s.family = Family::Growing;
  s.p = p;
  return s;
}

TreeSignature regular_signature(int32_t p, int64_t r) {
  if (p < 3 || p % 2 == 0) throw precondition_error("regular family needs an odd prime");
  if (r < 1) throw precondition_error("regular rank must be >= 1");
  TreeSignature s;
  s.family = Family::Regular;
  s.p = p;
  s.regular_rank = r;
  return s;
}

TreeSignature explicit_signature(int32_t p, std::vector<int64_t> ranks) {
  for (int64_t r : ranks)
    if (r < 1) throw precondition_error("explicit ranks must all be >= 1");
  TreeSignature s;
  s.family = Family::Explicit;
  s.p = p;
  s.ranks = std::move(ranks);
  return s;
}

int64_t rank_at(const TreeSignature& sig, int64_t n) {
  if (n < 0) throw precondition_error("rank_at: negative level");
  switch (sig.family) {
    case Family::Growing: {
      int64_t level = checked_add(sig.shift, n);
      return sig.p == 2 ? iter_binom(5, 3, level) : tetr(2, level);
    }
    case Family::Regular:
      return sig.regular_rank;
    case Family::Explicit:
      if (n >= static_cast<int64_t>(sig.ranks.size()))
        throw precondition_error("rank_at: level beyond explicit signature length");
      return sig.ranks[static_cast<size_t>(n)];
  }
  throw error("unreachable");
}

int64_t signature_length(const TreeSignature& sig) {
  return sig.family == Family::Explicit ? static_cast<int64_t>(sig.ranks.size()) : -1;
}

TreeSignature shift_signature(const TreeSignature& sig, int64_t m) {
  if (m < 0) throw precondition_error("shift_signature: negative shift");
  TreeSignature out = sig;
  switch (sig.family) {
    case Family::Growing:
      out.shift = checked_add(sig.shift, m);
      return out;
    case Family::Regular:
      return out;
    case Family::Explicit: {
      if (m > static_cast<int64_t>(sig.ranks.size()))
        throw precondition_error("shift_signature: shift beyond explicit length");
      out.ranks.assign(sig.ranks.begin() + m, sig.ranks.end());
      return out;
    }
  }
  throw error("unreachable");
}

TreeSignature truncate_signature(const TreeSignature& sig, int64_t m) {
  if (m < 0) throw precondition_error("truncate_signature: negative length");
  std::vector<int64_t> ranks;
  ranks.reserve(static_cast<size_t>(m));
  for (int64_t i = 0; i < m; ++i) ranks.push_back(rank_at(sig, i));
  return explicit_signature(sig.p, std::move(ranks));
}

int64_t d_fn(const TreeSignature& sig, int64_t n) {
  if (sig.family != Family::Growing) throw family_error("d_fn is defined for growing signatures only");
  int64_t r = rank_at(sig, n);
  return sig.p == 2 ? checked_add(r, -3) : r;
}

int64_t g_fn(const TreeSignature& sig, int64_t n) {
  if (sig.family != Family::Growing) throw family_error("g_fn is defined for growing signatures only");
  if (n < 0) throw precondition_error("g_fn: negative level");
  if (n <= 1) return 1;
  int64_t prod = 1;
  for (int64_t i = n % 2; i < n; i += 2) prod = checked_mul(prod, d_fn(sig, i));
  return prod;
}

std::string format_signature(const TreeSignature& sig) {
  std::ostringstream os;
  switch (sig.family) {
    case Family::Growing:
      os << "growing:p=" << sig.p;
      if (sig.shift) os << ",shift=" << sig.shift;
      break;
    case Family::Regular:
      os << "regular:p=" << sig.p << ",r=" << sig.regular_rank;
      break;
    case Family::Explicit:
      os << "explicit:p=" << sig.p << ",ranks=";
      for (size_t i = 0; i < sig.ranks.size(); ++i) {
        if (i) os << ',';
        os << sig.ranks[i];
      }
      break;
  }
  return os.str();
}

namespace {

std::vector<std::pair<std::string, std::string>> split_kv(const std::string& body) {
  std::vector<std::pair<std::string, std::string>> out;
  size_t pos = 0;
  while (pos < body.size()) {
    size_t eq = body.find('=', pos);
    if (eq == std::string::npos) throw parse_error("expected key=value in signature '" + body + "'");
    std::string key = body.substr(pos, eq - pos);
    size_t next = eq + 1;
    // Values may themselves contain commas (rank lists); a value runs until
    // a comma that is followed by `key=`.
    size_t end = next;
    while (end < body.size()) {
      if (body[end] == ',') {
        size_t probe = body.find('=', end + 1);
        size_t comma = body.find(',', end + 1);
        if (probe != std::string::npos && (comma == std::string::npos || probe < comma)) break;
      }
      ++end;
    }
    out.emplace_back(key, body.substr(next, end - next));
    pos = end < body.size() ? end + 1 : end;
  }
  return out;
}

int64_t to_int(const std::string& s) {
  try {
    size_t used = 0;
    int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw parse_error("bad integer '" + s + "'");
    return v;
  } catch (const std::exception&) {
    throw parse_error("bad integer '" + s + "'");
  }
}

}  // namespace

TreeSignature parse_signature(const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos) throw parse_error("signature needs 'family:params': '" + text + "'");
  std::string family = text.substr(0, colon);
  auto kv = split_kv(text.substr(colon + 1));
  auto get = [&](const std::string& key, bool required) -> const std::string* {
    for (const auto& [k, v] : kv)
      if (k == key) return &v;
    if (required) throw parse_error("signature missing '" + key + "': '" + text + "'");
    return nullptr;
  };
  if (family == "growing") {
    auto sig = growing_signature(static_cast<int32_t>(to_int(*get("p", true))));
    if (const std::string* s = get("shift", false)) sig = shift_signature(sig, to_int(*s));
    return sig;
  }
  if (family == "regular") {
    return regular_signature(static_cast<int32_t>(to_int(*get("p", true))), to_int(*get("r", true)));
  }
  if (family == "explicit") {
    const std::string& list = *get("ranks", true);
    std::vector<int64_t> ranks;
    size_t pos = 0;
    while (pos <= list.size()) {
      size_t comma = list.find(',', pos);
      if (comma == std::string::npos) comma = list.size();
      ranks.push_back(to_int(list.substr(pos, comma - pos)));
      pos = comma + 1;
      if (comma == list.size()) break;
    }
    return explicit_signature(static_cast<int32_t>(to_int(*get("p", true))), std::move(ranks));
  }
  throw parse_error("unknown signature family '" + family + "'");
}

}  // namespace eb
