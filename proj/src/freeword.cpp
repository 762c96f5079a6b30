#include "eb/freeword.hpp"

#include <cctype>
#include <sstream>

namespace eb {

FreeWord free_reduce(FreeWord w) {
  std::vector<FreeLetter> stack;
  for (const auto& l : w.letters) {
    if (!stack.empty() && stack.back().sym == l.sym && stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  w.letters = std::move(stack);
  return w;
}

FreeWord free_commutator() {
  FreeWord w;
  w.arity = 1;
  w.letters = {{0, -1}, {1, -1}, {0, 1}, {1, 1}};
  return w;
}

FreeWord free_power(int64_t p) {
  FreeWord w;
  w.arity = 0;
  int32_t sign = p < 0 ? -1 : 1;
  for (int64_t i = 0; i < (p < 0 ? -p : p); ++i) w.letters.push_back({0, sign});
  return w;
}

FreeWord iterate_word(const FreeWord& w, int64_t n) {
  if (n < 0) throw precondition_error("iterate_word: negative iterate");
  FreeWord cur;
  cur.arity = w.arity;
  cur.letters = {{0, 1}};  // w∘0 = x
  for (int64_t step = 0; step < n; ++step) {
    FreeWord next;
    next.arity = w.arity;
    for (const auto& l : w.letters) {
      if (l.sym != 0) {
        next.letters.push_back(l);
        continue;
      }
      if (l.sign > 0) {
        next.letters.insert(next.letters.end(), cur.letters.begin(), cur.letters.end());
      } else {
        for (auto it = cur.letters.rbegin(); it != cur.letters.rend(); ++it)
          next.letters.push_back({it->sym, -it->sign});
      }
    }
    cur = free_reduce(std::move(next));
  }
  return cur;
}

SymbolCounts counts(const FreeWord& w) {
  SymbolCounts c;
  c.a_i.assign(static_cast<size_t>(w.arity), 0);
  for (const auto& l : w.letters) {
    if (l.sym == 0) {
      ++c.a;
    } else {
      ++c.a_i[static_cast<size_t>(l.sym - 1)];
    }
  }
  return c;
}

int64_t length_bound(const FreeWord& w, int64_t n, int64_t len_g, const std::vector<int64_t>& len_h) {
  if (static_cast<int32_t>(len_h.size()) != w.arity) throw arity_mismatch("length_bound: wrong number of lengths");
  for (int64_t l : len_h)
    if (l < 0) throw precondition_error("length_bound: negative length");
  if (len_g < 0) throw precondition_error("length_bound: negative length");
  SymbolCounts c = counts(w);
  int64_t s = 0;
  for (size_t j = 0; j < len_h.size(); ++j) s = checked_add(s, checked_mul(c.a_i[j], len_h[j]));
  int64_t total = 0;
  int64_t a_pow = 1;
  for (int64_t i = 0; i <= n; ++i) {
    total = checked_add(total, checked_mul(a_pow, s));
    if (i < n) a_pow = checked_mul(a_pow, c.a);
  }
  return checked_add(checked_mul(a_pow, len_g), total);
}

std::string format_free_word(const FreeWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters) {
    if (!first) os << ' ';
    first = false;
    if (l.sym == 0) {
      os << (l.sign > 0 ? 'x' : 'X');
    } else {
      os << (l.sign > 0 ? 'y' : 'Y') << l.sym;
    }
  }
  return os.str();
}

FreeWord parse_free_word(const std::string& text) {
  FreeWord w;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    char c = text[pos++];
    FreeLetter l;
    if (c == 'x' || c == 'X') {
      l.sym = 0;
      l.sign = c == 'x' ? 1 : -1;
    } else if (c == 'y' || c == 'Y') {
      l.sign = c == 'y' ? 1 : -1;
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw parse_error("y-letter needs an index in '" + text + "'");
      l.sym = static_cast<int32_t>(std::stol(text.substr(start, pos - start)));
      if (l.sym < 1) throw parse_error("y-index must be >= 1");
      w.arity = std::max(w.arity, l.sym);
    } else {
      throw parse_error("free-word letters are x, X, y<i>, Y<i>");
    }
    w.letters.push_back(l);
  }
  return free_reduce(std::move(w));
}

}  // namespace eb
