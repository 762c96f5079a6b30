#include "eb/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace eb {

Vertex root_vertex(const TreeSignature& sig, int64_t base) {
  Vertex u;
  u.sig = sig;
  u.base = base;
  return u;
}

Vertex vertex_extend(const Vertex& u, const FpVector& letter) {
  int64_t level = u.base + u.level();
  if (letter.p != u.sig.p || letter.rank != rank_at(u.sig, level))
    throw shape_mismatch("vertex_extend: letter not in X_" + std::to_string(level));
  Vertex out = u;
  out.letters.push_back(letter);
  return out;
}

std::string format_vertex(const Vertex& u) {
  std::string out;
  for (const auto& l : u.letters) out += format_vector(l);
  return out;
}

Vertex parse_vertex(const std::string& text, const TreeSignature& sig, int64_t base) {
  Vertex u = root_vertex(sig, base);
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    char open = text[pos];
    char close = open == '[' ? ']' : '}';
    if (open != '[' && open != '{') throw parse_error("vertex letters must be bracketed vectors");
    size_t end = text.find(close, pos);
    if (end == std::string::npos) throw parse_error("unterminated vector in vertex '" + text + "'");
    int64_t level = base + u.level();
    u.letters.push_back(parse_vector(text.substr(pos, end - pos + 1), sig.p, rank_at(sig, level)));
    pos = end + 1;
  }
  return u;
}

std::string vertex_key(const Vertex& u) {
  std::string key = "V" + std::to_string(u.base) + "|";
  for (const auto& l : u.letters) append_key(key, l);
  return key;
}

Word empty_word(const TreeSignature& sig, int64_t base) {
  Word w;
  w.sig = sig;
  w.base = base;
  return w;
}

Word single_letter(const TreeSignature& sig, int64_t base, GenLetter letter) {
  Word w = empty_word(sig, base);
  w.letters.push_back(std::move(letter));
  return normalize(w);
}

Word normalize(const Word& w) {
  Word out = empty_word(w.sig, w.base);
  auto push = [&](const GenLetter& l) {
    if (l.level != w.base) throw shape_mismatch("normalize: letter level differs from word base");
    GenLetter cur = l;
    while (true) {
      if (cur.kind == GenLetter::Kind::Rooted && cur.vec.is_zero()) return;
      if (cur.kind == GenLetter::Kind::B && cur.exp == 0) return;
      if (out.letters.empty() || out.letters.back().kind != cur.kind) break;
      GenLetter top = out.letters.back();
      out.letters.pop_back();
      if (cur.kind == GenLetter::Kind::Rooted) {
        cur.vec = vec_add(top.vec, cur.vec);
      } else {
        cur = GenLetter::b(cur.level, w.sig.p, static_cast<int64_t>(top.exp) + cur.exp);
      }
    }
    out.letters.push_back(cur);
  };
  for (const auto& l : w.letters) push(l);
  return out;
}

Word inverse(const Word& w) {
  Word out = empty_word(w.sig, w.base);
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (it->kind == GenLetter::Kind::Rooted) {
      out.letters.push_back(GenLetter::rooted(it->level, vec_neg(it->vec)));
    } else {
      out.letters.push_back(GenLetter::b(it->level, w.sig.p, -static_cast<int64_t>(it->exp)));
    }
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  if (a.base != b.base || a.sig.p != b.sig.p) throw shape_mismatch("concat: base level mismatch");
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word word_mul(const Word& a, const Word& b) { return normalize(concat(a, b)); }

Word conjugate(const Word& g, const Word& by) { return normalize(concat(concat(inverse(by), g), by)); }

Word commutator(const Word& a, const Word& b) {
  return normalize(concat(concat(inverse(a), inverse(b)), concat(a, b)));
}

Word word_pow(const Word& w, int64_t e) {
  Word base = e < 0 ? inverse(w) : w;
  int64_t reps = e < 0 ? -e : e;
  Word out = empty_word(w.sig, w.base);
  for (int64_t i = 0; i < reps; ++i) out = concat(out, base);
  return normalize(out);
}

FpVector first_layer_vector(const Word& w) {
  FpVector sum = fp_zero(w.sig.p, rank_at(w.sig, w.base));
  for (const auto& l : w.letters)
    if (l.kind == GenLetter::Kind::Rooted) sum = vec_add(sum, l.vec);
  return sum;
}

bool words_identical(const Word& a, const Word& b) {
  return a.base == b.base && a.letters == b.letters;
}

std::string word_key(const Word& w, bool level_invariant) {
  std::string key = level_invariant ? std::string("W*|") : "W" + std::to_string(w.base) + "|";
  for (const auto& l : w.letters) {
    if (l.kind == GenLetter::Kind::B) {
      key += 'b';
      key += std::to_string(l.exp);
      key += ';';
    } else {
      key += 'r';
      append_key(key, l.vec);
    }
  }
  return key;
}

std::string format_word(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters) {
    if (!first) os << ' ';
    first = false;
    if (l.kind == GenLetter::Kind::B) {
      os << 'b' << l.level;
      if (l.exp != 1) os << '^' << l.exp;
    } else {
      os << 'r' << l.level << ':' << format_vector(l.vec);
    }
  }
  return os.str();
}

namespace {

int64_t parse_int_at(const std::string& s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  int64_t value = 0;
  auto res = std::from_chars(s.data() + start, s.data() + pos, value);
  if (res.ec != std::errc() || pos == start) throw parse_error("expected integer in word '" + s + "'");
  return value;
}

}  // namespace

Word parse_word(const std::string& text, const TreeSignature& sig, int64_t base) {
  Word w = empty_word(sig, base);
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    char kind = text[pos];
    if (kind != 'b' && kind != 'r') throw parse_error("word term must start with 'b' or 'r': '" + text + "'");
    ++pos;
    int64_t level = parse_int_at(text, pos);
    if (level != base) throw parse_error("letter level " + std::to_string(level) + " differs from word base " +
                                         std::to_string(base));
    if (kind == 'b') {
      if (sig.family == Family::Explicit)
        throw family_error("b-letters are defined for growing and regular signatures only");
      int64_t exp = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        exp = parse_int_at(text, pos);
      }
      w.letters.push_back(GenLetter::b(level, sig.p, exp));
    } else {
      if (pos >= text.size() || text[pos] != ':') throw parse_error("rooted term needs ':VEC' in '" + text + "'");
      ++pos;
      if (pos >= text.size() || (text[pos] != '[' && text[pos] != '{'))
        throw parse_error("rooted term needs a vector in '" + text + "'");
      char close = text[pos] == '[' ? ']' : '}';
      size_t end = text.find(close, pos);
      if (end == std::string::npos) throw parse_error("unterminated vector in '" + text + "'");
      FpVector v = parse_vector(text.substr(pos, end - pos + 1), sig.p, rank_at(sig, level));
      pos = end + 1;
      int64_t exp = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        exp = parse_int_at(text, pos);
      }
      w.letters.push_back(GenLetter::rooted(level, vec_scale(v, exp)));
    }
  }
  return normalize(w);
}

}  // namespace eb
