#include "eb/genset.hpp"

#include "eb/checked.hpp"

namespace eb {

int64_t word_length(const Word& w, const GenSetTag& tag) {
  Word nw = normalize(w);
  if (nw.base != tag.level) throw shape_mismatch("word_length: tag level differs from word base");
  if (tag.kind == GenSetTag::Kind::E) {
    int64_t len = 0;
    for (const auto& l : nw.letters)
      len += (l.kind == GenLetter::Kind::B) ? 1 : e_length(l.vec);
    return len;
  }
  ActiveDecomposition dec = active_letters(nw);
  return static_cast<int64_t>(dec.factors.size()) + (dec.trailing.is_zero() ? 0 : 1);
}

std::vector<GenLetter> e_alphabet(const TreeSignature& sig, int64_t level) {
  std::vector<GenLetter> out;
  int64_t rank = rank_at(sig, level);
  if (rank > 4096) throw cap_exceeded("e_alphabet: rank too large to materialize");
  for (int32_t k = 1; k < sig.p; ++k)
    if (sig.family != Family::Explicit) out.push_back(GenLetter::b(level, sig.p, k));
  for (int64_t i = 0; i < rank; ++i)
    for (int32_t k = 1; k < sig.p; ++k)
      out.push_back(GenLetter::rooted(level, fp_unit(sig.p, rank, i, k)));
  return out;
}

int64_t e_alphabet_size(const TreeSignature& sig, int64_t level) {
  int64_t b_part = sig.family != Family::Explicit ? sig.p - 1 : 0;
  return checked_add(b_part, checked_mul(rank_at(sig, level), sig.p - 1));
}

std::vector<Word> e_generators(const TreeSignature& sig, int64_t level) {
  std::vector<Word> out;
  for (const auto& l : e_alphabet(sig, level)) out.push_back(single_letter(sig, level, l));
  return out;
}

int64_t ball_sequence_count(const TreeSignature& sig, const GenSetTag& tag, int64_t radius) {
  int64_t alpha;
  if (tag.kind == GenSetTag::Kind::E) {
    alpha = e_alphabet_size(sig, tag.level);
  } else {
    int64_t x_size = checked_pow(sig.p, rank_at(sig, tag.level));
    alpha = checked_add(checked_mul(x_size, sig.p - 1), x_size - 1);
  }
  int64_t total = 1, layer = 1;
  for (int64_t k = 0; k < radius; ++k) {
    layer = checked_mul(layer, alpha);
    total = checked_add(total, layer);
  }
  return total;
}

void for_each_ball_word(const TreeSignature& sig, int64_t level, int64_t radius, int64_t cap,
                        const std::function<void(const Word&)>& fn) {
  GenSetTag tag{GenSetTag::Kind::E, level};
  if (ball_sequence_count(sig, tag, radius) > cap)
    throw cap_exceeded("ball enumeration above cap; use sampling");
  std::vector<GenLetter> alpha = e_alphabet(sig, level);
  std::vector<size_t> odometer;
  Word w = empty_word(sig, level);
  fn(w);
  for (int64_t len = 1; len <= radius; ++len) {
    odometer.assign(static_cast<size_t>(len), 0);
    while (true) {
      w.letters.clear();
      for (size_t digit : odometer) w.letters.push_back(alpha[digit]);
      fn(normalize(w));
      size_t pos = odometer.size();
      while (pos > 0) {
        if (++odometer[pos - 1] < alpha.size()) break;
        odometer[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
}

std::vector<Word> enumerate_ball(const TreeSignature& sig, const GenSetTag& tag, int64_t radius, int64_t cap) {
  std::vector<Word> out;
  if (tag.kind == GenSetTag::Kind::E) {
    for_each_ball_word(sig, tag.level, radius, cap, [&](const Word& w) { out.push_back(w); });
    return out;
  }
  // S-alphabet: conjugated b-powers and all rooted vectors; only feasible
  // over tiny alphabets.
  int64_t rank = rank_at(sig, tag.level);
  if (ball_sequence_count(sig, tag, radius) > cap) throw cap_exceeded("S-ball enumeration above cap");
  std::vector<Word> alpha;
  for (const auto& y : enumerate_vectors(sig.p, rank, cap)) {
    for (int32_t k = 1; k < sig.p; ++k) {
      Word b = single_letter(sig, tag.level, GenLetter::b(tag.level, sig.p, k));
      alpha.push_back(conjugate(b, single_letter(sig, tag.level, GenLetter::rooted(tag.level, y))));
    }
    if (!y.is_zero()) alpha.push_back(single_letter(sig, tag.level, GenLetter::rooted(tag.level, y)));
  }
  std::vector<size_t> odometer;
  out.push_back(empty_word(sig, tag.level));
  for (int64_t len = 1; len <= radius; ++len) {
    odometer.assign(static_cast<size_t>(len), 0);
    while (true) {
      Word w = empty_word(sig, tag.level);
      for (size_t digit : odometer) w = concat(w, alpha[digit]);
      out.push_back(normalize(w));
      size_t pos = odometer.size();
      while (pos > 0) {
        if (++odometer[pos - 1] < alpha.size()) break;
        odometer[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  return out;
}

FpVector sample_vector(const TreeSignature& sig, int64_t level, std::mt19937_64& rng) {
  int64_t rank = rank_at(sig, level);
  FpVector v(sig.p, rank);
  std::uniform_int_distribution<int32_t> coord(0, sig.p - 1);
  for (int64_t i = 0; i < rank; ++i) {
    int32_t c = coord(rng);
    if (c != 0) v.coords.emplace_back(i, c);
  }
  return v;
}

Vertex sample_vertex(const TreeSignature& sig, int64_t base, int64_t depth, std::mt19937_64& rng) {
  Vertex u = root_vertex(sig, base);
  for (int64_t i = 0; i < depth; ++i) u.letters.push_back(sample_vector(sig, base + i, rng));
  return u;
}

Word sample_ball_word(const TreeSignature& sig, const GenSetTag& tag, int64_t radius, std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> len_dist(0, radius);
  int64_t len = len_dist(rng);
  Word w = empty_word(sig, tag.level);
  if (tag.kind == GenSetTag::Kind::E) {
    std::vector<GenLetter> alpha = e_alphabet(sig, tag.level);
    std::uniform_int_distribution<size_t> pick(0, alpha.size() - 1);
    for (int64_t i = 0; i < len; ++i) w.letters.push_back(alpha[pick(rng)]);
    return normalize(w);
  }
  std::uniform_int_distribution<int32_t> exp_dist(1, sig.p - 1);
  std::uniform_int_distribution<int32_t> type_dist(0, 1);
  for (int64_t i = 0; i < len; ++i) {
    FpVector y = sample_vector(sig, tag.level, rng);
    if (type_dist(rng) == 0) {
      Word b = single_letter(sig, tag.level, GenLetter::b(tag.level, sig.p, exp_dist(rng)));
      w = concat(w, conjugate(b, single_letter(sig, tag.level, GenLetter::rooted(tag.level, y))));
    } else {
      w.letters.push_back(GenLetter::rooted(tag.level, y));
    }
  }
  return normalize(w);
}

std::vector<Word> sample_ball(const TreeSignature& sig, const GenSetTag& tag, int64_t radius, int64_t count,
                              uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Word> out;
  out.reserve(static_cast<size_t>(count));
  for (int64_t i = 0; i < count; ++i) out.push_back(sample_ball_word(sig, tag, radius, rng));
  return out;
}

}  // namespace eb
