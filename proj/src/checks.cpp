#include "eb/checks.hpp"

#include <unordered_set>

#include "eb/checked.hpp"

namespace eb {

namespace {

int64_t separation_width(const TreeSignature& sig, int64_t n) {
  return sig.family == Family::Growing ? d_fn(sig, n) : sig.regular_rank;
}

Word b_word(const TreeSignature& sig, int64_t level, int32_t exp = 1) {
  return single_letter(sig, level, GenLetter::b(level, sig.p, exp));
}

enum class SectionShape { Empty, PureB, PureRooted, Mixed };

SectionShape shape_of(const Word& w) {
  bool has_b = false, has_rooted = false;
  for (const auto& l : w.letters) (l.kind == GenLetter::Kind::B ? has_b : has_rooted) = true;
  if (has_b && has_rooted) return SectionShape::Mixed;
  if (has_b) return SectionShape::PureB;
  if (has_rooted) return SectionShape::PureRooted;
  return SectionShape::Empty;
}

// Runs fn over the ball: exhaustively when the sequence count fits the cap,
// otherwise on `sample_count` seeded samples. Returns the mode used.
std::string over_ball(const TreeSignature& sig, int64_t level, int64_t radius, int64_t cap, uint64_t seed,
                      int64_t sample_count, const std::function<void(const Word&)>& fn) {
  bool exhaustive;
  try {
    exhaustive = ball_sequence_count(sig, GenSetTag{GenSetTag::Kind::E, level}, radius) <= cap;
  } catch (const overflow_error&) {
    exhaustive = false;
  }
  if (exhaustive) {
    for_each_ball_word(sig, level, radius, cap, fn);
    return "exhaustive";
  }
  std::mt19937_64 rng(seed);
  GenSetTag tag{GenSetTag::Kind::E, level};
  for (int64_t i = 0; i < sample_count; ++i) fn(sample_ball_word(sig, tag, radius, rng));
  return "sampled";
}

}  // namespace

int64_t depth_estimate(const Word& w, int64_t c, int64_t max_depth) {
  if (c < 1) throw precondition_error("depth_estimate: c must be >= 1");
  std::vector<Word> frontier{normalize(w)};
  for (int64_t m = 0;; ++m) {
    std::vector<Word> next;
    std::unordered_set<std::string> seen;
    bool all_short = true;
    for (const auto& g : frontier) {
      if (word_length(g, GenSetTag{GenSetTag::Kind::S, g.base}) > c) {
        all_short = false;
        ActiveDecomposition dec = active_letters(g);
        for (const auto& x : active_points(g, dec)) {
          Word s = section_at_letter(g, x);
          if (s.letters.empty()) continue;
          if (seen.insert(word_key(s)).second) next.push_back(std::move(s));
        }
      }
    }
    if (all_short) return m;
    if (m >= max_depth) return -1;
    frontier = std::move(next);
  }
}

CheckReport contraction_check(const TreeSignature& sig, int64_t n, int64_t cap, uint64_t seed,
                              int64_t sample_count) {
  if (sig.family != Family::Growing) throw family_error("contraction_check: growing signature only");
  CheckReport rep;
  rep.check = "contraction";
  rep.sig = format_signature(sig);
  rep.level = n;
  rep.seed = seed;
  int64_t d = d_fn(sig, n);
  rep.t = d;
  GenSetTag s_tag{GenSetTag::Kind::S, n + 1};
  GenSetTag e_tag{GenSetTag::Kind::E, n + 2};
  rep.mode = over_ball(sig, n, d, cap, seed, sample_count, [&](const Word& g) {
    ++rep.tested;
    ActiveDecomposition dec = active_letters(g);
    for (const auto& x : dec.b_offsets) {
      Word s = section_at_letter(g, x);
      int64_t slen = word_length(s, s_tag);
      rep.max_section_len = std::max(rep.max_section_len, slen);
      if (slen > 1) {
        rep.violations.push_back({format_word(g), "internal single-level bound: S-length " +
                                                      std::to_string(slen) + " at " + format_vector(x)});
      }
      ActiveDecomposition dec2 = active_letters(s);
      for (const auto& y : dec2.b_offsets) {
        Word s2 = section_at_letter(s, y);
        int64_t elen = word_length(s2, e_tag);
        rep.max_section_len = std::max(rep.max_section_len, elen);
        if (elen > 1) {
          rep.violations.push_back({format_word(g), "two-level E-length " + std::to_string(elen) + " at " +
                                                        format_vector(x) + format_vector(y)});
        }
      }
      // Far-class sections of s are single rooted basis multiples of
      // E-length 1; nothing to check below them.
    }
  });
  rep.note = "sections at far-class letters are single axis letters by construction";
  return rep;
}

CheckReport s_to_e_check(const TreeSignature& sig, int64_t n, int64_t radius, int64_t samples, uint64_t seed) {
  CheckReport rep;
  rep.check = "s-to-e";
  rep.sig = format_signature(sig);
  rep.level = n;
  rep.radius = radius;
  rep.seed = seed;
  rep.mode = "sampled";
  std::mt19937_64 rng(seed);
  GenSetTag s_tag{GenSetTag::Kind::S, n};
  GenSetTag e_tag{GenSetTag::Kind::E, n + 1};
  for (int64_t i = 0; i < samples; ++i) {
    Word g = sample_ball_word(sig, s_tag, radius, rng);
    int64_t slen = word_length(g, s_tag);
    ActiveDecomposition dec = active_letters(g);
    std::vector<FpVector> letters = active_points(g, dec);
    if (sig.family == Family::Growing) {
      // A couple of concrete far-class members per offset.
      for (const auto& y : dec.b_offsets) {
        int64_t fs = far_set_size(sig, n);
        std::uniform_int_distribution<int64_t> pick(0, fs - 1);
        letters.push_back(vec_add(far_by_index(sig, n, pick(rng)), y));
      }
    }
    letters.push_back(sample_vector(sig, n, rng));
    for (const auto& x : letters) {
      ++rep.tested;
      Word s = section_at_letter(g, x);
      int64_t elen = word_length(s, e_tag);
      rep.max_section_len = std::max(rep.max_section_len, elen);
      if (elen > slen) {
        rep.violations.push_back({format_word(g), "E-length " + std::to_string(elen) + " above S-length " +
                                                      std::to_string(slen) + " at " + format_vector(x)});
      }
    }
  }
  return rep;
}

CheckReport separation_check(const TreeSignature& sig, int64_t n, int64_t t, int64_t cap, uint64_t seed,
                             int64_t corollary_samples) {
  if (sig.family == Family::Explicit) throw family_error("separation_check needs growing or regular signature");
  CheckReport rep;
  rep.check = "separation";
  rep.sig = format_signature(sig);
  rep.level = n;
  rep.t = t;
  rep.seed = seed;
  int64_t width = separation_width(sig, n);
  if (2 * t > width) throw precondition_error("separation_check: t must satisfy 2t <= d(n) resp. r");
  const bool growing = sig.family == Family::Growing;
  GenSetTag e_tag{GenSetTag::Kind::E, n};

  auto in_b_zone = [&](int64_t len) { return growing ? len <= t : len < t; };
  auto in_x_zone = [&](int64_t len) { return growing ? len >= width - t : len > width - t; };

  auto verify = [&](const Word& g) {
    ++rep.tested;
    ActiveDecomposition dec = active_letters(g);
    for (const auto& x : active_points(g, dec)) {
      Word s = section_at_letter(g, x);
      int64_t xl = e_length(x);
      switch (shape_of(s)) {
        case SectionShape::Empty:
          break;
        case SectionShape::PureB:
          if (!in_b_zone(xl))
            rep.violations.push_back({format_word(g), "b-section outside the near zone at " + format_vector(x)});
          break;
        case SectionShape::PureRooted:
          if (!in_x_zone(xl))
            rep.violations.push_back({format_word(g), "rooted section outside the far zone at " + format_vector(x)});
          break;
        case SectionShape::Mixed:
          rep.violations.push_back({format_word(g), "mixed section at " + format_vector(x)});
          break;
      }
    }
    if (growing) {
      for (const auto& [y, k] : dec.class_sums) {
        if (k % sig.p == 0) continue;
        // Every member of F(n)+y has E-length >= d(n) - l(y); the class is
        // in the far zone iff l(y) <= t, which the length budget enforces.
        if (e_length(y) > t)
          rep.violations.push_back({format_word(g), "active class offset of E-length above t: " + format_vector(y)});
      }
    }
  };
  rep.mode = over_ball(sig, n, t, cap, seed, 2000, verify);

  // Distance corollary: non-commuting sections force first-layer letters
  // at E-distance >= width - 2t.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  int64_t found = 0, attempts = 0;
  const int64_t max_attempts = corollary_samples * 50 + 100;
  while (found < corollary_samples && attempts < max_attempts) {
    ++attempts;
    Word g = sample_ball_word(sig, e_tag, t, rng);
    Word h = sample_ball_word(sig, e_tag, t, rng);
    ActiveDecomposition dg = active_letters(g);
    ActiveDecomposition dh = active_letters(h);
    if (dg.b_offsets.empty() || dh.b_offsets.empty()) continue;
    std::uniform_int_distribution<size_t> pg(0, dg.b_offsets.size() - 1);
    FpVector y = dg.b_offsets[pg(rng)];
    FpVector z;
    if (growing) {
      std::uniform_int_distribution<size_t> ph(0, dh.b_offsets.size() - 1);
      int64_t fs = far_set_size(sig, n);
      std::uniform_int_distribution<int64_t> pick(0, fs - 1);
      z = vec_add(far_by_index(sig, n, pick(rng)), dh.b_offsets[ph(rng)]);
    } else {
      std::vector<FpVector> pts = active_points(h, dh);
      std::uniform_int_distribution<size_t> ph(0, pts.size() - 1);
      z = pts[ph(rng)];
    }
    Word c = commutator(section_at_letter(g, y), section_at_letter(h, z));
    if (is_trivial_to_depth(c, 2)) continue;
    ++found;
    if (e_length(vec_sub(y, z)) < width - 2 * t) {
      rep.violations.push_back({format_word(g) + " | " + format_word(h),
                                "non-commuting sections at distance below " + std::to_string(width - 2 * t)});
    }
  }
  rep.note = "corollary pairs found: " + std::to_string(found) + "/" + std::to_string(corollary_samples);
  return rep;
}

CheckReport vanishing_commutator_check(const TreeSignature& sig, int64_t n, int64_t t, int64_t cap,
                                       uint64_t seed, int64_t depth) {
  if (sig.family == Family::Explicit) throw family_error("vanishing_commutator_check needs b-letters");
  CheckReport rep;
  rep.check = "vanishing";
  rep.sig = format_signature(sig);
  rep.level = n;
  rep.t = t;
  rep.depth = depth;
  rep.seed = seed;
  int64_t width = separation_width(sig, n);
  if (4 * t > width - 4) throw precondition_error("vanishing_commutator_check: t must satisfy t <= d/4 - 1");
  Word b = b_word(sig, n);
  const bool closure = sig.family == Family::Regular;
  rep.mode = over_ball(sig, n, t, cap, seed, 500, [&](const Word& g) {
    ++rep.tested;
    Word gamma = commutator(commutator(b, g), b);
    bool ok = closure ? prove_trivial(gamma).proven() : is_trivial_to_depth(gamma, depth);
    if (!ok) rep.violations.push_back({format_word(g), "[b,g,b] not trivial"});
  });
  return rep;
}

}  // namespace eb
