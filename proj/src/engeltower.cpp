#include "eb/engeltower.hpp"

namespace eb {

namespace {

bool trivial_in_mode(const Word& w, const TrivMode& mode, bool* budget_blew) {
  if (mode.kind == TrivMode::Kind::Depth) return is_trivial_to_depth(w, mode.depth);
  TrivialityVerdict v = prove_trivial(w, mode.budget, mode.depth_cap);
  if (v.kind == TrivialityVerdict::Kind::Proven) return true;
  if (v.kind == TrivialityVerdict::Kind::RefutedAt) return false;
  if (budget_blew) *budget_blew = true;
  return false;
}

}  // namespace

TowerResult engel_tower(const Word& g, const Word& h, int64_t limit, const TrivMode& mode) {
  TowerResult res;
  Word cur = normalize(g);
  Word hn = normalize(h);
  for (int64_t n = 0; n <= limit; ++n) {
    bool budget_blew = false;
    bool trivial = trivial_in_mode(cur, mode, &budget_blew);
    res.trace.push_back("n=" + std::to_string(n) + (trivial ? " trivial" : " nontrivial") +
                        ", letters=" + std::to_string(cur.letters.size()));
    if (budget_blew) {
      res.kind = TowerResult::Kind::BudgetExhausted;
      res.index = n;
      return res;
    }
    if (trivial) {
      res.kind = TowerResult::Kind::Found;
      res.index = n;
      return res;
    }
    cur = commutator(cur, hn);
  }
  res.kind = TowerResult::Kind::NotFoundWithin;
  res.index = limit;
  return res;
}

Word stabilized_section(const FreeWord& w, const Word& g, const std::vector<Word>& hs, const Vertex& u,
                        int64_t iterate_count) {
  WordGroup group{g.sig, g.base};
  Word iterate = evaluate(iterate_word(w, iterate_count), g, hs, group);
  if (!is_trivial_to_depth(iterate, u.level()))
    throw not_stabilized("iterate does not stabilize level " + std::to_string(u.level()));
  return section(iterate, u);
}

GrowthResult engel_growth(const TreeSignature& sig, int64_t depth, int64_t radius, int64_t limit, int64_t cap) {
  GrowthResult res;
  GenSetTag tag{GenSetTag::Kind::E, 0};
  std::vector<Word> ball = enumerate_ball(sig, tag, radius, cap);
  // Deduplicate in the depth-d quotient so pairs run over quotient
  // elements rather than spellings.
  std::vector<Word> reps;
  for (const auto& w : ball) {
    bool dup = false;
    for (const auto& other : reps) {
      if (equal_to_depth(w, other, depth)) {
        dup = true;
        break;
      }
    }
    if (!dup) reps.push_back(w);
  }
  bool any_nonidentity = false;
  for (const auto& g : reps) {
    if (!is_trivial_to_depth(g, depth)) any_nonidentity = true;
  }
  if (!any_nonidentity) {
    res.value = 0;  // identity-only ball, by convention
    return res;
  }
  for (const auto& g : reps) {
    for (const auto& h : reps) {
      ++res.pairs;
      Word cur = commutator(g, h);
      int64_t k = 1;
      while (!is_trivial_to_depth(cur, depth)) {
        if (++k > limit) {
          res.found = false;
          res.witness_g = format_word(g);
          res.witness_h = format_word(h);
          res.value = limit;
          return res;
        }
        cur = commutator(cur, h);
      }
      if (k > res.value) {
        res.value = k;
        res.witness_g = format_word(g);
        res.witness_h = format_word(h);
      }
    }
  }
  return res;
}

bool involution_engel_check(const Word& g, const Word& h, int64_t n, int64_t depth) {
  if (!is_trivial_to_depth(word_mul(h, h), depth))
    throw not_involution("h is not an involution in the depth-" + std::to_string(depth) + " quotient");
  Word lhs = normalize(g);
  for (int64_t i = 0; i < n + 1; ++i) lhs = commutator(lhs, h);
  int64_t e = 1;
  for (int64_t i = 0; i < n; ++i) e *= -2;
  Word rhs = word_pow(commutator(g, h), e);
  return equal_to_depth(lhs, rhs, depth);
}

}  // namespace eb
