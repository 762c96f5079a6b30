#include "eb/orbit.hpp"

#include <deque>
#include <unordered_set>

namespace eb {

OrbitResult orbit(const Vertex& u, const std::vector<Word>& gens, int64_t cap) {
  OrbitResult res;
  std::vector<Word> step;
  for (const auto& g : gens) {
    step.push_back(normalize(g));
    step.push_back(inverse(step.back()));
  }
  std::deque<Vertex> queue{u};
  std::unordered_set<std::string> seen{vertex_key(u)};
  while (!queue.empty()) {
    Vertex cur = std::move(queue.front());
    queue.pop_front();
    res.elements.push_back(cur);
    if (static_cast<int64_t>(res.elements.size()) + static_cast<int64_t>(queue.size()) > cap) {
      res.cap_exceeded = true;
      return res;
    }
    for (const auto& g : step) {
      Vertex img = act(g, cur);
      if (seen.insert(vertex_key(img)).second) queue.push_back(std::move(img));
    }
  }
  return res;
}

int64_t cyclic_orbit_size(const Word& g, const Vertex& u, int64_t cap) {
  Word gn = normalize(g);
  Vertex cur = act(gn, u);
  int64_t n = 1;
  while (!(cur == u)) {
    if (++n > cap) return -1;
    cur = act(gn, cur);
  }
  return n;
}

namespace {

// hat_rooted(v, x): a word fixing v whose section at v is the rooted
// letter x; hat_b(v): same with section b_{|v|}. Both follow the scheme
// b-hat^{x-hat}|_u = b_{n} and b-hat^{(x-f)-hat}|_u = e_f.
Word hat_rooted(const TreeSignature& sig, const Vertex& v, const FpVector& x);

Word hat_b(const TreeSignature& sig, const Vertex& v, int32_t exp) {
  if (v.letters.empty()) return single_letter(sig, v.base, GenLetter::b(v.base, sig.p, exp));
  Vertex parent = v;
  FpVector last = parent.letters.back();
  parent.letters.pop_back();
  Word inner = hat_b(sig, parent, exp);
  Word carrier = hat_rooted(sig, parent, last);
  return conjugate(inner, carrier);
}

Word hat_rooted(const TreeSignature& sig, const Vertex& v, const FpVector& x) {
  int64_t level = v.base + v.level();
  if (x.rank != rank_at(sig, level)) throw shape_mismatch("hat_rooted: letter rank mismatch");
  if (v.letters.empty()) return single_letter(sig, v.base, GenLetter::rooted(v.base, x));
  Vertex parent = v;
  FpVector last = parent.letters.back();
  parent.letters.pop_back();
  // Decompose x over the level basis; each axis e_label^c is realized as
  // (b-hat^c) conjugated by (last - label)-hat.
  Word out = empty_word(sig, v.base);
  for (const auto& [index, coeff] : x.coords) {
    FpVector label;
    if (sig.family == Family::Regular) {
      label = regular_basis(sig)[static_cast<size_t>(index)];
    } else {
      label = far_by_index(sig, level - 1, index);
    }
    Word b_part = hat_b(sig, parent, coeff);
    Word carrier = hat_rooted(sig, parent, vec_sub(last, label));
    out = concat(out, conjugate(b_part, carrier));
  }
  return normalize(out);
}

}  // namespace

Word fractality_witness(const TreeSignature& sig, const GenLetter& target, const Vertex& u) {
  if (sig.family == Family::Explicit) throw family_error("fractality_witness needs growing or regular signature");
  if (u.base != 0) throw precondition_error("fractality_witness: vertex must start at the root");
  if (target.level != u.level()) throw precondition_error("fractality_witness: target level must equal |u|");
  Word witness;
  if (target.kind == GenLetter::Kind::B) {
    witness = hat_b(sig, u, target.exp);
  } else {
    witness = hat_rooted(sig, u, target.vec);
  }
  if (!(act(witness, u) == u)) throw construction_failed("fractality witness moves the vertex");
  Word target_word = single_letter(sig, target.level, target);
  if (!equal_to_depth(section(witness, u), target_word, 3))
    throw construction_failed("fractality witness has the wrong section");
  return witness;
}

}  // namespace eb
