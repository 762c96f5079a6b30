#include "eb/section.hpp"

#include <algorithm>

namespace eb {

const std::vector<FpVector>& regular_basis(const TreeSignature& sig) {
  if (sig.family != Family::Regular) throw family_error("regular_basis: not a regular signature");
  return choose_basis_V(sig.p, sig.regular_rank);
}

Word letter_section(const TreeSignature& sig, const GenLetter& l, const FpVector& x) {
  int64_t n = l.level;
  if (x.p != sig.p || x.rank != rank_at(sig, n)) throw shape_mismatch("letter_section: x not in X_n");
  Word out = empty_word(sig, n + 1);
  if (l.kind == GenLetter::Kind::Rooted) return out;
  if (x.is_zero()) {
    out.letters.push_back(GenLetter::b(n + 1, sig.p, l.exp));
    return out;
  }
  switch (sig.family) {
    case Family::Growing: {
      if (is_far(sig, n, x)) {
        FpVector e = fp_unit(sig.p, rank_at(sig, n + 1), far_index(sig, n, x), l.exp);
        out.letters.push_back(GenLetter::rooted(n + 1, std::move(e)));
      }
      return out;
    }
    case Family::Regular: {
      const auto& basis = regular_basis(sig);
      for (size_t i = 0; i < basis.size(); ++i) {
        if (x == basis[i]) {
          out.letters.push_back(
              GenLetter::rooted(n + 1, fp_unit(sig.p, sig.regular_rank, static_cast<int64_t>(i), l.exp)));
          return out;
        }
      }
      return out;
    }
    case Family::Explicit:
      throw family_error("b-letters are not defined over explicit signatures");
  }
  throw error("unreachable");
}

Word section_at_letter(const Word& w, const FpVector& x) {
  Word out = empty_word(w.sig, w.base + 1);
  FpVector cur = x;
  for (const auto& l : w.letters) {
    if (l.kind == GenLetter::Kind::B) {
      Word piece = letter_section(w.sig, l, cur);
      out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
    } else {
      cur = vec_add(cur, l.vec);
    }
  }
  return normalize(out);
}

Vertex act(const Word& w, const Vertex& u) {
  if (u.base != w.base) throw shape_mismatch("act: vertex base differs from word base");
  if (u.letters.empty()) return u;
  Vertex out = root_vertex(u.sig, u.base);
  out.letters.reserve(u.letters.size());
  Word cur = w;
  for (size_t i = 0; i < u.letters.size(); ++i) {
    const FpVector& x = u.letters[i];
    out.letters.push_back(vec_add(x, first_layer_vector(cur)));
    if (i + 1 < u.letters.size()) cur = section_at_letter(cur, x);
  }
  return out;
}

Word section(const Word& w, const Vertex& u) {
  if (u.base != w.base) throw shape_mismatch("section: vertex base differs from word base");
  Word cur = normalize(w);
  for (const auto& x : u.letters) cur = section_at_letter(cur, x);
  return cur;
}

ActiveDecomposition active_letters(const Word& w) {
  ActiveDecomposition dec;
  dec.trailing = fp_zero(w.sig.p, rank_at(w.sig, w.base));
  FpVector prefix = dec.trailing;
  for (const auto& l : w.letters) {
    if (l.kind == GenLetter::Kind::Rooted) {
      prefix = vec_add(prefix, l.vec);
    } else {
      dec.factors.push_back({vec_neg(prefix), l.exp});
    }
  }
  dec.trailing = prefix;
  for (const auto& f : dec.factors) {
    bool seen = false;
    for (auto& [off, k] : dec.class_sums) {
      if (off == f.offset) {
        k = static_cast<int32_t>((k + f.exp) % w.sig.p);
        seen = true;
        break;
      }
    }
    if (!seen) {
      dec.b_offsets.push_back(f.offset);
      dec.class_sums.emplace_back(f.offset, static_cast<int32_t>(f.exp % w.sig.p));
    }
  }
  return dec;
}

std::vector<FpVector> active_points(const Word& w, const ActiveDecomposition& dec) {
  std::vector<FpVector> pts = dec.b_offsets;
  if (w.sig.family == Family::Regular) {
    for (const auto& y : dec.b_offsets) {
      for (const auto& v : regular_basis(w.sig)) {
        FpVector x = vec_add(y, v);
        if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(std::move(x));
      }
    }
  }
  return pts;
}

}  // namespace eb
