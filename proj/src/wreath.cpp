#include "eb/wreath.hpp"

#include <sstream>

#include "eb/checked.hpp"
#include "eb/farset.hpp"
#include "eb/section.hpp"

namespace eb {

namespace {

// Alphabet codes are base-p digit strings; the group law is digitwise
// addition mod p.
int64_t code_add(int32_t p, int64_t rank, int64_t a, int64_t b) {
  int64_t out = 0, mult = 1;
  for (int64_t i = 0; i < rank; ++i) {
    out += ((a + b) % p) * mult;
    a /= p;
    b /= p;
    mult *= p;
  }
  return out;
}

int64_t code_neg(int32_t p, int64_t rank, int64_t a) {
  int64_t out = 0, mult = 1;
  for (int64_t i = 0; i < rank; ++i) {
    out += ((p - a % p) % p) * mult;
    a /= p;
    mult *= p;
  }
  return out;
}

int64_t code_sub(int32_t p, int64_t rank, int64_t a, int64_t b) { return code_add(p, rank, a, code_neg(p, rank, b)); }

int64_t order_at(const WreathSpec& spec, int64_t level) {
  if (level >= spec.depth()) return 1;
  int64_t below = order_at(spec, level + 1);
  return checked_mul(checked_pow(below, spec.level_size(level)), spec.level_size(level));
}

WreathElem::Node id_node(const WreathSpec& spec, int64_t level) {
  WreathElem::Node node;
  if (level + 1 < spec.depth()) node.base.assign(static_cast<size_t>(spec.level_size(level)), id_node(spec, level + 1));
  else if (level < spec.depth() && level + 1 == spec.depth()) node.base.clear();
  return node;
}

WreathElem::Node mul_node(const WreathSpec& spec, int64_t level, const WreathElem::Node& a,
                          const WreathElem::Node& b) {
  WreathElem::Node out;
  int64_t rank = spec.level_rank(level);
  int64_t size = spec.level_size(level);
  out.top = code_add(spec.p, rank, a.top, b.top);
  if (level + 1 < spec.depth()) {
    out.base.resize(static_cast<size_t>(size));
    for (int64_t x = 0; x < size; ++x) {
      int64_t shifted = code_add(spec.p, rank, x, a.top);
      out.base[static_cast<size_t>(x)] =
          mul_node(spec, level + 1, a.base[static_cast<size_t>(x)], b.base[static_cast<size_t>(shifted)]);
    }
  }
  return out;
}

WreathElem::Node inv_node(const WreathSpec& spec, int64_t level, const WreathElem::Node& a) {
  WreathElem::Node out;
  int64_t rank = spec.level_rank(level);
  int64_t size = spec.level_size(level);
  out.top = code_neg(spec.p, rank, a.top);
  if (level + 1 < spec.depth()) {
    out.base.resize(static_cast<size_t>(size));
    for (int64_t x = 0; x < size; ++x) {
      int64_t src = code_sub(spec.p, rank, x, a.top);
      out.base[static_cast<size_t>(x)] = inv_node(spec, level + 1, a.base[static_cast<size_t>(src)]);
    }
  }
  return out;
}

bool is_id_node(const WreathElem::Node& n) {
  if (n.top != 0) return false;
  for (const auto& c : n.base)
    if (!is_id_node(c)) return false;
  return true;
}

WreathElem::Node node_by_index(const WreathSpec& spec, int64_t level, int64_t index) {
  WreathElem::Node node;
  if (level >= spec.depth()) return node;
  int64_t size = spec.level_size(level);
  node.top = index % size;
  index /= size;
  if (level + 1 < spec.depth()) {
    int64_t below = order_at(spec, level + 1);
    node.base.resize(static_cast<size_t>(size));
    for (int64_t x = 0; x < size; ++x) {
      node.base[static_cast<size_t>(x)] = node_by_index(spec, level + 1, index % below);
      index /= below;
    }
  }
  return node;
}

void format_node(const WreathElem::Node& n, std::ostringstream& os) {
  os << '(' << n.top;
  if (!n.base.empty()) {
    os << ",[";
    for (size_t i = 0; i < n.base.size(); ++i) {
      if (i) os << ',';
      format_node(n.base[i], os);
    }
    os << ']';
  }
  os << ')';
}

}  // namespace

int64_t WreathSpec::level_size(int64_t i) const { return checked_pow(p, level_rank(i)); }

int64_t wreath_order(const WreathSpec& spec) { return order_at(spec, 0); }

WreathElem w_id(const WreathSpec& spec) {
  WreathElem e;
  e.spec = spec;
  if (spec.depth() > 0) e.root = id_node(spec, 0);
  return e;
}

WreathElem w_mul(const WreathElem& a, const WreathElem& b) {
  if (!(a.spec == b.spec)) throw shape_mismatch("w_mul: spec mismatch");
  WreathElem out;
  out.spec = a.spec;
  if (a.spec.depth() > 0) out.root = mul_node(a.spec, 0, a.root, b.root);
  return out;
}

WreathElem w_inv(const WreathElem& a) {
  WreathElem out;
  out.spec = a.spec;
  if (a.spec.depth() > 0) out.root = inv_node(a.spec, 0, a.root);
  return out;
}

bool w_is_id(const WreathElem& a) { return a.spec.depth() == 0 || is_id_node(a.root); }

std::string w_format(const WreathElem& a) {
  if (a.spec.depth() == 0) return "()";
  std::ostringstream os;
  format_node(a.root, os);
  return os.str();
}

void enumerate_group(const WreathSpec& spec, int64_t cap, const std::function<void(const WreathElem&)>& fn) {
  int64_t order = wreath_order(spec);
  if (order > cap) throw cap_exceeded("wreath group order above cap");
  for (int64_t idx = 0; idx < order; ++idx) {
    WreathElem e;
    e.spec = spec;
    if (spec.depth() > 0) e.root = node_by_index(spec, 0, idx);
    fn(e);
  }
}

int64_t engel_class_pair(const WreathElem& g, const WreathElem& h, int64_t limit) {
  WreathElem cur = g;
  if (w_is_id(cur)) return 0;
  WreathElem hi = w_inv(h);
  for (int64_t k = 1; k <= limit; ++k) {
    cur = w_mul(w_mul(w_inv(cur), hi), w_mul(cur, h));
    if (w_is_id(cur)) return k;
  }
  return -1;
}

EngelBoundReport verify_engel_bound(const WreathSpec& spec, int64_t cap) {
  EngelBoundReport rep;
  rep.bound = (checked_pow(spec.p, spec.depth()) - 1) / (spec.p - 1);
  std::vector<WreathElem> all;
  enumerate_group(spec, cap, [&](const WreathElem& e) { all.push_back(e); });
  for (const auto& g : all) {
    for (const auto& h : all) {
      ++rep.pairs;
      int64_t k = engel_class_pair(g, h, rep.bound);
      if (k < 0) {
        ++rep.violations;
        if (rep.witness_g.empty()) {
          rep.witness_g = w_format(g);
          rep.witness_h = w_format(h);
        }
      } else if (k > rep.observed_max) {
        rep.observed_max = k;
        rep.witness_g = w_format(g);
        rep.witness_h = w_format(h);
      }
    }
  }
  return rep;
}

CyclicWreathElem cw_id(int32_t p, int64_t comp_rank, int64_t m) {
  CyclicWreathElem e;
  e.p = p;
  e.comp_rank = comp_rank;
  e.m = m;
  e.base.assign(static_cast<size_t>(m), fp_zero(p, comp_rank));
  return e;
}

CyclicWreathElem cw_mul(const CyclicWreathElem& a, const CyclicWreathElem& b) {
  if (a.p != b.p || a.comp_rank != b.comp_rank || a.m != b.m) throw shape_mismatch("cw_mul: spec mismatch");
  CyclicWreathElem out = cw_id(a.p, a.comp_rank, a.m);
  for (int64_t x = 0; x < a.m; ++x)
    out.base[static_cast<size_t>(x)] =
        vec_add(a.base[static_cast<size_t>(x)], b.base[static_cast<size_t>((x + a.top) % a.m)]);
  out.top = (a.top + b.top) % a.m;
  return out;
}

CyclicWreathElem cw_inv(const CyclicWreathElem& a) {
  CyclicWreathElem out = cw_id(a.p, a.comp_rank, a.m);
  out.top = (a.m - a.top) % a.m;
  for (int64_t x = 0; x < a.m; ++x)
    out.base[static_cast<size_t>(x)] = vec_neg(a.base[static_cast<size_t>(((x - a.top) % a.m + a.m) % a.m)]);
  return out;
}

bool cw_is_id(const CyclicWreathElem& a) {
  if (a.top != 0) return false;
  for (const auto& c : a.base)
    if (!c.is_zero()) return false;
  return true;
}

bool abelian_wreath_check(int32_t p, int64_t top_exponent, int64_t comp_rank,
                          const std::vector<FpVector>& g_tuple, const std::vector<FpVector>& h_tuple) {
  int64_t m = checked_pow(p, top_exponent);
  if (static_cast<int64_t>(g_tuple.size()) != m || static_cast<int64_t>(h_tuple.size()) != m)
    throw precondition_error("abelian_wreath_check: tuples must have p^r components");
  CyclicWreathElem g = cw_id(p, comp_rank, m);
  g.base = g_tuple;
  CyclicWreathElem h = cw_id(p, comp_rank, m);
  h.base = h_tuple;
  h.top = 1 % m;
  CyclicWreathElem cur = g;
  CyclicWreathElem hi = cw_inv(h);
  for (int64_t k = 0; k < m; ++k) cur = cw_mul(cw_mul(cw_inv(cur), hi), cw_mul(cur, h));
  return cw_is_id(cur);
}

bool component_formula_check(int32_t p, int64_t comp_rank, int64_t m, const FpVector& g, int64_t n, int64_t x) {
  if (x < 0 || x >= m) throw precondition_error("component_formula_check: x out of range");
  CyclicWreathElem u = cw_id(p, comp_rank, m);
  u.base[0] = g;
  CyclicWreathElem sigma = cw_id(p, comp_rank, m);
  sigma.top = 1 % m;
  CyclicWreathElem cur = u;
  CyclicWreathElem si = cw_inv(sigma);
  for (int64_t k = 0; k < n; ++k) cur = cw_mul(cw_mul(cw_inv(cur), si), cw_mul(cur, sigma));
  // Closed form: component x of (shift - 1)^n applied to the support-at-0
  // tuple, i.e. sum over j = x mod m of (-1)^(n-j) C(n,j).
  int64_t coeff = 0;
  for (int64_t j = x; j <= n; j += m) {
    int64_t c = checked_binom(n, j) % p;
    if ((n - j) % 2 == 1) c = -c;
    coeff = (coeff + c) % p;
  }
  coeff = ((coeff % p) + p) % p;
  return cur.base[static_cast<size_t>(x)] == vec_scale(g, coeff);
}

WreathSpec quotient_wreath_spec(const TreeSignature& sig, int64_t d, int64_t cap) {
  WreathSpec spec;
  spec.p = sig.p;
  spec.ranks.resize(static_cast<size_t>(d));
  for (int64_t k = 0; k < d; ++k) spec.ranks[static_cast<size_t>(k)] = rank_at(sig, d - 1 - k);
  // The portrait size, not the group order, is what must stay within cap.
  int64_t nodes = 1, layer = 1;
  for (int64_t i = 0; i < d; ++i) {
    layer = checked_mul(layer, spec.level_size(i));
    nodes = checked_add(nodes, layer);
  }
  if (nodes > cap) throw cap_exceeded("quotient portrait above cap");
  return spec;
}

namespace {

WreathElem::Node word_node(const WreathSpec& spec, const TreeSignature& sig, int64_t level, const Word& w) {
  WreathElem::Node node;
  FpVector flv = first_layer_vector(w);
  node.top = vector_code(flv);
  if (level + 1 < spec.depth()) {
    int64_t size = spec.level_size(level);
    node.base.resize(static_cast<size_t>(size));
    for (int64_t x = 0; x < size; ++x) {
      FpVector letter = vector_from_code(sig.p, rank_at(sig, w.base), x);
      node.base[static_cast<size_t>(x)] = word_node(spec, sig, level + 1, section_at_letter(w, letter));
    }
  }
  return node;
}

}  // namespace

WreathElem quotient_to_wreath(const TreeSignature& sig, int64_t d, const Word& w, int64_t cap) {
  if (w.base != 0) throw precondition_error("quotient_to_wreath: word must live at the root level");
  WreathElem e;
  e.spec = quotient_wreath_spec(sig, d, cap);
  if (d > 0) e.root = word_node(e.spec, sig, 0, normalize(w));
  return e;
}

std::string format_wreath_spec(const WreathSpec& spec) {
  std::ostringstream os;
  os << "wreath:p=" << spec.p << ",ranks=";
  for (size_t i = 0; i < spec.ranks.size(); ++i) {
    if (i) os << ',';
    os << spec.ranks[i];
  }
  return os.str();
}

WreathSpec parse_wreath_spec(const std::string& text) {
  const std::string prefix = "wreath:";
  if (text.rfind(prefix, 0) != 0) throw parse_error("wreath spec must start with 'wreath:'");
  std::string body = text.substr(prefix.size());
  WreathSpec spec;
  size_t pos = 0;
  bool have_p = false;
  while (pos < body.size()) {
    size_t eq = body.find('=', pos);
    if (eq == std::string::npos) throw parse_error("wreath spec needs key=value pairs");
    std::string key = body.substr(pos, eq - pos);
    if (key == "p") {
      size_t comma = body.find(',', eq + 1);
      if (comma == std::string::npos) comma = body.size();
      spec.p = static_cast<int32_t>(std::stol(body.substr(eq + 1, comma - eq - 1)));
      have_p = true;
      pos = comma == body.size() ? comma : comma + 1;
    } else if (key == "ranks") {
      size_t cur = eq + 1;
      while (cur <= body.size()) {
        size_t comma = body.find(',', cur);
        if (comma == std::string::npos) comma = body.size();
        spec.ranks.push_back(std::stoll(body.substr(cur, comma - cur)));
        cur = comma + 1;
        if (comma == body.size()) break;
      }
      pos = body.size();
    } else {
      throw parse_error("unknown wreath key '" + key + "'");
    }
  }
  if (!have_p || spec.ranks.empty()) throw parse_error("wreath spec needs p and ranks");
  return spec;
}

}  // namespace eb
