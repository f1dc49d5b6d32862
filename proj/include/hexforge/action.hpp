#pragma once
// Left action of generator words on coordinate cosets.
//
// Points are cosets of P1, lines of P6.  The canonical forms (prefix
// root letters, then a reduced Weyl word, then the parabolic) are
//   points: P1; x6(t)s6P1; x1(a)x2(t)s1s6P1; x6(t)x5(a)x4(t')s6s1s6P1;
//           x1(a)x2(t)x3(a')x4(t')s1s6s1s6P1;
//           x6(t)x5(a)x4(t')x3(a')x2(t'')s6s1s6s1s6P1
// and dually for lines with the roles of 1 and 6 swapped.
//
// A letter is applied by normalizing letter * prefix * weyl * P back to
// canonical form:
//   - positive letters collect through the prefix (nontrivial commutators
//     [x1,x3]=x2(T), [x3,x5]=x4(T), [x1,x5]=x2(-T(a#,b))x3(axb)x4(T(a,b#)),
//     [x2,x6]=x4(tu), [x1,x6]=x2(-tN)x3(ta#)x4(t^2 N)x5(-ta)); whatever
//     falls outside the prefix stays positive through the Weyl word and is
//     absorbed by the parabolic;
//   - s1/s6 conjugate through the prefix by the sign table
//     s_i x_j s_i^-1 = x_{2i+6-j}(e_ij .), then either extend the Weyl
//     word, cancel against its first letter (s_i^2 = h_i(-1), a torus
//     element), or be absorbed outright at the far cell;
//   - the negative letters x7, x12 unfold through the rank-1 subgroups
//     <U1,U7> and <U6,U12>:  x7(c) = x1(-c^-1) s1 h1(c^-1) x1(-c^-1) and
//     x12(c) = x6(-c^-1) s6 h6(c^-1) x6(-c^-1);
//   - torus elements carry their six characters on U1..U6:
//     h1(a) = (a^-2, N^-1, a^2 N^-1, 1, N a^-2, N),  h6(t) = (t,t,1,t^-1,t^-1,t^-2),
//     scale the prefix and are absorbed.
// Every derived rule is checked as a permutation identity by
// validate_relations below.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hexagon.hpp"
#include "words.hpp"

namespace hexforge {

namespace eng {

using ULetter = std::pair<int, FieldElement>;  // (root index 1..6, coefficient)

// [x_i(a), x_j(b)] for i < j as a left-to-right word (zero letters elided)
inline void comm_data(const HexSystem& sys, int i, const FieldElement& a, int j,
                      const FieldElement& b, std::vector<ULetter>& out) {
  auto push = [&](int idx, FieldElement c) {
    if (!c.is_zero()) out.emplace_back(idx, std::move(c));
  };
  if (i == 1 && j == 3) {
    push(2, sys.trace(a, b));
  } else if (i == 3 && j == 5) {
    push(4, sys.trace(a, b));
  } else if (i == 1 && j == 5) {
    push(2, -sys.trace(sys.adjoint(a), b));
    push(3, sys.cross(a, b));
    push(4, sys.trace(a, sys.adjoint(b)));
  } else if (i == 2 && j == 6) {
    push(4, a * b);
  } else if (i == 1 && j == 6) {
    FieldElement n = sys.norm(a);
    push(2, -(b * n));
    push(3, b * sys.adjoint(a));
    push(4, b * b * n);
    push(5, -(b * a));
  }
  // all other pairs commute
}

// [x_p(c), x_q(d)] for arbitrary distinct p, q in 1..6
inline void comm_pair(const HexSystem& sys, int p, const FieldElement& c, int q,
                      const FieldElement& d, std::vector<ULetter>& out) {
  if (p < q) {
    comm_data(sys, p, c, q, d, out);
    return;
  }
  std::vector<ULetter> tmp;
  comm_data(sys, q, d, p, c, tmp);
  for (auto it = tmp.rbegin(); it != tmp.rend(); ++it) out.emplace_back(it->first, -it->second);
}

// Left collection of a positive word into the monotone target order
// (increasing 1..6 or decreasing 6..1).  Commutators of letters with
// indices i < j land strictly between them, so collecting from the
// appropriate extreme never recreates a collected index.
inline std::array<FieldElement, 7> collect(const HexSystem& sys, std::vector<ULetter> word,
                                           bool increasing) {
  std::array<FieldElement, 7> out;
  for (int i = 1; i <= 6; ++i) out[static_cast<std::size_t>(i)] = sys.zero();
  for (int step = 0; step < 6; ++step) {
    int idx = increasing ? 1 + step : 6 - step;
    for (;;) {
      std::size_t p = word.size();
      for (std::size_t k = 0; k < word.size(); ++k)
        if (word[k].first == idx) {
          p = k;
          break;
        }
      if (p == word.size()) break;
      while (p > 0) {
        // x_j(c) x_idx(d) = x_idx(d) x_j(c) [x_j(c), x_idx(d)]
        int j = word[p - 1].first;
        FieldElement c = word[p - 1].second;
        FieldElement d = word[p].second;
        std::vector<ULetter> k;
        comm_pair(sys, j, c, idx, d, k);
        std::swap(word[p - 1], word[p]);
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(p + 1), k.begin(), k.end());
        --p;
      }
      out[static_cast<std::size_t>(idx)] = out[static_cast<std::size_t>(idx)] + word.front().second;
      word.erase(word.begin());
    }
  }
  if (!word.empty()) fail(ErrorKind::NormalizationFailure, "collection left letters behind");
  return out;
}

// ---- coset shapes -----------------------------------------------------

inline const std::array<int, 5>& prefix_roots(Sort sort, int cell) {
  static const std::array<std::array<int, 5>, 6> pt = {{{0, 0, 0, 0, 0},
                                                        {6, 0, 0, 0, 0},
                                                        {1, 2, 0, 0, 0},
                                                        {6, 5, 4, 0, 0},
                                                        {1, 2, 3, 4, 0},
                                                        {6, 5, 4, 3, 2}}};
  static const std::array<std::array<int, 5>, 6> ln = {{{0, 0, 0, 0, 0},
                                                        {1, 0, 0, 0, 0},
                                                        {6, 5, 0, 0, 0},
                                                        {1, 2, 3, 0, 0},
                                                        {6, 5, 4, 3, 0},
                                                        {1, 2, 3, 4, 5}}};
  return (sort == Sort::Point) ? pt[static_cast<std::size_t>(cell)] : ln[static_cast<std::size_t>(cell)];
}

inline bool collects_increasing(Sort sort, int cell) {
  if (cell == 0) return true;
  return prefix_roots(sort, cell)[0] == 1;
}

// First generator of the cell's Weyl word: 1, 6, or 0 for the empty word.
inline int weyl_first(Sort sort, int cell) {
  if (cell == 0) return 0;
  if (sort == Sort::Point) return (cell % 2 == 1) ? 6 : 1;
  return (cell % 2 == 1) ? 1 : 6;
}

struct EngLetter {
  enum class Kind { Pos, Neg7, Neg12, W1, W6, Torus, Aut } kind = Kind::Pos;
  int index = 0;
  FieldElement coeff;
  std::array<FieldElement, 7> lam{};  // torus characters on U1..U6 (1-indexed)
  AutLabel aut = AutLabel::Id;

  static EngLetter pos(int i, FieldElement c) {
    EngLetter l;
    l.kind = Kind::Pos;
    l.index = i;
    l.coeff = std::move(c);
    return l;
  }
  static EngLetter neg7(FieldElement c) {
    EngLetter l;
    l.kind = Kind::Neg7;
    l.coeff = std::move(c);
    return l;
  }
  static EngLetter neg12(FieldElement c) {
    EngLetter l;
    l.kind = Kind::Neg12;
    l.coeff = std::move(c);
    return l;
  }
  static EngLetter w1() {
    EngLetter l;
    l.kind = Kind::W1;
    return l;
  }
  static EngLetter w6() {
    EngLetter l;
    l.kind = Kind::W6;
    return l;
  }
  static EngLetter torus(std::array<FieldElement, 7> lam) {
    EngLetter l;
    l.kind = Kind::Torus;
    l.lam = std::move(lam);
    return l;
  }
  static EngLetter auto_(AutLabel a) {
    EngLetter l;
    l.kind = Kind::Aut;
    l.aut = a;
    return l;
  }
};

// torus characters of h1(a) = s1(1)^-1 s1(a) and h6(t) = s6(1)^-1 s6(t)
inline std::array<FieldElement, 7> h1_chars(const HexSystem& sys, const FieldElement& a) {
  std::array<FieldElement, 7> lam{};
  FieldElement n = sys.norm(a);
  FieldElement ninv = n.inv();
  FieldElement a2 = a * a;
  lam[1] = a2.inv();
  lam[2] = ninv;
  lam[3] = a2 * ninv;
  lam[4] = sys.one();
  lam[5] = n * lam[1];
  lam[6] = n;
  return lam;
}

inline std::array<FieldElement, 7> h6_chars(const HexSystem& sys, const FieldElement& t) {
  std::array<FieldElement, 7> lam{};
  FieldElement tinv = t.inv();
  lam[1] = t;
  lam[2] = t;
  lam[3] = sys.one();
  lam[4] = tinv;
  lam[5] = tinv;
  lam[6] = tinv * tinv;
  return lam;
}

// s_i(1) x_j(c) s_i(1)^-1 = x_{r}(sign * c), j in 1..6
inline std::pair<int, int> conj_s1(int j) {
  switch (j) {
    case 1: return {7, +1};
    case 2: return {6, +1};
    case 3: return {5, +1};
    case 4: return {4, +1};
    case 5: return {3, -1};
    case 6: return {2, -1};
  }
  fail(ErrorKind::NormalizationFailure, "conj_s1 index");
}
inline std::pair<int, int> conj_s6(int j) {
  switch (j) {
    case 1: return {5, +1};
    case 2: return {4, -1};
    case 3: return {3, +1};
    case 4: return {2, +1};
    case 5: return {1, -1};
    case 6: return {12, +1};
  }
  fail(ErrorKind::NormalizationFailure, "conj_s6 index");
}

class Engine {
 public:
  explicit Engine(const HexSystem& sys) : sys_(sys) {}

  HexElement apply(const EngLetter& l, const HexElement& e, int depth = 0) const {
    if (depth > 64) fail(ErrorKind::NormalizationFailure, "normalization recursion ran away");
    switch (l.kind) {
      case EngLetter::Kind::Pos: return apply_pos(l.index, l.coeff, e);
      case EngLetter::Kind::Torus: return apply_torus(l.lam, e);
      case EngLetter::Kind::Aut: return apply_aut(l.aut, e);
      case EngLetter::Kind::W1: return apply_weyl(1, e, depth);
      case EngLetter::Kind::W6: return apply_weyl(6, e, depth);
      case EngLetter::Kind::Neg7: return apply_neg(1, l.coeff, e, depth);
      case EngLetter::Kind::Neg12: return apply_neg(6, l.coeff, e, depth);
    }
    fail(ErrorKind::NormalizationFailure, "unreachable");
  }

 private:
  HexElement apply_pos(int i, const FieldElement& c, const HexElement& e) const {
    if (c.is_zero()) return e;
    const auto& roots = prefix_roots(e.sort, e.cell);
    std::vector<ULetter> word;
    word.emplace_back(i, c);
    for (int k = 0; k < e.cell; ++k)
      if (!e.coord[static_cast<std::size_t>(k)].is_zero())
        word.emplace_back(roots[static_cast<std::size_t>(k)], e.coord[static_cast<std::size_t>(k)]);
    auto arr = collect(sys_, std::move(word), collects_increasing(e.sort, e.cell));
    HexElement out = e;
    for (int k = 0; k < e.cell; ++k)
      out.coord[static_cast<std::size_t>(k)] = arr[static_cast<std::size_t>(roots[static_cast<std::size_t>(k)])];
    return out;  // letters outside the prefix stay positive through the Weyl word
  }

  HexElement apply_torus(const std::array<FieldElement, 7>& lam, const HexElement& e) const {
    const auto& roots = prefix_roots(e.sort, e.cell);
    HexElement out = e;
    for (int k = 0; k < e.cell; ++k)
      out.coord[static_cast<std::size_t>(k)] =
          lam[static_cast<std::size_t>(roots[static_cast<std::size_t>(k)])] *
          e.coord[static_cast<std::size_t>(k)];
    return out;
  }

  HexElement apply_aut(AutLabel h, const HexElement& e) const {
    HexElement out = e;
    for (int k = 0; k < e.cell; ++k)
      out.coord[static_cast<std::size_t>(k)] = sys_.aut(h, e.coord[static_cast<std::size_t>(k)]);
    return out;
  }

  HexElement blank(Sort sort, int cell) const {
    HexElement e;
    e.sort = sort;
    e.cell = cell;
    for (int k = 0; k < cell; ++k) e.coord[static_cast<std::size_t>(k)] = sys_.zero();
    return e;
  }

  // s_g(1) * (prefix * weyl * P): conjugate the prefix through s_g, then
  // resolve s_g against the Weyl word (extend, cancel into a torus, stay
  // put at the far cell, or move off the parabolic at cell 0).
  HexElement apply_weyl(int g, const HexElement& e, int depth) const {
    bool point = (e.sort == Sort::Point);
    int wf = weyl_first(e.sort, e.cell);

    if (e.cell == 0) {
      // s1 is in P1 and s6 in P6; the cross cases move the base element
      if ((point && g == 1) || (!point && g == 6)) return e;
      return blank(e.sort, 1);
    }

    std::vector<EngLetter> letters;
    const auto& roots = prefix_roots(e.sort, e.cell);
    for (int k = 0; k < e.cell; ++k) {
      const FieldElement& c = e.coord[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      auto [idx, sign] = (g == 1) ? conj_s1(roots[static_cast<std::size_t>(k)])
                                  : conj_s6(roots[static_cast<std::size_t>(k)]);
      FieldElement cc = (sign < 0) ? -c : c;
      if (idx == 7)
        letters.push_back(EngLetter::neg7(cc));
      else if (idx == 12)
        letters.push_back(EngLetter::neg12(cc));
      else
        letters.push_back(EngLetter::pos(idx, cc));
    }

    HexElement base;
    if (wf != g) {
      if (e.cell == 5) {
        // length-6 words fold back: s_g * w = w * (element of the parabolic)
        base = blank(e.sort, 5);
      } else {
        // reduced extension s_g * w
        base = blank(e.sort, e.cell + 1);
      }
    } else {
      // s_g * s_g = h_g(-1), a torus element, then the shortened word
      base = blank(e.sort, e.cell - 1);
      letters.push_back(EngLetter::torus(g == 1 ? h1_chars(sys_, sys_.minus_one())
                                                : h6_chars(sys_, sys_.minus_one())));
    }
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) base = apply(*it, base, depth + 1);
    return base;
  }

  // x7(c) = x1(-c^-1) s1 h1(c^-1) x1(-c^-1)  (g = 1)
  // x12(c) = x6(-c^-1) s6 h6(c^-1) x6(-c^-1)  (g = 6)
  HexElement apply_neg(int g, const FieldElement& c, const HexElement& e, int depth) const {
    if (c.is_zero()) return e;
    FieldElement cinv = c.inv();
    FieldElement m = -cinv;
    HexElement out = apply(EngLetter::pos(g, m), e, depth + 1);
    out = apply(EngLetter::torus(g == 1 ? h1_chars(sys_, cinv) : h6_chars(sys_, cinv)), out, depth + 1);
    out = apply(g == 1 ? EngLetter::w1() : EngLetter::w6(), out, depth + 1);
    out = apply(EngLetter::pos(g, m), out, depth + 1);
    return out;
  }

  const HexSystem& sys_;
};

inline EngLetter to_engine_letter(const HexSystem& sys, const GenLetter& l) {
  switch (l.tag) {
    case GenLetter::Tag::S1: return EngLetter::w1();
    case GenLetter::Tag::S6: return EngLetter::w6();
    case GenLetter::Tag::Aut: return EngLetter::auto_(l.aut);
    case GenLetter::Tag::X:
      if (l.index >= 1 && l.index <= 6) return EngLetter::pos(l.index, l.coeff);
      if (l.index == 7) return EngLetter::neg7(l.coeff);
      if (l.index == 12) return EngLetter::neg12(l.coeff);
      fail(ErrorKind::IndexOutOfRange, "letter index " + std::to_string(l.index));
  }
  fail(ErrorKind::IndexOutOfRange, "unreachable");
}

}  // namespace eng

// Apply one generator letter to an element (left multiplication on the
// corresponding coset).
inline HexElement apply_letter(const HexSystem& sys, const GenLetter& l, const HexElement& e) {
  eng::Engine engine(sys);
  return engine.apply(eng::to_engine_letter(sys, l), e);
}

// Apply a word (the product of its letters, so letters act right-to-left).
inline HexElement apply_word(const HexSystem& sys, const Word& w, HexElement e) {
  eng::Engine engine(sys);
  for (auto it = w.rbegin(); it != w.rend(); ++it) e = engine.apply(eng::to_engine_letter(sys, *it), e);
  return e;
}

// ---- realized collineations -------------------------------------------

struct Collineation {
  std::vector<int32_t> point_perm, line_perm;
  std::string word_text;

  bool operator==(const Collineation& o) const { return point_perm == o.point_perm; }
  bool is_identity() const {
    for (std::size_t i = 0; i < point_perm.size(); ++i)
      if (point_perm[i] != static_cast<int32_t>(i)) return false;
    return true;
  }
};

inline long perm_order(const std::vector<int32_t>& perm) {
  std::vector<char> seen(perm.size(), 0);
  long ord = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<std::size_t>(perm[j]);
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

// least common multiple of the cycle lengths; point and line orders agree
inline long order_of(const Collineation& c) { return perm_order(c.point_perm); }

inline std::vector<int32_t> perm_compose(const std::vector<int32_t>& a, const std::vector<int32_t>& b) {
  std::vector<int32_t> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

inline std::vector<int32_t> perm_inverse(const std::vector<int32_t>& a) {
  std::vector<int32_t> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a[i])] = static_cast<int32_t>(i);
  return r;
}

inline Collineation identity_collineation(const Hexagon& hx) {
  Collineation c;
  c.point_perm.resize(static_cast<std::size_t>(hx.n_points()));
  c.line_perm.resize(static_cast<std::size_t>(hx.n_lines()));
  std::iota(c.point_perm.begin(), c.point_perm.end(), 0);
  std::iota(c.line_perm.begin(), c.line_perm.end(), 0);
  c.word_text = "";
  return c;
}

// compose_action(a, b) realizes "apply b, then a" = realize(word_a ++ word_b)
inline Collineation compose_action(const Collineation& a, const Collineation& b) {
  Collineation c;
  c.point_perm = perm_compose(a.point_perm, b.point_perm);
  c.line_perm = perm_compose(a.line_perm, b.line_perm);
  if (!a.word_text.empty() && !b.word_text.empty())
    c.word_text = a.word_text + ";" + b.word_text;
  else
    c.word_text = a.word_text + b.word_text;
  return c;
}

inline Collineation inverse_of(const Collineation& a) {
  Collineation c;
  c.point_perm = perm_inverse(a.point_perm);
  c.line_perm = perm_inverse(a.line_perm);
  c.word_text = a.word_text.empty() ? "" : ("inv(" + a.word_text + ")");
  return c;
}

// Realize a word as a permutation pair.  Every realized word must be an
// incidence-graph automorphism; this is asserted over all chambers.
inline Collineation realize(const Hexagon& hx, const Word& w) {
  const HexSystem& sys = hx.system();
  Collineation c;
  c.point_perm.assign(static_cast<std::size_t>(hx.n_points()), -1);
  c.line_perm.assign(static_cast<std::size_t>(hx.n_lines()), -1);
  c.word_text = format_word(sys, w);
  parallel_for(static_cast<std::size_t>(hx.n_points()), [&](std::size_t i) {
    HexElement e = apply_word(sys, w, hx.point(static_cast<int>(i)));
    c.point_perm[i] = hx.index_of(e);
  });
  parallel_for(static_cast<std::size_t>(hx.n_lines()), [&](std::size_t i) {
    HexElement e = apply_word(sys, w, hx.line(static_cast<int>(i)));
    c.line_perm[i] = hx.index_of(e);
  });
  // bijectivity
  {
    std::vector<char> seen(c.point_perm.size(), 0);
    for (int32_t v : c.point_perm) {
      if (v < 0 || seen[static_cast<std::size_t>(v)])
        fail(ErrorKind::NormalizationFailure, "point map is not a bijection for word " + c.word_text);
      seen[static_cast<std::size_t>(v)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    seen.resize(c.line_perm.size(), 0);
    for (int32_t v : c.line_perm) {
      if (v < 0 || seen[static_cast<std::size_t>(v)])
        fail(ErrorKind::NormalizationFailure, "line map is not a bijection for word " + c.word_text);
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  // incidence preservation on all chambers
  for (int p = 0; p < hx.n_points(); ++p) {
    int32_t ip = c.point_perm[static_cast<std::size_t>(p)];
    for (int l : hx.lines_of_point(p)) {
      const auto& pts = hx.points_of_line(c.line_perm[static_cast<std::size_t>(l)]);
      if (!std::binary_search(pts.begin(), pts.end(), ip))
        fail(ErrorKind::NormalizationFailure,
             "word " + c.word_text + " does not preserve incidence");
    }
  }
  return c;
}

inline Collineation realize(const Hexagon& hx, const std::string& word_text) {
  return realize(hx, parse_word(hx.system(), word_text));
}

}  // namespace hexforge
