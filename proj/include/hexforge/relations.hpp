#pragma once
// Relation validation: every rule the action engine relies on, checked as
// a permutation identity on a built hexagon.  Covers additivity of each
// root group, the five positive commutator relations, the five
// negative-root relations, s1^4 = s6^4 = 1, the fold s1 = x7(1)x1(1)x7(1),
// the sign-table conjugations s_i x_j(a) s_i^-1 = x_{2i+6-j}(e_ij a),
// centrality of U4, and centrality of U3 exactly in the mixed class.

#include <map>
#include <string>
#include <vector>

#include "action.hpp"

namespace hexforge {

struct RelationResult {
  std::string name;
  bool pass = true;
  std::string counterexample;
};

struct RelationReport {
  std::vector<RelationResult> results;
  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

class RelationValidator {
 public:
  explicit RelationValidator(const Hexagon& hx) : hx_(hx), sys_(hx.system()) {
    n_ = sys_.t_param();
    s_ = sys_.s_param();
    for (int i : {1, 3, 5, 7})
      for (int r = 0; r < n_; ++r) letter_perm_[{i, r}] = realize_letter(i, jelem(r));
    for (int i : {2, 4, 6, 12})
      for (int r = 0; r < s_; ++r) letter_perm_[{i, r}] = realize_letter(i, sys_.f_element(r));
    s1_ = realize(hx_, Word{GenLetter::s1()}).point_perm;
    s6_ = realize(hx_, Word{GenLetter::s6()}).point_perm;
  }

  RelationReport run() {
    RelationReport rep;
    check_additivity(rep);
    check_commutators(rep);
    check_negative_relations(rep);
    check_weyl(rep);
    check_sign_table(rep);
    check_centrality(rep);
    return rep;
  }

 private:
  using Perm = std::vector<int32_t>;

  FieldElement jelem(int r) const { return FieldElement::from_rank(sys_.J(), r); }
  bool odd_domain(int i) const { return i % 2 == 1; }
  int domain_size(int i) const { return odd_domain(i) ? n_ : s_; }
  FieldElement domain_elem(int i, int r) const { return odd_domain(i) ? jelem(r) : sys_.f_element(r); }
  int domain_rank(int i, const FieldElement& c) const {
    return odd_domain(i) ? c.rank() : sys_.f_rank(c);
  }

  Perm realize_letter(int i, const FieldElement& c) {
    return realize(hx_, Word{GenLetter::x(i, c)}).point_perm;
  }
  const Perm& letter(int i, const FieldElement& c) const {
    auto it = letter_perm_.find({i, domain_rank(i, c)});
    if (it == letter_perm_.end()) fail(ErrorKind::NormalizationFailure, "letter cache miss");
    return it->second;
  }

  Perm word_perm(const std::vector<std::pair<int, FieldElement>>& letters) const {
    Perm acc = identity();
    for (const auto& [i, c] : letters) acc = perm_compose(acc, letter(i, c));
    return acc;
  }
  Perm identity() const {
    Perm id(static_cast<std::size_t>(hx_.n_points()));
    for (std::size_t k = 0; k < id.size(); ++k) id[k] = static_cast<int32_t>(k);
    return id;
  }
  // permutation of [g, h] = g^-1 h^-1 g h
  Perm comm_perm(const Perm& g, const Perm& h) const {
    return perm_compose(perm_compose(perm_inverse(g), perm_inverse(h)), perm_compose(g, h));
  }

  void record(RelationReport& rep, const std::string& name, bool pass, const std::string& ce) {
    rep.results.push_back({name, pass, pass ? "" : ce});
  }

  void check_additivity(RelationReport& rep) {
    for (int i : {1, 2, 3, 4, 5, 6, 7, 12}) {
      bool pass = true;
      std::string ce;
      int n = domain_size(i);
      for (int ra = 0; ra < n && pass; ++ra)
        for (int rb = 0; rb < n && pass; ++rb) {
          FieldElement a = domain_elem(i, ra), b = domain_elem(i, rb);
          if (perm_compose(letter(i, a), letter(i, b)) != letter(i, a + b)) {
            pass = false;
            ce = "i=" + std::to_string(i) + " a=" + a.format() + " b=" + b.format();
          }
        }
      record(rep, "additivity_x" + std::to_string(i), pass, ce);
    }
  }

  // the five relations among positive root groups
  void check_commutators(RelationReport& rep) {
    auto run_pair = [&](const std::string& name, int i, int j,
                        auto rhs /* (a,b) -> word letters */) {
      bool pass = true;
      std::string ce;
      for (int ra = 0; ra < domain_size(i) && pass; ++ra)
        for (int rb = 0; rb < domain_size(j) && pass; ++rb) {
          FieldElement a = domain_elem(i, ra), b = domain_elem(j, rb);
          Perm lhs = comm_perm(letter(i, a), letter(j, b));
          if (lhs != word_perm(rhs(a, b))) {
            pass = false;
            ce = "a=" + a.format() + " b=" + b.format();
          }
        }
      record(rep, name, pass, ce);
    };
    using L = std::vector<std::pair<int, FieldElement>>;
    run_pair("commutator_x1_x3", 1, 3, [&](const FieldElement& a, const FieldElement& b) {
      return L{{2, sys_.trace(a, b)}};
    });
    run_pair("commutator_x3_x5", 3, 5, [&](const FieldElement& a, const FieldElement& b) {
      return L{{4, sys_.trace(a, b)}};
    });
    run_pair("commutator_x1_x5", 1, 5, [&](const FieldElement& a, const FieldElement& b) {
      return L{{2, -sys_.trace(sys_.adjoint(a), b)},
               {3, sys_.cross(a, b)},
               {4, sys_.trace(a, sys_.adjoint(b))}};
    });
    run_pair("commutator_x2_x6", 2, 6, [&](const FieldElement& a, const FieldElement& b) {
      return L{{4, a * b}};
    });
    run_pair("commutator_x1_x6", 1, 6, [&](const FieldElement& a, const FieldElement& b) {
      FieldElement nrm = sys_.norm(a);
      return L{{2, -(b * nrm)}, {3, b * sys_.adjoint(a)}, {4, b * b * nrm}, {5, -(b * a)}};
    });
  }

  void check_negative_relations(RelationReport& rep) {
    using L = std::vector<std::pair<int, FieldElement>>;
    auto run_pair = [&](const std::string& name, int i, int j, auto rhs) {
      bool pass = true;
      std::string ce;
      for (int ra = 0; ra < domain_size(i) && pass; ++ra)
        for (int rb = 0; rb < domain_size(j) && pass; ++rb) {
          FieldElement a = domain_elem(i, ra), b = domain_elem(j, rb);
          Perm lhs = comm_perm(letter(i, a), letter(j, b));
          if (lhs != word_perm(rhs(a, b))) {
            pass = false;
            ce = "a=" + a.format() + " b=" + b.format();
          }
        }
      record(rep, name, pass, ce);
    };
    // [x2(t), x7(a)] = x3(ta) x4(-t^2 N(a)) x5(t a#) x6(-t N(a))
    run_pair("negative_x2_x7", 2, 7, [&](const FieldElement& t, const FieldElement& a) {
      FieldElement nrm = sys_.norm(a);
      return L{{3, t * a}, {4, -(t * t * nrm)}, {5, t * sys_.adjoint(a)}, {6, -(t * nrm)}};
    });
    // [x3(b), x7(a)] = x4(-T(a,b#)) x5(a x b) x6(-T(a#,b))
    run_pair("negative_x3_x7", 3, 7, [&](const FieldElement& b, const FieldElement& a) {
      return L{{4, -sys_.trace(a, sys_.adjoint(b))},
               {5, sys_.cross(a, b)},
               {6, -sys_.trace(sys_.adjoint(a), b)}};
    });
    // [x5(b), x7(a)] = x6(-T(a,b))
    run_pair("negative_x5_x7", 5, 7, [&](const FieldElement& b, const FieldElement& a) {
      return L{{6, -sys_.trace(a, b)}};
    });
    // [x12(t), x4(u)] = x2(tu)
    run_pair("negative_x12_x4", 12, 4, [&](const FieldElement& t, const FieldElement& u) {
      return L{{2, t * u}};
    });
    // [x12(t), x5(a)] = x1(-ta) x2(-t^2 N(a)) x3(-t a#) x4(-t N(a))
    run_pair("negative_x12_x5", 12, 5, [&](const FieldElement& t, const FieldElement& a) {
      FieldElement nrm = sys_.norm(a);
      return L{{1, -(t * a)}, {2, -(t * t * nrm)}, {3, -(t * sys_.adjoint(a))}, {4, -(t * nrm)}};
    });
    // trivial pairs: [x_i(c), x7(a)] = 1 for i in {4,6}; [x12(t), x_i(c)] = 1 for i in {1,2,3}
    {
      bool pass = true;
      std::string ce;
      for (int i : {4, 6})
        for (int rc = 0; rc < domain_size(i) && pass; ++rc)
          for (int ra = 0; ra < n_ && pass; ++ra) {
            FieldElement c = domain_elem(i, rc), a = jelem(ra);
            if (comm_perm(letter(i, c), letter(7, a)) != identity()) {
              pass = false;
              ce = "i=" + std::to_string(i) + " c=" + c.format() + " a=" + a.format();
            }
          }
      for (int i : {1, 2, 3})
        for (int rt = 0; rt < s_ && pass; ++rt)
          for (int rc = 0; rc < domain_size(i) && pass; ++rc) {
            FieldElement t = sys_.f_element(rt), c = domain_elem(i, rc);
            if (comm_perm(letter(12, t), letter(i, c)) != identity()) {
              pass = false;
              ce = "i=" + std::to_string(i) + " t=" + t.format() + " c=" + c.format();
            }
          }
      record(rep, "negative_trivial_pairs", pass, ce);
    }
  }

  void check_weyl(RelationReport& rep) {
    Perm s1_4 = perm_compose(perm_compose(s1_, s1_), perm_compose(s1_, s1_));
    record(rep, "s1^4=1", s1_4 == identity(), "");
    Perm s6_4 = perm_compose(perm_compose(s6_, s6_), perm_compose(s6_, s6_));
    record(rep, "s6^4=1", s6_4 == identity(), "");
    FieldElement one = sys_.one();
    Perm fold = perm_compose(perm_compose(letter(7, one), letter(1, one)), letter(7, one));
    record(rep, "s1=x7(1)x1(1)x7(1)", fold == s1_, "");
  }

  void check_sign_table(RelationReport& rep) {
    // s_i(1) x_j(a) s_i(1)^-1 = x_{2i+6-j}(e_ij a), indices cyclic in 1..12
    static const int sign1[7] = {0, +1, +1, +1, +1, -1, -1};
    static const int sign6[7] = {0, +1, -1, +1, +1, -1, +1};
    for (int i : {1, 6}) {
      const Perm& s = (i == 1) ? s1_ : s6_;
      Perm sinv = perm_inverse(s);
      bool pass = true;
      std::string ce;
      for (int j = 1; j <= 6 && pass; ++j) {
        int target = ((2 * i + 6 - j) - 1) % 12 + 1;
        int sign = (i == 1) ? sign1[j] : sign6[j];
        for (int rc = 0; rc < domain_size(j) && pass; ++rc) {
          FieldElement a = domain_elem(j, rc);
          FieldElement ta = (sign < 0) ? -a : a;
          Perm lhs = perm_compose(perm_compose(s, letter(j, a)), sinv);
          if (lhs != letter(target, ta)) {
            pass = false;
            ce = "j=" + std::to_string(j) + " a=" + a.format();
          }
        }
      }
      record(rep, std::string("sign_table_s") + std::to_string(i), pass, ce);
    }
  }

  void check_centrality(RelationReport& rep) {
    auto central = [&](int i) {
      for (int rc = 0; rc < domain_size(i); ++rc)
        for (int j = 1; j <= 6; ++j)
          for (int rd = 0; rd < domain_size(j); ++rd) {
            FieldElement c = domain_elem(i, rc), d = domain_elem(j, rd);
            if (comm_perm(letter(i, c), letter(j, d)) != identity()) return false;
          }
      return true;
    };
    record(rep, "U4_central", central(4), "");
    bool u3 = central(3);
    bool expect = (sys_.cls() == SystemClass::H4);
    record(rep, "U3_central_iff_H4", u3 == expect,
           u3 ? "U3 central outside the mixed class" : "U3 not central in the mixed class");
  }

  const Hexagon& hx_;
  const HexSystem& sys_;
  int n_ = 0, s_ = 0;
  std::map<std::pair<int, int>, Perm> letter_perm_;
  Perm s1_, s6_;
};

inline RelationReport validate_relations(const Hexagon& hx) { return RelationValidator(hx).run(); }

}  // namespace hexforge
