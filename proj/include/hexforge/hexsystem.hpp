#pragma once
// Hexagonal systems (J, F, #) of types 1/F and 3/F.
//
// Type 1/F ("OneF"): J = F, a# = a^2, N(a) = a^3, T(a,b) = 3ab,
// a x b = 2ab.  Characteristic 3 puts the system in the mixed class H4
// (the bilinear trace vanishes identically); otherwise class H1.
//
// Type 3/F ("ThreeF"): J = E a cubic Galois extension of F, sigma the
// Frobenius x -> x^|F|, a# = a^sigma a^sigma2, N(a) = a a^sigma a^sigma2,
// T(a,b) = ab + (ab)^sigma + (ab)^sigma2, a x b = a^sigma b^sigma2 +
// a^sigma2 b^sigma.  Class H2 (3D4 flavour).
//
// All coordinates, including scalar (F-valued) ones, are carried as
// elements of J with F embedded as the subfield fixed by x -> x^|F|.
// The unary trace is T(a) := T(a, 1), which reproduces T(1) = 3.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "field.hpp"

namespace hexforge {

enum class SystemKind { OneF, ThreeF };
enum class SystemClass { H1, H2_3D4, H4 };
enum class AutLabel { Id, Sigma, Sigma2 };

inline const char* system_class_name(SystemClass c) {
  switch (c) {
    case SystemClass::H1: return "H1";
    case SystemClass::H2_3D4: return "H2-3D4";
    case SystemClass::H4: return "H4";
  }
  return "?";
}

inline const char* aut_label_name(AutLabel h) {
  switch (h) {
    case AutLabel::Id: return "id";
    case AutLabel::Sigma: return "sigma";
    case AutLabel::Sigma2: return "sigma2";
  }
  return "?";
}

class HexSystem {
 public:
  static HexSystem make(SystemKind kind, FieldPtr F, FieldPtr E = nullptr) {
    HexSystem s;
    s.kind_ = kind;
    s.F_ = std::move(F);
    if (kind == SystemKind::OneF) {
      if (E && !E->same(*s.F_)) fail(ErrorKind::BadExtensionDegree, "OneF takes a single field");
      s.J_ = s.F_;
      s.cls_ = (s.F_->p == 3) ? SystemClass::H4 : SystemClass::H1;
    } else {
      if (!E) fail(ErrorKind::BadExtensionDegree, "ThreeF needs the cubic extension E");
      if (E->p != s.F_->p || E->k != 3 * s.F_->k)
        fail(ErrorKind::BadExtensionDegree, "need [E:F] = 3 over the same characteristic");
      s.J_ = std::move(E);
      s.cls_ = SystemClass::H2_3D4;
    }
    s.q_ = s.F_->size();
    s.embed_F();
    // construction smoke checks
    if (!(s.adjoint(s.one()) == s.one())) fail(ErrorKind::AxiomViolation, "1# != 1");
    if (!(s.norm(s.one()) == s.one())) fail(ErrorKind::AxiomViolation, "N(1) != 1");
    return s;
  }

  SystemKind kind() const { return kind_; }
  SystemClass cls() const { return cls_; }
  const FieldPtr& F() const { return F_; }
  const FieldPtr& J() const { return J_; }
  int s_param() const { return q_; }           // s = |F|
  int t_param() const { return J_->size(); }   // t = |J|
  int qF() const { return q_; }

  FieldElement zero() const { return FieldElement::zero(J_); }
  FieldElement one() const { return FieldElement::one(J_); }
  FieldElement minus_one() const { return -one(); }

  // --- the embedded scalar field -------------------------------------
  // F sits inside J as the fixed field of x -> x^q; embedded_F() lists it
  // in the canonical order of F's own coefficient vectors.
  const std::vector<FieldElement>& embedded_F() const { return F_in_J_; }
  bool in_F(const FieldElement& x) const { return x.pow(q_) == x; }
  // rank of x within the embedded-F enumeration, or -1 when x is not in F
  int f_rank(const FieldElement& x) const { return f_rank_of_[static_cast<std::size_t>(x.rank())]; }
  const FieldElement& f_element(int rank) const { return F_in_J_[static_cast<std::size_t>(rank)]; }
  FieldElement embed_scalar(const FieldElement& xF) const {
    if (!xF.field()->same(*F_)) fail(ErrorKind::MixedFields, "scalar not over F");
    return F_in_J_[static_cast<std::size_t>(xF.rank())];
  }
  // inverse of the embedding; NormNotInBase when x is not in F
  FieldElement to_F(const FieldElement& x) const {
    int r = f_rank(x);
    if (r < 0) fail(ErrorKind::NormNotInBase, "value " + x.format() + " lies outside F");
    return FieldElement::from_rank(F_, r);
  }

  // --- derived maps ----------------------------------------------------
  FieldElement sigma(const FieldElement& a, int power = 1) const {
    if (kind_ == SystemKind::OneF) return a;
    FieldElement r = a;
    for (int i = 0; i < ((power % 3) + 3) % 3; ++i) r = r.pow(q_);
    return r;
  }

  FieldElement adjoint(const FieldElement& a) const {
    if (kind_ == SystemKind::OneF) return a * a;
    return sigma(a, 1) * sigma(a, 2);
  }

  FieldElement norm(const FieldElement& a) const {
    FieldElement n = (kind_ == SystemKind::OneF) ? a * a * a : a * sigma(a, 1) * sigma(a, 2);
    if (kind_ == SystemKind::ThreeF && !in_F(n)) fail(ErrorKind::NormNotInBase, "norm left the base field");
    return n;
  }

  FieldElement trace(const FieldElement& a, const FieldElement& b) const {
    if (kind_ == SystemKind::OneF) {
      FieldElement ab = a * b;
      return ab + ab + ab;  // 3ab
    }
    FieldElement ab = a * b;
    return ab + ab.pow(q_) + ab.pow(q_).pow(q_);
  }
  FieldElement trace(const FieldElement& a) const { return trace(a, one()); }

  FieldElement cross(const FieldElement& a, const FieldElement& b) const {
    if (kind_ == SystemKind::OneF) {
      FieldElement ab = a * b;
      return ab + ab;  // 2ab
    }
    return sigma(a, 1) * sigma(b, 2) + sigma(a, 2) * sigma(b, 1);
  }

  // a^{-1} = N(a)^{-1} a#; agrees with the field inverse of J
  FieldElement inverse(const FieldElement& a) const {
    if (a.is_zero()) fail(ErrorKind::ZeroInverse, "inverse of 0");
    return norm(a).inv() * adjoint(a);
  }

  // --- system automorphisms -------------------------------------------
  FieldElement aut(AutLabel h, const FieldElement& a) const {
    switch (h) {
      case AutLabel::Id: return a;
      case AutLabel::Sigma:
      case AutLabel::Sigma2:
        if (kind_ != SystemKind::ThreeF)
          fail(ErrorKind::CoefficientDomainMismatch, "sigma needs a cubic extension system");
        return sigma(a, h == AutLabel::Sigma ? 1 : 2);
    }
    fail(ErrorKind::CoefficientDomainMismatch, "unreachable");
  }

  int aut_order(AutLabel h) const { return h == AutLabel::Id ? 1 : 3; }

  // true iff order(h) in {1,3} and, for all a in J,
  //   T(a) = a + a^h + a^{h^2}  and  T(a#) = T(a, a^h).
  bool is_admissible(AutLabel h) const {
    if (h != AutLabel::Id && kind_ != SystemKind::ThreeF) return false;
    int n = J_->size();
    for (int r = 0; r < n; ++r) {
      FieldElement a = FieldElement::from_rank(J_, r);
      FieldElement ah = aut(h, a);
      FieldElement ahh = aut(h, ah);
      if (trace(a) != a + ah + ahh) return false;
      if (trace(adjoint(a)) != trace(a, ah)) return false;
    }
    return true;
  }

  // All z != 0 with z = 1 - z^{-h}, in canonical order.
  std::vector<FieldElement> obstruction_solutions(AutLabel h) const {
    std::vector<FieldElement> sols;
    int n = J_->size();
    for (int r = 1; r < n; ++r) {
      FieldElement z = FieldElement::from_rank(J_, r);
      if (z.is_zero()) continue;
      if (z == one() - aut(h, z.inv())) sols.push_back(z);
    }
    return sols;
  }

  // First solution if one exists.  The fixed ovoid of theta = h x1(1) s1
  // survives exactly when this returns nothing.
  std::optional<FieldElement> ovoid_obstruction_witness(AutLabel h) const {
    auto sols = obstruction_solutions(h);
    if (sols.empty()) return std::nullopt;
    return sols.front();
  }

  std::string describe() const {
    std::string d = std::string(kind_ == SystemKind::OneF ? "OneF" : "ThreeF") + "/" +
                    system_class_name(cls_) + " (s,t)=(" + std::to_string(s_param()) + "," +
                    std::to_string(t_param()) + ")";
    return d;
  }

 private:
  void embed_F() {
    F_in_J_.clear();
    fill_embedding();
    f_rank_of_.assign(static_cast<std::size_t>(J_->size()), -1);
    for (std::size_t i = 0; i < F_in_J_.size(); ++i)
      f_rank_of_[static_cast<std::size_t>(F_in_J_[i].rank())] = static_cast<int>(i);
  }

  void fill_embedding() {
    if (kind_ == SystemKind::OneF) {
      // J = F: the embedding is the identity
      for (int r = 0; r < q_; ++r) F_in_J_.push_back(FieldElement::from_rank(J_, r));
      return;
    }
    if (F_->k == 1) {
      // prime scalars embed as scalars
      for (int r = 0; r < q_; ++r) F_in_J_.push_back(FieldElement::scalar(J_, r));
      return;
    }
    // F non-prime inside a proper extension: send F's generator to the
    // canonically least root of F's modulus in J.
    FieldElement root;
    bool found = false;
    int n = J_->size();
    for (int r = 0; r < n && !found; ++r) {
      FieldElement x = FieldElement::from_rank(J_, r);
      FieldElement val = FieldElement::zero(J_);
      for (int i = F_->k; i >= 0; --i)
        val = val * x + FieldElement::scalar(J_, F_->modulus[static_cast<std::size_t>(i)]);
      if (val.is_zero()) {
        root = x;
        found = true;
      }
    }
    if (!found) fail(ErrorKind::BadExtensionDegree, "F does not embed into E");
    for (int r = 0; r < q_; ++r) {
      FieldElement xF = FieldElement::from_rank(F_, r);
      FieldElement img = FieldElement::zero(J_);
      for (int i = F_->k - 1; i >= 0; --i)
        img = img * root + FieldElement::scalar(J_, xF.coeff(i));
      F_in_J_.push_back(img);
    }
  }

  SystemKind kind_ = SystemKind::OneF;
  SystemClass cls_ = SystemClass::H1;
  FieldPtr F_, J_;
  int q_ = 0;
  std::vector<FieldElement> F_in_J_;
  std::vector<int> f_rank_of_;
};

// ---------------------------------------------------------------------
// Identity suite: the eleven identities satisfied by #, N, T, x.
// Exhaustive over J (and F for scalar-quantified ones); the one identity
// quantified over three J-variables falls back to seeded sampling when
// |J|^3 would be too large.
// ---------------------------------------------------------------------

struct IdentityResult {
  std::string name;
  bool pass = true;
  std::string counterexample;  // empty when pass
};

struct IdentityReport {
  std::vector<IdentityResult> results;
  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

inline IdentityReport identity_suite(const HexSystem& sys, uint64_t seed = 12345) {
  IdentityReport rep;
  const FieldPtr& J = sys.J();
  int n = J->size();
  auto elem = [&](int r) { return FieldElement::from_rank(J, r); };
  auto record = [&](const std::string& name, bool pass, const std::string& ce) {
    rep.results.push_back({name, pass, pass ? "" : ce});
  };

  FieldElement one = sys.one();
  FieldElement three = one + one + one;

  record("N(1)=1", sys.norm(one) == one, "");
  record("T(1)=3", sys.trace(one) == three, "");

  {  // (ta)# = t^2 a#   and   N(ta) = t^3 N(a)
    bool p3 = true, p4 = true;
    std::string ce3, ce4;
    for (const FieldElement& t : sys.embedded_F()) {
      for (int r = 0; r < n && (p3 || p4); ++r) {
        FieldElement a = elem(r);
        if (p3 && sys.adjoint(t * a) != t * t * sys.adjoint(a)) {
          p3 = false;
          ce3 = "t=" + t.format() + " a=" + a.format();
        }
        if (p4 && sys.norm(t * a) != t * t * t * sys.norm(a)) {
          p4 = false;
          ce4 = "t=" + t.format() + " a=" + a.format();
        }
      }
    }
    record("(ta)#=t^2 a#", p3, ce3);
    record("N(ta)=t^3 N(a)", p4, ce4);
  }

  {  // a x a = 2 a#
    bool p = true;
    std::string ce;
    for (int r = 0; r < n && p; ++r) {
      FieldElement a = elem(r);
      FieldElement two_adj = sys.adjoint(a) + sys.adjoint(a);
      if (sys.cross(a, a) != two_adj) {
        p = false;
        ce = "a=" + a.format();
      }
    }
    record("a x a = 2a#", p, ce);
  }

  {  // (a+b)# = a# + a x b + b#
    bool p = true;
    std::string ce;
    for (int ra = 0; ra < n && p; ++ra)
      for (int rb = 0; rb < n && p; ++rb) {
        FieldElement a = elem(ra), b = elem(rb);
        if (sys.adjoint(a + b) != sys.adjoint(a) + sys.cross(a, b) + sys.adjoint(b)) {
          p = false;
          ce = "a=" + a.format() + " b=" + b.format();
        }
      }
    record("(a+b)#=a#+axb+b#", p, ce);
  }

  {  // T(a x b, c) = T(a, b x c), exhaustive when feasible
    bool p = true;
    std::string ce;
    long cube = static_cast<long>(n) * n * n;
    if (cube <= 20'000'000L) {
      for (int ra = 0; ra < n && p; ++ra)
        for (int rb = 0; rb < n && p; ++rb)
          for (int rc = 0; rc < n && p; ++rc) {
            FieldElement a = elem(ra), b = elem(rb), c = elem(rc);
            if (sys.trace(sys.cross(a, b), c) != sys.trace(a, sys.cross(b, c))) {
              p = false;
              ce = "a=" + a.format() + " b=" + b.format() + " c=" + c.format();
            }
          }
    } else {
      std::mt19937_64 rng(seed);
      for (int it = 0; it < 10'000 && p; ++it) {
        FieldElement a = elem(static_cast<int>(rng() % n));
        FieldElement b = elem(static_cast<int>(rng() % n));
        FieldElement c = elem(static_cast<int>(rng() % n));
        if (sys.trace(sys.cross(a, b), c) != sys.trace(a, sys.cross(b, c))) {
          p = false;
          ce = "a=" + a.format() + " b=" + b.format() + " c=" + c.format();
        }
      }
    }
    record("T(axb,c)=T(a,bxc)", p, ce);
  }

  {  // T(a, a#) = 3 N(a)
    bool p = true;
    std::string ce;
    for (int r = 0; r < n && p; ++r) {
      FieldElement a = elem(r);
      FieldElement nr = sys.norm(a);
      if (sys.trace(a, sys.adjoint(a)) != nr + nr + nr) {
        p = false;
        ce = "a=" + a.format();
      }
    }
    record("T(a,a#)=3N(a)", p, ce);
  }

  {  // 1 x a = T(a) - a   (the identity a = T(a) - 1 x a)
    bool p = true;
    std::string ce;
    for (int r = 0; r < n && p; ++r) {
      FieldElement a = elem(r);
      if (sys.cross(one, a) != sys.trace(a) - a) {
        p = false;
        ce = "a=" + a.format();
      }
    }
    record("1xa=T(a)-a", p, ce);
  }

  {  // N(a#) = N(a)^2  and  a## = N(a) a
    bool p10 = true, p11 = true;
    std::string ce10, ce11;
    for (int r = 0; r < n; ++r) {
      FieldElement a = elem(r);
      FieldElement nr = sys.norm(a);
      if (p10 && sys.norm(sys.adjoint(a)) != nr * nr) {
        p10 = false;
        ce10 = "a=" + a.format();
      }
      if (p11 && sys.adjoint(sys.adjoint(a)) != nr * a) {
        p11 = false;
        ce11 = "a=" + a.format();
      }
    }
    record("N(a#)=N(a)^2", p10, ce10);
    record("a##=N(a)a", p11, ce11);
  }

  return rep;
}

// Parse/describe helper for the UnsupportedKind rejection: the only kinds
// with finite instances are 1/F and 3/F, since finite division algebras
// are commutative (Wedderburn), which rules out 9/F, 9K/F, 27/F, 27K/F.
inline SystemKind parse_system_kind(const std::string& s) {
  if (s == "OneF") return SystemKind::OneF;
  if (s == "ThreeF") return SystemKind::ThreeF;
  fail(ErrorKind::UnsupportedKind,
       "kind '" + s +
           "' is not supported: finite division algebras are commutative (Wedderburn), so only "
           "OneF (type 1/F) and ThreeF (type 3/F) have finite instances");
}

}  // namespace hexforge
