#pragma once
// Exact arithmetic in small finite fields GF(p^k) and their extensions.
//
// An element is a coefficient vector over GF(p), little-endian in the
// polynomial basis (c[0] + c[1]X + ... + c[k-1]X^(k-1)), always reduced
// modulo a monic irreducible modulus of degree k.  There is no global
// registry: every element carries a shared handle to its descriptor, so
// several fields (the scalar field F and the coordinate ring J) can
// coexist in one computation.
//
// Supported sizes: p prime <= 17, 1 <= k <= 6, p^k <= 729.  Default
// moduli come from the Conway polynomial table below, so the canonical
// generator g (the class of X) is primitive and element encodings are
// reproducible across runs.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "util.hpp"

namespace hexforge {

inline constexpr int kMaxDegree = 6;
inline constexpr int kMaxFieldSize = 729;  // 3^6

namespace detail {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Coefficient-vector polynomial helpers over GF(p), little-endian, for
// modulus validation only (tiny degrees, brute force is plenty).
inline int poly_deg(const std::vector<int>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  int db = poly_deg(b);
  for (int i = poly_deg(a); i >= db && i >= 0; i = poly_deg(a)) {
    // b is monic
    int c = a[static_cast<std::size_t>(i)] % p;
    for (int j = 0; j <= db; ++j) {
      auto& slot = a[static_cast<std::size_t>(i - db + j)];
      slot = ((slot - c * b[static_cast<std::size_t>(j)]) % p + p) % p;
    }
  }
  return a;
}

// Irreducibility over the prime field by trial division with all monic
// polynomials of degree <= deg/2.
inline bool irreducible_over_prime(const std::vector<int>& f, int p) {
  int d = poly_deg(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  for (int dd = 1; dd <= d / 2; ++dd) {
    // enumerate monic divisor candidates of degree dd
    std::vector<int> g(static_cast<std::size_t>(dd) + 1, 0);
    g[static_cast<std::size_t>(dd)] = 1;
    long total = 1;
    for (int i = 0; i < dd; ++i) total *= p;
    for (long code = 0; code < total; ++code) {
      long c = code;
      for (int i = 0; i < dd; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
        c /= p;
      }
      if (poly_deg(poly_mod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace detail

struct FieldDescriptor;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

struct FieldDescriptor {
  int p = 2;                 // characteristic, prime <= 17
  int k = 1;                 // extension degree over GF(p), 1..6
  std::vector<int> modulus;  // little-endian, length k+1, monic irreducible
  // X^(k+i) mod modulus, i = 0..k-2, for product reduction
  std::array<std::array<int, kMaxDegree>, kMaxDegree> red{};

  int size() const {
    int q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    return q;
  }

  bool same(const FieldDescriptor& o) const {
    return p == o.p && k == o.k && modulus == o.modulus;
  }
};

// Conway polynomials (little-endian coefficients, monic) for all supported
// (p, k).  Any consistent irreducible choice would do; these make g
// primitive and are the documented defaults.
inline const std::vector<int>* conway_modulus(int p, int k) {
  struct Entry {
    int p, k;
    std::vector<int> coeffs;
  };
  static const std::vector<Entry> table = {
      {2, 1, {1, 1}},
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {3, 1, {1, 1}},
      {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},
      {3, 4, {2, 0, 0, 2, 1}},
      {3, 5, {1, 2, 0, 0, 0, 1}},
      {3, 6, {2, 2, 1, 0, 2, 0, 1}},
      {5, 1, {3, 1}},
      {5, 2, {2, 4, 1}},
      {5, 3, {3, 3, 0, 1}},
      {5, 4, {2, 4, 4, 0, 1}},
      {7, 1, {4, 1}},
      {7, 2, {3, 6, 1}},
      {7, 3, {4, 0, 6, 1}},
      {11, 1, {9, 1}},
      {11, 2, {2, 7, 1}},
      {13, 1, {11, 1}},
      {13, 2, {2, 12, 1}},
      {17, 1, {14, 1}},
      {17, 2, {3, 16, 1}},
  };
  for (const auto& e : table)
    if (e.p == p && e.k == k) return &e.coeffs;
  return nullptr;
}

inline FieldPtr make_field(int p, int k, std::optional<std::vector<int>> modulus = std::nullopt) {
  if (!detail::is_prime(p)) fail(ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (p > 17 || k < 1 || k > kMaxDegree)
    fail(ErrorKind::UnsupportedSize, "need p <= 17 and 1 <= k <= 6");
  long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > kMaxFieldSize) fail(ErrorKind::UnsupportedSize, "field size " + std::to_string(q) + " exceeds 729");

  std::vector<int> m;
  if (modulus) {
    m = *modulus;
    for (auto& c : m) c = ((c % p) + p) % p;
    if (static_cast<int>(m.size()) != k + 1 || m[static_cast<std::size_t>(k)] != 1)
      fail(ErrorKind::ReducibleModulus, "modulus must be monic of degree k");
  } else {
    const std::vector<int>* entry = conway_modulus(p, k);
    if (!entry) fail(ErrorKind::UnsupportedSize, "no built-in modulus for (p,k)");
    m = *entry;
  }
  if (!detail::irreducible_over_prime(m, p))
    fail(ErrorKind::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");

  auto fd = std::make_shared<FieldDescriptor>();
  fd->p = p;
  fd->k = k;
  fd->modulus = m;
  // reduction rows: X^k = -(m_0 + ... + m_{k-1} X^{k-1}), then multiply by X
  std::array<int, kMaxDegree> row{};
  for (int i = 0; i < k; ++i) row[static_cast<std::size_t>(i)] = (p - m[static_cast<std::size_t>(i)]) % p;
  fd->red[0] = row;
  for (int i = 1; i < k; ++i) {
    std::array<int, kMaxDegree> nxt{};
    int top = row[static_cast<std::size_t>(k - 1)];
    for (int j = k - 1; j >= 1; --j) nxt[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)];
    nxt[0] = 0;
    if (top != 0)
      for (int j = 0; j < k; ++j)
        nxt[static_cast<std::size_t>(j)] =
            (nxt[static_cast<std::size_t>(j)] + top * fd->red[0][static_cast<std::size_t>(j)]) % p;
    fd->red[static_cast<std::size_t>(i)] = nxt;
    row = nxt;
  }
  return fd;
}

class FieldElement {
 public:
  FieldElement() = default;

  FieldElement(FieldPtr field, std::initializer_list<int> coeffs) : field_(std::move(field)) {
    int i = 0;
    for (int c : coeffs) {
      if (i >= field_->k) break;
      c_[static_cast<std::size_t>(i++)] = static_cast<uint8_t>(((c % field_->p) + field_->p) % field_->p);
    }
  }

  static FieldElement zero(const FieldPtr& f) { return FieldElement(f); }
  static FieldElement one(const FieldPtr& f) {
    FieldElement e(f);
    e.c_[0] = 1;
    return e;
  }
  static FieldElement scalar(const FieldPtr& f, int n) {
    FieldElement e(f);
    e.c_[0] = static_cast<uint8_t>(((n % f->p) + f->p) % f->p);
    return e;
  }
  // the class of X
  static FieldElement gen(const FieldPtr& f) {
    FieldElement e(f);
    if (f->k == 1)
      e.c_[0] = static_cast<uint8_t>((f->p - f->modulus[0]) % f->p);  // root of the degree-1 modulus
    else
      e.c_[1] = 1;
    return e;
  }
  static FieldElement from_coeffs(const FieldPtr& f, const std::vector<int>& coeffs) {
    FieldElement e(f);
    if (static_cast<int>(coeffs.size()) > f->k)
      fail(ErrorKind::UnsupportedSize, "coefficient vector longer than degree");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      e.c_[i] = static_cast<uint8_t>(((coeffs[i] % f->p) + f->p) % f->p);
    return e;
  }

  const FieldPtr& field() const { return field_; }
  bool valid() const { return field_ != nullptr; }
  int coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const {
    for (int i = 0; i < field_->k; ++i)
      if (c_[static_cast<std::size_t>(i)]) return false;
    return true;
  }
  bool is_one() const {
    if (c_[0] != 1) return false;
    for (int i = 1; i < field_->k; ++i)
      if (c_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  // Lexicographic rank of the coefficient vector (c0 most significant);
  // the canonical element order everywhere in this library.
  int rank() const {
    int r = 0;
    for (int i = 0; i < field_->k; ++i) r = r * field_->p + c_[static_cast<std::size_t>(i)];
    return r;
  }
  static FieldElement from_rank(const FieldPtr& f, int r) {
    FieldElement e(f);
    for (int i = f->k - 1; i >= 0; --i) {
      e.c_[static_cast<std::size_t>(i)] = static_cast<uint8_t>(r % f->p);
      r /= f->p;
    }
    return e;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.field_.get() != b.field_.get() && !(a.field_ && b.field_ && a.field_->same(*b.field_))) return false;
    for (int i = 0; i < a.field_->k; ++i)
      if (a.c_[static_cast<std::size_t>(i)] != b.c_[static_cast<std::size_t>(i)]) return false;
    return true;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    FieldElement r(a.field_);
    int p = a.field_->p;
    for (int i = 0; i < a.field_->k; ++i)
      r.c_[static_cast<std::size_t>(i)] =
          static_cast<uint8_t>((a.c_[static_cast<std::size_t>(i)] + b.c_[static_cast<std::size_t>(i)]) % p);
    return r;
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    FieldElement r(a.field_);
    int p = a.field_->p;
    for (int i = 0; i < a.field_->k; ++i)
      r.c_[static_cast<std::size_t>(i)] = static_cast<uint8_t>(
          (a.c_[static_cast<std::size_t>(i)] - b.c_[static_cast<std::size_t>(i)] + p) % p);
    return r;
  }
  FieldElement operator-() const {
    FieldElement r(field_);
    int p = field_->p;
    for (int i = 0; i < field_->k; ++i)
      r.c_[static_cast<std::size_t>(i)] = static_cast<uint8_t>((p - c_[static_cast<std::size_t>(i)]) % p);
    return r;
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    const FieldDescriptor& f = *a.field_;
    int k = f.k, p = f.p;
    std::array<int, 2 * kMaxDegree> conv{};
    for (int i = 0; i < k; ++i) {
      int ai = a.c_[static_cast<std::size_t>(i)];
      if (!ai) continue;
      for (int j = 0; j < k; ++j)
        conv[static_cast<std::size_t>(i + j)] += ai * b.c_[static_cast<std::size_t>(j)];
    }
    FieldElement r(a.field_);
    std::array<int, kMaxDegree> acc{};
    for (int i = 0; i < k; ++i) acc[static_cast<std::size_t>(i)] = conv[static_cast<std::size_t>(i)];
    for (int i = 0; i < k - 1; ++i) {
      int hi = conv[static_cast<std::size_t>(k + i)] % p;
      if (!hi) continue;
      const auto& row = f.red[static_cast<std::size_t>(i)];
      for (int j = 0; j < k; ++j) acc[static_cast<std::size_t>(j)] += hi * row[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < k; ++i)
      r.c_[static_cast<std::size_t>(i)] = static_cast<uint8_t>(((acc[static_cast<std::size_t>(i)] % p) + p) % p);
    return r;
  }

  FieldElement pow(long e) const {
    long m = static_cast<long>(field_->size()) - 1;  // multiplicative order divides m
    if (is_zero()) {
      if (e < 0) fail(ErrorKind::ZeroInverse, "0 has no negative power");
      return e == 0 ? one(field_) : *this;
    }
    e %= m;
    if (e < 0) e += m;
    FieldElement base = *this, acc = one(field_);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  FieldElement inv() const {
    if (is_zero()) fail(ErrorKind::ZeroInverse, "inverse of 0");
    return pow(static_cast<long>(field_->size()) - 2);
  }

  // x -> x^q for q a power of p with GF(q) a subfield; iterating
  // [field : GF(q)] times is the identity.
  FieldElement frobenius(int q) const {
    int p = field_->p;
    long qq = q;
    int m = 0;
    while (qq > 1 && qq % p == 0) {
      qq /= p;
      ++m;
    }
    if (q < p || qq != 1 || m == 0 || field_->k % m != 0)
      fail(ErrorKind::InvalidSubfield, "GF(" + std::to_string(q) + ") is not a subfield");
    return pow(q);
  }

  std::string format() const;

 private:
  explicit FieldElement(FieldPtr f) : field_(std::move(f)) {}

  void check_same(const FieldElement& o) const {
    if (!field_ || !o.field_) fail(ErrorKind::MixedFields, "operation on invalid element");
    if (field_.get() != o.field_.get() && !field_->same(*o.field_))
      fail(ErrorKind::MixedFields, "operands belong to different fields");
  }

  FieldPtr field_;
  std::array<uint8_t, kMaxDegree> c_{};
};

// Field arithmetic entry point in the named-operation form.
enum class FieldOp { Add, Mul, Neg, Inv, Pow };

inline FieldElement field_arith(FieldOp op, const FieldElement& a,
                                const FieldElement& b = FieldElement(), long e = 0) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Neg: return -a;
    case FieldOp::Inv: return a.inv();
    case FieldOp::Pow: return a.pow(e);
  }
  fail(ErrorKind::UnsupportedSize, "unreachable");
}

// Text form of field literals: "0", "1", "g", "g^k", "[c0,c1,...]";
// prime-field elements print as plain integers.
inline std::string FieldElement::format() const {
  if (is_zero()) return "0";
  if (is_one()) return "1";
  if (field_->k == 1) return std::to_string(c_[0]);
  FieldElement g = gen(field_);
  FieldElement acc = g;
  int q = field_->size();
  for (int e = 1; e < q; ++e) {
    if (acc == *this) return e == 1 ? "g" : ("g^" + std::to_string(e));
    acc = acc * g;
  }
  // g not primitive for a user-supplied modulus: fall back to the vector form
  std::string s = "[";
  for (int i = 0; i < field_->k; ++i) {
    if (i) s += ",";
    s += std::to_string(c_[static_cast<std::size_t>(i)]);
  }
  return s + "]";
}

inline FieldElement parse_field_literal(const FieldPtr& f, const std::string& text) {
  auto bad = [&](const std::string& why) -> FieldElement {
    fail(ErrorKind::SyntaxError, "bad field literal '" + text + "': " + why);
  };
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) return bad("empty");
  if (s == "g") return FieldElement::gen(f);
  if (s.rfind("g^", 0) == 0) {
    try {
      long e = std::stol(s.substr(2));
      return FieldElement::gen(f).pow(e);
    } catch (const std::exception&) {
      return bad("exponent");
    }
  }
  if (s.front() == '[') {
    if (s.back() != ']') return bad("unbalanced brackets");
    std::vector<int> coeffs;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        coeffs.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        return bad("coefficient '" + tok + "'");
      }
    }
    if (static_cast<int>(coeffs.size()) != f->k) return bad("expected " + std::to_string(f->k) + " coefficients");
    return FieldElement::from_coeffs(f, coeffs);
  }
  try {
    std::size_t used = 0;
    long n = std::stol(s, &used);
    if (used != s.size()) return bad("trailing characters");
    return FieldElement::scalar(f, static_cast<int>(((n % f->p) + f->p) % f->p));
  } catch (const std::exception&) {
    return bad("unrecognised form");
  }
}

// "has no proper factor"; for degree <= 3 this equals "has no root".
// Trial division over the given field, degrees up to 6.
inline bool poly_irreducible(const std::vector<FieldElement>& coeffs) {
  int d = -1;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (!coeffs[static_cast<std::size_t>(i)].is_zero()) {
      d = i;
      break;
    }
  if (d < 1) return false;
  const FieldPtr& f = coeffs[0].field();
  int q = f->size();
  if (d <= 3) {
    for (int r = 0; r < q; ++r) {
      FieldElement x = FieldElement::from_rank(f, r);
      FieldElement val = FieldElement::zero(f);
      for (int i = d; i >= 0; --i) val = val * x + coeffs[static_cast<std::size_t>(i)];
      if (val.is_zero()) return false;
    }
    return true;
  }
  // monic divisor candidates of degree dd <= d/2, coefficients ranked
  auto divides = [&](const std::vector<FieldElement>& g) {
    std::vector<FieldElement> rem = coeffs;
    int dg = static_cast<int>(g.size()) - 1;
    auto deg = [&](const std::vector<FieldElement>& v) {
      for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (!v[static_cast<std::size_t>(i)].is_zero()) return i;
      return -1;
    };
    FieldElement lead_inv = g.back().inv();
    for (int i = deg(rem); i >= dg; i = deg(rem)) {
      FieldElement c = rem[static_cast<std::size_t>(i)] * lead_inv;
      for (int j = 0; j <= dg; ++j) {
        auto& slot = rem[static_cast<std::size_t>(i - dg + j)];
        slot = slot - c * g[static_cast<std::size_t>(j)];
      }
    }
    return deg(rem) < 0;
  };
  for (int dd = 1; dd <= d / 2; ++dd) {
    long total = 1;
    for (int i = 0; i < dd; ++i) total *= q;
    std::vector<FieldElement> g(static_cast<std::size_t>(dd) + 1);
    g[static_cast<std::size_t>(dd)] = FieldElement::one(f);
    for (long code = 0; code < total; ++code) {
      long c = code;
      for (int i = 0; i < dd; ++i) {
        g[static_cast<std::size_t>(i)] = FieldElement::from_rank(f, static_cast<int>(c % q));
        c /= q;
      }
      if (divides(g)) return false;
    }
  }
  return true;
}

}  // namespace hexforge
