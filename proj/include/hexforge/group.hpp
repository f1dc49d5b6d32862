#pragma once
// Permutation-group machinery over realized collineations: breadth-first
// closure with deduplication on the point permutation, conjugacy tests
// (exact against a full listing, else seeded sampling), and the
// deterministic random-walk sampler.

#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "action.hpp"

namespace hexforge {

struct PermHash {
  std::size_t operator()(const std::vector<int32_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (int32_t x : v) {
      h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// The standard generator set: all x_i(c) with c ranging over J (odd i)
// or F (even i), plus s1 and s6.
inline std::vector<Collineation> standard_generators(const Hexagon& hx) {
  const HexSystem& sys = hx.system();
  std::vector<Collineation> gens;
  for (int i = 1; i <= 6; ++i) {
    bool odd = (i % 2 == 1);
    int n = odd ? sys.t_param() : sys.s_param();
    for (int r = 1; r < n; ++r) {  // skip the identity coefficient 0
      FieldElement c = odd ? FieldElement::from_rank(sys.J(), r) : sys.f_element(r);
      gens.push_back(realize(hx, Word{GenLetter::x(i, c)}));
    }
  }
  gens.push_back(realize(hx, Word{GenLetter::s1()}));
  gens.push_back(realize(hx, Word{GenLetter::s6()}));
  return gens;
}

// Breadth-first closure of the generator set; aborts past `cap` elements.
// The returned listing is sorted by the point-permutation encoding.
inline std::vector<Collineation> closure(const Hexagon& hx, const std::vector<Collineation>& gens,
                                         std::size_t cap) {
  std::vector<Collineation> out;
  std::unordered_set<std::vector<int32_t>, PermHash> seen;
  out.push_back(identity_collineation(hx));
  seen.insert(out.front().point_perm);
  for (std::size_t head = 0; head < out.size(); ++head) {
    Collineation cur = out[head];  // copy: out may reallocate
    for (const auto& g : gens) {
      Collineation nxt;
      nxt.point_perm = perm_compose(cur.point_perm, g.point_perm);
      nxt.line_perm = perm_compose(cur.line_perm, g.line_perm);
      if (seen.insert(nxt.point_perm).second) {
        if (out.size() >= cap)
          fail(ErrorKind::CapExceeded,
               "closure exceeded cap " + std::to_string(cap) + " elements");
        out.push_back(std::move(nxt));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Collineation& a, const Collineation& b) { return a.point_perm < b.point_perm; });
  return out;
}

inline Collineation conjugate(const Collineation& g, const Collineation& x) {
  // g x g^-1
  Collineation r;
  r.point_perm = perm_compose(perm_compose(g.point_perm, x.point_perm), perm_inverse(g.point_perm));
  r.line_perm = perm_compose(perm_compose(g.line_perm, x.line_perm), perm_inverse(g.line_perm));
  return r;
}

// Exact conjugacy against a full group listing.
inline bool are_conjugate(const Collineation& c1, const Collineation& c2,
                          const std::vector<Collineation>& group) {
  if (order_of(c1) != order_of(c2)) return false;
  for (const auto& g : group)
    if (conjugate(g, c1) == c2) return true;
  return false;
}

enum class ConjugacyAnswer { Yes, No, Unknown };

// Deterministic-per-seed stream of group elements: multiply the current
// product by a uniformly chosen generator each step; emission starts
// after a burn-in of 50 steps.
class RandomWalkSampler {
 public:
  RandomWalkSampler(const Hexagon& hx, std::vector<Collineation> gens, uint64_t seed)
      : gens_(std::move(gens)), rng_(seed), current_(identity_collineation(hx)) {
    for (int i = 0; i < 50; ++i) step();
  }

  const Collineation& next() {
    step();
    ++emitted_;
    return current_;
  }

  long emitted() const { return emitted_; }

 private:
  void step() {
    const Collineation& g = gens_[static_cast<std::size_t>(rng_() % gens_.size())];
    current_.point_perm = perm_compose(current_.point_perm, g.point_perm);
    current_.line_perm = perm_compose(current_.line_perm, g.line_perm);
  }

  std::vector<Collineation> gens_;
  std::mt19937_64 rng_;
  Collineation current_;
  long emitted_ = 0;
};

// Sampled conjugacy: conjugate c1 by random walk elements for `budget`
// trials; Yes on a hit, No on an order mismatch, else Unknown.
inline ConjugacyAnswer are_conjugate_sampled(const Hexagon& hx, const Collineation& c1,
                                             const Collineation& c2,
                                             const std::vector<Collineation>& gens, long budget,
                                             uint64_t seed) {
  if (order_of(c1) != order_of(c2)) return ConjugacyAnswer::No;
  if (c1 == c2) return ConjugacyAnswer::Yes;
  RandomWalkSampler walk(hx, gens, seed);
  for (long i = 0; i < budget; ++i) {
    if (conjugate(walk.next(), c1) == c2) return ConjugacyAnswer::Yes;
  }
  return ConjugacyAnswer::Unknown;
}

}  // namespace hexforge
