// Closure, orders, conjugacy, and the deterministic walk sampler.

#include <catch2/catch_amalgamated.hpp>

#include <hexforge/group.hpp>

using namespace hexforge;

namespace {
const Hexagon& hx22() {
  static Hexagon hx(HexSystem::make(SystemKind::OneF, make_field(2, 1)));
  return hx;
}
const std::vector<Collineation>& grp22() {
  static std::vector<Collineation> g = closure(hx22(), standard_generators(hx22()), 50'000);
  return g;
}
}  // namespace

TEST_CASE("orders") {
  CHECK(order_of(identity_collineation(hx22())) == 1);
  CHECK(order_of(realize(hx22(), "x4(1)")) == 2);
  CHECK(order_of(realize(hx22(), "x1(1);s1")) == 3);
  // point and line permutation orders agree
  for (const char* w : {"x4(1)", "x1(1);s1", "s1;s6", "x3(1);x6(1);s1"}) {
    auto c = realize(hx22(), w);
    CHECK(perm_order(c.point_perm) == perm_order(c.line_perm));
  }
}

TEST_CASE("closure of the standard generators") {
  const auto& g = grp22();
  CHECK(g.size() == 12096);
  CHECK(closure(hx22(), {identity_collineation(hx22())}, 10).size() == 1);
  CHECK_THROWS_AS(closure(hx22(), standard_generators(hx22()), 1000), HexError);
}

TEST_CASE("conjugacy") {
  const Hexagon& hx = hx22();
  auto x4 = realize(hx, "x4(1)");
  CHECK(are_conjugate(x4, x4, grp22()));
  // x4(1) conjugated by s6 is x2(1), still a long root elation
  auto conj_by_s6 = conjugate(realize(hx, "s6"), x4);
  CHECK(conj_by_s6 == realize(hx, "x2(1)"));
  CHECK(are_conjugate(x4, realize(hx, "x2(1)"), grp22()));
  // order mismatch shortcut
  CHECK_FALSE(are_conjugate(x4, realize(hx, "x1(1);s1"), grp22()));
  CHECK(are_conjugate_sampled(hx, x4, realize(hx, "x2(1)"), standard_generators(hx), 5000, 3) ==
        ConjugacyAnswer::Yes);
  CHECK(are_conjugate_sampled(hx, x4, realize(hx, "x1(1);s1"), standard_generators(hx), 10, 3) ==
        ConjugacyAnswer::No);
  // equal orders but no conjugator found within the budget
  CHECK(are_conjugate_sampled(hx, x4, realize(hx, "x2(1)"), standard_generators(hx), 0, 3) ==
        ConjugacyAnswer::Unknown);
}

TEST_CASE("random walk sampler") {
  const Hexagon& hx = hx22();
  auto gens = standard_generators(hx);
  // determinism: identical streams for identical seeds
  RandomWalkSampler a(hx, gens, 42), b(hx, gens, 42), c(hx, gens, 43);
  bool all_same = true, any_diff = false;
  for (int i = 0; i < 200; ++i) {
    const auto& ea = a.next();
    if (!(ea == b.next())) all_same = false;
    if (!(ea == c.next())) any_diff = true;
  }
  CHECK(all_same);
  CHECK(any_diff);

  // emitted elements preserve incidence (they are products of realized
  // generators); and a 1e4-step stream hits at least 100 distinct elements
  RandomWalkSampler w(hx, gens, 7);
  std::unordered_set<std::vector<int32_t>, PermHash> seen;
  for (int i = 0; i < 10'000; ++i) seen.insert(w.next().point_perm);
  CHECK(seen.size() >= 100);
}
