// Hexagonal systems: classes, derived maps, the identity suite,
// admissible automorphisms, and the ovoid obstruction.

#include <catch2/catch_amalgamated.hpp>

#include <hexforge/hexsystem.hpp>

using namespace hexforge;

namespace {
HexSystem h1_gf2() { return HexSystem::make(SystemKind::OneF, make_field(2, 1)); }
HexSystem h1_gf4() { return HexSystem::make(SystemKind::OneF, make_field(2, 2)); }
HexSystem h1_gf5() { return HexSystem::make(SystemKind::OneF, make_field(5, 1)); }
HexSystem h4_gf3() { return HexSystem::make(SystemKind::OneF, make_field(3, 1)); }
HexSystem h2_8() { return HexSystem::make(SystemKind::ThreeF, make_field(2, 1), make_field(2, 3)); }
HexSystem h2_27() { return HexSystem::make(SystemKind::ThreeF, make_field(3, 1), make_field(3, 3)); }
}  // namespace

TEST_CASE("make_system classes and parameters") {
  auto a = h1_gf2();
  CHECK(a.cls() == SystemClass::H1);
  CHECK(a.s_param() == 2);
  CHECK(a.t_param() == 2);

  auto b = h2_8();
  CHECK(b.cls() == SystemClass::H2_3D4);
  CHECK(b.s_param() == 2);
  CHECK(b.t_param() == 8);

  auto c = h4_gf3();
  CHECK(c.cls() == SystemClass::H4);

  CHECK_THROWS_AS(HexSystem::make(SystemKind::ThreeF, make_field(2, 1), make_field(2, 2)), HexError);
  CHECK_THROWS_AS(HexSystem::make(SystemKind::ThreeF, make_field(2, 1)), HexError);
  CHECK_THROWS_AS(parse_system_kind("NineF"), HexError);
  CHECK(parse_system_kind("OneF") == SystemKind::OneF);
}

TEST_CASE("derived maps") {
  auto s5 = h1_gf5();
  auto two = FieldElement::scalar(s5.J(), 2);
  CHECK(s5.adjoint(two) == FieldElement::scalar(s5.J(), 4));
  CHECK(s5.norm(two) == FieldElement::scalar(s5.J(), 3));  // 2^3 mod 5
  CHECK(s5.inverse(two) == FieldElement::scalar(s5.J(), 3));
  CHECK(s5.inverse(s5.one()) == s5.one());

  auto s8 = h2_8();
  FieldElement g = FieldElement::gen(s8.J());
  CHECK(s8.adjoint(g) == g.pow(6));  // g^2 * g^4
  CHECK(s8.adjoint(s8.one()) == s8.one());
  for (int r = 1; r < 8; ++r) {
    FieldElement a = FieldElement::from_rank(s8.J(), r);
    CHECK(s8.norm(a) == s8.one());  // a^7 = 1
    CHECK(s8.inverse(a) * a == s8.one());
  }
  CHECK(s8.norm(s8.zero()).is_zero());
  CHECK(s8.inverse(g) == g.pow(6));

  // traces
  auto s3 = h4_gf3();
  for (int ra = 0; ra < 3; ++ra)
    for (int rb = 0; rb < 3; ++rb)
      CHECK(s3.trace(FieldElement::from_rank(s3.J(), ra), FieldElement::from_rank(s3.J(), rb))
                .is_zero());
  CHECK(s8.trace(g).is_zero());  // g + g^2 + g^4 = 0 with g^3 = g+1
  FieldElement three8 = s8.one() + s8.one() + s8.one();
  CHECK(s8.trace(s8.one()) == three8);

  // cross
  auto s2 = h1_gf2();
  for (int ra = 0; ra < 2; ++ra)
    for (int rb = 0; rb < 2; ++rb)
      CHECK(s2.cross(FieldElement::from_rank(s2.J(), ra), FieldElement::from_rank(s2.J(), rb))
                .is_zero());
  CHECK(s8.cross(g, s8.one()) == g);
  for (int r = 0; r < 8; ++r) {
    FieldElement a = FieldElement::from_rank(s8.J(), r);
    CHECK(s8.cross(a, a) == s8.adjoint(a) + s8.adjoint(a));
  }

  // relative trace/norm of E/F agree with the unary maps
  for (int r = 0; r < 8; ++r) {
    FieldElement a = FieldElement::from_rank(s8.J(), r);
    FieldElement rel_tr = a + a.pow(2) + a.pow(4);
    FieldElement rel_nm = a * a.pow(2) * a.pow(4);
    CHECK(s8.trace(a) == rel_tr);
    CHECK(s8.norm(a) == rel_nm);
    CHECK(s8.in_F(s8.trace(a)));
  }
}

TEST_CASE("identity suite passes on all acceptance systems") {
  for (auto sys : {h1_gf2(), HexSystem::make(SystemKind::OneF, make_field(3, 1)), h1_gf4(),
                   h1_gf5(), h2_8(), h2_27()}) {
    auto rep = identity_suite(sys);
    INFO(sys.describe());
    CHECK(rep.results.size() == 11);
    for (const auto& r : rep.results) {
      INFO(r.name << " " << r.counterexample);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("system automorphisms and admissibility") {
  auto s8 = h2_8();
  FieldElement g = FieldElement::gen(s8.J());
  // sigma commutes with the adjoint and preserves norm and trace
  for (int r = 0; r < 8; ++r) {
    FieldElement a = FieldElement::from_rank(s8.J(), r);
    CHECK(s8.aut(AutLabel::Sigma, s8.adjoint(a)) == s8.adjoint(s8.aut(AutLabel::Sigma, a)));
    CHECK(s8.norm(s8.aut(AutLabel::Sigma, a)) == s8.norm(a));
    for (int rb = 0; rb < 8; ++rb) {
      FieldElement b = FieldElement::from_rank(s8.J(), rb);
      CHECK(s8.trace(s8.aut(AutLabel::Sigma, a), s8.aut(AutLabel::Sigma, b)) == s8.trace(a, b));
    }
  }
  CHECK(s8.is_admissible(AutLabel::Sigma));
  CHECK(s8.is_admissible(AutLabel::Sigma2));
  CHECK_FALSE(s8.is_admissible(AutLabel::Id));  // T(g) = 0 != 3g = g

  auto s2 = h1_gf2();
  CHECK(s2.is_admissible(AutLabel::Id));
  CHECK_THROWS_AS(s2.aut(AutLabel::Sigma, s2.one()), HexError);

  // admissibility implies T(a^h) = T(a)
  for (int r = 0; r < 8; ++r) {
    FieldElement a = FieldElement::from_rank(s8.J(), r);
    CHECK(s8.trace(s8.aut(AutLabel::Sigma, a)) == s8.trace(a));
  }
  (void)g;
}

TEST_CASE("ovoid obstruction witness") {
  // z = 1 - z^{-h}
  auto s2 = h1_gf2();
  CHECK_FALSE(s2.ovoid_obstruction_witness(AutLabel::Id).has_value());

  auto s4 = h1_gf4();
  auto w4 = s4.ovoid_obstruction_witness(AutLabel::Id);
  REQUIRE(w4.has_value());
  CHECK(*w4 == FieldElement::gen(s4.J()));  // g^2 = g - 1

  auto s8 = h2_8();
  auto sols = s8.obstruction_solutions(AutLabel::Sigma);
  REQUIRE_FALSE(sols.empty());
  FieldElement g = FieldElement::gen(s8.J());
  for (const auto& z : sols) CHECK(z == s8.one() - s8.aut(AutLabel::Sigma, z.inv()));
  // g+1 = g^3 is among the solutions (b = g: T(b) = 0, z0 = b^{sigma^2} b^{-1})
  bool has_g3 = false;
  for (const auto& z : sols) has_g3 = has_g3 || z == g + s8.one();
  CHECK(has_g3);
  FieldElement z0 = g.pow(4) * g.inv();  // -b^{h^2} b^{-1} in char 2
  CHECK(z0 == g + s8.one());
}
