// Opposition profiles, domesticity classification, the exceptional
// search, and suite-level invariants over the full (2,2) group.

#include <catch2/catch_amalgamated.hpp>

#include <hexforge/domestic.hpp>
#include <hexforge/exportio.hpp>

using namespace hexforge;

namespace {
const Hexagon& hx22() {
  static Hexagon hx(HexSystem::make(SystemKind::OneF, make_field(2, 1)));
  return hx;
}
const Hexagon& hx28() {
  static Hexagon hx(HexSystem::make(SystemKind::ThreeF, make_field(2, 1), make_field(2, 3)));
  return hx;
}
const Hexagon& hx33() {
  static Hexagon hx(HexSystem::make(SystemKind::OneF, make_field(3, 1)));
  return hx;
}
const std::vector<Collineation>& grp22() {
  static std::vector<Collineation> g = closure(hx22(), standard_generators(hx22()), 50'000);
  return g;
}
}  // namespace

TEST_CASE("opposition profiles") {
  const Hexagon& hx = hx22();
  auto p_id = opposition_profile(hx, identity_collineation(hx));
  CHECK(p_id.points_to_opposite == 0);
  CHECK(p_id.lines_to_opposite == 0);
  CHECK(p_id.chambers_to_opposite == 0);

  auto p_x4 = opposition_profile(hx, realize(hx, "x4(1)"));
  CHECK(p_x4.lines_to_opposite == 0);
  CHECK(p_x4.points_to_opposite > 0);

  auto p_th = opposition_profile(hx, realize(hx, "x1(1);s1"));
  CHECK(p_th.points_to_opposite == 0);
  CHECK(p_th.lines_to_opposite > 0);
  CHECK(p_th.chambers_to_opposite == 0);
  CHECK_FALSE(fixes_some_chamber(hx, realize(hx, "x1(1);s1")));
}

TEST_CASE("classification reports") {
  {
    auto r = classify_collineation(hx22(), realize(hx22(), "x4(1)"));
    CHECK(r.classification == Domesticity::LineDomestic);
    CHECK(r.diagram == OppositionDiagram::G2_1_2);
    CHECK(r.fixed.type == StructureType::BallAtPoint);
    CHECK(r.fixed.center == 0);
  }
  {
    auto r = classify_collineation(hx22(), realize(hx22(), "x1(1);s1"));
    CHECK(r.classification == Domesticity::PointDomestic);
    CHECK(r.diagram == OppositionDiagram::G2_1_1);
    CHECK(r.order == 3);
    CHECK(r.fixed.type == StructureType::Ovoid);
    CHECK(r.fixed.n_points == 9);
    CHECK_FALSE(r.fixes_chamber);
  }
  {
    auto r = classify_collineation(hx28(), realize(hx28(), "h:sigma;x1(1);s1"));
    CHECK(r.classification == Domesticity::PointDomestic);
    CHECK(r.order == 3);
    CHECK(r.fixed.type == StructureType::FullSubhexagon);
    CHECK(r.fixed.large);
    CHECK(r.fixed.thick);
    CHECK(r.fixed.n_points == 63);
    CHECK(r.fixed.n_lines == 63);
    CHECK(r.fixes_chamber);
  }
  {
    auto r = classify_collineation(hx22(), identity_collineation(hx22()));
    CHECK(r.classification == Domesticity::Identity);
    CHECK(r.diagram == OppositionDiagram::EmptyDiagram);
  }
  {
    auto r = classify_collineation(hx22(), realize(hx22(), "x3(1)"));
    CHECK(r.classification == Domesticity::NotDomestic);
  }
  {
    auto r = classify_collineation(hx33(), realize(hx33(), "x3(1)"));
    CHECK(r.classification == Domesticity::PointDomestic);
    CHECK(r.fixed.type == StructureType::BallAtLine);
    CHECK(r.fixed.center == 0);
  }
}

TEST_CASE("trichotomy over the full (2,2) group") {
  const Hexagon& hx = hx22();
  long n_point = 0, n_line = 0, n_exc = 0;
  for (const auto& g : grp22()) {
    if (g.is_identity()) continue;
    auto p = opposition_profile(hx, g);
    Domesticity d = classify_profile(p, false);
    if (d == Domesticity::PointDomestic) {
      ++n_point;
      CHECK(order_of(g) == 3);  // every nontrivial point-domestic has order 3
    } else if (d == Domesticity::LineDomestic) {
      ++n_line;
    } else if (d == Domesticity::ExceptionalDomestic) {
      ++n_exc;
      CHECK(p.chambers_to_opposite == 0);
      CHECK(p.points_to_opposite > 0);
      CHECK(p.lines_to_opposite > 0);
    }
    // every opposite chamber rests on an opposite point and an opposite line
    CHECK(p.chambers_to_opposite <= p.points_to_opposite * (hx.t() + 1));
    CHECK(p.chambers_to_opposite <= p.lines_to_opposite * (hx.s() + 1));
  }
  CHECK(n_point > 0);
  CHECK(n_line > 0);
  CHECK(n_exc > 0);
}

TEST_CASE("exceptional search, exhaustive at (2,2)") {
  auto f = search_exceptional(hx22(), SearchMode::Exhaustive, 0, 0);
  CHECK(f.found);
  CHECK(f.n_hits == 378);
  CHECK(f.common_order == 4);
  CHECK(f.conjugacy_classes == 1);
}

TEST_CASE("exceptional search, random modes") {
  // (2,8): seeded random search finds an order-4 exceptional element
  auto f = search_exceptional(hx28(), SearchMode::Random, 100'000, 1);
  CHECK(f.found);
  CHECK(f.common_order == 4);
  CHECK(f.step_index >= 1);
  REQUIRE(f.witness.has_value());
  auto p = opposition_profile(hx28(), *f.witness);
  CHECK(is_exceptional_profile(p));

  // (3,3): no exceptional element exists; a budgeted random search reports
  // exhaustion, and the default-cap exhaustive mode refuses the closure
  auto f33 = search_exceptional(hx33(), SearchMode::Random, 3'000, 5);
  CHECK_FALSE(f33.found);
  CHECK(f33.budget_exhausted);
  CHECK_THROWS_AS(search_exceptional(hx33(), SearchMode::Exhaustive, 0, 0), HexError);
}

TEST_CASE("no sampled point-domestic element of (2,8) fixes an ovoid") {
  // Point-domestic collineations of the triality hexagon live in the
  // outer coset; sample the class of theta_sigma through random
  // conjugators and check every hit fixes a non-ovoid structure.
  const Hexagon& hx = hx28();
  auto theta = realize(hx, "h:sigma;x1(1);s1");
  auto gens = standard_generators(hx);
  RandomWalkSampler walk(hx, gens, 99);
  for (int trial = 0; trial < 12; ++trial) {
    Collineation c = conjugate(walk.next(), theta);
    auto p = opposition_profile(hx, c);
    REQUIRE(classify_profile(p, false) == Domesticity::PointDomestic);
    std::vector<int> fp, fl;
    for (int i = 0; i < hx.n_points(); ++i)
      if (c.point_perm[static_cast<std::size_t>(i)] == i) fp.push_back(i);
    for (int i = 0; i < hx.n_lines(); ++i)
      if (c.line_perm[static_cast<std::size_t>(i)] == i) fl.push_back(i);
    auto fs = hx.classify_substructure(fp, fl);
    CHECK(fs.type != StructureType::Ovoid);
    CHECK(fs.type == StructureType::FullSubhexagon);
  }
}

TEST_CASE("suite reports and serialization") {
  auto rep = theorem1_suite(hx33(), 11);
  CHECK(rep.all_pass());
  json j = suite_report_json(rep);
  CHECK(j["pass"].get<bool>());
  CHECK(j["clauses"].size() >= 8);

  auto dr = classify_collineation(hx22(), realize(hx22(), "x1(1);s1"));
  json dj = domesticity_report_json(dr);
  CHECK(dj["classification"] == "point_domestic");
  CHECK(dj["order"] == 3);
  CHECK(dj["fixed"]["structure"] == "ovoid");
}
