// Geometry: builds, incidence, metric facts, recognizers, and the
// fixed-structure classifier on known fixed sets.

#include <catch2/catch_amalgamated.hpp>

#include <hexforge/action.hpp>
#include <hexforge/hexagon.hpp>

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
}  // namespace

TEST_CASE("build counts and axioms") {
  {
    const Hexagon& hx = hx22();
    CHECK(hx.n_points() == 63);
    CHECK(hx.n_lines() == 63);
    CHECK(hx.n_chambers() == 189);
    auto r = hx.verify_axioms();
    CHECK(r.girth == 12);
    CHECK(r.diameter == 6);
    CHECK(r.points_per_line == 3);
    CHECK(r.lines_per_point == 3);
    CHECK(r.pass);
  }
  {
    const Hexagon& hx = hx28();
    CHECK(hx.n_points() == 819);
    CHECK(hx.n_lines() == 2457);
    auto r = hx.verify_axioms();
    CHECK(r.points_per_line == 3);
    CHECK(r.lines_per_point == 9);
    CHECK(r.pass);
  }
  {
    const Hexagon& hx = hx33();
    CHECK(hx.n_points() == 364);
    CHECK(hx.n_lines() == 364);
    auto r = hx.verify_axioms();
    CHECK(r.points_per_line == 4);
    CHECK(r.pass);
  }
  // counting identity |P|(t+1) = |L|(s+1) = chambers
  for (const Hexagon* hx : {&hx22(), &hx28(), &hx33()})
    CHECK(hx->n_points() * (hx->t() + 1) == hx->n_lines() * (hx->s() + 1));
}

TEST_CASE("incidence chain and equation systems") {
  const Hexagon& hx = hx22();
  const HexSystem& sys = hx.system();
  auto P = [&](const std::string& s) { return parse_element(sys, s); };

  CHECK(hx.incident(P("(inf)"), P("[inf]")));
  CHECK(hx.incident(P("(1)"), P("[inf]")));
  CHECK_FALSE(hx.incident(P("(1)"), P("[0]")));
  CHECK(hx.incident(P("(inf)"), P("[0]")));
  CHECK(hx.incident(P("(0,0,0,0,0)"), P("[0,0,0,0,0]")));
  CHECK(hx.incident(P("(1,1,0,1,1)"), P("[1,0,0,1,0]")));
  CHECK(hx.incident(P("(1,1,0)"), P("[1,1]")));
  CHECK_THROWS_AS(hx.incident(P("[inf]"), P("(inf)")), HexError);

  // the two equation systems agree on every far pair
  for (int p = 0; p < hx.n_points(); ++p) {
    if (hx.point(p).cell != 5) continue;
    for (int l = 0; l < hx.n_lines(); ++l) {
      if (hx.line(l).cell != 5) continue;
      CHECK(hx.system_11_14(hx.point(p), hx.line(l)) == hx.system_21_24(hx.point(p), hx.line(l)));
    }
  }
}

TEST_CASE("distances and balls") {
  const Hexagon& hx = hx22();
  const HexSystem& sys = hx.system();
  auto P = [&](const std::string& s) { return parse_element(sys, s); };

  CHECK(hx.distance(P("(inf)"), P("(inf)")) == 0);
  CHECK(hx.distance(P("(inf)"), P("(1)")) == 2);
  CHECK(hx.distance(P("(inf)"), P("(1,0)")) == 2);
  CHECK(hx.distance(P("(inf)"), P("(0,1,0)")) == 4);
  CHECK(hx.distance(P("(inf)"), P("(0,1,0,1,0)")) == 6);
  CHECK(hx.is_opposite(P("(inf)"), P("(0,0,0,0,0)")));
  CHECK(hx.is_opposite(P("[inf]"), P("[0,0,0,0,0]")));
  CHECK_FALSE(hx.is_opposite(P("(inf)"), P("(0)")));
  CHECK_FALSE(hx.is_opposite(P("(inf)"), P("[0,0,0,0,0]")));  // sorts differ

  // cell/distance law from (inf)
  for (int p = 0; p < hx.n_points(); ++p) {
    int cell = hx.point(p).cell;
    int expect = cell == 0 ? 0 : (cell <= 2 ? 2 : (cell <= 4 ? 4 : 6));
    CHECK(hx.distance_v(hx.vid(Sort::Point, 0), hx.vid(Sort::Point, p)) == expect);
  }

  CHECK(hx.ball(P("(inf)"), 0).size() == 1);
  CHECK(hx.ball(P("(inf)"), 3).size() == 22);  // 7 points + 15 lines
  CHECK(hx.ball(P("[inf]"), 3).size() == 22);
}

TEST_CASE("ovoid and spread recognizers") {
  const Hexagon& hx = hx22();
  // the fixed points of theta = x1(1)s1 form a 9-point ovoid
  auto th = realize(hx, "x1(1);s1");
  std::vector<int> ov;
  for (int i = 0; i < hx.n_points(); ++i)
    if (th.point_perm[static_cast<std::size_t>(i)] == i) ov.push_back(i);
  CHECK(ov.size() == 9);
  CHECK(hx.is_ovoid(ov));
  // maximality: no point can be added
  for (int q = 0; q < hx.n_points(); ++q) {
    if (std::find(ov.begin(), ov.end(), q) != ov.end()) continue;
    bool all_opp = true;
    for (int o : ov) all_opp = all_opp && hx.points_opposite(q, o);
    CHECK_FALSE(all_opp);
  }
  // a single point fails coverage; a full line's point set is not mutually opposite
  CHECK_FALSE(hx.is_ovoid({0}));
  std::vector<int> lpts(hx.points_of_line(0).begin(), hx.points_of_line(0).end());
  CHECK_FALSE(hx.is_ovoid(lpts));
}

TEST_CASE("distance traces and regularity") {
  const Hexagon& hx = hx22();
  int x = 0;  // (inf)
  int y = -1;
  for (int p = 0; p < hx.n_points(); ++p)
    if (hx.points_opposite(x, p)) {
      y = p;
      break;
    }
  REQUIRE(y >= 0);
  CHECK(hx.distance_i_trace(Sort::Point, x, y, 2).size() == 3);  // t+1
  CHECK(hx.distance_i_trace(Sort::Point, x, y, 3).size() == 3);
  CHECK_THROWS_AS(hx.distance_i_trace(Sort::Point, x, x, 2), HexError);

  CHECK(hx.is_distance_i_regular(Sort::Line, 2));
  CHECK(hx.is_distance_i_regular(Sort::Line, 3));
  CHECK_FALSE(hx.is_distance_i_regular(Sort::Point, 2));

  CHECK(hx33().is_distance_i_regular(Sort::Point, 2));
  CHECK(hx33().is_distance_i_regular(Sort::Point, 3));
  CHECK(hx33().is_distance_i_regular(Sort::Line, 2));
  CHECK(hx33().is_distance_i_regular(Sort::Line, 3));
}

TEST_CASE("imaginary lines") {
  const Hexagon& hx = hx22();
  auto th = realize(hx, "x1(1);s1");
  std::vector<int> ov;
  for (int i = 0; i < hx.n_points(); ++i)
    if (th.point_perm[static_cast<std::size_t>(i)] == i) ov.push_back(i);
  REQUIRE(ov.size() == 9);
  for (std::size_t a = 0; a < ov.size(); ++a)
    for (std::size_t b = a + 1; b < ov.size(); ++b) {
      auto I = hx.imaginary_line(ov[a], ov[b]);
      CHECK(I.size() == 3);
      CHECK(std::find(I.begin(), I.end(), ov[a]) != I.end());
      CHECK(std::find(I.begin(), I.end(), ov[b]) != I.end());
      // closure under imaginary lines
      for (int r : I) CHECK(std::binary_search(ov.begin(), ov.end(), r));
    }
  CHECK_THROWS_AS(hx.imaginary_line(0, 1), HexError);  // not opposite
}

TEST_CASE("fixed-structure classifier") {
  const Hexagon& hx = hx22();
  // everything
  std::vector<int> allp(static_cast<std::size_t>(hx.n_points()));
  std::vector<int> alll(static_cast<std::size_t>(hx.n_lines()));
  for (int i = 0; i < hx.n_points(); ++i) allp[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < hx.n_lines(); ++i) alll[static_cast<std::size_t>(i)] = i;
  CHECK(hx.classify_substructure(allp, alll).type == StructureType::Everything);
  CHECK(hx.classify_substructure({}, {}).type == StructureType::Empty);

  // the ball fixed by x4(1)
  auto c = realize(hx, "x4(1)");
  std::vector<int> fp, fl;
  for (int i = 0; i < hx.n_points(); ++i)
    if (c.point_perm[static_cast<std::size_t>(i)] == i) fp.push_back(i);
  for (int i = 0; i < hx.n_lines(); ++i)
    if (c.line_perm[static_cast<std::size_t>(i)] == i) fl.push_back(i);
  auto fs = hx.classify_substructure(fp, fl);
  CHECK(fs.type == StructureType::BallAtPoint);
  CHECK(fs.center == 0);

  // the 9-point ovoid
  auto th = realize(hx, "x1(1);s1");
  fp.clear();
  for (int i = 0; i < hx.n_points(); ++i)
    if (th.point_perm[static_cast<std::size_t>(i)] == i) fp.push_back(i);
  auto fo = hx.classify_substructure(fp, {});
  CHECK(fo.type == StructureType::Ovoid);

  // the (2,2) subhexagon fixed by sigma x1(1) s1 inside (2,8)
  const Hexagon& big = hx28();
  auto ths = realize(big, "h:sigma;x1(1);s1");
  fp.clear();
  fl.clear();
  for (int i = 0; i < big.n_points(); ++i)
    if (ths.point_perm[static_cast<std::size_t>(i)] == i) fp.push_back(i);
  for (int i = 0; i < big.n_lines(); ++i)
    if (ths.line_perm[static_cast<std::size_t>(i)] == i) fl.push_back(i);
  auto fsub = big.classify_substructure(fp, fl);
  CHECK(fsub.type == StructureType::FullSubhexagon);
  CHECK(fsub.large);
  CHECK(fsub.thick);
  CHECK(fsub.n_points == 63);
  CHECK(fsub.n_lines == 63);
}

TEST_CASE("element literals round-trip") {
  const Hexagon& hx = hx28();
  const HexSystem& sys = hx.system();
  for (int i = 0; i < hx.n_points(); i += 37) {
    auto e = hx.point(i);
    CHECK(hx.index_of(parse_element(sys, format_element(sys, e))) == i);
  }
  for (int i = 0; i < hx.n_lines(); i += 101) {
    auto e = hx.line(i);
    CHECK(hx.index_of(parse_element(sys, format_element(sys, e))) == i);
  }
  CHECK_THROWS_AS(parse_element(sys, "(1,2,3,4,5,6)"), HexError);
  CHECK_THROWS_AS(parse_element(sys, "{inf}"), HexError);
}
