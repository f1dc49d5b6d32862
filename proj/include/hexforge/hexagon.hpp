#pragma once
// The coordinatised hexagon built from a hexagonal system.
//
// Elements live in cells 0..5 (cell = number of coordinates).  Points:
//   (inf), (t), (a,t), (t,a,t'), (a,t,a',t'), (t,a,t',a',t'')
// with t,t',t'' in F and a,a' in J; lines dually with square brackets:
//   [inf], [b], [t,a], [b,u,b'], [t,a,t',a'], [b,u,b',u',b''].
// Coordinates alternate between F and J; odd point cells and even line
// cells start with an F coordinate.
//
// Incidence: elements whose cells differ by one are incident exactly when
// the shorter tuple is a prefix of the longer; the two cell-0 elements
// are incident; a 5-coordinate point (t,a,t',a',t'') lies on a
// 5-coordinate line [b,u,b',u',b''] iff
//     u   = t'' + t N(b) - T(a',b) + T(a,b#)
//     b'  = a' - (a x b) - t b#
//     u'  = t' + t^2 N(b) - t t'' + t T(a,b#) + T(a#,b) - T(a,a')
//     b'' = a + t b
// equivalently iff
//     a   = b'' - t b
//     t'  = u' + t^2 N(b) + u t - t T(b'',b#) + T(b',b'') + T(b''#,b)
//     a'  = b' + (b x b'') - t b#
//     t'' = u - t N(b) + T(b,b') + T(b'',b#).
// Both systems are evaluated and must agree.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hexsystem.hpp"
#include "util.hpp"

namespace hexforge {

enum class Sort : uint8_t { Point, Line };

struct HexElement {
  Sort sort = Sort::Point;
  int cell = 0;
  std::array<FieldElement, 5> coord{};

  bool is_point() const { return sort == Sort::Point; }
};

// True when coordinate position j (0-based) of a cell-n element of the
// given sort is F-valued.
inline bool coord_is_F(Sort sort, int cell, int j) {
  bool first_is_F = (sort == Sort::Point) ? (cell % 2 == 1) : (cell % 2 == 0);
  return (j % 2 == 0) ? first_is_F : !first_is_F;
}

inline std::string format_element(const HexSystem& sys, const HexElement& e) {
  char open = e.is_point() ? '(' : '[';
  char close = e.is_point() ? ')' : ']';
  if (e.cell == 0) return std::string(1, open) + "inf" + close;
  std::string s(1, open);
  for (int j = 0; j < e.cell; ++j) {
    if (j) s += ",";
    if (coord_is_F(e.sort, e.cell, j))
      s += sys.to_F(e.coord[static_cast<std::size_t>(j)]).format();
    else
      s += e.coord[static_cast<std::size_t>(j)].format();
  }
  return s + close;
}

// Points "(c1,...,cn)" / "(inf)", lines "[c1,...,cn]" / "[inf]";
// coordinates are parsed F/J-alternating by cell.
inline HexElement parse_element(const HexSystem& sys, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2) fail(ErrorKind::SyntaxError, "element literal too short: '" + text + "'");
  HexElement e;
  char open = s.front(), close = s.back();
  if (open == '(' && close == ')')
    e.sort = Sort::Point;
  else if (open == '[' && close == ']')
    e.sort = Sort::Line;
  else
    fail(ErrorKind::SyntaxError, "element literal must be (...) or [...]: '" + text + "'");
  std::string body = s.substr(1, s.size() - 2);
  if (body == "inf") {
    e.cell = 0;
    return e;
  }
  std::vector<std::string> parts;
  {
    std::string cur;
    int depth = 0;
    for (char ch : body) {
      if (ch == '[') ++depth;
      if (ch == ']') --depth;
      if (ch == ',' && depth == 0) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
  }
  if (parts.size() < 1 || parts.size() > 5)
    fail(ErrorKind::SyntaxError, "element needs 1..5 coordinates or inf");
  e.cell = static_cast<int>(parts.size());
  for (int j = 0; j < e.cell; ++j) {
    if (coord_is_F(e.sort, e.cell, j))
      e.coord[static_cast<std::size_t>(j)] = sys.embed_scalar(parse_field_literal(sys.F(), parts[static_cast<std::size_t>(j)]));
    else
      e.coord[static_cast<std::size_t>(j)] = parse_field_literal(sys.J(), parts[static_cast<std::size_t>(j)]);
  }
  return e;
}

enum class StructureType {
  Everything,
  Empty,
  BallAtPoint,
  BallAtLine,
  Ovoid,
  Spread,
  FullSubhexagon,
  IdealSubhexagon,
  Other,
};

inline const char* structure_type_name(StructureType t) {
  switch (t) {
    case StructureType::Everything: return "everything";
    case StructureType::Empty: return "empty";
    case StructureType::BallAtPoint: return "ball_at_point";
    case StructureType::BallAtLine: return "ball_at_line";
    case StructureType::Ovoid: return "ovoid";
    case StructureType::Spread: return "spread";
    case StructureType::FullSubhexagon: return "full_subhexagon";
    case StructureType::IdealSubhexagon: return "ideal_subhexagon";
    case StructureType::Other: return "other";
  }
  return "?";
}

struct FixedStructure {
  StructureType type = StructureType::Empty;
  int center = -1;  // point or line index for the ball cases
  int n_points = 0, n_lines = 0;
  bool full = false, ideal = false, large = false, thick = false;
  bool subhexagon = false;
};

struct AxiomReport {
  int n_points = 0, n_lines = 0, n_chambers = 0;
  int expected_points = 0, expected_lines = 0;
  int girth = 0, diameter = 0;
  int points_per_line = 0, lines_per_point = 0;  // constant degrees, -1 if not constant
  bool thick = false;
  bool pass = false;
};

class Hexagon {
 public:
  explicit Hexagon(const HexSystem& sys, const std::vector<std::vector<int32_t>>* cached_line_pts = nullptr)
      : sys_(sys) {
    build(cached_line_pts);
  }

  const HexSystem& system() const { return sys_; }
  int s() const { return s_; }
  int t() const { return t_; }
  int n_points() const { return static_cast<int>(points_.size()); }
  int n_lines() const { return static_cast<int>(lines_.size()); }
  int n_chambers() const { return n_points() * (t_ + 1); }
  const HexElement& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
  const HexElement& line(int i) const { return lines_[static_cast<std::size_t>(i)]; }
  const std::vector<int32_t>& points_of_line(int l) const { return line_pts_[static_cast<std::size_t>(l)]; }
  const std::vector<int32_t>& lines_of_point(int p) const { return point_lines_[static_cast<std::size_t>(p)]; }

  // ---- canonical indexing -------------------------------------------
  int index_of(const HexElement& e) const {
    const auto& offs = (e.sort == Sort::Point) ? point_cell_offset_ : line_cell_offset_;
    int idx = offs[static_cast<std::size_t>(e.cell)];
    int w = 1;
    // mixed radix, first coordinate most significant
    for (int j = e.cell - 1; j >= 0; --j) {
      int r, radix;
      if (coord_is_F(e.sort, e.cell, j)) {
        r = sys_.f_rank(e.coord[static_cast<std::size_t>(j)]);
        radix = s_;
        if (r < 0) fail(ErrorKind::NormNotInBase, "coordinate outside F in " + format_element(sys_, e));
      } else {
        r = e.coord[static_cast<std::size_t>(j)].rank();
        radix = t_;
      }
      idx += r * w;
      w *= radix;
    }
    return idx;
  }

  // ---- incidence ------------------------------------------------------
  // Chain rule for cells differing by one, plus the two equation systems
  // for the (5,5) case; the systems are cross-checked against each other.
  bool incident(const HexElement& p, const HexElement& L) const {
    if (p.sort != Sort::Point || L.sort != Sort::Line)
      fail(ErrorKind::SortMismatch, "incident(point, line) expected");
    if (p.cell == 0 && L.cell == 0) return true;
    if (p.cell == L.cell + 1) return prefix_match(p, L);
    if (L.cell == p.cell + 1) return prefix_match(L, p);
    if (p.cell == 5 && L.cell == 5) {
      bool first = system_11_14(p, L);
      bool second = system_21_24(p, L);
      if (first != second)
        fail(ErrorKind::AxiomViolation, "incidence systems disagree on " + format_element(sys_, p) +
                                            " vs " + format_element(sys_, L));
      return first;
    }
    return false;
  }

  bool system_11_14(const HexElement& p, const HexElement& L) const {
    // p = (t,a,t',a',t''), L = [b,u,b',u',b'']
    const FieldElement &t = p.coord[0], &a = p.coord[1], &tp = p.coord[2], &ap = p.coord[3],
                       &tpp = p.coord[4];
    const FieldElement &b = L.coord[0], &u = L.coord[1], &bp = L.coord[2], &up = L.coord[3],
                       &bpp = L.coord[4];
    FieldElement Nb = sys_.norm(b);
    FieldElement badj = sys_.adjoint(b);
    if (u != tpp + t * Nb - sys_.trace(ap, b) + sys_.trace(a, badj)) return false;
    if (bp != ap - sys_.cross(a, b) - t * badj) return false;
    if (up != tp + t * t * Nb - t * tpp + t * sys_.trace(a, badj) + sys_.trace(sys_.adjoint(a), b) -
                  sys_.trace(a, ap))
      return false;
    if (bpp != a + t * b) return false;
    return true;
  }

  bool system_21_24(const HexElement& p, const HexElement& L) const {
    const FieldElement &t = p.coord[0], &a = p.coord[1], &tp = p.coord[2], &ap = p.coord[3],
                       &tpp = p.coord[4];
    const FieldElement &b = L.coord[0], &u = L.coord[1], &bp = L.coord[2], &up = L.coord[3],
                       &bpp = L.coord[4];
    FieldElement Nb = sys_.norm(b);
    FieldElement badj = sys_.adjoint(b);
    if (a != bpp - t * b) return false;
    if (tp != up + t * t * Nb + u * t - t * sys_.trace(bpp, badj) + sys_.trace(bp, bpp) +
                  sys_.trace(sys_.adjoint(bpp), b))
      return false;
    if (ap != bp + sys_.cross(b, bpp) - t * badj) return false;
    if (tpp != u - t * Nb + sys_.trace(b, bp) + sys_.trace(bpp, badj)) return false;
    return true;
  }

  // ---- metric ---------------------------------------------------------
  int n_vertices() const { return n_points() + n_lines(); }
  int vid(Sort sort, int idx) const { return sort == Sort::Point ? idx : n_points() + idx; }

  int distance_v(int va, int vb) const {
    if (!dist_.empty()) return dist_[static_cast<std::size_t>(va) * static_cast<std::size_t>(n_vertices()) + static_cast<std::size_t>(vb)];
    return bfs_distance(va, vb);
  }

  // One row of the distance matrix; falls back to a single BFS when the
  // full matrix is not materialized.  `scratch` is reused between calls.
  const uint8_t* dist_row(int v, std::vector<uint8_t>& scratch) const {
    if (!dist_.empty()) return &dist_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_vertices())];
    scratch.resize(static_cast<std::size_t>(n_vertices()));
    bfs_row(v, scratch.data());
    return scratch.data();
  }
  int distance(const HexElement& x, const HexElement& y) const {
    return distance_v(vid(x.sort, index_of(x)), vid(y.sort, index_of(y)));
  }
  bool is_opposite_v(int va, int vb) const { return distance_v(va, vb) == 6; }
  bool is_opposite(const HexElement& x, const HexElement& y) const {
    if (x.sort != y.sort) return false;
    return distance(x, y) == 6;
  }
  bool points_opposite(int i, int j) const {
    return (opp_pts_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1u;
  }
  bool lines_opposite(int i, int j) const {
    return (opp_lines_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1u;
  }

  std::vector<int> ball_v(int v, int r) const {
    std::vector<int> out;
    std::vector<uint8_t> scratch;
    const uint8_t* row = dist_row(v, scratch);
    for (int u = 0; u < n_vertices(); ++u)
      if (row[u] <= r) out.push_back(u);
    return out;
  }
  std::vector<int> ball(const HexElement& x, int r) const {
    if (r < 0 || r > 6) fail(ErrorKind::SortMismatch, "radius must be 0..6");
    return ball_v(vid(x.sort, index_of(x)), r);
  }

  // ---- recognizers ----------------------------------------------------
  // Mutually opposite points covering every element within distance 3.
  bool is_ovoid(const std::vector<int>& pts) const { return opposed_cover(pts, Sort::Point); }
  bool is_spread(const std::vector<int>& lns) const { return opposed_cover(lns, Sort::Line); }

  // Distance-i-trace Gamma_i(x) cap Gamma_{6-i}(y) for opposite x, y.
  std::vector<int> distance_i_trace(Sort sort, int xi, int yi, int i) const {
    int vx = vid(sort, xi), vy = vid(sort, yi);
    std::vector<uint8_t> sx, sy;
    const uint8_t* rx = dist_row(vx, sx);
    const uint8_t* ry = dist_row(vy, sy);
    if (rx[vy] != 6) fail(ErrorKind::NotOpposite, "trace needs opposite elements");
    std::vector<int> out;
    // i = 2: same-sort elements; i = 3: the other sort
    if (i == 2) {
      int n = (sort == Sort::Point) ? n_points() : n_lines();
      for (int z = 0; z < n; ++z) {
        int vz = vid(sort, z);
        if (rx[vz] == 2 && ry[vz] == 4) out.push_back(z);
      }
    } else if (i == 3) {
      Sort other = (sort == Sort::Point) ? Sort::Line : Sort::Point;
      int n = (other == Sort::Point) ? n_points() : n_lines();
      for (int z = 0; z < n; ++z) {
        int vz = vid(other, z);
        if (rx[vz] == 3 && ry[vz] == 3) out.push_back(z);
      }
    } else {
      fail(ErrorKind::SortMismatch, "trace index must be 2 or 3");
    }
    return out;
  }

  // Distinct distance-i-traces share at most one element.  Exhaustive for
  // small hexagons, otherwise seeded sampling of at least min_samples
  // trace pairs.
  bool is_distance_i_regular(Sort sort, int i, uint64_t seed = 1,
                             long min_samples = 100000) const {
    int n = (sort == Sort::Point) ? n_points() : n_lines();
    long opp_per = 1;  // rough count of opposites per element
    {
      int v0 = vid(sort, 0);
      long c = 0;
      for (int z = 0; z < n; ++z)
        if (distance_v(v0, vid(sort, z)) == 6) ++c;
      opp_per = c;
    }
    long exhaustive_cost = static_cast<long>(n) * opp_per * opp_per / 2;
    if (exhaustive_cost <= 30'000'000L) {
      for (int x = 0; x < n; ++x) {
        std::vector<std::vector<int>> traces;
        int vx = vid(sort, x);
        for (int y = 0; y < n; ++y) {
          if (distance_v(vx, vid(sort, y)) != 6) continue;
          auto tr = distance_i_trace(sort, x, y, i);
          std::sort(tr.begin(), tr.end());
          traces.push_back(std::move(tr));
        }
        std::sort(traces.begin(), traces.end());
        traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
        for (std::size_t a = 0; a < traces.size(); ++a)
          for (std::size_t b = a + 1; b < traces.size(); ++b)
            if (intersection_size(traces[a], traces[b]) > 1) return false;
      }
      return true;
    }
    std::mt19937_64 rng(seed);
    long done = 0;
    while (done < min_samples) {
      int x = static_cast<int>(rng() % n);
      int y1 = static_cast<int>(rng() % n);
      int y2 = static_cast<int>(rng() % n);
      int vx = vid(sort, x);
      if (distance_v(vx, vid(sort, y1)) != 6 || distance_v(vx, vid(sort, y2)) != 6) continue;
      auto t1 = distance_i_trace(sort, x, y1, i);
      auto t2 = distance_i_trace(sort, x, y2, i);
      std::sort(t1.begin(), t1.end());
      std::sort(t2.begin(), t2.end());
      ++done;
      if (t1 == t2) continue;
      if (intersection_size(t1, t2) > 1) return false;
    }
    return true;
  }

  // Lines at distance 3 from both of two opposite points.
  std::vector<int> lines_between(int p, int q) const {
    int vp = vid(Sort::Point, p), vq = vid(Sort::Point, q);
    std::vector<uint8_t> sp, sq;
    const uint8_t* rp = dist_row(vp, sp);
    const uint8_t* rq = dist_row(vq, sq);
    if (rp[vq] != 6) fail(ErrorKind::NotOpposite, "imaginary line needs opposite points");
    std::vector<int> out;
    for (int l = 0; l < n_lines(); ++l) {
      int vl = vid(Sort::Line, l);
      if (rp[vl] == 3 && rq[vl] == 3) out.push_back(l);
    }
    return out;
  }

  // I(p,q) = points at distance 3 from every line of lines_between(p,q),
  // cross-checked against the two-line shortcut.
  std::vector<int> imaginary_line(int p, int q) const {
    auto L = lines_between(p, q);
    std::vector<std::vector<uint8_t>> scratch(L.size());
    std::vector<const uint8_t*> rows(L.size());
    for (std::size_t k = 0; k < L.size(); ++k)
      rows[k] = dist_row(vid(Sort::Line, L[k]), scratch[k]);
    std::vector<int> out;
    for (int r = 0; r < n_points(); ++r) {
      bool all3 = true;
      for (std::size_t k = 0; k < L.size(); ++k)
        if (rows[k][vid(Sort::Point, r)] != 3) {
          all3 = false;
          break;
        }
      if (all3) out.push_back(r);
    }
    if (L.size() >= 2) {
      std::vector<int> twoline;
      for (int r = 0; r < n_points(); ++r)
        if (rows[0][vid(Sort::Point, r)] == 3 && rows[1][vid(Sort::Point, r)] == 3)
          twoline.push_back(r);
      if (twoline != out)
        fail(ErrorKind::AxiomViolation, "distance-3-regularity shortcut disagrees for imaginary line");
    }
    return out;
  }

  // ---- axiom verification ---------------------------------------------
  AxiomReport verify_axioms() const {
    AxiomReport r;
    r.n_points = n_points();
    r.n_lines = n_lines();
    r.n_chambers = n_chambers();
    int st = s_ * t_;
    r.expected_points = (1 + s_) * (1 + st + st * st);
    r.expected_lines = (1 + t_) * (1 + st + st * st);
    r.points_per_line = s_ + 1;
    for (const auto& pl : line_pts_)
      if (static_cast<int>(pl.size()) != s_ + 1) r.points_per_line = -1;
    r.lines_per_point = t_ + 1;
    for (const auto& pl : point_lines_)
      if (static_cast<int>(pl.size()) != t_ + 1) r.lines_per_point = -1;
    r.thick = (s_ >= 2 && t_ >= 2);
    r.girth = graph_girth();
    r.diameter = graph_diameter();
    r.pass = r.n_points == r.expected_points && r.n_lines == r.expected_lines && r.girth == 12 &&
             r.diameter == 6 && r.points_per_line == s_ + 1 && r.lines_per_point == t_ + 1;
    return r;
  }

  // ---- fixed-structure classification ----------------------------------
  FixedStructure classify_substructure(const std::vector<int>& fixed_points,
                                       const std::vector<int>& fixed_lines) const {
    FixedStructure fs;
    fs.n_points = static_cast<int>(fixed_points.size());
    fs.n_lines = static_cast<int>(fixed_lines.size());
    if (fs.n_points == n_points() && fs.n_lines == n_lines()) {
      fs.type = StructureType::Everything;
      fs.full = fs.ideal = fs.large = fs.thick = true;
      return fs;
    }
    if (fs.n_points == 0 && fs.n_lines == 0) {
      fs.type = StructureType::Empty;
      return fs;
    }

    std::vector<char> pfix(static_cast<std::size_t>(n_points()), 0),
        lfix(static_cast<std::size_t>(n_lines()), 0);
    for (int p : fixed_points) pfix[static_cast<std::size_t>(p)] = 1;
    for (int l : fixed_lines) lfix[static_cast<std::size_t>(l)] = 1;

    // set-level flags
    fs.full = true;
    for (int l : fixed_lines)
      for (int p : points_of_line(l))
        if (!pfix[static_cast<std::size_t>(p)]) fs.full = false;
    fs.ideal = true;
    for (int p : fixed_points)
      for (int l : lines_of_point(p))
        if (!lfix[static_cast<std::size_t>(l)]) fs.ideal = false;
    fs.large = structure_is_large(fixed_points, fixed_lines);

    // ovoid / spread
    if (fs.n_lines == 0 && is_ovoid(fixed_points)) {
      fs.type = StructureType::Ovoid;
      return fs;
    }
    if (fs.n_points == 0 && is_spread(fixed_lines)) {
      fs.type = StructureType::Spread;
      return fs;
    }

    // radius-3 balls
    std::vector<int> fixed_vs;
    for (int p : fixed_points) fixed_vs.push_back(vid(Sort::Point, p));
    for (int l : fixed_lines) fixed_vs.push_back(vid(Sort::Line, l));
    std::sort(fixed_vs.begin(), fixed_vs.end());
    for (int v : fixed_vs) {
      auto b = ball_v(v, 3);
      std::sort(b.begin(), b.end());
      if (b == fixed_vs) {
        bool is_pt = v < n_points();
        fs.type = is_pt ? StructureType::BallAtPoint : StructureType::BallAtLine;
        fs.center = is_pt ? v : v - n_points();
        return fs;
      }
    }

    // operational subhexagon test: connected, every element on an induced
    // 12-cycle, induced diameter 6; thickness recorded separately
    if (fs.n_points > 0 && fs.n_lines > 0 &&
        induced_subhexagon(fixed_points, fixed_lines, fs.thick)) {
      fs.subhexagon = true;
      if (fs.full && !fs.ideal) {
        fs.type = StructureType::FullSubhexagon;
        return fs;
      }
      if (fs.ideal && !fs.full) {
        fs.type = StructureType::IdealSubhexagon;
        return fs;
      }
    }
    fs.type = StructureType::Other;
    return fs;
  }

 private:
  // ---- construction ---------------------------------------------------
  void build(const std::vector<std::vector<int32_t>>* cached_line_pts) {
    s_ = sys_.s_param();
    t_ = sys_.t_param();
    long st = static_cast<long>(s_) * t_;
    long npts = (1 + s_) * (1 + st + st * st);
    long nlns = (1 + t_) * (1 + st + st * st);
    if (npts + nlns > 100'000) fail(ErrorKind::TooLarge, "hexagon would have more than 1e5 elements");

    enumerate(Sort::Point, points_, point_cell_offset_);
    enumerate(Sort::Line, lines_, line_cell_offset_);
    if (static_cast<long>(points_.size()) != npts || static_cast<long>(lines_.size()) != nlns)
      fail(ErrorKind::AxiomViolation, "element counts disagree with parameters");

    if (cached_line_pts) {
      adopt_incidence(*cached_line_pts);
    } else {
      build_incidence();
    }
    if (n_vertices() <= 4000) build_distance_matrix();
    build_opposition();
  }

  void adopt_incidence(const std::vector<std::vector<int32_t>>& cached) {
    if (static_cast<int>(cached.size()) != n_lines())
      fail(ErrorKind::IOFailure, "cached incidence has the wrong line count");
    line_pts_ = cached;
    point_lines_.assign(points_.size(), {});
    for (int l = 0; l < n_lines(); ++l) {
      if (static_cast<int>(line_pts_[static_cast<std::size_t>(l)].size()) != s_ + 1)
        fail(ErrorKind::IOFailure, "cached incidence has a malformed line");
      for (int p : line_pts_[static_cast<std::size_t>(l)]) {
        if (p < 0 || p >= n_points()) fail(ErrorKind::IOFailure, "cached incidence out of range");
        point_lines_[static_cast<std::size_t>(p)].push_back(l);
      }
    }
    for (auto& v : point_lines_)
      if (static_cast<int>(v.size()) != t_ + 1)
        fail(ErrorKind::IOFailure, "cached incidence has a malformed point");
  }

  void enumerate(Sort sort, std::vector<HexElement>& out, std::array<int, 7>& offsets) {
    out.clear();
    offsets[0] = 0;
    for (int cell = 0; cell <= 5; ++cell) {
      if (cell == 0) {
        HexElement e;
        e.sort = sort;
        e.cell = 0;
        out.push_back(e);
      } else {
        std::array<int, 5> radix{};
        long total = 1;
        for (int j = 0; j < cell; ++j) {
          radix[static_cast<std::size_t>(j)] = coord_is_F(sort, cell, j) ? s_ : t_;
          total *= radix[static_cast<std::size_t>(j)];
        }
        for (long code = 0; code < total; ++code) {
          HexElement e;
          e.sort = sort;
          e.cell = cell;
          long c = code;
          for (int j = cell - 1; j >= 0; --j) {
            int r = static_cast<int>(c % radix[static_cast<std::size_t>(j)]);
            c /= radix[static_cast<std::size_t>(j)];
            e.coord[static_cast<std::size_t>(j)] = coord_is_F(sort, cell, j)
                                                       ? sys_.f_element(r)
                                                       : FieldElement::from_rank(sys_.J(), r);
          }
          out.push_back(e);
        }
      }
      offsets[static_cast<std::size_t>(cell) + 1] = static_cast<int>(out.size());
    }
  }

  void build_incidence() {
    line_pts_.assign(lines_.size(), {});
    point_lines_.assign(points_.size(), {});
    auto connect = [&](int p, int l) {
      line_pts_[static_cast<std::size_t>(l)].push_back(p);
      point_lines_[static_cast<std::size_t>(p)].push_back(l);
    };
    for (int l = 0; l < n_lines(); ++l) {
      const HexElement& L = lines_[static_cast<std::size_t>(l)];
      if (L.cell == 0) {
        connect(0, l);  // (inf) * [inf]
        for (int r = 0; r < s_; ++r) {
          HexElement p;
          p.sort = Sort::Point;
          p.cell = 1;
          p.coord[0] = sys_.f_element(r);
          connect(index_of(p), l);
        }
        continue;
      }
      if (L.cell < 5) {
        // the prefix point (cell-1) and the extension points (cell+1)
        HexElement down;
        down.sort = Sort::Point;
        down.cell = L.cell - 1;
        for (int j = 0; j < L.cell - 1; ++j) down.coord[static_cast<std::size_t>(j)] = L.coord[static_cast<std::size_t>(j)];
        connect(index_of(down), l);
        bool up_is_F = coord_is_F(Sort::Point, L.cell + 1, L.cell);
        int radix = up_is_F ? s_ : t_;
        for (int r = 0; r < radix; ++r) {
          HexElement up;
          up.sort = Sort::Point;
          up.cell = L.cell + 1;
          for (int j = 0; j < L.cell; ++j) up.coord[static_cast<std::size_t>(j)] = L.coord[static_cast<std::size_t>(j)];
          up.coord[static_cast<std::size_t>(L.cell)] =
              up_is_F ? sys_.f_element(r) : FieldElement::from_rank(sys_.J(), r);
          connect(index_of(up), l);
        }
        continue;
      }
      // cell-5 line: prefix point + one far point per t in F via the
      // second equation system; the first system must agree.
      HexElement down;
      down.sort = Sort::Point;
      down.cell = 4;
      for (int j = 0; j < 4; ++j) down.coord[static_cast<std::size_t>(j)] = L.coord[static_cast<std::size_t>(j)];
      connect(index_of(down), l);
      const FieldElement &b = L.coord[0], &u = L.coord[1], &bp = L.coord[2], &up = L.coord[3],
                         &bpp = L.coord[4];
      FieldElement Nb = sys_.norm(b);
      FieldElement badj = sys_.adjoint(b);
      for (int r = 0; r < s_; ++r) {
        FieldElement t = sys_.f_element(r);
        HexElement p;
        p.sort = Sort::Point;
        p.cell = 5;
        p.coord[0] = t;
        p.coord[1] = bpp - t * b;                                             // a
        p.coord[2] = up + t * t * Nb + u * t - t * sys_.trace(bpp, badj) +    // t'
                     sys_.trace(bp, bpp) + sys_.trace(sys_.adjoint(bpp), b);
        p.coord[3] = bp + sys_.cross(b, bpp) - t * badj;                      // a'
        p.coord[4] = u - t * Nb + sys_.trace(b, bp) + sys_.trace(bpp, badj);  // t''
        if (!system_11_14(p, L))
          fail(ErrorKind::AxiomViolation, "equation systems disagree while building incidence");
        connect(index_of(p), l);
      }
    }
    for (auto& v : line_pts_) std::sort(v.begin(), v.end());
    for (auto& v : point_lines_) std::sort(v.begin(), v.end());
  }

  void build_distance_matrix() {
    int V = n_vertices();
    dist_.assign(static_cast<std::size_t>(V) * static_cast<std::size_t>(V), 255);
    parallel_for(static_cast<std::size_t>(V), [&](std::size_t src) {
      bfs_row(static_cast<int>(src), &dist_[src * static_cast<std::size_t>(V)]);
    });
  }

  void bfs_row(int src, uint8_t* row) const {
    int V = n_vertices();
    for (int i = 0; i < V; ++i) row[i] = 255;
    std::vector<int32_t> q;
    q.reserve(static_cast<std::size_t>(V));
    q.push_back(src);
    row[src] = 0;
    for (std::size_t h = 0; h < q.size(); ++h) {
      int v = q[h];
      uint8_t d = row[v];
      auto visit = [&](int w) {
        if (row[w] == 255) {
          row[w] = static_cast<uint8_t>(d + 1);
          q.push_back(w);
        }
      };
      if (v < n_points())
        for (int l : point_lines_[static_cast<std::size_t>(v)]) visit(vid(Sort::Line, l));
      else
        for (int p : line_pts_[static_cast<std::size_t>(v - n_points())]) visit(p);
    }
  }

  int bfs_distance(int va, int vb) const {
    std::vector<uint8_t> row(static_cast<std::size_t>(n_vertices()));
    bfs_row(va, row.data());
    return row[static_cast<std::size_t>(vb)];
  }

  void build_opposition() {
    std::size_t wp = (static_cast<std::size_t>(n_points()) + 63) / 64;
    std::size_t wl = (static_cast<std::size_t>(n_lines()) + 63) / 64;
    opp_pts_.assign(static_cast<std::size_t>(n_points()), std::vector<uint64_t>(wp, 0));
    opp_lines_.assign(static_cast<std::size_t>(n_lines()), std::vector<uint64_t>(wl, 0));
    parallel_for(static_cast<std::size_t>(n_points()), [&](std::size_t i) {
      std::vector<uint8_t> row;
      const uint8_t* d;
      if (!dist_.empty()) {
        d = &dist_[i * static_cast<std::size_t>(n_vertices())];
      } else {
        row.resize(static_cast<std::size_t>(n_vertices()));
        bfs_row(static_cast<int>(i), row.data());
        d = row.data();
      }
      for (int j = 0; j < n_points(); ++j)
        if (d[j] == 6) opp_pts_[i][static_cast<std::size_t>(j >> 6)] |= (1ull << (j & 63));
    });
    parallel_for(static_cast<std::size_t>(n_lines()), [&](std::size_t i) {
      std::vector<uint8_t> row;
      const uint8_t* d;
      std::size_t v = i + static_cast<std::size_t>(n_points());
      if (!dist_.empty()) {
        d = &dist_[v * static_cast<std::size_t>(n_vertices())];
      } else {
        row.resize(static_cast<std::size_t>(n_vertices()));
        bfs_row(static_cast<int>(v), row.data());
        d = row.data();
      }
      for (int j = 0; j < n_lines(); ++j)
        if (d[n_points() + j] == 6) opp_lines_[i][static_cast<std::size_t>(j >> 6)] |= (1ull << (j & 63));
    });
  }

  // ---- helpers ----------------------------------------------------------
  bool prefix_match(const HexElement& longer, const HexElement& shorter) const {
    if (longer.cell != shorter.cell + 1) return false;
    for (int j = 0; j < shorter.cell; ++j)
      if (!(longer.coord[static_cast<std::size_t>(j)] == shorter.coord[static_cast<std::size_t>(j)]))
        return false;
    return true;
  }

  static int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    int c = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j])
        ++i;
      else if (a[i] > b[j])
        ++j;
      else {
        ++c;
        ++i;
        ++j;
      }
    }
    return c;
  }

  bool opposed_cover(const std::vector<int>& set, Sort sort) const {
    if (set.empty()) return false;
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        bool opp = (sort == Sort::Point) ? points_opposite(set[i], set[j])
                                         : lines_opposite(set[i], set[j]);
        if (!opp) return false;
      }
    return covers_within_3(sort == Sort::Point ? set : std::vector<int>{},
                           sort == Sort::Line ? set : std::vector<int>{});
  }

  bool structure_is_large(const std::vector<int>& fp, const std::vector<int>& fl) const {
    return covers_within_3(fp, fl);
  }

  // every element of the hexagon within distance 3 of the given sets
  bool covers_within_3(const std::vector<int>& fp, const std::vector<int>& fl) const {
    std::vector<char> covered(static_cast<std::size_t>(n_vertices()), 0);
    std::vector<uint8_t> scratch;
    auto mark = [&](int v) {
      const uint8_t* row = dist_row(v, scratch);
      for (int u = 0; u < n_vertices(); ++u)
        if (row[u] <= 3) covered[static_cast<std::size_t>(u)] = 1;
    };
    for (int p : fp) mark(vid(Sort::Point, p));
    for (int l : fl) mark(vid(Sort::Line, l));
    for (char c : covered)
      if (!c) return false;
    return true;
  }

  // Induced-subgraph test: connected, every vertex on a 12-cycle, induced
  // diameter exactly 6.  Sets `thick` for at-least-3 degrees throughout.
  bool induced_subhexagon(const std::vector<int>& fp, const std::vector<int>& fl,
                          bool& thick) const {
    // local vertex ids: points first then lines
    std::vector<int> verts;
    std::vector<int> pt_local(static_cast<std::size_t>(n_points()), -1),
        ln_local(static_cast<std::size_t>(n_lines()), -1);
    for (int p : fp) {
      pt_local[static_cast<std::size_t>(p)] = static_cast<int>(verts.size());
      verts.push_back(vid(Sort::Point, p));
    }
    for (int l : fl) {
      ln_local[static_cast<std::size_t>(l)] = static_cast<int>(verts.size());
      verts.push_back(vid(Sort::Line, l));
    }
    int V = static_cast<int>(verts.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(V));
    for (int l : fl)
      for (int p : points_of_line(l))
        if (pt_local[static_cast<std::size_t>(p)] >= 0) {
          adj[static_cast<std::size_t>(ln_local[static_cast<std::size_t>(l)])].push_back(
              pt_local[static_cast<std::size_t>(p)]);
          adj[static_cast<std::size_t>(pt_local[static_cast<std::size_t>(p)])].push_back(
              ln_local[static_cast<std::size_t>(l)]);
        }

    thick = true;
    for (std::size_t i = 0; i < fp.size(); ++i)
      if (adj[i].size() < 3) thick = false;
    for (std::size_t i = fp.size(); i < static_cast<std::size_t>(V); ++i)
      if (adj[i].size() < 3) thick = false;

    // connectivity + diameter
    int diameter = 0;
    std::vector<int> dist(static_cast<std::size_t>(V));
    for (int src = 0; src < V; ++src) {
      std::fill(dist.begin(), dist.end(), -1);
      std::vector<int> q{src};
      dist[static_cast<std::size_t>(src)] = 0;
      for (std::size_t h = 0; h < q.size(); ++h) {
        int v = q[h];
        for (int w : adj[static_cast<std::size_t>(v)])
          if (dist[static_cast<std::size_t>(w)] < 0) {
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            q.push_back(w);
          }
      }
      for (int v = 0; v < V; ++v) {
        if (dist[static_cast<std::size_t>(v)] < 0) return false;  // disconnected
        diameter = std::max(diameter, dist[static_cast<std::size_t>(v)]);
      }
    }
    if (diameter != 6) return false;

    // every vertex on a 12-cycle (no shorter cycles can exist)
    for (int src = 0; src < V; ++src) {
      std::fill(dist.begin(), dist.end(), -1);
      std::vector<int> parent(static_cast<std::size_t>(V), -1);
      std::vector<int> q{src};
      dist[static_cast<std::size_t>(src)] = 0;
      int shortest = 1 << 30;
      for (std::size_t h = 0; h < q.size(); ++h) {
        int v = q[h];
        for (int w : adj[static_cast<std::size_t>(v)]) {
          if (dist[static_cast<std::size_t>(w)] < 0) {
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            parent[static_cast<std::size_t>(w)] = v;
            q.push_back(w);
          } else if (w != parent[static_cast<std::size_t>(v)]) {
            shortest = std::min(shortest,
                                dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1);
          }
        }
      }
      if (shortest != 12) return false;
    }
    return true;
  }

  int graph_girth() const {
    int best = 1 << 30;
    int V = n_vertices();
    std::vector<int> dist(static_cast<std::size_t>(V)), parent(static_cast<std::size_t>(V));
    for (int src = 0; src < V; ++src) {
      std::fill(dist.begin(), dist.end(), -1);
      std::fill(parent.begin(), parent.end(), -1);
      std::vector<int> q{src};
      dist[static_cast<std::size_t>(src)] = 0;
      for (std::size_t h = 0; h < q.size(); ++h) {
        int v = q[h];
        if (2 * dist[static_cast<std::size_t>(v)] >= best) break;
        auto scan = [&](int w) {
          if (dist[static_cast<std::size_t>(w)] < 0) {
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            parent[static_cast<std::size_t>(w)] = v;
            q.push_back(w);
          } else if (w != parent[static_cast<std::size_t>(v)]) {
            best = std::min(best, dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1);
          }
        };
        if (v < n_points())
          for (int l : point_lines_[static_cast<std::size_t>(v)]) scan(vid(Sort::Line, l));
        else
          for (int p : line_pts_[static_cast<std::size_t>(v - n_points())]) scan(p);
      }
    }
    return best == (1 << 30) ? -1 : best;
  }

  int graph_diameter() const {
    int V = n_vertices();
    int best = 0;
    if (!dist_.empty()) {
      for (std::size_t i = 0; i < dist_.size(); ++i) {
        if (dist_[i] == 255) return -1;
        best = std::max(best, static_cast<int>(dist_[i]));
      }
      return best;
    }
    std::vector<uint8_t> row(static_cast<std::size_t>(V));
    for (int v = 0; v < V; ++v) {
      bfs_row(v, row.data());
      for (int u = 0; u < V; ++u) {
        if (row[static_cast<std::size_t>(u)] == 255) return -1;
        best = std::max(best, static_cast<int>(row[static_cast<std::size_t>(u)]));
      }
    }
    return best;
  }

  HexSystem sys_;
  int s_ = 0, t_ = 0;
  std::vector<HexElement> points_, lines_;
  std::array<int, 7> point_cell_offset_{}, line_cell_offset_{};
  std::vector<std::vector<int32_t>> line_pts_, point_lines_;
  std::vector<uint8_t> dist_;  // full matrix when n_vertices() <= 4000
  std::vector<std::vector<uint64_t>> opp_pts_, opp_lines_;
};

}  // namespace hexforge
