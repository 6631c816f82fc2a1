#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <bit>
#include <set>

#include "dissection/diagram.hpp"
#include "doctest.h"

using namespace dissection;

namespace {

ChordMask mask_of(const Diagram& d, const std::vector<Chord>& chords) {
  ChordMask m = 0;
  for (const Chord& c : chords) {
    auto it = std::find(d.chords.begin(), d.chords.end(), c);
    REQUIRE(it != d.chords.end());
    m |= ChordMask(1) << (it - d.chords.begin());
  }
  return m;
}

// Geometric crossing oracle: vertices on a circle, proper segment
// intersection via orientation signs.
bool crosses_geometric(int n, const Chord& a, const Chord& b) {
  auto pt = [&](int k) {
    double th = -2.0 * M_PI * k / (n + 1);
    return std::pair<double, double>{std::cos(th), std::sin(th)};
  };
  auto orient = [&](std::pair<double, double> p, std::pair<double, double> q,
                    std::pair<double, double> r) {
    double v = (q.first - p.first) * (r.second - p.second) -
               (q.second - p.second) * (r.first - p.first);
    return v > 1e-12 ? 1 : (v < -1e-12 ? -1 : 0);
  };
  if (a.first == b.first || a.first == b.second || a.second == b.first ||
      a.second == b.second)
    return false;
  auto p1 = pt(a.first), p2 = pt(a.second), q1 = pt(b.first), q2 = pt(b.second);
  return orient(p1, p2, q1) * orient(p1, p2, q2) < 0 &&
         orient(q1, q2, p1) * orient(q1, q2, p2) < 0;
}

bool crosses_combinatorial(const Chord& x, const Chord& y) {
  auto [a, b] = x;
  auto [c, d] = y;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

std::vector<Diagram> contract_in_order(const Diagram& d,
                                       std::vector<int> order) {
  // Applies single-chord contractions one original id at a time.
  std::vector<TrackedPiece> pieces = contract_tracked(d, 0);
  for (int id : order) {
    std::vector<TrackedPiece> next;
    for (TrackedPiece& p : pieces) {
      auto it = std::find(p.ids.begin(), p.ids.end(), id);
      if (it == p.ids.end()) {
        next.push_back(std::move(p));
        continue;
      }
      ChordMask m = ChordMask(1) << (it - p.ids.begin());
      for (TrackedPiece& sub : contract_tracked(p.d, m)) {
        for (int& sid : sub.ids) sid = p.ids[sid];
        next.push_back(std::move(sub));
      }
    }
    pieces = std::move(next);
  }
  std::vector<Diagram> out;
  for (TrackedPiece& p : pieces)
    if (p.d.degree > 0) out.push_back(std::move(p.d));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("parse and format") {
  CHECK(parse_diagram("D{0:}") == Diagram{});
  CHECK(format_diagram(Diagram{}) == "D{0:}");

  Diagram d = parse_diagram("D{3: 0-1,0-2,2-3}");
  CHECK(d.degree == 3);
  CHECK(d.chords == std::vector<Chord>{{0, 1}, {0, 2}, {2, 3}});
  CHECK(format_diagram(d) == "D{3: 0-1,0-2,2-3}");
  CHECK(parse_diagram(" D { 3 :  2-0 ,1 - 0, 3-2 } ") == d);
  CHECK(parse_diagram(format_diagram(d)) == d);

  CHECK_THROWS_WITH_AS(parse_diagram("D{2: 0-1,0-3}"),
                       doctest::Contains("out of range"),
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("D{2: 0-1}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("D{1: 0-1"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_diagram("D{4: 0-2,1-3,0-1,2-3}"),
                       doctest::Contains("crossing"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_diagram("D{3: 0-1,1-2,0-2}"),
                       doctest::Contains("cycle"), std::invalid_argument);
}

TEST_CASE("families") {
  CHECK(corolla(3).chords == std::vector<Chord>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(path_tree(3).chords == std::vector<Chord>{{0, 3}, {1, 2}, {2, 3}});
  CHECK(corolla(0) == Diagram{});
  for (int n = 0; n <= 6; ++n) {
    CHECK_NOTHROW(validate(corolla(n)));
    CHECK_NOTHROW(validate(path_tree(n)));
  }
}

TEST_CASE("enumeration counts match (1/(2n+1)) C(3n,n)") {
  const std::vector<size_t> expected{1, 1, 3, 12, 55, 273, 1428};
  for (int n = 0; n < static_cast<int>(expected.size()); ++n) {
    const auto& all = enumerate_diagrams(n);
    CHECK(all.size() == expected[n]);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
  CHECK(enumerate_diagrams(2) ==
        std::vector<Diagram>{parse_diagram("D{2: 0-1,0-2}"),
                             parse_diagram("D{2: 0-1,1-2}"),
                             parse_diagram("D{2: 0-2,1-2}")});
  for (const Diagram& d : enumerate_diagrams(5)) CHECK_NOTHROW(validate(d));
  CHECK_THROWS_AS(enumerate_diagrams(kMaxEnumerationDegree + 1),
                  std::runtime_error);
}

TEST_CASE("tree structure: parents, labels, fertilities") {
  SUBCASE("corolla") {
    TreeStructure ts = tree_structure(corolla(3));
    for (int i = 1; i <= 3; ++i) {
      CHECK(ts.parent[i] == 0);
      CHECK(ts.label_of_chord[ts.chord_of_label[i]] == i);
    }
    CHECK(ts.fertility[0] == 3);
  }
  SUBCASE("path tree") {
    TreeStructure ts = tree_structure(path_tree(3));
    CHECK(ts.parent[3] == 0);
    CHECK(ts.parent[2] == 3);
    CHECK(ts.parent[1] == 2);
    CHECK(ts.fertility[3] == 2);
    // chord {i,i+1} carries label i; {0,n} carries label n
    CHECK(path_tree(3).chords[ts.chord_of_label[1]] == Chord{1, 2});
    CHECK(path_tree(3).chords[ts.chord_of_label[3]] == Chord{0, 3});
  }
  SUBCASE("coproduct example diagram") {
    TreeStructure ts = tree_structure(parse_diagram("D{3: 0-1,0-2,2-3}"));
    CHECK(ts.parent[1] == 0);
    CHECK(ts.parent[2] == 0);
    CHECK(ts.parent[3] == 2);
  }
  SUBCASE("fertilities sum to twice the degree; labels are a bijection") {
    for (int n = 1; n <= 5; ++n)
      for (const Diagram& d : enumerate_diagrams(n)) {
        TreeStructure ts = tree_structure(d);
        int total = 0;
        for (int i = 0; i <= n; ++i) total += ts.fertility[i];
        CHECK(total == 2 * n);
        std::set<int> labels(ts.label_of_chord.begin(),
                             ts.label_of_chord.end());
        CHECK(labels.size() == static_cast<size_t>(n));
        for (int l = 1; l <= n; ++l)
          CHECK(ts.label_of_chord[ts.chord_of_label[l]] == l);
      }
  }
}

TEST_CASE("ccw order matches the worked vertex-labeling figures") {
  // Interior vertex 4 of a degree-9 diagram: incident chords in ccw order
  // have far endpoints 3, 2, 0, 9.
  Diagram d1 = parse_diagram("D{9: 1-2,5-9,6-8,7-8,3-4,2-4,0-4,4-9,5-6}");
  TreeStructure ts1 = tree_structure(d1);
  std::vector<int> far1;
  for (int ci : ts1.ccw[4]) {
    auto [u, v] = d1.chords[ci];
    far1.push_back(u == 4 ? v : u);
  }
  CHECK(far1 == std::vector<int>{3, 2, 0, 9});

  // Root of a degree-9 diagram: far endpoints 9, 4, 1.
  Diagram d2 = parse_diagram("D{9: 2-3,3-4,5-6,4-6,7-9,7-8,0-9,0-4,0-1}");
  TreeStructure ts2 = tree_structure(d2);
  std::vector<int> far2;
  for (int ci : ts2.ccw[0]) {
    auto [u, v] = d2.chords[ci];
    far2.push_back(u == 0 ? v : u);
  }
  CHECK(far2 == std::vector<int>{9, 4, 1});

  // l(i) points at the chord joining i to its parent.
  for (int i = 1; i <= 9; ++i) {
    int ci = ts2.ccw[i][ts2.lpos[i] - 1];
    CHECK(d2.chords[ci] == make_chord(i, ts2.parent[i]));
  }
}

TEST_CASE("faces of the coproduct example") {
  Diagram d = parse_diagram("D{3: 0-1,0-2,2-3}");
  SUBCASE("empty subset") {
    FacePartition fp = faces(d, 0);
    CHECK(fp.faces.size() == 1);
    CHECK(fp.faces[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(fp.kept == std::vector<int>{0});
    CHECK(fp.contracted == std::vector<int>{1, 2, 3});
    CHECK(faces(Diagram{}, 0).contracted.empty());
  }
  SUBCASE("single chord 2-3") {
    FacePartition fp = faces(d, mask_of(d, {{2, 3}}));
    CHECK(fp.faces.size() == 2);
    std::set<std::vector<int>> got(fp.faces.begin(), fp.faces.end());
    CHECK(got == std::set<std::vector<int>>{{0, 1, 3}, {2}});
    CHECK(fp.contracted == std::vector<int>{1, 3});
  }
  SUBCASE("all chords") {
    FacePartition fp = faces(d, full_mask(d));
    CHECK(fp.faces.size() == 4);
    for (const auto& f : fp.faces) CHECK(f.size() == 1);
    CHECK(fp.contracted.empty());
  }
  CHECK_THROWS_AS(faces(corolla(1), 2), std::invalid_argument);
}

TEST_CASE("contraction q_C") {
  Diagram d = parse_diagram("D{3: 0-1,0-2,2-3}");
  CHECK(contract(d, 0) == std::vector<Diagram>{d});
  CHECK(contract(d, mask_of(d, {{0, 2}})) ==
        std::vector<Diagram>{corolla(1), corolla(1)});
  CHECK(contract(d, mask_of(d, {{0, 1}})) ==
        std::vector<Diagram>{parse_diagram("D{2: 0-1,1-2}")});
  CHECK(contract(d, full_mask(d)).empty());
}

TEST_CASE("contraction is independent of the order") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 5; ++n) {
    const auto& all = enumerate_diagrams(n);
    for (int rep = 0; rep < 40; ++rep) {
      const Diagram& d = all[rng() % all.size()];
      ChordMask c = rng() & full_mask(d);
      std::vector<int> order;
      for (int i = 0; i < n; ++i)
        if (c >> i & 1) order.push_back(i);
      std::vector<Diagram> direct = contract(d, c);
      int total = 0;
      for (const Diagram& piece : direct) {
        total += piece.degree;
        CHECK_NOTHROW(validate(piece));
      }
      CHECK(total == n - std::popcount(c));
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(contract_in_order(d, order) == direct);
    }
  }
}

TEST_CASE("merge fibers are generated by the contracted sides") {
  std::mt19937 rng(31);
  for (int rep = 0; rep < 120; ++rep) {
    int n = 2 + static_cast<int>(rng() % 4);
    const auto& all = enumerate_diagrams(n);
    const Diagram& d = all[rng() % all.size()];
    ChordMask c = rng() & full_mask(d);
    Restriction r = restrict_to(d, c);
    FacePartition fp = faces(d, c);
    // union-find over vertices driven by the contracted sides alone
    std::vector<int> uf(n + 1);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int v) {
      while (uf[v] != v) v = uf[v] = uf[uf[v]];
      return v;
    };
    for (int s : fp.contracted) {
      int a = find(s), b = find((s + 1) % (n + 1));
      if (a != b) uf[a] = b;
    }
    for (int u = 0; u <= n; ++u)
      for (int v = 0; v <= n; ++v)
        CHECK((find(u) == find(v)) == (r.merge[u] == r.merge[v]));
    CHECK(r.merge[0] == 0);
  }
}

TEST_CASE("restriction r_C and the defect k_C") {
  Diagram d = parse_diagram("D{3: 0-1,0-2,2-3}");
  SUBCASE("keeping everything is neutral") {
    for (int n = 1; n <= 4; ++n)
      for (const Diagram& g : enumerate_diagrams(n)) {
        Restriction r = restrict_to(g, full_mask(g));
        CHECK(r.diagram == g);
        CHECK(r.defect == 0);
        CHECK(restrict_to(g, 0).defect == 0);
      }
  }
  SUBCASE("worked coproduct example, size-1 subsets") {
    Restriction r = restrict_to(d, mask_of(d, {{2, 3}}));
    CHECK(r.diagram == corolla(1));
    CHECK(r.defect == 1);
    CHECK(restrict_to(d, mask_of(d, {{0, 1}})).defect == 0);
    CHECK(restrict_to(d, mask_of(d, {{0, 2}})).defect == 0);
  }
  SUBCASE("worked coproduct example, size-2 subsets") {
    Restriction r1 = restrict_to(d, mask_of(d, {{0, 1}, {2, 3}}));
    CHECK(r1.diagram == corolla(2));
    CHECK(r1.defect == 1);
    Restriction r2 = restrict_to(d, mask_of(d, {{0, 1}, {0, 2}}));
    CHECK(r2.diagram == corolla(2));
    CHECK(r2.defect == 0);
    Restriction r3 = restrict_to(d, mask_of(d, {{0, 2}, {2, 3}}));
    CHECK(r3.diagram == parse_diagram("D{2: 0-1,1-2}"));
    CHECK(r3.defect == 0);
  }
  SUBCASE("merge map basics") {
    Restriction r = restrict_to(d, mask_of(d, {{2, 3}}));
    CHECK(r.merge[0] == 0);
    CHECK(r.merge == std::vector<int>{0, 1, 1, 0});
  }
  SUBCASE("corolla restrictions never pick up x") {
    for (int n = 1; n <= 5; ++n) {
      Diagram x = corolla(n);
      for (ChordMask c = 0; c <= full_mask(x); ++c) {
        Restriction r = restrict_to(x, c);
        CHECK(r.defect == 0);
        CHECK(r.diagram == corolla(std::popcount(c)));
      }
    }
  }
  SUBCASE("restriction degree and validity") {
    for (const Diagram& g : enumerate_diagrams(4))
      for (ChordMask c = 0; c <= full_mask(g); ++c) {
        Restriction r = restrict_to(g, c);
        CHECK(r.diagram.degree == std::popcount(c));
        CHECK_NOTHROW(validate(r.diagram));
        CHECK(r.defect <= std::popcount(c));
      }
  }
}

TEST_CASE("triple decomposition") {
  CHECK(triple_decompose(corolla(1)).d1 == Diagram{});
  CHECK(triple_decompose(corolla(1)).d2 == Diagram{});
  CHECK(triple_decompose(corolla(1)).d3 == Diagram{});
  CHECK_THROWS_AS(triple_decompose(Diagram{}), std::invalid_argument);

  // Bijectivity at degree 3, and the count identity d_4 = 55.
  std::set<std::tuple<Diagram, Diagram, Diagram>> seen;
  for (const Diagram& d : enumerate_diagrams(3)) {
    Triple t = triple_decompose(d);
    CHECK(t.d1.degree + t.d2.degree + t.d3.degree == 2);
    CHECK(triple_compose(t.d1, t.d2, t.d3) == d);
    seen.insert({t.d1, t.d2, t.d3});
  }
  CHECK(seen.size() == 12);
  size_t d4 = 0;
  for (int i1 = 0; i1 <= 3; ++i1)
    for (int i2 = 0; i2 + i1 <= 3; ++i2) {
      int i3 = 3 - i1 - i2;
      d4 += enumerate_diagrams(i1).size() * enumerate_diagrams(i2).size() *
            enumerate_diagrams(i3).size();
    }
  CHECK(d4 == 55);
}

TEST_CASE("non-crossing test agrees with the geometric oracle") {
  std::mt19937 rng(99);
  for (int rep = 0; rep < 300; ++rep) {
    int n = 4 + static_cast<int>(rng() % 5);
    auto rnd_chord = [&]() {
      int a = static_cast<int>(rng() % (n + 1));
      int b = static_cast<int>(rng() % (n + 1));
      while (b == a) b = static_cast<int>(rng() % (n + 1));
      return make_chord(a, b);
    };
    Chord x = rnd_chord(), y = rnd_chord();
    if (x == y) continue;
    CHECK(crosses_combinatorial(x, y) == crosses_geometric(n, x, y));
  }
}
