#include <functional>

#include "dissection/dual.hpp"
#include "dissection/primitives.hpp"
#include "dissection/prelie.hpp"
#include "dissection/trees.hpp"
#include "doctest.h"

using namespace dissection;

namespace {

const RootedTree dot = single_vertex();
const Poly x = Poly::x();

RootedTree T(const char* s) { return parse_tree(s); }
Forest F(const char* s) { return parse_forest(s); }

LinComb<Diagram> bracket_lin(const LinComb<Diagram>& a,
                             const LinComb<Diagram>& b) {
  LinComb<Diagram> out;
  for (const auto& [k1, c1] : a.terms)
    for (const auto& [k2, c2] : b.terms)
      out += lie_bracket(k1, k2).scaled(c1 * c2);
  return out;
}

}  // namespace

TEST_CASE("tree parsing and canonical form") {
  CHECK(T("[]") == dot);
  CHECK(T("[[][[]]]") == T("[[[]][]]"));  // children order is canonical
  CHECK(format_tree(T("[ [ ] [ [ ] ] ]")) == "[[][[]]]");
  CHECK(T("[[[]]]") == ladder(3));
  CHECK(T("[[][]]") == graft_on_root({dot, dot}));
  CHECK(ladder(1) == dot);
  CHECK(T("[[][]]").degree() == 3);
  CHECK_THROWS_AS(parse_tree("[[]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tree("[]]"), std::invalid_argument);
  CHECK(parse_forest("[] [[]]") == Forest{dot, ladder(2)});
  CHECK(format_forest(F("[[]] []")) == "[] [[]]");
}

TEST_CASE("unlabeled rooted tree counts") {
  const std::vector<size_t> expected{0, 1, 1, 2, 4, 9, 20};
  for (int n = 1; n <= 6; ++n) CHECK(enumerate_trees(n).size() == expected[n]);
}

TEST_CASE("grafting pre-Lie product") {
  CHECK(graft_circ(dot, dot) == LinComb<RootedTree>::of(ladder(2)));
  LinComb<RootedTree> expect;
  expect.add(T("[[][]]"), Poly(1));
  expect.add(ladder(3), Poly(1));
  CHECK(graft_circ(dot, ladder(2)) == expect);

  std::function<LinComb<RootedTree>(const RootedTree&, const RootedTree&)>
      circ = [](const RootedTree& a, const RootedTree& b) {
        return graft_circ(a, b);
      };
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      for (int r = 1; r <= 3; ++r)
        for (const RootedTree& a : enumerate_trees(p))
          for (const RootedTree& b : enumerate_trees(q))
            for (const RootedTree& c : enumerate_trees(r))
              CHECK(prelie_identity_holds<RootedTree>(circ, a, b, c));

  // Negative control: grafting on the root alone is not pre-Lie.
  std::function<LinComb<RootedTree>(const RootedTree&, const RootedTree&)>
      corrupted = [](const RootedTree& a, const RootedTree& b) {
        return LinComb<RootedTree>::of(graft_at(a, b, 0));
      };
  CHECK_FALSE(
      prelie_identity_holds<RootedTree>(corrupted, dot, ladder(2), dot));
}

TEST_CASE("grafting on a common root") {
  CHECK(graft_on_root({}) == dot);
  CHECK(graft_on_root({dot}) == ladder(2));
  CHECK(graft_on_root({dot, dot}) == T("[[][]]"));
}

TEST_CASE("Grossman-Larson star: worked products") {
  SymElement<RootedTree> e1;  // e_2 * (..) = 2 (. e_3) + (.. e_2)
  e1.add(F("[] [[[]]]"), Poly(2));
  e1.add(F("[] [] [[]]"), Poly(1));
  CHECK(gl_star({ladder(2)}, {dot, dot}) == e1);

  SymElement<RootedTree> e2;  // (..) * . = (...) + 2 (. e_2) + cherry
  e2.add(F("[] [] []"), Poly(1));
  e2.add(F("[] [[]]"), Poly(2));
  e2.add(F("[[][]]"), Poly(1));
  CHECK(gl_star({dot, dot}, {dot}) == e2);

  SymElement<RootedTree> e3;  // (..) * e_2, six shapes
  e3.add(F("[[][]] []"), Poly(2));
  e3.add(F("[] [[[]]]"), Poly(2));
  e3.add(F("[[][][]]"), Poly(1));
  e3.add(F("[[[][]]]"), Poly(1));
  e3.add(F("[[][[]]]"), Poly(2));
  e3.add(F("[] [] [[]]"), Poly(1));
  CHECK(gl_star({dot, dot}, {ladder(2)}) == e3);

  // F * empty = F, empty * F = F
  CHECK(gl_star(F("[[]] []"), {}) ==
        SymElement<RootedTree>::of(F("[[]] []")));
  CHECK(gl_star({}, F("[[]] []")) ==
        SymElement<RootedTree>::of(F("[[]] []")));
}

TEST_CASE("Oudom-Guin recursion reproduces Grossman-Larson") {
  OudomGuin<TreePreLieBasis> og;
  std::vector<Forest> forests;
  for (int n = 1; n <= 3; ++n) {
    // all forests of degree n
    std::vector<Forest> of_n;
    auto rec = [&](auto&& self, int left, const RootedTree* min_tree,
                   Forest& cur) -> void {
      if (left == 0) {
        of_n.push_back(cur);
        return;
      }
      for (int k = 1; k <= left; ++k)
        for (const RootedTree& t : enumerate_trees(k)) {
          if (min_tree && t < *min_tree) continue;
          cur.push_back(t);
          self(self, left - k, &t, cur);
          cur.pop_back();
        }
    };
    Forest cur;
    rec(rec, n, nullptr, cur);
    forests.insert(forests.end(), of_n.begin(), of_n.end());
  }
  for (const Forest& a : forests)
    for (const Forest& b : forests) {
      if (forest_degree(a) + forest_degree(b) > 4) continue;
      CHECK(og.og_star(SymElement<RootedTree>::of(a),
                       SymElement<RootedTree>::of(b)) == gl_star(a, b));
    }

  SUBCASE("star is associative up to total degree 4") {
    for (const Forest& a : forests)
      for (const Forest& b : forests)
        for (const Forest& c : forests) {
          if (forest_degree(a) + forest_degree(b) + forest_degree(c) > 4)
            continue;
          auto ea = SymElement<RootedTree>::of(a);
          auto eb = SymElement<RootedTree>::of(b);
          auto ec = SymElement<RootedTree>::of(c);
          CHECK(og.og_star(og.og_star(ea, eb), ec) ==
                og.og_star(ea, og.og_star(eb, ec)));
        }
  }

  SUBCASE("defining rules") {
    auto unit = SymElement<RootedTree>::unit();
    auto a = SymElement<RootedTree>::of(F("[] [[]]"), Poly(3));
    CHECK(og.og_circ(unit, a) == a);
    CHECK(og.og_circ(a, unit).is_zero());  // epsilon kills positive degree
    CHECK(og.og_circ(unit, unit) == unit);
    CHECK(og.og_star(a, unit) == a);
    CHECK(og.og_star(unit, a) == a);
  }
}

TEST_CASE("sub-binary quotient") {
  CHECK(is_subbinary(T("[[][]]")));
  CHECK_FALSE(is_subbinary(T("[[][][]]")));
  CHECK(subbinary_project(SymElement<RootedTree>::of(F("[[][][]]")))
            .is_zero());

  // multiplicative on small products; kernel is an ideal
  std::vector<Forest> forests{{},       F("[]"),       F("[] []"),
                              F("[[]]"), F("[[][][]]"), F("[[][]]")};
  for (const Forest& a : forests)
    for (const Forest& b : forests) {
      auto pa = subbinary_project(SymElement<RootedTree>::of(a));
      auto pb = subbinary_project(SymElement<RootedTree>::of(b));
      CHECK(subbinary_project(SymElement<RootedTree>::of(sym_mul(a, b))) ==
            pa * pb);
    }

  // coideal: unshuffle of a non-sub-binary forest has a non-sub-binary leg
  Forest bad = F("[[][][]] []");
  for_each_split<RootedTree>(bad, [](const Forest& l, const Forest& r,
                                     const Rational&) {
    CHECK((!is_subbinary(l) || !is_subbinary(r)));
  });
}

TEST_CASE("tree statistics") {
  CHECK(tree_stats(ladder(4)).two_child_vertices == 0);
  CHECK(tree_stats(ladder(4)).ladder);
  CHECK(tree_stats(T("[[][]]")).two_child_vertices == 1);
  CHECK_FALSE(tree_stats(T("[[][]]")).ladder);
  CHECK(tree_stats(ladder(3)).internal_vertices == 2);
  CHECK(tree_stats(T("[[][][]]")).two_child_vertices == 0);
  CHECK(tree_stats(T("[[][][]]")).internal_vertices == 1);
}

TEST_CASE("dual pairing and structure constants") {
  Element zx1 = Element::of(corolla(1));
  CHECK(pairing(zx1, Element::of(corolla(1))) == Poly(1));
  Monomial sq{corolla(1), corolla(1)};
  CHECK(pairing(Element::of(sq), Element::of(sq)) == Poly(1));
  CHECK(pairing(zx1, Element::of(sq)).is_zero());

  Diagram L2 = parse_diagram("D{2: 0-1,1-2}");
  CHECK(c_coefficient(corolla(1), corolla(1), L2) == Poly(1) + x);
  CHECK(c_coefficient(corolla(1), corolla(1), corolla(2)) == Poly(2));
  CHECK(c_coefficient(corolla(1), corolla(1), path_tree(2)) == Poly(2));
  CHECK_THROWS_AS(c_coefficient(corolla(1), corolla(1), corolla(3)),
                  std::invalid_argument);
}

TEST_CASE("pre-Lie product on dual diagram generators") {
  LinComb<Diagram> expect;
  expect.add(path_tree(2), Poly(2));
  expect.add(corolla(2), Poly(2));
  expect.add(parse_diagram("D{2: 0-1,1-2}"), Poly(1) + x);
  CHECK(prelie_circ_diagrams(corolla(1), corolla(1)) == expect);

  // left pre-Lie identity for all triples of degree 1-2 generators
  std::vector<Diagram> gens = enumerate_diagrams(1);
  for (const Diagram& d : enumerate_diagrams(2)) gens.push_back(d);
  std::function<LinComb<Diagram>(const Diagram&, const Diagram&)> circ =
      [](const Diagram& a, const Diagram& b) {
        return prelie_circ_diagrams(a, b);
      };
  for (const Diagram& a : gens)
    for (const Diagram& b : gens)
      for (const Diagram& c : gens)
        CHECK(prelie_identity_holds<Diagram>(circ, a, b, c));
}

TEST_CASE("Lie bracket value and Jacobi") {
  // The last two signs are forced: primitivity of the degree-3 vector V_1
  // pins the X_1 (x) Y_2 coefficient of Delta(D{3:0-1,0-3,1-2}) to x, and
  // no single-chord contraction of that diagram yields Y_2.
  LinComb<Diagram> expect;
  expect.add(parse_diagram("D{3: 1-2,0-2,2-3}"), Poly(-1));
  expect.add(parse_diagram("D{3: 1-3,2-3,0-3}"), Poly(-1));
  expect.add(parse_diagram("D{3: 1-2,0-2,0-3}"), Poly(-1));
  expect.add(parse_diagram("D{3: 1-3,1-2,0-3}"), Poly(-1));
  expect.add(parse_diagram("D{3: 0-1,2-3,1-3}"), Poly(1));
  expect.add(parse_diagram("D{3: 0-1,1-2,0-3}"), -x);
  expect.add(parse_diagram("D{3: 0-1,1-2,2-3}"), -(x * x));
  CHECK(lie_bracket(path_tree(2), corolla(1)) == expect);
  // Antisymmetry in the defining difference of structure constants.
  CHECK(lie_bracket(corolla(1), path_tree(2)) ==
        LinComb<Diagram>{} - lie_bracket(path_tree(2), corolla(1)));

  CHECK(lie_bracket(corolla(1), corolla(1)).is_zero());

  std::vector<Diagram> gens = enumerate_diagrams(1);
  for (const Diagram& d : enumerate_diagrams(2)) gens.push_back(d);
  for (const Diagram& a : gens)
    for (const Diagram& b : gens)
      for (const Diagram& c : gens) {
        LinComb<Diagram> jac =
            bracket_lin(LinComb<Diagram>::of(a), lie_bracket(b, c)) +
            bracket_lin(LinComb<Diagram>::of(b), lie_bracket(c, a)) +
            bracket_lin(LinComb<Diagram>::of(c), lie_bracket(a, b));
        CHECK(jac.is_zero());
      }
}

TEST_CASE("dual product: worked display and duality with the coproduct") {
  Element zx1 = Element::of(corolla(1));
  Element prod = dual_product(zx1, zx1);
  Element expect;
  expect.add(Monomial{corolla(1), corolla(1)}, Poly(2));
  expect.add(monomial_of(corolla(2)), Poly(2));
  expect.add(monomial_of(path_tree(2)), Poly(2));
  expect.add(monomial_of(parse_diagram("D{2: 0-1,1-2}")), Poly(1) + x);
  CHECK(prod == expect);

  CHECK(dual_product(zx1, Element::unit()) == zx1);

  // <Z_a * Z_b, M> = <Z_a (x) Z_b, Delta(M)> for generator pairs
  for (int p = 1; p <= 2; ++p)
    for (int q = 1; q <= 2; ++q)
      for (const Diagram& a : enumerate_diagrams(p))
        for (const Diagram& b : enumerate_diagrams(q)) {
          Element ab = dual_product(Element::of(a), Element::of(b));
          for (const Monomial& m : monomial_basis(p + q))
            CHECK(ab.coeff(m) ==
                  coproduct(m).coeff(monomial_of(a), monomial_of(b)));
        }

  // monomial-part coefficient is 1 + delta_{D1,D2}
  for (const Diagram& a : enumerate_diagrams(2))
    for (const Diagram& b : enumerate_diagrams(2))
      CHECK(dual_product(Element::of(a), Element::of(b))
                .coeff(monomial_mul(monomial_of(a), monomial_of(b))) ==
            Poly(a == b ? 2 : 1));
}

TEST_CASE("sub-pre-Lie algebra generated in degree 2 is one-dimensional") {
  // the degree-2 piece is spanned by the single vector Z o Z
  CHECK(prelie_circ_diagrams(corolla(1), corolla(1)).terms.size() == 3);
  CHECK(enumerate_diagrams(2).size() == 3);
  // one vector cannot span the 3-dimensional degree-2 piece
}
