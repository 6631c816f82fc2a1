#include "dissection/suites.hpp"

#include <functional>
#include <map>

#include "dissection/morphism.hpp"
#include "dissection/primitives.hpp"

namespace dissection {

namespace {

using Check = std::function<bool(std::string&)>;

const Poly x_poly = Poly::x();

std::vector<Diagram> generators_up_to(int max_degree) {
  std::vector<Diagram> out;
  for (int n = 1; n <= max_degree; ++n)
    for (const Diagram& d : enumerate_diagrams(n)) out.push_back(d);
  return out;
}

std::vector<Forest> forests_up_to(int max_degree) {
  std::vector<Forest> out;
  Forest cur;
  auto rec = [&](auto&& self, int left, const RootedTree* min_tree) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (int k = 1; k <= left; ++k)
      for (const RootedTree& t : enumerate_trees(k)) {
        if (min_tree && t < *min_tree) continue;
        cur.push_back(t);
        self(self, left - k, &t);
        cur.pop_back();
      }
  };
  rec(rec, max_degree, nullptr);
  return out;
}

bool check_coassociativity(std::string& detail) {
  for (int n = 1; n <= 4; ++n)
    for (const Diagram& d : enumerate_diagrams(n)) {
      // (Delta x id) Delta == (id x Delta) Delta, expanded over triples.
      std::map<std::tuple<Monomial, Monomial, Monomial>, Poly> lhs, rhs;
      auto accumulate = [](auto& into, const std::tuple<Monomial, Monomial,
                                                        Monomial>& key,
                           const Poly& c) {
        auto [it, fresh] = into.try_emplace(key, c);
        if (!fresh) {
          it->second += c;
          if (it->second.is_zero()) into.erase(it);
        }
      };
      for (const auto& [lr, c] : coproduct(d).terms) {
        for (const auto& [lr2, c2] : coproduct(lr.first).terms)
          accumulate(lhs, {lr2.first, lr2.second, lr.second}, c * c2);
        for (const auto& [lr2, c2] : coproduct(lr.second).terms)
          accumulate(rhs, {lr.first, lr2.first, lr2.second}, c * c2);
      }
      if (lhs != rhs) {
        detail = "coassociativity fails on " + format_diagram(d);
        return false;
      }
    }
  return true;
}

bool check_counit(std::string& detail) {
  for (int n = 0; n <= 4; ++n)
    for (const Diagram& d : enumerate_diagrams(n)) {
      Element a = Element::of(d);
      Element left, right;
      for (const auto& [lr, c] : coproduct(a).terms) {
        if (lr.first.empty()) left.add(lr.second, c);
        if (lr.second.empty()) right.add(lr.first, c);
      }
      if (left != a || right != a) {
        detail = "counit law fails on " + format_diagram(d);
        return false;
      }
    }
  return true;
}

bool check_antipode_convolution(std::string& detail) {
  // On every monomial of positive degree <= 4, both convolution identities.
  for (int n = 1; n <= 4; ++n)
    for (const Monomial& m : monomial_basis(n)) {
      Element left, right;
      for (const auto& [lr, c] : coproduct(m).terms) {
        left += (antipode(Element::of(lr.first)) * Element::of(lr.second))
                    .scaled(c);
        right += (Element::of(lr.first) * antipode(Element::of(lr.second)))
                     .scaled(c);
      }
      if (!left.is_zero() || !right.is_zero()) {
        detail = "m(S x id)Delta != u eps on " + format_monomial(m);
        return false;
      }
    }
  return true;
}

bool check_antipode_oracles(std::string& detail) {
  for (int n = 1; n <= 3; ++n)
    for (const Diagram& d : enumerate_diagrams(n))
      if (antipode_partition_oracle(d) != antipode(d)) {
        detail = "partition oracle differs on " + format_diagram(d);
        return false;
      }
  for (int n = 1; n <= 4; ++n) {
    if (antipode_corolla_closed(n) != antipode(corolla(n))) {
      detail = "closed corolla antipode differs at n=" + std::to_string(n);
      return false;
    }
    if (antipode_pathtree_closed(n) != antipode(path_tree(n))) {
      detail = "closed path-tree antipode differs at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool check_family_coproducts(std::string& detail) {
  for (int n = 0; n <= 5; ++n) {
    if (coproduct(corolla(n)) != coproduct_corolla_oracle(n)) {
      detail = "corolla coproduct differs at n=" + std::to_string(n);
      return false;
    }
    if (coproduct(path_tree(n)) != coproduct_pathtree_oracle(n)) {
      detail = "path-tree coproduct differs at n=" + std::to_string(n);
      return false;
    }
    for (const auto& [lr, c] : coproduct(corolla(n)).terms)
      if (c.degree() > 0) {
        detail = "corolla coproduct picked up x at n=" + std::to_string(n);
        return false;
      }
  }
  return true;
}

bool check_coproduct_display(std::string& detail) {
  Diagram d = parse_diagram("D{3: 0-1,0-2,2-3}");
  TensorElement expect;
  expect.add(monomial_of(d), {}, Poly(1));
  expect.add(monomial_of(corolla(2)), monomial_of(corolla(1)), x_poly);
  expect.add(monomial_of(parse_diagram("D{2: 0-1,1-2}")),
             monomial_of(corolla(1)), Poly(1));
  expect.add(Monomial{corolla(1), corolla(1)}, monomial_of(corolla(1)),
             Poly(1));
  expect.add(monomial_of(corolla(1)),
             monomial_of(parse_diagram("D{2: 0-1,1-2}")), Poly(1));
  expect.add(monomial_of(corolla(1)), monomial_of(corolla(2)),
             Poly(1) + x_poly);
  expect.add({}, monomial_of(d), Poly(1));
  if (coproduct(d) != expect) {
    detail = "degree-3 coproduct display not reproduced";
    return false;
  }
  return true;
}

bool check_antipode_displays(std::string& detail) {
  Element sx3 = Element::of(corolla(3), Poly(-1));
  sx3.add(monomial_mul(monomial_of(corolla(1)), monomial_of(corolla(2))),
          Poly(5));
  sx3.add(Monomial{corolla(1), corolla(1), corolla(1)}, Poly(-5));
  if (antipode(corolla(3)) != sx3) {
    detail = "S(X_3) display not reproduced";
    return false;
  }
  Diagram d = parse_diagram("D{3: 0-1,1-3,2-3}");
  Element sd = Element::of(d, Poly(-1));
  sd.add(monomial_mul(monomial_of(corolla(1)), monomial_of(corolla(2))),
         Poly(1) + x_poly);
  sd.add(monomial_mul(monomial_of(corolla(1)),
                      monomial_of(parse_diagram("D{2: 0-1,1-2}"))),
         Poly(2));
  sd.add(monomial_mul(monomial_of(corolla(1)), monomial_of(path_tree(2))),
         Poly(1));
  sd.add(Monomial{corolla(1), corolla(1), corolla(1)},
         Poly(-3) + Poly::term(-2, 1));
  if (antipode(d) != sd) {
    detail = "S(D{3: 0-1,1-3,2-3}) display not reproduced";
    return false;
  }
  return true;
}

bool check_prelie_identities(std::string& detail) {
  std::function<LinComb<Diagram>(const Diagram&, const Diagram&)> dcirc =
      [](const Diagram& a, const Diagram& b) {
        return prelie_circ_diagrams(a, b);
      };
  std::vector<Diagram> gens = generators_up_to(2);
  for (const Diagram& a : gens)
    for (const Diagram& b : gens)
      for (const Diagram& c : gens)
        if (!prelie_identity_holds<Diagram>(dcirc, a, b, c)) {
          detail = "diagram pre-Lie identity fails on a degree <= 2 triple";
          return false;
        }
  std::function<LinComb<RootedTree>(const RootedTree&, const RootedTree&)>
      tcirc = [](const RootedTree& a, const RootedTree& b) {
        return graft_circ(a, b);
      };
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      for (int r = 1; r <= 3; ++r)
        for (const RootedTree& a : enumerate_trees(p))
          for (const RootedTree& b : enumerate_trees(q))
            for (const RootedTree& c : enumerate_trees(r))
              if (!prelie_identity_holds<RootedTree>(tcirc, a, b, c)) {
                detail = "tree pre-Lie identity fails on a degree <= 3 triple";
                return false;
              }
  return true;
}

bool check_jacobi(std::string& detail) {
  auto bracket_lin = [](const LinComb<Diagram>& a, const LinComb<Diagram>& b) {
    LinComb<Diagram> out;
    for (const auto& [k1, c1] : a.terms)
      for (const auto& [k2, c2] : b.terms)
        out += lie_bracket(k1, k2).scaled(c1 * c2);
    return out;
  };
  std::vector<Diagram> gens = generators_up_to(2);
  for (const Diagram& a : gens)
    for (const Diagram& b : gens)
      for (const Diagram& c : gens) {
        LinComb<Diagram> jac =
            bracket_lin(LinComb<Diagram>::of(a), lie_bracket(b, c)) +
            bracket_lin(LinComb<Diagram>::of(b), lie_bracket(c, a)) +
            bracket_lin(LinComb<Diagram>::of(c), lie_bracket(a, b));
        if (!jac.is_zero()) {
          detail = "Jacobi fails on a degree <= 2 triple";
          return false;
        }
      }
  return true;
}

bool check_star_associativity(std::string& detail) {
  OudomGuin<TreePreLieBasis> og;
  std::vector<Forest> forests = forests_up_to(3);
  for (const Forest& a : forests)
    for (const Forest& b : forests)
      for (const Forest& c : forests) {
        if (forest_degree(a) + forest_degree(b) + forest_degree(c) > 4)
          continue;
        auto ea = SymElement<RootedTree>::of(a);
        auto eb = SymElement<RootedTree>::of(b);
        auto ec = SymElement<RootedTree>::of(c);
        if (og.og_star(og.og_star(ea, eb), ec) !=
            og.og_star(ea, og.og_star(eb, ec))) {
          detail = "star associativity fails on forests";
          return false;
        }
      }
  OudomGuin<DiagramPreLieBasis> dog;
  std::vector<Diagram> gens = generators_up_to(2);
  for (const Diagram& a : gens)
    for (const Diagram& b : gens)
      for (const Diagram& c : gens) {
        if (a.degree + b.degree + c.degree > 4) continue;
        auto ea = SymElement<Diagram>::of({a});
        auto eb = SymElement<Diagram>::of({b});
        auto ec = SymElement<Diagram>::of({c});
        if (dog.og_star(dog.og_star(ea, eb), ec) !=
            dog.og_star(ea, dog.og_star(eb, ec))) {
          detail = "star associativity fails on dual diagram generators";
          return false;
        }
      }
  return true;
}

bool check_gl_matches_og(std::string& detail) {
  OudomGuin<TreePreLieBasis> og;
  std::vector<Forest> forests = forests_up_to(3);
  for (const Forest& a : forests)
    for (const Forest& b : forests) {
      if (forest_degree(a) + forest_degree(b) > 4) continue;
      if (og.og_star(SymElement<RootedTree>::of(a),
                     SymElement<RootedTree>::of(b)) != gl_star(a, b)) {
        detail = "gl_star differs from the Oudom-Guin star";
        return false;
      }
    }
  return true;
}

bool check_star_hopf_compatibility(std::string& detail) {
  // Delta(a * b) = Delta(a) * Delta(b) with the unshuffle coproduct.
  OudomGuin<TreePreLieBasis> og;
  using Tensor = std::map<std::pair<Forest, Forest>, Poly>;
  auto unshuffle = [](const SymElement<RootedTree>& e) {
    Tensor out;
    for (const auto& [m, c] : e.terms)
      for_each_split<RootedTree>(m, [&](const Forest& l, const Forest& r,
                                        const Rational& mult) {
        auto [it, fresh] = out.try_emplace({l, r}, c * Poly(mult));
        if (!fresh) {
          it->second += c * Poly(mult);
          if (it->second.is_zero()) out.erase(it);
        }
      });
    return out;
  };
  std::vector<Forest> forests = forests_up_to(2);
  for (const Forest& a : forests)
    for (const Forest& b : forests) {
      if (forest_degree(a) + forest_degree(b) > 4) continue;
      Tensor lhs = unshuffle(gl_star(a, b));
      Tensor rhs;
      for_each_split<RootedTree>(a, [&](const Forest& a1, const Forest& a2,
                                        const Rational& m1) {
        for_each_split<RootedTree>(b, [&](const Forest& b1, const Forest& b2,
                                          const Rational& m2) {
          Poly c = Poly(m1 * m2);
          for (const auto& [l, cl] : gl_star(a1, b1).terms)
            for (const auto& [r, cr] : gl_star(a2, b2).terms) {
              auto [it, fresh] = rhs.try_emplace({l, r}, c * cl * cr);
              if (!fresh) {
                it->second += c * cl * cr;
                if (it->second.is_zero()) rhs.erase(it);
              }
            }
        });
      });
      if (lhs != rhs) {
        detail = "star is not compatible with the unshuffle coproduct";
        return false;
      }
    }
  return true;
}

bool check_L_oracle_equalities(std::string& detail) {
  for (int n = 1; n <= 4; ++n)
    for (const Diagram& d : enumerate_diagrams(n))
      if (L_one(d) != L_oracle(monomial_of(d))) {
        detail = "L differs from the circ route on " + format_diagram(d);
        return false;
      }
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n1 + n2 <= 4; ++n2)
      for (const Diagram& d1 : enumerate_diagrams(n1))
        for (const Diagram& d2 : enumerate_diagrams(n2))
          if (L_two(d1, d2) !=
              L_oracle(monomial_mul(monomial_of(d1), monomial_of(d2)))) {
            detail = "L on a product differs from the circ route";
            return false;
          }
  return true;
}

bool check_L_vanishing(std::string& detail) {
  for (int n = 3; n <= 5; ++n)
    for (const Monomial& m : monomial_basis(n))
      if (m.size() >= 3 && !L_oracle(m).is_zero()) {
        detail = "L does not vanish on a length-3 monomial";
        return false;
      }
  return true;
}

bool check_site_counts(std::string& detail) {
  for (int n = 1; n <= 3; ++n)
    for (const Diagram& d : enumerate_diagrams(n))
      if (site_count(d) != 3 * n + 2 + tree_structure(d).fertility[0]) {
        detail = "site count differs on " + format_diagram(d);
        return false;
      }
  for (int n1 = 1; n1 <= 2; ++n1)
    for (int n2 = 1; n2 <= 2; ++n2)
      for (const Diagram& d1 : enumerate_diagrams(n1))
        for (const Diagram& d2 : enumerate_diagrams(n2)) {
          long long f10 = tree_structure(d1).fertility[0];
          long long f20 = tree_structure(d2).fertility[0];
          long long expect =
              d1 == d2 ? (f10 + 1) * (3 * n1 + 1)
                       : (f20 + 1) * (3 * n1 + 1) + (f10 + 1) * (3 * n2 + 1);
          if (pair_site_count(d1, d2) != expect) {
            detail = "pair site count differs";
            return false;
          }
        }
  return true;
}

bool check_phi_displays(std::string& detail) {
  LinComb<Diagram> e2;
  e2.add(path_tree(2), Poly(2));
  e2.add(corolla(2), Poly(2));
  e2.add(parse_diagram("D{2: 0-1,1-2}"), Poly(1) + x_poly);
  if (phi_tree(ladder(2)) != e2) {
    detail = "phi(e_2) display not reproduced";
    return false;
  }
  LinComb<Diagram> cherry;
  cherry.add(corolla(3), Poly(2));
  cherry.add(parse_diagram("D{3: 0-1,1-2,1-3}"), Poly(2) * x_poly);
  cherry.add(parse_diagram("D{3: 1-2,0-2,2-3}"), Poly(2));
  cherry.add(parse_diagram("D{3: 1-3,2-3,0-3}"), Poly(2));
  cherry.add(parse_diagram("D{3: 1-3,1-2,0-3}"), Poly(2));
  cherry.add(parse_diagram("D{3: 0-1,2-3,1-3}"), Poly(2) * x_poly);
  cherry.add(parse_diagram("D{3: 1-2,0-2,0-3}"), Poly(2));
  cherry.add(parse_diagram("D{3: 0-1,0-2,2-3}"), Poly(2));
  if (phi_tree(parse_tree("[[][]]")) != cherry) {
    detail = "phi(B(..)) display not reproduced";
    return false;
  }
  if (!phi_tree(parse_tree("[[][][]]")).is_zero()) {
    detail = "phi does not kill the fertility-3 corolla tree";
    return false;
  }
  return true;
}

bool check_phi_pairings(std::string& detail) {
  for (int n = 1; n <= 4; ++n)
    for (const RootedTree& t : enumerate_trees(n)) {
      if (!is_subbinary(t)) continue;
      Poly y = phi_pairing(monomial_of(path_tree(n)), t);
      Poly expected_y =
          t == ladder(n) ? Poly(Rational(factorial(n))) : Poly();
      if (y != expected_y) {
        detail = "ladder pairing differs at n=" + std::to_string(n);
        return false;
      }
      if (phi_pairing(monomial_of(corolla(n)), t) !=
          Poly(Rational(Integer(1) << tree_stats(t).internal_vertices))) {
        detail = "corolla pairing differs at n=" + std::to_string(n);
        return false;
      }
      int mt = tree_stats(t).two_child_vertices;
      for (const Diagram& d : enumerate_diagrams(n))
        if (m_statistic(d) < mt &&
            !phi_pairing(monomial_of(d), t).is_zero()) {
          detail = "triangularity fails at n=" + std::to_string(n);
          return false;
        }
    }
  return true;
}

bool check_phi_positivity(std::string& detail) {
  for (int n = 1; n <= 5; ++n) {
    const LinComb<Diagram>& img = phi_tree(ladder(n));
    if (img.terms.size() != enumerate_diagrams(n).size()) {
      detail = "phi(e_n) misses a diagram at n=" + std::to_string(n);
      return false;
    }
    for (const auto& [d, c] : img.terms) {
      if (d.degree != n) {
        detail = "phi(e_n) is not homogeneous at n=" + std::to_string(n);
        return false;
      }
      if (c.eval(1) <= 0) {
        detail = "phi(e_n) coefficient not positive at x=1";
        return false;
      }
    }
  }
  return true;
}

bool check_phi_kernel_support(std::string& detail) {
  for (int n = 1; n <= 5; ++n)
    for (const RootedTree& t : enumerate_trees(n))
      if (!is_subbinary(t) && !phi_tree(t).is_zero()) {
        detail = "phi nonzero on a non-sub-binary tree";
        return false;
      }
  return true;
}

bool check_enumeration(std::string& detail) {
  const std::vector<size_t> expected{1, 1, 3, 12, 55, 273, 1428};
  for (int n = 0; n <= 6; ++n)
    if (enumerate_diagrams(n).size() != expected[n]) {
      detail = "diagram count differs at n=" + std::to_string(n);
      return false;
    }
  for (const Diagram& d : enumerate_diagrams(3)) {
    Triple t = triple_decompose(d);
    if (triple_compose(t.d1, t.d2, t.d3) != d) {
      detail = "triple decomposition is not inverted by composition";
      return false;
    }
  }
  const std::vector<size_t> trees{0, 1, 1, 2, 4, 9};
  for (int n = 1; n <= 5; ++n)
    if (enumerate_trees(n).size() != trees[n]) {
      detail = "tree count differs at n=" + std::to_string(n);
      return false;
    }
  const std::vector<size_t> monomials{1, 1, 4, 16, 77, 386};
  for (int n = 1; n <= 5; ++n)
    if (monomial_basis(n).size() != monomials[n]) {
      detail = "monomial basis size differs at n=" + std::to_string(n);
      return false;
    }
  return true;
}

bool check_cofree_series(std::string& detail) {
  const std::vector<long> expected{0, 1, 3, 9, 40, 185};
  for (int n = 1; n <= 5; ++n)
    if (cofree_reference(n) != expected[n]) {
      detail = "cofree reference differs at n=" + std::to_string(n);
      return false;
    }
  return true;
}

bool check_primitive_bases(std::string& detail) {
  auto deg2 = deg2_primitive_basis();
  auto deg3 = deg3_primitive_basis();
  if (deg2.size() != 3 || deg3.size() != 9) {
    detail = "basis sizes differ";
    return false;
  }
  for (const Element& v : deg2)
    if (!reduced_coproduct(v).is_zero()) {
      detail = "a degree-2 basis vector is not primitive";
      return false;
    }
  for (const Element& v : deg3)
    if (!reduced_coproduct(v).is_zero()) {
      detail = "a degree-3 basis vector is not primitive";
      return false;
    }
  for (const Element& p : deg3) {
    Element l = length_part(p, 1), q = length_part(p, 2),
            t = length_part(p, 3);
    if (merge_legs(delta_part(l)) != q.scaled(Poly(-2))) {
      detail = "m delta l(p) != -2 q(p)";
      return false;
    }
    if (!qd_part(l).is_zero()) {
      detail = "Qd(l(p)) != 0";
      return false;
    }
    if (merge_legs(qd_part(q)) != t.scaled(Poly(-3))) {
      detail = "m Qd q(p) != -3 t(p)";
      return false;
    }
  }
  return true;
}

bool check_dimension_table(std::string& detail) {
  // Degrees 1..4 sampled over the default x list; degree 5 is covered by
  // the acceptance run (minutes-scale budget, seconds in practice).
  const std::vector<int> expected{0, 1, 3, 9, 40};
  for (int n = 1; n <= 4; ++n)
    for (int x = -3; x <= 3; ++x)
      if (primitive_dimension(n, x) != expected[n]) {
        detail = "dimension differs at degree " + std::to_string(n) +
                 ", x=" + std::to_string(x);
        return false;
      }
  return true;
}

const std::map<std::string, std::vector<std::pair<std::string, Check>>>&
suite_table() {
  static const std::map<std::string,
                        std::vector<std::pair<std::string, Check>>>
      table{
          {"hopf-axioms",
           {{"coassociativity (degree <= 4, symbolic)", check_coassociativity},
            {"counit laws", check_counit},
            {"antipode convolution identity", check_antipode_convolution},
            {"antipode oracles agree", check_antipode_oracles},
            {"family coproduct formulas", check_family_coproducts},
            {"degree-3 coproduct worked example", check_coproduct_display},
            {"antipode worked examples", check_antipode_displays}}},
          {"prelie",
           {{"left pre-Lie identities", check_prelie_identities},
            {"Jacobi identity", check_jacobi}}},
          {"og",
           {{"star associativity", check_star_associativity},
            {"Grossman-Larson equals Oudom-Guin", check_gl_matches_og},
            {"star/coproduct compatibility", check_star_hopf_compatibility}}},
          {"morphism",
           {{"insertion route equals circ route", check_L_oracle_equalities},
            {"L vanishes on long monomials", check_L_vanishing},
            {"site counts", check_site_counts},
            {"phi worked examples", check_phi_displays},
            {"phi pairings and triangularity", check_phi_pairings},
            {"phi positivity and support", check_phi_positivity},
            {"phi kills non-sub-binary trees", check_phi_kernel_support}}},
          {"counting",
           {{"enumeration counts", check_enumeration},
            {"cofree reference series", check_cofree_series}}},
          {"bases",
           {{"explicit primitive bases", check_primitive_bases},
            {"dimension table (degrees <= 4)", check_dimension_table}}},
      };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, checks] : suite_table()) names.push_back(name);
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite) {
  std::vector<CheckResult> results;
  auto run_one = [&](const std::string& name) {
    for (const auto& [check_name, fn] : suite_table().at(name)) {
      CheckResult r;
      r.name = name + ": " + check_name;
      r.pass = fn(r.detail);
      results.push_back(std::move(r));
    }
  };
  if (suite == "all") {
    for (const auto& [name, checks] : suite_table()) run_one(name);
    return results;
  }
  if (!suite_table().count(suite))
    throw std::invalid_argument("unknown suite '" + suite + "'");
  run_one(suite);
  return results;
}

}  // namespace dissection
