#ifndef DISSECTION_TREES_HPP
#define DISSECTION_TREES_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "dissection/prelie.hpp"

namespace dissection {

// Unordered rooted tree in canonical form: children sorted. Degree is the
// vertex count, so the single vertex has degree 1.
struct RootedTree {
  std::vector<RootedTree> children;

  int degree() const {
    int n = 1;
    for (const RootedTree& c : children) n += c.degree();
    return n;
  }
  void normalize();

  friend std::strong_ordering operator<=>(const RootedTree& a,
                                          const RootedTree& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.children.begin(), a.children.end(), b.children.begin(),
        b.children.end());
  }
  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

// Forests are sorted multisets of trees, i.e. the symmetric-algebra
// monomials over the tree basis.
using Forest = SymMonomial<RootedTree>;

int forest_degree(const Forest& f);

// Grammar: [] is the single vertex, [c1 c2 ...] a root with children;
// whitespace optional. Forests are whitespace-separated trees.
RootedTree parse_tree(std::string_view text);
std::string format_tree(const RootedTree& t);
Forest parse_forest(std::string_view text);
std::string format_forest(const Forest& f);

RootedTree single_vertex();
RootedTree ladder(int n);  // e_n

// All rooted trees with n vertices (1, 1, 2, 4, 9, 20, ...); memoized.
const std::vector<RootedTree>& enumerate_trees(int n);

// Grafts t1 below the vertex of t2 with the given preorder index.
RootedTree graft_at(const RootedTree& t1, const RootedTree& t2, int vertex);

// Pre-Lie product: sum of graftings of t1 on every vertex of t2.
LinComb<RootedTree> graft_circ(const RootedTree& t1, const RootedTree& t2);

// B(F): new root with F as children; B() is the single vertex.
RootedTree graft_on_root(const Forest& f);

// Grossman-Larson product: sum over partial graftings of the trees of f1
// (distinguishable positions) onto vertices of f2.
SymElement<RootedTree> gl_star(const Forest& f1, const Forest& f2);

bool is_subbinary(const RootedTree& t);
bool is_subbinary(const Forest& f);
SymElement<RootedTree> subbinary_project(const SymElement<RootedTree>& a);

struct TreeStats {
  int two_child_vertices = 0;  // m(t)
  int internal_vertices = 0;   // int(t)
  bool ladder = false;
};
TreeStats tree_stats(const RootedTree& t);

// The tree instantiation of the pre-Lie basis concept.
struct TreePreLieBasis {
  using Key = RootedTree;
  LinComb<RootedTree> circ(const RootedTree& a, const RootedTree& b) const {
    return graft_circ(a, b);
  }
};

}  // namespace dissection

#endif
