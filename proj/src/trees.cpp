#include "dissection/trees.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dissection {

void RootedTree::normalize() {
  for (RootedTree& c : children) c.normalize();
  std::sort(children.begin(), children.end());
}

int forest_degree(const Forest& f) {
  int n = 0;
  for (const RootedTree& t : f) n += t.degree();
  return n;
}

namespace {

RootedTree parse_tree_at(std::string_view s, size_t& pos) {
  if (pos >= s.size() || s[pos] != '[')
    throw std::invalid_argument("tree syntax: expected '[' at offset " +
                                std::to_string(pos));
  ++pos;
  RootedTree t;
  while (pos < s.size() && s[pos] != ']') t.children.push_back(parse_tree_at(s, pos));
  if (pos >= s.size())
    throw std::invalid_argument("tree syntax: missing ']'");
  ++pos;
  return t;
}

std::string strip_ws(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  return s;
}

}  // namespace

RootedTree parse_tree(std::string_view text) {
  std::string s = strip_ws(text);
  size_t pos = 0;
  RootedTree t = parse_tree_at(s, pos);
  if (pos != s.size())
    throw std::invalid_argument("tree syntax: trailing input in '" + s + "'");
  t.normalize();
  return t;
}

std::string format_tree(const RootedTree& t) {
  std::string out = "[";
  for (const RootedTree& c : t.children) out += format_tree(c);
  return out + "]";
}

Forest parse_forest(std::string_view text) {
  Forest f;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    int depth = 0;
    size_t start = i;
    do {
      if (i >= text.size())
        throw std::invalid_argument("forest syntax: unbalanced brackets");
      if (text[i] == '[') ++depth;
      if (text[i] == ']') --depth;
      ++i;
    } while (depth > 0);
    f.push_back(parse_tree(text.substr(start, i - start)));
  }
  std::sort(f.begin(), f.end());
  return f;
}

std::string format_forest(const Forest& f) {
  if (f.empty()) return "";
  std::string out;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out += " ";
    out += format_tree(f[i]);
  }
  return out;
}

RootedTree single_vertex() { return RootedTree{}; }

RootedTree ladder(int n) {
  RootedTree t;
  for (int i = 1; i < n; ++i) {
    RootedTree up;
    up.children.push_back(std::move(t));
    t = std::move(up);
  }
  return t;
}

const std::vector<RootedTree>& enumerate_trees(int n) {
  if (n < 1) throw std::invalid_argument("trees need at least one vertex");
  static std::vector<std::vector<RootedTree>> memo{{}, {RootedTree{}}};
  static std::mutex mu;
  std::scoped_lock lock(mu);
  while (static_cast<int>(memo.size()) <= n) {
    const int m = static_cast<int>(memo.size());
    // A tree of degree m is a root plus a multiset of subtrees totalling
    // m-1 vertices; force non-decreasing subtrees to avoid duplicates.
    std::vector<RootedTree> out;
    std::vector<RootedTree> stack;
    auto rec = [&](auto&& self, int left, int min_deg,
                   const RootedTree* min_tree) -> void {
      if (left == 0) {
        RootedTree t;
        t.children = stack;
        std::sort(t.children.begin(), t.children.end());
        out.push_back(std::move(t));
        return;
      }
      for (int k = min_deg; k <= left; ++k)
        for (const RootedTree& sub : memo[k]) {
          if (k == min_deg && min_tree && sub < *min_tree) continue;
          stack.push_back(sub);
          self(self, left - k, k, &sub);
          stack.pop_back();
        }
    };
    rec(rec, m - 1, 1, nullptr);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    memo.push_back(std::move(out));
  }
  return memo[n];
}

namespace {

// Preorder: the root is 0, then each child subtree in stored order.
bool graft_rec(const RootedTree& scion, RootedTree& node, int& next,
               int target) {
  if (next == target) {
    node.children.push_back(scion);
    return true;
  }
  ++next;
  for (RootedTree& c : node.children)
    if (graft_rec(scion, c, next, target)) return true;
  return false;
}

}  // namespace

RootedTree graft_at(const RootedTree& t1, const RootedTree& t2, int vertex) {
  if (vertex < 0 || vertex >= t2.degree())
    throw std::out_of_range("graft vertex out of range");
  RootedTree out = t2;
  int next = 0;
  graft_rec(t1, out, next, vertex);
  out.normalize();
  return out;
}

LinComb<RootedTree> graft_circ(const RootedTree& t1, const RootedTree& t2) {
  LinComb<RootedTree> out;
  for (int v = 0; v < t2.degree(); ++v)
    out.add(graft_at(t1, t2, v), Poly(1));
  return out;
}

RootedTree graft_on_root(const Forest& f) {
  RootedTree t;
  t.children = f;
  std::sort(t.children.begin(), t.children.end());
  return t;
}

namespace {

// Grafts every scion below its target vertex, all addressed in the preorder
// of the original tree, then renormalizes once.
void graft_multi_rec(RootedTree& node, int& next,
                     const std::vector<std::pair<int, const RootedTree*>>&
                         scions) {
  const int here = next++;
  const size_t fixed = node.children.size();
  for (size_t i = 0; i < fixed; ++i) graft_multi_rec(node.children[i], next, scions);
  for (const auto& [v, scion] : scions)
    if (v == here) node.children.push_back(*scion);
}

RootedTree graft_multi(const RootedTree& t,
                       const std::vector<std::pair<int, const RootedTree*>>&
                           scions) {
  RootedTree out = t;
  int next = 0;
  graft_multi_rec(out, next, scions);
  out.normalize();
  return out;
}

}  // namespace

SymElement<RootedTree> gl_star(const Forest& f1, const Forest& f2) {
  const int n1 = static_cast<int>(f1.size());
  // Vertices of f2 are addressed as (tree index, preorder index).
  std::vector<std::pair<int, int>> vertices;
  for (size_t t = 0; t < f2.size(); ++t)
    for (int v = 0; v < f2[t].degree(); ++v)
      vertices.push_back({static_cast<int>(t), v});

  SymElement<RootedTree> out;
  // sigma[i] = -1 keeps tree i as a free factor, otherwise a vertex index.
  std::vector<int> sigma(n1, -1);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n1) {
      Forest result;
      for (size_t t = 0; t < f2.size(); ++t) {
        std::vector<std::pair<int, const RootedTree*>> scions;
        for (int j = 0; j < n1; ++j)
          if (sigma[j] >= 0 && vertices[sigma[j]].first == static_cast<int>(t))
            scions.push_back({vertices[sigma[j]].second, &f1[j]});
        result.push_back(scions.empty() ? f2[t] : graft_multi(f2[t], scions));
      }
      for (int j = 0; j < n1; ++j)
        if (sigma[j] < 0) result.push_back(f1[j]);
      std::sort(result.begin(), result.end());
      out.add(result, Poly(1));
      return;
    }
    sigma[i] = -1;
    self(self, i + 1);
    for (size_t v = 0; v < vertices.size(); ++v) {
      sigma[i] = static_cast<int>(v);
      self(self, i + 1);
    }
    sigma[i] = -1;
  };
  rec(rec, 0);
  return out;
}

bool is_subbinary(const RootedTree& t) {
  if (t.children.size() > 2) return false;
  for (const RootedTree& c : t.children)
    if (!is_subbinary(c)) return false;
  return true;
}

bool is_subbinary(const Forest& f) {
  for (const RootedTree& t : f)
    if (!is_subbinary(t)) return false;
  return true;
}

SymElement<RootedTree> subbinary_project(const SymElement<RootedTree>& a) {
  SymElement<RootedTree> out;
  for (const auto& [m, c] : a.terms)
    if (is_subbinary(m)) out.add(m, c);
  return out;
}

TreeStats tree_stats(const RootedTree& t) {
  TreeStats s;
  s.ladder = true;
  auto rec = [&](auto&& self, const RootedTree& node) -> void {
    if (node.children.size() == 2) ++s.two_child_vertices;
    if (!node.children.empty()) ++s.internal_vertices;
    if (node.children.size() > 1) s.ladder = false;
    for (const RootedTree& c : node.children) self(self, c);
  };
  rec(rec, t);
  return s;
}

}  // namespace dissection
