#include "dissection/morphism.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace dissection {

namespace {

std::set<int> prefix_set(const std::vector<int>& order, int count) {
  return {order.begin(), order.begin() + count};
}

// phi_{i,t}: split vertex i into i, i+1; the first t chords of A_{D,i}
// stay at i, the rest move to i+1. No chord is added yet.
std::vector<Chord> open_interior(const Diagram& d, const TreeStructure& ts,
                                 int i, int t) {
  std::set<int> keep = prefix_set(ts.ccw[i], t);
  std::vector<Chord> out;
  for (int ci = 0; ci < d.degree; ++ci) {
    auto [u, v] = d.chords[ci];
    auto remap = [&](int w) {
      if (w < i) return w;
      if (w > i) return w + 1;
      return keep.count(ci) ? i : i + 1;
    };
    out.push_back(make_chord(remap(u), remap(v)));
  }
  return out;
}

// phi^lambda_{0,tau}: open the root. lambda = 0 creates vertex n+1 and
// moves the first tau root chords there; lambda = 1 shifts everything and
// keeps the first tau root chords on the new root 0.
std::vector<Chord> open_root(const Diagram& d, const TreeStructure& ts,
                             int lambda, int tau) {
  std::set<int> moved = prefix_set(ts.ccw[0], tau);
  std::vector<Chord> out;
  for (int ci = 0; ci < d.degree; ++ci) {
    auto [u, v] = d.chords[ci];
    if (lambda == 0) {
      if (u == 0 && moved.count(ci))
        out.push_back(make_chord(v, d.degree + 1));
      else
        out.push_back({u, v});
    } else {
      if (u == 0 && moved.count(ci))
        out.push_back(make_chord(0, v + 1));
      else
        out.push_back(make_chord(u == 0 ? 1 : u + 1, v + 1));
    }
  }
  return out;
}

Diagram finish(int degree, std::vector<Chord> chords, Chord added) {
  chords.push_back(added);
  std::sort(chords.begin(), chords.end());
  return Diagram{degree, std::move(chords)};
}

}  // namespace

std::optional<Diagram> insert_interior(const Diagram& d, int i, int t) {
  const int n = d.degree;
  if (i < 1 || i > n || t < 0) return std::nullopt;
  TreeStructure ts = tree_structure(d);
  if (t > ts.fertility[i]) return std::nullopt;
  return finish(n + 1, open_interior(d, ts, i, t), {i, i + 1});
}

std::optional<Diagram> insert_root(const Diagram& d, int lambda, int tau) {
  const int n = d.degree;
  if (lambda < 0 || lambda > 1 || tau < 0) return std::nullopt;
  TreeStructure ts = tree_structure(d);
  if (tau > ts.fertility[0]) return std::nullopt;
  Chord added = lambda == 0 ? Chord{0, n + 1} : Chord{0, 1};
  return finish(n + 1, open_root(d, ts, lambda, tau), added);
}

std::optional<Diagram> insert_pair(const Diagram& d1, const Diagram& d2,
                                   int t, int j, int tau, int lambda) {
  const int n1 = d1.degree, n2 = d2.degree;
  if (n1 < 1 || n2 < 1 || lambda < 0 || lambda > 1) return std::nullopt;
  if (t < 0 || j < 1 || j > n2 || tau < 0) return std::nullopt;
  TreeStructure ts1 = tree_structure(d1);
  TreeStructure ts2 = tree_structure(d2);
  if (t > ts1.fertility[0] || tau > ts2.fertility[j]) return std::nullopt;

  std::vector<Chord> chords;
  for (const Chord& c : open_root(d1, ts1, lambda, t)) {
    auto [u, v] = c;
    if (u >= 1)
      chords.push_back(make_chord(u + j - lambda, v + j - lambda));
    else
      chords.push_back(make_chord(j + lambda * (n1 + 1), v + j - lambda));
  }
  for (const Chord& c : open_interior(d2, ts2, j, tau)) {
    auto [u, v] = c;
    if (v <= j)
      chords.push_back({u, v});
    else if (u <= j)
      chords.push_back({u, v + n1});
    else
      chords.push_back({u + n1, v + n1});
  }
  return finish(n1 + n2 + 1, std::move(chords), {j, j + n1 + 1});
}

std::optional<Diagram> insert_rootpair(const Diagram& d1, const Diagram& d2,
                                       int lambda, int t, int tau) {
  const int n1 = d1.degree, n2 = d2.degree;
  if (n1 < 1 || n2 < 1 || lambda < 0 || lambda > 1 || t < 0 || tau < 0)
    return std::nullopt;
  TreeStructure ts1 = tree_structure(d1);
  TreeStructure ts2 = tree_structure(d2);
  if (t > ts1.fertility[0] || tau > ts2.fertility[0]) return std::nullopt;

  std::vector<Chord> chords;
  if (lambda == 0) {
    for (const Chord& c : open_root(d1, ts1, 1, t)) {
      auto [u, v] = c;
      chords.push_back(u >= 1 ? Chord{u + n2, v + n2}
                              : make_chord(0, v + n2));
    }
    for (const Chord& c : open_root(d2, ts2, 0, tau)) chords.push_back(c);
    return finish(n1 + n2 + 1, std::move(chords), {0, n2 + 1});
  }
  for (const Chord& c : open_root(d1, ts1, 0, t)) chords.push_back(c);
  for (const Chord& c : open_root(d2, ts2, 1, tau)) {
    auto [u, v] = c;
    chords.push_back(u >= 1 ? Chord{u + n1, v + n1} : make_chord(0, v + n1));
  }
  return finish(n1 + n2 + 1, std::move(chords), {0, n1 + 1});
}

LinComb<Diagram> L_one(const Diagram& d) {
  const Poly x = Poly::x();
  TreeStructure ts = tree_structure(d);
  LinComb<Diagram> out;
  for (int i = 1; i <= d.degree; ++i)
    for (int t = 0; t <= ts.fertility[i]; ++t)
      out.add(*insert_interior(d, i, t),
              t <= ts.lpos[i] - 1 ? Poly(1) : x);
  for (int tau = 0; tau <= ts.fertility[0]; ++tau)
    for (int lambda : {0, 1})
      out.add(*insert_root(d, lambda, tau), Poly(1));
  return out;
}

LinComb<Diagram> L_two(const Diagram& d1, const Diagram& d2) {
  const Poly x = Poly::x();
  TreeStructure ts1 = tree_structure(d1);
  TreeStructure ts2 = tree_structure(d2);
  LinComb<Diagram> out;
  for (int t = 0; t <= ts1.fertility[0]; ++t)
    for (int j = 1; j <= d2.degree; ++j)
      for (int tau = 0; tau <= ts2.fertility[j]; ++tau)
        out.add(*insert_pair(d1, d2, t, j, tau),
                tau <= ts2.lpos[j] - 1 ? Poly(1) : x);
  for (int tau = 0; tau <= ts2.fertility[0]; ++tau)
    for (int i = 1; i <= d1.degree; ++i)
      for (int t = 0; t <= ts1.fertility[i]; ++t)
        out.add(*insert_pair(d2, d1, tau, i, t),
                t <= ts1.lpos[i] - 1 ? Poly(1) : x);
  for (int lambda : {0, 1})
    for (int t = 0; t <= ts1.fertility[0]; ++t)
      for (int tau = 0; tau <= ts2.fertility[0]; ++tau)
        out.add(*insert_rootpair(d1, d2, lambda, t, tau), Poly(1));
  return out;
}

LinComb<Diagram> L_of_monomial(const Monomial& u) {
  if (u.empty()) return LinComb<Diagram>::of(corolla(1));
  if (u.size() == 1) return L_one(u[0]);
  if (u.size() == 2) return L_two(u[0], u[1]);
  return {};
}

namespace {

OudomGuin<DiagramPreLieBasis>& diagram_og() {
  static OudomGuin<DiagramPreLieBasis> og;
  return og;
}
std::mutex& og_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

LinComb<Diagram> L_oracle(const Monomial& u) {
  std::scoped_lock lock(og_mutex());
  return diagram_og().circ_monomial_key(u, corolla(1));
}

int site_count(const Diagram& d) {
  TreeStructure ts = tree_structure(d);
  std::set<std::pair<Diagram, Chord>> couples;
  for (int i = 1; i <= d.degree; ++i)
    for (int t = 0; t <= ts.fertility[i]; ++t)
      couples.insert({*insert_interior(d, i, t), {i, i + 1}});
  for (int lambda : {0, 1})
    for (int tau = 0; tau <= ts.fertility[0]; ++tau) {
      Chord added = lambda == 0 ? Chord{0, d.degree + 1} : Chord{0, 1};
      couples.insert({*insert_root(d, lambda, tau), added});
    }
  return static_cast<int>(couples.size());
}

long long pair_site_count(const Diagram& d1, const Diagram& d2) {
  const int n1 = d1.degree, n2 = d2.degree;
  TreeStructure ts1 = tree_structure(d1);
  TreeStructure ts2 = tree_structure(d2);
  std::set<std::pair<Diagram, Chord>> couples;
  for (int t = 0; t <= ts1.fertility[0]; ++t)
    for (int j = 1; j <= n2; ++j)
      for (int tau = 0; tau <= ts2.fertility[j]; ++tau)
        couples.insert({*insert_pair(d1, d2, t, j, tau),
                        {j, j + n1 + 1}});
  for (int tau = 0; tau <= ts2.fertility[0]; ++tau)
    for (int i = 1; i <= n1; ++i)
      for (int t = 0; t <= ts1.fertility[i]; ++t)
        couples.insert({*insert_pair(d2, d1, tau, i, t),
                        {i, i + n2 + 1}});
  for (int lambda : {0, 1})
    for (int t = 0; t <= ts1.fertility[0]; ++t)
      for (int tau = 0; tau <= ts2.fertility[0]; ++tau) {
        Chord added = lambda == 0 ? Chord{0, n2 + 1} : Chord{0, n1 + 1};
        couples.insert({*insert_rootpair(d1, d2, lambda, t, tau), added});
      }
  return static_cast<long long>(couples.size());
}

const LinComb<Diagram>& phi_tree(const RootedTree& t) {
  static std::map<RootedTree, LinComb<Diagram>> memo;
  static std::mutex mu;
  {
    std::scoped_lock lock(mu);
    auto it = memo.find(t);
    if (it != memo.end()) return it->second;
  }
  LinComb<Diagram> out;
  if (t.children.empty()) {
    out.add(corolla(1), Poly(1));
  } else {
    Forest f(t.children.begin(), t.children.end());
    for (const auto& [u, c] : phi_forest(f).terms)
      out += L_of_monomial(u).scaled(c);
  }
  std::scoped_lock lock(mu);
  return memo.try_emplace(t, std::move(out)).first->second;
}

SymElement<Diagram> phi_forest(const Forest& f) {
  SymElement<Diagram> out = SymElement<Diagram>::unit();
  for (const RootedTree& t : f)
    out = out * SymElement<Diagram>::lift(phi_tree(t));
  return out;
}

Poly phi_pairing(const Monomial& u, const RootedTree& t) {
  if (monomial_degree(u) != t.degree())
    throw std::invalid_argument("degree mismatch in phi pairing");
  if (u.size() != 1) return Poly();
  const LinComb<Diagram>& img = phi_tree(t);
  auto it = img.terms.find(u[0]);
  return it == img.terms.end() ? Poly() : it->second;
}

int m_statistic(const Diagram& d) {
  int best = 0;
  for (ChordMask c = 0; c <= full_mask(d); ++c) {
    best = std::max(best, static_cast<int>(contract(d, c).size()));
    if (d.degree == 0) break;
  }
  return best;
}

}  // namespace dissection
