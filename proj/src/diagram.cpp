#include "dissection/diagram.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace dissection {

namespace testing {
bool flip_ccw_convention = false;
}

namespace {

std::string chord_str(const Chord& c) {
  return std::to_string(c.first) + "-" + std::to_string(c.second);
}

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

}  // namespace

Diagram corolla(int n) {
  Diagram d;
  d.degree = n;
  for (int i = 1; i <= n; ++i) d.chords.push_back({0, i});
  return d;
}

Diagram path_tree(int n) {
  Diagram d;
  d.degree = n;
  if (n >= 1) d.chords.push_back({0, n});
  for (int i = 1; i < n; ++i) d.chords.push_back({i, i + 1});
  std::sort(d.chords.begin(), d.chords.end());
  return d;
}

void validate(const Diagram& d) {
  const int n = d.degree;
  if (n < 0) fail("negative degree");
  if (static_cast<int>(d.chords.size()) != n)
    fail("degree " + std::to_string(n) + " needs " + std::to_string(n) +
         " chords, got " + std::to_string(d.chords.size()));
  if (n > 31) fail("degree above supported chord-mask width");
  for (const Chord& c : d.chords) {
    if (c.first >= c.second) fail("chord " + chord_str(c) + " not normalized");
    if (c.first < 0 || c.second > n)
      fail("vertex " + std::to_string(c.second > n ? c.second : c.first) +
           " out of range for degree " + std::to_string(n) + " in chord " +
           chord_str(c));
  }
  if (!std::is_sorted(d.chords.begin(), d.chords.end()))
    fail("chords not in canonical order");
  if (std::adjacent_find(d.chords.begin(), d.chords.end()) != d.chords.end())
    fail("duplicate chord");
  for (size_t i = 0; i < d.chords.size(); ++i)
    for (size_t j = i + 1; j < d.chords.size(); ++j) {
      auto [a, b] = d.chords[i];
      auto [c, e] = d.chords[j];
      if ((a < c && c < b && b < e) || (c < a && a < e && e < b))
        fail("crossing chords " + chord_str(d.chords[i]) + " and " +
             chord_str(d.chords[j]));
    }
  // n acyclic edges on n+1 vertices make a spanning tree.
  std::vector<int> uf(n + 1);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  for (const Chord& c : d.chords) {
    int a = find(c.first), b = find(c.second);
    if (a == b) fail("cycle through chord " + chord_str(c));
    uf[a] = b;
  }
}

Diagram parse_diagram(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  size_t pos = 0;
  auto expect = [&](char ch) {
    if (pos >= s.size() || s[pos] != ch)
      fail("diagram syntax: expected '" + std::string(1, ch) + "' at offset " +
           std::to_string(pos) + " in '" + s + "'");
    ++pos;
  };
  auto number = [&]() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start)
      fail("diagram syntax: expected number at offset " +
           std::to_string(pos) + " in '" + s + "'");
    return std::stoi(s.substr(start, pos - start));
  };
  expect('D');
  expect('{');
  Diagram d;
  d.degree = number();
  expect(':');
  if (pos < s.size() && s[pos] != '}') {
    while (true) {
      int u = number();
      expect('-');
      int v = number();
      if (u == v) fail("degenerate chord " + std::to_string(u) + "-" +
                       std::to_string(v));
      d.chords.push_back(make_chord(u, v));
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  expect('}');
  if (pos != s.size()) fail("diagram syntax: trailing input in '" + s + "'");
  std::sort(d.chords.begin(), d.chords.end());
  validate(d);
  return d;
}

std::string format_diagram(const Diagram& d) {
  std::string out = "D{" + std::to_string(d.degree) + ":";
  for (size_t i = 0; i < d.chords.size(); ++i) {
    out += i == 0 ? " " : ",";
    out += chord_str(d.chords[i]);
  }
  out += "}";
  return out;
}

TreeStructure tree_structure(const Diagram& d) {
  const int n = d.degree;
  TreeStructure ts;
  ts.parent.assign(n + 1, -1);
  ts.fertility.assign(n + 1, 0);
  ts.label_of_chord.assign(n, 0);
  ts.chord_of_label.assign(n + 1, -1);
  ts.ccw.assign(n + 1, {});
  ts.lpos.assign(n + 1, 0);

  std::vector<std::vector<std::pair<int, int>>> adj(n + 1);  // (other, chord)
  for (int i = 0; i < n; ++i) {
    auto [u, v] = d.chords[i];
    adj[u].push_back({v, i});
    adj[v].push_back({u, i});
    ++ts.fertility[u];
    ++ts.fertility[v];
  }
  std::queue<int> bfs;
  bfs.push(0);
  std::vector<char> seen(n + 1, 0);
  seen[0] = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (auto [w, ci] : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ts.parent[w] = v;
        ts.label_of_chord[ci] = w;
        ts.chord_of_label[w] = ci;
        bfs.push(w);
      }
  }
  const int m = n + 1;
  for (int i = 0; i <= n; ++i) {
    auto& order = ts.ccw[i];
    for (auto [w, ci] : adj[i]) order.push_back(ci);
    auto key = [&](int ci) {
      auto [u, v] = d.chords[ci];
      int other = u == i ? v : u;
      return ((i - 1 - other) % m + m) % m;
    };
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return key(a) < key(b); });
    if (testing::flip_ccw_convention) std::reverse(order.begin(), order.end());
  }
  for (int i = 1; i <= n; ++i) {
    const auto& order = ts.ccw[i];
    for (size_t p = 0; p < order.size(); ++p)
      if (order[p] == ts.chord_of_label[i]) ts.lpos[i] = static_cast<int>(p) + 1;
  }
  return ts;
}

FacePartition faces(const Diagram& d, ChordMask c) {
  const int n = d.degree;
  if ((c & ~full_mask(d)) != 0)
    throw std::invalid_argument("chord subset not contained in diagram");
  std::vector<int> selected;
  for (int i = 0; i < n; ++i)
    if (c >> i & 1) selected.push_back(i);
  // Signature of a side = on which side of each selected chord it lies.
  std::vector<ChordMask> sig(n + 1, 0);
  for (int s = 0; s <= n; ++s)
    for (size_t j = 0; j < selected.size(); ++j) {
      auto [u, v] = d.chords[selected[j]];
      if (u <= s && s < v) sig[s] |= ChordMask(1) << j;
    }
  FacePartition fp;
  std::vector<std::pair<ChordMask, int>> order;  // (signature, min side)
  for (int s = 0; s <= n; ++s) {
    bool found = false;
    for (size_t f = 0; f < fp.faces.size(); ++f)
      if (sig[fp.faces[f][0]] == sig[s]) {
        fp.faces[f].push_back(s);
        found = true;
        break;
      }
    if (!found) fp.faces.push_back({s});
  }
  for (auto& face : fp.faces) {
    fp.kept.push_back(face.front());
    for (size_t j = 1; j < face.size(); ++j) fp.contracted.push_back(face[j]);
  }
  std::sort(fp.contracted.begin(), fp.contracted.end());
  return fp;
}

Restriction restrict_to(const Diagram& d, ChordMask c) {
  const int n = d.degree;
  FacePartition fp = faces(d, c);
  const int p = std::popcount(c);
  std::vector<char> kept_side(n + 1, 0);
  for (int s : fp.kept) kept_side[s] = 1;

  Restriction r;
  r.merge.assign(n + 1, 0);
  int crossed = 0;
  for (int v = 0; v <= n; ++v) {
    r.merge[v] = crossed % (p + 1);
    if (v <= n - 1 && kept_side[v]) ++crossed;  // side v sits between v, v+1
  }

  r.diagram.degree = p;
  std::vector<std::pair<Chord, int>> mapped;  // (new chord, old chord index)
  for (int i = 0; i < n; ++i)
    if (c >> i & 1) {
      auto [u, v] = d.chords[i];
      mapped.push_back({make_chord(r.merge[u], r.merge[v]), i});
    }
  std::sort(mapped.begin(), mapped.end());
  for (auto& [ch, idx] : mapped) r.diagram.chords.push_back(ch);

  if (p > 0) {
    TreeStructure ts_old = tree_structure(d);
    TreeStructure ts_new = tree_structure(r.diagram);
    for (size_t j = 0; j < mapped.size(); ++j) {
      int old_idx = mapped[j].second;
      int old_head = ts_old.parent[ts_old.label_of_chord[old_idx]];
      int new_child = ts_new.label_of_chord[j];
      auto [a, b] = r.diagram.chords[j];
      int new_head = a == new_child ? b : a;
      if (r.merge[old_head] != new_head) ++r.defect;
    }
  }
  return r;
}

namespace {

// Contracts a single chord; pieces carry the original index of each chord.
std::vector<TrackedPiece> contract_one(const Diagram& d, int idx) {
  const int n = d.degree;
  auto [u, v] = d.chords[idx];
  auto build = [](int degree, std::vector<std::pair<Chord, int>> chords) {
    std::sort(chords.begin(), chords.end());
    TrackedPiece p;
    p.d.degree = degree;
    for (auto& [ch, id] : chords) {
      p.d.chords.push_back(ch);
      p.ids.push_back(id);
    }
    return p;
  };

  if (v == u + 1 || (u == 0 && v == n)) {
    // Adjacent vertices merge; a single piece remains.
    std::vector<std::pair<Chord, int>> chords;
    auto remap = [&](int w) {
      if (u == 0 && v == n) return w == n ? 0 : w;
      return w > u ? w - 1 : w;
    };
    for (int i = 0; i < n; ++i)
      if (i != idx) {
        auto [a, b] = d.chords[i];
        chords.push_back({make_chord(remap(a), remap(b)), i});
      }
    return {build(n - 1, std::move(chords))};
  }

  // The chord splits the polygon. Inner piece [u..v] is rooted at the merged
  // vertex; the outer piece keeps root 0.
  std::vector<std::pair<Chord, int>> inner, outer;
  for (int i = 0; i < n; ++i) {
    if (i == idx) continue;
    auto [a, b] = d.chords[i];
    if (a >= u && b <= v) {
      auto remap = [&](int w) { return w == v ? 0 : w - u; };
      inner.push_back({make_chord(remap(a), remap(b)), i});
    } else {
      auto remap = [&](int w) { return w >= v ? w - (v - u) : w; };
      outer.push_back({make_chord(remap(a), remap(b)), i});
    }
  }
  return {build(n - (v - u), std::move(outer)),
          build(v - u - 1, std::move(inner))};
}

}  // namespace

std::vector<TrackedPiece> contract_tracked(const Diagram& d, ChordMask c) {
  if ((c & ~full_mask(d)) != 0)
    throw std::invalid_argument("chord subset not contained in diagram");
  if (c == 0) {
    TrackedPiece p;
    p.d = d;
    p.ids.resize(d.degree);
    std::iota(p.ids.begin(), p.ids.end(), 0);
    return {p};
  }
  const int idx = std::countr_zero(c);
  const ChordMask rest = c & (c - 1);
  std::vector<TrackedPiece> out;
  for (TrackedPiece& piece : contract_one(d, idx)) {
    ChordMask pmask = 0;
    for (size_t j = 0; j < piece.ids.size(); ++j)
      if (rest >> piece.ids[j] & 1) pmask |= ChordMask(1) << j;
    for (TrackedPiece& sub : contract_tracked(piece.d, pmask)) {
      for (int& id : sub.ids) id = piece.ids[id];
      out.push_back(std::move(sub));
    }
  }
  return out;
}

std::vector<Diagram> contract(const Diagram& d, ChordMask c) {
  std::vector<Diagram> out;
  for (TrackedPiece& p : contract_tracked(d, c))
    if (p.d.degree > 0) out.push_back(std::move(p.d));
  std::sort(out.begin(), out.end());
  return out;
}

Triple triple_decompose(const Diagram& d) {
  if (d.degree == 0)
    throw std::invalid_argument("cannot decompose the empty diagram");
  const int n = d.degree;
  int v = 0;
  for (const Chord& c : d.chords)
    if (c.first == 0) {
      v = c.second;
      break;
    }
  // Vertices 1..w form the component of v once {0,v} is removed.
  std::vector<std::vector<int>> adj(n + 1);
  for (const Chord& c : d.chords) {
    if (c.first == 0 && c.second == v) continue;
    adj[c.first].push_back(c.second);
    adj[c.second].push_back(c.first);
  }
  std::vector<char> seen(n + 1, 0);
  std::queue<int> bfs;
  bfs.push(v);
  seen[v] = 1;
  int w = v;
  while (!bfs.empty()) {
    int a = bfs.front();
    bfs.pop();
    w = std::max(w, a);
    for (int b : adj[a])
      if (!seen[b]) {
        seen[b] = 1;
        bfs.push(b);
      }
  }
  Triple t;
  t.d1.degree = v - 1;
  t.d2.degree = w - v;
  t.d3.degree = n - w;
  for (const Chord& c : d.chords) {
    auto [a, b] = c;
    if (a == 0 && b == v) continue;
    if (a >= 1 && b <= v) {
      t.d1.chords.push_back(make_chord(b == v ? 0 : b, a));
    } else if (a >= v && b <= w) {
      t.d2.chords.push_back(make_chord(a - v, b - v));
    } else {
      t.d3.chords.push_back(make_chord(a == 0 ? 0 : a - w, b - w));
    }
  }
  std::sort(t.d1.chords.begin(), t.d1.chords.end());
  std::sort(t.d2.chords.begin(), t.d2.chords.end());
  std::sort(t.d3.chords.begin(), t.d3.chords.end());
  return t;
}

Diagram triple_compose(const Diagram& d1, const Diagram& d2,
                       const Diagram& d3) {
  const int i1 = d1.degree, i2 = d2.degree, i3 = d3.degree;
  const int n = i1 + i2 + i3 + 1;
  const int v = i1 + 1, w = i1 + i2 + 1;
  Diagram d;
  d.degree = n;
  d.chords.push_back({0, v});
  for (const Chord& c : d1.chords)
    d.chords.push_back(make_chord(c.first == 0 ? v : c.first,
                                  c.second == 0 ? v : c.second));
  for (const Chord& c : d2.chords)
    d.chords.push_back(make_chord(c.first + v, c.second + v));
  for (const Chord& c : d3.chords)
    d.chords.push_back(make_chord(c.first == 0 ? 0 : c.first + w,
                                  c.second + w));
  std::sort(d.chords.begin(), d.chords.end());
  return d;
}

const std::vector<Diagram>& enumerate_diagrams(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (n > kMaxEnumerationDegree)
    throw std::runtime_error("enumeration capacity exceeded at degree " +
                             std::to_string(n));
  static std::vector<std::vector<Diagram>> memo{{Diagram{}}};
  while (static_cast<int>(memo.size()) <= n) {
    const int m = static_cast<int>(memo.size());
    std::vector<Diagram> all;
    for (int i1 = 0; i1 < m; ++i1)
      for (int i2 = 0; i2 + i1 < m; ++i2) {
        const int i3 = m - 1 - i1 - i2;
        for (const Diagram& a : memo[i1])
          for (const Diagram& b : memo[i2])
            for (const Diagram& c : memo[i3])
              all.push_back(triple_compose(a, b, c));
      }
    std::sort(all.begin(), all.end());
    memo.push_back(std::move(all));
  }
  return memo[n];
}

}  // namespace dissection
