#ifndef DISSECTION_DIAGRAM_HPP
#define DISSECTION_DIAGRAM_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dissection {

// A chord of the (n+1)-gon, stored with endpoints u < v.
using Chord = std::pair<int, int>;

inline Chord make_chord(int a, int b) {
  return a < b ? Chord{a, b} : Chord{b, a};
}

// A dissection diagram of degree n: n pairwise non-crossing chords of the
// polygon on vertices {0,...,n} (vertex 0 is the root) forming a spanning
// tree. Chords are kept sorted; equality is structural.
struct Diagram {
  int degree = 0;
  std::vector<Chord> chords;

  auto operator<=>(const Diagram&) const = default;
};

// Chord subsets are passed around as bitmasks over the sorted chord list.
using ChordMask = std::uint32_t;

inline ChordMask full_mask(const Diagram& d) {
  return d.degree == 0 ? 0u : (ChordMask(1) << d.degree) - 1u;
}

Diagram corolla(int n);    // X_n: chords {0,i}
Diagram path_tree(int n);  // Y_n: chords {i,i+1} and {0,n}

// Throws std::invalid_argument naming the offending pair when the chord set
// is not a non-crossing spanning tree of the right size.
void validate(const Diagram& d);

// Grammar: D{<n>: <u>-<v>(, <u>-<v>)*}; degree 0 is D{0:}. Whitespace is
// ignored, pairs may appear in any order and orientation.
Diagram parse_diagram(std::string_view text);
std::string format_diagram(const Diagram& d);

// Rooted-tree data attached to a diagram: parents, chord labels, fertilities
// and the counter-clockwise neighbour order A_{D,i} at every vertex.
struct TreeStructure {
  std::vector<int> parent;          // parent[v]; parent[0] = -1
  std::vector<int> label_of_chord;  // chord index -> label (child endpoint)
  std::vector<int> chord_of_label;  // label (1..n) -> chord index; [0] unused
  std::vector<int> fertility;       // f_D(i)
  // ccw[i] lists incident chord indices swept counter-clockwise starting
  // from vertex i-1 (at the root: n, n-1, ..., 1).
  std::vector<std::vector<int>> ccw;
  // lpos[i] = l(i): 1-based position in ccw[i] of the chord labeled i.
  std::vector<int> lpos;
};
TreeStructure tree_structure(const Diagram& d);

// When true, ccw orders are reversed. Exists for the negative-control runs
// of the verification suites; normal code never touches it.
namespace testing {
extern bool flip_ccw_convention;
}

// Faces cut out of the polygon by a chord subset. Sides are numbered so side
// i joins vertices i and i+1, side n joins n and 0.
struct FacePartition {
  std::vector<std::vector<int>> faces;  // sides per face, each sorted
  std::vector<int> kept;                // min side of each face
  std::vector<int> contracted;          // Sp_C^+(D), sorted
};
FacePartition faces(const Diagram& d, ChordMask c);

// q_C(D): contract the chords in C; the result is the multiset of pieces,
// sorted canonically.
std::vector<Diagram> contract(const Diagram& d, ChordMask c);

// r_C(D) together with the orientation defect k_C(D) and the vertex merge
// map induced by contracting the non-minimal sides of every face.
struct Restriction {
  Diagram diagram;
  int defect = 0;
  std::vector<int> merge;  // old vertex -> new vertex
};
Restriction restrict_to(const Diagram& d, ChordMask c);

// Contraction with provenance: each output piece keeps, per chord, the index
// of the chord of the original diagram it descends from.
struct TrackedPiece {
  Diagram d;
  std::vector<int> ids;  // ids[j] = original index of d.chords[j]
};
std::vector<TrackedPiece> contract_tracked(const Diagram& d, ChordMask c);

// The recursive bijection behind d(h) = 1 + h d(h)^3: chop at the root chord
// {0,v} with v minimal.
struct Triple {
  Diagram d1, d2, d3;
};
Triple triple_decompose(const Diagram& d);
Diagram triple_compose(const Diagram& d1, const Diagram& d2,
                       const Diagram& d3);

// All diagrams of degree n in canonical (lexicographic) order; memoized.
// Guarded: n above the practical bound throws a capacity error.
const std::vector<Diagram>& enumerate_diagrams(int n);
constexpr int kMaxEnumerationDegree = 10;

}  // namespace dissection

#endif
