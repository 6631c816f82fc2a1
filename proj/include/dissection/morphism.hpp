#ifndef DISSECTION_MORPHISM_HPP
#define DISSECTION_MORPHISM_HPP

#include <optional>

#include "dissection/dual.hpp"
#include "dissection/trees.hpp"

namespace dissection {

// The four chord-insertion operations. Out-of-range parameters return
// nullopt, the zero element.

// Operation 1: split vertex i (1 <= i <= n) into i, i+1, the first t chords
// of A_{D,i} staying at i, and insert the chord {i, i+1}.
std::optional<Diagram> insert_interior(const Diagram& d, int i, int t);

// Operation 2: open the root; lambda = 0 creates vertex n+1 and the chord
// {0, n+1}, lambda = 1 creates the new root and the chord {0, 1}.
std::optional<Diagram> insert_root(const Diagram& d, int lambda, int tau);

// Operation 3: open d1 at its root (split t) and d2 at vertex j (split
// tau), then join with the chord {j, j+n1+1}. Independent of lambda; the
// parameter exists to exercise that invariance.
std::optional<Diagram> insert_pair(const Diagram& d1, const Diagram& d2,
                                   int t, int j, int tau, int lambda = 1);

// Operation 4: open both diagrams at their roots; lambda places d1 after
// (0) or before (1) d2 around the polygon.
std::optional<Diagram> insert_rootpair(const Diagram& d1, const Diagram& d2,
                                       int lambda, int t, int tau);

// L on a single diagram: interior sites weighted 1 for t <= l(i)-1 and x
// otherwise, root sites weighted 1.
LinComb<Diagram> L_one(const Diagram& d);

// L on a product of two diagrams via operations 3 and 4.
LinComb<Diagram> L_two(const Diagram& d1, const Diagram& d2);

// L of an arbitrary monomial: unit -> Z_{X_1}, lengths 1 and 2 as above,
// length >= 3 -> 0.
LinComb<Diagram> L_of_monomial(const Monomial& u);

// Independent route: the single-diagram part of Z_U o Z_{X_1} computed
// through the Oudom-Guin recursion. Arbiter for the ccw convention.
LinComb<Diagram> L_oracle(const Monomial& u);

// Number of distinct couples (result, inserted chord) over operations 1-2,
// and over operations 3-4 for a pair.
int site_count(const Diagram& d);
long long pair_site_count(const Diagram& d1, const Diagram& d2);

// The Hopf morphism from rooted forests: phi(.) = Z_{X_1},
// phi(B(F)) = L(phi(F)), multiplicative on forests.
const LinComb<Diagram>& phi_tree(const RootedTree& t);
SymElement<Diagram> phi_forest(const Forest& f);

// <Z_U, phi(t)>; zero unless U is a single diagram of matching degree.
Poly phi_pairing(const Monomial& u, const RootedTree& t);

// m(D) = max number of pieces of q_C(D) over chord subsets C.
int m_statistic(const Diagram& d);

}  // namespace dissection

#endif
