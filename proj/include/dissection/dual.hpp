#ifndef DISSECTION_DUAL_HPP
#define DISSECTION_DUAL_HPP

#include "dissection/algebra.hpp"
#include "dissection/prelie.hpp"

namespace dissection {

// Kronecker pairing of a dual element (coefficients over the Z basis) with
// an algebra element, both carried by Element.
Poly pairing(const Element& dual, const Element& alg);

// c(D1,D2;D) = sum over C with q_C(D) = D1 (one piece) and r_C(D) = D2 of
// x^{k_C(D)}; the coefficient of Z_D in Z_{D1} Z_{D2}.
Poly c_coefficient(const Diagram& d1, const Diagram& d2, const Diagram& d);

// Pre-Lie product on the dual generators, Z_{D1} o Z_{D2} = sum c Z_D.
// Backed by a per-degree table over all target diagrams.
const LinComb<Diagram>& prelie_circ_diagrams(const Diagram& d1,
                                             const Diagram& d2);

LinComb<Diagram> lie_bracket(const Diagram& d1, const Diagram& d2);

// The diagram instantiation of the pre-Lie basis concept.
struct DiagramPreLieBasis {
  using Key = Diagram;
  LinComb<Diagram> circ(const Diagram& a, const Diagram& b) const {
    return prelie_circ_diagrams(a, b);
  }
};

// Conversions between the Kronecker dual basis Z_U and the monomial basis
// of S(g_D); they differ by the multiset symmetry factor prod m_j!.
SymElement<Diagram> to_symmetric(const Element& dual);
Element from_symmetric(const SymElement<Diagram>& s);

// Convolution product of the graded dual, in the Kronecker basis. On
// generators it is (1+delta) Z_{D1 D2} + sum c(D1,D2;D) Z_D.
Element dual_product(const Element& a, const Element& b);

}  // namespace dissection

#endif
