#ifndef DISSECTION_PRIMITIVES_HPP
#define DISSECTION_PRIMITIVES_HPP

#include <vector>

#include "dissection/algebra.hpp"
#include "dissection/linalg.hpp"

namespace dissection {

// All monomials of total degree n in canonical order; memoized.
// Sizes 1, 4, 17, 77, 386 for n = 1..5.
const std::vector<Monomial>& monomial_basis(int n);

// Projection on monomials of the given length (1 = linear part l, 2 =
// quadratic part q, 3 = cubic part t).
Element length_part(const Element& a, int len);
// Everything of length > 3.
Element remainder_part(const Element& a);

// Projections of the coproduct: delta on (length 1)x(length 1), Qd on
// (length 2)x(length 1); op variants act on the flipped coproduct.
TensorElement delta_part(const Element& a);
TensorElement delta_op_part(const Element& a);
TensorElement qd_part(const Element& a);
TensorElement qd_op_part(const Element& a);

// Multiplies the two tensor legs back together.
Element merge_legs(const TensorElement& t);

// The reduced coproduct is Delta minus the two primitive terms; v is
// primitive iff reduced_coproduct(v) vanishes.
TensorElement reduced_coproduct(const Element& a);

// Matrix of the reduced coproduct from the degree-n monomial basis to the
// basis of sum_{p+q=n, p,q>=1} H_p (x) H_q, evaluated at x = x_value. Rows
// are ordered lexicographically on (left monomial, right monomial).
SparseMatrix reduced_coproduct_matrix(int n, const Rational& x_value);

int primitive_dimension(int n, const Rational& x_value);

// Coefficient of h^n in 1 - 1/F_{H_D}(h), the dimension a cofree coalgebra
// would have.
Integer cofree_reference(int n);

// The explicit primitive bases in degrees 2 and 3, symbolic in x.
std::vector<Element> deg2_primitive_basis();
std::vector<Element> deg3_primitive_basis();

}  // namespace dissection

#endif
