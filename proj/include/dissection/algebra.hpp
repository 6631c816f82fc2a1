#ifndef DISSECTION_ALGEBRA_HPP
#define DISSECTION_ALGEBRA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dissection/diagram.hpp"
#include "dissection/polynomial.hpp"

namespace dissection {

// A commutative monomial of nonempty diagrams, kept sorted. The empty vector
// is the unit of H_D.
using Monomial = std::vector<Diagram>;

int monomial_degree(const Monomial& m);
Monomial monomial_mul(Monomial a, const Monomial& b);
Monomial monomial_of(const Diagram& d);  // {} when d is empty
std::string format_monomial(const Monomial& m);

// Finite linear combination of monomials with Poly coefficients. Serves both
// H_D and (reinterpreted over the dual basis Z_U) its graded dual.
struct Element {
  std::map<Monomial, Poly> terms;

  static Element unit() { return of(Monomial{}); }
  static Element of(const Monomial& m, const Poly& c = Poly(1));
  static Element of(const Diagram& d, const Poly& c = Poly(1));

  bool is_zero() const { return terms.empty(); }
  Poly coeff(const Monomial& m) const;
  void add(const Monomial& m, const Poly& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);  // free comm.
  Element scaled(const Poly& c) const;
  bool operator==(const Element&) const = default;

  std::string str() const;
};

struct TensorElement {
  std::map<std::pair<Monomial, Monomial>, Poly> terms;

  bool is_zero() const { return terms.empty(); }
  Poly coeff(const Monomial& l, const Monomial& r) const;
  void add(const Monomial& l, const Monomial& r, const Poly& c);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) {
    return a += b;
  }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) {
    return a -= b;
  }
  friend TensorElement operator*(const TensorElement& a,
                                 const TensorElement& b);  // leg-wise
  TensorElement scaled(const Poly& c) const;
  TensorElement flipped() const;
  bool operator==(const TensorElement&) const = default;

  std::string str() const;
};

// Selection-quotient coproduct: sum over chord subsets C of
// x^{k_C} q_C(D) (x) r_C(D). Memoized per diagram.
const TensorElement& coproduct(const Diagram& d);
TensorElement coproduct(const Monomial& m);
TensorElement coproduct(const Element& a);

Poly counit(const Element& a);

// Antipode by the contraction recursion, memoized per diagram; extended
// multiplicatively and linearly.
const Element& antipode(const Diagram& d);
Element antipode(const Element& a);

// Independent antipode oracle: sum over ordered set partitions of Ch(D).
Element antipode_partition_oracle(const Diagram& d);

// Closed antipode formulas for the two distinguished families.
Element antipode_corolla_closed(int n);
Element antipode_pathtree_closed(int n);

// Closed coproduct formulas for corollas and path trees.
TensorElement coproduct_corolla_oracle(int n);
TensorElement coproduct_pathtree_oracle(int n);

}  // namespace dissection

#endif
