#ifndef DISSECTION_JSON_IO_HPP
#define DISSECTION_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "dissection/algebra.hpp"
#include "dissection/prelie.hpp"

namespace dissection {

using Json = nlohmann::json;

// Polynomials travel as the coefficient list c_0..c_d, each an exact
// ["num","den"] pair of decimal strings.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

// {"terms":[{"monomial":["D{...}",...],"poly":[["num","den"],...]}]}
// with an optional "basis":"dual" marker.
Json element_to_json(const Element& e, const std::string& basis = "");
Element element_from_json(const Json& j);

// {"terms":[{"left":[...],"right":[...],"poly":[...]}]}
Json tensor_to_json(const TensorElement& t);
TensorElement tensor_from_json(const Json& j);

Element element_from_lincomb(const LinComb<Diagram>& l);
Element element_from_sym(const SymElement<Diagram>& s);

// Evaluation of every coefficient at a fixed rational x.
Element specialize(const Element& e, const Rational& x);
TensorElement specialize(const TensorElement& t, const Rational& x);

}  // namespace dissection

#endif
