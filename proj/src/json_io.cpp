#include "dissection/json_io.hpp"

namespace dissection {

Json poly_to_json(const Poly& p) {
  Json out = Json::array();
  for (const Rational& c : p.coeffs())
    out.push_back({c.get_num().get_str(), c.get_den().get_str()});
  return out;
}

Poly poly_from_json(const Json& j) {
  Poly p;
  int k = 0;
  for (const Json& pair : j) {
    Rational c(pair.at(0).get<std::string>() + "/" +
               pair.at(1).get<std::string>());
    c.canonicalize();
    p += Poly::term(c, k++);
  }
  return p;
}

namespace {

Json monomial_to_json(const Monomial& m) {
  Json out = Json::array();
  for (const Diagram& d : m) out.push_back(format_diagram(d));
  return out;
}

Monomial monomial_from_json(const Json& j) {
  Monomial m;
  for (const Json& s : j) m.push_back(parse_diagram(s.get<std::string>()));
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

Json element_to_json(const Element& e, const std::string& basis) {
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms)
    terms.push_back({{"monomial", monomial_to_json(m)},
                     {"poly", poly_to_json(c)}});
  Json out{{"terms", terms}};
  if (!basis.empty()) out["basis"] = basis;
  return out;
}

Element element_from_json(const Json& j) {
  Element e;
  for (const Json& t : j.at("terms"))
    e.add(monomial_from_json(t.at("monomial")), poly_from_json(t.at("poly")));
  return e;
}

Json tensor_to_json(const TensorElement& t) {
  Json terms = Json::array();
  for (const auto& [lr, c] : t.terms)
    terms.push_back({{"left", monomial_to_json(lr.first)},
                     {"right", monomial_to_json(lr.second)},
                     {"poly", poly_to_json(c)}});
  return Json{{"terms", terms}};
}

TensorElement tensor_from_json(const Json& j) {
  TensorElement t;
  for (const Json& term : j.at("terms"))
    t.add(monomial_from_json(term.at("left")),
          monomial_from_json(term.at("right")),
          poly_from_json(term.at("poly")));
  return t;
}

Element element_from_lincomb(const LinComb<Diagram>& l) {
  Element e;
  for (const auto& [d, c] : l.terms) e.add(monomial_of(d), c);
  return e;
}

Element element_from_sym(const SymElement<Diagram>& s) {
  Element e;
  for (const auto& [m, c] : s.terms) e.add(m, c);
  return e;
}

Element specialize(const Element& e, const Rational& x) {
  Element out;
  for (const auto& [m, c] : e.terms) out.add(m, Poly(c.eval(x)));
  return out;
}

TensorElement specialize(const TensorElement& t, const Rational& x) {
  TensorElement out;
  for (const auto& [lr, c] : t.terms)
    out.add(lr.first, lr.second, Poly(c.eval(x)));
  return out;
}

}  // namespace dissection
