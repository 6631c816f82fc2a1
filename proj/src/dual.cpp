#include "dissection/dual.hpp"

#include <bit>
#include <map>
#include <mutex>

namespace dissection {

Poly pairing(const Element& dual, const Element& alg) {
  Poly out;
  for (const auto& [m, c] : dual.terms) out += c * alg.coeff(m);
  return out;
}

Poly c_coefficient(const Diagram& d1, const Diagram& d2, const Diagram& d) {
  if (d1.degree + d2.degree != d.degree)
    throw std::invalid_argument("degree mismatch in c(D1,D2;D)");
  Poly out;
  for (const auto& [lr, c] : coproduct(d).terms)
    if (lr.first == monomial_of(d1) && lr.second == monomial_of(d2))
      out += c;
  return out;
}

namespace {

using CircTable = std::map<std::pair<Diagram, Diagram>, LinComb<Diagram>>;

// One sweep over all diagrams of the target degree records every coproduct
// term whose left leg is a single diagram.
const CircTable& circ_table(int target_degree) {
  static std::map<int, CircTable> memo;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  auto it = memo.find(target_degree);
  if (it != memo.end()) return it->second;
  CircTable table;
  for (const Diagram& d : enumerate_diagrams(target_degree))
    for (const auto& [lr, c] : coproduct(d).terms) {
      if (lr.first.size() != 1 || lr.second.size() != 1) continue;
      table[{lr.first[0], lr.second[0]}].add(d, c);
    }
  return memo.try_emplace(target_degree, std::move(table)).first->second;
}

}  // namespace

const LinComb<Diagram>& prelie_circ_diagrams(const Diagram& d1,
                                             const Diagram& d2) {
  static const LinComb<Diagram> zero;
  const CircTable& table = circ_table(d1.degree + d2.degree);
  auto it = table.find({d1, d2});
  return it == table.end() ? zero : it->second;
}

LinComb<Diagram> lie_bracket(const Diagram& d1, const Diagram& d2) {
  return prelie_circ_diagrams(d1, d2) - prelie_circ_diagrams(d2, d1);
}

namespace {

Rational symmetry_factor(const Monomial& m) {
  Rational f(1);
  size_t run = 1;
  for (size_t i = 1; i <= m.size(); ++i) {
    if (i < m.size() && m[i] == m[i - 1]) {
      ++run;
    } else {
      f *= Rational(factorial(run));
      run = 1;
    }
  }
  return f;
}

}  // namespace

SymElement<Diagram> to_symmetric(const Element& dual) {
  SymElement<Diagram> out;
  for (const auto& [m, c] : dual.terms)
    out.add(m, c * Poly(Rational(1) / symmetry_factor(m)));
  return out;
}

Element from_symmetric(const SymElement<Diagram>& s) {
  Element out;
  for (const auto& [m, c] : s.terms) out.add(m, c * Poly(symmetry_factor(m)));
  return out;
}

Element dual_product(const Element& a, const Element& b) {
  static OudomGuin<DiagramPreLieBasis> og;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  return from_symmetric(og.og_star(to_symmetric(a), to_symmetric(b)));
}

}  // namespace dissection
