#include "dissection/polynomial.hpp"

namespace dissection {

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mag = a.get_str();
    if (a.get_den() != 1 && k > 0) mag = "(" + mag + ")";
    if (k == 0) {
      out += mag;
    } else {
      if (a != 1) out += mag + "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace dissection
