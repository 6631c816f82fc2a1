#ifndef DISSECTION_POLYNOMIAL_HPP
#define DISSECTION_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "dissection/rational.hpp"

namespace dissection {

// Univariate polynomial in the Hopf-algebra parameter x, over exact rationals.
// Invariant: no trailing zero coefficient (the zero polynomial has no
// coefficients at all).
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant) {  // NOLINT: implicit by design
    if (constant != 0) coeffs_.push_back(constant);
  }
  Poly(int constant) : Poly(Rational(constant)) {}  // NOLINT

  static Poly x() { return x_power(1); }
  static Poly x_power(int k) { return term(1, k); }
  static Poly term(const Rational& c, int k) {
    Poly p;
    if (c != 0) {
      p.coeffs_.assign(k + 1, Rational(0));
      p.coeffs_[k] = c;
    }
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k]
                                                          : Rational(0);
  }

  Poly& operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly(0) - a; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    out.trim();
    return out;
  }

  bool operator==(const Poly&) const = default;
  auto operator<=>(const Poly&) const = default;

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  // Renders e.g. "1 + x", "-3 - 2*x", "(5/3)*x^2". Zero renders as "0".
  std::string str() const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

}  // namespace dissection

#endif
