#ifndef DISSECTION_PRELIE_HPP
#define DISSECTION_PRELIE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "dissection/polynomial.hpp"
#include "dissection/rational.hpp"

namespace dissection {

// Linear combination of basis keys with Poly coefficients.
template <class Key>
struct LinComb {
  std::map<Key, Poly> terms;

  static LinComb of(const Key& k, const Poly& c = Poly(1)) {
    LinComb out;
    out.add(k, c);
    return out;
  }
  bool is_zero() const { return terms.empty(); }
  void add(const Key& k, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms) add(k, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  LinComb scaled(const Poly& c) const {
    LinComb out;
    for (const auto& [k, v] : terms) out.add(k, v * c);
    return out;
  }
  bool operator==(const LinComb&) const = default;
};

// Commutative monomial over basis keys (sorted multiset).
template <class Key>
using SymMonomial = std::vector<Key>;

template <class Key>
SymMonomial<Key> sym_mul(SymMonomial<Key> a, const SymMonomial<Key>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

// Element of the symmetric algebra S(g) in the monomial basis.
template <class Key>
struct SymElement {
  std::map<SymMonomial<Key>, Poly> terms;

  static SymElement unit() { return of({}); }
  static SymElement of(const SymMonomial<Key>& m, const Poly& c = Poly(1)) {
    SymElement out;
    out.add(m, c);
    return out;
  }
  static SymElement lift(const LinComb<Key>& l) {
    SymElement out;
    for (const auto& [k, c] : l.terms) out.add({k}, c);
    return out;
  }
  bool is_zero() const { return terms.empty(); }
  void add(const SymMonomial<Key>& m, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  SymElement& operator+=(const SymElement& o) {
    for (const auto& [m, c] : o.terms) add(m, c);
    return *this;
  }
  SymElement& operator-=(const SymElement& o) {
    for (const auto& [m, c] : o.terms) add(m, -c);
    return *this;
  }
  friend SymElement operator+(SymElement a, const SymElement& b) {
    return a += b;
  }
  friend SymElement operator-(SymElement a, const SymElement& b) {
    return a -= b;
  }
  friend SymElement operator*(const SymElement& a, const SymElement& b) {
    SymElement out;
    for (const auto& [m1, c1] : a.terms)
      for (const auto& [m2, c2] : b.terms)
        out.add(sym_mul(m1, m2), c1 * c2);
    return out;
  }
  SymElement scaled(const Poly& c) const {
    SymElement out;
    for (const auto& [m, v] : terms) out.add(m, v * c);
    return out;
  }
  bool operator==(const SymElement&) const = default;
};

// Enumerates the unshuffle splittings of a sorted multiset, with the
// multinomial multiplicity coming from distinguishable positions.
template <class Key, class F>
void for_each_split(const SymMonomial<Key>& m, F&& f) {
  // Group by distinct key.
  std::vector<std::pair<Key, int>> groups;
  for (const Key& k : m) {
    if (!groups.empty() && groups.back().first == k)
      ++groups.back().second;
    else
      groups.push_back({k, 1});
  }
  std::vector<int> take(groups.size(), 0);
  auto rec = [&](auto&& self, size_t g, const Integer& mult) -> void {
    if (g == groups.size()) {
      SymMonomial<Key> left, right;
      for (size_t i = 0; i < groups.size(); ++i) {
        for (int t = 0; t < take[i]; ++t) left.push_back(groups[i].first);
        for (int t = take[i]; t < groups[i].second; ++t)
          right.push_back(groups[i].first);
      }
      f(left, right, Rational(mult));
      return;
    }
    for (int t = 0; t <= groups[g].second; ++t) {
      take[g] = t;
      self(self, g + 1, mult * binomial(groups[g].second, t));
    }
  };
  rec(rec, 0, Integer(1));
}

// Oudom-Guin extension of a pre-Lie product to S(g). The basis supplies the
// structure constants circ: g x g -> g.
template <class Basis>
class OudomGuin {
 public:
  using Key = typename Basis::Key;
  using Mono = SymMonomial<Key>;

  explicit OudomGuin(Basis basis = {}) : basis_(std::move(basis)) {}

  const Basis& basis() const { return basis_; }

  LinComb<Key> circ_keys(const Key& a, const Key& b) {
    return basis_.circ(a, b);
  }

  // x o (y_1...y_q) for x in g: the derivation-style extension.
  SymElement<Key> circ_key_monomial(const Key& x, const Mono& b) {
    if (b.empty()) return {};  // epsilon(x) = 0
    if (b.size() == 1) return SymElement<Key>::lift(basis_.circ(x, b[0]));
    Mono rest(b.begin() + 1, b.end());
    SymElement<Key> out;
    for (const auto& [g, c] : basis_.circ(x, b[0]).terms)
      out.add(sym_mul<Key>(rest, {g}), c);
    for (const auto& [m, c] : circ_key_monomial(x, rest).terms)
      out.add(sym_mul<Key>(m, {b[0]}), c);
    return out;
  }

  // (x_1...x_p) o y lands in g.
  LinComb<Key> circ_monomial_key(const Mono& a, const Key& y) {
    if (a.empty()) return LinComb<Key>::of(y);
    if (a.size() == 1) return basis_.circ(a[0], y);
    auto memo_it = mono_key_memo_.find({a, y});
    if (memo_it != mono_key_memo_.end()) return memo_it->second;
    const Key& x = a[0];
    Mono rest(a.begin() + 1, a.end());
    // (x rest) o y = x o (rest o y) - (x o rest) o y
    LinComb<Key> out;
    for (const auto& [g, c] : circ_monomial_key(rest, y).terms)
      out += basis_.circ(x, g).scaled(c);
    for (const auto& [m, c] : circ_key_monomial(x, rest).terms)
      out -= circ_monomial_key(m, y).scaled(c);
    mono_key_memo_[{a, y}] = out;
    return out;
  }

  SymElement<Key> circ_monomials(const Mono& a, const Mono& b) {
    if (b.empty())
      return a.empty() ? SymElement<Key>::unit() : SymElement<Key>{};
    if (a.empty()) return SymElement<Key>::of(b);
    if (b.size() == 1)
      return SymElement<Key>::lift(circ_monomial_key(a, b[0]));
    Mono rest(b.begin() + 1, b.end());
    SymElement<Key> out;
    for_each_split<Key>(a, [&](const Mono& a1, const Mono& a2,
                               const Rational& mult) {
      SymElement<Key> left = circ_monomials(a1, {b[0]});
      if (left.is_zero()) return;
      out += (left * circ_monomials(a2, rest)).scaled(Poly(mult));
    });
    return out;
  }

  SymElement<Key> og_circ(const SymElement<Key>& a, const SymElement<Key>& b) {
    SymElement<Key> out;
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms)
        out += circ_monomials(ma, mb).scaled(ca * cb);
    return out;
  }

  // a * b = sum a^(1) (a^(2) o b); the associative product of U(g).
  SymElement<Key> og_star(const SymElement<Key>& a, const SymElement<Key>& b) {
    SymElement<Key> out;
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) {
        const Poly c = ca * cb;
        for_each_split<Key>(ma, [&](const Mono& a1, const Mono& a2,
                                    const Rational& mult) {
          SymElement<Key> right = circ_monomials(a2, mb);
          if (right.is_zero()) return;
          out += (SymElement<Key>::of(a1) * right).scaled(c * Poly(mult));
        });
      }
    return out;
  }

 private:
  Basis basis_;
  std::map<std::pair<Mono, Key>, LinComb<Key>> mono_key_memo_;
};

// Checks the left pre-Lie relation for one triple against an arbitrary
// structure-constant callable (so corrupted tables can be probed).
template <class Key>
bool prelie_identity_holds(
    const std::function<LinComb<Key>(const Key&, const Key&)>& circ,
    const Key& a, const Key& b, const Key& c) {
  auto circ_lin = [&](const LinComb<Key>& l, const LinComb<Key>& r) {
    LinComb<Key> out;
    for (const auto& [k1, c1] : l.terms)
      for (const auto& [k2, c2] : r.terms)
        out += circ(k1, k2).scaled(c1 * c2);
    return out;
  };
  auto assoc = [&](const Key& u, const Key& v, const Key& w) {
    return circ_lin(LinComb<Key>::of(u), circ(v, w)) -
           circ_lin(circ(u, v), LinComb<Key>::of(w));
  };
  return assoc(a, b, c) == assoc(b, a, c);
}

}  // namespace dissection

#endif
