#include "dissection/algebra.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

namespace dissection {

int monomial_degree(const Monomial& m) {
  int n = 0;
  for (const Diagram& d : m) n += d.degree;
  return n;
}

Monomial monomial_mul(Monomial a, const Monomial& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

Monomial monomial_of(const Diagram& d) {
  return d.degree == 0 ? Monomial{} : Monomial{d};
}

std::string format_monomial(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += " ";
    out += format_diagram(m[i]);
  }
  return out;
}

Element Element::of(const Monomial& m, const Poly& c) {
  Element e;
  e.add(m, c);
  return e;
}

Element Element::of(const Diagram& d, const Poly& c) {
  return of(monomial_of(d), c);
}

Poly Element::coeff(const Monomial& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? Poly() : it->second;
}

void Element::add(const Monomial& m, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms) add(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms) add(m, -c);
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  Element out;
  for (const auto& [m1, c1] : a.terms)
    for (const auto& [m2, c2] : b.terms)
      out.add(monomial_mul(m1, m2), c1 * c2);
  return out;
}

Element Element::scaled(const Poly& c) const {
  Element out;
  for (const auto& [m, v] : terms) out.add(m, v * c);
  return out;
}

std::string Element::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms) {
    if (!out.empty()) out += "  +  ";
    out += "(" + c.str() + ") " + format_monomial(m);
  }
  return out;
}

Poly TensorElement::coeff(const Monomial& l, const Monomial& r) const {
  auto it = terms.find({l, r});
  return it == terms.end() ? Poly() : it->second;
}

void TensorElement::add(const Monomial& l, const Monomial& r, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.try_emplace({l, r}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [lr, c] : o.terms) add(lr.first, lr.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [lr, c] : o.terms) add(lr.first, lr.second, -c);
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [lr1, c1] : a.terms)
    for (const auto& [lr2, c2] : b.terms)
      out.add(monomial_mul(lr1.first, lr2.first),
              monomial_mul(lr1.second, lr2.second), c1 * c2);
  return out;
}

TensorElement TensorElement::scaled(const Poly& c) const {
  TensorElement out;
  for (const auto& [lr, v] : terms) out.add(lr.first, lr.second, v * c);
  return out;
}

TensorElement TensorElement::flipped() const {
  TensorElement out;
  for (const auto& [lr, v] : terms) out.add(lr.second, lr.first, v);
  return out;
}

std::string TensorElement::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [lr, c] : terms) {
    if (!out.empty()) out += "  +  ";
    out += "(" + c.str() + ") " + format_monomial(lr.first) + " (x) " +
           format_monomial(lr.second);
  }
  return out;
}

const TensorElement& coproduct(const Diagram& d) {
  static std::map<Diagram, TensorElement> memo;
  static std::mutex mu;
  {
    std::scoped_lock lock(mu);
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
  }
  TensorElement out;
  for (ChordMask c = 0; c <= full_mask(d); ++c) {
    Monomial left = contract(d, c);
    Restriction r = restrict_to(d, c);
    out.add(left, monomial_of(r.diagram), Poly::x_power(r.defect));
    if (d.degree == 0) break;
  }
  std::scoped_lock lock(mu);
  return memo.try_emplace(d, std::move(out)).first->second;
}

TensorElement coproduct(const Monomial& m) {
  TensorElement out;
  out.add({}, {}, Poly(1));
  for (const Diagram& d : m) out = out * coproduct(d);
  return out;
}

TensorElement coproduct(const Element& a) {
  TensorElement out;
  for (const auto& [m, c] : a.terms) out += coproduct(m).scaled(c);
  return out;
}

Poly counit(const Element& a) { return a.coeff(Monomial{}); }

const Element& antipode(const Diagram& d) {
  static std::map<Diagram, Element> memo;
  static std::mutex mu;
  {
    std::scoped_lock lock(mu);
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
  }
  Element out;
  if (d.degree == 0) {
    out = Element::unit();
  } else {
    for (ChordMask c = 1; c <= full_mask(d); ++c) {
      Restriction r = restrict_to(d, c);
      Element s_left = Element::unit();
      for (const Diagram& piece : contract(d, c))
        s_left = s_left * antipode(piece);
      out -= (s_left * Element::of(r.diagram)).scaled(Poly::x_power(r.defect));
    }
  }
  std::scoped_lock lock(mu);
  return memo.try_emplace(d, std::move(out)).first->second;
}

Element antipode(const Element& a) {
  Element out;
  for (const auto& [m, c] : a.terms) {
    Element prod = Element::unit();
    for (const Diagram& d : m) prod = prod * antipode(d);
    out += prod.scaled(c);
  }
  return out;
}

namespace {

void partition_oracle_rec(const std::vector<TrackedPiece>& pieces,
                          ChordMask remaining, int sign, int xpow,
                          const Monomial& acc, Element& out) {
  if (remaining == 0) {
    out.add(acc, Poly::term(sign, xpow));
    return;
  }
  // Iterate nonempty subsets C_i of the remaining original chords.
  for (ChordMask ci = remaining; ci != 0; ci = (ci - 1) & remaining) {
    Monomial next_acc = acc;
    std::vector<TrackedPiece> next_pieces;
    int defect = 0;
    for (const TrackedPiece& p : pieces) {
      ChordMask local = 0;
      for (size_t j = 0; j < p.ids.size(); ++j)
        if (ci >> p.ids[j] & 1) local |= ChordMask(1) << j;
      if (local != 0) {
        Restriction r = restrict_to(p.d, local);
        defect += r.defect;
        next_acc.push_back(r.diagram);
      }
      for (TrackedPiece sub : contract_tracked(p.d, local)) {
        for (int& id : sub.ids) id = p.ids[id];
        if (sub.d.degree > 0) next_pieces.push_back(std::move(sub));
      }
    }
    std::sort(next_acc.begin(), next_acc.end());
    partition_oracle_rec(next_pieces, remaining & ~ci, -sign, xpow + defect,
                         next_acc, out);
  }
}

// Weak compositions of n into exactly parts parts (entries >= 0).
void weak_compositions(int n, int parts, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& f) {
  if (parts == 1) {
    cur.push_back(n);
    f(cur);
    cur.pop_back();
    return;
  }
  for (int head = 0; head <= n; ++head) {
    cur.push_back(head);
    weak_compositions(n - head, parts - 1, cur, f);
    cur.pop_back();
  }
}

void compositions(int n, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& f) {
  if (n == 0) {
    f(cur);
    return;
  }
  for (int head = 1; head <= n; ++head) {
    cur.push_back(head);
    compositions(n - head, cur, f);
    cur.pop_back();
  }
}

}  // namespace

Element antipode_partition_oracle(const Diagram& d) {
  if (d.degree == 0) return Element::unit();
  TrackedPiece whole{d, {}};
  whole.ids.resize(d.degree);
  for (int i = 0; i < d.degree; ++i) whole.ids[i] = i;
  Element out;
  partition_oracle_rec({whole}, full_mask(d), 1, 0, {}, out);
  return out;
}

Element antipode_corolla_closed(int n) {
  Element out;
  std::vector<int> alpha;
  compositions(n, alpha, [&](const std::vector<int>& a) {
    const int k = static_cast<int>(a.size());
    // Independent weak compositions of a[j] into p_j+1 slots for j<k-1.
    std::vector<Monomial> partial{Monomial{}};
    for (int j = 0; j + 1 < k; ++j) {
      int pj = 0;
      for (int l = j + 1; l < k; ++l) pj += a[l];
      std::vector<Monomial> grown;
      std::vector<int> cur;
      weak_compositions(a[j], pj + 1, cur, [&](const std::vector<int>& comp) {
        for (const Monomial& base : partial) {
          Monomial m = base;
          for (int part : comp)
            if (part > 0) m.push_back(corolla(part));
          grown.push_back(std::move(m));
        }
      });
      partial = std::move(grown);
    }
    const int sign = k % 2 == 0 ? 1 : -1;
    for (Monomial m : partial) {
      m.push_back(corolla(a[k - 1]));
      std::sort(m.begin(), m.end());
      out.add(m, Poly(sign));
    }
  });
  return out;
}

Element antipode_pathtree_closed(int n) {
  Element out;
  std::vector<int> alpha;
  compositions(n, alpha, [&](const std::vector<int>& a) {
    const int k = static_cast<int>(a.size());
    Rational mult = Rational(factorial(n));
    Monomial m;
    for (int part : a) {
      mult /= Rational(factorial(part));
      m.push_back(path_tree(part));
    }
    std::sort(m.begin(), m.end());
    out.add(m, Poly(k % 2 == 0 ? mult : -mult));
  });
  return out;
}

TensorElement coproduct_corolla_oracle(int n) {
  TensorElement out;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> cur;
    weak_compositions(n - k, k + 1, cur, [&](const std::vector<int>& comp) {
      Monomial left;
      for (int part : comp)
        if (part > 0) left.push_back(corolla(part));
      std::sort(left.begin(), left.end());
      out.add(left, monomial_of(corolla(k)), Poly(1));
    });
  }
  return out;
}

TensorElement coproduct_pathtree_oracle(int n) {
  TensorElement out;
  for (int k = 0; k <= n; ++k)
    out.add(monomial_of(path_tree(k)), monomial_of(path_tree(n - k)),
            Poly(Rational(binomial(n, k))));
  return out;
}

}  // namespace dissection
