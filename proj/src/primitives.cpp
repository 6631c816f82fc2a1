#include "dissection/primitives.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace dissection {

namespace {

void gen_monomials(int n, const Diagram& min_factor, Monomial& cur,
                   std::vector<Monomial>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = 1; k <= n; ++k)
    for (const Diagram& d : enumerate_diagrams(k)) {
      if (d < min_factor) continue;
      cur.push_back(d);
      gen_monomials(n - k, d, cur, out);
      cur.pop_back();
    }
}

}  // namespace

const std::vector<Monomial>& monomial_basis(int n) {
  static std::map<int, std::vector<Monomial>> memo;
  static std::mutex mu;
  {
    std::scoped_lock lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  std::vector<Monomial> out;
  Monomial cur;
  gen_monomials(n, Diagram{}, cur, out);
  std::sort(out.begin(), out.end());
  std::scoped_lock lock(mu);
  return memo.try_emplace(n, std::move(out)).first->second;
}

Element length_part(const Element& a, int len) {
  Element out;
  for (const auto& [m, c] : a.terms)
    if (static_cast<int>(m.size()) == len) out.add(m, c);
  return out;
}

Element remainder_part(const Element& a) {
  Element out;
  for (const auto& [m, c] : a.terms)
    if (m.size() > 3) out.add(m, c);
  return out;
}

namespace {

TensorElement legs_filter(const TensorElement& t, int left_len,
                          int right_len) {
  TensorElement out;
  for (const auto& [lr, c] : t.terms)
    if (static_cast<int>(lr.first.size()) == left_len &&
        static_cast<int>(lr.second.size()) == right_len)
      out.add(lr.first, lr.second, c);
  return out;
}

}  // namespace

TensorElement delta_part(const Element& a) {
  return legs_filter(coproduct(a), 1, 1);
}
TensorElement delta_op_part(const Element& a) {
  return legs_filter(coproduct(a).flipped(), 1, 1);
}
TensorElement qd_part(const Element& a) {
  return legs_filter(coproduct(a), 2, 1);
}
TensorElement qd_op_part(const Element& a) {
  return legs_filter(coproduct(a).flipped(), 2, 1);
}

Element merge_legs(const TensorElement& t) {
  Element out;
  for (const auto& [lr, c] : t.terms)
    out.add(monomial_mul(lr.first, lr.second), c);
  return out;
}

TensorElement reduced_coproduct(const Element& a) {
  TensorElement out = coproduct(a);
  for (const auto& [m, c] : a.terms) {
    out.add(m, {}, -c);
    out.add({}, m, -c);
  }
  return out;
}

SparseMatrix reduced_coproduct_matrix(int n, const Rational& x_value) {
  const std::vector<Monomial>& cols = monomial_basis(n);
  std::map<std::pair<Monomial, Monomial>, int> row_index;
  for (int p = 1; p <= n - 1; ++p) {
    for (const Monomial& l : monomial_basis(p))
      for (const Monomial& r : monomial_basis(n - p))
        row_index.try_emplace({l, r}, 0);
  }
  int next = 0;
  for (auto& [key, idx] : row_index) idx = next++;

  SparseMatrix m(next, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [lr, c] : coproduct(cols[j]).terms) {
      if (lr.first.empty() || lr.second.empty()) continue;
      m.add(row_index.at(lr), static_cast<int>(j), c.eval(x_value));
    }
  return m;
}

int primitive_dimension(int n, const Rational& x_value) {
  return kernel_dimension(reduced_coproduct_matrix(n, x_value));
}

Integer cofree_reference(int n) {
  if (n < 1) return 0;
  // F = prod_m (1-h^m)^{d_m} truncated at degree n; answer is -[h^n] F.
  std::vector<Integer> f(n + 1, 0);
  f[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Integer dm = binomial(3 * m, m) / (2 * m + 1);
    std::vector<Integer> factor(n + 1, 0);
    for (int j = 0; m * j <= n; ++j) {
      Integer b = binomial(dm.get_ui(), j);
      factor[m * j] = j % 2 == 0 ? b : -b;
    }
    std::vector<Integer> g(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
      if (f[i] == 0) continue;
      for (int j = 0; i + j <= n; ++j)
        if (factor[j] != 0) g[i + j] += f[i] * factor[j];
    }
    f = std::move(g);
  }
  return -f[n];
}

namespace {

Element el(const Poly& c, const std::vector<const char*>& texts) {
  Monomial m;
  for (const char* t : texts) m.push_back(parse_diagram(t));
  std::sort(m.begin(), m.end());
  return Element::of(m, c);
}

const char* kX1 = "D{1: 0-1}";
const char* kX2 = "D{2: 0-1,0-2}";
const char* kY2 = "D{2: 0-2,1-2}";
const char* kL2 = "D{2: 0-1,1-2}";

}  // namespace

std::vector<Element> deg2_primitive_basis() {
  const Poly x = Poly::x();
  std::vector<Element> v;
  v.push_back(el(Poly(1) + x, {kY2}) + el(Poly(-2), {kL2}));
  v.push_back(el(Poly(1), {kY2}) + el(Poly(-1), {kX2}));
  v.push_back(el(Poly(1), {kY2}) + el(Poly(-1), {kX1, kX1}));
  return v;
}

std::vector<Element> deg3_primitive_basis() {
  const Poly x = Poly::x();
  const Poly one(1);
  std::vector<Element> v;
  // Degree-3 diagrams, written as in the source displays.
  const char* a = "D{3: 0-1,1-2,0-3}";  // chords 1->0, 2->1, 3->0
  const char* b = "D{3: 1-2,0-2,0-3}";  // 1->2, 2->0, 3->0
  const char* c = "D{3: 0-1,0-2,2-3}";  // 1->0, 2->0, 3->2
  const char* l3 = "D{3: 0-1,1-2,2-3}";
  const char* e = "D{3: 0-1,1-2,1-3}";
  const char* x3 = "D{3: 0-1,0-2,0-3}";
  const char* f = "D{3: 1-2,0-2,2-3}";
  const char* g = "D{3: 1-3,2-3,0-3}";
  const char* h = "D{3: 0-1,2-3,1-3}";
  const char* i = "D{3: 1-3,1-2,0-3}";
  const char* j = "D{3: 0-1,2-3,0-3}";
  const char* y3 = "D{3: 1-2,2-3,0-3}";

  v.push_back(el(one, {a}) + el(-x, {b}) + el(x, {c}) +
              el(-(one + x), {kL2, kX1}) +
              el(-(one + x * x), {kX2, kX1}) + el(x, {kY2, kX1}) +
              el(x * x + one, {kX1, kX1, kX1}));
  v.push_back(el(one, {l3}) + el(-(x * x), {b}) + el(x, {e}) +
              el(-((one + x) * (one + x)), {kL2, kX1}) +
              el(x * (x - one), {kX2, kX1}) + el(x * x, {kY2, kX1}) +
              el(Poly::term(Rational(1, 3), 3) +
                     Poly::term(Rational(-1, 3), 2) +
                     Poly::term(Rational(5, 3), 1) + Poly(Rational(1, 3)),
                 {kX1, kX1, kX1}));
  v.push_back(el(one, {c}) + el(-one, {x3}) + el(-one, {kL2, kX1}) +
              el(-(x - Poly(2)), {kX2, kX1}) + el(x - one, {kX1, kX1, kX1}));
  v.push_back(el(one, {f}) + el(-one, {g}) + el(-one, {kL2, kX1}) +
              el(one, {kX2, kX1}) + el(-(x - one), {kY2, kX1}) +
              el(x - one, {kX1, kX1, kX1}));
  v.push_back(el(one, {h}) + el(-(one + x), {x3}) + el(one, {f}) +
              el(Poly(-2), {kL2, kX1}) + el(Poly(2) * (one + x), {kX2, kX1}) +
              el(-(one + x), {kY2, kX1}));
  v.push_back(el(one, {i}) + el(-one, {f}));
  v.push_back(el(one, {b}) + el(-one, {i}) + el(one, {kL2, kX1}) +
              el(-one, {kX2, kX1}) + el(x - one, {kY2, kX1}) +
              el(-(x - one), {kX1, kX1, kX1}));
  v.push_back(el(one, {j}) + el(Poly(-2), {kX2, kX1}) +
              el(-one, {kY2, kX1}) + el(Poly(2), {kX1, kX1, kX1}));
  v.push_back(el(one, {y3}) + el(Poly(-3), {kY2, kX1}) +
              el(Poly(2), {kX1, kX1, kX1}));
  return v;
}

}  // namespace dissection
