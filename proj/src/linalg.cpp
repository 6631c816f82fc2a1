#include "dissection/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace dissection {

void SparseMatrix::set(int r, int c, const Rational& v) {
  if (r < 0 || r >= nrows || c < 0 || c >= ncols)
    throw std::out_of_range("matrix index out of range");
  if (v == 0)
    entries.erase({r, c});
  else
    entries[{r, c}] = v;
}

void SparseMatrix::add(int r, int c, const Rational& v) {
  set(r, c, get(r, c) + v);
}

Rational SparseMatrix::get(int r, int c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Rational(0) : it->second;
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t(ncols, nrows);
  for (const auto& [rc, v] : entries) t.entries[{rc.second, rc.first}] = v;
  return t;
}

std::string SparseMatrix::dump_triplets() const {
  std::string out;
  for (const auto& [rc, v] : entries)
    out += std::to_string(rc.first) + " " + std::to_string(rc.second) + " " +
           v.get_str() + "\n";
  return out;
}

int rank(const SparseMatrix& m) {
  // Row-major working copy.
  std::vector<std::unordered_map<int, Rational>> rows(m.nrows);
  std::vector<int> col_count(m.ncols, 0);
  for (const auto& [rc, v] : m.entries) {
    rows[rc.first][rc.second] = v;
    ++col_count[rc.second];
  }
  std::vector<char> row_done(m.nrows, 0);
  int r = 0;
  while (true) {
    // Markowitz pivot: cheapest fill among the remaining nonzeros.
    int best_row = -1, best_col = -1;
    long long best_score = -1;
    for (int i = 0; i < m.nrows; ++i) {
      if (row_done[i] || rows[i].empty()) continue;
      const long long rcost = static_cast<long long>(rows[i].size()) - 1;
      for (const auto& [j, v] : rows[i]) {
        const long long score = rcost * (col_count[j] - 1);
        if (best_score < 0 || score < best_score) {
          best_score = score;
          best_row = i;
          best_col = j;
        }
      }
    }
    if (best_row < 0) break;
    ++r;
    row_done[best_row] = 1;
    auto pivot_row = std::move(rows[best_row]);
    rows[best_row].clear();
    for (const auto& [j, v] : pivot_row) --col_count[j];
    const Rational pivot = pivot_row.at(best_col);
    for (int i = 0; i < m.nrows; ++i) {
      if (row_done[i]) continue;
      auto it = rows[i].find(best_col);
      if (it == rows[i].end()) continue;
      const Rational factor = it->second / pivot;
      for (const auto& [j, v] : pivot_row) {
        auto jt = rows[i].find(j);
        if (jt == rows[i].end()) {
          Rational nv = -factor * v;
          if (nv != 0) {
            rows[i][j] = nv;
            ++col_count[j];
          }
        } else {
          jt->second -= factor * v;
          if (jt->second == 0) {
            rows[i].erase(jt);
            --col_count[j];
          }
        }
      }
    }
  }
  return r;
}

int kernel_dimension(const SparseMatrix& m) { return m.ncols - rank(m); }

}  // namespace dissection
