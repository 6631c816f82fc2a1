#ifndef DISSECTION_LINALG_HPP
#define DISSECTION_LINALG_HPP

#include <map>
#include <string>
#include <utility>

#include "dissection/rational.hpp"

namespace dissection {

// Sparse matrix over exact rationals; zero entries are never stored.
struct SparseMatrix {
  int nrows = 0;
  int ncols = 0;
  std::map<std::pair<int, int>, Rational> entries;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : nrows(r), ncols(c) {}

  void set(int r, int c, const Rational& v);
  void add(int r, int c, const Rational& v);
  Rational get(int r, int c) const;
  SparseMatrix transposed() const;

  // Debug dump, one "row col num/den" triplet per line.
  std::string dump_triplets() const;
};

// Exact rank by sparse elimination; the pivot at each step minimizes the
// Markowitz fill estimate (nnz_row-1)*(nnz_col-1).
int rank(const SparseMatrix& m);
int kernel_dimension(const SparseMatrix& m);

}  // namespace dissection

#endif
