#ifndef CONFHOM_SPARSE_MATRIX_HPP
#define CONFHOM_SPARSE_MATRIX_HPP

#include "confhom/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace confhom {

// Sparse matrix over Q. Invariant: no stored zero entries.
class SparseExactMatrix {
  public:
    SparseExactMatrix() = default;
    SparseExactMatrix(int n_rows, int n_cols) : n_rows_(n_rows), n_cols_(n_cols) {}

    int n_rows() const { return n_rows_; }
    int n_cols() const { return n_cols_; }
    std::size_t n_entries() const { return entries_.size(); }

    // Accumulates into (row, col); erases the entry if the sum vanishes.
    void add(int row, int col, const Rational& value);
    void set(int row, int col, const Rational& value);
    Rational at(int row, int col) const;

    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    friend bool operator==(const SparseExactMatrix&, const SparseExactMatrix&) = default;

  private:
    int n_rows_ = 0;
    int n_cols_ = 0;
    std::map<std::pair<int, int>, Rational> entries_;
};

SparseExactMatrix multiply(const SparseExactMatrix& a, const SparseExactMatrix& b);

// Rank over Q by fraction-free (Bareiss) elimination on the denominator-cleared
// integer matrix. Pivot column: fewest nonzeros among the remaining columns,
// ties to the lowest index; pivot row: fewest nonzeros, ties to the lowest
// index. Exact and deterministic.
int exact_rank(const SparseExactMatrix& m);

}  // namespace confhom

#endif
