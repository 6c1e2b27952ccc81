#pragma once

#include <unordered_map>
#include <vector>

#include "koszul/rational.hpp"

namespace koszul {

// A sparse matrix row: (column, coefficient), sorted by column, coefficients
// nonzero in the field.
using SparseRow = std::vector<std::pair<int, Rat>>;

SparseRow row_axpy(const SparseRow& a, const Rat& c, const SparseRow& b, const Field& f);

// Row space in (optionally fully reduced) echelon form.  Pivot coefficients
// are normalized to 1.  With full=true the matrix is kept in reduced row
// echelon form: every pivot column is cleared from all other rows, which is
// what the basis splitting needs.  full=false only tracks rank and supports
// membership tests.
class Echelon {
 public:
  explicit Echelon(const Field& f, bool full = true) : field_(f), full_(full) {}

  // Fully reduces r against the current rows.
  SparseRow reduce(SparseRow r) const;
  // reduce + insert; true when the rank grew.
  bool add_row(SparseRow r);

  int rank() const { return (int)rows_.size(); }
  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivot_of_row_; }
  bool contains(const SparseRow& r) const { return reduce(r).empty(); }

 private:
  Field field_;
  bool full_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_of_row_;
  std::unordered_map<int, int> row_of_pivot_;
};

int rank_of(const std::vector<SparseRow>& rows, const Field& f);
bool span_equal(const std::vector<SparseRow>& a, const std::vector<SparseRow>& b,
                const Field& f);

}  // namespace koszul
