#include "koszul/linalg.hpp"

#include <algorithm>

namespace koszul {

SparseRow row_axpy(const SparseRow& a, const Rat& c, const SparseRow& b, const Field& f) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rat v = f.reduce(c * b[j].second);
      if (sgn(v) != 0) out.push_back({b[j].first, v});
      j++;
    } else {
      Rat v = f.reduce(a[i].second + c * b[j].second);
      if (sgn(v) != 0) out.push_back({a[i].first, v});
      i++;
      j++;
    }
  }
  return out;
}

SparseRow Echelon::reduce(SparseRow r) const {
  size_t i = 0;
  while (i < r.size()) {
    auto it = row_of_pivot_.find(r[i].first);
    if (it == row_of_pivot_.end()) {
      i++;
      continue;
    }
    // rows_[it->second] starts at this pivot with coefficient 1, so the
    // subtraction only touches columns >= r[i].first
    r = row_axpy(r, -r[i].second, rows_[it->second], field_);
  }
  return r;
}

bool Echelon::add_row(SparseRow r) {
  for (auto& [c, v] : r) v = field_.reduce(v);
  r.erase(std::remove_if(r.begin(), r.end(),
                         [](const std::pair<int, Rat>& p) { return sgn(p.second) == 0; }),
          r.end());
  r = reduce(std::move(r));
  if (r.empty()) return false;
  Rat inv = field_.modular ? field_.inv(r[0].second) : Rat(Rat(1) / r[0].second);
  for (auto& [c, v] : r) v = field_.reduce(v * inv);
  int pivot = r[0].first;
  if (full_) {
    for (size_t k = 0; k < rows_.size(); k++) {
      auto& row = rows_[k];
      auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(pivot, Rat(0)),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
      if (it != row.end() && it->first == pivot)
        row = row_axpy(row, -it->second, r, field_);
    }
  }
  row_of_pivot_[pivot] = (int)rows_.size();
  rows_.push_back(std::move(r));
  pivot_of_row_.push_back(pivot);
  return true;
}

int rank_of(const std::vector<SparseRow>& rows, const Field& f) {
  Echelon e(f, false);
  for (auto& r : rows) e.add_row(r);
  return e.rank();
}

bool span_equal(const std::vector<SparseRow>& a, const std::vector<SparseRow>& b,
                const Field& f) {
  Echelon ea(f, false);
  for (auto& r : a) ea.add_row(r);
  Echelon eb(f, false);
  for (auto& r : b) eb.add_row(r);
  if (ea.rank() != eb.rank()) return false;
  for (auto& r : b)
    if (!ea.contains(r)) return false;
  return true;
}

}  // namespace koszul
