#pragma once

#include <map>
#include <string>
#include <vector>

#include "koszul/presentation.hpp"

namespace koszul {

// The weight-s arity-r component of the ideal generated by the relations:
// every way of replacing the two-vertex region around an internal edge of a
// weight-s monomial by a relation, expressed in the monomial column basis.
struct IdealComponent {
  std::vector<TreewiseTensor> monomials;  // column i = monomials[i]
  std::vector<SparseRow> rows;            // deduplicated spanning set
};

IdealComponent ideal_component_matrix(const QuadraticPresentation& p, const RewriteSystem& rs,
                                      int s, int r);

struct CellReport {
  int s = 0, r = 0;
  long monomials = 0;  // all weight-s monomials of arity r
  long candidates = 0; // those whose every edge restriction is a basis monomial
  long rank = 0;       // rank of the ideal component
  long dim = 0;        // monomials - rank
  bool ok = false;     // candidates == dim
};

struct PbwReport {
  std::string name;
  int max_weight = 0, max_arity = 0;
  bool split_ok = true;
  std::string split_error;
  std::vector<CellReport> cells;

  bool pbw() const {
    if (!split_ok) return false;
    for (auto& c : cells)
      if (!c.ok) return false;
    return true;
  }
};

// Certifies the candidate monomial basis cell by cell: the candidates span
// (normal forms exist), so they form a basis exactly when their count
// matches the quotient dimension computed from the ideal rank.
PbwReport check_pbw(const QuadraticPresentation& p, RewriteSystem& rs, int max_weight,
                    int max_arity);

// dim of the quotient per (weight, arity), weight 0..max_weight.  Weight 0 is
// the unit component, weight 1 the generators.
std::map<std::pair<int, int>, long> dimension_table(const QuadraticPresentation& p,
                                                    RewriteSystem& rs, int max_weight,
                                                    int max_arity);

// The symmetrization of a nonsymmetric presentation: generators (g, w) for w
// in the symmetric group, regular-representation action, relations embedded
// with identity permutations, and the class-wise partial order built over
// the base order.
QuadraticPresentation symmetrize(const QuadraticPresentation& p);

}  // namespace koszul
