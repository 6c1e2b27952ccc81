#pragma once

#include <vector>

#include "koszul/presentation.hpp"

namespace koszul {

// A basis element of the reduced bar complex: a weight-s monomial together
// with a set of marked internal edges, every marked edge admissible (its
// two-vertex restriction a basis monomial).  The components (maximal
// subtrees whose internal edges are all marked) are then automatically basis
// monomials.  Homological degree = number of components = s - |marked|.
struct BarChainBasisElement {
  TreewiseTensor beta;
  std::vector<int> marked;  // sorted edge ids; edge = preorder index of its lower vertex

  int degree() const { return beta.weight() - (int)marked.size(); }
  std::vector<int32_t> key() const;
};

// Internal edges whose restriction lies in the quadratic basis part.
std::vector<int> admissible_edges(const RewriteSystem& rs, const TreewiseTensor& beta);

std::vector<BarChainBasisElement> bar_basis(const QuadraticPresentation& p,
                                            const RewriteSystem& rs, int s, int r, int d);

// The bar differential: for every unmarked edge, merge the two components it
// connects by composing in the operad (normal form), substitute the result
// back and mark the merged region's edges.  Signs come from an orientation
// of the unmarked edges keyed by (smallest leaf below the edge, nesting depth
// among same-keyed edges), which is stable under component rewriting.
std::vector<std::pair<BarChainBasisElement, Rat>> bar_differential(
    const QuadraticPresentation& p, RewriteSystem& rs, const BarChainBasisElement& el);

struct HomologyCell {
  int s = 0, r = 0;
  bool aborted = false;  // skipped because the cell exceeded the dimension cap
  long total_dim = 0;
  std::vector<long> chain_dim;  // indexed by degree 0..s
  std::vector<long> h_rank;     // homology ranks, same indexing
  long kdim = 0;                // dim ker(delta) in top degree s
  bool diagonal = true;         // h_rank[d] == 0 for all d != s
};

struct HomologyReport {
  int max_weight = 0, max_arity = 0;
  std::vector<HomologyCell> cells;
  bool all_diagonal = true;  // over the computed (non-aborted) cells
  int aborted_cells = 0;
};

// Exact homology of the reduced bar complex per (weight, arity) cell, with a
// hard check that the differential squares to zero on every cell.
HomologyReport homology(const QuadraticPresentation& p, RewriteSystem& rs, int max_weight,
                        int max_arity, long max_cell_dim = 200000);

}  // namespace koszul
