#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "koszul/module.hpp"
#include "koszul/tree.hpp"

namespace koszul {

// A treewise tensor in canonical form: a canonical planar tree whose vertex v
// carries generator label[v] (an index into the module's basis of the arity
// matching v's entry count).  The reference order of the tensor factors is
// the preorder of the canonical planar tree.  The empty tree (weight 0,
// arity 1) is the unit.
struct TreewiseTensor {
  PlanarTree shape;
  std::vector<int> label;

  int weight() const { return shape.weight(); }
  int arity() const { return shape.arity; }
  bool is_unit() const { return shape.weight() == 0; }
  int node_arity(int v) const { return (int)shape.kids[v].size(); }

  std::vector<int32_t> encode() const;
  bool operator==(const TreewiseTensor& o) const {
    return shape == o.shape && label == o.label;
  }
  bool operator<(const TreewiseTensor& o) const { return encode() < o.encode(); }

  std::string str(const GeneratorModule& m) const;
};

struct Term {
  TreewiseTensor mono;
  Rat c;
};

// Sorted by monomial encoding, zero coefficients dropped.
struct OperadElement {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  int arity() const { return terms.empty() ? -1 : terms[0].mono.arity(); }
  bool operator==(const OperadElement& o) const;
  std::string str(const GeneratorModule& m) const;
};

OperadElement make_element(std::vector<Term> terms, const Field& field);
OperadElement elem_add(const OperadElement& a, const OperadElement& b, const Field& field);
OperadElement elem_scale(const OperadElement& a, const Rat& c, const Field& field);

// A treewise tensor before canonicalization: vertices in arbitrary order with
// arbitrarily ordered entries, plus the order in which the tensor factors are
// currently written.  canonicalize() sorts every vertex's entries by minimal
// linked leaf, converting entry swaps through the module action, reindexes
// vertices in preorder, and picks up the Koszul sign of reordering the
// factors (odd-degree labels anticommute).
struct RawTensor {
  int arity = 1;
  struct Node {
    std::vector<int> kids;  // >=1 leaf label, <=-1 node -1-kid
    int gen = -1;
  };
  std::vector<Node> nodes;
  int root = 0;
  std::vector<int> factors;  // node ids in current tensor-factor order
};

// pos_out, when given, receives the canonical preorder position of every raw
// node (shared by all resulting terms).
OperadElement canonicalize(const GeneratorModule& mod, const RawTensor& raw,
                           const Rat& coeff = Rat(1), std::vector<int>* pos_out = nullptr);

RawTensor raw_from_tensor(const TreewiseTensor& t);

// Partial composition a o_i b, extended bilinearly.
OperadElement compose(const GeneratorModule& mod, const OperadElement& a, int i,
                      const OperadElement& b);
OperadElement compose(const GeneratorModule& mod, const TreewiseTensor& a, int i,
                      const TreewiseTensor& b);

// Leaf l is relabeled w(l); for weight-1 tensors this realizes the module
// action of w.
OperadElement apply_leaf_permutation(const GeneratorModule& mod, const OperadElement& x,
                                     const Perm& w);

// Permutations of m+n-1 fixing 1..i pointwise and increasing both on the
// block i..i+n-1 and on the remaining later inputs.  These index the orbit
// representatives w.(alpha o_i beta) spanning the weight-2 component.
std::vector<Perm> pointed_shuffles(int m, int n, int i);

// All canonical monomials of the given weight and arity, in encoding order.
std::vector<TreewiseTensor> monomials_of_weight(const GeneratorModule& mod, int weight,
                                                int arity);

// The two-vertex monomial spanned by an internal edge: the edge's endpoints
// with their entries, entries relabeled by minimal linked leaf and renumbered
// 1..k order-preserving.  child is the preorder index of the lower vertex.
TreewiseTensor restriction_at(const TreewiseTensor& m, int child);

// The connected region (preorder-sorted vertex list, first element the
// region's root) extracted as a standalone canonical monomial, boundary
// entries becoming leaves numbered by minimal linked leaf.
TreewiseTensor extract_region(const TreewiseTensor& m, const std::vector<int>& region);

// Replaces the region by x (same arity as the extracted region).  Each term
// of x is grafted into the hole, with the Koszul sign of first gathering the
// region's factors into a contiguous block.  Weight-homogeneous replacements
// keep the result's weight equal to m's.
OperadElement replace_region(const GeneratorModule& mod, const TreewiseTensor& m,
                             const std::vector<int>& region, const OperadElement& x);

// Single-monomial replacement that additionally reports where every kept
// vertex of m and every vertex of x landed in the canonical result.  Only
// valid when the substitution needs no entry resorting across the module
// action, which holds whenever x is canonical and slot minima are respected;
// the result is then a single signed monomial.
struct TrackedReplacement {
  TreewiseTensor result;
  Rat coeff;
  std::vector<int> old_to_new;  // -1 for replaced vertices
  std::vector<int> x_to_new;
};
TrackedReplacement replace_region_tracked(const GeneratorModule& mod, const TreewiseTensor& m,
                                          const std::vector<int>& region,
                                          const TreewiseTensor& x);

}  // namespace koszul
