#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "koszul/linalg.hpp"
#include "koszul/order.hpp"
#include "koszul/tensor.hpp"

namespace koszul {

// An operad presented by generators and weight-2 relations, with a monomial
// order used to split the quadratic component.
struct QuadraticPresentation {
  std::string name;
  GeneratorModule module;
  MonomialOrder order;
  std::vector<OperadElement> relations;

  // Empty when consistent: module valid, relations canonical weight-2
  // monomial combinations, homogeneous in arity and degree.
  std::string validate() const;
  std::vector<int> relation_arities() const;
  // Closure of the relations of arity n under the symmetric group action
  // (the relations themselves in the nonsymmetric case).
  std::vector<OperadElement> closed_relations(int n) const;
};

// The splitting of the weight-2 component of one arity: monomials listed
// ascending in the order, the relation space in reduced echelon form with
// pivots I, basis part J, and the rewrite map sending each I-monomial to its
// J-expansion.
struct QuadraticSplit {
  std::vector<TreewiseTensor> monomials;  // ascending
  std::vector<int> I, J;                  // positions into monomials
  std::vector<OperadElement> rel_basis;   // echelon rows of the relation space
  std::map<std::vector<int32_t>, OperadElement> rewrite;
  std::set<std::vector<int32_t>> basis_keys;  // J monomials
  std::set<std::vector<int32_t>> i_keys;      // I monomials
};

struct RewriteSystem {
  bool ok = true;
  std::string error;
  std::map<int, QuadraticSplit> by_arity;
  // memo for monomial normal forms
  std::map<std::vector<int32_t>, OperadElement> nf_cache;

  const QuadraticSplit* at(int arity) const {
    auto it = by_arity.find(arity);
    return it == by_arity.end() ? nullptr : &it->second;
  }
};

// Splits every weight-2 component.  Fails (ok=false, diagnostics in error)
// when some relation row has no strict minimal monomial under the order.
RewriteSystem quadratic_split(const QuadraticPresentation& p);

// True when every internal edge's two-vertex restriction is a J-monomial.
bool is_basis_monomial(const RewriteSystem& rs, const TreewiseTensor& m);

// Rewrites every I-restriction until all terms are basis monomials.  Each
// step replaces a monomial by strictly larger ones, so this terminates; the
// strict increase is asserted.  steps, when given, accumulates the number of
// rewrites performed.
OperadElement normal_form(const QuadraticPresentation& p, RewriteSystem& rs,
                          const OperadElement& x, long* steps = nullptr);

}  // namespace koszul
