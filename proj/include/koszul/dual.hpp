#pragma once

#include <string>
#include <vector>

#include "koszul/presentation.hpp"

namespace koszul {

// Two dual conventions.  kdual produces the presentation of the dual of the
// Koszul construction, defined for any generator arities, with generator
// degrees raised by the desuspension; shriek is the classical dual of an
// operad generated by binary operations, keeping degrees.
enum class DualMode { kdual, shriek };

struct DualPresentation {
  QuadraticPresentation pres;
  DualMode mode = DualMode::kdual;
  // The I-split of the original presentation the dual was computed from:
  // dual basis monomials restrict into this set.
  std::vector<TreewiseTensor> original_I;
};

// The dual module: same generator layout with names suffixed "_d", degrees
// per mode, action transposed (and sign-twisted for shriek).
GeneratorModule dual_module(const GeneratorModule& m, DualMode mode);

// Orthogonal complement of the closed relation space in the dual
// coordinates, one element per J-monomial, no suspension signs yet.
std::vector<OperadElement> orthogonal_complement(const RewriteSystem& rs,
                                                 const GeneratorModule& dmod, int arity);

// Multiplies every two-vertex monomial w.(x1 o_i x2) by the sign of the
// desuspension: kdual eps(w)(-1)^{|x1|}; shriek
// eps(w)(-1)^{|x1|(n2-1)}(-1)^{(i-1)(n2-1)}.  Degrees are the original ones.
OperadElement apply_suspension_signs(const QuadraticPresentation& p,
                                     const GeneratorModule& dmod, DualMode mode,
                                     const OperadElement& x);

DualPresentation dual_presentation(const QuadraticPresentation& p, const RewriteSystem& rs,
                                   DualMode mode);

// Monomials over the dual module all of whose edge restrictions correspond
// to I-monomials of the original split.
std::vector<TreewiseTensor> dual_basis_monomials(const RewriteSystem& rs,
                                                 const GeneratorModule& dmod, int s, int r);

}  // namespace koszul
