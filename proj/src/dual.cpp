#include "koszul/dual.hpp"

#include <cassert>
#include <stdexcept>

namespace koszul {

GeneratorModule dual_module(const GeneratorModule& m, DualMode mode) {
  if (mode == DualMode::shriek)
    for (int a : m.arities())
      if (a != 2)
        throw std::invalid_argument(
            "shriek dual is only defined for operads generated by binary operations");
  GeneratorModule out;
  out.flavor = m.flavor;
  out.field = m.field;
  for (int a = 1; a <= m.max_arity(); a++)
    for (int g = 0; g < m.gen_count(a); g++) {
      const Generator& gen = m.gen(a, g);
      out.add_generator(gen.name + "_d", a,
                        mode == DualMode::kdual ? gen.degree + 1 : gen.degree);
    }
  if (m.flavor == Flavor::symmetric) {
    for (int a = 2; a <= m.max_arity(); a++) {
      if (m.gen_count(a) == 0) continue;
      for (int k = 1; k < a; k++) {
        // contragredient action: the matrix transpose, an extra -1 per swap
        // in shriek mode (the sign of the transposition)
        for (int j = 0; j < m.gen_count(a); j++) {
          GenCombo img;
          for (int i = 0; i < m.gen_count(a); i++)
            for (auto& t : m.swap_matrix(a, k)[i])
              if (t.gen == j)
                img.push_back({i, mode == DualMode::shriek ? Rat(-t.c) : t.c});
          out.set_swap_image(a, k, j, std::move(img));
        }
      }
    }
  }
  std::string err = out.validate();
  if (!err.empty()) throw std::logic_error("dual module invalid: " + err);
  return out;
}

namespace {

TreewiseTensor to_dual_coords(const TreewiseTensor& m) {
  return m;  // the dual module mirrors the original layout index for index
}

}  // namespace

std::vector<OperadElement> orthogonal_complement(const RewriteSystem& rs,
                                                 const GeneratorModule& dmod, int arity) {
  std::vector<OperadElement> out;
  const QuadraticSplit* sp = rs.at(arity);
  if (!sp) return out;
  for (int j : sp->J) {
    const TreewiseTensor& mj = sp->monomials[j];
    std::vector<Term> terms{{to_dual_coords(mj), Rat(1)}};
    auto key = mj.encode();
    for (int i : sp->I) {
      const TreewiseTensor& mi = sp->monomials[i];
      auto rw = sp->rewrite.find(mi.encode());
      assert(rw != sp->rewrite.end());
      for (auto& t : rw->second.terms)
        if (t.mono.encode() == key) terms.push_back({to_dual_coords(mi), t.c});
    }
    out.push_back(make_element(std::move(terms), dmod.field));
  }
  return out;
}

OperadElement apply_suspension_signs(const QuadraticPresentation& p,
                                     const GeneratorModule& dmod, DualMode mode,
                                     const OperadElement& x) {
  std::vector<Term> terms;
  for (auto& t : x.terms) {
    const TreewiseTensor& m = t.mono;
    assert(m.weight() == 2);
    int n1 = m.node_arity(0);
    int n2 = m.node_arity(1);
    int d1 = p.module.gen(n1, m.label[0]).degree;
    // position of the inner vertex among the root's entries, 1-based
    int i = 0;
    for (size_t j = 0; j < m.shape.kids[0].size(); j++)
      if (m.shape.kids[0][j] <= -1) i = (int)j + 1;
    assert(i > 0);
    Perm w = m.shape.leaf_seq();
    int sign = perm_sign(w);
    if (mode == DualMode::kdual) {
      if (d1 & 1) sign = -sign;
    } else {
      if ((d1 * (n2 - 1)) & 1) sign = -sign;
      if (((i - 1) * (n2 - 1)) & 1) sign = -sign;
    }
    terms.push_back({m, t.c * sign});
  }
  return make_element(std::move(terms), dmod.field);
}

DualPresentation dual_presentation(const QuadraticPresentation& p, const RewriteSystem& rs,
                                   DualMode mode) {
  if (!rs.ok) throw std::logic_error("dual of an uncertified presentation: " + rs.error);
  DualPresentation d;
  d.mode = mode;
  d.pres.name = p.name + "_dual";
  d.pres.module = dual_module(p.module, mode);
  d.pres.order = opposite_order(p.order);
  for (auto& [arity, sp] : rs.by_arity) {
    for (auto& rel : orthogonal_complement(rs, d.pres.module, arity)) {
      OperadElement signed_rel = apply_suspension_signs(p, d.pres.module, mode, rel);
      if (!signed_rel.is_zero()) d.pres.relations.push_back(signed_rel);
    }
    for (int i : sp.I) d.original_I.push_back(sp.monomials[i]);
  }
  std::string err = d.pres.validate();
  if (!err.empty()) throw std::logic_error("dual presentation invalid: " + err);
  return d;
}

std::vector<TreewiseTensor> dual_basis_monomials(const RewriteSystem& rs,
                                                 const GeneratorModule& dmod, int s, int r) {
  std::vector<TreewiseTensor> out;
  for (auto& m : monomials_of_weight(dmod, s, r)) {
    bool ok = true;
    for (int v = 1; v < m.weight() && ok; v++) {
      TreewiseTensor two = restriction_at(m, v);
      const QuadraticSplit* sp = rs.at(two.arity());
      ok = sp && sp->i_keys.count(two.encode()) > 0;
    }
    if (ok) out.push_back(m);
  }
  return out;
}

}  // namespace koszul
