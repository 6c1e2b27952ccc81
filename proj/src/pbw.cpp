#include "koszul/pbw.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace koszul {

IdealComponent ideal_component_matrix(const QuadraticPresentation& p, const RewriteSystem& rs,
                                      int s, int r) {
  IdealComponent out;
  out.monomials = monomials_of_weight(p.module, s, r);
  std::map<std::vector<int32_t>, int> col;
  for (size_t i = 0; i < out.monomials.size(); i++)
    col[out.monomials[i].encode()] = (int)i;

  std::set<SparseRow> seen;
  for (auto& m : out.monomials) {
    auto par = m.shape.parents();
    for (int v = 1; v < m.weight(); v++) {
      TreewiseTensor two = restriction_at(m, v);
      const QuadraticSplit* sp = rs.at(two.arity());
      if (!sp) continue;
      for (auto& rel : sp->rel_basis) {
        OperadElement e = replace_region(p.module, m, {par[v], v}, rel);
        if (e.is_zero()) continue;
        SparseRow row;
        for (auto& t : e.terms) row.push_back({col.at(t.mono.encode()), t.c});
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (seen.insert(row).second) out.rows.push_back(std::move(row));
      }
    }
  }
  return out;
}

PbwReport check_pbw(const QuadraticPresentation& p, RewriteSystem& rs, int max_weight,
                    int max_arity) {
  PbwReport rep;
  rep.name = p.name;
  rep.max_weight = max_weight;
  rep.max_arity = max_arity;
  rep.split_ok = rs.ok;
  rep.split_error = rs.error;
  if (!rs.ok) return rep;
  for (int s = 2; s <= max_weight; s++) {
    for (int r = 1; r <= max_arity; r++) {
      IdealComponent ic = ideal_component_matrix(p, rs, s, r);
      if (ic.monomials.empty()) continue;
      CellReport cell;
      cell.s = s;
      cell.r = r;
      cell.monomials = (long)ic.monomials.size();
      for (auto& m : ic.monomials)
        if (is_basis_monomial(rs, m)) cell.candidates++;
      cell.rank = rank_of(ic.rows, p.module.field);
      cell.dim = cell.monomials - cell.rank;
      cell.ok = cell.candidates == cell.dim;
      rep.cells.push_back(cell);
    }
  }
  return rep;
}

std::map<std::pair<int, int>, long> dimension_table(const QuadraticPresentation& p,
                                                    RewriteSystem& rs, int max_weight,
                                                    int max_arity) {
  std::map<std::pair<int, int>, long> dims;
  dims[{0, 1}] = 1;
  for (int r = 1; r <= max_arity; r++) {
    long g = p.module.gen_count(r);
    if (g) dims[{1, r}] = g;
  }
  for (int s = 2; s <= max_weight; s++)
    for (int r = 1; r <= max_arity; r++) {
      IdealComponent ic = ideal_component_matrix(p, rs, s, r);
      if (ic.monomials.empty()) continue;
      dims[{s, r}] = (long)ic.monomials.size() - rank_of(ic.rows, p.module.field);
    }
  return dims;
}

QuadraticPresentation symmetrize(const QuadraticPresentation& p) {
  if (p.module.flavor != Flavor::nonsymmetric)
    throw std::invalid_argument("symmetrize expects a nonsymmetric presentation");
  QuadraticPresentation out;
  out.name = p.name + "_sym";
  out.module.flavor = Flavor::symmetric;
  out.module.field = p.module.field;

  MonomialOrder::Sym sym;
  sym.base_kind = p.order.kind;
  sym.base_rank = p.order.rank;
  sym.table.resize(p.module.max_arity() + 1);

  // generators (g, w), grouped by g in declaration order, w in lexicographic
  // order; the action permutes the w component
  std::map<std::pair<int, std::pair<int, Perm>>, int> index;  // (arity,(g,w)) -> index
  for (int a = 1; a <= p.module.max_arity(); a++) {
    for (int g = 0; g < p.module.gen_count(a); g++) {
      const Generator& gen = p.module.gen(a, g);
      for_each_perm(a, [&](const Perm& w) {
        int idx = out.module.add_generator(gen.name + "_" + perm_digits(w), a, gen.degree);
        index[{a, {g, w}}] = idx;
        sym.table[a].push_back({g, w});
      });
    }
  }
  for (int a = 2; a <= p.module.max_arity(); a++) {
    if (p.module.gen_count(a) == 0) continue;
    for (int k = 1; k < a; k++) {
      Perm sk = perm_identity(a);
      std::swap(sk[k - 1], sk[k]);
      for (int g = 0; g < p.module.gen_count(a); g++) {
        for_each_perm(a, [&](const Perm& w) {
          int from = index.at({a, {g, w}});
          int to = index.at({a, {g, perm_compose(sk, w)}});
          out.module.set_swap_image(a, k, from, {{to, Rat(1)}});
        });
      }
    }
  }

  out.order.kind = p.order.kind;
  out.order.rank = default_ranks(out.module);
  out.order.sym = sym;

  for (auto& rel : p.relations) {
    OperadElement e;
    for (auto& t : rel.terms) {
      TreewiseTensor m = t.mono;
      for (int v = 0; v < m.weight(); v++) {
        int a = m.node_arity(v);
        m.label[v] = index.at({a, {t.mono.label[v], perm_identity(a)}});
      }
      e.terms.push_back({m, t.c});
    }
    out.relations.push_back(make_element(e.terms, out.module.field));
  }
  return out;
}

}  // namespace koszul
