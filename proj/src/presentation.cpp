#include "koszul/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace koszul {

std::string QuadraticPresentation::validate() const {
  std::string err = module.validate();
  if (!err.empty()) return err;
  for (auto& rel : relations) {
    if (rel.is_zero()) return "zero relation";
    int arity = rel.arity();
    int degree = -1;
    for (auto& t : rel.terms) {
      if (t.mono.weight() != 2) return "relation term of weight != 2: " + t.mono.str(module);
      if (t.mono.arity() != arity) return "relation mixes arities";
      if (!t.mono.shape.is_canonical()) return "relation monomial not canonical";
      int d = 0;
      for (int v = 0; v < t.mono.weight(); v++)
        d += module.gen(t.mono.node_arity(v), t.mono.label[v]).degree;
      if (degree == -1) degree = d;
      else if (d != degree) return "relation mixes degrees";
    }
  }
  if ((int)order.rank.size() <= module.max_arity()) return "order ranks missing arities";
  return "";
}

std::vector<int> QuadraticPresentation::relation_arities() const {
  std::set<int> s;
  for (auto& rel : relations) s.insert(rel.arity());
  return {s.begin(), s.end()};
}

std::vector<OperadElement> QuadraticPresentation::closed_relations(int n) const {
  std::vector<OperadElement> out;
  for (auto& rel : relations) {
    if (rel.arity() != n) continue;
    if (module.flavor == Flavor::nonsymmetric) {
      out.push_back(rel);
    } else {
      for_each_perm(n, [&](const Perm& w) {
        OperadElement e = apply_leaf_permutation(module, rel, w);
        if (!e.is_zero()) out.push_back(e);
      });
    }
  }
  return out;
}

RewriteSystem quadratic_split(const QuadraticPresentation& p) {
  RewriteSystem rs;
  // arities that carry weight-2 monomials at all
  std::set<int> arities;
  for (int a1 : p.module.arities())
    for (int a2 : p.module.arities()) arities.insert(a1 + a2 - 1);
  for (int n : arities) {
    auto monos = monomials_of_weight(p.module, 2, n);
    if (monos.empty()) continue;
    QuadraticSplit sp;
    auto ord = p.order.column_order(monos);
    for (int idx : ord) sp.monomials.push_back(monos[idx]);
    std::map<std::vector<int32_t>, int> col;
    for (size_t i = 0; i < sp.monomials.size(); i++)
      col[sp.monomials[i].encode()] = (int)i;

    Echelon ech(p.module.field, true);
    for (auto& rel : p.closed_relations(n)) {
      SparseRow row;
      for (auto& t : rel.terms) row.push_back({col.at(t.mono.encode()), t.c});
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      ech.add_row(std::move(row));
    }

    std::set<int> icols(ech.pivots().begin(), ech.pivots().end());
    for (size_t i = 0; i < sp.monomials.size(); i++) {
      if (icols.count((int)i)) sp.I.push_back((int)i);
      else sp.J.push_back((int)i);
    }
    for (auto& row : ech.rows()) {
      // pivot must be the strict minimum of the row's support
      const TreewiseTensor& lead = sp.monomials[row[0].first];
      for (size_t k = 1; k < row.size(); k++) {
        Ordering c = p.order.compare(lead, sp.monomials[row[k].first]);
        if (c != Ordering::LT) {
          rs.ok = false;
          rs.error = "arity " + std::to_string(n) + ": relation row has no strict minimum (" +
                     lead.str(p.module) + " vs " + sp.monomials[row[k].first].str(p.module) +
                     ")";
          return rs;
        }
      }
      OperadElement rel, rhs;
      for (auto& [c, v] : row) rel.terms.push_back({sp.monomials[c], v});
      sp.rel_basis.push_back(rel);
      for (size_t k = 1; k < row.size(); k++)
        rhs.terms.push_back({sp.monomials[row[k].first], -row[k].second});
      rhs = make_element(rhs.terms, p.module.field);
      sp.rewrite[lead.encode()] = rhs;
      sp.i_keys.insert(lead.encode());
    }
    for (int j : sp.J) sp.basis_keys.insert(sp.monomials[j].encode());
    rs.by_arity[n] = std::move(sp);
  }
  return rs;
}

bool is_basis_monomial(const RewriteSystem& rs, const TreewiseTensor& m) {
  for (int v = 1; v < m.weight(); v++) {
    TreewiseTensor two = restriction_at(m, v);
    const QuadraticSplit* sp = rs.at(two.arity());
    if (sp && sp->i_keys.count(two.encode())) return false;
  }
  return true;
}

namespace {

const OperadElement& nf_monomial(const QuadraticPresentation& p, RewriteSystem& rs,
                                 const TreewiseTensor& m, long* steps);

OperadElement nf_element(const QuadraticPresentation& p, RewriteSystem& rs,
                         const OperadElement& x, long* steps) {
  OperadElement out;
  for (auto& t : x.terms)
    out = elem_add(out, elem_scale(nf_monomial(p, rs, t.mono, steps), t.c, p.module.field),
                   p.module.field);
  return out;
}

const OperadElement& nf_monomial(const QuadraticPresentation& p, RewriteSystem& rs,
                                 const TreewiseTensor& m, long* steps) {
  auto key = m.encode();
  auto it = rs.nf_cache.find(key);
  if (it != rs.nf_cache.end()) return it->second;

  auto par = m.shape.parents();
  OperadElement result;
  bool rewritten = false;
  for (int v = 1; v < m.weight() && !rewritten; v++) {
    TreewiseTensor two = restriction_at(m, v);
    const QuadraticSplit* sp = rs.at(two.arity());
    if (!sp) continue;
    auto rw = sp->rewrite.find(two.encode());
    if (rw == sp->rewrite.end()) continue;
    std::vector<int> region = {par[v], v};
    OperadElement replaced = replace_region(p.module, m, region, rw->second);
    if (steps) (*steps)++;
    for (auto& t : replaced.terms) {
      // each rewriting step must strictly increase the monomial
      if (p.order.compare(m, t.mono) != Ordering::LT)
        throw std::logic_error("rewriting step did not increase: " + m.str(p.module) +
                               " -> " + t.mono.str(p.module));
    }
    result = nf_element(p, rs, replaced, steps);
    rewritten = true;
  }
  if (!rewritten) result = make_element({{m, Rat(1)}}, p.module.field);
  return rs.nf_cache[key] = result;
}

}  // namespace

OperadElement normal_form(const QuadraticPresentation& p, RewriteSystem& rs,
                          const OperadElement& x, long* steps) {
  if (!rs.ok) throw std::logic_error("normal form over a failed split: " + rs.error);
  return nf_element(p, rs, x, steps);
}

}  // namespace koszul
