#include "koszul/bar.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace koszul {

std::vector<int32_t> BarChainBasisElement::key() const {
  std::vector<int32_t> k = beta.encode();
  k.push_back(-1000000);
  for (int e : marked) k.push_back(e);
  return k;
}

std::vector<int> admissible_edges(const RewriteSystem& rs, const TreewiseTensor& beta) {
  std::vector<int> out;
  for (int v = 1; v < beta.weight(); v++) {
    TreewiseTensor two = restriction_at(beta, v);
    const QuadraticSplit* sp = rs.at(two.arity());
    if (!sp || !sp->i_keys.count(two.encode())) out.push_back(v);
  }
  return out;
}

std::vector<BarChainBasisElement> bar_basis(const QuadraticPresentation& p,
                                            const RewriteSystem& rs, int s, int r, int d) {
  std::vector<BarChainBasisElement> out;
  if (d < 1 || d > s) return out;
  int need = s - d;
  for (auto& m : monomials_of_weight(p.module, s, r)) {
    auto adm = admissible_edges(rs, m);
    if ((int)adm.size() < need) continue;
    std::vector<int> pick(need);
    std::function<void(int, int)> choose = [&](int from, int got) {
      if (got == need) {
        BarChainBasisElement el{m, std::vector<int>(pick.begin(), pick.end())};
        out.push_back(std::move(el));
        return;
      }
      for (int i = from; i < (int)adm.size(); i++) {
        pick[got] = adm[i];
        choose(i + 1, got + 1);
      }
    };
    choose(0, 0);
  }
  return out;
}

std::vector<std::pair<BarChainBasisElement, Rat>> bar_differential(
    const QuadraticPresentation& p, RewriteSystem& rs, const BarChainBasisElement& el) {
  const TreewiseTensor& beta = el.beta;
  int V = beta.weight();
  auto par = beta.shape.parents();

  // components via union-find over the marked edges
  std::vector<int> comp(V);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (int e : el.marked) comp[find(e)] = find(par[e]);

  std::map<std::vector<int32_t>, std::pair<BarChainBasisElement, Rat>> acc;
  std::vector<char> is_marked(V, 0);
  for (int e : el.marked) is_marked[e] = 1;

  // Orientation of the set of cut (unmarked) edges.  Vertex indices are not
  // usable for signs: rewriting a component renumbers them.  Key each cut
  // edge by the smallest leaf below it plus how many cut edges with the same
  // smallest leaf sit between it and the root.  Rewriting a component keeps
  // every component's leaf set, and contracting a cut edge keeps the relative
  // key order of the others, so these signs square to zero.
  std::vector<std::pair<int, int>> cutkey(V, {0, 0});
  std::vector<int> cuts;
  for (int e = 1; e < V; e++) {
    if (is_marked[e]) continue;
    int ml = beta.shape.min_leaf(e);
    int n = 0;
    for (int u = par[e]; u != -1; u = par[u])
      if ((u == 0 || !is_marked[u]) && beta.shape.min_leaf(u) == ml) n++;
    cutkey[e] = {ml, n};
    cuts.push_back(e);
  }

  for (int e : cuts) {
    long before = 0;
    for (int f : cuts)
      if (cutkey[f] < cutkey[e]) before++;
    Rat sign = before % 2 ? Rat(-1) : Rat(1);

    int ca = find(par[e]), cb = find(e);
    std::vector<int> region;
    for (int v = 0; v < V; v++)
      if (find(v) == ca || find(v) == cb) region.push_back(v);

    TreewiseTensor gamma = extract_region(beta, region);
    OperadElement nf = normal_form(p, rs, make_element({{gamma, Rat(1)}}, p.module.field));
    for (auto& t : nf.terms) {
      TrackedReplacement tr = replace_region_tracked(p.module, beta, region, t.mono);
      BarChainBasisElement ne;
      ne.beta = tr.result;
      for (int x : el.marked)
        if (tr.old_to_new[x] != -1) ne.marked.push_back(tr.old_to_new[x]);
      for (int v = 1; v < t.mono.weight(); v++) ne.marked.push_back(tr.x_to_new[v]);
      std::sort(ne.marked.begin(), ne.marked.end());
      assert((int)ne.marked.size() == (int)el.marked.size() + 1);
      Rat c = sign * t.c * tr.coeff;
      auto key = ne.key();
      auto it = acc.find(key);
      if (it == acc.end()) acc.emplace(key, std::make_pair(std::move(ne), c));
      else it->second.second += c;
    }
  }

  std::vector<std::pair<BarChainBasisElement, Rat>> out;
  for (auto& [k, v] : acc) {
    Rat c = p.module.field.reduce(v.second);
    if (sgn(c) != 0) out.push_back({v.first, c});
  }
  return out;
}

HomologyReport homology(const QuadraticPresentation& p, RewriteSystem& rs, int max_weight,
                        int max_arity, long max_cell_dim) {
  if (!rs.ok) throw std::logic_error("bar homology over a failed split: " + rs.error);
  HomologyReport rep;
  rep.max_weight = max_weight;
  rep.max_arity = max_arity;
  for (int s = 1; s <= max_weight; s++) {
    for (int r = 1; r <= max_arity; r++) {
      std::vector<std::vector<BarChainBasisElement>> basis(s + 1);
      long total = 0;
      for (int d = 1; d <= s; d++) {
        basis[d] = bar_basis(p, rs, s, r, d);
        total += (long)basis[d].size();
      }
      if (total == 0) continue;
      HomologyCell cell;
      cell.s = s;
      cell.r = r;
      cell.total_dim = total;
      cell.chain_dim.assign(s + 1, 0);
      for (int d = 1; d <= s; d++) cell.chain_dim[d] = (long)basis[d].size();
      if (total > max_cell_dim) {
        cell.aborted = true;
        rep.aborted_cells++;
        rep.cells.push_back(std::move(cell));
        continue;
      }

      // index maps and differential matrices delta_d : B_d -> B_{d-1}
      std::vector<std::map<std::vector<int32_t>, int>> index(s + 1);
      for (int d = 1; d <= s; d++)
        for (size_t i = 0; i < basis[d].size(); i++) index[d][basis[d][i].key()] = (int)i;
      std::vector<std::vector<SparseRow>> delta(s + 1);
      for (int d = 2; d <= s; d++) {
        delta[d].resize(basis[d].size());
        for (size_t i = 0; i < basis[d].size(); i++) {
          SparseRow row;
          for (auto& [ne, c] : bar_differential(p, rs, basis[d][i]))
            row.push_back({index[d - 1].at(ne.key()), c});
          std::sort(row.begin(), row.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          delta[d][i] = std::move(row);
        }
      }
      // delta o delta = 0, exact matrix product
      for (int d = 3; d <= s; d++) {
        for (size_t i = 0; i < basis[d].size(); i++) {
          std::map<int, Rat> acc;
          for (auto& [j, c] : delta[d][i])
            for (auto& [k, c2] : delta[d - 1][j]) acc[k] += c * c2;
          for (auto& [k, v] : acc)
            if (!p.module.field.is_zero(v))
              throw std::logic_error("bar differential does not square to zero");
        }
      }

      std::vector<long> rank(s + 2, 0);
      for (int d = 2; d <= s; d++) rank[d] = rank_of(delta[d], p.module.field);
      cell.h_rank.assign(s + 1, 0);
      for (int d = 1; d <= s; d++)
        cell.h_rank[d] = cell.chain_dim[d] - rank[d] - rank[d + 1];
      cell.kdim = s >= 2 ? cell.chain_dim[s] - rank[s] : cell.chain_dim[s];
      for (int d = 1; d <= s; d++)
        if (d != s && cell.h_rank[d] != 0) cell.diagonal = false;
      if (!cell.diagonal) rep.all_diagonal = false;
      rep.cells.push_back(std::move(cell));
    }
  }
  return rep;
}

}  // namespace koszul
