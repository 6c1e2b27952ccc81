#include "koszul/order.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace koszul {

std::string MonomialOrder::name() const {
  std::string base = kind == Kind::lex ? "lex" : "revlenlex";
  return sym ? base + " (symmetrized)" : base;
}

PathWordSequence MonomialOrder::path_words(const TreewiseTensor& m) const {
  PathWordSequence words(m.arity());
  if (m.is_unit()) return words;
  PathWord path;
  std::function<void(int)> walk = [&](int v) {
    int a = m.node_arity(v);
    path.push_back({a, rank[a][m.label[v]]});
    for (int e : m.shape.kids[v]) {
      if (e >= 1) words[e - 1] = path;
      else walk(PlanarTree::kid_node(e));
    }
    path.pop_back();
  };
  walk(0);
  return words;
}

namespace {

Ordering word_compare(MonomialOrder::Kind kind, const PathWord& a, const PathWord& b) {
  if (a.size() != b.size()) {
    bool shorter = a.size() < b.size();
    if (kind == MonomialOrder::Kind::lex) return shorter ? Ordering::LT : Ordering::GT;
    return shorter ? Ordering::GT : Ordering::LT;
  }
  for (size_t i = 0; i < a.size(); i++) {
    if (a[i] < b[i]) return Ordering::LT;
    if (b[i] < a[i]) return Ordering::GT;
  }
  return Ordering::EQ;
}

Ordering words_compare(MonomialOrder::Kind kind, const PathWordSequence& wa,
                       const PathWordSequence& wb) {
  assert(wa.size() == wb.size());
  for (size_t i = 0; i < wa.size(); i++) {
    Ordering c = word_compare(kind, wa[i], wb[i]);
    if (c != Ordering::EQ) return c;
  }
  return Ordering::EQ;
}

}  // namespace

Ordering MonomialOrder::compare(const TreewiseTensor& a, const TreewiseTensor& b) const {
  assert(a.arity() == b.arity());
  if (a == b) return Ordering::EQ;
  if (sym) {
    auto [sa, na] = unwind(a);
    auto [sb, nb] = unwind(b);
    if (sa != sb) return Ordering::INCOMPARABLE;
    MonomialOrder base{sym->base_kind, sym->base_rank, std::nullopt};
    return base.compare(na, nb);
  }
  Ordering c = words_compare(kind, path_words(a), path_words(b));
  // identical word sequences on distinct monomials: the order does not decide
  return c == Ordering::EQ ? Ordering::INCOMPARABLE : c;
}

std::vector<int64_t> MonomialOrder::sort_key(const TreewiseTensor& m) const {
  std::vector<int64_t> key;
  if (sym) {
    auto [s, n] = unwind(m);
    for (int x : s) key.push_back(x);
    MonomialOrder base{sym->base_kind, sym->base_rank, std::nullopt};
    auto sub = base.sort_key(n);
    key.insert(key.end(), sub.begin(), sub.end());
    return key;
  }
  auto words = path_words(m);
  for (auto& w : words) {
    key.push_back(kind == Kind::lex ? (int64_t)w.size() : -(int64_t)w.size());
    for (auto& l : w) {
      key.push_back(l.arity);
      key.push_back(l.rank);
    }
  }
  for (int32_t x : m.encode()) key.push_back(x);
  return key;
}

std::vector<int> MonomialOrder::column_order(const std::vector<TreewiseTensor>& monos) const {
  std::vector<std::vector<int64_t>> keys;
  keys.reserve(monos.size());
  for (auto& m : monos) keys.push_back(sort_key(m));
  std::vector<int> idx(monos.size());
  for (size_t i = 0; i < idx.size(); i++) idx[i] = (int)i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  return idx;
}

std::pair<Perm, TreewiseTensor> MonomialOrder::unwind(const TreewiseTensor& m) const {
  assert(sym);
  if (m.is_unit()) return {perm_identity(1), m};
  // Recursively rebuild the underlying nonsymmetric tree: at a vertex
  // labeled (g, w), the j-th input of g is the entry at position w(j).
  // Collecting the original leaves in that traversal order yields the class
  // permutation.
  struct Piece {
    std::vector<std::vector<int>> kids;  // nonsymmetric subtree, local ids
    std::vector<int> label;
    std::vector<int> leaves;  // original leaf labels in planar order
  };
  std::function<Piece(int)> go = [&](int v) -> Piece {
    int a = m.node_arity(v);
    auto [bg, w] = sym->table[a][m.label[v]];
    std::vector<Piece> sub(a);
    std::vector<bool> is_leaf(a);
    std::vector<int> leaf_val(a);
    for (int j = 0; j < a; j++) {
      int e = m.shape.kids[v][j];
      if (e >= 1) {
        is_leaf[j] = true;
        leaf_val[j] = e;
      } else {
        sub[j] = go(PlanarTree::kid_node(e));
      }
    }
    Piece out;
    out.kids.emplace_back();
    out.label.push_back(bg);
    for (int j = 1; j <= a; j++) {
      int pos = w[j - 1] - 1;  // entry position feeding input j
      if (is_leaf[pos]) {
        out.kids[0].push_back(0);  // placeholder, filled once leaves are numbered
        out.leaves.push_back(leaf_val[pos]);
      } else {
        int off = (int)out.kids.size();
        out.kids[0].push_back(PlanarTree::node_kid(off));
        Piece& s = sub[pos];
        for (auto kv : s.kids) {
          for (auto& x : kv) {
            if (x <= -1) x = PlanarTree::node_kid(PlanarTree::kid_node(x) + off);
          }
          out.kids.push_back(kv);
        }
        for (size_t q = 0; q < s.kids.size(); q++) out.label.push_back(s.label[q]);
        out.leaves.insert(out.leaves.end(), s.leaves.begin(), s.leaves.end());
      }
    }
    return out;
  };
  Piece p = go(0);
  // number the nonsymmetric leaves 1..n in planar order
  int next = 1;
  std::function<void(std::vector<std::vector<int>>&, int)> fix = [&](auto& kids, int v) {
    for (auto& e : kids[v]) {
      if (e <= -1) fix(kids, PlanarTree::kid_node(e));
      else e = next++;
    }
  };
  fix(p.kids, 0);
  TreewiseTensor ns;
  ns.shape.arity = m.arity();
  ns.shape.kids = p.kids;
  ns.label = p.label;
  Perm sigma(m.arity());
  for (int pos = 0; pos < m.arity(); pos++) sigma[pos] = p.leaves[pos];
  return {sigma, ns};
}

std::vector<std::vector<int>> default_ranks(const GeneratorModule& mod) {
  std::vector<std::vector<int>> rank(mod.max_arity() + 1);
  for (int a = 1; a <= mod.max_arity(); a++) {
    rank[a].resize(mod.gen_count(a));
    for (int i = 0; i < mod.gen_count(a); i++) rank[a][i] = i;
  }
  return rank;
}

MonomialOrder opposite_order(const MonomialOrder& o) {
  MonomialOrder op = o;
  op.kind = o.kind == MonomialOrder::Kind::lex ? MonomialOrder::Kind::revlenlex
                                               : MonomialOrder::Kind::lex;
  for (auto& rs : op.rank) {
    int n = (int)rs.size();
    for (auto& r : rs) r = n - 1 - r;
  }
  if (op.sym) {
    op.sym->base_kind = o.sym->base_kind == MonomialOrder::Kind::lex
                            ? MonomialOrder::Kind::revlenlex
                            : MonomialOrder::Kind::lex;
    for (auto& rs : op.sym->base_rank) {
      int n = (int)rs.size();
      for (auto& r : rs) r = n - 1 - r;
    }
  }
  return op;
}

}  // namespace koszul
