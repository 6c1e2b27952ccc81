#include "koszul/tensor.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <functional>
#include <map>
#include <stdexcept>

namespace koszul {

std::vector<int32_t> TreewiseTensor::encode() const {
  auto out = shape.encode();
  out.insert(out.end(), label.begin(), label.end());
  return out;
}

std::string TreewiseTensor::str(const GeneratorModule& mod) const {
  if (is_unit()) return "1";
  std::function<std::string(int)> walk = [&](int v) {
    std::string s = mod.gen(node_arity(v), label[v]).name + "(";
    for (size_t j = 0; j < shape.kids[v].size(); j++) {
      if (j) s += ",";
      int e = shape.kids[v][j];
      s += e >= 1 ? std::to_string(e) : walk(PlanarTree::kid_node(e));
    }
    return s + ")";
  };
  return walk(0);
}

bool OperadElement::operator==(const OperadElement& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (size_t i = 0; i < terms.size(); i++)
    if (!(terms[i].mono == o.terms[i].mono) || terms[i].c != o.terms[i].c) return false;
  return true;
}

std::string OperadElement::str(const GeneratorModule& mod) const {
  if (terms.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms.size(); i++) {
    Rat c = terms[i].c;
    bool neg = sgn(c) < 0;
    if (i == 0) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    Rat a = abs(c);
    if (a != 1) s += rat_str(a) + "*";
    s += terms[i].mono.str(mod);
  }
  return s;
}

OperadElement make_element(std::vector<Term> terms, const Field& field) {
  std::map<std::vector<int32_t>, Term> acc;
  for (auto& t : terms) {
    auto key = t.mono.encode();
    auto it = acc.find(key);
    if (it == acc.end()) acc.emplace(key, t);
    else it->second.c += t.c;
  }
  OperadElement out;
  for (auto& [k, t] : acc) {
    Rat r = field.reduce(t.c);
    if (sgn(r) != 0) out.terms.push_back({t.mono, r});
  }
  return out;
}

OperadElement elem_add(const OperadElement& a, const OperadElement& b, const Field& field) {
  std::vector<Term> ts = a.terms;
  ts.insert(ts.end(), b.terms.begin(), b.terms.end());
  return make_element(std::move(ts), field);
}

OperadElement elem_scale(const OperadElement& a, const Rat& c, const Field& field) {
  std::vector<Term> ts;
  for (auto& t : a.terms) ts.push_back({t.mono, t.c * c});
  return make_element(std::move(ts), field);
}

OperadElement canonicalize(const GeneratorModule& mod, const RawTensor& raw,
                           const Rat& coeff, std::vector<int>* pos_out) {
  if (raw.nodes.empty()) {
    assert(raw.arity == 1);
    if (pos_out) pos_out->clear();
    return make_element({{TreewiseTensor{PlanarTree{1, {}}, {}}, coeff}}, mod.field);
  }
  int V = (int)raw.nodes.size();
  assert((int)raw.factors.size() == V);

  std::vector<int> vmin(V, 0);
  std::function<int(int)> cmin = [&](int v) -> int {
    if (vmin[v]) return vmin[v];
    int m = INT_MAX;
    for (int e : raw.nodes[v].kids)
      m = std::min(m, e >= 1 ? e : cmin(PlanarTree::kid_node(e)));
    return vmin[v] = m;
  };
  for (int v = 0; v < V; v++) cmin(v);

  // sort each vertex's entries by min, recording the adjacent swaps used
  std::vector<std::vector<int>> kids(V);
  for (int v = 0; v < V; v++) kids[v] = raw.nodes[v].kids;
  auto key = [&](int e) { return e >= 1 ? e : vmin[PlanarTree::kid_node(e)]; };
  std::vector<std::pair<int, int>> swaps;  // (vertex, 1-based position)
  for (int v = 0; v < V; v++) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (size_t j = 0; j + 1 < kids[v].size(); j++)
        if (key(kids[v][j]) > key(kids[v][j + 1])) {
          std::swap(kids[v][j], kids[v][j + 1]);
          swaps.push_back({v, (int)j + 1});
          moved = true;
        }
    }
  }

  // propagate the entry swaps through the module action
  struct State {
    std::vector<int> label;
    Rat c;
  };
  std::vector<State> states;
  {
    std::vector<int> lab(V);
    for (int v = 0; v < V; v++) lab[v] = raw.nodes[v].gen;
    states.push_back({lab, coeff});
  }
  for (auto [v, k] : swaps) {
    int a = (int)kids[v].size();
    std::vector<State> next;
    for (auto& st : states) {
      GenCombo img = mod.apply_swap(a, k, {{st.label[v], st.c}});
      for (auto& t : img) {
        State s2 = st;
        s2.label[v] = t.gen;
        s2.c = t.c;
        next.push_back(std::move(s2));
      }
    }
    states = std::move(next);
  }

  // preorder of the sorted tree
  std::vector<int> P;
  P.reserve(V);
  std::function<void(int)> walk = [&](int v) {
    P.push_back(v);
    for (int e : kids[v])
      if (e <= -1) walk(PlanarTree::kid_node(e));
  };
  walk(raw.root);
  assert((int)P.size() == V);
  std::vector<int> pos(V);
  for (int i = 0; i < V; i++) pos[P[i]] = i;
  if (pos_out) *pos_out = pos;

  // Koszul sign: inversions among odd factors between the written order and
  // the canonical preorder (the action preserves degrees, so the original
  // labels determine the parities)
  std::vector<char> odd(V);
  for (int v = 0; v < V; v++)
    odd[v] = mod.gen((int)raw.nodes[v].kids.size(), raw.nodes[v].gen).degree & 1;
  long flips = 0;
  for (int i = 0; i < V; i++)
    for (int j = i + 1; j < V; j++) {
      int u = raw.factors[i], w = raw.factors[j];
      if (odd[u] && odd[w] && pos[u] > pos[w]) flips++;
    }
  int sign = flips % 2 ? -1 : 1;

  PlanarTree shape;
  shape.arity = raw.arity;
  shape.kids.resize(V);
  for (int i = 0; i < V; i++) {
    shape.kids[i] = kids[P[i]];
    for (auto& e : shape.kids[i])
      if (e <= -1) e = PlanarTree::node_kid(pos[PlanarTree::kid_node(e)]);
  }
  assert(shape.is_canonical());

  std::vector<Term> terms;
  for (auto& st : states) {
    TreewiseTensor t;
    t.shape = shape;
    t.label.resize(V);
    for (int i = 0; i < V; i++) t.label[i] = st.label[P[i]];
    terms.push_back({std::move(t), st.c * sign});
  }
  return make_element(std::move(terms), mod.field);
}

RawTensor raw_from_tensor(const TreewiseTensor& t) {
  RawTensor raw;
  raw.arity = t.arity();
  raw.root = 0;
  for (int v = 0; v < t.weight(); v++) {
    raw.nodes.push_back({t.shape.kids[v], t.label[v]});
    raw.factors.push_back(v);
  }
  return raw;
}

OperadElement compose(const GeneratorModule& mod, const TreewiseTensor& a, int i,
                      const TreewiseTensor& b) {
  assert(i >= 1 && i <= a.arity());
  if (a.is_unit()) return make_element({{b, Rat(1)}}, mod.field);
  if (b.is_unit()) return make_element({{a, Rat(1)}}, mod.field);
  int wa = a.weight(), nb = b.arity();
  RawTensor raw;
  raw.arity = a.arity() + nb - 1;
  raw.root = 0;
  for (int v = 0; v < wa; v++) {
    RawTensor::Node n{a.shape.kids[v], a.label[v]};
    for (auto& e : n.kids) {
      if (e >= 1) {
        if (e == i) e = PlanarTree::node_kid(wa);  // b's root
        else if (e > i) e = e + nb - 1;
      }
    }
    raw.nodes.push_back(std::move(n));
    raw.factors.push_back(v);
  }
  for (int v = 0; v < b.weight(); v++) {
    RawTensor::Node n{b.shape.kids[v], b.label[v]};
    for (auto& e : n.kids) {
      if (e >= 1) e = i + e - 1;
      else e = PlanarTree::node_kid(PlanarTree::kid_node(e) + wa);
    }
    raw.nodes.push_back(std::move(n));
    raw.factors.push_back(wa + v);
  }
  return canonicalize(mod, raw);
}

OperadElement compose(const GeneratorModule& mod, const OperadElement& a, int i,
                      const OperadElement& b) {
  OperadElement out;
  for (auto& ta : a.terms)
    for (auto& tb : b.terms) {
      OperadElement part = compose(mod, ta.mono, i, tb.mono);
      out = elem_add(out, elem_scale(part, ta.c * tb.c, mod.field), mod.field);
    }
  return out;
}

OperadElement apply_leaf_permutation(const GeneratorModule& mod, const OperadElement& x,
                                     const Perm& w) {
  OperadElement out;
  for (auto& t : x.terms) {
    assert((int)w.size() == t.mono.arity());
    RawTensor raw = raw_from_tensor(t.mono);
    for (auto& n : raw.nodes)
      for (auto& e : n.kids)
        if (e >= 1) e = w[e - 1];
    out = elem_add(out, canonicalize(mod, raw, t.c), mod.field);
  }
  return out;
}

std::vector<Perm> pointed_shuffles(int m, int n, int i) {
  assert(i >= 1 && i <= m);
  std::vector<Perm> out;
  int N = m + n - 1;
  Perm w = perm_identity(N);
  do {
    bool ok = true;
    for (int j = 1; j <= i && ok; j++)
      if (w[j - 1] != j) ok = false;
    for (int j = i; j + 1 <= i + n - 1 && ok; j++)
      if (w[j - 1] > w[j]) ok = false;
    for (int j = i + n; j + 1 <= N && ok; j++)
      if (w[j - 1] > w[j]) ok = false;
    if (ok) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<TreewiseTensor> monomials_of_weight(const GeneratorModule& mod, int weight,
                                                int arity) {
  auto shapes = enumerate_trees(arity, weight, mod.arities(),
                                mod.flavor == Flavor::nonsymmetric);
  std::vector<TreewiseTensor> out;
  for (auto& sh : shapes) {
    std::vector<int> lab(sh.weight(), 0);
    std::function<void(int)> go = [&](int v) {
      if (v == sh.weight()) {
        out.push_back({sh, lab});
        return;
      }
      for (int g = 0; g < mod.gen_count((int)sh.kids[v].size()); g++) {
        lab[v] = g;
        go(v + 1);
      }
    };
    go(0);
  }
  std::sort(out.begin(), out.end(),
            [](const TreewiseTensor& a, const TreewiseTensor& b) { return a < b; });
  return out;
}

TreewiseTensor restriction_at(const TreewiseTensor& m, int child) {
  auto par = m.shape.parents();
  int p = par[child];
  assert(p >= 0);
  struct E {
    int min;
    int owner;  // 0 = parent vertex, 1 = child vertex
    int slotpos;
  };
  std::vector<E> es;
  std::vector<int> pkids, ckids;  // rebuilt entry lists, filled after ranking
  for (int e : m.shape.kids[p]) {
    if (e <= -1 && PlanarTree::kid_node(e) == child) continue;
    es.push_back({e >= 1 ? e : m.shape.min_leaf(PlanarTree::kid_node(e)), 0, 0});
  }
  for (int e : m.shape.kids[child])
    es.push_back({e >= 1 ? e : m.shape.min_leaf(PlanarTree::kid_node(e)), 1, 0});
  std::vector<int> order(es.size());
  for (size_t i = 0; i < es.size(); i++) order[i] = (int)i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return es[a].min < es[b].min; });
  std::vector<int> rank(es.size());
  for (size_t r = 0; r < order.size(); r++) rank[order[r]] = (int)r + 1;

  TreewiseTensor out;
  out.shape.arity = (int)es.size();
  out.shape.kids.resize(2);
  size_t idx = 0;
  bool placed = false;
  for (int e : m.shape.kids[p]) {
    if (e <= -1 && PlanarTree::kid_node(e) == child) {
      out.shape.kids[0].push_back(PlanarTree::node_kid(1));
      placed = true;
      continue;
    }
    out.shape.kids[0].push_back(rank[idx++]);
  }
  assert(placed);
  (void)placed;
  for (size_t j = 0; j < m.shape.kids[child].size(); j++)
    out.shape.kids[1].push_back(rank[idx++]);
  out.label = {m.label[p], m.label[child]};
  assert(out.shape.is_canonical());
  return out;
}

namespace {

struct Boundary {
  // content of each slot (1..k) in rank order: leaf label or external vertex
  std::vector<int> slot_leaf;  // >=1 when the slot is one of m's leaves
  std::vector<int> slot_node;  // >=0 when the slot is an external subtree root
};

Boundary boundary_slots(const TreewiseTensor& m, const std::vector<int>& region) {
  std::vector<char> in(m.weight(), 0);
  for (int v : region) in[v] = 1;
  struct S {
    int min, leaf, node;
  };
  std::vector<S> ss;
  for (int v : region)
    for (int e : m.shape.kids[v]) {
      if (e >= 1) ss.push_back({e, e, -1});
      else {
        int u = PlanarTree::kid_node(e);
        if (!in[u]) ss.push_back({m.shape.min_leaf(u), 0, u});
      }
    }
  std::sort(ss.begin(), ss.end(), [](const S& a, const S& b) { return a.min < b.min; });
  Boundary b;
  for (auto& s : ss) {
    b.slot_leaf.push_back(s.leaf);
    b.slot_node.push_back(s.node);
  }
  return b;
}

}  // namespace

TreewiseTensor extract_region(const TreewiseTensor& m, const std::vector<int>& region) {
  assert(std::is_sorted(region.begin(), region.end()));
  std::vector<char> in(m.weight(), 0);
  for (int v : region) in[v] = 1;
  std::vector<int> newid(m.weight(), -1);
  for (size_t i = 0; i < region.size(); i++) newid[region[i]] = (int)i;

  // slot rank by min over all boundary entries
  std::vector<std::pair<int, std::pair<int, int>>> mins;  // (min, (vertex, entry idx))
  for (int v : region)
    for (size_t j = 0; j < m.shape.kids[v].size(); j++) {
      int e = m.shape.kids[v][j];
      if (e >= 1) mins.push_back({e, {v, (int)j}});
      else if (!in[PlanarTree::kid_node(e)])
        mins.push_back({m.shape.min_leaf(PlanarTree::kid_node(e)), {v, (int)j}});
    }
  std::sort(mins.begin(), mins.end());
  std::map<std::pair<int, int>, int> slot;
  for (size_t r = 0; r < mins.size(); r++) slot[mins[r].second] = (int)r + 1;

  TreewiseTensor out;
  out.shape.arity = (int)mins.size();
  for (int v : region) {
    std::vector<int> kv;
    for (size_t j = 0; j < m.shape.kids[v].size(); j++) {
      int e = m.shape.kids[v][j];
      if (e <= -1 && in[PlanarTree::kid_node(e)])
        kv.push_back(PlanarTree::node_kid(newid[PlanarTree::kid_node(e)]));
      else
        kv.push_back(slot.at({v, (int)j}));
    }
    out.shape.kids.push_back(std::move(kv));
    out.label.push_back(m.label[v]);
  }
  assert(out.shape.is_canonical());
  return out;
}

namespace {

struct Surgery {
  std::vector<char> in;
  std::vector<int> newid;  // kept vertex -> raw id
  int keep = 0;
  Boundary b;
  Rat gather;
};

Surgery plan_surgery(const GeneratorModule& mod, const TreewiseTensor& m,
                     const std::vector<int>& region) {
  assert(!region.empty() && std::is_sorted(region.begin(), region.end()));
  int V = m.weight();
  Surgery s;
  s.in.assign(V, 0);
  for (int v : region) s.in[v] = 1;
  auto par = m.shape.parents();
  int r0 = region[0];
  for ([[maybe_unused]] int v : region) assert(v == r0 || (par[v] >= 0 && s.in[par[v]]));
  s.b = boundary_slots(m, region);

  // Koszul sign of gathering the region's factors into one block at the
  // region root's position: external odd factors sitting between the root and
  // a later odd region factor each contribute a swap.
  std::vector<char> odd(V);
  for (int v = 0; v < V; v++) odd[v] = mod.gen(m.node_arity(v), m.label[v]).degree & 1;
  long flips = 0;
  for (size_t t = 1; t < region.size(); t++) {
    if (!odd[region[t]]) continue;
    for (int w = r0 + 1; w < region[t]; w++)
      if (!s.in[w] && odd[w]) flips++;
  }
  s.gather = flips % 2 ? Rat(-1) : Rat(1);

  s.newid.assign(V, -1);
  for (int v = 0; v < V; v++)
    if (!s.in[v]) s.newid[v] = s.keep++;
  return s;
}

RawTensor substitution_raw(const TreewiseTensor& m, const std::vector<int>& region,
                           const Surgery& s, const TreewiseTensor& xm) {
  int V = m.weight();
  int r0 = region[0];
  int base = s.keep;
  assert(xm.arity() == (int)s.b.slot_leaf.size());
  assert(xm.weight() >= 1);
  RawTensor raw;
  raw.arity = m.arity();
  for (int v = 0; v < V; v++) {
    if (s.in[v]) continue;
    RawTensor::Node n{m.shape.kids[v], m.label[v]};
    for (auto& e : n.kids) {
      if (e >= 1) continue;
      int u = PlanarTree::kid_node(e);
      if (s.in[u]) {
        assert(u == r0);
        e = PlanarTree::node_kid(base);
      } else {
        e = PlanarTree::node_kid(s.newid[u]);
      }
    }
    raw.nodes.push_back(std::move(n));
  }
  for (int v = 0; v < xm.weight(); v++) {
    RawTensor::Node n{xm.shape.kids[v], xm.label[v]};
    for (auto& e : n.kids) {
      if (e >= 1) {
        int sl = e - 1;
        if (s.b.slot_leaf[sl] >= 1) e = s.b.slot_leaf[sl];
        else e = PlanarTree::node_kid(s.newid[s.b.slot_node[sl]]);
      } else {
        e = PlanarTree::node_kid(PlanarTree::kid_node(e) + base);
      }
    }
    raw.nodes.push_back(std::move(n));
  }
  raw.root = r0 == 0 ? base : s.newid[0];
  for (int v = 0; v < V; v++) {
    if (v == r0)
      for (int u = 0; u < xm.weight(); u++) raw.factors.push_back(base + u);
    else if (!s.in[v])
      raw.factors.push_back(s.newid[v]);
  }
  return raw;
}

}  // namespace

OperadElement replace_region(const GeneratorModule& mod, const TreewiseTensor& m,
                             const std::vector<int>& region, const OperadElement& x) {
  Surgery s = plan_surgery(mod, m, region);
  OperadElement out;
  for (auto& tx : x.terms) {
    RawTensor raw = substitution_raw(m, region, s, tx.mono);
    out = elem_add(out, canonicalize(mod, raw, tx.c * s.gather), mod.field);
  }
  return out;
}

TrackedReplacement replace_region_tracked(const GeneratorModule& mod, const TreewiseTensor& m,
                                          const std::vector<int>& region,
                                          const TreewiseTensor& x) {
  Surgery s = plan_surgery(mod, m, region);
  RawTensor raw = substitution_raw(m, region, s, x);
  std::vector<int> pos;
  OperadElement e = canonicalize(mod, raw, s.gather, &pos);
  assert(e.terms.size() == 1);
  TrackedReplacement tr;
  tr.result = e.terms[0].mono;
  tr.coeff = e.terms[0].c;
  tr.old_to_new.assign(m.weight(), -1);
  for (int v = 0; v < m.weight(); v++)
    if (!s.in[v]) tr.old_to_new[v] = pos[s.newid[v]];
  tr.x_to_new.resize(x.weight());
  for (int v = 0; v < x.weight(); v++) tr.x_to_new[v] = pos[s.keep + v];
  return tr;
}

}  // namespace koszul
