#include "koszul/tree.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>

namespace koszul {

std::string Tree::validate() const {
  int V = vertex_count();
  if (arity < 1) return "arity must be >= 1";
  if ((int)leaf_parent.size() != arity) return "leaf_parent size != arity";
  if (V == 0) {
    if (arity != 1) return "vertexless tree must have arity 1";
    if (leaf_parent[0] != -1) return "vertexless tree: leaf must attach to root";
    return "";
  }
  int roots = 0;
  for (int v = 0; v < V; v++) {
    if (parent[v] == -1) roots++;
    else if (parent[v] < 0 || parent[v] >= V) return "parent out of range";
  }
  if (roots != 1) return "tree must have exactly one root edge";
  // acyclicity: every vertex reaches the root in at most V steps
  for (int v = 0; v < V; v++) {
    int u = v, steps = 0;
    while (u != -1) {
      if (++steps > V) return "cycle in parent pointers";
      u = parent[u];
    }
  }
  std::vector<int> indeg(V, 0);
  for (int v = 0; v < V; v++)
    if (parent[v] != -1) indeg[parent[v]]++;
  for (int i = 0; i < arity; i++) {
    if (leaf_parent[i] < 0 || leaf_parent[i] >= V) return "leaf parent out of range";
    indeg[leaf_parent[i]]++;
  }
  for (int v = 0; v < V; v++)
    if (indeg[v] == 0) return "vertex " + std::to_string(v) + " has no entries";
  return "";
}

int PlanarTree::min_leaf(int v) const {
  int m = arity + 1;
  for (int e : kids[v])
    m = std::min(m, e >= 1 ? e : min_leaf(kid_node(e)));
  return m;
}

std::vector<int> PlanarTree::leaf_seq() const {
  std::vector<int> out;
  if (kids.empty()) {
    out.push_back(1);
    return out;
  }
  std::function<void(int)> walk = [&](int v) {
    for (int e : kids[v]) {
      if (e >= 1) out.push_back(e);
      else walk(kid_node(e));
    }
  };
  walk(0);
  return out;
}

std::vector<int> PlanarTree::parents() const {
  std::vector<int> par(weight(), -1);
  for (int v = 0; v < weight(); v++)
    for (int e : kids[v])
      if (e <= -1) par[kid_node(e)] = v;
  return par;
}

std::vector<int32_t> PlanarTree::encode() const {
  std::vector<int32_t> out;
  out.push_back(arity);
  for (auto& k : kids) {
    out.push_back((int32_t)k.size());
    for (int e : k) out.push_back(e);
  }
  return out;
}

bool PlanarTree::is_canonical() const {
  if (kids.empty()) return true;
  // preorder check
  int next = 1;
  std::function<bool(int)> walk = [&](int v) -> bool {
    int prev_min = 0;
    for (int e : kids[v]) {
      int m = e >= 1 ? e : min_leaf(kid_node(e));
      if (m <= prev_min) return false;
      prev_min = m;
      if (e <= -1) {
        if (kid_node(e) != next) return false;
        next++;
        if (!walk(kid_node(e))) return false;
      }
    }
    return true;
  };
  return walk(0) && next == weight();
}

std::string PlanarTree::str() const {
  if (kids.empty()) return "1";
  std::function<std::string(int)> walk = [&](int v) {
    std::string s = "(";
    for (size_t j = 0; j < kids[v].size(); j++) {
      if (j) s += ",";
      int e = kids[v][j];
      s += e >= 1 ? std::to_string(e) : walk(kid_node(e));
    }
    return s + ")";
  };
  return walk(0);
}

Tree graft(const Tree& sigma, int i, const Tree& tau) {
  assert(i >= 1 && i <= sigma.arity);
  if (sigma.vertex_count() == 0) return tau;
  if (tau.vertex_count() == 0) return sigma;
  int Vs = sigma.vertex_count(), n = tau.arity;
  Tree out;
  out.arity = sigma.arity + n - 1;
  out.parent = sigma.parent;
  for (int v = 0; v < tau.vertex_count(); v++) {
    int p = tau.parent[v];
    out.parent.push_back(p == -1 ? sigma.leaf_parent[i - 1] : p + Vs);
  }
  out.leaf_parent.assign(out.arity, -1);
  for (int j = 1; j <= sigma.arity; j++) {
    if (j == i) continue;
    out.leaf_parent[(j < i ? j : j + n - 1) - 1] = sigma.leaf_parent[j - 1];
  }
  for (int j = 1; j <= n; j++)
    out.leaf_parent[i + j - 2] = tau.leaf_parent[j - 1] + Vs;
  return out;
}

PlanarTree canonical_planar(const Tree& t) {
  int V = t.vertex_count();
  if (V == 0) return PlanarTree{1, {}};
  // entries per vertex: (min leaf, leaf label or ~vertex)
  struct Entry {
    int min;
    int leaf;    // >=1 when a leaf entry
    int vertex;  // >=0 when a vertex entry
  };
  std::vector<std::vector<Entry>> ent(V);
  std::vector<int> vmin(V, t.arity + 1);
  // vertex mins bottom-up: process by decreasing depth
  std::vector<int> depth(V, 0), order(V);
  for (int v = 0; v < V; v++) {
    int u = v;
    while (t.parent[u] != -1) {
      u = t.parent[u];
      depth[v]++;
    }
    order[v] = v;
  }
  for (int i = 0; i < t.arity; i++)
    vmin[t.leaf_parent[i]] = std::min(vmin[t.leaf_parent[i]], i + 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return depth[a] > depth[b]; });
  int root = -1;
  for (int v : order) {
    if (t.parent[v] != -1)
      vmin[t.parent[v]] = std::min(vmin[t.parent[v]], vmin[v]);
    else
      root = v;
  }
  for (int i = 0; i < t.arity; i++)
    ent[t.leaf_parent[i]].push_back({i + 1, i + 1, -1});
  for (int v = 0; v < V; v++)
    if (t.parent[v] != -1) ent[t.parent[v]].push_back({vmin[v], 0, v});
  for (auto& es : ent)
    std::sort(es.begin(), es.end(), [](const Entry& a, const Entry& b) { return a.min < b.min; });

  PlanarTree out;
  out.arity = t.arity;
  std::function<int(int)> emit = [&](int v) -> int {
    int id = (int)out.kids.size();
    out.kids.emplace_back();
    out.kids[id].assign(ent[v].size(), 0);  // reserve slots in order
    for (size_t j = 0; j < ent[v].size(); j++) {
      if (ent[v][j].vertex < 0) out.kids[id][j] = ent[v][j].leaf;
      else out.kids[id][j] = PlanarTree::node_kid(emit(ent[v][j].vertex));
    }
    return id;
  };
  emit(root);
  return out;
}

Tree tree_from_planar(const PlanarTree& p) {
  Tree t;
  t.arity = p.arity;
  if (p.kids.empty()) {
    t.leaf_parent = {-1};
    return t;
  }
  t.parent.assign(p.weight(), -1);
  t.leaf_parent.assign(p.arity, -1);
  for (int v = 0; v < p.weight(); v++)
    for (int e : p.kids[v]) {
      if (e >= 1) t.leaf_parent[e - 1] = v;
      else t.parent[PlanarTree::kid_node(e)] = v;
    }
  return t;
}

Tree subtree_of_edge(const Tree& t, int child_vertex) {
  int p = t.parent[child_vertex];
  assert(p != -1);
  int V = t.vertex_count();
  std::vector<int> vmin(V, t.arity + 1);
  std::vector<int> depth(V, 0), order(V);
  for (int v = 0; v < V; v++) {
    int u = v;
    while (t.parent[u] != -1) {
      u = t.parent[u];
      depth[v]++;
    }
    order[v] = v;
  }
  for (int i = 0; i < t.arity; i++)
    vmin[t.leaf_parent[i]] = std::min(vmin[t.leaf_parent[i]], i + 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return depth[a] > depth[b]; });
  for (int v : order)
    if (t.parent[v] != -1) vmin[t.parent[v]] = std::min(vmin[t.parent[v]], vmin[v]);

  std::vector<std::pair<int, int>> labels;  // (min linked through entry, 0=at p / 1=at child)
  for (int i = 0; i < t.arity; i++) {
    if (t.leaf_parent[i] == p) labels.push_back({i + 1, 0});
    if (t.leaf_parent[i] == child_vertex) labels.push_back({i + 1, 1});
  }
  for (int v = 0; v < V; v++) {
    if (v == child_vertex) continue;
    if (t.parent[v] == p) labels.push_back({vmin[v], 0});
    if (t.parent[v] == child_vertex) labels.push_back({vmin[v], 1});
  }
  std::sort(labels.begin(), labels.end());
  Tree out;
  out.arity = (int)labels.size();
  out.parent = {-1, 0};
  out.leaf_parent.assign(out.arity, -1);
  for (size_t j = 0; j < labels.size(); j++)
    out.leaf_parent[j] = labels[j].second;
  return out;
}

Tree apply_leaf_permutation(const Tree& t, const Perm& w) {
  assert((int)w.size() == t.arity && perm_valid(w));
  Tree out = t;
  for (int i = 1; i <= t.arity; i++)
    out.leaf_parent[w[i - 1] - 1] = t.leaf_parent[i - 1];
  return out;
}

namespace {

// All canonical planar trees over the given (sorted, distinct) leaf labels
// with exactly r vertices.  planar restricts leaf blocks to consecutive runs.
std::vector<PlanarTree> build_shapes(const std::vector<int>& leaves, int r,
                                     const std::vector<int>& arities, bool planar, int arity0) {
  std::vector<PlanarTree> out;
  if (r == 0) return out;  // bare leaves handled by the caller
  for (int k : arities) {
    if (k < 1) continue;
    // split leaves into k blocks, ordered by min, singletons allowed
    std::vector<std::vector<std::vector<int>>> blockings;
    int L = (int)leaves.size();
    if (k > L) continue;
    if (planar) {
      // compositions of L into k positive parts
      std::vector<int> sizes(k, 1);
      std::function<void(int, int)> go = [&](int pos, int left) {
        if (pos == k - 1) {
          sizes[pos] = left;
          std::vector<std::vector<int>> blocks;
          int at = 0;
          for (int j = 0; j < k; j++) {
            blocks.emplace_back(leaves.begin() + at, leaves.begin() + at + sizes[j]);
            at += sizes[j];
          }
          blockings.push_back(blocks);
          return;
        }
        for (int s = 1; s <= left - (k - 1 - pos); s++) {
          sizes[pos] = s;
          go(pos + 1, left - s);
        }
      };
      go(0, L);
    } else {
      // every assignment of leaves to k blocks whose mins increase
      std::vector<int> assign(L, 0);
      std::function<void(int)> go = [&](int pos) {
        if (pos == L) {
          std::vector<std::vector<int>> blocks(k);
          for (int j = 0; j < L; j++) blocks[assign[j]].push_back(leaves[j]);
          for (auto& b : blocks)
            if (b.empty()) return;
          for (int j = 0; j + 1 < k; j++)
            if (blocks[j][0] > blocks[j + 1][0]) return;
          blockings.push_back(blocks);
          return;
        }
        for (int b = 0; b < k && b <= pos; b++) {  // leaves[0] must land in block 0
          assign[pos] = b;
          go(pos + 1);
        }
      };
      go(0);
    }
    for (auto& blocks : blockings) {
      // distribute the remaining r-1 vertices over the k entries
      std::vector<int> wts(k, 0);
      std::function<void(int, int, std::vector<std::vector<PlanarTree>>&)> place =
          [&](int pos, int left, std::vector<std::vector<PlanarTree>>& opts) {
            if (pos == k) {
              if (left != 0) return;
              // cartesian product over entry options
              std::vector<int> pick(k, 0);
              std::function<void(int)> emit = [&](int e) {
                if (e == k) {
                  PlanarTree pt;
                  pt.arity = arity0;
                  pt.kids.emplace_back();
                  for (int j = 0; j < k; j++) {
                    if (wts[j] == 0) {
                      pt.kids[0].push_back(blocks[j][0]);
                    } else {
                      const PlanarTree& sub = opts[j][pick[j]];
                      int off = pt.weight();
                      pt.kids[0].push_back(PlanarTree::node_kid(off));
                      for (auto kv : sub.kids) {
                        for (auto& x : kv)
                          if (x <= -1) x = PlanarTree::node_kid(PlanarTree::kid_node(x) + off);
                        pt.kids.push_back(kv);
                      }
                    }
                  }
                  out.push_back(pt);
                  return;
                }
                int cnt = wts[e] == 0 ? 1 : (int)opts[e].size();
                for (pick[e] = 0; pick[e] < cnt; pick[e]++) emit(e + 1);
                pick[e] = 0;
              };
              emit(0);
              return;
            }
            int maxw = left - 0;
            for (int wgt = 0; wgt <= maxw; wgt++) {
              if (wgt == 0 && blocks[pos].size() != 1) continue;
              if (wgt > 0) {
                opts[pos] = build_shapes(blocks[pos], wgt, arities, planar, arity0);
                if (opts[pos].empty()) continue;
              }
              wts[pos] = wgt;
              place(pos + 1, left - wgt, opts);
            }
            wts[pos] = 0;
          };
      std::vector<std::vector<PlanarTree>> opts(k);
      place(0, r - 1, opts);
    }
  }
  return out;
}

}  // namespace

std::vector<PlanarTree> enumerate_trees(int n, int r, const std::vector<int>& arities,
                                        bool planar) {
  std::vector<PlanarTree> out;
  if (r == 0) {
    if (n == 1) out.push_back(PlanarTree{1, {}});
    return out;
  }
  std::vector<int> leaves(n);
  for (int i = 0; i < n; i++) leaves[i] = i + 1;
  auto raw = build_shapes(leaves, r, arities, planar, n);
  std::map<std::vector<int32_t>, PlanarTree> dedup;
  for (auto& pt : raw) dedup.emplace(pt.encode(), pt);
  for (auto& [k, v] : dedup) out.push_back(v);
  return out;
}

std::vector<PlanarTree> enumerate_trees(int n, int r, int max_vertex_arity) {
  std::vector<int> arities;
  for (int a = 1; a <= max_vertex_arity; a++) arities.push_back(a);
  return enumerate_trees(n, r, arities, false);
}

}  // namespace koszul
