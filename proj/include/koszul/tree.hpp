#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "koszul/perm.hpp"

namespace koszul {

// A tree on n leaves, given combinatorially.  Vertices carry ids 0..V-1 in no
// particular order; parent[v] is the vertex v's outgoing edge points to, or -1
// when v is the root vertex (its edge goes to the root of the whole tree).
// Leaf i (1-based) hangs off vertex leaf_parent[i-1], or -1 in the trivial
// tree with no vertices, which only exists for n = 1.
struct Tree {
  int arity = 1;
  std::vector<int> parent;
  std::vector<int> leaf_parent;

  int vertex_count() const { return (int)parent.size(); }
  // Empty string when the tree is well formed, else a description of the
  // first violated condition.  "Well formed" includes reducedness: every
  // vertex has at least one incoming edge or leaf.
  std::string validate() const;
};

// A tree in planar form: vertices listed in preorder (root first, entries
// left to right), each holding its ordered entry list.  An entry >= 1 is a
// leaf label; an entry <= -1 refers to vertex (-1 - entry).
// The canonical planar form of a tree orders the entries of every vertex by
// the smallest leaf reachable through them; two trees are equal exactly when
// their canonical planar forms coincide.
struct PlanarTree {
  int arity = 1;
  std::vector<std::vector<int>> kids;

  int weight() const { return (int)kids.size(); }
  static int kid_node(int e) { return -1 - e; }  // entry code -> vertex index
  static int node_kid(int v) { return -1 - v; }  // vertex index -> entry code

  // Smallest leaf in the subtree rooted at vertex v.
  int min_leaf(int v) const;
  // Leaf labels in planar (left to right) order.
  std::vector<int> leaf_seq() const;
  // parent_of[v] for v >= 1; root has none.  Also fills which entry slot of
  // the parent points at v.
  std::vector<int> parents() const;

  // Flat integer encoding; equal trees <=> equal encodings once both are in
  // canonical planar form and listed in preorder.
  std::vector<int32_t> encode() const;
  bool operator==(const PlanarTree& o) const { return arity == o.arity && kids == o.kids; }
  std::strong_ordering operator<=>(const PlanarTree& o) const {
    auto a = encode(), b = o.encode();
    return a <=> b;
  }

  // True when every vertex's entries are sorted by min leaf and vertices are
  // listed in preorder.
  bool is_canonical() const;
  std::string str() const;  // debugging aid, e.g. (1,((2,4),3))
};

// sigma composed with tau at input i: tau's leaves become i..i+n-1, the later
// leaves of sigma shift up.  Vertex ids of sigma come first.
Tree graft(const Tree& sigma, int i, const Tree& tau);

PlanarTree canonical_planar(const Tree& t);
Tree tree_from_planar(const PlanarTree& p);

// The subtree generated by the internal edge from child_vertex to its parent:
// both endpoints with all their entries, every entry replaced by the smallest
// leaf linked through it, and the resulting labels renumbered 1..k in order.
Tree subtree_of_edge(const Tree& t, int child_vertex);

// Leaf i is relabeled w(i).
Tree apply_leaf_permutation(const Tree& t, const Perm& w);

// All distinct trees with n leaves and r vertices whose vertex arities lie in
// `arities`, as canonical planar forms in encoding order.  With planar=true
// only trees whose leaves read 1..n left to right are produced (the
// nonsymmetric case).
std::vector<PlanarTree> enumerate_trees(int n, int r, const std::vector<int>& arities,
                                        bool planar = false);
std::vector<PlanarTree> enumerate_trees(int n, int r, int max_vertex_arity);

}  // namespace koszul
