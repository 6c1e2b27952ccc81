#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace koszul {

// A permutation of {1..n} stored by images: w[i-1] = w(i).
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

inline bool perm_is_identity(const Perm& w) {
  for (int i = 0; i < (int)w.size(); i++)
    if (w[i] != i + 1) return false;
  return true;
}

// (a*b)(i) = a(b(i))
inline Perm perm_compose(const Perm& a, const Perm& b) {
  assert(a.size() == b.size());
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); i++) c[i] = a[b[i] - 1];
  return c;
}

inline Perm perm_inverse(const Perm& w) {
  Perm v(w.size());
  for (size_t i = 0; i < w.size(); i++) v[w[i] - 1] = (int)i + 1;
  return v;
}

inline int perm_sign(const Perm& w) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); i++)
    for (size_t j = i + 1; j < w.size(); j++)
      if (w[i] > w[j]) inv++;
  return inv % 2 ? -1 : 1;
}

inline bool perm_valid(const Perm& w) {
  std::vector<bool> seen(w.size(), false);
  for (int x : w) {
    if (x < 1 || x > (int)w.size() || seen[x - 1]) return false;
    seen[x - 1] = true;
  }
  return true;
}

// Writes w as a product of adjacent transpositions, w = s_{k1} s_{k2} ... s_{km}
// composed as functions left to right (apply s_{km} first).  Returned k's are
// 1-based positions: s_k swaps k and k+1.
inline std::vector<int> adjacent_word(const Perm& w) {
  Perm v = w;
  std::vector<int> swaps;  // positions used while bubble-sorting v to identity
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < v.size(); i++) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        swaps.push_back((int)i + 1);
        moved = true;
      }
    }
  }
  // v * s_{k1} * ... * s_{km} = id  =>  w = s_{km} * ... * s_{k1}
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

inline void for_each_perm(int n, const std::function<void(const Perm&)>& f) {
  Perm w = perm_identity(n);
  do {
    f(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

inline std::string perm_str(const Perm& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); i++) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

// Digits-only form, e.g. [2,1,3] -> "213".  Only used for small arities.
inline std::string perm_digits(const Perm& w) {
  std::string s;
  for (int x : w) s += (char)('0' + x);
  return s;
}

}  // namespace koszul
