#pragma once

#include <string>
#include <utility>
#include <vector>

#include "koszul/perm.hpp"
#include "koszul/rational.hpp"

namespace koszul {

enum class Flavor { symmetric, nonsymmetric };

struct Generator {
  std::string name;
  int arity = 2;
  int degree = 0;
};

// A formal linear combination of same-arity generators, by index.
struct GenTerm {
  int gen;
  Rat c;
};
using GenCombo = std::vector<GenTerm>;

// The space of generators: an ordered basis in each arity, with the action of
// the symmetric groups given on adjacent transpositions (symmetric flavor
// only).  action(a, k, g) is the image of the k-th adjacent transposition
// applied to generator g of arity a; k is 1-based, swapping inputs k, k+1.
class GeneratorModule {
 public:
  Flavor flavor = Flavor::symmetric;
  Field field;

  int add_generator(const std::string& name, int arity, int degree = 0);
  void set_swap_image(int arity, int k, int gen, GenCombo image);

  int max_arity() const { return (int)by_arity_.size() - 1; }
  int gen_count(int arity) const {
    return arity >= 0 && arity <= max_arity() ? (int)by_arity_[arity].size() : 0;
  }
  const Generator& gen(int arity, int i) const { return by_arity_[arity][i]; }
  // (arity, index) or (-1, -1) when absent
  std::pair<int, int> find(const std::string& name) const;
  std::vector<int> arities() const;  // arities with at least one generator

  GenCombo apply_swap(int arity, int k, const GenCombo& x) const;
  GenCombo apply_perm(int arity, const Perm& w, const GenCombo& x) const;

  // Empty when consistent; else a description.  Checks that the swap images
  // define a degree-preserving action of the symmetric groups (involution,
  // braid and commutation identities) and that nonsymmetric modules carry no
  // action data.
  std::string validate() const;

  bool has_swap(int arity, int k) const;
  const std::vector<GenCombo>& swap_matrix(int arity, int k) const {
    return action_[arity][k - 1];
  }

 private:
  std::vector<std::vector<Generator>> by_arity_{{}, {}};
  // action_[a][k-1][g] = image combo; empty outer vectors where undefined
  std::vector<std::vector<std::vector<GenCombo>>> action_{{}, {}};

  GenCombo collect(GenCombo x) const;
};

}  // namespace koszul
