#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/tensor.hpp"

namespace koszul {

enum class Ordering { LT, EQ, GT, INCOMPARABLE };

// One letter of a path word: the generator met on the way from the root to a
// leaf, identified by (arity, precedence rank).  Letters compare by that pair.
struct PathLetter {
  int arity;
  int rank;
  auto operator<=>(const PathLetter&) const = default;
};
using PathWord = std::vector<PathLetter>;
using PathWordSequence = std::vector<PathWord>;  // indexed by leaf

// Suborder on treewise tensors of a common arity, driven by the sequence of
// path words: word i collects the labels along the path from the root to
// leaf i, root first.  lex: shorter words are smaller, ties broken letter by
// letter; revlenlex: longer words are smaller, same tie-breaking.  Words are
// compared position by position across the sequence.  Distinct monomials
// with identical word sequences are incomparable, as are monomials from
// different shuffle classes under the symmetrized order.
struct MonomialOrder {
  enum class Kind { lex, revlenlex };
  Kind kind = Kind::lex;
  // rank[arity][gen] = precedence rank, 0 the smallest
  std::vector<std::vector<int>> rank;

  // Present when this order compares a symmetrized module: every generator
  // of the symmetrized module is a pair (base generator, permutation), and
  // comparison happens inside one shuffle class via the base order.
  struct Sym {
    Kind base_kind = Kind::lex;
    std::vector<std::vector<int>> base_rank;
    // table[arity][gen] = (base generator index, permutation)
    std::vector<std::vector<std::pair<int, Perm>>> table;
  };
  std::optional<Sym> sym;

  std::string name() const;

  PathWordSequence path_words(const TreewiseTensor& m) const;
  Ordering compare(const TreewiseTensor& a, const TreewiseTensor& b) const;

  // Total refinement used to lay out matrix columns: ascending and agreeing
  // with compare wherever compare decides.
  std::vector<int> column_order(const std::vector<TreewiseTensor>& monos) const;
  std::vector<int64_t> sort_key(const TreewiseTensor& m) const;

  // Splits a monomial over a symmetrized module into its shuffle-class
  // permutation and the underlying nonsymmetric monomial.
  std::pair<Perm, TreewiseTensor> unwind(const TreewiseTensor& m) const;
};

// Precedence ranks in declaration order for every arity of the module.
std::vector<std::vector<int>> default_ranks(const GeneratorModule& mod);

MonomialOrder opposite_order(const MonomialOrder& o);

}  // namespace koszul
