#include "koszul/module.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace koszul {

int GeneratorModule::add_generator(const std::string& name, int arity, int degree) {
  if (arity < 1) throw std::invalid_argument("generator arity must be >= 1");
  if (find(name).first != -1) throw std::invalid_argument("duplicate generator " + name);
  while (max_arity() < arity) {
    by_arity_.emplace_back();
    action_.emplace_back();
  }
  by_arity_[arity].push_back({name, arity, degree});
  return (int)by_arity_[arity].size() - 1;
}

void GeneratorModule::set_swap_image(int arity, int k, int gen, GenCombo image) {
  assert(arity >= 2 && k >= 1 && k < arity);
  auto& mats = action_[arity];
  if ((int)mats.size() < arity - 1) mats.resize(arity - 1);
  if ((int)mats[k - 1].size() < gen_count(arity)) mats[k - 1].resize(gen_count(arity));
  mats[k - 1][gen] = collect(std::move(image));
}

std::pair<int, int> GeneratorModule::find(const std::string& name) const {
  for (int a = 1; a <= max_arity(); a++)
    for (int i = 0; i < gen_count(a); i++)
      if (by_arity_[a][i].name == name) return {a, i};
  return {-1, -1};
}

std::vector<int> GeneratorModule::arities() const {
  std::vector<int> out;
  for (int a = 1; a <= max_arity(); a++)
    if (gen_count(a) > 0) out.push_back(a);
  return out;
}

bool GeneratorModule::has_swap(int arity, int k) const {
  return arity <= max_arity() && (int)action_[arity].size() >= k &&
         (int)action_[arity][k - 1].size() == gen_count(arity);
}

GenCombo GeneratorModule::collect(GenCombo x) const {
  std::map<int, Rat> acc;
  for (auto& t : x) acc[t.gen] += t.c;
  GenCombo out;
  for (auto& [g, c] : acc) {
    Rat r = field.reduce(c);
    if (sgn(r) != 0) out.push_back({g, r});
  }
  return out;
}

GenCombo GeneratorModule::apply_swap(int arity, int k, const GenCombo& x) const {
  if (flavor == Flavor::nonsymmetric)
    throw std::logic_error("nonsymmetric module has no symmetric group action");
  if (!has_swap(arity, k))
    throw std::logic_error("missing action of swap " + std::to_string(k) + " in arity " +
                           std::to_string(arity));
  const auto& mat = action_[arity][k - 1];
  GenCombo out;
  for (auto& t : x)
    for (auto& u : mat[t.gen]) out.push_back({u.gen, t.c * u.c});
  return collect(std::move(out));
}

GenCombo GeneratorModule::apply_perm(int arity, const Perm& w, const GenCombo& x) const {
  assert((int)w.size() == arity);
  if (perm_is_identity(w)) return collect(x);
  auto word = adjacent_word(w);
  GenCombo cur = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = apply_swap(arity, *it, cur);
  return cur;
}

std::string GeneratorModule::validate() const {
  if (flavor == Flavor::nonsymmetric) {
    for (auto& mats : action_)
      if (!mats.empty()) return "nonsymmetric module carries action data";
    return "";
  }
  for (int a = 2; a <= max_arity(); a++) {
    if (gen_count(a) == 0) continue;
    for (int k = 1; k < a; k++)
      if (!has_swap(a, k))
        return "arity " + std::to_string(a) + ": no action given for swap " + std::to_string(k);
    // degree preservation
    for (int k = 1; k < a; k++)
      for (int g = 0; g < gen_count(a); g++)
        for (auto& t : action_[a][k - 1][g])
          if (gen(a, t.gen).degree != gen(a, g).degree)
            return "action image of " + gen(a, g).name + " mixes degrees";
    auto single = [&](int g) { return GenCombo{{g, Rat(1)}}; };
    auto eq = [&](const GenCombo& x, const GenCombo& y) {
      GenCombo d = x;
      for (auto& t : y) d.push_back({t.gen, -t.c});
      return collect(std::move(d)).empty();
    };
    for (int g = 0; g < gen_count(a); g++) {
      for (int k = 1; k < a; k++) {
        if (!eq(apply_swap(a, k, apply_swap(a, k, single(g))), single(g)))
          return gen(a, g).name + ": swap " + std::to_string(k) + " is not an involution";
        if (k + 1 < a) {
          auto lhs = apply_swap(a, k, apply_swap(a, k + 1, apply_swap(a, k, single(g))));
          auto rhs = apply_swap(a, k + 1, apply_swap(a, k, apply_swap(a, k + 1, single(g))));
          if (!eq(lhs, rhs))
            return gen(a, g).name + ": braid identity fails at " + std::to_string(k);
        }
        for (int j = k + 2; j < a; j++) {
          auto lhs = apply_swap(a, k, apply_swap(a, j, single(g)));
          auto rhs = apply_swap(a, j, apply_swap(a, k, single(g)));
          if (!eq(lhs, rhs))
            return gen(a, g).name + ": swaps " + std::to_string(k) + "," + std::to_string(j) +
                   " do not commute";
        }
      }
    }
  }
  return "";
}

}  // namespace koszul
