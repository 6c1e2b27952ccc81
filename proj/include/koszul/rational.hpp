#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace koszul {

// All scalar arithmetic is exact.  Coefficients are stored as GMP rationals;
// a Field tells us whether to interpret them over Q or over a prime field F_p.
// Over F_p an element is kept as an integer in [0,p).  Rational inputs with
// denominator prime to p are folded into that range by reduce().
using Rat = mpq_class;

struct Field {
  bool modular = false;
  unsigned long p = 0;

  bool operator==(const Field&) const = default;

  static Field Q() { return Field{}; }
  static Field Fp(unsigned long p) {
    if (p < 2) throw std::invalid_argument("field characteristic must be >= 2");
    return Field{true, p};
  }

  // Canonical representative of x in the field.
  Rat reduce(const Rat& x) const {
    if (!modular) return x;
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class pp(static_cast<unsigned long>(p));
    mpz_class r, dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t()) == 0)
      throw std::domain_error("denominator not invertible mod " + std::to_string(p));
    r = num * dinv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pp.get_mpz_t());
    return Rat(r);
  }

  bool is_zero(const Rat& x) const { return sgn(reduce(x)) == 0; }

  // Multiplicative inverse of a nonzero field element.
  Rat inv(const Rat& x) const {
    Rat r = reduce(x);
    if (sgn(r) == 0) throw std::domain_error("inverse of zero");
    return reduce(Rat(1) / r);
  }

  std::string str() const { return modular ? "F" + std::to_string(p) : "Q"; }
};

inline std::string rat_str(const Rat& x) { return x.get_str(); }

}  // namespace koszul
