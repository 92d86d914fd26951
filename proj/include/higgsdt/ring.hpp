#pragma once

// Exact arithmetic for the counting pipeline: sparse Laurent polynomials in
// the weight variable v with rational coefficients, and fractions whose
// denominators are multisets of q-Pochhammer factors (v^{2i} - 1).
//
// Conventions. v is the variable on which the Adams operations act by pure
// exponent scaling (v ~ q^{1/2}); the motivic weight printed on output is
// w = -v. Denominators are never expanded into general polynomials: each
// factor (v^{2i} - 1) is kept atomically, indexed by i, so that common
// denominators are per-index multiset maxima and no polynomial gcd is needed.

#include <gmpxx.h>

#include <map>
#include <span>
#include <stdexcept>
#include <string>

namespace higgsdt {

using Rational = mpq_class;

// mpq_class(n, d) neither reduces its arguments nor accepts a negative
// denominator; this does both.
inline Rational rational(long num, long den = 1) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Rational x(num, den);
  x.canonicalize();
  return x;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// A fraction that should clear to a Laurent polynomial with integer
// coefficients failed to do so.
struct IntegralityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero

  static LaurentPoly monomial(const Rational& coeff, int exp = 0);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  int min_exp() const { return terms_.begin()->first; }    // pre: nonzero
  int max_exp() const { return terms_.rbegin()->first; }   // pre: nonzero
  std::size_t term_count() const { return terms_.size(); }
  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int exp) const;
  bool has_integer_coefficients() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const { return scaled(-1); }

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(int k) const;  // multiply by v^k
  LaurentPoly adams(int n) const;    // v -> v^n, n >= 1

  // Exact division by (v^{2i} - 1), i >= 1; throws IntegralityViolation if a
  // remainder is left.
  LaurentPoly divided_by_poch_factor(int i) const;

  std::string to_string(const std::string& var = "v") const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  friend class PochFraction;
  std::map<int, Rational> terms_;  // exponent -> coefficient, no zeros stored
};

// Multiset of denominator factors: index i -> multiplicity of (v^{2i} - 1).
using PochMultiset = std::map<int, int>;

LaurentPoly poch_factor(int i);                         // v^{2i} - 1
LaurentPoly poch_factor_product(const PochMultiset&);   // expanded product

// The q-Pochhammer denominator of an automorphism group, in cleared form:
//   prod_i prod_{k=1..n_i} (1 - v^{-2k}) = unit * prod of factors
// with unit the monomial v^{-sum_i n_i(n_i+1)} and factors the multiset
// {1..n_i} for each multiplicity n_i in the list.
struct PochDenominator {
  LaurentPoly unit;
  PochMultiset factors;
};
PochDenominator poch_denominator(std::span<const int> multiplicities);

// num / prod of (v^{2i} - 1) factors. Value semantics; a zero numerator is
// the canonical zero (denominator cleared).
class PochFraction {
 public:
  PochFraction() = default;  // zero
  explicit PochFraction(LaurentPoly num, PochMultiset den = {});

  static PochFraction one() { return PochFraction(LaurentPoly::monomial(1)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  const LaurentPoly& num() const { return num_; }
  const PochMultiset& den() const { return den_; }

  friend PochFraction operator+(const PochFraction&, const PochFraction&);
  friend PochFraction operator*(const PochFraction&, const PochFraction&);
  PochFraction scaled(const Rational& c) const;
  PochFraction num_scaled(const LaurentPoly& p) const;
  PochFraction adams(int n) const;  // v -> v^n on num, index i -> n i below

  // Divides the numerator exactly by every denominator factor and checks the
  // result has integer coefficients; throws IntegralityViolation otherwise.
  LaurentPoly to_laurent() const;

  // Equality of represented values, by cross-multiplication.
  friend bool operator==(const PochFraction&, const PochFraction&);

 private:
  LaurentPoly num_;
  PochMultiset den_;
};

// Sum with a single pass to the per-index-max common denominator.
PochFraction poch_sum(std::span<const PochFraction> terms);

int mobius(long n);  // n >= 1

}  // namespace higgsdt
