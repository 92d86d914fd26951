#include "higgsdt/ring.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace higgsdt {

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exp, coeff);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

Rational LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  const long lo = static_cast<long>(a.min_exp()) + b.min_exp();
  const long hi = static_cast<long>(a.max_exp()) + b.max_exp();
  const long range = hi - lo + 1;
  const long work =
      static_cast<long>(a.term_count()) * static_cast<long>(b.term_count());
  if (range <= 64 + 4 * work) {
    // Dense accumulation over the output exponent range.
    std::vector<Rational> acc(static_cast<std::size_t>(range));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        acc[static_cast<std::size_t>(static_cast<long>(ea) + eb - lo)] +=
            ca * cb;
    for (long k = 0; k < range; ++k)
      if (acc[static_cast<std::size_t>(k)] != 0)
        out.terms_.emplace_hint(out.terms_.end(), static_cast<int>(lo + k),
                                std::move(acc[static_cast<std::size_t>(k)]));
  } else {
    std::map<int, Rational> acc;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        auto [it, inserted] = acc.try_emplace(ea + eb, ca * cb);
        if (!inserted) it->second += ca * cb;
      }
    for (auto& [e, c] : acc)
      if (c != 0) out.terms_.emplace_hint(out.terms_.end(), e, std::move(c));
  }
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [e, cc] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), e, cc * c);
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::adams(int n) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), e * n, c);
  return out;
}

LaurentPoly LaurentPoly::divided_by_poch_factor(int i) const {
  if (is_zero()) return {};
  const int step = 2 * i;
  const int fmin = min_exp();
  std::map<int, Rational> rem = terms_;
  std::map<int, Rational> quot;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const int e = top->first;
    if (e < fmin + step) break;
    const Rational c = std::move(top->second);
    rem.erase(top);
    // subtract c v^{e-step} (v^{2i} - 1): kills the top term, adds c below
    auto [it, inserted] = rem.try_emplace(e - step, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) rem.erase(it);
    }
    quot.emplace(e - step, c);
  }
  if (!rem.empty())
    throw IntegralityViolation(
        "division by (v^" + std::to_string(step) +
        " - 1) leaves a remainder; the fraction is not polynomial");
  LaurentPoly q;
  q.terms_ = std::move(quot);
  return q;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly poch_factor(int i) {
  LaurentPoly p = LaurentPoly::monomial(1, 2 * i);
  p += LaurentPoly::monomial(-1, 0);
  return p;
}

LaurentPoly poch_factor_product(const PochMultiset& den) {
  LaurentPoly out = LaurentPoly::monomial(1);
  for (const auto& [i, count] : den)
    for (int k = 0; k < count; ++k) out = out * poch_factor(i);
  return out;
}

PochDenominator poch_denominator(std::span<const int> multiplicities) {
  PochDenominator out;
  long unit_exp = 0;
  for (int n : multiplicities) {
    unit_exp -= static_cast<long>(n) * (n + 1);
    if (n > 0) {
      for (int k = 1; k <= n; ++k) out.factors[k] += 1;
    }
  }
  out.unit = LaurentPoly::monomial(1, static_cast<int>(unit_exp));
  return out;
}

namespace {

PochMultiset multiset_max(const PochMultiset& a, const PochMultiset& b) {
  PochMultiset out = a;
  for (const auto& [i, c] : b) {
    auto [it, inserted] = out.try_emplace(i, c);
    if (!inserted) it->second = std::max(it->second, c);
  }
  return out;
}

PochMultiset multiset_sum(const PochMultiset& a, const PochMultiset& b) {
  PochMultiset out = a;
  for (const auto& [i, c] : b) out[i] += c;
  return out;
}

// pointwise max(a - b, 0)
PochMultiset multiset_diff(const PochMultiset& a, const PochMultiset& b) {
  PochMultiset out;
  for (const auto& [i, c] : a) {
    auto it = b.find(i);
    const int r = c - (it == b.end() ? 0 : it->second);
    if (r > 0) out.emplace(i, r);
  }
  return out;
}

}  // namespace

PochFraction::PochFraction(LaurentPoly num, PochMultiset den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) den_.clear();
}

bool PochFraction::is_one() const {
  return num_ == poch_factor_product(den_);
}

PochFraction operator+(const PochFraction& a, const PochFraction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  PochMultiset den = multiset_max(a.den_, b.den_);
  LaurentPoly num = a.num_ * poch_factor_product(multiset_diff(den, a.den_));
  num += b.num_ * poch_factor_product(multiset_diff(den, b.den_));
  return PochFraction(std::move(num), std::move(den));
}

PochFraction operator*(const PochFraction& a, const PochFraction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return PochFraction(a.num_ * b.num_, multiset_sum(a.den_, b.den_));
}

PochFraction PochFraction::scaled(const Rational& c) const {
  return PochFraction(num_.scaled(c), den_);
}

PochFraction PochFraction::num_scaled(const LaurentPoly& p) const {
  return PochFraction(num_ * p, den_);
}

PochFraction PochFraction::adams(int n) const {
  PochMultiset den;
  for (const auto& [i, c] : den_) den.emplace(i * n, c);
  return PochFraction(num_.adams(n), std::move(den));
}

LaurentPoly PochFraction::to_laurent() const {
  LaurentPoly cur = num_;
  for (const auto& [i, count] : den_)
    for (int k = 0; k < count; ++k) cur = cur.divided_by_poch_factor(i);
  if (!cur.has_integer_coefficients())
    throw IntegralityViolation(
        "cleared fraction has non-integer coefficients");
  return cur;
}

bool operator==(const PochFraction& a, const PochFraction& b) {
  if (a.is_zero()) return b.is_zero();
  if (b.is_zero()) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * poch_factor_product(multiset_diff(b.den_, a.den_)) ==
         b.num_ * poch_factor_product(multiset_diff(a.den_, b.den_));
}

PochFraction poch_sum(std::span<const PochFraction> terms) {
  PochMultiset den;
  for (const PochFraction& t : terms)
    if (!t.is_zero()) den = multiset_max(den, t.den());
  LaurentPoly num;
  for (const PochFraction& t : terms) {
    if (t.is_zero()) continue;
    num += t.num() * poch_factor_product(multiset_diff(den, t.den()));
  }
  return PochFraction(std::move(num), std::move(den));
}

int mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be positive");
  int result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace higgsdt
