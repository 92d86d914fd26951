#pragma once

// Truncated generating series with PochFraction coefficients, graded either
// by (rank, degree) or by dimension vectors. All operations truncate to the
// series box; multiplication is exact on grades inside the box because
// grades add componentwise. The plethystic log is computed by the
// Moebius-Adams formula Log A = sum_{n>=1} (mu(n)/n) psi_n(ln A), so the
// only divisions are by n and k and everything stays exact over Q.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "higgsdt/quiver.hpp"
#include "higgsdt/ring.hpp"

namespace higgsdt {

struct BoxMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadConstantTerm : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (rank, degree) grade of the bundle-side series.
struct Bigrade {
  int r = 0;
  int d = 0;
  friend auto operator<=>(const Bigrade&, const Bigrade&) = default;
};

inline Bigrade operator+(Bigrade a, Bigrade b) { return {a.r + b.r, a.d + b.d}; }
inline Bigrade operator*(int n, Bigrade g) { return {n * g.r, n * g.d}; }
inline bool grade_within(const Bigrade& g, const Bigrade& box) {
  return g.r >= 0 && g.d >= 0 && g.r <= box.r && g.d <= box.d;
}
inline bool grade_is_zero(const Bigrade& g) { return g.r == 0 && g.d == 0; }
inline std::optional<Rational> grade_slope(const Bigrade& g) {
  if (g.r < 1) return std::nullopt;
  return rational(g.d, g.r);
}
// largest n for which psi_n can keep any nonzero grade inside the box
inline int adams_cap(const Bigrade& box) { return std::max({box.r, box.d, 1}); }

inline bool grade_within(const DimVector& g, const DimVector& box) {
  return fits_within(g, box);
}
inline bool grade_is_zero(const DimVector& g) { return g.is_zero(); }
inline std::optional<Rational> grade_slope(const DimVector& g) {
  if (g.rank() == 0) return std::nullopt;
  return g.slope();
}
inline int adams_cap(const DimVector& box) {
  int cap = 1;
  for (const auto& [i, m] : box.entries()) cap = std::max(cap, m);
  return cap;
}

template <class Grade>
class GradedSeries {
 public:
  explicit GradedSeries(Grade box) : box_(std::move(box)) {}

  static GradedSeries one(Grade box) {
    GradedSeries s(std::move(box));
    s.coeffs_.emplace(Grade{}, PochFraction::one());
    return s;
  }

  const Grade& box() const { return box_; }
  const std::map<Grade, PochFraction>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  PochFraction coeff(const Grade& g) const {
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? PochFraction{} : it->second;
  }

  void set_coeff(const Grade& g, PochFraction c) {
    if (!grade_within(g, box_))
      throw std::out_of_range("set_coeff: grade outside the truncation box");
    if (c.is_zero())
      coeffs_.erase(g);
    else
      coeffs_.insert_or_assign(g, std::move(c));
  }

  GradedSeries& operator+=(const GradedSeries& o) {
    if (box_ != o.box_) throw BoxMismatch("series boxes differ");
    for (const auto& [g, c] : o.coeffs_) {
      auto it = coeffs_.find(g);
      if (it == coeffs_.end()) {
        coeffs_.emplace(g, c);
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs_.erase(it);
      }
    }
    return *this;
  }

  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) {
    a += b;
    return a;
  }

  friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) {
    return a + b.scaled(-1);
  }

  GradedSeries scaled(const Rational& c) const {
    GradedSeries out(box_);
    if (c == 0) return out;
    for (const auto& [g, cc] : coeffs_)
      out.coeffs_.emplace_hint(out.coeffs_.end(), g, cc.scaled(c));
    return out;
  }

  // psi_n: grade g -> n g, v -> v^n on coefficients.
  GradedSeries adams(int n) const {
    GradedSeries out(box_);
    for (const auto& [g, c] : coeffs_) {
      Grade g2 = n * g;
      if (grade_within(g2, box_))
        out.coeffs_.emplace(std::move(g2), c.adams(n));
    }
    return out;
  }

  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    if (a.box_ != b.box_) throw BoxMismatch("series boxes differ");
    GradedSeries out(a.box_);
    for (const auto& [g1, c1] : a.coeffs_)
      for (const auto& [g2, c2] : b.coeffs_) {
        Grade g = g1 + g2;
        if (!grade_within(g, a.box_)) continue;
        PochFraction prod = c1 * c2;
        auto it = out.coeffs_.find(g);
        if (it == out.coeffs_.end())
          out.coeffs_.emplace(std::move(g), std::move(prod));
        else
          it->second = it->second + prod;
      }
    for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();)
      it = it->second.is_zero() ? out.coeffs_.erase(it) : std::next(it);
    return out;
  }

  // Equality of represented values: same box and coefficient-wise equality
  // of fractions (cross-multiplication, so representatives may differ).
  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    if (a.box_ != b.box_) return false;
    for (const auto& [g, c] : a.coeffs_)
      if (!(c == b.coeff(g))) return false;
    for (const auto& [g, c] : b.coeffs_)
      if (a.coeffs_.find(g) == a.coeffs_.end() && !c.is_zero()) return false;
    return true;
  }

 private:
  Grade box_;
  std::map<Grade, PochFraction> coeffs_;  // nonzero coefficients only
};

using BigradedSeries = GradedSeries<Bigrade>;
using DimGradedSeries = GradedSeries<DimVector>;

// Classical logarithm sum_{k>=1} (-1)^{k+1} (A-1)^k / k. Requires constant
// term 1. Powers die once k exceeds the box, so the loop is finite.
template <class Grade>
GradedSeries<Grade> log_series(const GradedSeries<Grade>& a) {
  if (!a.coeff(Grade{}).is_one())
    throw BadConstantTerm("log_series: constant term must be 1");
  GradedSeries<Grade> b = a;
  b.set_coeff(Grade{}, PochFraction{});
  GradedSeries<Grade> out = b;
  GradedSeries<Grade> power = b;
  for (int k = 2;; ++k) {
    power = power * b;
    if (power.is_zero()) break;
    out += power.scaled(rational(k % 2 ? 1 : -1, k));
  }
  return out;
}

// Classical exponential of a series with zero constant term.
template <class Grade>
GradedSeries<Grade> exp_series(const GradedSeries<Grade>& a) {
  if (!a.coeff(Grade{}).is_zero())
    throw BadConstantTerm("exp_series: constant term must be 0");
  GradedSeries<Grade> out = GradedSeries<Grade>::one(a.box());
  GradedSeries<Grade> term = GradedSeries<Grade>::one(a.box());
  for (int k = 1;; ++k) {
    term = (term * a).scaled(rational(1, k));
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

template <class Grade>
GradedSeries<Grade> plethystic_log(const GradedSeries<Grade>& a) {
  GradedSeries<Grade> ln = log_series(a);
  GradedSeries<Grade> out(a.box());
  const int cap = adams_cap(a.box());
  for (int n = 1; n <= cap; ++n) {
    GradedSeries<Grade> t = ln.adams(n);
    if (t.is_zero()) break;  // surviving grades only shrink as n grows
    const int mu = mobius(n);
    if (mu != 0) out += t.scaled(rational(mu, n));
  }
  return out;
}

template <class Grade>
GradedSeries<Grade> plethystic_exp(const GradedSeries<Grade>& f) {
  if (!f.coeff(Grade{}).is_zero())
    throw BadConstantTerm("plethystic_exp: constant term must be 0");
  GradedSeries<Grade> acc(f.box());
  const int cap = adams_cap(f.box());
  for (int n = 1; n <= cap; ++n) {
    GradedSeries<Grade> t = f.adams(n);
    if (t.is_zero()) break;
    acc += t.scaled(rational(1, n));
  }
  return exp_series(acc);
}

// Keeps exactly the grades of slope theta (positive rank); everything else,
// including the constant term, is dropped.
template <class Grade>
GradedSeries<Grade> ray_restrict(const GradedSeries<Grade>& f,
                                 const Rational& theta) {
  GradedSeries<Grade> out(f.box());
  for (const auto& [g, c] : f.coeffs()) {
    auto slope = grade_slope(g);
    if (slope && *slope == theta) out.set_coeff(g, c);
  }
  return out;
}

// The unique factor of A supported on the slope-theta ray: the product of
// slope_factor over all rays present in the box reproduces A.
template <class Grade>
GradedSeries<Grade> slope_factor(const GradedSeries<Grade>& a,
                                 const Rational& theta) {
  return plethystic_exp(ray_restrict(plethystic_log(a), theta));
}

// All distinct slopes d/r realized by grades in the box (r >= 1), ascending.
inline std::vector<Rational> box_slopes(const Bigrade& box) {
  std::set<Rational> slopes;
  for (int r = 1; r <= box.r; ++r)
    for (int d = 0; d <= box.d; ++d) slopes.insert(rational(d, r));
  return {slopes.begin(), slopes.end()};
}

}  // namespace higgsdt
