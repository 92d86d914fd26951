#include "higgsdt/invariants.hpp"

#include <numeric>
#include <utility>

namespace higgsdt {

namespace {

LaurentPoly v_minus_v_inverse() {
  LaurentPoly p = LaurentPoly::monomial(1, 1);
  p += LaurentPoly::monomial(-1, -1);
  return p;
}

// All m' with 0 <= m' <= bound pointwise, including the zero vector.
template <class F>
void for_each_subvector(const DimVector& bound, F&& fn) {
  const auto& entries = bound.entries();
  std::vector<std::pair<int, int>> current(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k)
    current[k] = {entries[k].first, 0};
  while (true) {
    fn(DimVector(current));
    std::size_t k = 0;
    while (k < current.size() && current[k].second == entries[k].second)
      current[k++].second = 0;
    if (k == current.size()) break;
    ++current[k].second;
  }
}

}  // namespace

PochFraction quiver_count(const QuiverConfig& q, const DimVector& m) {
  if (m.is_zero()) return PochFraction::one();
  const long chi = euler_form(q, m, m);
  PochDenominator poch = poch_denominator(m);
  // 1 / unit is again a monomial; fold it into the numerator together with
  // the sign (-1)^chi.
  const int unit_exp = poch.unit.min_exp();
  const Rational sign = (chi % 2 == 0) ? 1 : -1;
  LaurentPoly num =
      LaurentPoly::monomial(sign, static_cast<int>(-chi) - unit_exp);
  return PochFraction(std::move(num), std::move(poch.factors));
}

PochFraction positive_higgs_count(const QuiverConfig& q, int r, int d) {
  if (r < 1 || d < 1) return {};
  std::vector<PochFraction> terms;
  for (const DimVector& m : enumerate_dim_vectors(r, d, 1, d))
    terms.push_back(quiver_count(q, m));
  return poch_sum(terms);
}

BigradedSeries positive_higgs_series(const PipelineConfig& cfg) {
  BigradedSeries s = BigradedSeries::one({cfg.rmax, cfg.dmax});
  for (int r = 1; r <= cfg.rmax; ++r)
    for (int d = r; d <= cfg.dmax; ++d)  // no splitting type below d = r
      s.set_coeff({r, d}, positive_higgs_count(cfg.quiver, r, d));
  return s;
}

BigradedSeries positive_higgs_log(const PipelineConfig& cfg) {
  return plethystic_log(positive_higgs_series(cfg));
}

LaurentPoly dt_extract(const PochFraction& log_coeff) {
  LaurentPoly cleared =
      log_coeff.num_scaled(v_minus_v_inverse()).to_laurent();
  // rewrite in w = -v:  Omega(w) = -cleared(-w)
  LaurentPoly out;
  for (const auto& [e, c] : cleared.terms())
    out += LaurentPoly::monomial(e % 2 == 0 ? Rational(-c) : c, e);
  return out;
}

LaurentPoly higgs_dt_positive(const BigradedSeries& log_series, int r, int d) {
  if (r < 1 || d < 1)
    throw std::invalid_argument("positive-side invariants need r, d >= 1");
  if (!grade_within({r, d}, log_series.box()))
    throw std::out_of_range("(r, d) outside the computed box");
  return dt_extract(log_series.coeff({r, d}));
}

LaurentPoly higgs_dt_positive(const PipelineConfig& cfg, int r, int d) {
  return higgs_dt_positive(positive_higgs_log(cfg), r, d);
}

int stable_degree(const QuiverConfig& q, int r, int d) {
  if (r < 1) throw std::invalid_argument("rank must be positive");
  const long threshold = static_cast<long>(q.ell) * r * (r - 1) / 2;
  if (d > threshold) return d;
  const long deficit = threshold + 1 - d;
  const long k = (deficit + r - 1) / r;
  return static_cast<int>(d + k * r);
}

int preferred_table_degree(const QuiverConfig& q, int r) {
  if (r < 1) throw std::invalid_argument("rank must be positive");
  const int base = q.ell * r * (r - 1) / 2 + 1;
  for (int d = base; d < base + r; ++d)
    if (std::gcd(r, d) == 1) return d;
  return base;
}

OmegaValue higgs_dt(const QuiverConfig& q, int r, int d) {
  const int dn = stable_degree(q, r, d);
  PipelineConfig cfg{q, r, dn};
  return {q.ell, r, dn, higgs_dt_positive(cfg, r, dn)};
}

LaurentPoly quiver_dt(const QuiverConfig& q, const DimVector& m) {
  if (m.is_zero()) return {};
  DimGradedSeries a(m);
  for_each_subvector(m, [&](const DimVector& sub) {
    a.set_coeff(sub, quiver_count(q, sub));
  });
  return dt_extract(plethystic_log(a).coeff(m));
}

PochFraction semistable_count(const PipelineConfig& cfg, int r, int d) {
  if (r < 1 || d < 1)
    throw std::invalid_argument("semistable_count needs r, d >= 1");
  BigradedSeries a = positive_higgs_series(cfg);
  return slope_factor(a, rational(d, r)).coeff({r, d});
}

QuiverSumCheck check_quiver_sum(const PipelineConfig& cfg) {
  const QuiverConfig& q = cfg.quiver;
  const int r = cfg.rmax, d = cfg.dmax;
  if (r < 1) throw std::invalid_argument("rank must be positive");
  const long threshold = static_cast<long>(q.ell) * r * (r - 1) / 2;
  if (d <= threshold)
    throw std::invalid_argument(
        "degree " + std::to_string(d) + " is not above the stable bound " +
        std::to_string(threshold));
  QuiverSumCheck check;
  check.ell = q.ell;
  check.r = r;
  check.d = d;
  check.higgs_side = higgs_dt_positive(cfg, r, d);
  for (const DimVector& m : enumerate_dim_vectors(r, d, 1, d)) {
    LaurentPoly omega = quiver_dt(q, m);
    check.quiver_sum += omega;
    check.summands.emplace_back(m, std::move(omega));
  }
  check.sum_matches = check.quiver_sum == check.higgs_side;
  check.extras_vanish = true;
  for (const DimVector& m :
       enumerate_dim_vectors(r, d, 1 - cfg.window_margin, d)) {
    if (m.entries().front().first >= 1) continue;  // already counted above
    LaurentPoly omega = quiver_dt(q, m);
    if (!omega.is_zero()) {
      check.extras_vanish = false;
      check.nonvanishing_extras.emplace_back(m, std::move(omega));
    }
  }
  return check;
}

DegreeIndependenceCheck check_degree_independence(
    const QuiverConfig& q, int r, const std::vector<int>& degrees) {
  DegreeIndependenceCheck check;
  check.ell = q.ell;
  check.r = r;
  for (int d : degrees) {
    OmegaValue value = higgs_dt(q, r, d);
    check.rows.push_back({d, value.d, std::move(value.poly)});
  }
  check.all_equal = true;
  for (std::size_t i = 1; i < check.rows.size(); ++i)
    if (!(check.rows[i].poly == check.rows.front().poly))
      check.all_equal = false;
  return check;
}

ShiftInvarianceCheck check_shift_invariance(const QuiverConfig& q,
                                            const DimVector& m) {
  ShiftInvarianceCheck check;
  check.base = quiver_dt(q, m);
  check.shifted = quiver_dt(q, m.shifted(1));
  check.equal = check.base == check.shifted;
  return check;
}

bool check_hn_factorization(const PipelineConfig& cfg) {
  const BigradedSeries a = positive_higgs_series(cfg);
  BigradedSeries product = BigradedSeries::one(a.box());
  for (const Rational& theta : box_slopes(a.box()))
    product = product * slope_factor(a, theta);
  return product == a;
}

}  // namespace higgsdt
