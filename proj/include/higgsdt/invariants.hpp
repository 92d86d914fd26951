#pragma once

// End-to-end computation of Donaldson-Thomas invariants: stacky counts of
// quiver representations and of positive Higgs bundles on the projective
// line, plethystic extraction of the DT series, degree normalization into
// the stable range, and the structural cross-checks between the bundle and
// quiver sides.
//
// Output convention: the pipeline works in the scaling variable v and
// reports invariants as Laurent polynomials in the motivic weight w = -v.
// For a cleared polynomial p this means Omega(w) = -p(-w).

#include <vector>

#include "higgsdt/quiver.hpp"
#include "higgsdt/ring.hpp"
#include "higgsdt/series.hpp"

namespace higgsdt {

struct PipelineConfig {
  QuiverConfig quiver;
  int rmax = 1;
  int dmax = 1;
  int window_margin = 2;  // how far below vertex 1 vanishing checks look
};

// Stacky count of all representations of dimension vector m:
//   (-1)^{chi(m,m)} v^{-chi(m,m)} / (v^{-2})-Pochhammer of Aut,
// cleared to a signed monomial over the factor multiset.
PochFraction quiver_count(const QuiverConfig&, const DimVector& m);

// Weighted count of positive rank-r degree-d bundles with a twisted
// endomorphism: the finite sum of quiver_count over splitting types
// supported in [1, d]. Zero when no splitting type exists.
PochFraction positive_higgs_count(const QuiverConfig&, int r, int d);

// 1 + sum_{r,d >= 1} positive_higgs_count(r, d) z^r t^d on the box.
BigradedSeries positive_higgs_series(const PipelineConfig&);

// Plethystic log of the positive series; DT invariants are read off its
// coefficients.
BigradedSeries positive_higgs_log(const PipelineConfig&);

// Converts a DT series coefficient into the reported invariant: multiplies
// by (v - v^{-1}), clears denominators, and rewrites in w = -v. Throws
// IntegralityViolation if the result is not an integer Laurent polynomial.
LaurentPoly dt_extract(const PochFraction& log_coeff);

// Positive-side invariant at (r, d) inside the box.
LaurentPoly higgs_dt_positive(const BigradedSeries& log_series, int r, int d);
LaurentPoly higgs_dt_positive(const PipelineConfig&, int r, int d);

// Smallest d' = d + k r (k >= 0) with d' > ell * r (r - 1) / 2.
int stable_degree(const QuiverConfig&, int r, int d);

// Degree used for table rows: the smallest stable-range degree coprime to r
// when one exists among the next r integers (then the invariant has top
// degree ell r^2 + 1 with leading coefficient 1), else the smallest
// stable-range degree.
int preferred_table_degree(const QuiverConfig&, int r);

struct OmegaValue {
  int ell = 0;
  int r = 0;
  int d = 0;  // normalized degree actually used
  LaurentPoly poly;  // in w, integer coefficients
};

// DT invariant of rank r, degree d Higgs bundles; d is shifted into the
// stable range first, the box is sized to exactly (r, d').
OmegaValue higgs_dt(const QuiverConfig&, int r, int d);

// DT invariant of the quiver at dimension vector m, computed on the
// pointwise box [0, m]. Zero for the zero vector.
LaurentPoly quiver_dt(const QuiverConfig&, const DimVector& m);

// Stacky count of semistable objects on the slope-d/r ray: the (r, d)
// coefficient of the slope factor of the positive series.
PochFraction semistable_count(const PipelineConfig&, int r, int d);

// --- consistency checks ------------------------------------------------

// Omega(rmax, dmax) against the sum of quiver invariants over splitting
// types, plus the vanishing of every extra summand when the window is
// extended below vertex 1 by cfg.window_margin. Requires the degree to be
// in the stable range.
struct QuiverSumCheck {
  int ell = 0, r = 0, d = 0;
  LaurentPoly higgs_side;  // Omega(r, d)
  std::vector<std::pair<DimVector, LaurentPoly>> summands;  // window [1, d]
  LaurentPoly quiver_sum;
  std::vector<std::pair<DimVector, LaurentPoly>> nonvanishing_extras;
  bool sum_matches = false;
  bool extras_vanish = false;
  bool ok() const { return sum_matches && extras_vanish; }
};
QuiverSumCheck check_quiver_sum(const PipelineConfig&);

struct DegreeIndependenceCheck {
  int ell = 0, r = 0;
  struct Row {
    int requested_d = 0;
    int used_d = 0;
    LaurentPoly poly;
  };
  std::vector<Row> rows;
  bool all_equal = false;
};
DegreeIndependenceCheck check_degree_independence(const QuiverConfig&, int r,
                                                  const std::vector<int>& degrees);

struct ShiftInvarianceCheck {
  LaurentPoly base;
  LaurentPoly shifted;
  bool equal = false;
};
ShiftInvarianceCheck check_shift_invariance(const QuiverConfig&,
                                            const DimVector& m);

// Product of slope factors over every ray in the box equals the positive
// series (existence and uniqueness of the slope filtration, numerically).
bool check_hn_factorization(const PipelineConfig&);

}  // namespace higgsdt
