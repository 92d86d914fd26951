#pragma once

// Reference values of the invariants Omega_ell(r) used by the self-test.
// Stored as (exponent, coefficient) pairs in descending exponent order.

#include <utility>
#include <vector>

#include "higgsdt/ring.hpp"

namespace higgsdt {

struct GoldenEntry {
  int ell;
  int r;
  std::vector<std::pair<int, long>> terms;
};

const std::vector<GoldenEntry>& golden_entries();

LaurentPoly golden_poly(const GoldenEntry&);

}  // namespace higgsdt
