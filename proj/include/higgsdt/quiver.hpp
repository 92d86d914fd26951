#pragma once

// The infinite symmetric quiver on vertex set Z whose arrow counts between
// vertices i, j are max{ell + 1 - |i - j|, 0}, together with dimension
// vectors (finite-support maps Z -> N) and their enumeration by rank and
// degree.

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "higgsdt/ring.hpp"

namespace higgsdt {

struct ZeroRank : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite-support map from vertex index (any integer) to a positive
// multiplicity; entries are kept sorted by index with no zeros stored.
class DimVector {
 public:
  DimVector() = default;  // zero vector
  explicit DimVector(std::vector<std::pair<int, int>> entries);

  static DimVector delta(int index, int mult = 1);

  bool is_zero() const { return entries_.empty(); }
  int at(int index) const;
  const std::vector<std::pair<int, int>>& entries() const { return entries_; }

  int rank() const;       // sum of multiplicities
  long long degree() const;  // sum of index * multiplicity
  Rational slope() const;    // degree / rank; throws ZeroRank on rank 0
  DimVector shifted(int k) const;

  friend DimVector operator+(const DimVector&, const DimVector&);
  friend DimVector operator*(int n, const DimVector&);  // n >= 0

  friend auto operator<=>(const DimVector&, const DimVector&) = default;

  std::string to_string() const;  // "1:1,2:1"; empty vector prints "0"

 private:
  std::vector<std::pair<int, int>> entries_;
};

// pointwise m <= bound
bool fits_within(const DimVector& m, const DimVector& bound);

// Parses "index:mult" pairs separated by commas; indices may be negative,
// repeated indices accumulate, zero multiplicities are dropped. Throws
// std::invalid_argument on malformed input.
DimVector parse_dim_vector(std::string_view text);

struct QuiverConfig {
  int ell = 0;  // twist degree; arrow count between i and j is
                // max(ell + 1 - |i - j|, 0)
};

int arrow_count(const QuiverConfig&, int i, int j);

// Euler-Ringel form: sum_i m_i m'_i - sum_{|i-j|<=ell} m_i m'_j
// (ell + 1 - |i - j|). Symmetric and shift-invariant.
long euler_form(const QuiverConfig&, const DimVector& m, const DimVector& m2);

// All dimension vectors supported in [lo, hi] with the given rank and
// degree, sorted lexicographically by their (index, multiplicity) entry
// sequence. Empty if none exist.
std::vector<DimVector> enumerate_dim_vectors(int rank, int degree, int lo,
                                             int hi);

// q-Pochhammer data of Aut(E) for a splitting type m.
PochDenominator poch_denominator(const DimVector& m);

}  // namespace higgsdt
