#pragma once

// Machine-readable output records for the command line tool. The JSON form
// is canonical: fixed key order, exponents strictly descending, integer
// coefficients; re-parsing and re-serializing is byte-identical.

#include <optional>
#include <string>

#include <json.hpp>

#include "higgsdt/quiver.hpp"
#include "higgsdt/ring.hpp"

namespace higgsdt {

struct OutputRecord {
  int ell = 0;
  int r = 0;
  int d = 0;
  std::string kind;  // "omega_L" | "omega_Q"
  std::optional<DimVector> dimvec;  // set for quiver-side records
  LaurentPoly poly;  // in w, integer coefficients
  double ms = 0.0;   // wall-clock duration of the computation
};

// "w^10 + w^8" style, exponents descending; "0" for the zero polynomial.
std::string poly_text(const LaurentPoly&, const std::string& var = "w");

// "w^{10}+w^{8}" style for table output.
std::string poly_latex(const LaurentPoly&, const std::string& var = "w");

nlohmann::ordered_json record_json(const OutputRecord&);
OutputRecord record_from_json(const nlohmann::ordered_json&);

long long coeff_int64(const Rational&);  // throws on non-integer / overflow

}  // namespace higgsdt
