#include "higgsdt/record.hpp"

#include <sstream>

namespace higgsdt {

long long coeff_int64(const Rational& c) {
  if (!is_integer(c))
    throw IntegralityViolation("coefficient " + c.get_str() +
                               " is not an integer");
  const mpz_class& z = c.get_num();
  if (!z.fits_slong_p())
    throw std::overflow_error("coefficient " + z.get_str() +
                              " does not fit in 64 bits");
  return z.get_si();
}

std::string poly_text(const LaurentPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
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

std::string poly_latex(const LaurentPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? "-" : "+");
    }
    if (a != 1 || e == 0) os << a.get_str() << (e != 0 ? "\\," : "");
    if (e != 0) {
      os << var;
      if (e != 1) os << "^{" << e << "}";
    }
  }
  return os.str();
}

nlohmann::ordered_json record_json(const OutputRecord& rec) {
  nlohmann::ordered_json j;
  j["ell"] = rec.ell;
  j["r"] = rec.r;
  j["d"] = rec.d;
  j["kind"] = rec.kind;
  if (rec.dimvec) j["dimvec"] = rec.dimvec->to_string();
  nlohmann::ordered_json poly = nlohmann::ordered_json::array();
  for (auto it = rec.poly.terms().rbegin(); it != rec.poly.terms().rend(); ++it)
    poly.push_back({it->first, coeff_int64(it->second)});
  j["poly"] = std::move(poly);
  j["ms"] = rec.ms;
  return j;
}

OutputRecord record_from_json(const nlohmann::ordered_json& j) {
  OutputRecord rec;
  rec.ell = j.at("ell").get<int>();
  rec.r = j.at("r").get<int>();
  rec.d = j.at("d").get<int>();
  rec.kind = j.at("kind").get<std::string>();
  if (j.contains("dimvec"))
    rec.dimvec = parse_dim_vector(j.at("dimvec").get<std::string>());
  for (const auto& term : j.at("poly")) {
    const int exp = term.at(0).get<int>();
    const long long coeff = term.at(1).get<long long>();
    rec.poly += LaurentPoly::monomial(Rational(static_cast<long>(coeff)), exp);
  }
  rec.ms = j.at("ms").get<double>();
  return rec;
}

}  // namespace higgsdt
