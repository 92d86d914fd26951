#include "higgsdt/quiver.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

namespace higgsdt {

DimVector::DimVector(std::vector<std::pair<int, int>> entries) {
  std::map<int, long> acc;
  for (const auto& [i, m] : entries) {
    if (m < 0)
      throw std::invalid_argument("dimension vector multiplicity is negative");
    if (m > 0) acc[i] += m;
  }
  entries_.reserve(acc.size());
  for (const auto& [i, m] : acc)
    entries_.emplace_back(i, static_cast<int>(m));
}

DimVector DimVector::delta(int index, int mult) {
  DimVector m;
  if (mult < 0)
    throw std::invalid_argument("dimension vector multiplicity is negative");
  if (mult > 0) m.entries_.emplace_back(index, mult);
  return m;
}

int DimVector::at(int index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const std::pair<int, int>& e, int i) { return e.first < i; });
  return (it != entries_.end() && it->first == index) ? it->second : 0;
}

int DimVector::rank() const {
  int r = 0;
  for (const auto& [i, m] : entries_) r += m;
  return r;
}

long long DimVector::degree() const {
  long long d = 0;
  for (const auto& [i, m] : entries_) d += static_cast<long long>(i) * m;
  return d;
}

Rational DimVector::slope() const {
  const int r = rank();
  if (r == 0) throw ZeroRank("slope of the zero dimension vector");
  Rational x(static_cast<long>(degree()), static_cast<long>(r));
  x.canonicalize();
  return x;
}

DimVector DimVector::shifted(int k) const {
  DimVector out;
  out.entries_.reserve(entries_.size());
  for (const auto& [i, m] : entries_) out.entries_.emplace_back(i + k, m);
  return out;
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  DimVector out;
  auto ia = a.entries_.begin(), ib = b.entries_.begin();
  while (ia != a.entries_.end() || ib != b.entries_.end()) {
    if (ib == b.entries_.end() ||
        (ia != a.entries_.end() && ia->first < ib->first)) {
      out.entries_.push_back(*ia++);
    } else if (ia == a.entries_.end() || ib->first < ia->first) {
      out.entries_.push_back(*ib++);
    } else {
      out.entries_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

DimVector operator*(int n, const DimVector& m) {
  if (n < 0) throw std::invalid_argument("negative multiple of a dimension vector");
  DimVector out;
  if (n == 0) return out;
  out.entries_.reserve(m.entries_.size());
  for (const auto& [i, c] : m.entries_) out.entries_.emplace_back(i, n * c);
  return out;
}

std::string DimVector::to_string() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, m] : entries_) {
    if (!first) os << ",";
    first = false;
    os << i << ":" << m;
  }
  return os.str();
}

bool fits_within(const DimVector& m, const DimVector& bound) {
  for (const auto& [i, c] : m.entries())
    if (c > bound.at(i)) return false;
  return true;
}

DimVector parse_dim_vector(std::string_view text) {
  std::vector<std::pair<int, int>> entries;
  std::size_t pos = 0;
  const auto fail = [&](const std::string& what) {
    throw std::invalid_argument("bad dimension vector \"" + std::string(text) +
                                "\": " + what);
  };
  const auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  const auto parse_int = [&](const char* what) {
    skip_ws();
    int value = 0;
    auto [p, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) fail(std::string("expected ") + what);
    pos = static_cast<std::size_t>(p - text.data());
    skip_ws();
    return value;
  };
  if (text.empty()) fail("empty");
  while (true) {
    const int index = parse_int("an index");
    if (pos >= text.size() || text[pos] != ':') fail("expected ':'");
    ++pos;
    const int mult = parse_int("a multiplicity");
    if (mult < 0) fail("multiplicity is negative");
    entries.emplace_back(index, mult);
    if (pos == text.size()) break;
    if (text[pos] != ',') fail("expected ','");
    ++pos;
  }
  return DimVector(std::move(entries));
}

int arrow_count(const QuiverConfig& q, int i, int j) {
  return std::max(q.ell + 1 - std::abs(i - j), 0);
}

long euler_form(const QuiverConfig& q, const DimVector& m,
                const DimVector& m2) {
  long total = 0;
  for (const auto& [i, mi] : m.entries())
    for (const auto& [j, mj] : m2.entries()) {
      const long pairing = (i == j ? 1 : 0) - arrow_count(q, i, j);
      total += static_cast<long>(mi) * mj * pairing;
    }
  return total;
}

namespace {

void enumerate_rec(int index, int hi, int rank, long degree,
                   std::vector<std::pair<int, int>>& current,
                   std::vector<DimVector>& out) {
  if (rank == 0) {
    if (degree == 0) out.push_back(DimVector(current));
    return;
  }
  if (index > hi) return;
  // remaining parts all lie in [index, hi]
  if (degree < static_cast<long>(rank) * index ||
      degree > static_cast<long>(rank) * hi)
    return;
  for (int k = rank; k >= 0; --k) {
    if (k > 0) current.emplace_back(index, k);
    enumerate_rec(index + 1, hi, rank - k, degree - static_cast<long>(k) * index,
                  current, out);
    if (k > 0) current.pop_back();
  }
}

}  // namespace

std::vector<DimVector> enumerate_dim_vectors(int rank, int degree, int lo,
                                             int hi) {
  std::vector<DimVector> out;
  if (rank < 1 || lo > hi) return out;
  std::vector<std::pair<int, int>> current;
  enumerate_rec(lo, hi, rank, degree, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

PochDenominator poch_denominator(const DimVector& m) {
  std::vector<int> mults;
  mults.reserve(m.entries().size());
  for (const auto& [i, c] : m.entries()) mults.push_back(c);
  return poch_denominator(std::span<const int>(mults));
}

}  // namespace higgsdt
