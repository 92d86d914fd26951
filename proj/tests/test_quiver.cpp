#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "higgsdt/quiver.hpp"

using namespace higgsdt;

namespace {

DimVector dv(std::initializer_list<std::pair<int, int>> entries) {
  return DimVector(std::vector<std::pair<int, int>>(entries));
}

// independent oracle: partitions of d into exactly r parts
long partition_count(int d, int r) {
  static std::map<std::pair<int, int>, long> memo;
  if (r == 0) return d == 0 ? 1 : 0;
  if (d < r) return 0;
  const auto key = std::make_pair(d, r);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const long value = partition_count(d - 1, r - 1) + partition_count(d - r, r);
  memo.emplace(key, value);
  return value;
}

DimVector random_vec(std::mt19937& rng) {
  std::uniform_int_distribution<int> nent(0, 3), idx(-2, 3), mult(1, 3);
  std::vector<std::pair<int, int>> entries;
  const int n = nent(rng);
  for (int i = 0; i < n; ++i) entries.emplace_back(idx(rng), mult(rng));
  return DimVector(entries);
}

}  // namespace

TEST_CASE("dimension vector basics") {
  const DimVector m = dv({{1, 1}, {2, 1}});
  CHECK(m.rank() == 2);
  CHECK(m.degree() == 3);
  CHECK(m.slope() == rational(3, 2));
  CHECK(dv({{5, 2}}).slope() == rational(5));
  CHECK(dv({{-1, 1}, {1, 1}}).slope() == rational(0));
  CHECK_THROWS_AS(DimVector{}.slope(), ZeroRank);
  CHECK(dv({{1, 0}, {2, 3}}) == dv({{2, 3}}));  // zero entries dropped
  CHECK(dv({{1, 1}, {1, 2}}) == dv({{1, 3}}));  // duplicates accumulate
  CHECK(m.at(1) == 1);
  CHECK(m.at(7) == 0);
}

TEST_CASE("shift") {
  const DimVector m = dv({{1, 1}, {2, 1}});
  CHECK(m.shifted(1) == dv({{2, 1}, {3, 1}}));
  CHECK(m.shifted(0) == m);
  CHECK(m.shifted(2).shifted(-2) == m);
  CHECK(m.shifted(1).rank() == m.rank());
  CHECK(m.shifted(1).degree() == m.degree() + m.rank());
}

TEST_CASE("dimension vector parsing") {
  CHECK(parse_dim_vector("1:1,2:1") == dv({{1, 1}, {2, 1}}));
  CHECK(parse_dim_vector("-1:2") == dv({{-1, 2}}));
  CHECK(parse_dim_vector("2:1, 1:1") == dv({{1, 1}, {2, 1}}));
  CHECK(parse_dim_vector("1:1,1:2") == dv({{1, 3}}));
  CHECK(parse_dim_vector("3:0") == DimVector{});
  CHECK_THROWS_AS(parse_dim_vector("1:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dim_vector(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_dim_vector("1:1,,2:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dim_vector("1:-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dim_vector("1"), std::invalid_argument);
  CHECK(parse_dim_vector(dv({{-1, 2}, {4, 1}}).to_string()) ==
        dv({{-1, 2}, {4, 1}}));
}

TEST_CASE("arrow counts") {
  CHECK(arrow_count({1}, 0, 0) == 2);
  CHECK(arrow_count({1}, 1, 3) == 0);
  CHECK(arrow_count({3}, 5, 7) == 2);
  CHECK(arrow_count({0}, 2, 2) == 1);
  CHECK(arrow_count({2}, 4, 2) == arrow_count({2}, 2, 4));
}

TEST_CASE("euler form values") {
  const QuiverConfig q1{1};
  CHECK(euler_form(q1, dv({{1, 1}}), dv({{1, 1}})) == -1);
  CHECK(euler_form(q1, dv({{1, 1}, {2, 1}}), dv({{1, 1}, {2, 1}})) == -4);
  for (int ell = 0; ell <= 4; ++ell)
    CHECK(euler_form({ell}, dv({{2, 1}}), dv({{2, 1}})) == -ell);
  CHECK(euler_form(q1, dv({{1, 1}}), dv({{3, 1}})) == 0);
}

TEST_CASE("euler form is symmetric, shift invariant and bilinear") {
  std::mt19937 rng(23);
  for (int ell = 0; ell <= 3; ++ell) {
    const QuiverConfig q{ell};
    for (int i = 0; i < 20; ++i) {
      const DimVector a = random_vec(rng), b = random_vec(rng),
                      c = random_vec(rng);
      CHECK(euler_form(q, a, b) == euler_form(q, b, a));
      CHECK(euler_form(q, a.shifted(2), b.shifted(2)) == euler_form(q, a, b));
      CHECK(euler_form(q, a + c, b) ==
            euler_form(q, a, b) + euler_form(q, c, b));
    }
  }
}

TEST_CASE("enumeration of dimension vectors") {
  CHECK(enumerate_dim_vectors(2, 3, 1, 3) ==
        std::vector<DimVector>{dv({{1, 1}, {2, 1}})});
  CHECK(enumerate_dim_vectors(2, 4, 1, 4) ==
        std::vector<DimVector>{dv({{1, 1}, {3, 1}}), dv({{2, 2}})});
  CHECK(enumerate_dim_vectors(2, 1, 1, 10).empty());
  CHECK(enumerate_dim_vectors(3, 3, 1, 3) ==
        std::vector<DimVector>{dv({{1, 3}})});
  SUBCASE("windows with nonpositive support") {
    // {-1:1,5:1} would also have rank 2 and degree 4 but 5 lies outside
    const auto vecs = enumerate_dim_vectors(2, 4, -1, 4);
    CHECK(vecs == std::vector<DimVector>{dv({{0, 1}, {4, 1}}),
                                         dv({{1, 1}, {3, 1}}), dv({{2, 2}})});
  }
}

TEST_CASE("enumeration counts match the partition recurrence") {
  for (int r = 1; r <= 8; ++r)
    for (int d = 1; d <= 40; ++d)
      CHECK(static_cast<long>(enumerate_dim_vectors(r, d, 1, d).size()) ==
            partition_count(d, r));
}

TEST_CASE("enumeration output is sorted and free of duplicates") {
  const auto vecs = enumerate_dim_vectors(4, 12, -2, 12);
  for (std::size_t i = 1; i < vecs.size(); ++i) CHECK(vecs[i - 1] < vecs[i]);
  for (const DimVector& m : vecs) {
    CHECK(m.rank() == 4);
    CHECK(m.degree() == 12);
  }
}
