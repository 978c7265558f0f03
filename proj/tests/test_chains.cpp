#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "esz/bounds.hpp"
#include "esz/chains.hpp"
#include "esz/constructions.hpp"
#include "esz/errors.hpp"

using namespace esz;

namespace {

PointSet make(std::initializer_list<std::pair<long, long>> pts) {
  std::vector<Point> v;
  for (const auto& [x, y] : pts) v.push_back({Rational(x), Rational(y)});
  return PointSet(std::move(v));
}

}  // namespace

TEST_CASE("classify_chain basics") {
  const PointSet cup = make({{0, 0}, {1, 0}, {2, 1}});
  CHECK(classify_chain(cup, {0, 1, 2}) == ChainKind::Cup);
  const PointSet cap = make({{0, 0}, {1, 1}, {2, 0}});
  CHECK(classify_chain(cap, {0, 1, 2}) == ChainKind::Cap);
  // Collinear prefix then a downward turn: Neither (with validation off).
  const PointSet mixed = make({{0, 0}, {1, 1}, {2, 2}, {3, 1}});
  CHECK(classify_chain(mixed, {0, 1, 2, 3}) == ChainKind::Neither);
  CHECK(classify_chain(mixed, {0, 3}) == ChainKind::CupAndCap);
  CHECK(classify_chain(mixed, {2}) == ChainKind::CupAndCap);
  CHECK_THROWS_AS(classify_chain(mixed, {2, 1}), InputError);
}

TEST_CASE("longest cup on an increasing-slope chain is everything") {
  const PointSet s = make({{0, 0}, {1, 0}, {2, 1}, {3, 3}, {4, 6}});
  const ChainSearch r = longest_cup(s);
  CHECK(r.length == 5);
  CHECK(r.witness.indices == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(classify_chain(s, r.witness.indices) == ChainKind::Cup);
}

TEST_CASE("longest cap on a decreasing-slope chain") {
  const PointSet s = make({{0, 0}, {1, 2}, {2, 3}, {3, 3}});
  // slopes 2, 1, 0: a 4-cap
  const ChainSearch r = longest_cap(s);
  CHECK(r.length == 4);
}

TEST_CASE("extremal constructions have the promised chain maxima") {
  const PointSet e44 = cupcap_extremal(4, 4);
  REQUIRE(e44.size() == 6);
  CHECK(longest_cup(e44).length == 3);
  CHECK(longest_cap(e44).length == 3);
  CHECK(brute_force_largest(e44, OracleTarget::Cup) == 3);
  CHECK_FALSE(brute_force_oracle(e44, OracleTarget::Cup, 4));

  const PointSet e54 = cupcap_extremal(5, 4);
  REQUIRE(e54.size() == 10);
  CHECK(longest_cup(e54).length == 4);
  CHECK(longest_cap(e54).length == 3);
  CHECK(brute_force_largest(e54, OracleTarget::Cap) == 3);

  const PointSet es5 = es_lower_bound(5);
  REQUIRE(es5.size() == 8);
  CHECK(longest_cup(es5).length == 4);
  CHECK(brute_force_largest(es5, OracleTarget::Cup) == 4);
}

TEST_CASE("largest convex subset basics") {
  const PointSet quad = make({{0, 0}, {1, 3}, {3, 3}, {4, -1}});
  const ConvexSearch r = largest_convex_subset(quad);
  CHECK(r.size == 4);
  CHECK(r.witness.indices == std::vector<int>{0, 1, 2, 3});

  const PointSet es4 = es_lower_bound(4);
  REQUIRE(es4.size() == 4);
  CHECK(largest_convex_subset(es4).size == 3);
  CHECK(brute_force_largest(es4, OracleTarget::Convex) == 3);
}

TEST_CASE("a cup and a far-away cap in convex position match the oracle") {
  // 3-cup low left, 3-cap high right, arranged so the union is convex.
  const PointSet s = make({{0, 10}, {1, 4}, {2, 0}, {10, 100}, {11, 103}, {12, 104}});
  const int dp = largest_convex_subset(s).size;
  CHECK(dp == brute_force_largest(s, OracleTarget::Convex));
}

TEST_CASE("every k-cup and k-cap is a convex k-gon") {
  for (const auto& s : {cupcap_extremal(5, 5), es_lower_bound(5)}) {
    const ChainSearch cup = longest_cup(s);
    const ChainSearch cap = longest_cap(s);
    if (cup.length >= 3) CHECK(is_convex_position(s, cup.witness.indices));
    if (cap.length >= 3) CHECK(is_convex_position(s, cap.witness.indices));
  }
}

TEST_CASE("detectors agree with the exhaustive oracle on random sets") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const PointSet s = random_point_set(4 + static_cast<int>(seed % 9), derive_seed(2024, seed));
    CHECK(longest_cup(s).length == brute_force_largest(s, OracleTarget::Cup));
    CHECK(longest_cap(s).length == brute_force_largest(s, OracleTarget::Cap));
    CHECK(largest_convex_subset(s).size == brute_force_largest(s, OracleTarget::Convex));
  }
}

TEST_CASE("witnesses are valid and lexicographically smallest") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PointSet s = random_point_set(9, derive_seed(77, seed));
    const ChainSearch cup = longest_cup(s);
    REQUIRE(static_cast<int>(cup.witness.indices.size()) == cup.length);
    if (cup.length > 2) CHECK(classify_chain(s, cup.witness.indices) == ChainKind::Cup);
    const ConvexSearch cx = largest_convex_subset(s);
    REQUIRE(static_cast<int>(cx.witness.indices.size()) == cx.size);
    CHECK(is_convex_position(s, cx.witness.indices));
  }
  // Lexicographic tie-break: two disjoint 3-cups, the left one wins.
  const PointSet s = make({{0, 0}, {1, 0}, {2, 1}, {10, 0}, {11, 0}, {12, 1}});
  CHECK(longest_cup(s).witness.indices == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("reflection duality") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const PointSet s = random_point_set(4 + static_cast<int>(seed % 8), derive_seed(555, seed));
    const PointSet r = reflect_y(s);
    CHECK(longest_cap(s).length == longest_cup(r).length);
    CHECK(longest_cup(s).length == longest_cap(r).length);
  }
}

TEST_CASE("monotonicity: adding a point never decreases the maxima") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PointSet s = random_point_set(10, derive_seed(31337, seed));
    std::vector<Point> fewer(s.points().begin(), s.points().end() - 1);
    const PointSet t(std::move(fewer));
    CHECK(longest_cup(s).length >= longest_cup(t).length);
    CHECK(longest_cap(s).length >= longest_cap(t).length);
    CHECK(largest_convex_subset(s).size >= largest_convex_subset(t).size);
  }
}

TEST_CASE("a 3-point set is a cup xor a cap") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const PointSet s = random_point_set(3, derive_seed(9000, seed));
    const bool cup = brute_force_oracle(s, OracleTarget::Cup, 3);
    const bool cap = brute_force_oracle(s, OracleTarget::Cap, 3);
    CHECK(cup != cap);
  }
}

TEST_CASE("pigeonhole: sets one above f(n,m) contain an n-cup or m-cap") {
  int checked = 0;
  for (int n = 3; n <= 5; ++n)
    for (int m = 3; m <= 5; ++m)
      for (std::uint64_t rep = 0; rep < 30; ++rep) {
        const Integer size = f_cupcap(n, m) + 1;
        const PointSet s =
            random_point_set(static_cast<int>(size), derive_seed(42 + n * 10 + m, rep));
        const bool found = longest_cup(s).length >= n || longest_cap(s).length >= m;
        CHECK(found);
        ++checked;
      }
  CHECK(checked == 270);
}

TEST_CASE("oracle size guard") {
  const PointSet s = random_point_set(25, 99);
  CHECK_THROWS_WITH_AS(brute_force_oracle(s, OracleTarget::Cup, 4), doctest::Contains("guard"), InputError);
  CHECK_NOTHROW(brute_force_oracle(s, OracleTarget::Cup, 4, 30));
}
