#include <doctest.h>

#include <algorithm>
#include <set>

#include "semirep/semigroup.hpp"
#include "testutil.hpp"

using namespace semirep;

TEST_CASE("cayley table validation") {
  SUBCASE("one-element semigroup") {
    const Semigroup s = fromCayleyTable({{0}});
    CHECK(s.n == 1);
    CHECK(s.prod(0, 0) == 0);
  }
  SUBCASE("left-zero is associative") {
    const Semigroup s = fromCayleyTable({{0, 0}, {1, 1}});
    CHECK(s.n == 2);
    CHECK(s.prod(0, 1) == 0);
    CHECK(s.prod(1, 0) == 1);
  }
  SUBCASE("non-associative table is rejected with a witness") {
    // (1*0)*1 = 0*1 = 1 but 1*(0*1) = 1*1 = 0
    CHECK_THROWS_WITH_AS(fromCayleyTable({{0, 1}, {0, 0}}), "NonAssociative: (1,0,1)", Error);
  }
  SUBCASE("range and shape errors") {
    CHECK_THROWS_AS(fromCayleyTable({{0, 2}, {0, 0}}), Error);
    CHECK_THROWS_AS(fromCayleyTable({{0, 0}, {0}}), Error);
    CHECK_THROWS_AS(fromCayleyTable({}), Error);
  }
}

namespace {

// Oracle: all d^d maps on d points.
std::set<std::vector<int>> allMaps(int d) {
  std::set<std::vector<int>> out;
  std::vector<int> m(static_cast<std::size_t>(d), 0);
  while (true) {
    out.insert(m);
    int i = 0;
    for (; i < d; ++i) {
      if (++m[static_cast<std::size_t>(i)] < d) break;
      m[static_cast<std::size_t>(i)] = 0;
    }
    if (i == d) break;
  }
  return out;
}

}  // namespace

TEST_CASE("transformation closure") {
  SUBCASE("identity alone gives the trivial semigroup") {
    const Semigroup s = fromTransformations(2, {{0, 1}});
    CHECK(s.n == 1);
  }
  SUBCASE("T_2 from swap and a constant") {
    const Semigroup s = test::t2();
    CHECK(s.n == 4);
    // closure reaches every map on 2 points
    std::set<std::vector<int>> maps(s.maps.begin(), s.maps.end());
    CHECK(maps == allMaps(2));
    // deterministic breadth-first element order
    CHECK(s.maps[0] == std::vector<int>{1, 0});  // swap
    CHECK(s.maps[1] == std::vector<int>{0, 0});  // constant 0
    CHECK(s.maps[2] == std::vector<int>{0, 1});  // swap*swap = id
    CHECK(s.maps[3] == std::vector<int>{1, 1});  // const0 * swap
    CHECK(s.generators == std::vector<int>{0, 1});
  }
  SUBCASE("T_3 is all 27 maps") {
    const Semigroup s = test::t3();
    CHECK(s.n == 27);
    std::set<std::vector<int>> maps(s.maps.begin(), s.maps.end());
    CHECK(maps == allMaps(3));
  }
  SUBCASE("S_3 from its standard generators") {
    const Semigroup s = test::s3();
    CHECK(s.n == 6);
  }
  SUBCASE("composition is the right action") {
    const Semigroup s = test::t2();
    // (s*t)(x) = t(s(x)): swap then const0 is const0, const0 then swap is const1
    const int swapThenConst = s.prod(0, 1);
    CHECK(s.maps[static_cast<std::size_t>(swapThenConst)] == std::vector<int>{0, 0});
    const int constThenSwap = s.prod(1, 0);
    CHECK(s.maps[static_cast<std::size_t>(constThenSwap)] == std::vector<int>{1, 1});
  }
  SUBCASE("size cap") {
    CHECK_THROWS_WITH_AS(fromTransformations(3, {{1, 0, 2}, {1, 2, 0}, {0, 0, 2}}, 10),
                         "SizeLimitExceeded: closure exceeded cap 10", Error);
  }
  SUBCASE("bad generators") {
    CHECK_THROWS_AS(fromTransformations(2, {}), Error);
    CHECK_THROWS_AS(fromTransformations(2, {{0, 2}}), Error);
    CHECK_THROWS_AS(fromTransformations(2, {{0}}), Error);
  }
}

TEST_CASE("adjoin identity") {
  SUBCASE("trivial semigroup becomes a 2-element monoid") {
    const Semigroup s = adjoinIdentity(test::trivial());
    CHECK(s.n == 2);
    CHECK(s.identityElement() == 1);
    CHECK(s.prod(1, 0) == 0);
    CHECK(s.prod(0, 1) == 0);
  }
  SUBCASE("left-zero gains an identity") {
    const Semigroup s = adjoinIdentity(test::leftZero2());
    CHECK(s.n == 3);
    CHECK(s.identityElement() == 2);
  }
  SUBCASE("T_2 grows to 5 even though it is a monoid") {
    const Semigroup t2 = test::t2();
    CHECK(t2.identityElement() == 2);
    const Semigroup s = adjoinIdentity(t2);
    CHECK(s.n == 5);
    CHECK(s.identityElement().has_value());
  }
}
