#include <doctest.h>

#include "semirep/schutzenberger.hpp"
#include "testutil.hpp"

using namespace semirep;

TEST_CASE("group case: 1x1 matrices, never zero") {
  const Semigroup s = test::c2();
  const GreenStructure g = greenStructure(s);
  const JClassData d = jclassData(s, g, 0);
  const MonomialRep rho = rightSchutzenberger(s, d);
  CHECK(rho.size == 1);
  // T = {identity}, so rho(s) = [s] literally
  CHECK(rho.at(0, 0, 0) == 0);
  CHECK(rho.at(1, 0, 0) == 1);
  verifyMonomialRep(s, d, rho);
  const MonomialRep lam = leftSchutzenberger(s, d);
  CHECK(lam.size == 1);
  CHECK(lam.at(1, 0, 0) == 1);
  verifyMonomialRep(s, d, lam);
}

TEST_CASE("left-zero semigroup") {
  const Semigroup s = test::leftZero2();
  const GreenStructure g = greenStructure(s);
  const JClassData d = jclassData(s, g, 0);
  SUBCASE("right representation is the 1x1 identity constantly") {
    const MonomialRep rho = rightSchutzenberger(s, d);
    CHECK(rho.size == 1);
    CHECK(rho.at(0, 0, 0) == 0);  // a*a = a = e*a
    CHECK(rho.at(1, 0, 0) == 0);  // a*b = a = e*a
    verifyMonomialRep(s, d, rho);
  }
  SUBCASE("left representation has size 2") {
    const MonomialRep lam = leftSchutzenberger(s, d);
    CHECK(lam.size == 2);
    verifyMonomialRep(s, d, lam);
    // a * l maps both transversal elements into the a-orbit: row 0 full
    CHECK(lam.at(0, 0, 0) == 0);
    CHECK(lam.at(0, 0, 1) == 0);
    CHECK(lam.at(0, 1, 0) == -1);
    CHECK(lam.at(0, 1, 1) == -1);
  }
}

TEST_CASE("T_2 rank-1 class") {
  const Semigroup s = test::t2();  // 0 = swap, 1 = const0, 2 = id, 3 = const1
  const GreenStructure g = greenStructure(s);
  const JClassData d = jclassData(s, g, 1);
  const MonomialRep rho = rightSchutzenberger(s, d);
  REQUIRE(rho.size == 2);
  // swap exchanges the two constants: a permutation matrix
  CHECK(rho.at(0, 0, 1) == 1);  // const0 * swap = const1 = e * const1
  CHECK(rho.at(0, 1, 0) == 1);
  CHECK(rho.at(0, 0, 0) == -1);
  // const0 sends both transversal rows to column 0
  CHECK(rho.at(1, 0, 0) == 1);
  CHECK(rho.at(1, 1, 0) == 1);
  CHECK(rho.at(1, 0, 1) == -1);
  verifyMonomialRep(s, d, rho);
  CHECK(isRowMonomial(rho, 0));
  CHECK(isRowMonomial(rho, 1));
}

TEST_CASE("2x2 rectangular band: monomial over the trivial group") {
  const Semigroup s = test::rectBand(2, 2);
  const GreenStructure g = greenStructure(s);
  const JClassData d = jclassData(s, g, 0);
  const MonomialRep rho = rightSchutzenberger(s, d);
  const MonomialRep lam = leftSchutzenberger(s, d);
  CHECK(rho.size == 2);
  CHECK(lam.size == 2);
  verifyMonomialRep(s, d, rho);
  verifyMonomialRep(s, d, lam);
}

TEST_CASE("monomiality, multiplicativity and ideal annihilation, corpus-wide") {
  for (const auto& entry : test::corpus()) {
    CAPTURE(entry.name);
    const GreenStructure g = greenStructure(entry.sg);
    for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
      if (!g.regular[static_cast<std::size_t>(j)]) continue;
      const JClassData d = jclassData(entry.sg, g, j);
      verifyMonomialRep(entry.sg, d, rightSchutzenberger(entry.sg, d));
      verifyMonomialRep(entry.sg, d, leftSchutzenberger(entry.sg, d));
    }
  }
}

TEST_CASE("T_3 units: conjugated regular embedding stays multiplicative") {
  // the transversal element of the top class of T_3 is not the identity,
  // which exercises the t*s = g*t' factorization with t != e
  const Semigroup s = test::t3();
  const GreenStructure g = greenStructure(s);
  const int topJ = g.jOf[0];
  const JClassData d = jclassData(s, g, topJ);
  CHECK(d.nJ() == 1);
  CHECK(d.lTransversal[0] != d.eJ);
  verifyMonomialRep(s, d, rightSchutzenberger(s, d));
  verifyMonomialRep(s, d, leftSchutzenberger(s, d));
}
