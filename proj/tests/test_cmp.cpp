#include <doctest.h>

#include <random>

#include "semirep/band.hpp"
#include "semirep/cmp.hpp"
#include "testutil.hpp"

using namespace semirep;

namespace {

struct Setup {
  Semigroup sg;
  GreenStructure green;
  ChopConfig cfg;
  std::mt19937_64 rng{17};

  explicit Setup(Semigroup s) : sg(std::move(s)), green(greenStructure(sg)) {}

  JClassData data(int j, std::optional<int> e = std::nullopt) {
    return jclassData(sg, green, j, e);
  }
};

}  // namespace

TEST_CASE("group case: induction and coinduction give V back") {
  Setup su(test::s3());
  const Field f = Field::rational();
  const JClassData jd = su.data(0);
  const MonomialRep rho = rightSchutzenberger(su.sg, jd);
  const MonomialRep lam = leftSchutzenberger(su.sg, jd);
  for (const GModule<Rat>& v : irreducibles<Rat>(su.sg, jd.group, f, su.cfg, su.rng)) {
    SModule<Rat> ind = induce<Rat>(v, jd, rho, su.sg);
    CHECK(ind.dim == v.dim);
    Mat<Rat> n = radicalN<Rat>(ind, jd, v);
    CHECK(n.rows() == 0);
    // restriction of the induced module along e is isomorphic to V
    GModule<Rat> res = restrictionToGroupModule<Rat>(ind, su.sg, jd);
    CHECK(res.dim == v.dim);
    CHECK(!homSpace<Rat>(v, res).empty());
    SModule<Rat> coind = coinduce<Rat>(v, jd, lam, su.sg);
    CHECK(coind.dim == v.dim);
    Mat<Rat> minimal = minimalL<Rat>(coind, jd, v);
    CHECK(minimal.rows() == v.dim);  // the full space
  }
}

TEST_CASE("left-zero semigroup with the trivial module") {
  Setup su(test::leftZero2());
  const Field q = Field::rational();
  const JClassData jd = su.data(0);
  const MonomialRep rho = rightSchutzenberger(su.sg, jd);
  const MonomialRep lam = leftSchutzenberger(su.sg, jd);
  const auto vs = irreducibles<Rat>(su.sg, jd.group, q, su.cfg, su.rng);
  REQUIRE(vs.size() == 1);
  const GModule<Rat>& v = vs[0];

  SModule<Rat> ind = induce<Rat>(v, jd, rho, su.sg);
  CHECK(ind.dim == 1);
  CHECK(ind.actions[0](0, 0) == makeRat(1));
  CHECK(ind.actions[1](0, 0) == makeRat(1));
  CHECK(radicalN<Rat>(ind, jd, v).rows() == 0);

  SModule<Rat> coind = coinduce<Rat>(v, jd, lam, su.sg);
  CHECK(coind.dim == 2);
  Mat<Rat> minimal = minimalL<Rat>(coind, jd, v);
  REQUIRE(minimal.rows() == 1);
  // the image of C = span{(1,1)}
  CHECK(minimal(0, 0) == makeRat(1));
  CHECK(minimal(0, 1) == makeRat(1));

  SModule<Rat> head = simpleFromInduced<Rat>(v, jd, rho, su.sg, su.green, su.cfg, su.rng);
  SModule<Rat> socle = simpleFromCoinduced<Rat>(v, jd, lam, su.sg, su.green, su.cfg, su.rng);
  CHECK(head.dim == 1);
  CHECK(socle.dim == 1);
  CHECK(!homSpace<Rat>(head, socle).empty());
  // the all-ones representation has empty annihilator, apex is the only class
  CHECK(apexOf<Rat>(head, su.sg, su.green) == 0);
}

TEST_CASE("2x2 rectangular band with the trivial module over Q") {
  Setup su(test::rectBand(2, 2));
  const Field q = Field::rational();
  const JClassData jd = su.data(0);
  const MonomialRep rho = rightSchutzenberger(su.sg, jd);
  const MonomialRep lam = leftSchutzenberger(su.sg, jd);
  const auto vs = irreducibles<Rat>(su.sg, jd.group, q, su.cfg, su.rng);
  REQUIRE(vs.size() == 1);
  const GModule<Rat>& v = vs[0];

  // phi(C) is the 2x2 all-ones matrix: rank 1
  Mat<Rat> c = sandwichBlockMatrix<Rat>(jd, v);
  CHECK(c.rows() == 2);
  CHECK(c.cols() == 2);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) CHECK(c(i, j) == makeRat(1));

  SModule<Rat> ind = induce<Rat>(v, jd, rho, su.sg);
  CHECK(ind.dim == 2);
  Mat<Rat> n = radicalN<Rat>(ind, jd, v);
  CHECK(n.rows() == 1);
  SModule<Rat> head = simpleFromInduced<Rat>(v, jd, rho, su.sg, su.green, su.cfg, su.rng);
  CHECK(head.dim == 1);

  SModule<Rat> coind = coinduce<Rat>(v, jd, lam, su.sg);
  CHECK(coind.dim == 2);
  CHECK(minimalL<Rat>(coind, jd, v).rows() == 1);
}

TEST_CASE("T_2 over Q: the three simples by hand") {
  Setup su(test::t2());
  const Field q = Field::rational();
  SUBCASE("rank-2 class with the sign module is one-dimensional") {
    const JClassData jd = su.data(0);
    const MonomialRep rho = rightSchutzenberger(su.sg, jd);
    const auto vs = irreducibles<Rat>(su.sg, jd.group, q, su.cfg, su.rng);
    REQUIRE(vs.size() == 2);
    for (const auto& v : vs) {
      SModule<Rat> head = simpleFromInduced<Rat>(v, jd, rho, su.sg, su.green, su.cfg, su.rng);
      CHECK(head.dim == 1);
      // constants act as zero: they sit in I_J
      CHECK(isZeroMat(head.actions[1]));
      CHECK(isZeroMat(head.actions[3]));
      CHECK(head.actions[2](0, 0) == makeRat(1));
      CHECK(apexOf<Rat>(head, su.sg, su.green) == 0);
    }
  }
  SUBCASE("rank-1 class: induced dim 2, radical dim 1, simple dim 1") {
    const JClassData jd = su.data(1);
    const MonomialRep rho = rightSchutzenberger(su.sg, jd);
    const auto vs = irreducibles<Rat>(su.sg, jd.group, q, su.cfg, su.rng);
    REQUIRE(vs.size() == 1);
    SModule<Rat> ind = induce<Rat>(vs[0], jd, rho, su.sg);
    CHECK(ind.dim == 2);
    CHECK(radicalN<Rat>(ind, jd, vs[0]).rows() == 1);
    SModule<Rat> head = simpleFromInduced<Rat>(vs[0], jd, rho, su.sg, su.green, su.cfg, su.rng);
    CHECK(head.dim == 1);
    CHECK(apexOf<Rat>(head, su.sg, su.green) == 1);
    // nothing annihilates: the constants act as the identity here
    CHECK(head.actions[1](0, 0) == makeRat(1));
  }
}

TEST_CASE("full reports carry consistent dimensions") {
  for (const auto& entry : test::corpus()) {
    CAPTURE(entry.name);
    Setup su(entry.sg);
    const auto reports = allIrreducibles<Rat>(su.sg, su.green, Field::rational(), su.cfg, su.rng);
    for (const auto& r : reports) {
      CHECK(r.simpleDim == r.inducedDim - r.radicalDim);
      CHECK(r.simpleDim == r.minimalDim);
      CHECK(r.isoCheck);
      CHECK(r.simpleDim >= 1);
    }
  }
}

TEST_CASE("counting: T_2 over Q gives 3, T_3 over F_7 gives 6") {
  {
    Setup su(test::t2());
    CHECK(allIrreducibles<Rat>(su.sg, su.green, Field::rational(), su.cfg, su.rng).size() == 3);
  }
  {
    Setup su(test::t3());
    const auto reports = allIrreducibles<Fp>(su.sg, su.green, Field::prime(7), su.cfg, su.rng);
    CHECK(reports.size() == 6);
    // 3 simples at the units, 2 at rank 2, 1 at rank 1
    int byApex[3] = {0, 0, 0};
    for (const auto& r : reports) ++byApex[r.apex];
    const int topJ = su.green.jOf[0];
    CHECK(byApex[topJ] == 3);
  }
  {
    Setup su(test::trivial());
    const auto reports = allIrreducibles<Rat>(su.sg, su.green, Field::rational(), su.cfg, su.rng);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].simpleDim == 1);
  }
}

TEST_CASE("induced and coinduced agree at a 2-dimensional group simple") {
  Setup su(test::t3());
  const Field f7 = Field::prime(7);
  const int topJ = su.green.jOf[0];
  const JClassData jd = su.data(topJ);
  const MonomialRep rho = rightSchutzenberger(su.sg, jd);
  const MonomialRep lam = leftSchutzenberger(su.sg, jd);
  bool saw2dim = false;
  for (const GModule<Fp>& v : irreducibles<Fp>(su.sg, jd.group, f7, su.cfg, su.rng)) {
    if (v.dim != 2) continue;
    saw2dim = true;
    SModule<Fp> head = simpleFromInduced<Fp>(v, jd, rho, su.sg, su.green, su.cfg, su.rng);
    SModule<Fp> socle = simpleFromCoinduced<Fp>(v, jd, lam, su.sg, su.green, su.cfg, su.rng);
    CHECK(head.dim == socle.dim);
    CHECK(!homSpace<Fp>(head, socle).empty());
  }
  CHECK(saw2dim);
}

TEST_CASE("apex detection") {
  Setup su(test::t2());
  const Field q = Field::rational();
  SUBCASE("a module that is not simple may lack an apex") {
    // the regular module of T_2 annihilates nothing, but its annihilator
    // (empty) equals I_{rank-1}, so apexOf still resolves; build a module
    // whose annihilator matches no ideal instead: the zero-action module
    SModule<Rat> z{1, q, std::vector<Mat<Rat>>(4, zeros<Rat>(q, 1, 1))};
    CHECK(!apexOf<Rat>(z, su.sg, su.green).has_value());
  }
  SUBCASE("the band formula representation of a band has the right apex") {
    Setup band(test::chain2());
    for (int j = 0; j < 2; ++j) {
      SModule<Rat> rep = complementIndicatorModule<Rat>(band.sg, band.green, j, q);
      CHECK(apexOf<Rat>(rep, band.sg, band.green) == j);
    }
  }
}

TEST_CASE("radical vectors are annihilated through e_J") {
  Setup su(test::rectBand(2, 3));
  const Field f2 = Field::prime(2);
  const JClassData jd = su.data(0);
  const MonomialRep rho = rightSchutzenberger(su.sg, jd);
  for (const GModule<Fp>& v : irreducibles<Fp>(su.sg, jd.group, f2, su.cfg, su.rng)) {
    SModule<Fp> ind = induce<Fp>(v, jd, rho, su.sg);
    Mat<Fp> n = radicalN<Fp>(ind, jd, v);
    for (int x = 0; x < su.sg.n; ++x) {
      Mat<Fp> image = n * ind.actions[static_cast<std::size_t>(x)] *
                      ind.actions[static_cast<std::size_t>(jd.eJ)];
      CHECK(isZeroMat(image));
    }
  }
}

TEST_CASE("transversal independence") {
  SUBCASE("T_2 rank-1 class, two idempotents") {
    Setup su(test::t2());
    CHECK(transversalIndependenceCheck<Rat>(su.sg, su.green, Field::rational(), 1, su.cfg, su.rng));
    CHECK(transversalIndependenceCheck<Fp>(su.sg, su.green, Field::prime(3), 1, su.cfg, su.rng));
  }
  SUBCASE("2x2 rectangular band, four idempotents") {
    Setup su(test::rectBand(2, 2));
    CHECK(transversalIndependenceCheck<Rat>(su.sg, su.green, Field::rational(), 0, su.cfg, su.rng));
    CHECK(transversalIndependenceCheck<Fp>(su.sg, su.green, Field::prime(2), 0, su.cfg, su.rng));
  }
  SUBCASE("vacuous on a single-idempotent class") {
    Setup su(test::c2());
    CHECK(transversalIndependenceCheck<Rat>(su.sg, su.green, Field::rational(), 0, su.cfg, su.rng));
  }
}

TEST_CASE("rebasing a J-class at another idempotent still works end to end") {
  Setup su(test::t2());
  const Field q = Field::rational();
  const JClassData jd = su.data(1, 3);  // const1 instead of const0
  CHECK(jd.eJ == 3);
  const MonomialRep rho = rightSchutzenberger(su.sg, jd);
  const MonomialRep lam = leftSchutzenberger(su.sg, jd);
  verifyMonomialRep(su.sg, jd, rho);
  verifyMonomialRep(su.sg, jd, lam);
  const auto vs = irreducibles<Rat>(su.sg, jd.group, q, su.cfg, su.rng);
  REQUIRE(vs.size() == 1);
  SModule<Rat> head = simpleFromInduced<Rat>(vs[0], jd, rho, su.sg, su.green, su.cfg, su.rng);
  CHECK(head.dim == 1);
}
