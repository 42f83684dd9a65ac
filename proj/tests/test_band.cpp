#include <doctest.h>

#include <random>

#include "semirep/band.hpp"
#include "semirep/cmp.hpp"
#include "testutil.hpp"

using namespace semirep;

TEST_CASE("band recognition") {
  CHECK(isBand(test::leftZero2()));
  CHECK(isBand(test::rightZero2()));
  CHECK(isBand(test::chain2()));
  CHECK(isBand(test::rectBand(2, 3)));
  CHECK(isBand(test::freeBand2()));
  CHECK(!isBand(test::c2()));
  CHECK(!isBand(test::t2()));  // swap squared is the identity, not swap
  CHECK(!isBand(test::daNonBand()));
}

TEST_CASE("complement closure") {
  SUBCASE("bands: every J-class") {
    for (const Semigroup& s :
         {test::leftZero2(), test::chain2(), test::rectBand(2, 2), test::freeBand2()}) {
      const GreenStructure g = greenStructure(s);
      for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j)
        CHECK(complementClosedCheck(s, g, j));
    }
  }
  SUBCASE("2-chain semilattice, top class") {
    const Semigroup s = test::chain2();
    const GreenStructure g = greenStructure(s);
    CHECK(complementClosedCheck(s, g, 1));
  }
  SUBCASE("T_2 is not a band but its top complement is closed") {
    const Semigroup s = test::t2();
    const GreenStructure g = greenStructure(s);
    CHECK(complementClosedCheck(s, g, 0));
  }
}

TEST_CASE("band irreducibles by the closed formula") {
  std::mt19937_64 rng(23);
  ChopConfig cfg;
  const Field q = Field::rational();
  SUBCASE("left-zero: one representation, constantly one") {
    const Semigroup s = test::leftZero2();
    const GreenStructure g = greenStructure(s);
    const auto reps = bandIrreducibles<Rat>(s, g, q);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].second.actions[0](0, 0) == makeRat(1));
    CHECK(reps[0].second.actions[1](0, 0) == makeRat(1));
  }
  SUBCASE("2-chain semilattice: the two indicator representations") {
    const Semigroup s = test::chain2();
    const GreenStructure g = greenStructure(s);
    const auto reps = bandIrreducibles<Rat>(s, g, q);
    REQUIRE(reps.size() == 2);
    // J-class 0 = {0}: everything maps to 1; J-class 1 = {1}: 0 maps to 0
    CHECK(reps[0].second.actions[0](0, 0) == makeRat(1));
    CHECK(reps[0].second.actions[1](0, 0) == makeRat(1));
    CHECK(reps[1].second.actions[0](0, 0) == makeRat(0));
    CHECK(reps[1].second.actions[1](0, 0) == makeRat(1));
  }
  SUBCASE("rectangular bands: a single constant-one representation") {
    const Semigroup s = test::rectBand(2, 2);
    const GreenStructure g = greenStructure(s);
    const auto reps = bandIrreducibles<Rat>(s, g, q);
    REQUIRE(reps.size() == 1);
    for (int x = 0; x < s.n; ++x) CHECK(reps[0].second.actions[static_cast<std::size_t>(x)](0, 0) == makeRat(1));
  }
  SUBCASE("rejects non-bands") {
    const Semigroup s = test::c2();
    const GreenStructure g = greenStructure(s);
    CHECK_THROWS_AS(bandIrreducibles<Rat>(s, g, q), Error);
  }
  SUBCASE("count equals the J-class count in every characteristic") {
    for (const Semigroup& s : {test::leftZero2(), test::rightZero2(), test::chain2(),
                               test::rectBand(2, 3), test::freeBand2()}) {
      const GreenStructure g = greenStructure(s);
      CHECK(bandIrreducibles<Rat>(s, g, q).size() == g.jClasses.size());
      for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
        CHECK(bandIrreducibles<Fp>(s, g, Field::prime(p)).size() == g.jClasses.size());
    }
  }
  SUBCASE("formula representations are multiplicative, simple, and have the right apex") {
    const Semigroup s = test::freeBand2();
    const GreenStructure g = greenStructure(s);
    CHECK(g.jClasses.size() == 3);  // {a}, {b}, and the four two-letter words
    const auto reps = bandIrreducibles<Rat>(s, g, q);
    for (const auto& [j, rep] : reps) {
      CHECK(isMultiplicative(s, rep));
      CHECK(apexOf<Rat>(rep, s, g) == j);
      auto r = isSimple<Rat>(Actions<Rat>(rep.actions), 1, q, SimplicityMode::Sampled, rng,
                             cfg.randomVectorTries);
      CHECK(r.verdict != Simplicity::NotSimple);
    }
  }
}

TEST_CASE("every J-class of a band is a subsemigroup") {
  for (const Semigroup& s : {test::leftZero2(), test::rightZero2(), test::chain2(),
                             test::rectBand(2, 2), test::rectBand(2, 3), test::freeBand2()}) {
    const GreenStructure g = greenStructure(s);
    for (const auto& cls : g.jClasses)
      for (int a : cls)
        for (int b : cls)
          CHECK(g.jOf[static_cast<std::size_t>(s.prod(a, b))] ==
                g.jOf[static_cast<std::size_t>(a)]);
  }
}

TEST_CASE("DA membership") {
  const GreenStructure gBand = greenStructure(test::freeBand2());
  CHECK(isInDA(test::freeBand2(), gBand));
  const GreenStructure gChain = greenStructure(test::chain2());
  CHECK(isInDA(test::chain2(), gChain));
  const GreenStructure gDa = greenStructure(test::daNonBand());
  CHECK(isInDA(test::daNonBand(), gDa));
  const GreenStructure gT2 = greenStructure(test::t2());
  CHECK(!isInDA(test::t2(), gT2));  // S_2 is a nontrivial subgroup
  const GreenStructure gC2 = greenStructure(test::c2());
  CHECK(!isInDA(test::c2(), gC2));
}

TEST_CASE("DA irreducibles on the non-band example") {
  const Semigroup s = test::daNonBand();
  const GreenStructure g = greenStructure(s);
  std::mt19937_64 rng(29);
  ChopConfig cfg;
  SUBCASE("one representation per regular J-class, matching the pipeline") {
    for (std::uint64_t p : {2ull, 5ull}) {
      const Field f = Field::prime(p);
      const auto reps = daIrreducibles<Fp>(s, g, f);
      CHECK(reps.size() == 2);  // regular classes: {1} and {0}
      const auto pipeline = allIrreducibles<Fp>(s, g, f, cfg, rng);
      CHECK(pipeline.size() == reps.size());
      // chop-oracle count agrees
      const auto oracle = chop<Fp>(regularSModule<Fp>(s, f), cfg, rng);
      CHECK(oracle.distinctSimpleCount() == static_cast<int>(reps.size()));
      for (const auto& [j, rep] : reps) {
        CHECK(isMultiplicative(s, rep));
        CHECK(apexOf<Fp>(rep, s, g) == j);
      }
    }
  }
  SUBCASE("trivial monoid has one representation") {
    const Semigroup t = test::trivial();
    const GreenStructure gt = greenStructure(t);
    CHECK(daIrreducibles<Rat>(t, gt, Field::rational()).size() == 1);
  }
  SUBCASE("2-chain semilattice has two") {
    const Semigroup t = test::chain2();
    const GreenStructure gt = greenStructure(t);
    CHECK(daIrreducibles<Rat>(t, gt, Field::rational()).size() == 2);
  }
  SUBCASE("rejects semigroups outside DA") {
    const Semigroup t = test::t2();
    const GreenStructure gt = greenStructure(t);
    CHECK_THROWS_AS(daIrreducibles<Rat>(t, gt, Field::rational()), Error);
  }
}
