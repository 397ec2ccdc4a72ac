#include <algorithm>
#include <vector>

#include "doctest.h"
#include "probgroup/fusion.hpp"
#include "probgroup/quotient.hpp"
#include "test_util.hpp"

using namespace probgroup;
using testutil::loadPg;
using testutil::loadRing;

namespace {

ProbabilityGroup ringPg(const char* name) {
  return toProbabilityGroup(loadRing(name));
}

bool containsSet(const std::vector<std::vector<int>>& sets,
                 const std::vector<int>& want) {
  return std::find(sets.begin(), sets.end(), want) != sets.end();
}

}  // namespace

TEST_CASE("subhypergroup enumeration on cyclic 4") {
  ProbabilityGroup P = ringPg("z4.fusion.json");
  auto subs = findSubHypergroups(P);
  REQUIRE(subs.size() == 3);
  CHECK(containsSet(subs, {0}));
  CHECK(containsSet(subs, {0, 2}));
  CHECK(containsSet(subs, {0, 1, 2, 3}));
}

TEST_CASE("subhypergroup enumeration on the S3 structures") {
  // representation ring: trivial, the order-2 grading {1, sgn}, everything
  ProbabilityGroup R = ringPg("s3rep.fusion.json");
  auto rsubs = findSubHypergroups(R);
  REQUIRE(rsubs.size() == 3);
  CHECK(containsSet(rsubs, {0}));
  CHECK(containsSet(rsubs, {0, 1}));
  CHECK(containsSet(rsubs, {0, 1, 2}));

  // class hypergroup: trivial, {identity, 3-cycles} (the normal subgroup),
  // everything; the transposition class generates the whole structure
  ProbabilityGroup C = loadPg("s3class.probgroup.json");
  auto csubs = findSubHypergroups(C);
  REQUIRE(csubs.size() == 3);
  CHECK(containsSet(csubs, {0}));
  CHECK(containsSet(csubs, {0, 2}));
  CHECK(containsSet(csubs, {0, 1, 2}));
}

TEST_CASE("membership validation catches specific failures") {
  ProbabilityGroup P = ringPg("z4.fusion.json");

  SUBCASE("not closed under products") {
    ValidationReport rep = validateSubHypergroup(P, {0, 1});
    CHECK_FALSE(rep.allPass());
    bool closureFailed = false;
    for (const Check& c : rep.checks)
      if (c.name == "closed-under-products" && !c.pass) closureFailed = true;
    CHECK(closureFailed);
  }
  SUBCASE("missing unit") {
    ValidationReport rep = validateSubHypergroup(P, {2});
    CHECK_FALSE(rep.allPass());
  }
  SUBCASE("not closed under duals") {
    // {0, 1} in cyclic 4 also fails dual closure since 1* = 3
    ValidationReport rep = validateSubHypergroup(P, {0, 1});
    bool dualFailed = false;
    for (const Check& c : rep.checks)
      if (c.name == "closed-under-duals" && !c.pass) dualFailed = true;
    CHECK(dualFailed);
  }
  SUBCASE("valid subgroup passes") {
    CHECK(validateSubHypergroup(P, {0, 2}).allPass());
  }
}

TEST_CASE("cyclic 4 modulo its order-2 subgroup is cyclic 2") {
  ProbabilityGroup P = ringPg("z4.fusion.json");
  QuotientHypergroup Q = quotient(P, {0, 2});

  REQUIRE(Q.pg.rank == 2);
  CHECK(Q.classes[0] == std::vector<int>{0, 2});
  CHECK(Q.classes[1] == std::vector<int>{1, 3});
  CHECK(Q.classOf == std::vector<int>{0, 1, 0, 1});

  CHECK(Q.pg.p(1, 1, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(Q.pg.p(1, 1, 1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(Q.pg.h(0) == doctest::Approx(1.0));
  CHECK(Q.pg.h(1) == doctest::Approx(1.0));
  CHECK(validateAxioms(Q.pg).allPass());
}

TEST_CASE("representation ring of S3 modulo its grading subgroup") {
  ProbabilityGroup P = ringPg("s3rep.fusion.json");
  QuotientHypergroup Q = quotient(P, {0, 1});

  REQUIRE(Q.pg.rank == 2);
  CHECK(Q.classes[0] == std::vector<int>{0, 1});
  CHECK(Q.classes[1] == std::vector<int>{2});

  // V*V = 1 + sgn + V, so the class of V returns to the unit class with
  // probability 1/4 + 1/4 and stays on itself with probability 1/2
  CHECK(Q.pg.p(1, 1, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(Q.pg.p(1, 1, 1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(Q.pg.h(0) == doctest::Approx(1.0));
  CHECK(Q.pg.h(1) == doctest::Approx(2.0));
  CHECK(validateAxioms(Q.pg).allPass());
}

TEST_CASE("quotient by the trivial subgroup changes nothing") {
  ProbabilityGroup P = ringPg("ising.fusion.json");
  QuotientHypergroup Q = quotient(P, {0});
  REQUIRE(Q.pg.rank == P.rank);
  for (int i = 0; i < P.rank; ++i)
    for (int j = 0; j < P.rank; ++j)
      for (int k = 0; k < P.rank; ++k)
        CHECK(Q.pg.p(i, j, k) == doctest::Approx(P.p(i, j, k)).epsilon(1e-12));
}

TEST_CASE("quotient by everything collapses to a point") {
  ProbabilityGroup P = ringPg("s3rep.fusion.json");
  QuotientHypergroup Q = quotient(P, {0, 1, 2});
  REQUIRE(Q.pg.rank == 1);
  CHECK(Q.pg.p(0, 0, 0) == doctest::Approx(1.0));
  CHECK(Q.pg.nA == doctest::Approx(1.0));
}

TEST_CASE("annihilator picks the characters trivial on the subgroup") {
  ProbabilityGroup P = ringPg("s3rep.fusion.json");
  CharacterTable T = characterTable(P, 12345);

  std::vector<int> annGrading = annihilator(P, T, {0, 1});
  REQUIRE(annGrading.size() == 2);  // matches the rank of the quotient
  CHECK(std::find(annGrading.begin(), annGrading.end(), 0) != annGrading.end());

  std::vector<int> annTrivial = annihilator(P, T, {0});
  CHECK(annTrivial.size() == 3);  // every character kills the trivial subgroup

  std::vector<int> annAll = annihilator(P, T, {0, 1, 2});
  REQUIRE(annAll.size() == 1);
  CHECK(annAll[0] == 0);  // only the augmentation is trivial everywhere
}

TEST_CASE("quotient duality certificate on the bundled structures") {
  struct CaseDef {
    const char* file;
    bool fromRing;
    std::vector<int> members;
  };
  for (const CaseDef& cd :
       {CaseDef{"z4.fusion.json", true, {0, 2}},
        CaseDef{"s3rep.fusion.json", true, {0, 1}},
        CaseDef{"s3class.probgroup.json", false, {0, 2}}}) {
    CAPTURE(cd.file);
    ProbabilityGroup P =
        cd.fromRing ? ringPg(cd.file) : loadPg(cd.file);
    CharacterTable T = characterTable(P, 12345);
    QuotientDualityReport rep = verifyQuotientDuality(P, T, cd.members, 12345);

    const Check* bad = rep.checks.firstFailure();
    CHECK_MESSAGE(rep.checks.allPass(),
                  cd.file << ": " << (bad ? bad->name : ""));
    CHECK(static_cast<int>(rep.annihilatorSet.size()) == rep.Q.pg.rank);
    // the row map is a bijection onto the quotient characters
    std::vector<int> sorted = rep.rowMap;
    std::sort(sorted.begin(), sorted.end());
    for (int j = 0; j < static_cast<int>(sorted.size()); ++j)
      CHECK(sorted[j] == j);
  }
}

TEST_CASE("quotient rejects out-of-range or malformed member sets") {
  ProbabilityGroup P = ringPg("z4.fusion.json");
  CHECK_THROWS_AS(quotient(P, {0, 7}), InputError);
  CHECK_THROWS_AS(quotient(P, {-1, 0}), InputError);
  // a non-closed set cannot be quotiented by
  CHECK_THROWS_AS(quotient(P, {0, 1}), CheckError);
}
