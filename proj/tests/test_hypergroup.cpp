#include <algorithm>
#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "probgroup/fusion.hpp"
#include "probgroup/groups.hpp"
#include "probgroup/hypergroup.hpp"
#include "test_util.hpp"

using namespace probgroup;
using testutil::dataPath;
using testutil::loadPg;
using testutil::loadRing;

namespace {

// cyclic point-mass tensor: p(i,j,k) = [i+j == k mod n]
Tensor3<double> cyclicTensor(int n) {
  Tensor3<double> p(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(i, j, (i + j) % n) = 1.0;
  return p;
}

std::vector<int> cyclicDual(int n) {
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) d[i] = (n - i) % n;
  return d;
}

std::vector<std::string> numberedLabels(int n) {
  std::vector<std::string> l(n);
  for (int i = 0; i < n; ++i) l[i] = "g" + std::to_string(i);
  return l;
}

// every bundled structure that normalizes to a commutative probability group
std::vector<std::pair<std::string, ProbabilityGroup>> commutativeFixtures() {
  std::vector<std::pair<std::string, ProbabilityGroup>> out;
  for (const char* name :
       {"z2.fusion.json", "z3.fusion.json", "z4.fusion.json",
        "fib.fusion.json", "ising.fusion.json", "s3rep.fusion.json",
        "d4rep.fusion.json", "q8rep.fusion.json"})
    out.emplace_back(name, toProbabilityGroup(loadRing(name)));
  out.emplace_back("s3class.probgroup.json", loadPg("s3class.probgroup.json"));
  for (const char* name : {"s3.group.json", "d4.group.json", "q8.group.json"}) {
    FiniteGroup G = parseGroup(loadJsonFile(dataPath(name)));
    out.emplace_back(std::string(name) + " classes", classHypergroup(G).pg);
  }
  return out;
}

bool bitwiseEqual(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  return std::memcmp(A.data(), B.data(),
                     sizeof(Complex) * static_cast<size_t>(A.size())) == 0;
}

}  // namespace

TEST_CASE("weights are derived from the unit-return probabilities") {
  ProbabilityGroup Z3 = makeProbabilityGroup(3, numberedLabels(3), 0,
                                             cyclicDual(3), cyclicTensor(3));
  for (int i = 0; i < 3; ++i) CHECK(Z3.h(i) == doctest::Approx(1.0));
  CHECK(Z3.nA == doctest::Approx(3.0));

  ProbabilityGroup S3C = loadPg("s3class.probgroup.json");
  CHECK(S3C.h(0) == doctest::Approx(1.0));
  CHECK(S3C.h(1) == doctest::Approx(3.0));
  CHECK(S3C.h(2) == doctest::Approx(2.0));
  CHECK(S3C.nA == doctest::Approx(6.0));
}

TEST_CASE("a vanishing unit-return probability is rejected") {
  // rank 2 with dual = identity but p(1,1,unit) = 0: the weight of element 1
  // would be infinite
  Tensor3<double> p(2);
  p(0, 0, 0) = 1.0;
  p(0, 1, 1) = 1.0;
  p(1, 0, 1) = 1.0;
  p(1, 1, 1) = 1.0;
  CHECK_THROWS_AS(
      makeProbabilityGroup(2, {"e", "x"}, 0, {0, 1}, std::move(p)),
      InputError);
}

TEST_CASE("axiom checks catch specific corruptions") {
  SUBCASE("broken row sum") {
    Tensor3<double> p = cyclicTensor(3);
    p(1, 1, 2) = 0.9;  // row (1,1) now sums to 0.9
    ProbabilityGroup P = makeProbabilityGroup(3, numberedLabels(3), 0,
                                              cyclicDual(3), std::move(p));
    ValidationReport rep = validateAxioms(P);
    CHECK_FALSE(rep.allPass());
    for (const Check& c : rep.checks)
      if (c.name == "row-sums-one") CHECK_FALSE(c.pass);
  }
  SUBCASE("negative probability") {
    Tensor3<double> p = cyclicTensor(3);
    p(1, 1, 2) = -0.25;
    p(1, 1, 0) = 1.25;
    ProbabilityGroup P = makeProbabilityGroup(3, numberedLabels(3), 0,
                                              cyclicDual(3), std::move(p));
    ValidationReport rep = validateAxioms(P);
    CHECK_FALSE(rep.allPass());
    for (const Check& c : rep.checks)
      if (c.name == "nonnegative-probabilities") CHECK_FALSE(c.pass);
  }
  SUBCASE("wrong dual assignment") {
    ProbabilityGroup P = makeProbabilityGroup(4, numberedLabels(4), 0,
                                              cyclicDual(4), cyclicTensor(4));
    P.dual = {0, 1, 2, 3};  // claims every element is self-dual
    ValidationReport rep = validateAxioms(P);
    CHECK_FALSE(rep.allPass());
    bool dualCheckFailed = false;
    for (const Check& c : rep.checks)
      if (c.name == "dual-involution" && !c.pass) dualCheckFailed = true;
    CHECK(dualCheckFailed);
  }
  SUBCASE("associativity violation") {
    // poison one slice of the cyclic tensor: g1*g1 becomes a coin flip
    // between g0 and g2, which breaks (g1 g1) g2 against g1 (g1 g2)
    Tensor3<double> p = cyclicTensor(3);
    p(1, 1, 2) = 0.5;
    p(1, 1, 0) = 0.5;
    ProbabilityGroup P = makeProbabilityGroup(3, numberedLabels(3), 0,
                                              cyclicDual(3), std::move(p));
    ValidationReport rep = validateAxioms(P);
    CHECK_FALSE(rep.allPass());
    bool assocFailed = false;
    for (const Check& c : rep.checks)
      if (c.name == "associativity" && !c.pass) assocFailed = true;
    CHECK(assocFailed);
  }
}

TEST_CASE("cyclic-3 character table is the discrete Fourier matrix") {
  ProbabilityGroup P = makeProbabilityGroup(3, numberedLabels(3), 0,
                                            cyclicDual(3), cyclicTensor(3));
  CharacterTable T = characterTable(P, 12345);
  const double s = std::sqrt(3.0) / 2.0;

  // row 0 is the augmentation
  for (int a = 0; a < 3; ++a) CHECK(std::abs(T.M(0, a) - 1.0) < 1e-9);
  // canonical order puts the (-1/2 - s*i) value first in row 1
  CHECK(std::abs(T.M(1, 1) - Complex(-0.5, -s)) < 1e-9);
  CHECK(std::abs(T.M(1, 2) - Complex(-0.5, s)) < 1e-9);
  CHECK(std::abs(T.M(2, 1) - Complex(-0.5, s)) < 1e-9);
  CHECK(std::abs(T.M(2, 2) - Complex(-0.5, -s)) < 1e-9);

  CHECK(T.star == std::vector<int>{0, 2, 1});
  for (int j = 0; j < 3; ++j) {
    CHECK(std::abs(T.codegrees(j) - 3.0) < 1e-9);
    CHECK(std::abs(T.dualWeights(j) - 1.0) < 1e-9);
  }
}

TEST_CASE("characters separate points and satisfy both orthogonality laws") {
  for (auto& [name, P] : commutativeFixtures()) {
    CAPTURE(name);
    CharacterTable T = characterTable(P, 12345);
    OrthogonalityReport orth = checkOrthogonality(P, T);
    CHECK(orth.pass);
    CHECK(orth.rowMaxDev <= 1e-9 * P.nA);
    CHECK(orth.columnMaxDev <= 1e-9 * P.nA);

    // distinct columns of the table certify that characters separate points
    for (int a = 0; a < P.rank; ++a)
      for (int b = a + 1; b < P.rank; ++b)
        CHECK((T.M.col(a) - T.M.col(b)).cwiseAbs().maxCoeff() > 1e-6);
  }
}

TEST_CASE("character tables do not depend on the seed") {
  for (auto& [name, P] : commutativeFixtures()) {
    CAPTURE(name);
    CharacterTable T1 = characterTable(P, 12345);
    CharacterTable T2 = characterTable(P, 987654321);
    CHECK(bitwiseEqual(T1.M, T2.M));
    CHECK(T1.star == T2.star);
    CHECK(bitwiseEqual(T1.codegrees, T2.codegrees));
    CHECK(bitwiseEqual(T1.idempotents, T2.idempotents));
  }
}

TEST_CASE("primitive idempotents resolve the identity and multiply to zero") {
  for (auto& [name, P] : commutativeFixtures()) {
    CAPTURE(name);
    CharacterTable T = characterTable(P, 12345);
    const int n = P.rank;

    Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(n);
    for (int j = 0; j < n; ++j) sum += T.idempotents.row(j).transpose();
    Eigen::VectorXcd unitVec = Eigen::VectorXcd::Zero(n);
    unitVec(P.unit) = 1.0;
    CHECK((sum - unitVec).cwiseAbs().maxCoeff() < 1e-8);

    // row 0 supports the augmentation: it is the averaging element
    Eigen::VectorXd u = haarIdempotent(P);
    CHECK((T.idempotents.row(0).transpose() - u.cast<Complex>())
              .cwiseAbs()
              .maxCoeff() < 1e-8);

    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Eigen::VectorXcd prod = multiply(P, T.idempotents.row(j).transpose(),
                                         T.idempotents.row(k).transpose());
        Eigen::VectorXcd want = j == k
                                    ? Eigen::VectorXcd(T.idempotents.row(j))
                                    : Eigen::VectorXcd::Zero(n);
        CHECK((prod - want).cwiseAbs().maxCoeff() < 1e-8);
      }
  }
}

TEST_CASE("the averaging element is idempotent and absorbing") {
  for (auto& [name, P] : commutativeFixtures()) {
    CAPTURE(name);
    Eigen::VectorXd u = haarIdempotent(P);
    CHECK(u.sum() == doctest::Approx(1.0).epsilon(1e-12));
    Eigen::VectorXcd uc = u.cast<Complex>();
    CHECK((multiply(P, uc, uc) - uc).cwiseAbs().maxCoeff() < 1e-10);
    for (int a = 0; a < P.rank; ++a) {
      Eigen::VectorXcd da = Eigen::VectorXcd::Zero(P.rank);
      da(a) = 1.0;
      CHECK((multiply(P, uc, da) - uc).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("multiplying an element by its dual returns the reciprocal weight") {
  for (auto& [name, P] : commutativeFixtures()) {
    CAPTURE(name);
    for (int a = 0; a < P.rank; ++a) {
      Eigen::VectorXcd da = Eigen::VectorXcd::Zero(P.rank);
      Eigen::VectorXcd db = Eigen::VectorXcd::Zero(P.rank);
      da(a) = 1.0;
      db(P.dual[a]) = 1.0;
      Eigen::VectorXcd prod = multiply(P, da, db);
      CHECK(std::abs(prod(P.unit) - 1.0 / P.h(a)) < 1e-10);
    }
  }
}

TEST_CASE("coefficient pairing is the plain sum of products") {
  Eigen::VectorXcd x(2), y(2);
  x << Complex(1, 2), Complex(0, -1);
  y << Complex(3, 0), Complex(2, 2);
  CHECK(std::abs(coefficientPairing(x, y) -
                 (Complex(1, 2) * Complex(3, 0) + Complex(0, -1) * Complex(2, 2)))
        < 1e-15);
}

TEST_CASE("left multiplication matrices reproduce the tensor") {
  ProbabilityGroup P = toProbabilityGroup(loadRing("ising.fusion.json"));
  for (int a = 0; a < P.rank; ++a) {
    Eigen::MatrixXd L = leftMultiplication(P, a);
    for (int b = 0; b < P.rank; ++b) {
      Eigen::VectorXcd db = Eigen::VectorXcd::Zero(P.rank);
      db(b) = 1.0;
      Eigen::VectorXcd da = Eigen::VectorXcd::Zero(P.rank);
      da(a) = 1.0;
      Eigen::VectorXcd prod = multiply(P, da, db);
      CHECK((L.col(b).cast<Complex>() - prod).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("the dual of a cyclic group is again a cyclic group") {
  ProbabilityGroup P = makeProbabilityGroup(3, numberedLabels(3), 0,
                                            cyclicDual(3), cyclicTensor(3));
  CharacterTable T = characterTable(P, 12345);
  DualHypergroup D = dualConstants(P, T);
  CHECK(D.dualizable);
  CHECK(D.minEntry > -1e-12);
  CHECK(D.maxImag < 1e-12);
  CHECK(D.rowSumDev < 1e-10);
  CHECK(D.dualUnitDev < 1e-10);

  // with the canonical row order, chi_1 * chi_1 = chi_2 and chi_1 * chi_2 = 1
  CHECK(std::abs(D.phat(1, 1, 2) - 1.0) < 1e-9);
  CHECK(std::abs(D.phat(1, 2, 0) - 1.0) < 1e-9);
  CHECK(std::abs(D.phat(2, 2, 1) - 1.0) < 1e-9);

  std::vector<std::string> warnings;
  ProbabilityGroup Q = dualAsProbabilityGroup(P, T, D, &warnings);
  CHECK(validateAxioms(Q).allPass());
  for (int j = 0; j < 3; ++j) CHECK(Q.h(j) == doctest::Approx(1.0));
}

TEST_CASE("the dual of the class hypergroup has the squared-degree weights") {
  ProbabilityGroup P = loadPg("s3class.probgroup.json");
  CharacterTable T = characterTable(P, 12345);
  DualHypergroup D = dualConstants(P, T);
  CHECK(D.dualizable);

  std::vector<std::string> warnings;
  ProbabilityGroup Q = dualAsProbabilityGroup(P, T, D, &warnings);
  CHECK(validateAxioms(Q).allPass());

  // dual weights are the squared degrees 1, 1, 4 of the three irreducible
  // characters, in some order
  std::vector<double> w(Q.h.data(), Q.h.data() + Q.rank);
  std::sort(w.begin(), w.end());
  CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(w[1] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(w[2] == doctest::Approx(4.0).epsilon(1e-8));

  // and the dual tensor carries the normalized representation ring of S3:
  // the entries agree with toProbabilityGroup(s3rep) as multisets
  ProbabilityGroup R = toProbabilityGroup(loadRing("s3rep.fusion.json"));
  std::vector<double> a, b;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        a.push_back(Q.p(i, j, k));
        b.push_back(R.p(i, j, k));
      }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (size_t t = 0; t < a.size(); ++t) CHECK(a[t] == doctest::Approx(b[t]).epsilon(1e-8));
}

TEST_CASE("taking the dual twice returns the original structure") {
  for (const char* name : {"z4.fusion.json", "ising.fusion.json",
                           "fib.fusion.json", "s3rep.fusion.json"}) {
    CAPTURE(name);
    ProbabilityGroup P = toProbabilityGroup(loadRing(name));
    CharacterTable T = characterTable(P, 12345);
    DualHypergroup D = dualConstants(P, T);
    REQUIRE(D.dualizable);
    std::vector<std::string> warnings;
    ProbabilityGroup Q = dualAsProbabilityGroup(P, T, D, &warnings);

    CharacterTable TQ = characterTable(Q, 12345);
    DualHypergroup DQ = dualConstants(Q, TQ);
    REQUIRE(DQ.dualizable);
    std::vector<std::string> warnings2;
    ProbabilityGroup PP = dualAsProbabilityGroup(Q, TQ, DQ, &warnings2);

    // same rank, same weight multiset, same tensor entries as multisets
    REQUIRE(PP.rank == P.rank);
    std::vector<double> hw(P.h.data(), P.h.data() + P.rank);
    std::vector<double> hw2(PP.h.data(), PP.h.data() + PP.rank);
    std::sort(hw.begin(), hw.end());
    std::sort(hw2.begin(), hw2.end());
    for (int i = 0; i < P.rank; ++i)
      CHECK(hw2[i] == doctest::Approx(hw[i]).epsilon(1e-7));

    std::vector<double> a, b;
    for (int i = 0; i < P.rank; ++i)
      for (int j = 0; j < P.rank; ++j)
        for (int k = 0; k < P.rank; ++k) {
          a.push_back(P.p(i, j, k));
          b.push_back(PP.p(i, j, k));
        }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (size_t t = 0; t < a.size(); ++t)
      CHECK(b[t] == doctest::Approx(a[t]).epsilon(1e-6));
  }
}
