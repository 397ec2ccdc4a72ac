#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "probgroup/check.hpp"
#include "probgroup/scalar.hpp"
#include "probgroup/tensor.hpp"

namespace probgroup {

/// A finite probability group: a basis with an involution and a stochastic
/// product tensor p(i,j,k) = probability that a_i * a_j lands on a_k.  The
/// weight h(a) is the reciprocal of the probability that a * a^dual hits the
/// unit, and nA is the total weight.
struct ProbabilityGroup {
  int rank = 0;
  std::vector<std::string> labels;
  int unit = 0;
  std::vector<int> dual;
  Tensor3<double> p;
  Eigen::VectorXd h;
  double nA = 0.0;
};

/// Builds the structure from its tensor, deriving weights and total weight.
/// Throws InputError on shape problems or a non-positive unit return
/// probability (which would make a weight infinite).
ProbabilityGroup makeProbabilityGroup(int rank, std::vector<std::string> labels,
                                      int unit, std::vector<int> dual,
                                      Tensor3<double> p,
                                      const Tolerances& tol = {});

/// Checks every defining axiom: stochasticity, associativity, unit law,
/// existence and uniqueness of duals (recomputed and compared with the
/// declared involution), the adjoint symmetry p_c(a,b) = p_{c*}(b*,a*), and
/// equality of the two unit-return probabilities.  Witnesses carry the worst
/// offending indices.
ValidationReport validateAxioms(const ProbabilityGroup& P,
                                const Tolerances& tol = {});

/// Normalized averaging element: coefficient h(a)/nA on each basis element.
/// It is idempotent and absorbs multiplication.
Eigen::VectorXd haarIdempotent(const ProbabilityGroup& P);

/// Product of two coefficient vectors in the hypergroup algebra.
Eigen::VectorXcd multiply(const ProbabilityGroup& P, const Eigen::VectorXcd& x,
                          const Eigen::VectorXcd& y);

/// Coefficient pairing: <sum alpha_a a, sum beta_a a> = sum alpha_a beta_a.
Complex coefficientPairing(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y);

/// Matrix of left multiplication by basis element a acting on coefficient
/// vectors: column b holds the coefficients of a * b.
Eigen::MatrixXd leftMultiplication(const ProbabilityGroup& P, int a);

/// Character table of a commutative probability group.
///   M(j,i)        value of character j on basis element i
///   codegrees(j)  weighted norm of character j; the augmentation character
///                 sits in row 0 with codegree nA
///   idempotents   row j holds the coefficients of the primitive idempotent
///                 supporting character j
///   star          index of the conjugate character
///   dualWeights   nA / codegree
/// Rows after the augmentation are sorted lexicographically by value, so the
/// table is a canonical invariant of the input, independent of the seed.
struct CharacterTable {
  Eigen::MatrixXcd M;
  Eigen::VectorXcd codegrees;
  Eigen::MatrixXcd idempotents;
  std::vector<int> star;
  Eigen::VectorXcd dualWeights;
};

/// Diagonalizes the regular representation with a seeded random separating
/// combination, then refines every character with a deterministic
/// Gauss-Newton pass so the returned table does not depend on the seed.
/// Throws CheckError if the input is not commutative, if no separating
/// combination is found after several reseeds, or if a refined row fails the
/// multiplicativity test.
CharacterTable characterTable(const ProbabilityGroup& P, std::uint64_t seed,
                              const Tolerances& tol = {});

/// Primitive idempotents recomputed from a character table; verifies
/// pairwise orthogonality, completeness, and that row 0 reproduces the
/// averaging element.
Eigen::MatrixXcd primitiveIdempotents(const ProbabilityGroup& P,
                                      const CharacterTable& T,
                                      const Tolerances& tol = {});

/// Both weighted orthogonality relations; deviations are absolute and are
/// compared against tol.eq * nA.
struct OrthogonalityReport {
  double rowMaxDev = 0.0;     // characters against characters
  double columnMaxDev = 0.0;  // basis elements against basis elements
  bool pass = false;
};
OrthogonalityReport checkOrthogonality(const ProbabilityGroup& P,
                                       const CharacterTable& T,
                                       const Tolerances& tol = {});

/// Structure constants of the dual hypergroup on the characters:
/// phat(i,j,k) is the coefficient of character k in the product of
/// characters i and j, computed from the weighted triple sum.
struct DualHypergroup {
  Tensor3<Complex> phat;
  bool dualizable = false;   // all entries effectively nonnegative real
  double minEntry = 0.0;     // most negative real part seen
  double maxImag = 0.0;      // largest imaginary part seen
  double rowSumDev = 0.0;    // worst deviation of a row sum from 1
  double dualUnitDev = 0.0;  // worst deviation from the dual unit law
  double totalWeightDev = 0.0;  // |sum of dual weights - nA|
};
DualHypergroup dualConstants(const ProbabilityGroup& P, const CharacterTable& T,
                             const Tolerances& tol = {});

/// Packages a dualizable dual as a probability group, clamping tiny negative
/// probabilities to zero.  clampWarnings receives one message per clamped
/// entry.  Throws CheckError if the dual is not dualizable.
ProbabilityGroup dualAsProbabilityGroup(const ProbabilityGroup& P,
                                        const CharacterTable& T,
                                        const DualHypergroup& D,
                                        std::vector<std::string>* clampWarnings,
                                        const Tolerances& tol = {});

}  // namespace probgroup
