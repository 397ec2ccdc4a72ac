#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "probgroup/check.hpp"
#include "probgroup/fusion.hpp"
#include "probgroup/hypergroup.hpp"

namespace probgroup {

/// Character-theoretic class data of a commutative based ring.  Basis
/// elements play the role of irreducible characters; the characters of the
/// normalized probability group play the role of conjugacy classes.
///   classDims(j)   total dimension divided by the codegree of character j
///   classSums(j,i) value of basis character i on the j-th class sum,
///                  equal to classDims(j) * fpdim(i) * M(j,i)
///   c(i,j,k)       structure constants of the class sums
///   cointegral     coefficients of the normalized integral, fpdim(i)^2/total
struct ClassAlgebra {
  FusionRing ring;
  Eigen::VectorXd fpdim;
  double dimTotal = 0.0;
  ProbabilityGroup P;
  CharacterTable T;
  DualHypergroup dual;
  Eigen::VectorXd classDims;
  Eigen::MatrixXcd classSums;
  Tensor3<Complex> c;
  double burnsideCrossDev = 0.0;
  Eigen::VectorXd cointegral;
};

ClassAlgebra buildClassAlgebra(const FusionRing& R, std::uint64_t seed,
                               const Tolerances& tol = {});

/// Class-sum structure constants computed two independent ways: the weighted
/// character triple sum over class sums, and the rescaled dual structure
/// constants.  The routes must agree within 10 * tol.eq or an InternalError
/// is thrown; crossDev receives the observed gap.
Tensor3<Complex> burnsideConstants(const ClassAlgebra& CA,
                                   double* crossDev = nullptr,
                                   const Tolerances& tol = {});

/// Central multiplicativity of class sums: fpdim(s) * chi_s(C_i C_j) must
/// equal chi_s(C_i) * chi_s(C_j).  Deviations scale with dimTotal^2.
struct CentralLemmaReport {
  double maxDev = 0.0;
  bool pass = false;
};
CentralLemmaReport verifyCentralLemma(const ClassAlgebra& CA,
                                      const Tolerances& tol = {});

/// Classification of the scaled structure constants dimTotal * c(i,j,k) and
/// of the codegrees.
enum class IntegralityClass { Integer, LatticeMember, Unresolved };

struct IntegralityEntry {
  int i = 0, j = 0, k = 0;
  Complex value;
  IntegralityClass cls = IntegralityClass::Unresolved;
  long long rounded = 0;
  std::vector<long long> coords;
};

struct IntegralityReport {
  bool weaklyIntegral = false;
  double dimTotal = 0.0;
  long long dimRounded = 0;
  std::vector<IntegralityEntry> scaled;     // dimTotal * c(i,j,k)
  std::vector<IntegralityEntry> codegrees;  // one per character, k is the row
  int scaledInteger = 0, scaledLattice = 0, scaledUnresolved = 0;
  int codegreeInteger = 0, codegreeLattice = 0, codegreeUnresolved = 0;
  bool scaledCertified = false;     // every scaled constant certified integral
  bool codegreesCertified = false;  // every codegree certified integral
};
IntegralityReport integralityReport(const ClassAlgebra& CA,
                                    const std::optional<Lattice>& lattice,
                                    const Tolerances& tol = {});

/// An S-matrix with a duality involution on its index set.
struct ModularData {
  int rank = 0;
  std::vector<std::string> labels;
  std::vector<int> dual;
  Eigen::MatrixXcd S;
};

/// Symmetry, nonzero first row, unitarity up to one global scale, and the
/// matrix square acting as the duality permutation.
ValidationReport validateModularData(const ModularData& M,
                                     const Tolerances& tol = {});

/// d(l) = S(0,l) / S(0,0); throws CheckError if a value has a significant
/// imaginary part or vanishes.
Eigen::VectorXd quantumDims(const ModularData& M, const Tolerances& tol = {});

/// Fusion coefficients reconstructed from the S-matrix before rounding.
Tensor3<Complex> verlindeCoefficients(const ModularData& M);

/// Self-duality certificate for a commutative based ring with modular data:
/// the S-matrix reproduces the fusion rules, its columns give the characters
/// of the ring, and the induced bijection of basis elements onto characters
/// carries the normalized product onto the dual structure constants.
struct SelfDualityReport {
  ValidationReport checks;
  std::vector<int> rowMap;  // basis element -> character row
};
SelfDualityReport verifySelfDual(const FusionRing& R, const ModularData& M,
                                 std::uint64_t seed, const Tolerances& tol = {});

/// A commutative based ring together with modular data for its center, the
/// branching matrix of the forgetful map (rows indexed by center simples),
/// and the embedding iota of base simples into center simples.
struct CenterPair {
  FusionRing base;
  ModularData center;
  Eigen::MatrixXi branching;
  std::vector<int> iota;
};

/// Four-phase verification against the center:
///   consistency  shapes, dims, branching bookkeeping, Verlinde integrality
///   restriction  center characters restrict onto base characters (classes A_j)
///   selection    exactly one restricted idempotent per base character (sigma)
///   reproduction center fusion rules reproduce the dual structure constants
///   divisibility on integer data, class dimensions divide the squared
///                dimensions of their center simples
struct CenterPairReport {
  ValidationReport consistency;
  ValidationReport restriction;
  ValidationReport selection;
  ValidationReport reproduction;
  ValidationReport divisibility;
  std::vector<std::vector<int>> restrictionClasses;  // A_j per base character
  std::vector<int> sigma;                            // base character -> center simple
  bool completed = false;  // later phases ran (consistency held)

  bool allPass() const {
    return completed && consistency.allPass() && restriction.allPass() &&
           selection.allPass() && reproduction.allPass() && divisibility.allPass();
  }
};
CenterPairReport centerPairCheck(const CenterPair& CP, std::uint64_t seed,
                                 const Tolerances& tol = {});

}  // namespace probgroup
