#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "probgroup/check.hpp"
#include "probgroup/hypergroup.hpp"
#include "probgroup/scalar.hpp"
#include "probgroup/tensor.hpp"

namespace probgroup {

/// A unital based ring: nonnegative integer structure constants
/// N(i,j,k) = multiplicity of basis element k in the product of i and j,
/// together with a distinguished unit and a duality involution.
struct FusionRing {
  int rank = 0;
  std::vector<std::string> labels;
  int unit = 0;
  std::vector<int> dual;
  Tensor3<std::int64_t> N;
};

/// Verifies the based-ring axioms: unit law, associativity, that the
/// involution respects products (N(i,j,k) = N(j*,i*,k*)), that the unit
/// coefficient picks out dual pairs (N(i,j,unit) = 1 exactly when j = i*,
/// else 0), and the cyclic symmetry of the unit-normalized constants.
/// Shape violations and negative entries throw InputError instead of being
/// reported, since they make the object ill-typed rather than a ring that
/// fails an axiom.
ValidationReport validateFusionRing(const FusionRing& R);

bool isCommutative(const FusionRing& R);

/// Perron-Frobenius dimensions: the unique character of the ring taking
/// positive values, computed per basis element as the spectral radius of the
/// left multiplication matrix and then refined globally.  total is the sum
/// of fpdim(i) * fpdim(i*).
struct FPDimData {
  Eigen::VectorXd fpdim;
  double total = 0.0;
};
FPDimData fpDimensions(const FusionRing& R, const Tolerances& tol = {});

/// Normalizes a commutative based ring to its probability group: basis
/// elements are divided by their dimension, so
/// p(i,j,k) = N(i,j,k) * fpdim(k) / (fpdim(i) * fpdim(j)).
ProbabilityGroup toProbabilityGroup(const FusionRing& R,
                                    const Tolerances& tol = {});

}  // namespace probgroup
