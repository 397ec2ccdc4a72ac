#pragma once

#include <cstdint>
#include <vector>

#include "probgroup/check.hpp"
#include "probgroup/hypergroup.hpp"

namespace probgroup {

/// Verifies that the given sorted index set contains the unit, is closed
/// under duals, and is closed under multiplication (no probability leaks
/// outside the set).
ValidationReport validateSubHypergroup(const ProbabilityGroup& P,
                                       const std::vector<int>& members,
                                       const Tolerances& tol = {});

/// All subhypergroups, found by closing every subset seed under products and
/// duals.  Guarded to rank <= 24.
std::vector<std::vector<int>> findSubHypergroups(const ProbabilityGroup& P,
                                                 const Tolerances& tol = {});

/// Quotient by a subhypergroup: basis elements are merged when sandwiching
/// them between the averaging element of S gives the same coefficient
/// vector, and class products sum the parent probabilities over the target
/// class.  Every member of a class must give the same summed row; a mismatch
/// throws CheckError, since it signals a non-commutative parent or numerical
/// breakdown.
struct QuotientHypergroup {
  std::vector<std::vector<int>> classes;  // parent indices, class 0 contains the unit
  std::vector<int> classOf;               // parent index -> class index
  ProbabilityGroup pg;
};
QuotientHypergroup quotient(const ProbabilityGroup& P,
                            const std::vector<int>& members,
                            const Tolerances& tol = {});

/// Characters that restrict to 1 on every member of S.
std::vector<int> annihilator(const ProbabilityGroup& P, const CharacterTable& T,
                             const std::vector<int>& members,
                             const Tolerances& tol = {});

/// End-to-end duality check for a quotient: the annihilator characters,
/// viewed as functions on classes, must biject onto the characters of the
/// quotient, and the dual structure constants must be carried along.
struct QuotientDualityReport {
  ValidationReport checks;
  QuotientHypergroup Q;
  std::vector<int> annihilatorSet;
  std::vector<int> rowMap;  // annihilator character -> quotient character row
};
QuotientDualityReport verifyQuotientDuality(const ProbabilityGroup& P,
                                            const CharacterTable& T,
                                            const std::vector<int>& members,
                                            std::uint64_t seed,
                                            const Tolerances& tol = {});

}  // namespace probgroup
