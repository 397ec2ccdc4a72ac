#pragma once

#include <string>

#include "json.hpp"
#include "probgroup/class_algebra.hpp"
#include "probgroup/fusion.hpp"
#include "probgroup/groups.hpp"
#include "probgroup/hypergroup.hpp"

namespace probgroup {

/// Every input file is a JSON object with a "kind" field selecting one of:
///   fusion     based ring: rank, labels?, unit?, dual, N (dense nested
///              arrays) or N_sparse ([[i,j,k,value], ...])
///   probgroup  probability group: rank, labels?, unit?, dual, p or p_sparse,
///              optional weights (cross-checked against the tensor)
///   modular    S-matrix: rank, labels?, dual, S
///   group      multiplication table: order, table (flat row-major), name?
///   centerpair base/center file references, branching matrix, iota
/// Scalar entries are JSON numbers, expression strings like
/// "(1+sqrt(5))/2" or "zeta(8,3)", or [re, im] pairs.
nlohmann::json loadJsonFile(const std::string& path);
std::string detectKind(const nlohmann::json& j);

FusionRing parseFusionRing(const nlohmann::json& j);
ProbabilityGroup parseProbabilityGroup(const nlohmann::json& j,
                                       const Tolerances& tol = {});
ModularData parseModularData(const nlohmann::json& j);
FiniteGroup parseGroup(const nlohmann::json& j);
/// baseDir resolves the relative base/center file references.
CenterPair parseCenterPair(const nlohmann::json& j, const std::string& baseDir,
                           const Tolerances& tol = {});

nlohmann::json toJson(const FusionRing& R);
nlohmann::json toJson(const ModularData& M);
/// Center-pair file referencing the two paths just written.
nlohmann::json centerPairJson(const std::string& basePath,
                              const std::string& centerPath,
                              const Eigen::MatrixXi& branching,
                              const std::vector<int>& iota);

void writeJsonFile(const std::string& path, const nlohmann::json& j);

Complex parseScalarEntry(const nlohmann::json& v);

}  // namespace probgroup
