#include "probgroup/io.hpp"

#include <fstream>

namespace probgroup {

using nlohmann::json;

json loadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
  if (!j.is_object()) throw InputError(path + ": top level must be an object");
  return j;
}

std::string detectKind(const json& j) {
  if (!j.contains("kind") || !j["kind"].is_string())
    throw InputError("missing \"kind\" field");
  return j["kind"].get<std::string>();
}

Complex parseScalarEntry(const json& v) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_string()) return evalScalar(v.get<std::string>());
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Complex(v[0].get<double>(), v[1].get<double>());
  throw InputError("scalar entry must be a number, an expression string, or "
                   "an [re, im] pair");
}

namespace {

int requiredInt(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw InputError(std::string("missing or non-integer \"") + field + "\"");
  return j[field].get<int>();
}

std::vector<int> requiredIntVector(const json& j, const char* field, int size) {
  if (!j.contains(field) || !j[field].is_array() ||
      static_cast<int>(j[field].size()) != size)
    throw InputError(std::string("\"") + field + "\" must be an array of length " +
                     std::to_string(size));
  std::vector<int> out(size);
  for (int i = 0; i < size; ++i) {
    if (!j[field][i].is_number_integer())
      throw InputError(std::string("\"") + field + "\" must contain integers");
    out[i] = j[field][i].get<int>();
  }
  return out;
}

std::vector<std::string> optionalLabels(const json& j, int rank,
                                        const std::string& prefix) {
  if (!j.contains("labels")) {
    std::vector<std::string> out(rank);
    for (int i = 0; i < rank; ++i) out[i] = prefix + std::to_string(i);
    return out;
  }
  if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != rank)
    throw InputError("\"labels\" must be an array of length " +
                     std::to_string(rank));
  std::vector<std::string> out(rank);
  for (int i = 0; i < rank; ++i) {
    if (!j["labels"][i].is_string())
      throw InputError("\"labels\" must contain strings");
    out[i] = j["labels"][i].get<std::string>();
  }
  return out;
}

// dense nested [i][j][k] array or sparse [[i,j,k,value], ...]
template <class Scalar, class ReadEntry>
Tensor3<Scalar> parseTensor(const json& j, int rank, const char* dense,
                            const char* sparse, ReadEntry readEntry) {
  Tensor3<Scalar> T(rank);
  if (j.contains(dense)) {
    const json& N = j[dense];
    if (!N.is_array() || static_cast<int>(N.size()) != rank)
      throw InputError(std::string("\"") + dense + "\" must have one slice per "
                       "basis element");
    for (int i = 0; i < rank; ++i) {
      if (!N[i].is_array() || static_cast<int>(N[i].size()) != rank)
        throw InputError(std::string("\"") + dense + "\" slice " +
                         std::to_string(i) + " has the wrong shape");
      for (int jj = 0; jj < rank; ++jj) {
        if (!N[i][jj].is_array() || static_cast<int>(N[i][jj].size()) != rank)
          throw InputError(std::string("\"") + dense + "\" row (" +
                           std::to_string(i) + ", " + std::to_string(jj) +
                           ") has the wrong length");
        for (int k = 0; k < rank; ++k) T(i, jj, k) = readEntry(N[i][jj][k]);
      }
    }
    return T;
  }
  if (j.contains(sparse)) {
    for (const json& row : j[sparse]) {
      if (!row.is_array() || row.size() != 4)
        throw InputError(std::string("\"") + sparse +
                         "\" entries must be [i, j, k, value]");
      int a = row[0].get<int>(), b = row[1].get<int>(), c = row[2].get<int>();
      if (a < 0 || a >= rank || b < 0 || b >= rank || c < 0 || c >= rank)
        throw InputError(std::string("\"") + sparse + "\" index out of range");
      T(a, b, c) = readEntry(row[3]);
    }
    return T;
  }
  throw InputError(std::string("missing \"") + dense + "\" or \"" + sparse + "\"");
}

}  // namespace

FusionRing parseFusionRing(const json& j) {
  FusionRing R;
  R.rank = requiredInt(j, "rank");
  if (R.rank <= 0) throw InputError("\"rank\" must be positive");
  R.labels = optionalLabels(j, R.rank, "b");
  R.unit = j.contains("unit") ? requiredInt(j, "unit") : 0;
  R.dual = requiredIntVector(j, "dual", R.rank);
  R.N = parseTensor<std::int64_t>(j, R.rank, "N", "N_sparse", [](const json& v) {
    if (!v.is_number_integer())
      throw InputError("fusion multiplicities must be integers");
    return v.get<std::int64_t>();
  });
  return R;
}

ProbabilityGroup parseProbabilityGroup(const json& j, const Tolerances& tol) {
  int rank = requiredInt(j, "rank");
  if (rank <= 0) throw InputError("\"rank\" must be positive");
  std::vector<std::string> labels = optionalLabels(j, rank, "a");
  int unit = j.contains("unit") ? requiredInt(j, "unit") : 0;
  std::vector<int> dual = requiredIntVector(j, "dual", rank);
  Tensor3<double> p =
      parseTensor<double>(j, rank, "p", "p_sparse", [](const json& v) {
        Complex z = parseScalarEntry(v);
        if (std::abs(z.imag()) > 1e-12)
          throw InputError("probabilities must be real");
        return z.real();
      });
  ProbabilityGroup P = makeProbabilityGroup(rank, std::move(labels), unit,
                                            std::move(dual), std::move(p), tol);
  if (j.contains("weights")) {
    const json& w = j["weights"];
    if (!w.is_array() || static_cast<int>(w.size()) != rank)
      throw InputError("\"weights\" must be an array of length " +
                       std::to_string(rank));
    for (int i = 0; i < rank; ++i) {
      double declared = parseScalarEntry(w[i]).real();
      if (std::abs(declared - P.h(i)) > 1e-6 * (1.0 + std::abs(declared)))
        throw InputError("declared weight " + std::to_string(i) +
                         " disagrees with the tensor-derived weight");
    }
  }
  return P;
}

ModularData parseModularData(const json& j) {
  ModularData M;
  M.rank = requiredInt(j, "rank");
  if (M.rank <= 0) throw InputError("\"rank\" must be positive");
  M.labels = optionalLabels(j, M.rank, "v");
  M.dual = requiredIntVector(j, "dual", M.rank);
  if (!j.contains("S") || !j["S"].is_array() ||
      static_cast<int>(j["S"].size()) != M.rank)
    throw InputError("\"S\" must be a square matrix of the declared rank");
  M.S.resize(M.rank, M.rank);
  for (int i = 0; i < M.rank; ++i) {
    if (!j["S"][i].is_array() || static_cast<int>(j["S"][i].size()) != M.rank)
      throw InputError("\"S\" row " + std::to_string(i) + " has the wrong length");
    for (int k = 0; k < M.rank; ++k) M.S(i, k) = parseScalarEntry(j["S"][i][k]);
  }
  return M;
}

FiniteGroup parseGroup(const json& j) {
  int order = requiredInt(j, "order");
  if (order <= 0) throw InputError("\"order\" must be positive");
  if (!j.contains("table") || !j["table"].is_array() ||
      static_cast<int>(j["table"].size()) != order * order)
    throw InputError("\"table\" must be a flat row-major array of order^2 entries");
  Eigen::MatrixXi table(order, order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const json& v = j["table"][a * order + b];
      if (!v.is_number_integer()) throw InputError("\"table\" must contain integers");
      table(a, b) = v.get<int>();
    }
  std::string name = j.contains("name") ? j["name"].get<std::string>() : "";
  return makeGroup(std::move(table), std::move(name));
}

CenterPair parseCenterPair(const json& j, const std::string& baseDir,
                           const Tolerances& tol) {
  (void)tol;
  auto resolve = [&](const std::string& p) {
    if (!p.empty() && p.front() == '/') return p;
    return baseDir.empty() ? p : baseDir + "/" + p;
  };
  if (!j.contains("base") || !j["base"].is_string())
    throw InputError("centerpair: missing \"base\" file reference");
  if (!j.contains("center") || !j["center"].is_string())
    throw InputError("centerpair: missing \"center\" file reference");

  CenterPair CP;
  json baseJson = loadJsonFile(resolve(j["base"].get<std::string>()));
  if (detectKind(baseJson) != "fusion")
    throw InputError("centerpair: \"base\" must reference a fusion file");
  CP.base = parseFusionRing(baseJson);
  json centerJson = loadJsonFile(resolve(j["center"].get<std::string>()));
  if (detectKind(centerJson) != "modular")
    throw InputError("centerpair: \"center\" must reference a modular file");
  CP.center = parseModularData(centerJson);

  if (!j.contains("branching") || !j["branching"].is_array() ||
      static_cast<int>(j["branching"].size()) != CP.center.rank)
    throw InputError("centerpair: \"branching\" must have one row per center simple");
  CP.branching.resize(CP.center.rank, CP.base.rank);
  for (int u = 0; u < CP.center.rank; ++u) {
    const json& row = j["branching"][u];
    if (!row.is_array() || static_cast<int>(row.size()) != CP.base.rank)
      throw InputError("centerpair: branching row " + std::to_string(u) +
                       " has the wrong length");
    for (int i = 0; i < CP.base.rank; ++i) {
      if (!row[i].is_number_integer())
        throw InputError("centerpair: branching entries must be integers");
      CP.branching(u, i) = row[i].get<int>();
    }
  }
  CP.iota = requiredIntVector(j, "iota", CP.base.rank);
  return CP;
}

json toJson(const FusionRing& R) {
  json j;
  j["kind"] = "fusion";
  j["rank"] = R.rank;
  j["labels"] = R.labels;
  j["unit"] = R.unit;
  j["dual"] = R.dual;
  json N = json::array();
  for (int i = 0; i < R.rank; ++i) {
    json slice = json::array();
    for (int jj = 0; jj < R.rank; ++jj) {
      json row = json::array();
      for (int k = 0; k < R.rank; ++k) row.push_back(R.N(i, jj, k));
      slice.push_back(std::move(row));
    }
    N.push_back(std::move(slice));
  }
  j["N"] = std::move(N);
  return j;
}

json toJson(const ModularData& M) {
  json j;
  j["kind"] = "modular";
  j["rank"] = M.rank;
  j["labels"] = M.labels;
  j["dual"] = M.dual;
  json S = json::array();
  for (int i = 0; i < M.rank; ++i) {
    json row = json::array();
    for (int k = 0; k < M.rank; ++k) {
      Complex v = M.S(i, k);
      if (v.imag() == 0.0) {
        row.push_back(v.real());
      } else {
        row.push_back(json::array({v.real(), v.imag()}));
      }
    }
    S.push_back(std::move(row));
  }
  j["S"] = std::move(S);
  return j;
}

json centerPairJson(const std::string& basePath, const std::string& centerPath,
                    const Eigen::MatrixXi& branching,
                    const std::vector<int>& iota) {
  json j;
  j["kind"] = "centerpair";
  j["base"] = basePath;
  j["center"] = centerPath;
  json B = json::array();
  for (int u = 0; u < branching.rows(); ++u) {
    json row = json::array();
    for (int i = 0; i < branching.cols(); ++i) row.push_back(branching(u, i));
    B.push_back(std::move(row));
  }
  j["branching"] = std::move(B);
  j["iota"] = iota;
  return j;
}

void writeJsonFile(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace probgroup
