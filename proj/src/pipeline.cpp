#include "probgroup/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <future>
#include <string>
#include <utility>
#include <vector>

#include "probgroup/class_algebra.hpp"
#include "probgroup/fusion.hpp"
#include "probgroup/groups.hpp"
#include "probgroup/hypergroup.hpp"
#include "probgroup/io.hpp"
#include "probgroup/quotient.hpp"

namespace probgroup {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Reports list full tables only up to this rank; larger objects get summary
// numbers so the output stays readable.
constexpr int kListingCap = 12;
constexpr int kTensorListingCap = 4;

std::string baseDirOf(const std::string& path) {
  return fs::path(path).parent_path().string();
}

std::vector<Complex> toStd(const Eigen::VectorXcd& v) {
  return std::vector<Complex>(v.data(), v.data() + v.size());
}

std::vector<Complex> rowOf(const Eigen::MatrixXcd& M, int r) {
  std::vector<Complex> out(M.cols());
  for (int j = 0; j < M.cols(); ++j) out[j] = M(r, j);
  return out;
}

std::string fmtRealVector(const Eigen::VectorXd& v) {
  std::string out = "[";
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += fmtReal(v(i));
  }
  return out + "]";
}

std::string fmtIntVector(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string fmtInt64Vector(const std::vector<long long>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string joinLabels(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += labels[i];
  }
  return out;
}

std::string yesNo(bool b) { return b ? "yes" : "no"; }

void copyChecks(ReportSection& s, const ValidationReport& v) {
  s.checks.insert(s.checks.end(), v.checks.begin(), v.checks.end());
}

Check aggregate(std::string name, const ValidationReport& v) {
  Check c{std::move(name), v.allPass(), 0.0, {}};
  for (const Check& k : v.checks) c.deviation = std::max(c.deviation, k.deviation);
  if (const Check* f = v.firstFailure())
    c.witness = f->witness.empty() ? f->name : f->name + " at " + f->witness;
  return c;
}

Check failedCheck(std::string name, const std::string& why) {
  return Check{std::move(name), false, 0.0, why};
}

std::string groupDisplayName(const FiniteGroup& G) {
  return G.name.empty() ? "the input group" : G.name;
}

void addOrthogonalitySection(Report& rep, const ProbabilityGroup& P,
                             const CharacterTable& T, const RunConfig& cfg) {
  ReportSection& s = rep.section("orthogonality");
  OrthogonalityReport orth = checkOrthogonality(P, T, cfg.tol);
  double bound = cfg.tol.eq * P.nA;
  s.checks.push_back(
      Check{"character-orthogonality", orth.rowMaxDev <= bound, orth.rowMaxDev, {}});
  s.checks.push_back(
      Check{"basis-orthogonality", orth.columnMaxDev <= bound, orth.columnMaxDev, {}});
}

void addDualSection(Report& rep, const ProbabilityGroup& P,
                    const CharacterTable& T, const RunConfig& cfg) {
  ReportSection& s = rep.section("dual");
  DualHypergroup D = dualConstants(P, T, cfg.tol);
  s.item("dualizable", yesNo(D.dualizable));
  s.item("min entry", fmtReal(D.minEntry));
  s.item("max imaginary part", fmtReal(D.maxImag));
  s.checks.push_back(
      Check{"dual-row-sums-one", D.rowSumDev <= 10 * cfg.tol.eq, D.rowSumDev, {}});
  s.checks.push_back(
      Check{"dual-unit-law", D.dualUnitDev <= 10 * cfg.tol.eq, D.dualUnitDev, {}});
  s.checks.push_back(Check{"dual-total-weight",
                           D.totalWeightDev <= 10 * cfg.tol.eq * P.nA,
                           D.totalWeightDev,
                           {}});
  if (D.dualizable) {
    std::vector<std::string> warnings;
    ProbabilityGroup Phat = dualAsProbabilityGroup(P, T, D, &warnings, cfg.tol);
    for (const std::string& w : warnings) s.item("clamped", w);
    s.checks.push_back(aggregate("dual-axioms", validateAxioms(Phat, cfg.tol)));
  }
}

void addCenterPhases(Report& rep, const CenterPairReport& cpr) {
  {
    ReportSection& s = rep.section("consistency");
    copyChecks(s, cpr.consistency);
  }
  if (!cpr.completed) {
    ReportSection& s = rep.section("status");
    s.item("later phases", "skipped (consistency failed)");
    return;
  }
  {
    ReportSection& s = rep.section("restriction");
    for (std::size_t j = 0; j < cpr.restrictionClasses.size(); ++j)
      s.item("simples over character " + std::to_string(j),
             fmtIntVector(cpr.restrictionClasses[j]));
    copyChecks(s, cpr.restriction);
  }
  {
    ReportSection& s = rep.section("selection");
    s.item("selected simples", fmtIntVector(cpr.sigma));
    copyChecks(s, cpr.selection);
  }
  {
    ReportSection& s = rep.section("reproduction");
    copyChecks(s, cpr.reproduction);
  }
  {
    ReportSection& s = rep.section("divisibility");
    copyChecks(s, cpr.divisibility);
  }
}

json loadKind(const std::string& path, const char* wanted) {
  json j = loadJsonFile(path);
  std::string kind = detectKind(j);
  if (kind != wanted)
    throw InputError(path + ": expected a " + std::string(wanted) +
                     " file, found \"" + kind + "\"");
  return j;
}

}  // namespace

Report runValidate(const std::string& path, const RunConfig& cfg) {
  Report rep;
  rep.command = "validate";
  rep.input = path;
  rep.tol = cfg.tol;

  json j = loadJsonFile(path);
  std::string kind = detectKind(j);

  if (kind == "fusion") {
    FusionRing R = parseFusionRing(j);
    {
      ReportSection& s = rep.section("structure");
      s.item("kind", kind);
      s.item("rank", std::to_string(R.rank));
      if (R.rank <= kListingCap) s.item("basis", joinLabels(R.labels));
      s.item("unit", R.labels[R.unit]);
      s.item("dual", fmtIntVector(R.dual));
      s.item("commutative", yesNo(isCommutative(R)));
    }
    ValidationReport ax = validateFusionRing(R);
    {
      ReportSection& s = rep.section("based-ring-axioms");
      copyChecks(s, ax);
    }
    if (ax.allPass()) {
      FPDimData fp = fpDimensions(R, cfg.tol);
      ReportSection& s = rep.section("dimensions");
      s.item("dims", fmtRealVector(fp.fpdim));
      s.item("total dimension", fmtReal(fp.total));
    }
  } else if (kind == "probgroup") {
    ProbabilityGroup P = parseProbabilityGroup(j, cfg.tol);
    {
      ReportSection& s = rep.section("structure");
      s.item("kind", kind);
      s.item("rank", std::to_string(P.rank));
      if (P.rank <= kListingCap) s.item("basis", joinLabels(P.labels));
      s.item("unit", P.labels[P.unit]);
      s.item("dual", fmtIntVector(P.dual));
      s.item("weights", fmtRealVector(P.h));
      s.item("total weight", fmtReal(P.nA));
    }
    ReportSection& s = rep.section("axioms");
    copyChecks(s, validateAxioms(P, cfg.tol));
  } else if (kind == "modular") {
    ModularData M = parseModularData(j);
    {
      ReportSection& s = rep.section("structure");
      s.item("kind", kind);
      s.item("rank", std::to_string(M.rank));
      s.item("dual", fmtIntVector(M.dual));
    }
    ValidationReport ax = validateModularData(M, cfg.tol);
    {
      ReportSection& s = rep.section("modular-axioms");
      copyChecks(s, ax);
    }
    if (ax.allPass()) {
      ReportSection& s = rep.section("dimensions");
      try {
        Eigen::VectorXd d = quantumDims(M, cfg.tol);
        s.item("dims", fmtRealVector(d));
        s.item("total squared dimension", fmtReal(d.squaredNorm()));
      } catch (const CheckError& e) {
        s.checks.push_back(failedCheck("quantum-dims-real", e.what()));
      }
    }
  } else if (kind == "group") {
    FiniteGroup G = parseGroup(j);
    bool abelian = G.table == G.table.transpose();
    {
      ReportSection& s = rep.section("structure");
      s.item("kind", kind);
      s.item("order", std::to_string(G.order));
      if (!G.name.empty()) s.item("name", G.name);
      s.item("identity", std::to_string(G.identity));
      s.item("abelian", yesNo(abelian));
    }
    ClassHypergroup CH = classHypergroup(G, cfg.tol);
    {
      ReportSection& s = rep.section("conjugacy-classes");
      s.item("count", std::to_string(CH.pg.rank));
      if (CH.pg.rank <= kListingCap) {
        for (std::size_t c = 0; c < CH.classes.classes.size(); ++c)
          s.item(CH.pg.labels[c], fmtIntVector(CH.classes.classes[c]));
      }
    }
    ReportSection& s = rep.section("class-hypergroup-axioms");
    copyChecks(s, validateAxioms(CH.pg, cfg.tol));
  } else if (kind == "centerpair") {
    CenterPair CP = parseCenterPair(j, baseDirOf(path), cfg.tol);
    {
      ReportSection& s = rep.section("structure");
      s.item("kind", kind);
      s.item("base rank", std::to_string(CP.base.rank));
      s.item("center rank", std::to_string(CP.center.rank));
    }
    {
      ReportSection& s = rep.section("based-ring-axioms");
      copyChecks(s, validateFusionRing(CP.base));
    }
    ReportSection& s = rep.section("modular-axioms");
    copyChecks(s, validateModularData(CP.center, cfg.tol));
  } else {
    throw InputError("unsupported kind \"" + kind + "\"");
  }
  return rep;
}

Report runCharacters(const std::string& path, const RunConfig& cfg) {
  Report rep;
  rep.command = "characters";
  rep.input = path;
  rep.tol = cfg.tol;

  json j = loadJsonFile(path);
  std::string kind = detectKind(j);

  ProbabilityGroup P;
  if (kind == "fusion") {
    FusionRing R = parseFusionRing(j);
    ValidationReport ax = validateFusionRing(R);
    {
      ReportSection& s = rep.section("based-ring-axioms");
      copyChecks(s, ax);
    }
    if (!ax.allPass()) return rep;
    FPDimData fp = fpDimensions(R, cfg.tol);
    {
      ReportSection& s = rep.section("dimensions");
      s.item("dims", fmtRealVector(fp.fpdim));
      s.item("total dimension", fmtReal(fp.total));
    }
    P = toProbabilityGroup(R, cfg.tol);
  } else if (kind == "probgroup") {
    P = parseProbabilityGroup(j, cfg.tol);
    ValidationReport ax = validateAxioms(P, cfg.tol);
    {
      ReportSection& s = rep.section("axioms");
      copyChecks(s, ax);
    }
    if (!ax.allPass()) return rep;
  } else if (kind == "group") {
    FiniteGroup G = parseGroup(j);
    ClassHypergroup CH = classHypergroup(G, cfg.tol);
    ReportSection& s = rep.section("input");
    s.item("basis", "conjugacy classes of " + groupDisplayName(G));
    s.item("normalization", "character values divided by degree");
    P = std::move(CH.pg);
  } else {
    throw InputError("characters needs a fusion, probgroup, or group input");
  }

  CharacterTable T = characterTable(P, cfg.seed, cfg.tol);
  {
    ReportSection& s = rep.section("characters");
    s.item("rank", std::to_string(P.rank));
    s.item("total weight", fmtReal(P.nA));
    if (P.rank <= kListingCap) {
      s.item("basis", joinLabels(P.labels));
      for (int r = 0; r < P.rank; ++r)
        s.item("chi" + std::to_string(r), fmtComplexVector(rowOf(T.M, r)));
    }
    s.item("codegrees", fmtComplexVector(toStd(T.codegrees)));
    s.item("dual weights", fmtComplexVector(toStd(T.dualWeights)));
    s.item("conjugate rows", fmtIntVector(T.star));
  }
  addOrthogonalitySection(rep, P, T, cfg);
  addDualSection(rep, P, T, cfg);
  return rep;
}

Report runBurnside(const std::string& path, const RunConfig& cfg) {
  Report rep;
  rep.command = "burnside";
  rep.input = path;
  rep.tol = cfg.tol;

  json j = loadJsonFile(path);
  std::string kind = detectKind(j);

  FusionRing R;
  if (kind == "fusion") {
    R = parseFusionRing(j);
  } else if (kind == "group") {
    FiniteGroup G = parseGroup(j);
    GroupCharacterTable GT = groupCharacterTable(G, cfg.seed, cfg.tol);
    R = repRing(G, GT, cfg.tol);
    ReportSection& s = rep.section("input");
    s.item("ring", "representation ring of " + groupDisplayName(G));
    s.item("irreducible degrees", fmtInt64Vector(GT.degrees));
  } else {
    throw InputError("burnside needs a fusion ring or a group input");
  }

  ValidationReport ax = validateFusionRing(R);
  {
    ReportSection& s = rep.section("based-ring-axioms");
    copyChecks(s, ax);
  }
  if (!ax.allPass()) return rep;

  ClassAlgebra CA = buildClassAlgebra(R, cfg.seed, cfg.tol);
  {
    ReportSection& s = rep.section("dimensions");
    s.item("dims", fmtRealVector(CA.fpdim));
    s.item("total dimension", fmtReal(CA.dimTotal));
    s.item("integral coefficients", fmtRealVector(CA.cointegral));
  }
  {
    ReportSection& s = rep.section("classes");
    s.item("class dims", fmtRealVector(CA.classDims));
    s.item("codegrees", fmtComplexVector(toStd(CA.T.codegrees)));
    if (R.rank <= kListingCap)
      for (int c = 0; c < R.rank; ++c)
        s.item("class sum " + std::to_string(c),
               fmtComplexVector(rowOf(CA.classSums, c)));
  }
  {
    ReportSection& s = rep.section("structure-constants");
    if (R.rank <= kTensorListingCap) {
      for (int i = 0; i < R.rank; ++i)
        for (int jj = 0; jj < R.rank; ++jj)
          for (int k = 0; k < R.rank; ++k) {
            Complex v = CA.dimTotal * CA.c(i, jj, k);
            if (std::abs(v) > 1e-9)
              s.item("dim*c[" + std::to_string(i) + ", " + std::to_string(jj) +
                         ", " + std::to_string(k) + "]",
                     fmtComplex(v));
          }
    }
    Check cross{"class-product-routes-agree", false, CA.burnsideCrossDev, {}};
    cross.pass =
        CA.burnsideCrossDev <= 10 * cfg.tol.eq * std::max(1.0, CA.dimTotal);
    s.checks.push_back(std::move(cross));
    CentralLemmaReport cl = verifyCentralLemma(CA, cfg.tol);
    s.checks.push_back(Check{"central-multiplicativity", cl.pass, cl.maxDev, {}});
  }
  {
    ReportSection& s = rep.section("integrality");
    IntegralityReport IR = integralityReport(CA, cfg.lattice, cfg.tol);
    s.item("weakly integral", yesNo(IR.weaklyIntegral));
    s.item("total dimension",
           IR.weaklyIntegral
               ? fmtReal(IR.dimTotal) + " (integer " +
                     std::to_string(IR.dimRounded) + ")"
               : fmtReal(IR.dimTotal));
    s.item("scaled constants",
           std::to_string(IR.scaledInteger) + " integer, " +
               std::to_string(IR.scaledLattice) + " lattice, " +
               std::to_string(IR.scaledUnresolved) + " unresolved");
    s.item("codegrees", std::to_string(IR.codegreeInteger) + " integer, " +
                            std::to_string(IR.codegreeLattice) + " lattice, " +
                            std::to_string(IR.codegreeUnresolved) +
                            " unresolved");
    if (IR.weaklyIntegral) {
      double scaledDev = 0.0, codegreeDev = 0.0;
      for (const IntegralityEntry& e : IR.scaled)
        scaledDev = std::max(
            scaledDev, std::abs(e.value - Complex(std::round(e.value.real()), 0)));
      for (const IntegralityEntry& e : IR.codegrees)
        codegreeDev = std::max(
            codegreeDev, std::abs(e.value - Complex(std::round(e.value.real()), 0)));
      s.checks.push_back(Check{"scaled-constants-are-integers",
                               IR.scaledCertified, scaledDev,
                               {}});
      s.checks.push_back(Check{"codegrees-are-integers", IR.codegreesCertified,
                               codegreeDev,
                               {}});
    } else if (cfg.lattice) {
      auto firstUnresolved = [](const std::vector<IntegralityEntry>& entries) {
        for (const IntegralityEntry& e : entries)
          if (e.cls == IntegralityClass::Unresolved)
            return "(" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                   ", " + std::to_string(e.k) + ")";
        return std::string{};
      };
      s.checks.push_back(Check{"scaled-constants-certified-in-lattice",
                               IR.scaledCertified, 0.0,
                               firstUnresolved(IR.scaled)});
      s.checks.push_back(Check{"codegrees-certified-in-lattice",
                               IR.codegreesCertified, 0.0,
                               firstUnresolved(IR.codegrees)});
    } else {
      s.item("certification", "not attempted (no lattice basis supplied)");
    }
  }
  return rep;
}

Report runQuotient(const std::string& path, const std::vector<int>& members,
                   const RunConfig& cfg) {
  Report rep;
  rep.command = "quotient";
  rep.input = path;
  rep.tol = cfg.tol;

  json j = loadJsonFile(path);
  std::string kind = detectKind(j);

  ProbabilityGroup P;
  if (kind == "fusion") {
    FusionRing R = parseFusionRing(j);
    if (ValidationReport ax = validateFusionRing(R); !ax.allPass()) {
      ReportSection& s = rep.section("based-ring-axioms");
      copyChecks(s, ax);
      return rep;
    }
    P = toProbabilityGroup(R, cfg.tol);
  } else if (kind == "probgroup") {
    P = parseProbabilityGroup(j, cfg.tol);
  } else if (kind == "group") {
    FiniteGroup G = parseGroup(j);
    ClassHypergroup CH = classHypergroup(G, cfg.tol);
    ReportSection& s = rep.section("input");
    s.item("basis", "conjugacy classes of " + groupDisplayName(G));
    P = std::move(CH.pg);
  } else {
    throw InputError("quotient needs a fusion, probgroup, or group input");
  }

  if (members.empty()) {
    std::vector<std::vector<int>> subs = findSubHypergroups(P, cfg.tol);
    ReportSection& s = rep.section("subhypergroups");
    s.item("count", std::to_string(subs.size()));
    for (std::size_t i = 0; i < subs.size(); ++i)
      s.item("S" + std::to_string(i), fmtIntVector(subs[i]));
    return rep;
  }

  std::vector<int> m = members;
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  for (int x : m)
    if (x < 0 || x >= P.rank)
      throw InputError("member index out of range: " + std::to_string(x));

  ValidationReport sub = validateSubHypergroup(P, m, cfg.tol);
  {
    ReportSection& s = rep.section("subgroup");
    s.item("members", fmtIntVector(m));
    copyChecks(s, sub);
  }
  if (!sub.allPass()) return rep;

  CharacterTable T = characterTable(P, cfg.seed, cfg.tol);
  QuotientDualityReport qd = verifyQuotientDuality(P, T, m, cfg.seed, cfg.tol);
  {
    ReportSection& s = rep.section("quotient");
    s.item("rank", std::to_string(qd.Q.pg.rank));
    if (qd.Q.pg.rank <= kListingCap)
      for (std::size_t c = 0; c < qd.Q.classes.size(); ++c) {
        std::vector<std::string> names;
        for (int idx : qd.Q.classes[c]) names.push_back(P.labels[idx]);
        s.item(qd.Q.pg.labels[c], joinLabels(names));
      }
    s.item("weights", fmtRealVector(qd.Q.pg.h));
    s.item("total weight", fmtReal(qd.Q.pg.nA));
    s.checks.push_back(aggregate("quotient-axioms", validateAxioms(qd.Q.pg, cfg.tol)));
  }
  {
    ReportSection& s = rep.section("duality");
    s.item("annihilator characters", fmtIntVector(qd.annihilatorSet));
    s.item("row map", fmtIntVector(qd.rowMap));
    copyChecks(s, qd.checks);
  }
  return rep;
}

Report runSelfDual(const std::string& ringPath, const std::string& modularPath,
                   const RunConfig& cfg) {
  Report rep;
  rep.command = "selfdual";
  rep.input = ringPath + " + " + modularPath;
  rep.tol = cfg.tol;

  FusionRing R = parseFusionRing(loadKind(ringPath, "fusion"));
  ModularData M = parseModularData(loadKind(modularPath, "modular"));

  ValidationReport ax = validateFusionRing(R);
  {
    ReportSection& s = rep.section("based-ring-axioms");
    copyChecks(s, ax);
  }
  if (!ax.allPass()) return rep;

  SelfDualityReport sd = verifySelfDual(R, M, cfg.seed, cfg.tol);
  ReportSection& s = rep.section("self-duality");
  s.item("row map", fmtIntVector(sd.rowMap));
  if (sd.checks.allPass())
    s.item("dims", fmtRealVector(quantumDims(M, cfg.tol)));
  copyChecks(s, sd.checks);
  return rep;
}

Report runCenter(const std::string& path, const RunConfig& cfg) {
  Report rep;
  rep.command = "center";
  rep.input = path;
  rep.tol = cfg.tol;

  CenterPair CP = parseCenterPair(loadKind(path, "centerpair"), baseDirOf(path),
                                  cfg.tol);
  {
    ReportSection& s = rep.section("input");
    s.item("base rank", std::to_string(CP.base.rank));
    s.item("center rank", std::to_string(CP.center.rank));
  }
  addCenterPhases(rep, centerPairCheck(CP, cfg.seed, cfg.tol));
  return rep;
}

Report runDouble(const std::string& path, const std::string& emitPrefix,
                 const RunConfig& cfg) {
  Report rep;
  rep.command = "double";
  rep.input = path;
  rep.tol = cfg.tol;

  FiniteGroup G = parseGroup(loadKind(path, "group"));
  DoubleData DD = doubleModularData(G, cfg.seed, cfg.tol);
  {
    ReportSection& s = rep.section("group");
    s.item("order", std::to_string(G.order));
    if (!G.name.empty()) s.item("name", G.name);
    s.item("conjugacy classes",
           std::to_string(DD.baseTable.classes.classes.size()));
    s.item("irreducible degrees", fmtInt64Vector(DD.baseTable.degrees));
  }
  {
    ReportSection& s = rep.section("double");
    s.item("simples", std::to_string(DD.modular.rank));
    Eigen::VectorXd d = quantumDims(DD.modular, cfg.tol);
    if (DD.modular.rank <= 2 * kListingCap) s.item("dims", fmtRealVector(d));
    double orderSq = static_cast<double>(G.order) * G.order;
    double dev = std::abs(d.squaredNorm() - orderSq);
    s.checks.push_back(Check{"squared-dims-sum-to-order-squared",
                             dev <= cfg.tol.integer * orderSq, dev,
                             {}});
  }
  {
    ReportSection& s = rep.section("modular-axioms");
    copyChecks(s, validateModularData(DD.modular, cfg.tol));
  }

  CenterPair CP{DD.base, DD.modular, DD.branching, DD.iota};
  addCenterPhases(rep, centerPairCheck(CP, cfg.seed, cfg.tol));

  if (!emitPrefix.empty()) {
    std::string stem = fs::path(emitPrefix).filename().string();
    std::string basePath = emitPrefix + ".rep.fusion.json";
    std::string centerPath = emitPrefix + ".double.modular.json";
    std::string pairPath = emitPrefix + ".double.centerpair.json";
    writeJsonFile(basePath, toJson(DD.base));
    writeJsonFile(centerPath, toJson(DD.modular));
    writeJsonFile(pairPath,
                  centerPairJson(stem + ".rep.fusion.json",
                                 stem + ".double.modular.json", DD.branching,
                                 DD.iota));
    ReportSection& s = rep.section("emitted-files");
    s.item("base ring", basePath);
    s.item("modular data", centerPath);
    s.item("center pair", pairPath);
  }
  return rep;
}

namespace {

void spectrumChecks(ReportSection& s, const ProbabilityGroup& P,
                    const RunConfig& cfg) {
  CharacterTable T = characterTable(P, cfg.seed, cfg.tol);
  OrthogonalityReport orth = checkOrthogonality(P, T, cfg.tol);
  s.checks.push_back(Check{"orthogonality", orth.pass,
                           std::max(orth.rowMaxDev, orth.columnMaxDev),
                           {}});
  DualHypergroup D = dualConstants(P, T, cfg.tol);
  s.checks.push_back(
      Check{"dual-row-sums-one", D.rowSumDev <= 10 * cfg.tol.eq, D.rowSumDev, {}});
  s.checks.push_back(
      Check{"dual-unit-law", D.dualUnitDev <= 10 * cfg.tol.eq, D.dualUnitDev, {}});
  s.checks.push_back(Check{"dualizable", D.dualizable,
                           std::max(-D.minEntry, D.maxImag),
                           {}});
}

ReportSection corpusSection(const fs::path& path, const RunConfig& cfg) {
  ReportSection s;
  s.title = path.filename().string();
  try {
    json j = loadJsonFile(path.string());
    std::string kind = detectKind(j);
    s.item("kind", kind);
    if (kind == "fusion") {
      FusionRing R = parseFusionRing(j);
      s.item("rank", std::to_string(R.rank));
      ValidationReport ax = validateFusionRing(R);
      s.checks.push_back(aggregate("based-ring-axioms", ax));
      if (!ax.allPass()) return s;
      if (!isCommutative(R)) {
        s.item("characters", "skipped (noncommutative)");
        return s;
      }
      spectrumChecks(s, toProbabilityGroup(R, cfg.tol), cfg);
    } else if (kind == "probgroup") {
      ProbabilityGroup P = parseProbabilityGroup(j, cfg.tol);
      s.item("rank", std::to_string(P.rank));
      ValidationReport ax = validateAxioms(P, cfg.tol);
      s.checks.push_back(aggregate("axioms", ax));
      if (!ax.allPass()) return s;
      spectrumChecks(s, P, cfg);
    } else if (kind == "modular") {
      ModularData M = parseModularData(j);
      s.item("rank", std::to_string(M.rank));
      s.checks.push_back(
          aggregate("modular-axioms", validateModularData(M, cfg.tol)));
    } else if (kind == "group") {
      FiniteGroup G = parseGroup(j);
      s.item("order", std::to_string(G.order));
      ClassHypergroup CH = classHypergroup(G, cfg.tol);
      s.checks.push_back(
          aggregate("class-hypergroup-axioms", validateAxioms(CH.pg, cfg.tol)));
      GroupCharacterTable T = groupCharacterTable(G, cfg.seed, cfg.tol);
      s.item("degrees", fmtInt64Vector(T.degrees));
      s.checks.push_back(Check{"character-degrees-integral", true, 0.0, {}});
    } else if (kind == "centerpair") {
      CenterPair CP =
          parseCenterPair(j, baseDirOf(path.string()), cfg.tol);
      CenterPairReport cpr = centerPairCheck(CP, cfg.seed, cfg.tol);
      s.checks.push_back(aggregate("consistency", cpr.consistency));
      if (cpr.completed) {
        s.checks.push_back(aggregate("restriction", cpr.restriction));
        s.checks.push_back(aggregate("selection", cpr.selection));
        s.checks.push_back(aggregate("reproduction", cpr.reproduction));
        s.checks.push_back(aggregate("divisibility", cpr.divisibility));
      }
    } else {
      s.checks.push_back(failedCheck("kind", "unsupported kind \"" + kind + "\""));
    }
  } catch (const std::exception& e) {
    s.checks.push_back(failedCheck("processing", e.what()));
  }
  return s;
}

}  // namespace

Report runCorpus(const std::string& dir, const RunConfig& cfg) {
  Report rep;
  rep.command = "corpus";
  rep.input = dir;
  rep.tol = cfg.tol;

  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  if (files.empty()) throw InputError("no .json files in " + dir);

  std::vector<ReportSection> sections(files.size());
  int workers = std::max(1, cfg.workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < files.size(); ++i)
      sections[i] = corpusSection(files[i], cfg);
  } else {
    for (std::size_t base = 0; base < files.size();
         base += static_cast<std::size_t>(workers)) {
      std::size_t end =
          std::min(files.size(), base + static_cast<std::size_t>(workers));
      std::vector<std::future<ReportSection>> wave;
      for (std::size_t i = base; i < end; ++i)
        wave.push_back(std::async(
            std::launch::async,
            [&cfg](fs::path p) { return corpusSection(p, cfg); }, files[i]));
      for (std::size_t i = base; i < end; ++i)
        sections[i] = wave[i - base].get();
    }
  }
  int failures = 0;
  for (ReportSection& s : sections) {
    for (const Check& c : s.checks)
      if (!c.pass) ++failures;
    rep.sections.push_back(std::move(s));
  }
  ReportSection& s = rep.section("totals");
  s.item("files", std::to_string(files.size()));
  s.item("failing checks", std::to_string(failures));
  return rep;
}

}  // namespace probgroup
