#include "probgroup/class_algebra.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

namespace probgroup {

namespace {

std::string idxTriple(int i, int j, int k) {
  std::ostringstream os;
  os << "(" << i << ", " << j << ", " << k << ")";
  return os.str();
}

}  // namespace

ClassAlgebra buildClassAlgebra(const FusionRing& R, std::uint64_t seed,
                               const Tolerances& tol) {
  if (!isCommutative(R))
    throw CheckError("class algebra requires a commutative based ring");
  if (ValidationReport v = validateFusionRing(R); !v.allPass())
    throw CheckError("class algebra over a ring failing its axioms (" +
                     v.firstFailure()->name + ")");

  ClassAlgebra CA;
  CA.ring = R;
  FPDimData fp = fpDimensions(R, tol);
  CA.fpdim = fp.fpdim;
  CA.dimTotal = fp.total;
  CA.P = toProbabilityGroup(R, tol);
  CA.T = characterTable(CA.P, seed, tol);
  CA.dual = dualConstants(CA.P, CA.T, tol);

  const int n = R.rank;
  CA.classDims.resize(n);
  for (int j = 0; j < n; ++j) {
    Complex nj = CA.T.codegrees(j);
    if (std::abs(nj.imag()) > 1e-6 * std::abs(nj))
      throw CheckError("codegree " + std::to_string(j) + " is not real");
    CA.classDims(j) = CA.dimTotal / nj.real();
  }
  if (std::abs(CA.classDims(0) - 1.0) > 1e-6)
    throw CheckError("class dimension of the augmentation is not 1");
  if (std::abs(CA.classDims.sum() - CA.dimTotal) > 1e-6 * CA.dimTotal)
    throw CheckError("class dimensions do not sum to the total dimension");

  CA.classSums.resize(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      CA.classSums(j, i) = CA.classDims(j) * CA.fpdim(i) * CA.T.M(j, i);

  CA.cointegral.resize(n);
  for (int i = 0; i < n; ++i) CA.cointegral(i) = CA.fpdim(i) * CA.fpdim(i) / CA.dimTotal;

  CA.c = burnsideConstants(CA, &CA.burnsideCrossDev, tol);
  return CA;
}

Tensor3<Complex> burnsideConstants(const ClassAlgebra& CA, double* crossDev,
                                   const Tolerances& tol) {
  const int n = CA.ring.rank;
  Tensor3<Complex> viaCharacters(n);
  Tensor3<Complex> viaDual(n);
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Complex sum(0.0, 0.0);
        for (int s = 0; s < n; ++s)
          sum += CA.classSums(i, s) * CA.classSums(j, s) *
                 CA.classSums(k, CA.ring.dual[s]) / CA.fpdim(s);
        viaCharacters(i, j, k) = sum / (CA.dimTotal * CA.classDims(k));
        viaDual(i, j, k) = CA.dual.phat(i, j, k) * CA.classDims(i) *
                           CA.classDims(j) / CA.classDims(k);
        worst = std::max(worst,
                         std::abs(viaCharacters(i, j, k) - viaDual(i, j, k)));
      }
  if (crossDev) *crossDev = worst;
  if (worst > 10.0 * tol.eq * std::max(1.0, CA.dimTotal))
    throw InternalError(
        "class-sum structure constants disagree between the character sum and "
        "the rescaled dual constants (deviation " +
        std::to_string(worst) + ")");
  return viaCharacters;
}

CentralLemmaReport verifyCentralLemma(const ClassAlgebra& CA,
                                      const Tolerances& tol) {
  const int n = CA.ring.rank;
  CentralLemmaReport rep;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int s = 0; s < n; ++s) {
        Complex prodValue(0.0, 0.0);
        for (int k = 0; k < n; ++k)
          prodValue += CA.c(i, j, k) * CA.classSums(k, s);
        double dev = std::abs(CA.fpdim(s) * prodValue -
                              CA.classSums(i, s) * CA.classSums(j, s));
        rep.maxDev = std::max(rep.maxDev, dev);
      }
  rep.pass = rep.maxDev <= tol.eq * CA.dimTotal * CA.dimTotal;
  return rep;
}

namespace {

IntegralityEntry classifyValue(Complex v, const std::optional<Lattice>& lattice,
                               const Tolerances& tol) {
  IntegralityEntry e;
  e.value = v;
  if (auto r = nearestNonnegInteger(v, tol.integer)) {
    e.cls = IntegralityClass::Integer;
    e.rounded = *r;
    return e;
  }
  if (lattice && std::abs(v.imag()) <= tol.integer) {
    if (auto coords = latticeCoordinates(v, *lattice)) {
      e.cls = IntegralityClass::LatticeMember;
      e.coords = *coords;
      return e;
    }
  }
  e.cls = IntegralityClass::Unresolved;
  return e;
}

}  // namespace

IntegralityReport integralityReport(const ClassAlgebra& CA,
                                    const std::optional<Lattice>& lattice,
                                    const Tolerances& tol) {
  const int n = CA.ring.rank;
  IntegralityReport rep;
  rep.dimTotal = CA.dimTotal;
  if (auto r = nearestNonnegInteger(Complex(CA.dimTotal, 0.0), tol.integer)) {
    rep.weaklyIntegral = true;
    rep.dimRounded = *r;
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        IntegralityEntry e = classifyValue(CA.dimTotal * CA.c(i, j, k), lattice, tol);
        e.i = i;
        e.j = j;
        e.k = k;
        switch (e.cls) {
          case IntegralityClass::Integer: ++rep.scaledInteger; break;
          case IntegralityClass::LatticeMember: ++rep.scaledLattice; break;
          case IntegralityClass::Unresolved: ++rep.scaledUnresolved; break;
        }
        rep.scaled.push_back(std::move(e));
      }

  for (int j = 0; j < n; ++j) {
    IntegralityEntry e = classifyValue(CA.T.codegrees(j), lattice, tol);
    e.k = j;
    switch (e.cls) {
      case IntegralityClass::Integer: ++rep.codegreeInteger; break;
      case IntegralityClass::LatticeMember: ++rep.codegreeLattice; break;
      case IntegralityClass::Unresolved: ++rep.codegreeUnresolved; break;
    }
    rep.codegrees.push_back(std::move(e));
  }

  rep.scaledCertified = rep.weaklyIntegral
                            ? rep.scaledInteger == static_cast<int>(rep.scaled.size())
                            : rep.scaledUnresolved == 0;
  rep.codegreesCertified =
      rep.weaklyIntegral
          ? rep.codegreeInteger == static_cast<int>(rep.codegrees.size())
          : rep.codegreeUnresolved == 0;
  return rep;
}

ValidationReport validateModularData(const ModularData& M, const Tolerances& tol) {
  if (M.rank <= 0) throw InputError("modular data: rank must be positive");
  if (M.S.rows() != M.rank || M.S.cols() != M.rank)
    throw InputError("modular data: S-matrix shape does not match rank");
  if (static_cast<int>(M.dual.size()) != M.rank)
    throw InputError("modular data: dual involution size does not match rank");
  for (int i = 0; i < M.rank; ++i) {
    int d = M.dual[i];
    if (d < 0 || d >= M.rank)
      throw InputError("modular data: dual index out of range");
    if (M.dual[d] != i)
      throw InputError("modular data: dual map is not an involution");
  }

  ValidationReport rep;
  const int n = M.rank;
  {
    Check& c = rep.add("first-row-nonzero");
    c.pass = true;
    for (int l = 0; l < n; ++l)
      if (std::abs(M.S(0, l)) <= tol.eq) {
        c.pass = false;
        c.witness = "column " + std::to_string(l);
        break;
      }
  }
  {
    Check& c = rep.add("symmetric");
    c.deviation = (M.S - M.S.transpose()).cwiseAbs().maxCoeff();
    c.pass = c.deviation <= tol.eq;
  }
  double kappa = std::sqrt(M.S.row(0).cwiseAbs2().sum());
  Eigen::MatrixXcd U = M.S / kappa;
  {
    Check& c = rep.add("unitary-up-to-scale");
    c.deviation = (U * U.adjoint() - Eigen::MatrixXcd::Identity(n, n))
                      .cwiseAbs()
                      .maxCoeff();
    c.pass = c.deviation <= 100 * tol.eq;
  }
  {
    Check& c = rep.add("matrix-square-is-duality-permutation");
    Eigen::MatrixXcd sq = U * U;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double want = (j == M.dual[i]) ? 1.0 : 0.0;
        double dev = std::abs(std::abs(sq(i, j)) - want);
        if (dev > c.deviation) {
          c.deviation = dev;
          c.witness = "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
        }
      }
    c.pass = c.deviation <= 100 * tol.eq;
  }
  return rep;
}

Eigen::VectorXd quantumDims(const ModularData& M, const Tolerances& tol) {
  Eigen::VectorXd d(M.rank);
  for (int l = 0; l < M.rank; ++l) {
    Complex v = M.S(0, l) / M.S(0, 0);
    if (std::abs(v.imag()) > 100 * tol.eq * (1.0 + std::abs(v)))
      throw CheckError("quantum dimension " + std::to_string(l) + " is not real");
    if (std::abs(v) <= tol.eq)
      throw CheckError("quantum dimension " + std::to_string(l) + " vanishes");
    d(l) = v.real();
  }
  return d;
}

Tensor3<Complex> verlindeCoefficients(const ModularData& M) {
  const int n = M.rank;
  double kappa = std::sqrt(M.S.row(0).cwiseAbs2().sum());
  Eigen::MatrixXcd U = M.S / kappa;
  Tensor3<Complex> N(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Complex sum(0.0, 0.0);
        for (int l = 0; l < n; ++l)
          sum += U(i, l) * U(j, l) * std::conj(U(k, l)) / U(0, l);
        N(i, j, k) = sum;
      }
  return N;
}

SelfDualityReport verifySelfDual(const FusionRing& R, const ModularData& M,
                                 std::uint64_t seed, const Tolerances& tol) {
  SelfDualityReport rep;
  if (M.rank != R.rank) throw InputError("modular data rank does not match ring rank");
  if (ValidationReport v = validateFusionRing(R); !v.allPass())
    throw CheckError("self-duality check on a ring failing its axioms (" +
                     v.firstFailure()->name + ")");
  for (Check& c : validateModularData(M, tol).checks)
    rep.checks.checks.push_back(std::move(c));

  const int n = R.rank;
  {
    Check& c = rep.checks.add("duality-involutions-agree");
    c.pass = M.dual == R.dual;
  }

  {
    Check& c = rep.checks.add("fusion-rules-from-s-matrix");
    Tensor3<Complex> N = verlindeCoefficients(M);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double dev = std::abs(N(i, j, k) -
                                Complex(static_cast<double>(R.N(i, j, k)), 0.0));
          if (dev > c.deviation) {
            c.deviation = dev;
            c.witness = idxTriple(i, j, k);
          }
        }
    c.pass = c.deviation <= tol.integer;
  }

  Eigen::VectorXd d = quantumDims(M, tol);
  FPDimData fp = fpDimensions(R, tol);
  {
    Check& c = rep.checks.add("quantum-dims-match-ring-dims");
    c.deviation = (d - fp.fpdim).cwiseAbs().maxCoeff();
    c.pass = c.deviation <= 100 * tol.eq;
  }

  ProbabilityGroup P = toProbabilityGroup(R, tol);
  CharacterTable T = characterTable(P, seed, tol);
  const double matchTol = 100 * tol.eq;

  rep.rowMap.assign(n, -1);
  {
    Check& c = rep.checks.add("s-matrix-columns-are-characters");
    c.pass = true;
    std::vector<char> used(n, 0);
    for (int i = 0; i < n && c.pass; ++i) {
      int match = -1;
      for (int r = 0; r < n; ++r) {
        double dev = 0.0;
        for (int j = 0; j < n; ++j) {
          Complex nu = M.S(i, j) * M.S(0, 0) / (M.S(0, i) * M.S(0, j));
          dev = std::max(dev, std::abs(T.M(r, j) - nu));
        }
        if (dev <= matchTol) {
          match = r;
          break;
        }
      }
      if (match < 0 || used[match]) {
        c.pass = false;
        c.witness = "basis element " + std::to_string(i) +
                    (match < 0 ? " induces no character row" : " collides");
        break;
      }
      used[match] = 1;
      rep.rowMap[i] = match;
    }
  }

  if (rep.checks.allPass()) {
    DualHypergroup D = dualConstants(P, T, tol);
    {
      Check& c = rep.checks.add("dual-constants-are-nonnegative");
      c.deviation = std::max(-D.minEntry, D.maxImag);
      c.pass = D.dualizable;
    }
    {
      Check& c = rep.checks.add("bijection-carries-product-to-dual-product");
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            double dev = std::abs(
                Complex(P.p(i, j, k), 0.0) -
                D.phat(rep.rowMap[i], rep.rowMap[j], rep.rowMap[k]));
            if (dev > c.deviation) {
              c.deviation = dev;
              c.witness = idxTriple(i, j, k);
            }
          }
      c.pass = c.deviation <= 10 * tol.eq;
    }
    {
      Check& c = rep.checks.add("class-dimensions-are-squared-dims");
      for (int i = 0; i < n; ++i) {
        Complex nj = T.codegrees(rep.rowMap[i]);
        double classDim = fp.total / nj.real();
        double dev = std::abs(classDim - d(i) * d(i));
        if (dev > c.deviation) {
          c.deviation = dev;
          c.witness = "basis element " + std::to_string(i);
        }
      }
      c.pass = c.deviation <= 100 * tol.eq * fp.total;
    }
  }
  return rep;
}

CenterPairReport centerPairCheck(const CenterPair& CP, std::uint64_t seed,
                                 const Tolerances& tol) {
  CenterPairReport rep;
  const int n = CP.base.rank;
  const int r = CP.center.rank;
  const double matchTol = 100 * tol.eq;

  // ---- phase: consistency ----
  if (ValidationReport v = validateFusionRing(CP.base); !v.allPass())
    throw CheckError("center pair: base ring fails its axioms (" +
                     v.firstFailure()->name + ")");
  if (!isCommutative(CP.base))
    throw CheckError("center pair: base ring must be commutative");
  for (Check& c : validateModularData(CP.center, tol).checks)
    rep.consistency.checks.push_back(std::move(c));

  if (CP.branching.rows() != r || CP.branching.cols() != n)
    throw InputError("center pair: branching matrix shape mismatch");
  if (static_cast<int>(CP.iota.size()) != n)
    throw InputError("center pair: iota size mismatch");
  for (int i = 0; i < n; ++i)
    if (CP.iota[i] < 0 || CP.iota[i] >= r)
      throw InputError("center pair: iota index out of range");
  for (int u = 0; u < r; ++u)
    for (int i = 0; i < n; ++i)
      if (CP.branching(u, i) < 0)
        throw InputError("center pair: negative branching multiplicity");

  Eigen::VectorXd dHat = quantumDims(CP.center, tol);
  FPDimData fp = fpDimensions(CP.base, tol);

  {
    Check& c = rep.consistency.add("iota-rows-are-indicators");
    c.pass = true;
    for (int i = 0; i < n && c.pass; ++i)
      for (int ip = 0; ip < n; ++ip)
        if (CP.branching(CP.iota[i], ip) != (i == ip ? 1 : 0)) {
          c.pass = false;
          c.witness = "iota(" + std::to_string(i) + ")";
          break;
        }
  }
  {
    Check& c = rep.consistency.add("iota-preserves-dimensions");
    for (int i = 0; i < n; ++i) {
      double dev = std::abs(dHat(CP.iota[i]) - fp.fpdim(i));
      if (dev > c.deviation) {
        c.deviation = dev;
        c.witness = "base element " + std::to_string(i);
      }
    }
    c.pass = c.deviation <= matchTol;
  }
  {
    Check& c = rep.consistency.add("branching-preserves-dimensions");
    for (int u = 0; u < r; ++u) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += CP.branching(u, i) * fp.fpdim(i);
      double dev = std::abs(sum - dHat(u));
      if (dev > c.deviation) {
        c.deviation = dev;
        c.witness = "center simple " + std::to_string(u);
      }
    }
    c.pass = c.deviation <= matchTol;
  }

  Tensor3<Complex> verlinde = verlindeCoefficients(CP.center);
  Tensor3<std::int64_t> Nhat(r);
  {
    Check& c = rep.consistency.add("center-fusion-rules-are-integral");
    c.pass = true;
    for (int i = 0; i < r && c.pass; ++i)
      for (int j = 0; j < r && c.pass; ++j)
        for (int k = 0; k < r; ++k) {
          auto m = nearestNonnegInteger(verlinde(i, j, k), tol.integer);
          if (!m) {
            c.pass = false;
            c.deviation = std::abs(verlinde(i, j, k));
            c.witness = idxTriple(i, j, k);
            break;
          }
          Nhat(i, j, k) = *m;
        }
  }
  if (!rep.consistency.allPass()) return rep;

  {
    Check& c = rep.consistency.add("iota-embeds-base-fusion-rules");
    c.pass = true;
    std::vector<int> iotaInverse(r, -1);
    for (int i = 0; i < n; ++i) iotaInverse[CP.iota[i]] = i;
    for (int i = 0; i < n && c.pass; ++i)
      for (int j = 0; j < n && c.pass; ++j)
        for (int v = 0; v < r; ++v) {
          std::int64_t got = Nhat(CP.iota[i], CP.iota[j], v);
          std::int64_t want =
              iotaInverse[v] >= 0 ? CP.base.N(i, j, iotaInverse[v]) : 0;
          if (got != want) {
            c.pass = false;
            c.witness = "(" + std::to_string(i) + ", " + std::to_string(j) +
                        ") -> center simple " + std::to_string(v);
            break;
          }
        }
  }
  if (!rep.consistency.allPass()) return rep;
  rep.completed = true;

  // ---- phase: restriction ----
  ProbabilityGroup P = toProbabilityGroup(CP.base, tol);
  CharacterTable T = characterTable(P, seed, tol);
  auto centerChar = [&](int s, int u) {
    return CP.center.S(s, u) * CP.center.S(0, 0) /
           (CP.center.S(0, s) * CP.center.S(0, u));
  };

  rep.restrictionClasses.assign(n, {});
  std::vector<int> classOf(r, -1);
  {
    Check& c = rep.restriction.add("every-center-character-restricts");
    c.pass = true;
    for (int s = 0; s < r; ++s) {
      int match = -1;
      for (int j = 0; j < n; ++j) {
        double dev = 0.0;
        for (int i = 0; i < n; ++i)
          dev = std::max(dev, std::abs(centerChar(s, CP.iota[i]) - T.M(j, i)));
        if (dev <= matchTol) {
          match = j;
          break;
        }
      }
      if (match < 0) {
        c.pass = false;
        c.witness = "center simple " + std::to_string(s);
      } else {
        rep.restrictionClasses[match].push_back(s);
        classOf[s] = match;
      }
    }
  }
  {
    Check& c = rep.restriction.add("every-base-character-is-hit");
    c.pass = true;
    for (int j = 0; j < n; ++j)
      if (rep.restrictionClasses[j].empty()) {
        c.pass = false;
        c.witness = "base character " + std::to_string(j);
        break;
      }
  }
  if (!rep.restriction.allPass()) return rep;

  // ---- phase: selection ----
  Eigen::VectorXd classDims(n);
  for (int j = 0; j < n; ++j)
    classDims(j) = fp.total / T.codegrees(j).real();

  // center idempotent for character s, pushed through the branching to the
  // normalized base basis
  auto pushedIdempotent = [&](int s) {
    Complex codeg(0.0, 0.0);
    for (int u = 0; u < r; ++u)
      codeg += dHat(u) * dHat(CP.center.dual[u]) * centerChar(s, u) *
               centerChar(s, CP.center.dual[u]);
    Eigen::VectorXcd G = Eigen::VectorXcd::Zero(n);
    for (int u = 0; u < r; ++u) {
      Complex coeff = dHat(u) * dHat(CP.center.dual[u]) *
                      centerChar(s, CP.center.dual[u]) / codeg;
      for (int i = 0; i < n; ++i)
        G(i) += coeff / dHat(u) * static_cast<double>(CP.branching(u, i)) *
                fp.fpdim(i);
    }
    return G;
  };

  rep.sigma.assign(n, -1);
  {
    Check sel{"exactly-one-idempotent-restricts", true, 0.0, {}};
    Check dead{"unselected-idempotents-vanish", true, 0.0, {}};
    for (int j = 0; j < n; ++j) {
      std::vector<int> hits;
      for (int s : rep.restrictionClasses[j]) {
        Eigen::VectorXcd G = pushedIdempotent(s);
        double devSel =
            (G - T.idempotents.row(j).transpose()).cwiseAbs().maxCoeff();
        double devZero = G.cwiseAbs().maxCoeff();
        if (devSel <= matchTol) {
          hits.push_back(s);
        } else if (devZero > dead.deviation) {
          dead.deviation = devZero;
          dead.witness = "center simple " + std::to_string(s);
        }
      }
      if (hits.size() != 1) {
        sel.pass = false;
        sel.witness = "base character " + std::to_string(j) + " has " +
                      std::to_string(hits.size()) + " restricting idempotents";
      } else {
        rep.sigma[j] = hits[0];
      }
    }
    // an idempotent that neither matches nor vanishes is a failure
    dead.pass = dead.deviation <= matchTol;
    bool selected = sel.pass;
    rep.selection.checks.push_back(std::move(sel));
    rep.selection.checks.push_back(std::move(dead));
    if (!selected) return rep;
  }
  {
    Check& c = rep.selection.add("selected-dimension-matches-class-dimension");
    for (int j = 0; j < n; ++j) {
      double dev = std::abs(dHat(rep.sigma[j]) - classDims(j));
      if (dev > c.deviation) {
        c.deviation = dev;
        c.witness = "base character " + std::to_string(j);
      }
    }
    c.pass = c.deviation <= matchTol * std::max(1.0, fp.total);
  }

  // ---- phase: reproduction ----
  {
    DualHypergroup D = dualConstants(P, T, tol);
    Check& c = rep.reproduction.add("center-fusion-reproduces-dual-constants");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Complex sum(0.0, 0.0);
          for (int v : rep.restrictionClasses[k])
            sum += static_cast<double>(Nhat(rep.sigma[i], rep.sigma[j], v)) *
                   dHat(v);
          sum /= dHat(rep.sigma[i]) * dHat(rep.sigma[j]);
          double dev = std::abs(sum - D.phat(i, j, k));
          if (dev > c.deviation) {
            c.deviation = dev;
            c.witness = idxTriple(i, j, k);
          }
        }
    c.pass = c.deviation <= 10 * tol.eq;
  }

  // ---- phase: divisibility ----
  {
    bool integerData = nearestNonnegInteger(Complex(fp.total, 0.0), tol.integer)
                           .has_value();
    for (int u = 0; u < r && integerData; ++u)
      if (!nearestNonnegInteger(Complex(dHat(u), 0.0), tol.integer))
        integerData = false;
    for (int j = 0; j < n && integerData; ++j)
      if (!nearestNonnegInteger(Complex(classDims(j), 0.0), tol.integer))
        integerData = false;

    Check c{"class-dimension-divides-squared-dim", true, 0.0, {}};
    Check c1{"dimension-one-forces-class-dimension-one", true, 0.0, {}};
    if (!integerData) {
      c.pass = true;
      c.witness = "not applicable: non-integer dimensions";
      c1.pass = true;
      c1.witness = c.witness;
    } else {
      c.pass = true;
      c1.pass = true;
      for (int j = 0; j < n; ++j) {
        long long cd = *nearestNonnegInteger(Complex(classDims(j), 0.0), tol.integer);
        for (int s : rep.restrictionClasses[j]) {
          long long dsq = *nearestNonnegInteger(Complex(dHat(s) * dHat(s), 0.0),
                                                tol.integer);
          if (cd == 0 || dsq % cd != 0) {
            c.pass = false;
            c.witness = "class dimension " + std::to_string(cd) +
                        " does not divide " + std::to_string(dsq) +
                        " at center simple " + std::to_string(s);
          }
          long long ds = *nearestNonnegInteger(Complex(dHat(s), 0.0), tol.integer);
          if (ds == 1 && cd != 1) {
            c1.pass = false;
            c1.witness = "center simple " + std::to_string(s) +
                         " has dimension 1 but class dimension " +
                         std::to_string(cd);
          }
        }
      }
    }
    rep.divisibility.checks.push_back(std::move(c));
    rep.divisibility.checks.push_back(std::move(c1));
  }

  return rep;
}

}  // namespace probgroup
