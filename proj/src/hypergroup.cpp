#include "probgroup/hypergroup.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>

namespace probgroup {

namespace {

std::string pairWitness(const ProbabilityGroup& P, int a, int b) {
  return "(" + P.labels[a] + ", " + P.labels[b] + ")";
}

std::string tripleWitness(const ProbabilityGroup& P, int a, int b, int c) {
  return "(" + P.labels[a] + ", " + P.labels[b] + ", " + P.labels[c] + ")";
}

void requireShape(const ProbabilityGroup& P) {
  if (P.rank <= 0) throw InputError("probability group: rank must be positive");
  if (P.p.dim() != P.rank)
    throw InputError("probability group: tensor dimension does not match rank");
  if (static_cast<int>(P.labels.size()) != P.rank)
    throw InputError("probability group: label count does not match rank");
  if (static_cast<int>(P.dual.size()) != P.rank)
    throw InputError("probability group: dual involution size does not match rank");
  if (P.unit < 0 || P.unit >= P.rank)
    throw InputError("probability group: unit index out of range");
  std::vector<char> seen(P.rank, 0);
  for (int i = 0; i < P.rank; ++i) {
    int d = P.dual[i];
    if (d < 0 || d >= P.rank)
      throw InputError("probability group: dual index out of range");
    if (P.dual[d] != i)
      throw InputError("probability group: declared dual map is not an involution");
    seen[d] = 1;
  }
  for (int i = 0; i < P.rank; ++i)
    if (!seen[i])
      throw InputError("probability group: dual map is not a bijection");
}

}  // namespace

ProbabilityGroup makeProbabilityGroup(int rank, std::vector<std::string> labels,
                                      int unit, std::vector<int> dual,
                                      Tensor3<double> p, const Tolerances& tol) {
  ProbabilityGroup P;
  P.rank = rank;
  P.labels = std::move(labels);
  P.unit = unit;
  P.dual = std::move(dual);
  P.p = std::move(p);
  requireShape(P);
  P.h.resize(rank);
  for (int a = 0; a < rank; ++a) {
    double ret = P.p(a, P.dual[a], P.unit);
    if (ret <= tol.eq)
      throw InputError(
          "probability group: unit-return probability is not positive at " +
          P.labels[a]);
    P.h(a) = 1.0 / ret;
  }
  P.nA = P.h.sum();
  return P;
}

ValidationReport validateAxioms(const ProbabilityGroup& P, const Tolerances& tol) {
  requireShape(P);
  ValidationReport rep;
  const int n = P.rank;

  {
    Check& c = rep.add("nonnegative-probabilities");
    double worst = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k)
          if (-P.p(a, b, k) > worst) {
            worst = -P.p(a, b, k);
            c.witness = tripleWitness(P, a, b, k);
          }
    c.deviation = worst;
    c.pass = worst <= tol.eq;
  }

  {
    Check& c = rep.add("row-sums-one");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double sum = 0.0;
        for (int k = 0; k < n; ++k) sum += P.p(a, b, k);
        double dev = std::abs(sum - 1.0);
        if (dev > c.deviation) {
          c.deviation = dev;
          c.witness = pairWitness(P, a, b);
        }
      }
    c.pass = c.deviation <= tol.eq;
  }

  {
    Check& c = rep.add("associativity");
    for (int a = 0; a < n; ++a) {
      Eigen::MatrixXd La = leftMultiplication(P, a);
      for (int b = 0; b < n; ++b) {
        Eigen::MatrixXd lhs = La * leftMultiplication(P, b);
        Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, n);
        for (int k = 0; k < n; ++k)
          if (P.p(a, b, k) != 0.0) rhs += P.p(a, b, k) * leftMultiplication(P, k);
        Eigen::MatrixXd diff = (lhs - rhs).cwiseAbs();
        Eigen::Index r, col;
        double dev = diff.maxCoeff(&r, &col);
        if (dev > c.deviation) {
          c.deviation = dev;
          c.witness = tripleWitness(P, a, b, static_cast<int>(col)) + " -> " +
                      P.labels[static_cast<int>(r)];
        }
      }
    }
    c.pass = c.deviation <= tol.eq;
  }

  {
    Check& c = rep.add("unit-law");
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) {
        double want = (b == k) ? 1.0 : 0.0;
        double dev = std::max(std::abs(P.p(P.unit, b, k) - want),
                              std::abs(P.p(b, P.unit, k) - want));
        if (dev > c.deviation) {
          c.deviation = dev;
          c.witness = pairWitness(P, b, k);
        }
      }
    c.pass = c.deviation <= tol.eq;
  }

  {
    Check& c = rep.add("dual-involution");
    c.pass = true;
    for (int a = 0; a < n; ++a) {
      int found = -1;
      int count = 0;
      for (int b = 0; b < n; ++b)
        if (P.p(a, b, P.unit) > tol.eq) {
          found = b;
          ++count;
        }
      if (count != 1) {
        c.pass = false;
        c.witness = P.labels[a] + " has " + std::to_string(count) +
                    " partners with positive unit return";
        break;
      }
      if (found != P.dual[a]) {
        c.pass = false;
        c.witness = "recomputed dual of " + P.labels[a] + " is " +
                    P.labels[found] + ", declared " + P.labels[P.dual[a]];
        break;
      }
    }
  }

  {
    Check& c = rep.add("adjoint-symmetry");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k) {
          double dev =
              std::abs(P.p(a, b, k) - P.p(P.dual[b], P.dual[a], P.dual[k]));
          if (dev > c.deviation) {
            c.deviation = dev;
            c.witness = tripleWitness(P, a, b, k);
          }
        }
    c.pass = c.deviation <= tol.eq;
  }

  {
    Check& c = rep.add("unit-return-symmetry");
    for (int a = 0; a < n; ++a) {
      double dev = std::abs(P.p(a, P.dual[a], P.unit) - P.p(P.dual[a], a, P.unit));
      if (dev > c.deviation) {
        c.deviation = dev;
        c.witness = P.labels[a];
      }
    }
    c.pass = c.deviation <= tol.eq;
  }

  return rep;
}

Eigen::VectorXd haarIdempotent(const ProbabilityGroup& P) {
  return P.h / P.nA;
}

Eigen::VectorXcd multiply(const ProbabilityGroup& P, const Eigen::VectorXcd& x,
                          const Eigen::VectorXcd& y) {
  const int n = P.rank;
  Eigen::VectorXcd z = Eigen::VectorXcd::Zero(n);
  for (int a = 0; a < n; ++a) {
    if (x(a) == Complex(0.0, 0.0)) continue;
    for (int b = 0; b < n; ++b) {
      Complex xy = x(a) * y(b);
      if (xy == Complex(0.0, 0.0)) continue;
      for (int k = 0; k < n; ++k) z(k) += xy * P.p(a, b, k);
    }
  }
  return z;
}

Complex coefficientPairing(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
  return x.cwiseProduct(y).sum();
}

Eigen::MatrixXd leftMultiplication(const ProbabilityGroup& P, int a) {
  Eigen::MatrixXd L(P.rank, P.rank);
  for (int k = 0; k < P.rank; ++k)
    for (int b = 0; b < P.rank; ++b) L(k, b) = P.p(a, b, k);
  return L;
}

namespace {

// Rounds to six significant digits; values below the working resolution of a
// normalized table collapse to zero.  Used to erase eigensolver noise before
// the deterministic refinement, so different seeds start the refinement from
// identical points.
double snapDigit(double x) {
  if (std::abs(x) <= 1e-7) return 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.5e", x);
  return std::strtod(buf, nullptr);
}

Complex snapDigit(Complex z) { return Complex(snapDigit(z.real()), snapDigit(z.imag())); }

// Gauss-Newton on the multiplicativity system mu(a)mu(b) = sum_k p(a,b,k)mu(k)
// with mu(unit) pinned to 1.  Quadratic convergence from a start within the
// snap resolution of a true character.
bool refineCharacter(const ProbabilityGroup& P, Eigen::VectorXcd& mu) {
  const int n = P.rank;
  const int rows = n * n + 1;
  Eigen::VectorXcd r(rows);
  Eigen::MatrixXcd J(rows, n);
  for (int iter = 0; iter < 40; ++iter) {
    J.setZero();
    int row = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b, ++row) {
        Complex sum(0.0, 0.0);
        for (int k = 0; k < n; ++k) sum += P.p(a, b, k) * mu(k);
        r(row) = mu(a) * mu(b) - sum;
        J(row, a) += mu(b);
        J(row, b) += mu(a);
        for (int k = 0; k < n; ++k) J(row, k) -= P.p(a, b, k);
      }
    r(row) = mu(P.unit) - 1.0;
    J(row, P.unit) = 1.0;
    Eigen::VectorXcd step = J.colPivHouseholderQr().solve(-r);
    mu += step;
    if (step.lpNorm<Eigen::Infinity>() <
        1e-14 * (1.0 + mu.lpNorm<Eigen::Infinity>()))
      return true;
  }
  return false;
}

double characterResidual(const ProbabilityGroup& P, const Eigen::VectorXcd& mu) {
  const int n = P.rank;
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Complex sum(0.0, 0.0);
      for (int k = 0; k < n; ++k) sum += P.p(a, b, k) * mu(k);
      worst = std::max(worst, std::abs(mu(a) * mu(b) - sum));
    }
  return std::max(worst, std::abs(mu(P.unit) - 1.0));
}

long long roundKey(double x) {
  return static_cast<long long>(std::llround(x * 1e9));
}

}  // namespace

CharacterTable characterTable(const ProbabilityGroup& P, std::uint64_t seed,
                              const Tolerances& tol) {
  requireShape(P);
  const int n = P.rank;

  double commDev = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < a; ++b)
      for (int k = 0; k < n; ++k)
        commDev = std::max(commDev, std::abs(P.p(a, b, k) - P.p(b, a, k)));
  if (commDev > tol.eq)
    throw CheckError(
        "character table requires a commutative product (deviation " +
        std::to_string(commDev) + ")");

  std::vector<Eigen::MatrixXd> L(n);
  for (int a = 0; a < n; ++a) L[a] = leftMultiplication(P, a);

  std::string lastProblem = "no attempt made";
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * attempt);
    std::uniform_int_distribution<int> coeff(1, 1 << 20);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (int a = 0; a < n; ++a) M += static_cast<double>(coeff(rng)) * L[a];

    Eigen::EigenSolver<Eigen::MatrixXd> es(M);
    if (es.info() != Eigen::Success) {
      lastProblem = "eigensolver did not converge";
      continue;
    }
    double scale = 1.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(es.eigenvalues()(i)));
    bool separated = true;
    for (int i = 0; i < n && separated; ++i)
      for (int j = 0; j < i; ++j)
        if (std::abs(es.eigenvalues()(i) - es.eigenvalues()(j)) < 1e-9 * scale) {
          separated = false;
          break;
        }
    if (!separated) {
      lastProblem = "random combination had a degenerate spectrum";
      continue;
    }

    Eigen::MatrixXcd raw(n, n);  // row j = candidate character
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXcd v = es.eigenvectors().col(j);
      Eigen::Index pivot;
      v.cwiseAbs().maxCoeff(&pivot);
      for (int a = 0; a < n; ++a)
        raw(j, a) = (L[a] * v)(pivot) / v(pivot);
    }

    Eigen::MatrixXcd table(n, n);
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      Eigen::VectorXcd mu(n);
      for (int a = 0; a < n; ++a) mu(a) = snapDigit(raw(j, a));
      if (!refineCharacter(P, mu) || characterResidual(P, mu) > tol.eq) {
        lastProblem = "character refinement failed the multiplicativity test";
        ok = false;
        break;
      }
      table.row(j) = mu.transpose();
    }
    if (!ok) continue;

    // components this far below the snap resolution are refinement dust;
    // sweeping them keeps sort keys and derived quantities clean
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a) {
        Complex z = table(j, a);
        table(j, a) = Complex(std::abs(z.real()) < 5e-13 ? 0.0 : z.real(),
                              std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag());
      }

    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < i; ++j)
        if ((table.row(i) - table.row(j)).cwiseAbs().maxCoeff() <= 100 * tol.eq) {
          lastProblem = "two refined characters coincide";
          ok = false;
          break;
        }
    if (!ok) continue;

    // canonical order: augmentation first, the rest lexicographic by value
    int aug = -1;
    for (int j = 0; j < n; ++j) {
      double dev = (table.row(j) - Eigen::RowVectorXcd::Ones(n)).cwiseAbs().maxCoeff();
      if (dev <= 1e-6) aug = j;
    }
    if (aug < 0) {
      lastProblem = "augmentation character missing";
      continue;
    }
    std::vector<int> order;
    for (int j = 0; j < n; ++j)
      if (j != aug) order.push_back(j);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      for (int a = 0; a < n; ++a) {
        long long xr = roundKey(table(x, a).real()), yr = roundKey(table(y, a).real());
        if (xr != yr) return xr < yr;
        long long xi = roundKey(table(x, a).imag()), yi = roundKey(table(y, a).imag());
        if (xi != yi) return xi < yi;
      }
      for (int a = 0; a < n; ++a) {
        if (table(x, a).real() != table(y, a).real())
          return table(x, a).real() < table(y, a).real();
        if (table(x, a).imag() != table(y, a).imag())
          return table(x, a).imag() < table(y, a).imag();
      }
      return false;
    });
    order.insert(order.begin(), aug);

    CharacterTable T;
    T.M.resize(n, n);
    for (int j = 0; j < n; ++j) T.M.row(j) = table.row(order[j]);

    T.star.assign(n, -1);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k)
        if ((T.M.row(k) - T.M.row(j).conjugate()).cwiseAbs().maxCoeff() <=
            100 * tol.eq) {
          T.star[j] = k;
          break;
        }
      if (T.star[j] < 0)
        throw CheckError("conjugate of character " + std::to_string(j) +
                         " is not in the table");
    }
    for (int j = 0; j < n; ++j)
      if (T.star[T.star[j]] != j)
        throw CheckError("character conjugation is not an involution");

    T.codegrees.resize(n);
    for (int j = 0; j < n; ++j) {
      Complex s(0.0, 0.0);
      for (int a = 0; a < n; ++a) s += P.h(a) * T.M(j, a) * T.M(j, P.dual[a]);
      // mu(dual a) = conj(mu(a)), so every codegree is a real weighted sum of
      // squared moduli; a tiny imaginary residue is rounding noise
      if (std::abs(s.imag()) < 1e-9 * (1.0 + std::abs(s.real()))) s.imag(0.0);
      T.codegrees(j) = s;
    }
    if (std::abs(T.codegrees(0) - Complex(P.nA, 0.0)) > 1e-6 * P.nA)
      throw CheckError("augmentation codegree does not match the total weight");
    Complex recip(0.0, 0.0);
    for (int j = 0; j < n; ++j) recip += 1.0 / T.codegrees(j);
    if (std::abs(recip - Complex(1.0, 0.0)) > 1e-6)
      throw CheckError("codegree reciprocals do not sum to 1");

    T.dualWeights.resize(n);
    for (int j = 0; j < n; ++j) T.dualWeights(j) = P.nA / T.codegrees(j);

    T.idempotents = primitiveIdempotents(P, T, tol);
    return T;
  }
  throw CheckError("no usable separating combination after 8 seeds (" +
                   lastProblem + ")");
}

Eigen::MatrixXcd primitiveIdempotents(const ProbabilityGroup& P,
                                      const CharacterTable& T,
                                      const Tolerances& tol) {
  const int n = P.rank;
  Eigen::MatrixXcd F(n, n);
  for (int j = 0; j < n; ++j)
    for (int a = 0; a < n; ++a)
      F(j, a) = P.h(a) * T.M(j, P.dual[a]) / T.codegrees(j);

  const double bound = 100 * tol.eq;
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXcd Fj = F.row(j).transpose();
    for (int k = 0; k <= j; ++k) {
      Eigen::VectorXcd prod = multiply(P, Fj, F.row(k).transpose());
      Eigen::VectorXcd want =
          (j == k) ? Fj : Eigen::VectorXcd::Zero(n).eval();
      if ((prod - want).cwiseAbs().maxCoeff() > bound)
        throw CheckError("idempotents are not orthogonal at (" +
                         std::to_string(j) + ", " + std::to_string(k) + ")");
    }
    for (int a = 0; a < n; ++a) {
      Eigen::VectorXcd lhs = leftMultiplication(P, a).cast<Complex>() * Fj;
      if ((lhs - T.M(j, a) * Fj).cwiseAbs().maxCoeff() > bound)
        throw CheckError("idempotent " + std::to_string(j) +
                         " is not an eigenvector of " + P.labels[a]);
    }
  }
  Eigen::VectorXcd total = F.colwise().sum().transpose();
  Eigen::VectorXcd unitVec = Eigen::VectorXcd::Zero(n);
  unitVec(P.unit) = 1.0;
  if ((total - unitVec).cwiseAbs().maxCoeff() > bound)
    throw CheckError("idempotents do not sum to the unit");
  Eigen::VectorXcd haar = haarIdempotent(P).cast<Complex>();
  if ((F.row(0).transpose() - haar).cwiseAbs().maxCoeff() > bound)
    throw CheckError("idempotent of the augmentation is not the averaging element");
  return F;
}

OrthogonalityReport checkOrthogonality(const ProbabilityGroup& P,
                                       const CharacterTable& T,
                                       const Tolerances& tol) {
  const int n = P.rank;
  OrthogonalityReport rep;
  for (int j1 = 0; j1 < n; ++j1)
    for (int j2 = 0; j2 < n; ++j2) {
      Complex s(0.0, 0.0);
      for (int a = 0; a < n; ++a)
        s += P.h(a) * T.dualWeights(j1) * T.M(j1, a) * T.M(j2, P.dual[a]);
      Complex want = (j1 == j2) ? Complex(P.nA, 0.0) : Complex(0.0, 0.0);
      rep.rowMaxDev = std::max(rep.rowMaxDev, std::abs(s - want));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Complex s(0.0, 0.0);
      for (int j = 0; j < n; ++j)
        s += T.dualWeights(j) * P.h(a) * T.M(j, a) * T.M(j, P.dual[b]);
      Complex want = (a == b) ? Complex(P.nA, 0.0) : Complex(0.0, 0.0);
      rep.columnMaxDev = std::max(rep.columnMaxDev, std::abs(s - want));
    }
  rep.pass = rep.rowMaxDev <= tol.eq * P.nA && rep.columnMaxDev <= tol.eq * P.nA;
  return rep;
}

DualHypergroup dualConstants(const ProbabilityGroup& P, const CharacterTable& T,
                             const Tolerances& tol) {
  const int n = P.rank;
  DualHypergroup D;
  D.phat = Tensor3<Complex>(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Complex s(0.0, 0.0);
        for (int a = 0; a < n; ++a)
          s += P.h(a) * T.M(i, a) * T.M(j, a) * T.M(k, P.dual[a]);
        D.phat(i, j, k) = s / T.codegrees(k);
      }

  D.minEntry = 0.0;
  D.maxImag = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex rowSum(0.0, 0.0);
      for (int k = 0; k < n; ++k) {
        Complex v = D.phat(i, j, k);
        rowSum += v;
        D.minEntry = std::min(D.minEntry, v.real());
        D.maxImag = std::max(D.maxImag, std::abs(v.imag()));
      }
      D.rowSumDev = std::max(D.rowSumDev, std::abs(rowSum - Complex(1.0, 0.0)));
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex want = (j == T.star[i]) ? T.codegrees(i) / P.nA : Complex(0.0, 0.0);
      D.dualUnitDev = std::max(D.dualUnitDev, std::abs(D.phat(i, j, 0) - want));
    }

  Complex weightSum = T.dualWeights.sum();
  D.totalWeightDev = std::abs(weightSum - Complex(P.nA, 0.0));
  D.dualizable = D.minEntry >= -tol.eq && D.maxImag <= tol.eq;
  return D;
}

ProbabilityGroup dualAsProbabilityGroup(const ProbabilityGroup& P,
                                        const CharacterTable& T,
                                        const DualHypergroup& D,
                                        std::vector<std::string>* clampWarnings,
                                        const Tolerances& tol) {
  if (!D.dualizable)
    throw CheckError("dual structure constants are not a probability group");
  const int n = P.rank;
  Tensor3<double> p(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double v = D.phat(i, j, k).real();
        if (v < 0.0) {
          if (clampWarnings) {
            std::ostringstream os;
            os << "clamped dual constant (" << i << ", " << j << ", " << k
               << ") = " << v << " to 0";
            clampWarnings->push_back(os.str());
          }
          v = 0.0;
        }
        p(i, j, k) = v;
      }
  std::vector<std::string> labels(n);
  for (int j = 0; j < n; ++j) labels[j] = "mu" + std::to_string(j);
  ProbabilityGroup Q =
      makeProbabilityGroup(n, std::move(labels), 0, T.star, std::move(p), tol);
  for (int j = 0; j < n; ++j)
    if (std::abs(Q.h(j) - T.dualWeights(j)) > 1e-6 * (1.0 + std::abs(T.dualWeights(j))))
      throw CheckError("derived dual weight disagrees with the codegree at row " +
                       std::to_string(j));
  return Q;
}

}  // namespace probgroup
