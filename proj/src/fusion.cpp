#include "probgroup/fusion.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <sstream>

namespace probgroup {

namespace {

std::string tripleWitness(const FusionRing& R, int i, int j, int k) {
  std::ostringstream os;
  os << "(" << R.labels[i] << ", " << R.labels[j] << ", " << R.labels[k] << ")";
  return os.str();
}

void requireShape(const FusionRing& R) {
  if (R.rank <= 0) throw InputError("fusion ring: rank must be positive");
  if (R.N.dim() != R.rank)
    throw InputError("fusion ring: tensor dimension does not match rank");
  if (static_cast<int>(R.labels.size()) != R.rank)
    throw InputError("fusion ring: label count does not match rank");
  if (static_cast<int>(R.dual.size()) != R.rank)
    throw InputError("fusion ring: dual involution size does not match rank");
  if (R.unit < 0 || R.unit >= R.rank)
    throw InputError("fusion ring: unit index out of range");
  std::vector<char> seen(R.rank, 0);
  for (int i = 0; i < R.rank; ++i) {
    int d = R.dual[i];
    if (d < 0 || d >= R.rank)
      throw InputError("fusion ring: dual index out of range");
    if (R.dual[d] != i)
      throw InputError("fusion ring: declared dual map is not an involution");
    seen[d] = 1;
  }
  for (int i = 0; i < R.rank; ++i)
    if (!seen[i]) throw InputError("fusion ring: dual map is not a bijection");
  for (int i = 0; i < R.rank; ++i)
    for (int j = 0; j < R.rank; ++j)
      for (int k = 0; k < R.rank; ++k)
        if (R.N(i, j, k) < 0)
          throw InputError("fusion ring: negative multiplicity at " +
                           tripleWitness(R, i, j, k));
}

}  // namespace

ValidationReport validateFusionRing(const FusionRing& R) {
  requireShape(R);
  ValidationReport rep;
  const int n = R.rank;

  {
    Check& c = rep.add("unit-law");
    c.pass = true;
    for (int j = 0; j < n && c.pass; ++j)
      for (int k = 0; k < n; ++k) {
        std::int64_t want = (j == k) ? 1 : 0;
        if (R.N(R.unit, j, k) != want || R.N(j, R.unit, k) != want) {
          c.pass = false;
          c.witness = tripleWitness(R, R.unit, j, k);
          break;
        }
      }
  }

  {
    Check& c = rep.add("associativity");
    c.pass = true;
    for (int i = 0; i < n && c.pass; ++i)
      for (int j = 0; j < n && c.pass; ++j)
        for (int k = 0; k < n && c.pass; ++k)
          for (int d = 0; d < n; ++d) {
            std::int64_t lhs = 0, rhs = 0;
            for (int x = 0; x < n; ++x) lhs += R.N(i, j, x) * R.N(x, k, d);
            for (int y = 0; y < n; ++y) rhs += R.N(j, k, y) * R.N(i, y, d);
            if (lhs != rhs) {
              c.pass = false;
              std::ostringstream os;
              os << tripleWitness(R, i, j, k) << " -> " << R.labels[d]
                 << ": " << lhs << " vs " << rhs;
              c.witness = os.str();
              break;
            }
          }
  }

  {
    Check& c = rep.add("unit-coefficient-pairs-duals");
    c.pass = true;
    for (int i = 0; i < n && c.pass; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t want = (j == R.dual[i]) ? 1 : 0;
        if (R.N(i, j, R.unit) != want) {
          c.pass = false;
          c.witness = tripleWitness(R, i, j, R.unit);
          break;
        }
      }
  }

  {
    Check& c = rep.add("involution-antihomomorphism");
    c.pass = true;
    for (int i = 0; i < n && c.pass; ++i)
      for (int j = 0; j < n && c.pass; ++j)
        for (int k = 0; k < n; ++k)
          if (R.N(i, j, k) != R.N(R.dual[j], R.dual[i], R.dual[k])) {
            c.pass = false;
            c.witness = tripleWitness(R, i, j, k);
            break;
          }
  }

  {
    Check& c = rep.add("cyclic-symmetry");
    c.pass = true;
    for (int i = 0; i < n && c.pass; ++i)
      for (int j = 0; j < n && c.pass; ++j)
        for (int k = 0; k < n; ++k) {
          std::int64_t a = R.N(i, j, R.dual[k]);
          std::int64_t b = R.N(j, k, R.dual[i]);
          std::int64_t d = R.N(k, i, R.dual[j]);
          if (a != b || b != d) {
            c.pass = false;
            c.witness = tripleWitness(R, i, j, k);
            break;
          }
        }
  }

  return rep;
}

bool isCommutative(const FusionRing& R) {
  for (int i = 0; i < R.rank; ++i)
    for (int j = 0; j < i; ++j)
      for (int k = 0; k < R.rank; ++k)
        if (R.N(i, j, k) != R.N(j, i, k)) return false;
  return true;
}

namespace {

Eigen::MatrixXd leftMultiplicationInt(const FusionRing& R, int i) {
  Eigen::MatrixXd L(R.rank, R.rank);
  for (int k = 0; k < R.rank; ++k)
    for (int j = 0; j < R.rank; ++j)
      L(k, j) = static_cast<double>(R.N(i, j, k));
  return L;
}

double spectralRadius(const Eigen::MatrixXd& L) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(L);
  if (es.info() != Eigen::Success)
    throw CheckError("eigensolver failed to converge on a multiplication matrix");
  double r = 0.0;
  for (int i = 0; i < L.rows(); ++i)
    r = std::max(r, std::abs(es.eigenvalues()(i)));
  return r;
}

// One Gauss-Newton pass on the full multiplicativity system
// v_i v_j = sum_k N(i,j,k) v_k with v_unit pinned to 1.
Eigen::VectorXd refineDimensionVector(const FusionRing& R, Eigen::VectorXd v) {
  const int n = R.rank;
  const int rows = n * n + 1;
  for (int iter = 0; iter < 40; ++iter) {
    Eigen::VectorXd r(rows);
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(rows, n);
    int row = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j, ++row) {
        double sum = 0.0;
        for (int k = 0; k < n; ++k) sum += R.N(i, j, k) * v(k);
        r(row) = v(i) * v(j) - sum;
        J(row, i) += v(j);
        J(row, j) += v(i);
        for (int k = 0; k < n; ++k) J(row, k) -= R.N(i, j, k);
      }
    r(row) = v(R.unit) - 1.0;
    J(row, R.unit) = 1.0;
    Eigen::VectorXd step = J.colPivHouseholderQr().solve(-r);
    v += step;
    if (step.lpNorm<Eigen::Infinity>() < 1e-14 * (1.0 + v.lpNorm<Eigen::Infinity>()))
      break;
  }
  return v;
}

}  // namespace

FPDimData fpDimensions(const FusionRing& R, const Tolerances& tol) {
  requireShape(R);
  const int n = R.rank;
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = spectralRadius(leftMultiplicationInt(R, i));
  v = refineDimensionVector(R, v);

  double homDev = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) sum += R.N(i, j, k) * v(k);
      homDev = std::max(homDev, std::abs(v(i) * v(j) - sum));
    }
  if (homDev > tol.eq)
    throw CheckError("dimension vector is not multiplicative (deviation " +
                     std::to_string(homDev) + ")");
  for (int i = 0; i < n; ++i) {
    if (v(i) < 1.0 - tol.eq)
      throw CheckError("dimension below 1 at " + R.labels[i]);
    if (std::abs(v(i) - v(R.dual[i])) > tol.eq)
      throw CheckError("dimension not dual-invariant at " + R.labels[i]);
  }

  FPDimData out;
  out.fpdim = v;
  out.total = 0.0;
  for (int i = 0; i < n; ++i) out.total += v(i) * v(R.dual[i]);
  return out;
}

ProbabilityGroup toProbabilityGroup(const FusionRing& R, const Tolerances& tol) {
  if (!isCommutative(R))
    throw CheckError("cannot normalize a non-commutative based ring");
  FPDimData fp = fpDimensions(R, tol);
  Tensor3<double> p(R.rank);
  for (int i = 0; i < R.rank; ++i)
    for (int j = 0; j < R.rank; ++j)
      for (int k = 0; k < R.rank; ++k)
        p(i, j, k) = R.N(i, j, k) * fp.fpdim(k) / (fp.fpdim(i) * fp.fpdim(j));
  return makeProbabilityGroup(R.rank, R.labels, R.unit, R.dual, std::move(p), tol);
}

}  // namespace probgroup
