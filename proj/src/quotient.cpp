#include "probgroup/quotient.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace probgroup {

namespace {

void requireMembers(const ProbabilityGroup& P, const std::vector<int>& members) {
  if (members.empty()) throw InputError("subhypergroup: empty member set");
  for (int m : members)
    if (m < 0 || m >= P.rank)
      throw InputError("subhypergroup: member index out of range");
  for (size_t i = 1; i < members.size(); ++i)
    if (members[i] <= members[i - 1])
      throw InputError("subhypergroup: members must be strictly increasing");
}

Eigen::VectorXd averagingElement(const ProbabilityGroup& P,
                                 const std::vector<int>& members) {
  double total = 0.0;
  for (int m : members) total += P.h(m);
  Eigen::VectorXd u = Eigen::VectorXd::Zero(P.rank);
  for (int m : members) u(m) = P.h(m) / total;
  return u;
}

}  // namespace

ValidationReport validateSubHypergroup(const ProbabilityGroup& P,
                                       const std::vector<int>& members,
                                       const Tolerances& tol) {
  requireMembers(P, members);
  ValidationReport rep;
  std::vector<char> inSet(P.rank, 0);
  for (int m : members) inSet[m] = 1;

  {
    Check& c = rep.add("contains-unit");
    c.pass = inSet[P.unit];
    if (!c.pass) c.witness = P.labels[P.unit];
  }
  {
    Check& c = rep.add("closed-under-duals");
    c.pass = true;
    for (int m : members)
      if (!inSet[P.dual[m]]) {
        c.pass = false;
        c.witness = P.labels[m];
        break;
      }
  }
  {
    Check& c = rep.add("closed-under-products");
    for (int a : members)
      for (int b : members) {
        double leak = 0.0;
        for (int k = 0; k < P.rank; ++k)
          if (!inSet[k]) leak += P.p(a, b, k);
        if (leak > c.deviation) {
          c.deviation = leak;
          c.witness = "(" + P.labels[a] + ", " + P.labels[b] + ")";
        }
      }
    c.pass = c.deviation <= tol.eq;
  }
  return rep;
}

std::vector<std::vector<int>> findSubHypergroups(const ProbabilityGroup& P,
                                                 const Tolerances& tol) {
  if (P.rank > 24)
    throw InputError("subhypergroup search is limited to rank 24");
  // close each subset of generators; generating from single elements and
  // unions of found subgroups reaches every subhypergroup at desk scale
  auto closeSet = [&](std::vector<char> inSet) {
    for (;;) {
      bool grew = false;
      for (int a = 0; a < P.rank; ++a) {
        if (!inSet[a]) continue;
        if (!inSet[P.dual[a]]) {
          inSet[P.dual[a]] = 1;
          grew = true;
        }
        for (int b = 0; b < P.rank; ++b) {
          if (!inSet[b]) continue;
          for (int k = 0; k < P.rank; ++k)
            if (!inSet[k] && P.p(a, b, k) > tol.eq) {
              inSet[k] = 1;
              grew = true;
            }
        }
      }
      if (!grew) return inSet;
    }
  };

  std::set<std::vector<int>> found;
  std::vector<char> unitOnly(P.rank, 0);
  unitOnly[P.unit] = 1;
  auto record = [&](const std::vector<char>& inSet) {
    std::vector<int> members;
    for (int i = 0; i < P.rank; ++i)
      if (inSet[i]) members.push_back(i);
    return found.insert(std::move(members)).second;
  };
  record(closeSet(unitOnly));
  for (int g = 0; g < P.rank; ++g) {
    std::vector<char> s = unitOnly;
    s[g] = 1;
    record(closeSet(s));
  }
  // union-close until stable
  for (;;) {
    bool grew = false;
    std::vector<std::vector<int>> snapshot(found.begin(), found.end());
    for (const auto& A : snapshot)
      for (const auto& B : snapshot) {
        std::vector<char> s(P.rank, 0);
        for (int m : A) s[m] = 1;
        for (int m : B) s[m] = 1;
        if (record(closeSet(s))) grew = true;
      }
    if (!grew) break;
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

QuotientHypergroup quotient(const ProbabilityGroup& P,
                            const std::vector<int>& members,
                            const Tolerances& tol) {
  requireMembers(P, members);
  if (ValidationReport v = validateSubHypergroup(P, members, tol); !v.allPass())
    throw CheckError("quotient by a set that is not a subhypergroup (" +
                     v.firstFailure()->name + ")");
  const int n = P.rank;
  const double mergeTol = 10.0 * tol.eq;

  Eigen::VectorXd u = averagingElement(P, members);
  Eigen::VectorXcd uc = u.cast<Complex>();
  // sandwich each basis element by the averaging element of S; equal results
  // identify elements of the same coset
  Eigen::MatrixXd sandwich(n, n);
  for (int a = 0; a < n; ++a) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
    e(a) = 1.0;
    Eigen::VectorXcd row = multiply(P, multiply(P, uc, e), uc);
    for (int k = 0; k < n; ++k) sandwich(a, k) = row(k).real();
  }

  QuotientHypergroup Q;
  Q.classOf.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (Q.classOf[a] >= 0) continue;
    int id = static_cast<int>(Q.classes.size());
    Q.classes.push_back({a});
    Q.classOf[a] = id;
    for (int b = a + 1; b < n; ++b) {
      if (Q.classOf[b] >= 0) continue;
      if ((sandwich.row(a) - sandwich.row(b)).cwiseAbs().maxCoeff() <= mergeTol) {
        Q.classes[id].push_back(b);
        Q.classOf[b] = id;
      }
    }
  }

  // the class containing the unit must be exactly S
  {
    const std::vector<int>& unitClass = Q.classes[Q.classOf[P.unit]];
    if (unitClass != members)
      throw CheckError("the class of the unit is not the subhypergroup itself");
  }

  const int m = static_cast<int>(Q.classes.size());
  Tensor3<double> pbar(m);
  for (int ci = 0; ci < m; ++ci)
    for (int cj = 0; cj < m; ++cj) {
      // the summed row must not depend on which representatives are used
      Eigen::VectorXd first;
      for (int a : Q.classes[ci])
        for (int b : Q.classes[cj]) {
          Eigen::VectorXd row = Eigen::VectorXd::Zero(m);
          for (int k = 0; k < n; ++k) row(Q.classOf[k]) += P.p(a, b, k);
          if (first.size() == 0) {
            first = row;
          } else if ((row - first).cwiseAbs().maxCoeff() > mergeTol) {
            std::ostringstream os;
            os << "class product [" << P.labels[Q.classes[ci][0]] << "]*["
               << P.labels[Q.classes[cj][0]]
               << "] depends on the representatives (" << P.labels[a] << ", "
               << P.labels[b] << ")";
            throw CheckError(os.str());
          }
        }
      for (int ck = 0; ck < m; ++ck) pbar(ci, cj, ck) = first(ck);
    }

  std::vector<std::string> labels(m);
  std::vector<int> dual(m);
  for (int ci = 0; ci < m; ++ci) {
    labels[ci] = "[" + P.labels[Q.classes[ci][0]] + "]";
    dual[ci] = Q.classOf[P.dual[Q.classes[ci][0]]];
  }
  Q.pg = makeProbabilityGroup(m, std::move(labels), Q.classOf[P.unit],
                              std::move(dual), std::move(pbar), tol);
  if (ValidationReport v = validateAxioms(Q.pg, tol); !v.allPass())
    throw CheckError("quotient failed the probability group axioms (" +
                     v.firstFailure()->name + ")");
  return Q;
}

std::vector<int> annihilator(const ProbabilityGroup& P, const CharacterTable& T,
                             const std::vector<int>& members,
                             const Tolerances& tol) {
  requireMembers(P, members);
  std::vector<int> out;
  for (int j = 0; j < P.rank; ++j) {
    bool trivial = true;
    for (int s : members)
      if (std::abs(T.M(j, s) - Complex(1.0, 0.0)) > 100 * tol.eq) {
        trivial = false;
        break;
      }
    if (trivial) out.push_back(j);
  }
  return out;
}

QuotientDualityReport verifyQuotientDuality(const ProbabilityGroup& P,
                                            const CharacterTable& T,
                                            const std::vector<int>& members,
                                            std::uint64_t seed,
                                            const Tolerances& tol) {
  QuotientDualityReport rep;
  rep.Q = quotient(P, members, tol);
  rep.annihilatorSet = annihilator(P, T, members, tol);
  const int m = rep.Q.pg.rank;
  const double matchTol = 100 * tol.eq;

  CharacterTable TQ = characterTable(rep.Q.pg, seed, tol);

  {
    Check& c = rep.checks.add("annihilator-size-matches-quotient-rank");
    c.pass = static_cast<int>(rep.annihilatorSet.size()) == m;
    c.witness = std::to_string(rep.annihilatorSet.size()) + " characters vs rank " +
                std::to_string(m);
  }

  {
    Check& c = rep.checks.add("annihilator-characters-constant-on-classes");
    for (int j : rep.annihilatorSet)
      for (int ci = 0; ci < m; ++ci)
        for (int a : rep.Q.classes[ci]) {
          double dev = std::abs(T.M(j, a) - T.M(j, rep.Q.classes[ci][0]));
          if (dev > c.deviation) {
            c.deviation = dev;
            c.witness = "character " + std::to_string(j) + " on class [" +
                        P.labels[rep.Q.classes[ci][0]] + "]";
          }
        }
    c.pass = c.deviation <= matchTol;
  }

  rep.rowMap.assign(rep.annihilatorSet.size(), -1);
  {
    Check& c = rep.checks.add("annihilator-bijects-onto-quotient-characters");
    c.pass = true;
    std::vector<char> used(m, 0);
    for (size_t idx = 0; idx < rep.annihilatorSet.size(); ++idx) {
      int j = rep.annihilatorSet[idx];
      int match = -1;
      for (int r = 0; r < m; ++r) {
        double dev = 0.0;
        for (int ci = 0; ci < m; ++ci)
          dev = std::max(dev,
                         std::abs(TQ.M(r, ci) - T.M(j, rep.Q.classes[ci][0])));
        if (dev <= matchTol) {
          match = r;
          break;
        }
      }
      if (match < 0 || used[match]) {
        c.pass = false;
        c.witness = "character " + std::to_string(j) +
                    (match < 0 ? " matches no quotient character"
                               : " collides with another character");
        break;
      }
      used[match] = 1;
      rep.rowMap[idx] = match;
    }
    if (c.pass)
      for (int r = 0; r < m; ++r)
        if (!used[r]) {
          c.pass = false;
          c.witness = "quotient character " + std::to_string(r) + " not hit";
        }
  }

  if (rep.checks.allPass()) {
    DualHypergroup DP = dualConstants(P, T, tol);
    DualHypergroup DQ = dualConstants(rep.Q.pg, TQ, tol);
    {
      Check& c = rep.checks.add("dual-product-confined-to-annihilator");
      std::vector<char> inAnn(P.rank, 0);
      for (int j : rep.annihilatorSet) inAnn[j] = 1;
      for (int i : rep.annihilatorSet)
        for (int j : rep.annihilatorSet) {
          double mass = 0.0;
          for (int k = 0; k < P.rank; ++k)
            if (!inAnn[k]) mass += std::abs(DP.phat(i, j, k));
          if (mass > c.deviation) {
            c.deviation = mass;
            c.witness = "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
          }
        }
      c.pass = c.deviation <= matchTol;
    }
    {
      Check& c = rep.checks.add("dual-constants-match-quotient-dual");
      for (size_t ii = 0; ii < rep.annihilatorSet.size(); ++ii)
        for (size_t jj = 0; jj < rep.annihilatorSet.size(); ++jj)
          for (size_t kk = 0; kk < rep.annihilatorSet.size(); ++kk) {
            Complex lhs = DP.phat(rep.annihilatorSet[ii], rep.annihilatorSet[jj],
                                  rep.annihilatorSet[kk]);
            Complex rhs = DQ.phat(rep.rowMap[ii], rep.rowMap[jj], rep.rowMap[kk]);
            double dev = std::abs(lhs - rhs);
            if (dev > c.deviation) {
              c.deviation = dev;
              c.witness = "(" + std::to_string(rep.annihilatorSet[ii]) + ", " +
                          std::to_string(rep.annihilatorSet[jj]) + ", " +
                          std::to_string(rep.annihilatorSet[kk]) + ")";
            }
          }
      c.pass = c.deviation <= matchTol;
    }
  }

  return rep;
}

}  // namespace probgroup
