#include "probgroup/groups.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace probgroup {

int FiniteGroup::inverse(int a) const {
  for (int b = 0; b < order; ++b)
    if (table(a, b) == identity) return b;
  throw InternalError("element without inverse survived group validation");
}

FiniteGroup makeGroup(Eigen::MatrixXi table, std::string name) {
  const int n = static_cast<int>(table.rows());
  if (n <= 0 || table.cols() != n)
    throw InputError("group: multiplication table must be square and nonempty");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table(a, b) < 0 || table(a, b) >= n)
        throw InputError("group: table entry out of range at (" +
                         std::to_string(a) + ", " + std::to_string(b) + ")");
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (row[table(a, b)]++)
        throw InputError("group: row " + std::to_string(a) +
                         " repeats element " + std::to_string(table(a, b)));
      if (col[table(b, a)]++)
        throw InputError("group: column " + std::to_string(a) +
                         " repeats element " + std::to_string(table(b, a)));
    }
  }
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table(e, x) == x && table(x, e) == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw InputError("group: no two-sided identity");
  for (int a = 0; a < n; ++a) {
    int inv = -1;
    for (int b = 0; b < n; ++b)
      if (table(a, b) == identity) {
        inv = b;
        break;
      }
    if (inv < 0 || table(inv, a) != identity)
      throw InputError("group: element " + std::to_string(a) +
                       " lacks a two-sided inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table(table(a, b), c) != table(a, table(b, c))) {
          std::ostringstream os;
          os << "group: associativity fails at (" << a << ", " << b << ", " << c
             << ")";
          throw InputError(os.str());
        }
  FiniteGroup G;
  G.order = n;
  G.table = std::move(table);
  G.identity = identity;
  G.name = std::move(name);
  return G;
}

ConjugacyClasses conjugacyClasses(const FiniteGroup& G) {
  const int n = G.order;
  ConjugacyClasses cc;
  cc.classOf.assign(n, -1);
  std::vector<int> inv(n);
  for (int a = 0; a < n; ++a) inv[a] = G.inverse(a);
  for (int a = 0; a < n; ++a) {
    if (cc.classOf[a] >= 0) continue;
    std::vector<char> seen(n, 0);
    std::vector<int> members;
    for (int g = 0; g < n; ++g) {
      int conj = G.mul(G.mul(g, a), inv[g]);
      if (!seen[conj]) {
        seen[conj] = 1;
        members.push_back(conj);
      }
    }
    std::sort(members.begin(), members.end());
    int id = static_cast<int>(cc.classes.size());
    for (int m : members) cc.classOf[m] = id;
    cc.representatives.push_back(members.front());
    cc.classes.push_back(std::move(members));
  }
  return cc;
}

ClassHypergroup classHypergroup(const FiniteGroup& G, const Tolerances& tol) {
  ClassHypergroup CH;
  CH.classes = conjugacyClasses(G);
  const int m = static_cast<int>(CH.classes.classes.size());

  Tensor3<double> p(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const auto& Ci = CH.classes.classes[i];
      const auto& Cj = CH.classes.classes[j];
      std::vector<long long> hits(m, 0);
      for (int x : Ci)
        for (int y : Cj) ++hits[CH.classes.classOf[G.mul(x, y)]];
      for (int k = 0; k < m; ++k)
        p(i, j, k) = static_cast<double>(hits[k]) /
                     (static_cast<double>(Ci.size()) * Cj.size());
    }

  std::vector<std::string> labels(m);
  std::vector<int> dual(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = "cl" + std::to_string(CH.classes.representatives[i]);
    dual[i] = CH.classes.classOf[G.inverse(CH.classes.representatives[i])];
  }
  CH.pg = makeProbabilityGroup(m, std::move(labels), CH.classes.classOf[G.identity],
                               std::move(dual), std::move(p), tol);
  for (int i = 0; i < m; ++i)
    if (std::abs(CH.pg.h(i) - static_cast<double>(CH.classes.classes[i].size())) >
        1e-6)
      throw InternalError("class hypergroup weight differs from the class size");
  return CH;
}

GroupCharacterTable groupCharacterTable(const FiniteGroup& G, std::uint64_t seed,
                                        const Tolerances& tol) {
  if (G.order > 1024)
    throw InputError("character table computation is limited to order 1024");
  GroupCharacterTable T;
  ClassHypergroup CH = classHypergroup(G, tol);
  T.classes = std::move(CH.classes);
  T.classPg = std::move(CH.pg);
  T.classChars = characterTable(T.classPg, seed, tol);

  const int m = T.classPg.rank;
  const double order = static_cast<double>(G.order);
  T.degrees.resize(m);
  T.values.resize(m, m);
  for (int j = 0; j < m; ++j) {
    Complex nj = T.classChars.codegrees(j);
    if (std::abs(nj.imag()) > 1e-6 * std::abs(nj) || nj.real() <= 0.0)
      throw CheckError("codegree " + std::to_string(j) +
                       " is not a positive real");
    double dj = std::sqrt(order / nj.real());
    auto rounded = nearestNonnegInteger(Complex(dj, 0.0), tol.integer);
    if (!rounded || *rounded == 0)
      throw CheckError("character degree " + std::to_string(dj) +
                       " is not a positive integer");
    T.degrees[j] = *rounded;
    for (int i = 0; i < m; ++i)
      T.values(j, i) = static_cast<double>(*rounded) * T.classChars.M(j, i);
  }

  long long squares = 0;
  for (long long d : T.degrees) squares += d * d;
  if (squares != G.order)
    throw CheckError("squared character degrees sum to " +
                     std::to_string(squares) + ", expected the group order");

  double rowDev = 0.0;
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      Complex s(0.0, 0.0);
      for (int i = 0; i < m; ++i)
        s += static_cast<double>(T.classes.classes[i].size()) * T.values(j, i) *
             std::conj(T.values(k, i));
      Complex want = (j == k) ? Complex(order, 0.0) : Complex(0.0, 0.0);
      rowDev = std::max(rowDev, std::abs(s - want));
    }
  double colDev = 0.0;
  for (int i = 0; i < m; ++i)
    for (int ip = 0; ip < m; ++ip) {
      Complex s(0.0, 0.0);
      for (int j = 0; j < m; ++j) s += T.values(j, i) * std::conj(T.values(j, ip));
      Complex want = (i == ip)
                         ? Complex(order / T.classes.classes[i].size(), 0.0)
                         : Complex(0.0, 0.0);
      colDev = std::max(colDev, std::abs(s - want));
    }
  if (rowDev > 1e-6 * order || colDev > 1e-6 * order)
    throw CheckError("character table fails orthogonality (row " +
                     std::to_string(rowDev) + ", column " +
                     std::to_string(colDev) + ")");
  return T;
}

FusionRing repRing(const FiniteGroup& G, const GroupCharacterTable& T,
                   const Tolerances& tol) {
  const int m = static_cast<int>(T.degrees.size());
  FusionRing R;
  R.rank = m;
  R.unit = 0;
  R.N = Tensor3<std::int64_t>(m);
  R.labels.resize(m);
  for (int j = 0; j < m; ++j) R.labels[j] = "chi" + std::to_string(j);
  R.dual = T.classChars.star;

  if ((T.values.row(0) - Eigen::RowVectorXcd::Ones(m)).cwiseAbs().maxCoeff() >
      1e-6)
    throw InternalError("row 0 of the character table is not the trivial character");

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        Complex s(0.0, 0.0);
        for (int c = 0; c < m; ++c)
          s += static_cast<double>(T.classes.classes[c].size()) * T.values(i, c) *
               T.values(j, c) * std::conj(T.values(k, c));
        s /= static_cast<double>(G.order);
        auto mult = nearestNonnegInteger(s, tol.integer);
        if (!mult)
          throw CheckError("tensor product multiplicity at (" +
                           std::to_string(i) + ", " + std::to_string(j) + ", " +
                           std::to_string(k) + ") is not a nonnegative integer");
        R.N(i, j, k) = *mult;
      }
  if (ValidationReport v = validateFusionRing(R); !v.allPass())
    throw CheckError("representation ring fails based-ring axioms (" +
                     v.firstFailure()->name + ")");
  return R;
}

namespace {

struct Centralizer {
  std::vector<int> elements;        // global indices, sorted
  std::vector<int> localOf;         // global -> local or -1
  GroupCharacterTable chars;        // character table of the centralizer
};

Centralizer centralizerOf(const FiniteGroup& G, int rep, std::uint64_t seed,
                          const GroupCharacterTable* reuse,
                          const Tolerances& tol) {
  Centralizer Z;
  Z.localOf.assign(G.order, -1);
  for (int g = 0; g < G.order; ++g)
    if (G.mul(g, rep) == G.mul(rep, g)) {
      Z.localOf[g] = static_cast<int>(Z.elements.size());
      Z.elements.push_back(g);
    }
  if (reuse && static_cast<int>(Z.elements.size()) == G.order) {
    Z.chars = *reuse;
    return Z;
  }
  const int z = static_cast<int>(Z.elements.size());
  Eigen::MatrixXi table(z, z);
  for (int i = 0; i < z; ++i)
    for (int j = 0; j < z; ++j)
      table(i, j) = Z.localOf[G.mul(Z.elements[i], Z.elements[j])];
  Z.chars = groupCharacterTable(makeGroup(std::move(table)), seed, tol);
  return Z;
}

}  // namespace

DoubleData doubleModularData(const FiniteGroup& G, std::uint64_t seed,
                             const Tolerances& tol) {
  if (G.order > 128)
    throw InputError("double construction is limited to order 128");
  DoubleData D;
  D.baseTable = groupCharacterTable(G, seed, tol);
  D.base = repRing(G, D.baseTable, tol);

  const ConjugacyClasses& cc = D.baseTable.classes;
  const int numClasses = static_cast<int>(cc.classes.size());

  // identity class first so the vacuum simple gets index 0
  std::vector<int> classOrder;
  classOrder.push_back(cc.classOf[G.identity]);
  for (int a = 0; a < numClasses; ++a)
    if (a != cc.classOf[G.identity]) classOrder.push_back(a);

  std::vector<Centralizer> cents;
  for (int a : classOrder)
    cents.push_back(centralizerOf(G, cc.representatives[a], seed,
                                  a == cc.classOf[G.identity] ? &D.baseTable
                                                              : nullptr,
                                  tol));

  // conjugating elements: x(g) carries the class representative onto g
  std::vector<int> carrier(G.order, -1);
  for (int g = 0; g < G.order; ++g)
    for (int x = 0; x < G.order; ++x)
      if (G.mul(G.mul(x, cc.representatives[cc.classOf[g]]), G.inverse(x)) == g) {
        carrier[g] = x;
        break;
      }

  for (size_t ai = 0; ai < cents.size(); ++ai) {
    int a = classOrder[ai];
    for (size_t u = 0; u < cents[ai].chars.degrees.size(); ++u)
      D.simpleIndex.emplace_back(a, static_cast<int>(u));
  }
  const int rank = static_cast<int>(D.simpleIndex.size());

  auto charValue = [&](size_t ai, int u, int element) {
    const Centralizer& Z = cents[ai];
    int local = Z.localOf[element];
    if (local < 0)
      throw InternalError("character of a centralizer evaluated outside it");
    return Z.chars.values(u, Z.chars.classes.classOf[local]);
  };

  std::vector<size_t> centIndexOfClass(numClasses);
  for (size_t ai = 0; ai < classOrder.size(); ++ai)
    centIndexOfClass[classOrder[ai]] = ai;

  D.modular.rank = rank;
  D.modular.S.resize(rank, rank);
  D.modular.labels.resize(rank);
  for (int s = 0; s < rank; ++s) {
    auto [a, u] = D.simpleIndex[s];
    D.modular.labels[s] =
        "(cl" + std::to_string(cc.representatives[a]) + ",chi" + std::to_string(u) + ")";
  }

  for (int s1 = 0; s1 < rank; ++s1) {
    auto [a, u] = D.simpleIndex[s1];
    size_t ai = centIndexOfClass[a];
    for (int s2 = 0; s2 < rank; ++s2) {
      auto [b, w] = D.simpleIndex[s2];
      size_t bi = centIndexOfClass[b];
      Complex sum(0.0, 0.0);
      for (int g : cc.classes[a]) {
        int xg = carrier[g];
        int xgInv = G.inverse(xg);
        for (int h : cc.classes[b]) {
          if (G.mul(g, h) != G.mul(h, g)) continue;
          int xh = carrier[h];
          int xhInv = G.inverse(xh);
          Complex cu = charValue(ai, u, G.mul(G.mul(xgInv, h), xg));
          Complex cw = charValue(bi, w, G.mul(G.mul(xhInv, g), xh));
          sum += std::conj(cu) * std::conj(cw);
        }
      }
      D.modular.S(s1, s2) = sum / static_cast<double>(G.order);
    }
  }

  double symDev = (D.modular.S - D.modular.S.transpose()).cwiseAbs().maxCoeff();
  if (symDev > 1e-9)
    throw CheckError("double S-matrix is not symmetric (deviation " +
                     std::to_string(symDev) + ")");

  // quantum dimensions must be class size times centralizer character degree
  for (int s = 0; s < rank; ++s) {
    auto [a, u] = D.simpleIndex[s];
    double want = static_cast<double>(cc.classes[a].size()) *
                  static_cast<double>(cents[centIndexOfClass[a]].chars.degrees[u]);
    Complex got = D.modular.S(0, s) / D.modular.S(0, 0);
    if (std::abs(got - Complex(want, 0.0)) > 1e-6)
      throw CheckError("double quantum dimension mismatch at simple " +
                       std::to_string(s));
  }

  // duality involution from the vacuum column of the reconstructed fusion rules
  D.modular.dual.assign(rank, -1);
  {
    ModularData probe = D.modular;
    probe.dual.assign(rank, 0);  // placeholder, not used by the coefficients
    Tensor3<Complex> N = verlindeCoefficients(probe);
    for (int s = 0; s < rank; ++s) {
      int found = -1;
      for (int t = 0; t < rank; ++t) {
        auto m = nearestNonnegInteger(N(s, t, 0), tol.integer);
        if (m && *m == 1) {
          if (found >= 0)
            throw CheckError("double simple " + std::to_string(s) +
                             " has two duals");
          found = t;
        }
      }
      if (found < 0)
        throw CheckError("double simple " + std::to_string(s) + " has no dual");
      D.modular.dual[s] = found;
    }
    for (int s = 0; s < rank; ++s)
      if (D.modular.dual[D.modular.dual[s]] != s)
        throw CheckError("double duality is not an involution");
  }

  // restriction multiplicities of each simple in the base representation ring
  const int m = static_cast<int>(D.baseTable.degrees.size());
  D.branching.resize(rank, m);
  for (int s = 0; s < rank; ++s) {
    auto [b, w] = D.simpleIndex[s];
    const Centralizer& Z = cents[centIndexOfClass[b]];
    for (int i = 0; i < m; ++i) {
      Complex acc(0.0, 0.0);
      for (int zEl : Z.elements)
        acc += D.baseTable.values(i, cc.classOf[zEl]) *
               std::conj(charValue(centIndexOfClass[b], w, zEl));
      acc /= static_cast<double>(Z.elements.size());
      auto mult = nearestNonnegInteger(acc, tol.integer);
      if (!mult)
        throw CheckError("branching multiplicity at simple " +
                         std::to_string(s) + ", character " + std::to_string(i) +
                         " is not a nonnegative integer");
      D.branching(s, i) = static_cast<int>(*mult);
    }
  }

  D.iota.resize(m);
  for (int i = 0; i < m; ++i) {
    D.iota[i] = i;  // identity-class simples come first and reuse the base table
    for (int ip = 0; ip < m; ++ip)
      if (D.branching(i, ip) != (i == ip ? 1 : 0))
        throw InternalError("identity-class branching row is not an indicator");
  }

  double total = 0.0;
  for (int s = 0; s < rank; ++s) {
    Complex d = D.modular.S(0, s) / D.modular.S(0, 0);
    total += d.real() * d.real();
  }
  if (std::abs(total - static_cast<double>(G.order) * G.order) > 1e-6)
    throw CheckError("double global dimension is not the squared order");

  return D;
}

}  // namespace probgroup
