#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "probgroup/class_algebra.hpp"
#include "probgroup/fusion.hpp"
#include "probgroup/hypergroup.hpp"

namespace probgroup {

/// A finite group given by its multiplication table.
struct FiniteGroup {
  int order = 0;
  Eigen::MatrixXi table;  // table(a,b) = a*b
  int identity = -1;
  std::string name;

  int mul(int a, int b) const { return table(a, b); }
  int inverse(int a) const;
};

/// Validates the table (Latin square, identity, inverses, associativity) and
/// locates the identity; throws InputError with a witness on failure.
FiniteGroup makeGroup(Eigen::MatrixXi table, std::string name = {});

struct ConjugacyClasses {
  std::vector<std::vector<int>> classes;  // ordered by smallest member
  std::vector<int> classOf;
  std::vector<int> representatives;
};
ConjugacyClasses conjugacyClasses(const FiniteGroup& G);

/// Conjugacy classes as a probability group: p(i,j,k) is the probability
/// that the product of uniform elements of classes i and j lies in class k.
/// The derived weights are the class sizes.
struct ClassHypergroup {
  ConjugacyClasses classes;
  ProbabilityGroup pg;
};
ClassHypergroup classHypergroup(const FiniteGroup& G, const Tolerances& tol = {});

/// Irreducible character table recovered from the class hypergroup; row j is
/// an irreducible character, column i a conjugacy class, degrees are checked
/// to be positive integers with squares summing to the order.
struct GroupCharacterTable {
  ConjugacyClasses classes;
  Eigen::MatrixXcd values;  // values(j, i) = chi_j on class i
  std::vector<long long> degrees;
  ProbabilityGroup classPg;
  CharacterTable classChars;
};
GroupCharacterTable groupCharacterTable(const FiniteGroup& G, std::uint64_t seed,
                                        const Tolerances& tol = {});

/// The representation ring on the irreducible characters, with
/// multiplicities from the inner products of products of characters.
FusionRing repRing(const FiniteGroup& G, const GroupCharacterTable& T,
                   const Tolerances& tol = {});

/// Modular data of the quantum double: simples are pairs (conjugacy class,
/// irreducible character of the centralizer of its representative), the
/// S-matrix is the commuting-pair double sum, the branching matrix restricts
/// each simple to the representation ring of G, and iota embeds the
/// representation ring as the simples over the identity class.
struct DoubleData {
  ModularData modular;
  Eigen::MatrixXi branching;
  std::vector<int> iota;
  std::vector<std::pair<int, int>> simpleIndex;  // (class, centralizer character)
  FusionRing base;                               // repRing of G
  GroupCharacterTable baseTable;
};
DoubleData doubleModularData(const FiniteGroup& G, std::uint64_t seed,
                             const Tolerances& tol = {});

}  // namespace probgroup
