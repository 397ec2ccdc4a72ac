#pragma once

// End-to-end analysis passes: each takes an input file (or directory) plus a
// RunConfig and produces a Report ready for rendering.  The CLI is a thin
// wrapper around these.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "probgroup/report.hpp"
#include "probgroup/scalar.hpp"

namespace probgroup {

struct RunConfig {
  Tolerances tol;
  std::uint64_t seed = 12345;
  std::optional<Lattice> lattice;  // basis for membership certification
  int workers = 1;                 // corpus mode parallelism
};

// Load any supported file, validate its axioms, and report every check.
Report runValidate(const std::string& path, const RunConfig& cfg);

// Character table, codegrees, orthogonality, and dual structure constants.
// Accepts fusion and probgroup inputs.
Report runCharacters(const std::string& path, const RunConfig& cfg);

// Class-algebra pass over a fusion ring: conjugacy-class dimensions, class
// sums, structure constants via both routes, central identity, integrality.
Report runBurnside(const std::string& path, const RunConfig& cfg);

// Quotient of a probability group (or fusion ring converted to one) by the
// sub-hypergroup generated by `members`, with the full duality cross-check.
Report runQuotient(const std::string& path, const std::vector<int>& members,
                   const RunConfig& cfg);

// Match a fusion ring against modular data for it: unitarity, Verlinde
// coefficients, and the self-duality bijection.
Report runSelfDual(const std::string& ringPath, const std::string& modularPath,
                   const RunConfig& cfg);

// Run the five-phase analysis on a centerpair file.
Report runCenter(const std::string& path, const RunConfig& cfg);

// Build the Drinfeld double of a finite group, verify it as modular data,
// and feed the induced pair straight into the five-phase analysis.  When
// emitPrefix is nonempty, writes <prefix>.rep.fusion.json,
// <prefix>.double.modular.json and <prefix>.double.centerpair.json.
Report runDouble(const std::string& path, const std::string& emitPrefix,
                 const RunConfig& cfg);

// Validate every *.json file in a directory, running the stages appropriate
// to each file kind.  One section per file.
Report runCorpus(const std::string& dir, const RunConfig& cfg);

}  // namespace probgroup
