#pragma once

#include <string>
#include <vector>

#include "molgen/chem/mol_graph.hpp"

namespace molgen::chem {

struct ValenceViolation {
  int atom = -1;
  std::string reason;
};

// Empty result means every atom sits at a legal valence once implicit
// hydrogens are filled to the lowest fitting value. Bracket atoms carry a
// fixed hydrogen count and may sit below their maximum; exceeding it is a
// violation. Expects rings to be perceived (aromatic consistency uses them).
std::vector<ValenceViolation> check_valence(const MolGraph& g);

// Aromatic atoms must sit in at least one ring whose atoms and bonds are all
// aromatic. Returns offending atom indices.
std::vector<int> aromatic_inconsistencies(const MolGraph& g);

}  // namespace molgen::chem
