#pragma once

#include <vector>

#include "molgen/chem/mol_graph.hpp"

namespace molgen::chem {

// Canonical rank per atom (a permutation of 0..n-1), invariant under any
// relabeling of the input atoms. Starts from the invariant
// (element, charge, degree, hydrogen count, aromaticity) and refines by
// neighborhood; remaining ties are resolved by trying each member of the
// first tied cell and keeping the lexicographically smallest graph signature.
std::vector<int> canonical_ranks(const MolGraph& g);

}  // namespace molgen::chem
