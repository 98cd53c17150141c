#pragma once

#include "molgen/chem/mol_graph.hpp"

namespace molgen::chem {

// Marks every bond that lies on a cycle and fills g.ring_systems with the
// smallest ring through each ring bond (deduplicated). Acyclic graphs come
// back unchanged apart from cleared ring data.
MolGraph perceive_rings(MolGraph g);

// Ring-topology counts used by the complexity terms of the SA score.
// Both expect rings to be perceived.
int spiro_atom_count(const MolGraph& g);
int bridgehead_atom_count(const MolGraph& g);
bool has_macrocycle(const MolGraph& g, int threshold = 8);

}  // namespace molgen::chem
