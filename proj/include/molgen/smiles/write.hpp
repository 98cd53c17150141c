#pragma once

#include <string>

#include "molgen/chem/mol_graph.hpp"

namespace molgen::smiles {

// Graph -> canonical SMILES. Deterministic, and identical for isomorphic
// inputs; parsing the output reproduces the graph (up to atom order).
std::string write_canonical(const chem::MolGraph& g);

}  // namespace molgen::smiles
