#pragma once

#include <optional>
#include <string_view>

#include "molgen/chem/mol_graph.hpp"
#include "molgen/smiles/token.hpp"

namespace molgen::smiles {

struct ParseResult {
  std::optional<chem::MolGraph> mol;
  std::optional<ParseError> error;

  bool ok() const { return mol.has_value(); }
};

// String -> molecular graph. Branches, ring closures, bond orders and
// bracket atoms (isotope, charge, H count) are honored; stereo marks are
// accepted and dropped. Rings are perceived and the graph is rejected on
// valence or aromaticity inconsistencies, so a returned graph is sanitized.
ParseResult parse(std::string_view s);

}  // namespace molgen::smiles
