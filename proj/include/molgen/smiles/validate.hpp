#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "molgen/smiles/parse.hpp"

namespace molgen::smiles {

struct Validation {
  bool valid = false;
  std::optional<ParseError> error;       // set iff invalid
  std::optional<std::string> canonical;  // set iff valid
};

// Never throws: any malformed input comes back as Invalid with its error
// class. Valid means the string parses and passes the valence check.
Validation validate(std::string_view s);

}  // namespace molgen::smiles
