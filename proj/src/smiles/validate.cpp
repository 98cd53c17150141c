#include "molgen/smiles/validate.hpp"

#include "molgen/smiles/write.hpp"

namespace molgen::smiles {

Validation validate(std::string_view s) {
  Validation out;
  auto parsed = parse(s);
  if (!parsed.ok()) {
    out.error = parsed.error;
    return out;
  }
  out.valid = true;
  out.canonical = write_canonical(*parsed.mol);
  return out;
}

}  // namespace molgen::smiles
