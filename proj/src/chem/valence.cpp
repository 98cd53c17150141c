#include "molgen/chem/valence.hpp"

#include <algorithm>
#include <sstream>

namespace molgen::chem {

std::vector<ValenceViolation> check_valence(const MolGraph& g) {
  std::vector<ValenceViolation> out;
  for (int i = 0; i < g.atom_count(); ++i) {
    const Atom& a = g.atoms[i];
    const auto allowed = allowed_valences(a.element, a.formal_charge);
    if (allowed.empty()) {
      out.push_back({i, "no legal valence for charge state"});
      continue;
    }
    const int max_allowed = allowed.back();
    const int ev = g.explicit_valence(i);
    const int total = ev + (a.bracket ? a.explicit_h : g.implicit_h(i));
    if (total > max_allowed) {
      std::ostringstream msg;
      msg << "valence " << total << " exceeds maximum " << max_allowed << " for "
          << symbol(a.element);
      if (a.formal_charge != 0) {
        msg << (a.formal_charge > 0 ? "+" : "") << a.formal_charge;
      }
      out.push_back({i, msg.str()});
    }
  }
  return out;
}

std::vector<int> aromatic_inconsistencies(const MolGraph& g) {
  std::vector<int> bad;
  for (int i = 0; i < g.atom_count(); ++i) {
    if (!g.atoms[i].is_aromatic) continue;
    bool ok = false;
    for (const auto& ring : g.ring_systems) {
      if (!std::binary_search(ring.begin(), ring.end(), i)) continue;
      bool all_aromatic = true;
      for (size_t k = 0; k < ring.size() && all_aromatic; ++k) {
        if (!g.atoms[ring[k]].is_aromatic) all_aromatic = false;
      }
      if (!all_aromatic) continue;
      // All ring bonds must be aromatic too.
      for (size_t k = 0; k < ring.size() && all_aromatic; ++k) {
        for (size_t l = k + 1; l < ring.size(); ++l) {
          int bi = g.find_bond(ring[k], ring[l]);
          if (bi >= 0 && g.bonds[bi].order != BondOrder::Aromatic) {
            all_aromatic = false;
            break;
          }
        }
      }
      if (all_aromatic) {
        ok = true;
        break;
      }
    }
    if (!ok) bad.push_back(i);
  }
  return bad;
}

}  // namespace molgen::chem
