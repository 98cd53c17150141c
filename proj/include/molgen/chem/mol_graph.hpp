#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace molgen::chem {

// Supported element set. Everything outside this list is rejected up front.
enum class Element : std::uint8_t { H, B, C, N, O, F, P, S, Cl, Br, I };

constexpr int kElementCount = 11;

std::string_view symbol(Element e);
int atomic_number(Element e);
double atomic_mass(Element e);
bool aromatic_capable(Element e);

// Case-sensitive symbol lookup ("Cl" ok, "cl" not).
std::optional<Element> element_from_symbol(std::string_view s);

// Valences an element may carry at a given formal charge, ascending.
// Implicit hydrogens fill up to the smallest entry that fits.
std::vector<int> allowed_valences(Element e, int formal_charge);

enum class BondOrder : std::uint8_t { Single = 1, Double = 2, Triple = 3, Aromatic = 4 };

// Contribution of a bond to explicit valence. Aromatic bonds count 1; the
// ring pi system is accounted for separately (see MolGraph::pi_contribution).
inline int bond_valence(BondOrder o) {
  return o == BondOrder::Aromatic ? 1 : static_cast<int>(o);
}

struct Atom {
  Element element = Element::C;
  int formal_charge = 0;
  bool is_aromatic = false;
  // Hydrogen count asserted by a bracket atom. Bracket atoms carry an exact
  // count (default 0); non-bracket atoms derive it from the valence rules.
  int explicit_h = 0;
  bool bracket = false;
  std::optional<int> isotope;
};

struct Bond {
  int a = -1;
  int b = -1;
  BondOrder order = BondOrder::Single;
  bool in_ring = false;

  int other(int atom) const { return atom == a ? b : a; }
};

// Molecular graph. Instances are built once (by the parser or a generator),
// then treated as immutable; all operations on them are pure.
class MolGraph {
 public:
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  // Smallest rings, one sorted atom-index vector per ring. Filled by
  // perceive_rings; empty for acyclic graphs.
  std::vector<std::vector<int>> ring_systems;

  int atom_count() const { return static_cast<int>(atoms.size()); }
  int bond_count() const { return static_cast<int>(bonds.size()); }

  int add_atom(Atom a);
  // Returns the bond index, or -1 if the pair is already bonded or invalid.
  int add_bond(int a, int b, BondOrder order);

  const std::vector<int>& neighbors_of(int atom) const;
  const std::vector<int>& bonds_of(int atom) const;
  int find_bond(int a, int b) const;

  int degree(int atom) const { return static_cast<int>(neighbors_of(atom).size()); }

  // Extra valence unit carried by an atom's membership in an aromatic ring
  // (the delocalised double bond). Zero for pi lone-pair donors.
  int pi_contribution(int atom) const;

  // Sum of bond orders + aromatic pi contribution, excluding hydrogens.
  int explicit_valence(int atom) const;

  // Hydrogens derived for non-bracket atoms (bracket atoms: explicit_h).
  int implicit_h(int atom) const;
  int total_h(int atom) const;

  bool atom_in_ring(int atom) const;

  int component_count() const;
  std::vector<int> component_labels() const;

  // Index-remapped copy: new atom i = old atom perm[i].
  MolGraph permuted(const std::vector<int>& perm) const;

 private:
  mutable std::vector<std::vector<int>> adjacency_;
  mutable std::vector<std::vector<int>> adjacency_bonds_;
  void ensure_adjacency() const;
};

}  // namespace molgen::chem
