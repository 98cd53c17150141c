#include "molgen/chem/mol_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace molgen::chem {

namespace {

struct ElementInfo {
  std::string_view sym;
  int z;
  double mass;
  bool aromatic;
};

// Standard atomic weights, rounded to three decimals.
constexpr std::array<ElementInfo, kElementCount> kElements = {{
    {"H", 1, 1.008, false},
    {"B", 5, 10.811, true},
    {"C", 6, 12.011, true},
    {"N", 7, 14.007, true},
    {"O", 8, 15.999, true},
    {"F", 9, 18.998, false},
    {"P", 15, 30.974, true},
    {"S", 16, 32.066, true},
    {"Cl", 17, 35.453, false},
    {"Br", 35, 79.904, false},
    {"I", 53, 126.904, false},
}};

const ElementInfo& info(Element e) { return kElements[static_cast<int>(e)]; }

}  // namespace

std::string_view symbol(Element e) { return info(e).sym; }
int atomic_number(Element e) { return info(e).z; }
double atomic_mass(Element e) { return info(e).mass; }
bool aromatic_capable(Element e) { return info(e).aromatic; }

std::optional<Element> element_from_symbol(std::string_view s) {
  for (int i = 0; i < kElementCount; ++i) {
    if (kElements[i].sym == s) return static_cast<Element>(i);
  }
  return std::nullopt;
}

std::vector<int> allowed_valences(Element e, int formal_charge) {
  auto shifted = [&](std::vector<int> base, int delta) {
    for (int& v : base) v = std::max(0, v + delta);
    return base;
  };
  const int q = formal_charge;
  switch (e) {
    case Element::H:
      return q == 0 ? std::vector<int>{1} : std::vector<int>{0};
    case Element::B:
      if (q == 0) return {3};
      return q < 0 ? std::vector<int>{4} : std::vector<int>{2};
    case Element::C:
      if (q == 0) return {4};
      return {std::max(0, 4 - std::abs(q))};
    case Element::N:
      // Neutral 3; cation 4 (ammonium/pyridinium); anion 2.
      return {std::clamp(3 + q, 0, 4)};
    case Element::O:
      return {std::clamp(2 + q, 0, 3)};
    case Element::P:
      if (q == 0) return {3, 5};
      if (q > 0) return {4};
      return {2};
    case Element::S:
      if (q == 0) return {2, 4, 6};
      if (q > 0) return shifted({3, 5}, q - 1);
      return shifted({1}, q + 1);
    case Element::F:
    case Element::Cl:
    case Element::Br:
    case Element::I:
      if (q == 0) return {1};
      if (q < 0) return {0};
      return {2};
  }
  return {};
}

int MolGraph::add_atom(Atom a) {
  atoms.push_back(a);
  adjacency_.clear();
  adjacency_bonds_.clear();
  return atom_count() - 1;
}

int MolGraph::add_bond(int a, int b, BondOrder order) {
  if (a == b || a < 0 || b < 0 || a >= atom_count() || b >= atom_count()) return -1;
  if (find_bond(a, b) >= 0) return -1;
  bonds.push_back(Bond{a, b, order, false});
  adjacency_.clear();
  adjacency_bonds_.clear();
  return bond_count() - 1;
}

void MolGraph::ensure_adjacency() const {
  if (adjacency_.size() == atoms.size() && (!atoms.empty() || bonds.empty())) return;
  adjacency_.assign(atoms.size(), {});
  adjacency_bonds_.assign(atoms.size(), {});
  for (int bi = 0; bi < bond_count(); ++bi) {
    const Bond& b = bonds[bi];
    adjacency_[b.a].push_back(b.b);
    adjacency_[b.b].push_back(b.a);
    adjacency_bonds_[b.a].push_back(bi);
    adjacency_bonds_[b.b].push_back(bi);
  }
}

const std::vector<int>& MolGraph::neighbors_of(int atom) const {
  ensure_adjacency();
  return adjacency_[atom];
}

const std::vector<int>& MolGraph::bonds_of(int atom) const {
  ensure_adjacency();
  return adjacency_bonds_[atom];
}

int MolGraph::find_bond(int a, int b) const {
  ensure_adjacency();
  if (a < 0 || a >= atom_count()) return -1;
  for (int bi : adjacency_bonds_[a]) {
    if (bonds[bi].other(a) == b) return bi;
  }
  return -1;
}

int MolGraph::pi_contribution(int atom) const {
  const Atom& a = atoms[atom];
  if (!a.is_aromatic) return 0;
  switch (a.element) {
    case Element::C:
      return a.formal_charge < 0 ? 0 : 1;
    case Element::N:
    case Element::P: {
      // Pyridine-type N contributes the ring double bond; pyrrole-type
      // (three substituents or an explicit H at neutral charge) donates its
      // lone pair instead.
      const int deg = degree(atom);
      const int h = a.bracket ? a.explicit_h : 0;
      if (a.formal_charge > 0) return deg + h <= 3 ? 1 : 0;
      if (a.formal_charge < 0) return 0;
      return (deg == 2 && h == 0) ? 1 : 0;
    }
    default:
      return 0;  // aromatic O/S/B are lone-pair donors
  }
}

int MolGraph::explicit_valence(int atom) const {
  int v = pi_contribution(atom);
  for (int bi : bonds_of(atom)) v += bond_valence(bonds[bi].order);
  return v;
}

int MolGraph::implicit_h(int atom) const {
  const Atom& a = atoms[atom];
  if (a.bracket) return 0;
  const int ev = explicit_valence(atom);
  for (int v : allowed_valences(a.element, a.formal_charge)) {
    if (v >= ev) return v - ev;
  }
  return 0;  // over-valent; check_valence reports it
}

int MolGraph::total_h(int atom) const {
  const Atom& a = atoms[atom];
  return a.bracket ? a.explicit_h : implicit_h(atom);
}

bool MolGraph::atom_in_ring(int atom) const {
  for (int bi : bonds_of(atom)) {
    if (bonds[bi].in_ring) return true;
  }
  return false;
}

std::vector<int> MolGraph::component_labels() const {
  std::vector<int> label(atoms.size(), -1);
  int next = 0;
  std::vector<int> stack;
  for (int start = 0; start < atom_count(); ++start) {
    if (label[start] >= 0) continue;
    stack.push_back(start);
    label[start] = next;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int nb : neighbors_of(cur)) {
        if (label[nb] < 0) {
          label[nb] = next;
          stack.push_back(nb);
        }
      }
    }
    ++next;
  }
  return label;
}

int MolGraph::component_count() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : 1 + *std::max_element(labels.begin(), labels.end());
}

MolGraph MolGraph::permuted(const std::vector<int>& perm) const {
  if (perm.size() != atoms.size()) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::vector<int> inverse(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = static_cast<int>(i);
  MolGraph out;
  out.atoms.reserve(atoms.size());
  for (size_t i = 0; i < perm.size(); ++i) out.atoms.push_back(atoms[perm[i]]);
  out.bonds.reserve(bonds.size());
  for (const Bond& b : bonds) {
    Bond nb = b;
    nb.a = inverse[b.a];
    nb.b = inverse[b.b];
    out.bonds.push_back(nb);
  }
  for (const auto& ring : ring_systems) {
    std::vector<int> mapped;
    mapped.reserve(ring.size());
    for (int a : ring) mapped.push_back(inverse[a]);
    std::sort(mapped.begin(), mapped.end());
    out.ring_systems.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace molgen::chem
