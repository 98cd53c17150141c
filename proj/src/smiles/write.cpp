#include "molgen/smiles/write.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "molgen/chem/canon.hpp"

namespace molgen::smiles {

namespace {

using chem::Atom;
using chem::BondOrder;
using chem::Element;
using chem::MolGraph;

// Hydrogen count a bare (non-bracket) atom would pick up when the output is
// parsed back. Mirrors MolGraph::implicit_h with bracket defaults.
int bare_form_h(const MolGraph& g, int atom) {
  const Atom& a = g.atoms[atom];
  int pi = 0;
  if (a.is_aromatic) {
    switch (a.element) {
      case Element::C: pi = a.formal_charge < 0 ? 0 : 1; break;
      case Element::N:
      case Element::P: {
        const int deg = g.degree(atom);
        if (a.formal_charge > 0) pi = deg <= 3 ? 1 : 0;
        else if (a.formal_charge == 0) pi = deg == 2 ? 1 : 0;
        break;
      }
      default: break;
    }
  }
  int ev = pi;
  for (int bi : g.bonds_of(atom)) ev += chem::bond_valence(g.bonds[bi].order);
  for (int v : chem::allowed_valences(a.element, a.formal_charge)) {
    if (v >= ev) return v - ev;
  }
  return -1;
}

bool needs_bracket(const MolGraph& g, int atom) {
  const Atom& a = g.atoms[atom];
  if (a.element == Element::H) return true;
  if (a.formal_charge != 0 || a.isotope.has_value()) return true;
  return bare_form_h(g, atom) != g.total_h(atom);
}

std::string atom_text(const MolGraph& g, int atom) {
  const Atom& a = g.atoms[atom];
  std::string sym(chem::symbol(a.element));
  if (a.is_aromatic) sym[0] = static_cast<char>(tolower(sym[0]));
  if (!needs_bracket(g, atom)) return sym;

  std::string out = "[";
  if (a.isotope) out += std::to_string(*a.isotope);
  out += sym;
  const int h = g.total_h(atom);
  if (h == 1) out += "H";
  else if (h > 1) out += "H" + std::to_string(h);
  if (a.formal_charge != 0) {
    out += a.formal_charge > 0 ? '+' : '-';
    if (std::abs(a.formal_charge) > 1) out += std::to_string(std::abs(a.formal_charge));
  }
  out += "]";
  return out;
}

// Bond symbol in front of an atom or ring digit; empty when the default
// (single, or aromatic between aromatic atoms) applies.
std::string bond_text(const MolGraph& g, int bond_index) {
  const auto& b = g.bonds[bond_index];
  const bool both_aromatic = g.atoms[b.a].is_aromatic && g.atoms[b.b].is_aromatic;
  switch (b.order) {
    case BondOrder::Single: return both_aromatic ? "-" : "";
    case BondOrder::Double: return "=";
    case BondOrder::Triple: return "#";
    case BondOrder::Aromatic: return "";
  }
  return "";
}

std::string ring_digit_text(int digit) {
  if (digit < 10) return std::to_string(digit);
  if (digit < 100) return "%" + std::to_string(digit);
  throw std::runtime_error("more than 99 simultaneous ring closures");
}

// Emission runs twice over the same rank-ordered DFS: the first pass splits
// bonds into tree edges and ring closures, the second prints. Both passes
// must walk in the identical order for the digits to land on both ends.
struct Writer {
  const MolGraph& g;
  const std::vector<int>& rank;
  std::vector<bool> visited;
  std::vector<bool> tree_bond;
  std::vector<bool> closure_bond;
  std::map<int, int> open_digits;  // bond index -> digit
  std::set<int> used_digits;
  std::string out;

  Writer(const MolGraph& graph, const std::vector<int>& ranks)
      : g(graph),
        rank(ranks),
        visited(graph.atom_count(), false),
        tree_bond(graph.bond_count(), false),
        closure_bond(graph.bond_count(), false) {}

  std::vector<std::pair<int, int>> sorted_bonds(int atom, int parent_bond) const {
    std::vector<std::pair<int, int>> out_bonds;  // (partner rank, bond index)
    for (int bi : g.bonds_of(atom)) {
      if (bi == parent_bond) continue;
      out_bonds.push_back({rank[g.bonds[bi].other(atom)], bi});
    }
    std::sort(out_bonds.begin(), out_bonds.end());
    return out_bonds;
  }

  void classify(int atom, int parent_bond) {
    visited[atom] = true;
    for (auto [r, bi] : sorted_bonds(atom, parent_bond)) {
      if (tree_bond[bi] || closure_bond[bi]) continue;
      const int other = g.bonds[bi].other(atom);
      if (visited[other]) {
        closure_bond[bi] = true;
      } else {
        tree_bond[bi] = true;
        classify(other, bi);
      }
    }
  }

  int allocate_digit() {
    for (int d = 1; d < 100; ++d) {
      if (!used_digits.count(d)) {
        used_digits.insert(d);
        return d;
      }
    }
    throw std::runtime_error("ring digit space exhausted");
  }

  void emit(int atom, int parent_bond) {
    out += atom_text(g, atom);
    const auto bonds = sorted_bonds(atom, parent_bond);

    for (auto [r, bi] : bonds) {
      if (!closure_bond[bi]) continue;
      auto it = open_digits.find(bi);
      if (it == open_digits.end()) {
        const int digit = allocate_digit();
        open_digits.emplace(bi, digit);
        out += bond_text(g, bi);
        out += ring_digit_text(digit);
      } else {
        out += ring_digit_text(it->second);
        used_digits.erase(it->second);
        open_digits.erase(it);
      }
    }

    std::vector<int> children;
    for (auto [r, bi] : bonds) {
      if (tree_bond[bi]) children.push_back(bi);
    }
    for (size_t k = 0; k < children.size(); ++k) {
      const int bi = children[k];
      const bool last = (k + 1 == children.size());
      if (!last) out += "(";
      out += bond_text(g, bi);
      emit(g.bonds[bi].other(atom), bi);
      if (!last) out += ")";
    }
  }
};

}  // namespace

std::string write_canonical(const MolGraph& g) {
  if (g.atom_count() == 0) return "";
  const auto ranks = chem::canonical_ranks(g);

  // Components ordered by their lowest rank; each starts at that atom.
  const auto labels = g.component_labels();
  const int ncomp = 1 + *std::max_element(labels.begin(), labels.end());
  std::vector<int> start_atom(ncomp, -1);
  for (int i = 0; i < g.atom_count(); ++i) {
    int c = labels[i];
    if (start_atom[c] < 0 || ranks[i] < ranks[start_atom[c]]) start_atom[c] = i;
  }
  std::sort(start_atom.begin(), start_atom.end(),
            [&](int a, int b) { return ranks[a] < ranks[b]; });

  Writer writer(g, ranks);
  for (int c = 0; c < ncomp; ++c) {
    writer.classify(start_atom[c], -1);
  }
  for (int c = 0; c < ncomp; ++c) {
    if (c > 0) writer.out += ".";
    writer.emit(start_atom[c], -1);
  }
  return writer.out;
}

}  // namespace molgen::smiles
