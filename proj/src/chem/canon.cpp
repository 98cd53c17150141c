#include "molgen/chem/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>

namespace molgen::chem {

namespace {

using Colors = std::vector<int>;  // atom -> color; colors dense from 0

int color_count(const Colors& c) {
  return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
}

Colors initial_colors(const MolGraph& g) {
  using Key = std::tuple<int, int, int, int, int>;
  std::vector<Key> keys(g.atom_count());
  for (int i = 0; i < g.atom_count(); ++i) {
    const Atom& a = g.atoms[i];
    keys[i] = {static_cast<int>(a.element), a.formal_charge, g.degree(i),
               g.total_h(i), a.is_aromatic ? 1 : 0};
  }
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Colors colors(g.atom_count());
  for (int i = 0; i < g.atom_count(); ++i) {
    colors[i] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  }
  return colors;
}

// One refinement sweep: color + sorted multiset of (bond order, neighbor
// color). Repeats until the partition stops splitting.
Colors refine(const MolGraph& g, Colors colors) {
  using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
  while (true) {
    std::vector<Sig> sigs(g.atom_count());
    for (int i = 0; i < g.atom_count(); ++i) {
      std::vector<std::pair<int, int>> nb;
      for (int bi : g.bonds_of(i)) {
        const Bond& b = g.bonds[bi];
        nb.push_back({static_cast<int>(b.order), colors[b.other(i)]});
      }
      std::sort(nb.begin(), nb.end());
      sigs[i] = {colors[i], std::move(nb)};
    }
    std::vector<Sig> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Colors next(g.atom_count());
    for (int i = 0; i < g.atom_count(); ++i) {
      next[i] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
    }
    if (color_count(next) == color_count(colors)) return next;
    colors = std::move(next);
  }
}

// Signature of a discretely colored graph, comparable across relabelings.
using Signature = std::vector<std::int64_t>;

Signature graph_signature(const MolGraph& g, const Colors& ranks) {
  std::vector<int> atom_of_rank(g.atom_count());
  for (int i = 0; i < g.atom_count(); ++i) atom_of_rank[ranks[i]] = i;
  Signature sig;
  sig.reserve(g.atom_count() * 6 + g.bond_count() * 3);
  for (int r = 0; r < g.atom_count(); ++r) {
    const int i = atom_of_rank[r];
    const Atom& a = g.atoms[i];
    sig.push_back(static_cast<int>(a.element));
    sig.push_back(a.formal_charge);
    sig.push_back(g.total_h(i));
    sig.push_back(a.is_aromatic ? 1 : 0);
    sig.push_back(a.isotope.value_or(0));
    std::vector<std::pair<int, int>> nb;
    for (int bi : g.bonds_of(i)) {
      const Bond& b = g.bonds[bi];
      nb.push_back({ranks[b.other(i)], static_cast<int>(b.order)});
    }
    std::sort(nb.begin(), nb.end());
    sig.push_back(static_cast<int>(nb.size()));
    for (auto [rank, order] : nb) {
      sig.push_back(rank);
      sig.push_back(order);
    }
  }
  return sig;
}

struct Search {
  const MolGraph& g;
  Signature best_sig;
  Colors best_ranks;
  bool has_best = false;

  void run(Colors colors) {
    colors = refine(g, colors);
    const int n = g.atom_count();
    if (color_count(colors) == n) {
      Signature sig = graph_signature(g, colors);
      if (!has_best || sig < best_sig) {
        best_sig = std::move(sig);
        best_ranks = colors;
        has_best = true;
      }
      return;
    }
    // First cell with more than one member; individualize each candidate.
    int target = -1;
    std::vector<int> members;
    for (int c = 0; c < n && target < 0; ++c) {
      members.clear();
      for (int i = 0; i < n; ++i) {
        if (colors[i] == c) members.push_back(i);
      }
      if (members.size() > 1) target = c;
    }
    for (int pick : members) {
      Colors branched = colors;
      for (int i = 0; i < n; ++i) {
        if (branched[i] >= target) ++branched[i];
      }
      branched[pick] = target;
      run(std::move(branched));
    }
  }
};

}  // namespace

std::vector<int> canonical_ranks(const MolGraph& g) {
  if (g.atom_count() == 0) return {};
  Search search{g};
  search.run(initial_colors(g));
  return search.best_ranks;
}

}  // namespace molgen::chem
