#include "molgen/chem/rings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace molgen::chem {

namespace {

// Bridge detection via iterative DFS low-link. A bond is a ring bond iff it
// is not a bridge.
std::vector<bool> ring_bond_flags(const MolGraph& g) {
  const int n = g.atom_count();
  std::vector<bool> is_ring(g.bond_count(), false);
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;

  struct Frame {
    int atom;
    int parent_bond;
    size_t next_edge;
  };
  std::vector<Frame> stack;

  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    stack.push_back({root, -1, 0});
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& edges = g.bonds_of(f.atom);
      if (f.next_edge < edges.size()) {
        int bi = edges[f.next_edge++];
        if (bi == f.parent_bond) continue;
        int to = g.bonds[bi].other(f.atom);
        if (disc[to] < 0) {
          disc[to] = low[to] = timer++;
          stack.push_back({to, bi, 0});
        } else {
          low[f.atom] = std::min(low[f.atom], disc[to]);
          is_ring[bi] = true;  // back edge
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          Frame& p = stack.back();
          low[p.atom] = std::min(low[p.atom], low[f.atom]);
          if (low[f.atom] > disc[p.atom]) {
            // bridge: keep is_ring false
          } else if (f.parent_bond >= 0) {
            is_ring[f.parent_bond] = true;
          }
        }
      }
    }
  }
  return is_ring;
}

// Smallest cycle through bond (u,v): shortest u->v path in the ring-bond
// subgraph with that bond removed, closed by the bond itself.
std::vector<int> smallest_cycle_through(const MolGraph& g,
                                        const std::vector<bool>& is_ring,
                                        int bond_index) {
  const Bond& target = g.bonds[bond_index];
  std::vector<int> prev(g.atom_count(), -1);
  std::deque<int> queue;
  queue.push_back(target.a);
  prev[target.a] = target.a;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    if (cur == target.b) break;
    for (int bi : g.bonds_of(cur)) {
      if (bi == bond_index || !is_ring[bi]) continue;
      int to = g.bonds[bi].other(cur);
      if (prev[to] < 0) {
        prev[to] = cur;
        queue.push_back(to);
      }
    }
  }
  if (prev[target.b] < 0) return {};
  std::vector<int> cycle;
  for (int cur = target.b; cur != target.a; cur = prev[cur]) cycle.push_back(cur);
  cycle.push_back(target.a);
  return cycle;
}

}  // namespace

MolGraph perceive_rings(MolGraph g) {
  auto is_ring = ring_bond_flags(g);
  for (int bi = 0; bi < g.bond_count(); ++bi) g.bonds[bi].in_ring = is_ring[bi];

  g.ring_systems.clear();
  std::set<std::vector<int>> seen;
  for (int bi = 0; bi < g.bond_count(); ++bi) {
    if (!is_ring[bi]) continue;
    auto cycle = smallest_cycle_through(g, is_ring, bi);
    if (cycle.empty()) continue;
    std::vector<int> key = cycle;
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) g.ring_systems.push_back(std::move(key));
  }
  std::sort(g.ring_systems.begin(), g.ring_systems.end());
  return g;
}

int spiro_atom_count(const MolGraph& g) {
  // Atom shared by two rings whose intersection is exactly that atom.
  std::set<int> spiro;
  const auto& rings = g.ring_systems;
  for (size_t i = 0; i < rings.size(); ++i) {
    for (size_t j = i + 1; j < rings.size(); ++j) {
      std::vector<int> shared;
      std::set_intersection(rings[i].begin(), rings[i].end(), rings[j].begin(),
                            rings[j].end(), std::back_inserter(shared));
      if (shared.size() == 1) spiro.insert(shared[0]);
    }
  }
  return static_cast<int>(spiro.size());
}

int bridgehead_atom_count(const MolGraph& g) {
  // Rings sharing two or more bonds form a bridged system; the shared path's
  // endpoints are the bridgeheads.
  std::set<int> heads;
  const auto& rings = g.ring_systems;
  auto ring_bonds = [&](const std::vector<int>& ring) {
    std::set<std::pair<int, int>> out;
    for (int bi = 0; bi < g.bond_count(); ++bi) {
      const Bond& b = g.bonds[bi];
      if (!b.in_ring) continue;
      if (std::binary_search(ring.begin(), ring.end(), b.a) &&
          std::binary_search(ring.begin(), ring.end(), b.b)) {
        // Only count bonds actually on the cycle: both endpoints in the ring
        // and the ring is chordless for smallest cycles, so this suffices.
        out.insert({std::min(b.a, b.b), std::max(b.a, b.b)});
      }
    }
    return out;
  };
  std::vector<std::set<std::pair<int, int>>> bond_sets;
  bond_sets.reserve(rings.size());
  for (const auto& r : rings) bond_sets.push_back(ring_bonds(r));

  for (size_t i = 0; i < rings.size(); ++i) {
    for (size_t j = i + 1; j < rings.size(); ++j) {
      std::vector<std::pair<int, int>> shared;
      std::set_intersection(bond_sets[i].begin(), bond_sets[i].end(),
                            bond_sets[j].begin(), bond_sets[j].end(),
                            std::back_inserter(shared));
      if (shared.size() < 2) continue;
      // Degree-1 atoms of the shared bond path are the bridgeheads.
      std::map<int, int> deg;
      for (auto [a, b] : shared) {
        deg[a]++;
        deg[b]++;
      }
      for (auto [atom, d] : deg) {
        if (d == 1) heads.insert(atom);
      }
    }
  }
  return static_cast<int>(heads.size());
}

bool has_macrocycle(const MolGraph& g, int threshold) {
  for (const auto& ring : g.ring_systems) {
    if (static_cast<int>(ring.size()) > threshold) return true;
  }
  return false;
}

}  // namespace molgen::chem
