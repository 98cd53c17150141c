#include <doctest.h>

#include <random>

#include "molgen/chem/canon.hpp"
#include "molgen/chem/mol_graph.hpp"
#include "molgen/chem/rings.hpp"
#include "molgen/chem/valence.hpp"
#include "molgen/smiles/parse.hpp"
#include "molgen/smiles/write.hpp"
#include "oracles.hpp"

using namespace molgen;
using chem::BondOrder;
using chem::Element;
using chem::MolGraph;

namespace {

MolGraph chain(Element e, int n) {
  MolGraph g;
  for (int i = 0; i < n; ++i) g.add_atom({e});
  for (int i = 0; i + 1 < n; ++i) g.add_bond(i, i + 1, BondOrder::Single);
  return g;
}

MolGraph benzene() {
  MolGraph g;
  for (int i = 0; i < 6; ++i) {
    chem::Atom a;
    a.element = Element::C;
    a.is_aromatic = true;
    g.add_atom(a);
  }
  for (int i = 0; i < 6; ++i) g.add_bond(i, (i + 1) % 6, BondOrder::Aromatic);
  return g;
}

MolGraph naphthalene() {
  MolGraph g;
  for (int i = 0; i < 10; ++i) {
    chem::Atom a;
    a.element = Element::C;
    a.is_aromatic = true;
    g.add_atom(a);
  }
  // two fused hexagons: 0-1-2-3-4-5-0 and 0-5-6-7-8-9-0... use explicit list
  g = MolGraph{};
  for (int i = 0; i < 10; ++i) {
    chem::Atom a;
    a.element = Element::C;
    a.is_aromatic = true;
    g.add_atom(a);
  }
  const int edges[11][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                            {4, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}};
  for (auto& e : edges) g.add_bond(e[0], e[1], BondOrder::Aromatic);
  return g;
}

MolGraph parse_ok(const std::string& s) {
  auto r = smiles::parse(s);
  REQUIRE_MESSAGE(r.ok(), "failed to parse ", s, ": ",
                  r.error ? r.error->message : "");
  return *r.mol;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST_SUITE("chem-graph") {

TEST_CASE("perceive_rings: benzene is a single six-ring with all bonds cyclic") {
  auto g = chem::perceive_rings(benzene());
  REQUIRE(g.ring_systems.size() == 1);
  CHECK(g.ring_systems[0].size() == 6);
  for (const auto& b : g.bonds) CHECK(b.in_ring);
}

TEST_CASE("perceive_rings: ethane has no rings") {
  auto g = chem::perceive_rings(chain(Element::C, 2));
  CHECK(g.ring_systems.empty());
  for (const auto& b : g.bonds) CHECK_FALSE(b.in_ring);
}

TEST_CASE("perceive_rings: naphthalene gives two six-rings sharing two atoms") {
  auto g = chem::perceive_rings(naphthalene());

  // Oracle: brute-force cycle enumeration on the 10-atom graph.
  auto cycles = oracles::enumerate_cycles(g);
  for (int bi = 0; bi < g.bond_count(); ++bi) {
    CHECK(g.bonds[bi].in_ring == oracles::bond_on_cycle(g, bi, cycles));
  }

  REQUIRE(g.ring_systems.size() == 2);
  CHECK(g.ring_systems[0].size() == 6);
  CHECK(g.ring_systems[1].size() == 6);
  std::vector<int> shared;
  std::set_intersection(g.ring_systems[0].begin(), g.ring_systems[0].end(),
                        g.ring_systems[1].begin(), g.ring_systems[1].end(),
                        std::back_inserter(shared));
  CHECK(shared.size() == 2);
}

TEST_CASE("perceive_rings agrees with brute force on assorted small graphs") {
  std::vector<std::string> inputs = {
      "C1CC1",  "C1CCC1",       "C1CCCCC1",     "C1CC2CCC1CC2", "C1CC12CC2",
      "CC(C)C", "C1CCC2(CC1)CC2", "c1ccc2ccccc2c1", "C1CC2CC1C2", "CCOCC",
  };
  for (const auto& s : inputs) {
    CAPTURE(s);
    auto g = parse_ok(s);
    auto cycles = oracles::enumerate_cycles(g);
    for (int bi = 0; bi < g.bond_count(); ++bi) {
      CAPTURE(bi);
      CHECK(g.bonds[bi].in_ring == oracles::bond_on_cycle(g, bi, cycles));
      if (g.bonds[bi].in_ring) {
        int smallest = 0;
        for (const auto& ring : g.ring_systems) {
          if (std::binary_search(ring.begin(), ring.end(), g.bonds[bi].a) &&
              std::binary_search(ring.begin(), ring.end(), g.bonds[bi].b)) {
            int len = static_cast<int>(ring.size());
            if (smallest == 0 || len < smallest) smallest = len;
          }
        }
        CHECK(smallest == oracles::min_cycle_through(g, bi, cycles));
      }
    }
    // every reported ring must be a real cycle
    for (const auto& ring : g.ring_systems) {
      CHECK(cycles.count(ring) == 1);
    }
  }
}

TEST_CASE("check_valence: water-like oxygen with two single bonds is fine") {
  MolGraph g;
  g.add_atom({Element::O});
  g.add_atom({Element::C});
  g.add_atom({Element::C});
  g.add_bond(0, 1, BondOrder::Single);
  g.add_bond(0, 2, BondOrder::Single);
  g = chem::perceive_rings(std::move(g));
  CHECK(chem::check_valence(g).empty());
}

TEST_CASE("check_valence: pentavalent carbon is a violation") {
  MolGraph g;
  g.add_atom({Element::C});
  for (int i = 0; i < 5; ++i) {
    g.add_atom({Element::C});
    g.add_bond(0, i + 1, BondOrder::Single);
  }
  g = chem::perceive_rings(std::move(g));
  auto violations = chem::check_valence(g);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].atom == 0);
}

TEST_CASE("check_valence: four-coordinate nitrogen needs the +1 charge") {
  auto build = [](int charge) {
    MolGraph g;
    chem::Atom n;
    n.element = Element::N;
    n.formal_charge = charge;
    n.bracket = charge != 0;
    g.add_atom(n);
    for (int i = 0; i < 4; ++i) {
      g.add_atom({Element::C});
      g.add_bond(0, i + 1, BondOrder::Single);
    }
    return chem::perceive_rings(std::move(g));
  };
  auto neutral = chem::check_valence(build(0));
  REQUIRE(neutral.size() == 1);
  CHECK(neutral[0].atom == 0);
  CHECK(chem::check_valence(build(+1)).empty());
}

TEST_CASE("valence soundness over known-good structures and bad mutations") {
  const std::vector<std::string> known_valid = {
      "CCO", "CC(=O)O", "c1ccccc1", "CC(=O)Nc1ccccc1", "C#N", "N#CCO",
      "CS(=O)(=O)C", "OP(=O)(O)O", "FC(F)(F)c1ccccc1", "C[NH3+]",
      "CC(=O)[O-]", "c1ccncc1", "c1cc[nH]c1", "c1ccsc1", "c1ccoc1",
      "CCN(CC)CC", "O=C(N)c1ccccc1", "ClCCl", "BrCBr", "IC",
      "C1CCNCC1", "OC1CCCCC1", "CC(C)(C)C", "CNC", "COC",
  };
  for (const auto& s : known_valid) {
    CAPTURE(s);
    auto r = smiles::parse(s);
    CHECK(r.ok());
  }

  // Mutations: adding one more single-bonded carbon to a saturated atom must
  // turn into a violation.
  for (const auto& s : {"CC(C)(C)C", "CCO", "c1ccccc1"}) {
    CAPTURE(s);
    auto g = parse_ok(s);
    // find an atom already at its maximum valence
    int target = -1;
    for (int i = 0; i < g.atom_count(); ++i) {
      auto allowed = chem::allowed_valences(g.atoms[i].element, 0);
      if (g.explicit_valence(i) + g.total_h(i) == allowed.back()) {
        target = i;
        break;
      }
    }
    REQUIRE(target >= 0);
    // replace hydrogens with nothing (implicit) and add 5 carbons instead
    MolGraph mutated = g;
    for (int k = 0; k < 5; ++k) {
      int c = mutated.add_atom({Element::C});
      if (mutated.find_bond(target, c) < 0) mutated.add_bond(target, c, BondOrder::Single);
    }
    mutated = chem::perceive_rings(std::move(mutated));
    CHECK_FALSE(chem::check_valence(mutated).empty());
  }
}

TEST_CASE("canonical_ranks: single atom ranks zero") {
  MolGraph g;
  g.add_atom({Element::C});
  auto ranks = chem::canonical_ranks(g);
  REQUIRE(ranks.size() == 1);
  CHECK(ranks[0] == 0);
}

TEST_CASE("canonical_ranks: ethanol is order-insensitive downstream") {
  auto a = parse_ok("CCO");
  auto b = parse_ok("OCC");
  CHECK(smiles::write_canonical(a) == smiles::write_canonical(b));
}

TEST_CASE("canonical SMILES is invariant under random atom permutations") {
  const std::vector<std::string> inputs = {
      "CC(=O)Nc1ccccc1", "c1ccc2ccccc2c1", "CC(C)CC(=O)O", "C1CC2CCC1CC2",
      "CCOC(=O)c1ccc(N)cc1", "O=C(O)c1ccccc1O", "C[NH3+]", "CC(=O)[O-]",
      "FC(F)(F)S(=O)(=O)N", "c1cc[nH]c1",
  };
  std::mt19937_64 rng(20240817);
  for (const auto& s : inputs) {
    CAPTURE(s);
    auto g = parse_ok(s);
    const auto reference = smiles::write_canonical(g);
    for (int trial = 0; trial < 8; ++trial) {
      auto perm = random_permutation(g.atom_count(), rng);
      auto permuted = chem::perceive_rings(g.permuted(perm));
      CHECK(smiles::write_canonical(permuted) == reference);
    }
  }
}

TEST_CASE("canonical equality matches brute-force isomorphism on small graphs") {
  // Pairs designed to collide on crude invariants: same formula, different
  // connectivity.
  const std::vector<std::string> molecules = {
      "CCCCO",    "CCC(C)O",  "CC(C)(C)O", "CCCOC",   "CCOCC",
      "C1CCCC1",  "CC1CCC1",  "C1CC1CC",   "CCC=O",   "CC(C)=O",
      "NCCO",     "CNCO",     "OCCN",      "C1COC1",  "CC1CO1",
  };
  std::vector<MolGraph> graphs;
  for (const auto& s : molecules) graphs.push_back(parse_ok(s));

  std::mt19937_64 rng(555);
  for (size_t i = 0; i < graphs.size(); ++i) {
    for (size_t j = i; j < graphs.size(); ++j) {
      MolGraph right = graphs[j];
      if (i == j) {
        right = chem::perceive_rings(
            graphs[j].permuted(random_permutation(graphs[j].atom_count(), rng)));
      }
      const bool canon_equal = smiles::write_canonical(graphs[i]) ==
                               smiles::write_canonical(right);
      const bool iso = oracles::isomorphic(graphs[i], right);
      CAPTURE(molecules[i]);
      CAPTURE(molecules[j]);
      CHECK(canon_equal == iso);
    }
  }
}

}  // TEST_SUITE
