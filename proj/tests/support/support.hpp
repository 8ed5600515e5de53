#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ontorepair/concept.hpp"
#include "ontorepair/network.hpp"
#include "ontorepair/pipeline.hpp"

namespace onr::testing {

// Canonical-model check for EL⊥ without normalization: one element per
// queried or existentially required concept, labels saturated by evaluating
// every axiom against every element until nothing changes.
bool model_entails(const std::vector<Gci>& tbox, const Gci& query, Semantics sem = Semantics::Full);

// Atomic TBoxes (A ⊑ B, A ⊑ ⊥, A ⊓ B ⊑ ⊥) only: reachability plus
// disjointness. Throws std::invalid_argument on other shapes.
bool reach_entails(const std::vector<Gci>& tbox, const Gci& query);

std::vector<Gci> random_atomic_tbox(std::mt19937_64& rng, int names, int axioms);
Concept random_concept(std::mt19937_64& rng, const std::vector<std::string>& names, int depth);
std::vector<Gci> random_el_tbox(std::mt19937_64& rng, int names, int axioms, int depth);
std::vector<std::string> name_pool(int n, const std::string& prefix = "N");

// Minimal subsets of tbox entailing target, as sorted index lists.
std::vector<std::vector<std::size_t>> brute_justifications(const std::vector<Gci>& tbox, const Gci& target);
// Minimal hitting sets of the families, as sorted element lists.
std::vector<std::vector<AxiomId>> brute_hitting_sets(const std::vector<std::vector<AxiomId>>& families);

struct RandomInstance {
  std::uint64_t seed = 0;
  OntologyNetwork network;
  std::vector<Gci> wrong;
  std::vector<Gci> gold;
};

// Up to three ontologies of up to twelve names each, a coherent gold TBox
// whose asserted part the network samples, and 1-4 false axioms inserted as
// wrong axioms.
RandomInstance random_instance(std::uint64_t seed);

// The fixture network used in the examples: O1, O2 and their alignment.
struct Fixture {
  OntologyNetwork network;
  std::vector<Gci> wrong;
  std::vector<Gci> gold;
};
Fixture basic_fixture();

// Twelve plans covering every operator value at least once.
std::vector<RepairPlan> plan_grid();

std::set<std::string> names_of(const std::vector<Gci>& gs);
std::vector<std::string> strs(const std::vector<Gci>& gs);

}  // namespace onr::testing
