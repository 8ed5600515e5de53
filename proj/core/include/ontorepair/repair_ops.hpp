#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontorepair/network.hpp"
#include "ontorepair/oracle.hpp"

namespace onr {

// Why a candidate was dropped, or Kept.
enum class FilterTag : std::uint8_t { Tautology, Excluded, OracleFalse, Redundant, Dominated, TieBreak, Kept };
std::string to_string(FilterTag t);

struct CandidateRecord {
  Gci candidate;
  FilterTag tag;
};

struct CandidateResult {
  std::set<std::string> sub;  // Sub(α) for weakening, Sub(β) for completing
  std::set<std::string> sup;  // Sup(β) for weakening, Sup(α) for completing
  std::size_t grid_size = 0;
  std::vector<Gci> kept;      // sorted
  std::vector<CandidateRecord> log;
};

struct WeakenInput {
  Gci wrong;
  std::vector<Gci> scope;             // scoped KB (positive semantics)
  std::set<std::string> candidates;   // names allowed in Sub/Sup
  std::vector<Gci> excluded;          // removal set and wrong axioms (F2)
  std::vector<Gci> redundancy_base;   // candidates entailed here are dropped (F3)
  const OntologyNetwork* network = nullptr;  // tie-break by ontology membership
};

struct CompleteInput {
  Gci weakened;
  std::vector<Gci> scope;             // scoped KB after removal, with updates
  std::set<std::string> candidates;
  std::vector<Gci> excluded;
  std::vector<Gci> dominance_base;    // asserted part of the scope plus updates (F4)
  const OntologyNetwork* network = nullptr;
};

// Candidates sb ⊑ sp with sb ∈ Sub(α), sp ∈ Sup(β), validated by the oracle
// and filtered to the strongest non-redundant ones.
CandidateResult weakened_axiom_set(const WeakenInput& in, OracleSession& oracle);

// Candidates sp ⊑ sb with sp ∈ Sup(α), sb ∈ Sub(β) for the weakened α ⊑ β.
CandidateResult completed_axiom_set(const CompleteInput& in, OracleSession& oracle);

enum class RemoveMode : std::uint8_t { None, One, All };
enum class AddBackMode : std::uint8_t { None, One, All };
std::string to_string(RemoveMode m);
std::string to_string(AddBackMode m);

class UnknownAxiomId : public NetworkError {
 public:
  using NetworkError::NetworkError;
};

// R_none keeps the snapshot; R_one removes `current`; R_all removes all of D.
OntologyNetwork apply_removal(const OntologyNetwork& snapshot, const std::vector<AxiomId>& removal, RemoveMode mode,
                              std::optional<AxiomId> current = std::nullopt);

// Puts removed axioms back, taking them from `original`.
OntologyNetwork apply_add_back(const OntologyNetwork& snapshot, const OntologyNetwork& original,
                               const std::vector<AxiomId>& removal, AddBackMode mode,
                               std::optional<AxiomId> current = std::nullopt);

}  // namespace onr
