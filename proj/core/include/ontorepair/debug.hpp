#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ontorepair/network.hpp"
#include "ontorepair/oracle.hpp"
#include "ontorepair/trace.hpp"

namespace onr {

struct Justification {
  Gci target;
  std::vector<AxiomId> axioms;  // sorted
  friend bool operator==(const Justification&, const Justification&) = default;
};

class NotEntailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoFalseHittingSet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SelectMode : std::uint8_t { One, All };
// AllValidate: validate every axiom of every justification. OneValidate:
// generate one hitting set, then validate it. ValidateOne: validate axioms
// one at a time until the wrong ones found so far hit every justification.
enum class DecideMode : std::uint8_t { AllValidate, OneValidate, ValidateOne };

struct DebugConfig {
  SelectMode select = SelectMode::One;
  DecideMode decide = DecideMode::AllValidate;
  std::size_t max_justifications = 32;
};

// Expand-shrink over the ⊥-module: the first axiom (in id order) whose
// removal breaks the entailment is kept.
Justification single_justification(const std::vector<NetworkAxiom>& scope, const Gci& target);

// Hitting-set-tree enumeration; complete when fewer than `cap` are found.
std::vector<Justification> all_justifications(const std::vector<NetworkAxiom>& scope, const Gci& target,
                                              std::size_t cap = 32);

// Minimal hitting sets, smallest first, ties broken by the sorted id lists.
std::vector<std::vector<AxiomId>> hitting_sets(const std::vector<Justification>& justifications,
                                               std::size_t limit = 4096);

// Removal set D for the wrong axioms W: asserted, oracle-false axioms taken
// from the justifications of W in `scope`.
std::vector<AxiomId> compute_removal_set(const std::vector<NetworkAxiom>& scope, const std::vector<Gci>& wrong,
                                         const DebugConfig& config, OracleSession& oracle, Trace* trace = nullptr);

std::string describe(const NetworkAxiom& a);

}  // namespace onr
