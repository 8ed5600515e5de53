#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ontorepair/debug.hpp"
#include "ontorepair/network.hpp"
#include "ontorepair/oracle.hpp"
#include "ontorepair/repair_ops.hpp"
#include "ontorepair/trace.hpp"

namespace onr {

enum class BatchMode : std::uint8_t { One, All };
enum class UpdateMode : std::uint8_t { Now, EndOne, EndAll };
enum class OntologyLevel : std::uint8_t { O, MO, ON };
enum class AlignmentLevel : std::uint8_t { M, MM, ON };
enum class DebugKb : std::uint8_t { ON, Home };

std::string to_string(SelectMode m);
std::string to_string(DecideMode m);
std::string to_string(BatchMode m);
std::string to_string(UpdateMode m);
std::string to_string(OntologyLevel l);
std::string to_string(AlignmentLevel l);

class InvalidPlan : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RepairPlan {
  SelectMode select = SelectMode::One;
  DecideMode decide = DecideMode::AllValidate;
  RemoveMode remove = RemoveMode::None;
  AddBackMode add_back = AddBackMode::None;
  BatchMode weaken = BatchMode::All;
  UpdateMode weaken_update = UpdateMode::EndAll;
  BatchMode complete = BatchMode::All;
  UpdateMode complete_update = UpdateMode::EndAll;
  OntologyLevel kb_ontology = OntologyLevel::ON;
  std::map<int, OntologyLevel> kb_ontology_for;
  AlignmentLevel kb_alignment = AlignmentLevel::ON;
  std::map<AlignmentKey, AlignmentLevel> kb_alignment_for;
  AddScope add_scope = AddScope::ON;
  FinalizeTargets finalize;
  DebugKb debug_kb = DebugKb::ON;
  // Completion normally runs on the scope without the removal set; when set,
  // the removal schedule of `remove` applies to completion as well.
  bool strict_removal = false;
  std::size_t max_justifications = 32;

  // (S-one, D-all-v / R-none, AB-none / W-all, U-end_all / C-all, U-end_all)
  static RepairPlan algorithm1();

  std::vector<std::string> problems() const;
  void validate() const;  // throws InvalidPlan
  std::string label() const;

  OntologyLevel level_for(int ontology) const;
  AlignmentLevel level_for(AlignmentKey p) const;
};

// Scope used for repairing an axiom with the given provenance.
KbScope repair_scope(const RepairPlan& plan, const Provenance& prov);

struct WeakenStep {
  AxiomId source = 0;
  Gci wrong;
  KbScope scope;
  CandidateResult result;
};

struct CompleteStep {
  AxiomId source = 0;  // the removed axiom whose weakening is completed
  Gci weakened;
  KbScope scope;
  CandidateResult result;
};

struct RepairResult {
  std::vector<Gci> added;          // A, sorted
  std::vector<AxiomId> removed;    // D, sorted ids of asserted axioms
  std::vector<Gci> removed_axioms; // gcis of D in id order
  std::vector<WeakenStep> weakening;
  std::vector<CompleteStep> completing;
  OntologyNetwork repaired;
  Trace trace;
  OracleStats stats;
};

class NotEntailedWrongAxiom : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Named ⊑ ⊥ for every unsatisfiable concept of the network; used as W when
// none is given.
std::vector<Gci> unsatisfiability_targets(const OntologyNetwork& network);

class OracleRejectsW : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  // The harness turns this off to run (R_none, AB_one/all) for the
  // equalities that the plan invariant otherwise excludes.
  bool check_plan = true;
  // Receives trace events as they happen, so a run interrupted by
  // NeedAnswers still leaves its partial trace here.
  Trace* trace = nullptr;
};

RepairResult run_repair(const OntologyNetwork& network, const std::vector<Gci>& wrong, const RepairPlan& plan,
                        OracleSession& oracle, const RunOptions& options = {});
RepairResult run_repair(const OntologyNetwork& network, const std::vector<Gci>& wrong, const RepairPlan& plan,
                        Oracle& oracle, const RunOptions& options = {});

struct ConditionReport {
  bool ok = true;
  std::vector<std::string> witnesses;
};

struct VerifyReport {
  ConditionReport added_true;         // (i)
  ConditionReport removed_asserted;   // (ii)
  ConditionReport removed_false;      // (iii)
  ConditionReport wrong_not_entailed; // (iv)
  bool ok() const { return added_true.ok && removed_asserted.ok && removed_false.ok && wrong_not_entailed.ok; }
};

// Checks the (A, D) contract against the original network. Unanswered
// oracle questions count as failures.
VerifyReport verify_repair(const OntologyNetwork& network, const std::vector<Gci>& wrong,
                           const std::vector<Gci>& added, const std::vector<AxiomId>& removed, Oracle& oracle);
VerifyReport verify_repair(const OntologyNetwork& network, const std::vector<Gci>& wrong, const RepairResult& result,
                           Oracle& oracle);

struct ProbeSet {
  std::vector<Gci> axioms;
  // Every Named ⊑ Named (distinct names) and Named ⊑ ⊥ over `names`.
  static ProbeSet over(const std::set<std::string>& names);
  ProbeSet& extend(const std::vector<Gci>& extra);
};

enum class Order : std::uint8_t { Greater, Less, Equal, Incomparable };
std::string to_string(Order o);

struct Comparison {
  Order completeness = Order::Equal;  // Greater: first is more complete
  Order incorrectness = Order::Equal; // Greater: first is more incorrect
  std::vector<Gci> true_only_first, true_only_second, false_only_first, false_only_second;
  // First is more-or-equally complete and more-or-equally incorrect.
  bool first_covers_second() const {
    return true_only_second.empty() && false_only_second.empty();
  }
};

// Probe-restricted completeness/incorrectness comparison of two TBoxes.
Comparison compare_tboxes(const std::vector<Gci>& t1, const std::vector<Gci>& t2, Oracle& oracle,
                          const ProbeSet& probe);

struct HasseEdge {
  enum class Kind : std::uint8_t { Covers, Equal };
  std::string family;  // debug, remove, weaken, complete, kb-ontology, kb-alignment, add-set
  std::string name;
  RepairPlan lower;
  RepairPlan upper;
  Kind kind = Kind::Covers;
  // Debug edges compare the network after removal only.
  bool debug_only = false;
};

std::vector<HasseEdge> hasse_edges(const RepairPlan& base = RepairPlan::algorithm1());

struct EdgeOutcome {
  const HasseEdge* edge = nullptr;
  bool ok = true;
  std::string detail;
  Comparison comparison;
};

struct HasseReport {
  std::vector<EdgeOutcome> outcomes;
  std::size_t violations() const;
};

// Runs every plan of the edges under a gold oracle and checks each predicted
// relation. Runs that throw count as violations.
HasseReport check_hasse_orders(const OntologyNetwork& network, const std::vector<Gci>& wrong, const GoldOracle& oracle,
                               const ProbeSet& probe, const std::vector<HasseEdge>& edges);

}  // namespace onr
