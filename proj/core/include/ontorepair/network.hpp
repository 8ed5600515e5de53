#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ontorepair/concept.hpp"
#include "ontorepair/reasoner.hpp"

namespace onr {

using AxiomId = std::uint32_t;
using AlignmentKey = std::pair<int, int>;  // ontology indices, first < second

struct Provenance {
  enum class Kind : std::uint8_t { Ontology, Alignment, Materialized, RepairAdded };
  Kind kind = Kind::Ontology;
  // Ontology index, or alignment pair (first < second). Materialized and
  // RepairAdded axioms record their home here; second == -1 for an ontology.
  int first = -1;
  int second = -1;
  std::string label;  // plan label for RepairAdded

  static Provenance ontology(int i) { return {Kind::Ontology, i, -1, {}}; }
  static Provenance alignment(int i, int j) { return {Kind::Alignment, std::min(i, j), std::max(i, j), {}}; }
  static Provenance materialized(int i, int j = -1) { return {Kind::Materialized, i, j, {}}; }
  static Provenance repair_added(int i, int j, std::string label) {
    return {Kind::RepairAdded, i, j, std::move(label)};
  }

  bool asserted() const { return kind == Kind::Ontology || kind == Kind::Alignment; }
  bool in_alignment() const { return second >= 0; }
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct NetworkAxiom {
  AxiomId id = 0;
  Gci gci;
  Provenance prov;
};

struct Ontology {
  std::string name;
  std::set<std::string> signature;
  std::vector<NetworkAxiom> axioms;
};

// Where an axiom lives by its names: inside one ontology, between two, or
// nowhere (names outside every signature or spread over three ontologies).
struct Home {
  enum class Kind : std::uint8_t { Ontology, Alignment, None };
  Kind kind = Kind::None;
  int first = -1;
  int second = -1;
  friend bool operator==(const Home&, const Home&) = default;
};

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OntologyNetwork {
 public:
  int add_ontology(std::string name, const std::vector<Gci>& axioms, const std::set<std::string>& declared = {});
  // Mappings between ontologies i and j; each side of each mapping must use
  // names of a single one of the two ontologies.
  void add_alignment(int i, int j, const std::vector<Gci>& mappings);
  AxiomId add_axiom(int ontology, const Gci& gci);
  AxiomId add_mapping(int i, int j, const Gci& gci);

  const std::vector<Ontology>& ontologies() const { return ontologies_; }
  const std::map<AlignmentKey, std::vector<NetworkAxiom>>& alignments() const { return alignments_; }
  int ontology_index(const std::string& name) const;

  // Union of ontology axioms and mappings (every axiom stored here,
  // including repair-added and materialized ones), ordered by id.
  std::vector<Gci> assemble() const;
  std::vector<NetworkAxiom> axioms() const;
  std::vector<NetworkAxiom> asserted() const;
  const NetworkAxiom* find(AxiomId id) const;
  std::vector<AxiomId> find_asserted(const Gci& gci) const;

  std::set<std::string> signature() const;
  Home home_of(const Gci& gci) const;
  bool within_one_ontology(const Gci& gci) const;
  bool same_ontology(const std::string& a, const std::string& b) const;

  // Snapshot operations.
  OntologyNetwork without(const std::set<AxiomId>& ids) const;
  // Adds axioms as RepairAdded to their home ontology or alignment. Axioms
  // without a home go to the alignment between the first two ontologies
  // touching their names.
  OntologyNetwork with_added(const std::vector<Gci>& gcis, const std::string& label) const;
  OntologyNetwork with_materialized(const std::vector<NetworkAxiom>& extra) const;
  // Re-inserts axioms under their own ids; ones already present are skipped.
  OntologyNetwork with_restored(const std::vector<NetworkAxiom>& axioms) const;

  AxiomId next_id() const { return next_id_; }

 private:
  void check_mapping(int i, int j, const Gci& g) const;
  void place(NetworkAxiom ax);

  std::vector<Ontology> ontologies_;
  std::map<AlignmentKey, std::vector<NetworkAxiom>> alignments_;
  AxiomId next_id_ = 1;
};

struct KbScope {
  enum class Level : std::uint8_t { ON, O, MO, M, MM };
  Level level = Level::ON;
  int focus = -1;                 // ontology for O/MO
  AlignmentKey pair{-1, -1};      // alignment for M/MM

  static KbScope on() { return {}; }
  static KbScope o(int i) { return {Level::O, i, {-1, -1}}; }
  static KbScope mo(int i) { return {Level::MO, i, {-1, -1}}; }
  static KbScope m(AlignmentKey p) { return {Level::M, -1, p}; }
  static KbScope mm(AlignmentKey p) { return {Level::MM, -1, p}; }
};

std::string to_string(KbScope::Level level);

enum class AddScope : std::uint8_t { ON, O, M };
std::string to_string(AddScope s);

class UnknownFocus : public NetworkError {
 public:
  using NetworkError::NetworkError;
};

// Network-wide consequences over the SCC space, sliced per ontology and per
// alignment. Computed once per network snapshot.
class MaterializedView {
 public:
  MaterializedView(const OntologyNetwork& net, const SccSpace& space);

  const std::vector<NetworkAxiom>& ontology(int i) const;
  const std::vector<NetworkAxiom>& alignment(AlignmentKey p) const;
  // Union of all slices, deduplicated by gci.
  const std::vector<NetworkAxiom>& all() const { return all_; }

 private:
  std::vector<std::vector<NetworkAxiom>> per_ontology_;
  std::map<AlignmentKey, std::vector<NetworkAxiom>> per_alignment_;
  std::vector<NetworkAxiom> all_;
  std::vector<NetworkAxiom> empty_;
};

std::vector<NetworkAxiom> materialize_ontology(const OntologyNetwork& net, int focus, const SccSpace& space);
std::vector<NetworkAxiom> materialize_alignment(const OntologyNetwork& net, AlignmentKey focus, const SccSpace& space);

struct ScopedKb {
  std::vector<NetworkAxiom> axioms;
  std::set<std::string> candidates;  // concept names allowed in sub/sup sets
  std::vector<Gci> gcis() const;
  std::vector<Gci> asserted_gcis() const;
};

// O(i): ontology i's axioms; MO(i): plus its materialized slice; M(p):
// mappings of p; MM(p): plus the cross-ontology slice; ON: the assembled
// network, plus the whole materialized view when `mat` is given.
ScopedKb scoped_kb(const OntologyNetwork& net, const KbScope& scope, const MaterializedView* mat = nullptr);

// Whether the axiom may be placed in a TBox of the given scope.
bool scope_admits(const OntologyNetwork& net, const KbScope& scope, const Gci& gci);

std::vector<Gci> filter_add_set(const std::vector<Gci>& axioms, AddScope scope, const OntologyNetwork& net);

struct ScopeReport {
  std::string scope;  // "ON", "O(name)", "MO(name)", "M(a-b)", "MM(a-b)"
  KbScope kb;
  std::set<std::string> unsatisfiable;
};

// Unsatisfiable concepts per scope of the given level: one report for ON,
// one per ontology for O/MO, one per alignment for M/MM. MO and MM use the
// detection-space materialization.
std::vector<ScopeReport> detect_unsatisfiable(const OntologyNetwork& net, KbScope::Level level);

struct FinalizeTargets {
  std::set<int> ontologies;
  std::set<AlignmentKey> alignments;
  bool empty() const { return ontologies.empty() && alignments.empty(); }
};

// Materializes the repaired network's consequences into the opted-in
// ontologies/alignments, then drops materialized axioms equal to removed ones.
OntologyNetwork finalize_materialize(const OntologyNetwork& repaired, const FinalizeTargets& targets,
                                     const std::vector<Gci>& removed, const SccSpace& space = SccSpace::detection());

}  // namespace onr
