#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ontorepair/network.hpp"
#include "ontorepair/pipeline.hpp"

namespace onr {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column, std::string file = {});
  int line;
  int column;
  std::string file;
  std::string message;
};

// Concepts: Top | Bottom | ident | And(C, C[, C…]) | Some(role, C)
Concept parse_concept(std::string_view text);
// SubClassOf(C, C)
Gci parse_gci(std::string_view text);

struct OntologyText {
  std::string name;
  std::set<std::string> declared;  // Class(X) lines
  std::vector<Gci> axioms;
};

struct AlignmentText {
  std::string first;
  std::string second;
  std::vector<Gci> mappings;
  // Ontology named by the prefix of each side, per mapping; empty for
  // SubClassOf lines.
  std::vector<std::pair<std::string, std::string>> sides;
};

// Ontology(name) header, then Class(X) and SubClassOf lines; '#' comments.
OntologyText parse_ontology(std::string_view text);
// Alignment(o1, o2) header, then Map(o1:x, o2:y) or SubClassOf lines.
AlignmentText parse_alignment(std::string_view text);
std::vector<Gci> parse_axiom_list(std::string_view text);
// Lines "yes SubClassOf(…)" / "no SubClassOf(…)".
std::map<Gci, bool> parse_answers(std::string_view text);

std::string write_ontology(const OntologyText& o);
std::string write_alignment(const AlignmentText& a);
std::string write_axiom_list(const std::vector<Gci>& axioms);
std::string write_answers(const std::vector<std::pair<Gci, bool>>& answers);

struct Bundle {
  OntologyNetwork network;
  std::vector<Gci> wrong;
  std::optional<std::vector<Gci>> gold;
  std::optional<std::map<Gci, bool>> answers;
};

class BundleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Builds a network from parsed texts; alignment prefixes must name loaded
// ontologies and mapping names must belong to them.
OntologyNetwork build_network(const std::vector<OntologyText>& ontologies, const std::vector<AlignmentText>& alignments);

// Directory with *.ont ontology files and *.aln alignment files (loaded in
// file-name order), wrong.txt, and optionally gold.txt and answers.txt.
Bundle load_bundle(const std::filesystem::path& dir);

std::string read_file(const std::filesystem::path& p);

nlohmann::json concept_to_json(const Concept& c);
nlohmann::json gci_to_json(const Gci& g);
nlohmann::json question_to_json(const PendingQuestion& q);
nlohmann::json verify_to_json(const VerifyReport& r);
nlohmann::json result_to_json(const RepairResult& r, const VerifyReport* verify = nullptr);
nlohmann::json trace_to_json(const Trace& t);
// Canonical result document: result_to_json with the verify report, two-space
// indent, trailing newline. CLI and service both emit exactly this.
std::string result_document(const RepairResult& r, const VerifyReport& verify);
nlohmann::json hasse_to_json(const HasseReport& r);
// Sub/sup panes with the ontology each concept belongs to.
nlohmann::json pane_to_json(const PaneData& pane, const OntologyNetwork& net);

// Plan options by operator name, e.g. {"select": "s-all", "kb_ont": "mo",
// "kb_ont_for": {"O2": "o"}, "kb_map_for": {"O1-O2": "mm"}, "finalize": ["O2"]}.
// Ontologies are referred to by name. Unknown keys or values throw InvalidPlan.
RepairPlan plan_from_json(const nlohmann::json& j, const OntologyNetwork& net);
nlohmann::json plan_to_json(const RepairPlan& plan, const OntologyNetwork& net);

// One row per weakening or completing step: |Sub|, |Sup|, grid size, kept axioms.
std::string result_csv(const RepairResult& r);

}  // namespace onr
