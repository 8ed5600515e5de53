#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ontorepair/concept.hpp"
#include "ontorepair/reasoner.hpp"

namespace onr {

enum class Phase : std::uint8_t { Debug, Weaken, Complete };
std::string to_string(Phase p);

// Concepts shown side by side while candidates of one grid are validated.
struct PaneData {
  std::vector<std::string> sub;
  std::vector<std::string> sup;
  std::vector<std::pair<std::string, std::string>> edges;  // x ⊑ y among listed names, x != y
};

struct QuestionContext {
  Phase phase = Phase::Debug;
  std::optional<Gci> source;  // wrong or weakened axiom being processed
  std::string role;           // "justification", "sb⊑sp", "sp⊑sb", "wrong"
  std::optional<PaneData> pane;
};

struct PendingQuestion {
  std::string id;
  Gci axiom;
  QuestionContext context;
};

// Stable question id derived from the axiom's canonical text.
std::string question_id(const Gci& g);

// Answers whether an axiom holds in the domain. nullopt means the answer is
// not available yet (interactive use).
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual std::optional<bool> verdict(const Gci& g) = 0;
};

// Truth is entailment from a reference TBox.
class GoldOracle : public Oracle {
 public:
  explicit GoldOracle(std::vector<Gci> gold);
  std::optional<bool> verdict(const Gci& g) override { return gold_verdict(g); }
  bool gold_verdict(const Gci& g) const { return classifier_.entails(g); }
  bool coherent() const { return classifier_.unsatisfiable().empty(); }
  const std::vector<Gci>& tbox() const { return gold_; }

 private:
  std::vector<Gci> gold_;
  Classifier classifier_;
};

// Fixed answer list; unknown axioms stay unanswered.
class ScriptedOracle : public Oracle {
 public:
  ScriptedOracle() = default;
  explicit ScriptedOracle(std::map<Gci, bool> answers) : answers_(std::move(answers)) {}
  void set(const Gci& g, bool v) { answers_[g] = v; }
  std::optional<bool> verdict(const Gci& g) override;
  const std::map<Gci, bool>& answers() const { return answers_; }

 private:
  std::map<Gci, bool> answers_;
};

struct OracleStats {
  std::size_t asked = 0;
  std::vector<std::pair<Gci, bool>> answers;  // in order of first validation
  std::map<Phase, std::size_t> per_phase;
};

// Thrown when the backend cannot answer yet; carries every unanswered
// question of the current batch.
class NeedAnswers : public std::runtime_error {
 public:
  explicit NeedAnswers(std::vector<PendingQuestion> qs)
      : std::runtime_error("oracle answers pending"), questions(std::move(qs)) {}
  std::vector<PendingQuestion> questions;
};

// Caching front for an oracle. Each distinct axiom is validated once.
class OracleSession {
 public:
  explicit OracleSession(Oracle& backend) : backend_(&backend) {}

  bool ask(const Gci& g, const QuestionContext& ctx);
  // Validates a batch: either every verdict is available and recorded, or
  // NeedAnswers lists the missing ones and nothing is recorded.
  std::vector<bool> ask_all(const std::vector<Gci>& gs, const QuestionContext& ctx);
  std::optional<bool> known(const Gci& g) const;

  const OracleStats& stats() const { return stats_; }

 private:
  void record(const Gci& g, bool v, Phase phase);

  Oracle* backend_;
  std::map<Gci, bool> cache_;
  OracleStats stats_;
};

}  // namespace onr
