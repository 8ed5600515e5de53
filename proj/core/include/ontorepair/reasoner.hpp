#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ontorepair/concept.hpp"

namespace onr {

// Full: standard EL-bottom semantics. Positive: ⊥ is treated as an ordinary
// concept name (no ⊥ propagation, unsatisfiable names do not become
// subsumed by everything). Positive reasoning is what the repair operators
// use when enumerating sub/super-concept sets.
enum class Semantics : std::uint8_t { Full, Positive };

// Axioms in one of the shapes A ⊑ B, A1 ⊓ A2 ⊑ B, A ⊑ ∃r.B, ∃r.A ⊑ B where
// A, A1, A2, B are names, ⊤ or ⊥.
struct NormalizedTBox {
  std::vector<Gci> axioms;
  std::map<std::string, Concept> fresh_map;  // fresh name -> replaced sub-expression
  std::set<std::string> original_concepts;
  std::set<std::string> original_roles;
};

bool is_normal(const Gci& g);
NormalizedTBox normalize(const std::vector<Gci>& axioms);

// Fresh names use a character the parser rejects, so they cannot clash with
// user identifiers.
bool is_fresh_name(const std::string& name);

// Completion-rule saturation over a normalized TBox. Immutable once built.
class Classifier {
 public:
  explicit Classifier(const std::vector<Gci>& tbox, Semantics sem = Semantics::Full,
                      const std::vector<Concept>& query_concepts = {});
  explicit Classifier(const NormalizedTBox& tbox, Semantics sem = Semantics::Full,
                      const std::vector<Concept>& query_concepts = {});

  Semantics semantics() const { return sem_; }

  // True when c is atomic or was registered as a query concept.
  bool knows(const Concept& c) const;
  // sub ⊑ sup. Falls back to a fresh classification when either side is
  // complex and unregistered.
  bool subsumes(const Concept& sub, const Concept& sup) const;
  bool entails(const Gci& g) const { return subsumes(g.lhs, g.rhs); }
  bool subsumes_named(const std::string& sub, const std::string& sup) const;

  // Original (non-fresh) concept names of the TBox.
  const std::set<std::string>& signature() const { return signature_; }
  std::set<std::string> unsatisfiable() const;

  // Names in `candidates` subsumed by / subsuming `target`.
  std::set<std::string> sub_names(const Concept& target, const std::set<std::string>& candidates) const;
  std::set<std::string> sup_names(const Concept& target, const std::set<std::string>& candidates) const;

  std::size_t concept_count() const { return names_.size(); }

 private:
  void build(const NormalizedTBox& nt, const std::vector<Concept>& queries);
  int id_of(const std::string& name) const;
  int lhs_id(const Concept& c) const;  // representative for c on the left
  int rhs_id(const Concept& c) const;  // representative for c on the right
  bool holds(int x, int y) const;

  Semantics sem_;
  std::vector<Gci> source_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> ids_;
  std::map<Concept, std::pair<int, int>> query_ids_;
  std::vector<std::vector<std::uint64_t>> bits_;
  std::set<std::string> signature_;
};

struct CandidateOptions {
  // Names that may appear in the result; defaults to the TBox signature plus
  // the names of the target.
  std::optional<std::set<std::string>> scope;
  Semantics semantics = Semantics::Full;
};

bool entails(const std::vector<Gci>& tbox, const Gci& query, Semantics sem = Semantics::Full);
std::set<std::string> unsatisfiable_concepts(const std::vector<Gci>& tbox);
std::set<std::string> sub_named(const std::vector<Gci>& tbox, const Concept& target,
                                const CandidateOptions& opts = {});
std::set<std::string> sup_named(const std::vector<Gci>& tbox, const Concept& target,
                                const CandidateOptions& opts = {});

// Space of simple consequences: atomic Named ⊑ Named, optionally
// Named ⊓ Named ⊑ ⊥ and Named ⊑ ⊥.
struct SccSpace {
  std::set<std::string> names;  // empty: signature of the TBox
  bool subsumptions = true;
  bool disjointness = true;
  bool bottom_rhs = false;
  Semantics semantics = Semantics::Full;
  std::size_t cap = 250000;  // maximal number of candidate GCIs

  static SccSpace detection(std::set<std::string> names = {});
  static SccSpace positive(std::set<std::string> names = {});
};

class SpaceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All non-tautological GCIs of the space entailed by tbox, sorted.
std::vector<Gci> scc_consequences(const std::vector<Gci>& tbox, const SccSpace& space);

// Indices of the axioms in the syntactic ⊥-locality module of tbox for the
// given signature. Every justification of an entailment over the signature
// is contained in the module.
std::vector<std::size_t> bot_module(const std::vector<Gci>& tbox, const std::set<std::string>& concepts,
                                    const std::set<std::string>& roles = {});

}  // namespace onr
