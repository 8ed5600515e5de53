#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace onr {

enum class ConceptKind : std::uint8_t { Top, Bottom, Named, Conj, Exists };

// EL-bottom concept in canonical form. Conjunctions are flattened, sorted and
// deduplicated on construction, so structural equality is equality modulo
// associativity, commutativity and idempotence.
class Concept {
 public:
  Concept();  // Top

  static Concept top();
  static Concept bottom();
  static Concept named(std::string name);
  static Concept conj(std::vector<Concept> operands);
  static Concept conj(const Concept& a, const Concept& b);
  static Concept exists(std::string role, Concept filler);

  ConceptKind kind() const { return kind_; }
  bool is_top() const { return kind_ == ConceptKind::Top; }
  bool is_bottom() const { return kind_ == ConceptKind::Bottom; }
  bool is_named() const { return kind_ == ConceptKind::Named; }
  bool is_conj() const { return kind_ == ConceptKind::Conj; }
  bool is_exists() const { return kind_ == ConceptKind::Exists; }
  // Named, Top or Bottom.
  bool is_atomic() const { return kind_ != ConceptKind::Conj && kind_ != ConceptKind::Exists; }

  // Concept name for Named, role name for Exists, empty otherwise.
  const std::string& name() const { return text_; }
  const std::string& role() const { return text_; }
  const std::vector<Concept>& operands() const { return args_; }
  const Concept& filler() const { return args_.front(); }

  std::strong_ordering compare(const Concept& other) const;
  friend bool operator==(const Concept& a, const Concept& b) { return a.compare(b) == 0; }
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b) { return a.compare(b); }

  // Description-logic notation, e.g. "∃r.(A ⊓ B)".
  std::string str() const;
  // Functional syntax accepted by the parser, e.g. "Some(r, And(A, B))".
  std::string functional() const;

  std::size_t depth() const;

 private:
  ConceptKind kind_ = ConceptKind::Top;
  std::string text_;
  std::vector<Concept> args_;
};

struct Gci {
  Concept lhs;
  Concept rhs;

  Gci() = default;
  Gci(Concept l, Concept r) : lhs(std::move(l)), rhs(std::move(r)) {}

  friend bool operator==(const Gci& a, const Gci& b) = default;
  friend std::strong_ordering operator<=>(const Gci& a, const Gci& b) {
    if (auto c = a.lhs <=> b.lhs; c != 0) return c;
    return a.rhs <=> b.rhs;
  }

  bool is_atomic() const { return lhs.is_atomic() && rhs.is_atomic(); }
  // C ⊑ C, C ⊑ ⊤ and ⊥ ⊑ C.
  bool is_tautology() const { return lhs == rhs || rhs.is_top() || lhs.is_bottom(); }

  std::string str() const;
  std::string functional() const;  // SubClassOf(C, D)
};

// Shorthand for Named ⊑ Named / Named ⊑ ⊥ axioms, mostly used by tests.
// "bottom" and "top" map to ⊥ and ⊤.
Gci atomic_gci(const std::string& lhs, const std::string& rhs);

void collect_concept_names(const Concept& c, std::set<std::string>& out);
void collect_role_names(const Concept& c, std::set<std::string>& out);
std::set<std::string> concept_names(const Gci& g);
std::set<std::string> concept_names(const std::vector<Gci>& gs);

struct GciHash {
  std::size_t operator()(const Gci& g) const;
};
struct ConceptHash {
  std::size_t operator()(const Concept& c) const;
};

}  // namespace onr
