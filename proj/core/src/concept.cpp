#include "ontorepair/concept.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace onr {

Concept::Concept() = default;

Concept Concept::top() { return Concept(); }

Concept Concept::bottom() {
  Concept c;
  c.kind_ = ConceptKind::Bottom;
  return c;
}

Concept Concept::named(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty concept name");
  Concept c;
  c.kind_ = ConceptKind::Named;
  c.text_ = std::move(name);
  return c;
}

Concept Concept::conj(std::vector<Concept> operands) {
  std::vector<Concept> flat;
  flat.reserve(operands.size());
  for (auto& op : operands) {
    if (op.is_top()) continue;
    if (op.is_bottom()) return bottom();
    if (op.is_conj()) {
      for (auto& inner : op.args_) flat.push_back(std::move(inner));
    } else {
      flat.push_back(std::move(op));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return top();
  if (flat.size() == 1) return std::move(flat.front());
  Concept c;
  c.kind_ = ConceptKind::Conj;
  c.args_ = std::move(flat);
  return c;
}

Concept Concept::conj(const Concept& a, const Concept& b) { return conj(std::vector<Concept>{a, b}); }

Concept Concept::exists(std::string role, Concept filler) {
  if (role.empty()) throw std::invalid_argument("empty role name");
  Concept c;
  c.kind_ = ConceptKind::Exists;
  c.text_ = std::move(role);
  c.args_.push_back(std::move(filler));
  return c;
}

std::strong_ordering Concept::compare(const Concept& other) const {
  if (auto c = kind_ <=> other.kind_; c != 0) return c;
  if (auto c = text_ <=> other.text_; c != 0) return c;
  const std::size_t n = std::min(args_.size(), other.args_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = args_[i].compare(other.args_[i]); c != 0) return c;
  }
  return args_.size() <=> other.args_.size();
}

std::string Concept::str() const {
  switch (kind_) {
    case ConceptKind::Top: return "⊤";
    case ConceptKind::Bottom: return "⊥";
    case ConceptKind::Named: return text_;
    case ConceptKind::Exists: {
      const Concept& f = filler();
      if (f.is_conj()) return "∃" + text_ + ".(" + f.str() + ")";
      return "∃" + text_ + "." + f.str();
    }
    case ConceptKind::Conj: {
      std::string out;
      for (std::size_t i = 0; i < args_.size(); ++i) {
        if (i) out += " ⊓ ";
        out += args_[i].str();
      }
      return out;
    }
  }
  return {};
}

std::string Concept::functional() const {
  switch (kind_) {
    case ConceptKind::Top: return "Top";
    case ConceptKind::Bottom: return "Bottom";
    case ConceptKind::Named: return text_;
    case ConceptKind::Exists: return "Some(" + text_ + ", " + filler().functional() + ")";
    case ConceptKind::Conj: {
      std::string out = "And(";
      for (std::size_t i = 0; i < args_.size(); ++i) {
        if (i) out += ", ";
        out += args_[i].functional();
      }
      return out + ")";
    }
  }
  return {};
}

std::size_t Concept::depth() const {
  std::size_t d = 0;
  for (const auto& a : args_) d = std::max(d, a.depth());
  return args_.empty() ? 0 : d + 1;
}

std::string Gci::str() const { return lhs.str() + " ⊑ " + rhs.str(); }

std::string Gci::functional() const { return "SubClassOf(" + lhs.functional() + ", " + rhs.functional() + ")"; }

static Concept atomic_from(const std::string& s) {
  if (s == "bottom" || s == "Bottom" || s == "⊥") return Concept::bottom();
  if (s == "top" || s == "Top" || s == "⊤") return Concept::top();
  return Concept::named(s);
}

Gci atomic_gci(const std::string& lhs, const std::string& rhs) { return Gci(atomic_from(lhs), atomic_from(rhs)); }

void collect_concept_names(const Concept& c, std::set<std::string>& out) {
  if (c.is_named()) out.insert(c.name());
  for (const auto& a : c.operands()) collect_concept_names(a, out);
}

void collect_role_names(const Concept& c, std::set<std::string>& out) {
  if (c.is_exists()) out.insert(c.role());
  for (const auto& a : c.operands()) collect_role_names(a, out);
}

std::set<std::string> concept_names(const Gci& g) {
  std::set<std::string> out;
  collect_concept_names(g.lhs, out);
  collect_concept_names(g.rhs, out);
  return out;
}

std::set<std::string> concept_names(const std::vector<Gci>& gs) {
  std::set<std::string> out;
  for (const auto& g : gs) {
    collect_concept_names(g.lhs, out);
    collect_concept_names(g.rhs, out);
  }
  return out;
}

std::size_t ConceptHash::operator()(const Concept& c) const {
  std::size_t h = std::hash<int>()(static_cast<int>(c.kind())) * 1000003u;
  h ^= std::hash<std::string>()(c.name()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  for (const auto& a : c.operands()) h ^= (*this)(a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t GciHash::operator()(const Gci& g) const {
  ConceptHash ch;
  std::size_t h = ch(g.lhs);
  return h ^ (ch(g.rhs) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace onr
