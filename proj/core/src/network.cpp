#include "ontorepair/network.hpp"

#include <algorithm>

namespace onr {

namespace {

bool subset_of(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::set<std::string> names_of(const Concept& c) {
  std::set<std::string> s;
  collect_concept_names(c, s);
  return s;
}

void sort_by_id(std::vector<NetworkAxiom>& v) {
  std::sort(v.begin(), v.end(), [](const NetworkAxiom& a, const NetworkAxiom& b) { return a.id < b.id; });
}

}  // namespace

int OntologyNetwork::add_ontology(std::string name, const std::vector<Gci>& axioms,
                                  const std::set<std::string>& declared) {
  if (ontology_index(name) >= 0) throw NetworkError("duplicate ontology '" + name + "'");
  Ontology o;
  o.name = std::move(name);
  o.signature = declared;
  for (const auto& g : axioms) {
    collect_concept_names(g.lhs, o.signature);
    collect_concept_names(g.rhs, o.signature);
  }
  ontologies_.push_back(std::move(o));
  const int idx = static_cast<int>(ontologies_.size()) - 1;
  for (const auto& g : axioms) add_axiom(idx, g);
  return idx;
}

void OntologyNetwork::add_alignment(int i, int j, const std::vector<Gci>& mappings) {
  if (i == j) throw NetworkError("alignment of an ontology with itself");
  AlignmentKey key{std::min(i, j), std::max(i, j)};
  alignments_[key];
  for (const auto& g : mappings) add_mapping(i, j, g);
}

AxiomId OntologyNetwork::add_axiom(int ontology, const Gci& gci) {
  if (ontology < 0 || ontology >= static_cast<int>(ontologies_.size())) throw UnknownFocus("unknown ontology index");
  auto& o = ontologies_[ontology];
  collect_concept_names(gci.lhs, o.signature);
  collect_concept_names(gci.rhs, o.signature);
  NetworkAxiom ax{next_id_++, gci, Provenance::ontology(ontology)};
  o.axioms.push_back(std::move(ax));
  return o.axioms.back().id;
}

void OntologyNetwork::check_mapping(int i, int j, const Gci& g) const {
  const int n = static_cast<int>(ontologies_.size());
  if (i < 0 || j < 0 || i >= n || j >= n) throw UnknownFocus("unknown ontology index in alignment");
  const auto& si = ontologies_[i].signature;
  const auto& sj = ontologies_[j].signature;
  auto l = names_of(g.lhs);
  auto r = names_of(g.rhs);
  for (const auto& x : l)
    if (!si.count(x) && !sj.count(x)) throw NetworkError("mapping " + g.str() + " uses unknown concept '" + x + "'");
  for (const auto& x : r)
    if (!si.count(x) && !sj.count(x)) throw NetworkError("mapping " + g.str() + " uses unknown concept '" + x + "'");
  const bool forward = subset_of(l, si) && subset_of(r, sj);
  const bool backward = subset_of(l, sj) && subset_of(r, si);
  if (!forward && !backward)
    throw NetworkError("mapping " + g.str() + " mixes names of both ontologies on one side");
}

AxiomId OntologyNetwork::add_mapping(int i, int j, const Gci& gci) {
  check_mapping(i, j, gci);
  AlignmentKey key{std::min(i, j), std::max(i, j)};
  NetworkAxiom ax{next_id_++, gci, Provenance::alignment(i, j)};
  alignments_[key].push_back(std::move(ax));
  return alignments_[key].back().id;
}

int OntologyNetwork::ontology_index(const std::string& name) const {
  for (std::size_t i = 0; i < ontologies_.size(); ++i)
    if (ontologies_[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<NetworkAxiom> OntologyNetwork::axioms() const {
  std::vector<NetworkAxiom> out;
  for (const auto& o : ontologies_) out.insert(out.end(), o.axioms.begin(), o.axioms.end());
  for (const auto& [k, v] : alignments_) out.insert(out.end(), v.begin(), v.end());
  sort_by_id(out);
  return out;
}

std::vector<Gci> OntologyNetwork::assemble() const {
  std::vector<Gci> out;
  for (const auto& a : axioms()) out.push_back(a.gci);
  return out;
}

std::vector<NetworkAxiom> OntologyNetwork::asserted() const {
  std::vector<NetworkAxiom> out;
  for (const auto& a : axioms())
    if (a.prov.asserted()) out.push_back(a);
  return out;
}

const NetworkAxiom* OntologyNetwork::find(AxiomId id) const {
  for (const auto& o : ontologies_)
    for (const auto& a : o.axioms)
      if (a.id == id) return &a;
  for (const auto& [k, v] : alignments_)
    for (const auto& a : v)
      if (a.id == id) return &a;
  return nullptr;
}

std::vector<AxiomId> OntologyNetwork::find_asserted(const Gci& gci) const {
  std::vector<AxiomId> out;
  for (const auto& a : asserted())
    if (a.gci == gci) out.push_back(a.id);
  return out;
}

std::set<std::string> OntologyNetwork::signature() const {
  std::set<std::string> s;
  for (const auto& o : ontologies_) s.insert(o.signature.begin(), o.signature.end());
  return s;
}

Home OntologyNetwork::home_of(const Gci& gci) const {
  auto names = concept_names(gci);
  const int n = static_cast<int>(ontologies_.size());
  for (int i = 0; i < n; ++i)
    if (subset_of(names, ontologies_[i].signature)) return {Home::Kind::Ontology, i, -1};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::set<std::string> u = ontologies_[i].signature;
      u.insert(ontologies_[j].signature.begin(), ontologies_[j].signature.end());
      if (subset_of(names, u)) return {Home::Kind::Alignment, i, j};
    }
  return {};
}

bool OntologyNetwork::within_one_ontology(const Gci& gci) const { return home_of(gci).kind == Home::Kind::Ontology; }

bool OntologyNetwork::same_ontology(const std::string& a, const std::string& b) const {
  for (const auto& o : ontologies_)
    if (o.signature.count(a) && o.signature.count(b)) return true;
  return false;
}

OntologyNetwork OntologyNetwork::without(const std::set<AxiomId>& ids) const {
  OntologyNetwork out = *this;
  for (auto& o : out.ontologies_)
    std::erase_if(o.axioms, [&](const NetworkAxiom& a) { return ids.count(a.id) > 0; });
  for (auto& [k, v] : out.alignments_)
    std::erase_if(v, [&](const NetworkAxiom& a) { return ids.count(a.id) > 0; });
  return out;
}

void OntologyNetwork::place(NetworkAxiom ax) {
  if (ax.prov.second >= 0) {
    alignments_[{ax.prov.first, ax.prov.second}].push_back(std::move(ax));
  } else {
    ontologies_.at(ax.prov.first).axioms.push_back(std::move(ax));
  }
}

OntologyNetwork OntologyNetwork::with_added(const std::vector<Gci>& gcis, const std::string& label) const {
  OntologyNetwork out = *this;
  for (const auto& g : gcis) {
    Home h = home_of(g);
    int first = h.first;
    int second = h.second;
    if (h.kind == Home::Kind::None) {
      // Names spread over more than two ontologies: attach to the first pair
      // the names touch.
      auto names = concept_names(g);
      std::vector<int> touched;
      for (int i = 0; i < static_cast<int>(ontologies_.size()); ++i)
        for (const auto& x : names)
          if (ontologies_[i].signature.count(x)) {
            touched.push_back(i);
            break;
          }
      if (touched.size() < 2) throw NetworkError("axiom " + g.str() + " uses names outside the network");
      first = touched[0];
      second = touched[1];
    }
    out.place({out.next_id_++, g, Provenance::repair_added(first, second, label)});
  }
  return out;
}

OntologyNetwork OntologyNetwork::with_materialized(const std::vector<NetworkAxiom>& extra) const {
  OntologyNetwork out = *this;
  for (const auto& a : extra) {
    NetworkAxiom copy = a;
    copy.id = out.next_id_++;
    copy.prov.kind = Provenance::Kind::Materialized;
    out.place(std::move(copy));
  }
  return out;
}

OntologyNetwork OntologyNetwork::with_restored(const std::vector<NetworkAxiom>& axioms) const {
  OntologyNetwork out = *this;
  for (const auto& a : axioms) {
    if (out.find(a.id)) continue;
    out.place(a);
    auto& v = a.prov.second >= 0 ? out.alignments_[{a.prov.first, a.prov.second}]
                                 : out.ontologies_.at(a.prov.first).axioms;
    sort_by_id(v);
  }
  return out;
}

std::string to_string(KbScope::Level level) {
  switch (level) {
    case KbScope::Level::ON: return "ON";
    case KbScope::Level::O: return "O";
    case KbScope::Level::MO: return "MO";
    case KbScope::Level::M: return "M";
    case KbScope::Level::MM: return "MM";
  }
  return "?";
}

std::string to_string(AddScope s) {
  switch (s) {
    case AddScope::ON: return "ON";
    case AddScope::O: return "O";
    case AddScope::M: return "M";
  }
  return "?";
}

MaterializedView::MaterializedView(const OntologyNetwork& net, const SccSpace& space) {
  SccSpace sp = space;
  if (sp.names.empty()) sp.names = net.signature();
  const auto consequences = scc_consequences(net.assemble(), sp);
  const auto& onts = net.ontologies();
  AxiomId next = net.next_id();
  per_ontology_.resize(onts.size());
  for (std::size_t i = 0; i < onts.size(); ++i)
    for (const auto& g : consequences)
      if (subset_of(concept_names(g), onts[i].signature))
        per_ontology_[i].push_back({next++, g, Provenance::materialized(static_cast<int>(i))});
  for (const auto& [key, mappings] : net.alignments()) {
    (void)mappings;
    const auto& si = onts[key.first].signature;
    const auto& sj = onts[key.second].signature;
    std::set<std::string> u = si;
    u.insert(sj.begin(), sj.end());
    auto& slice = per_alignment_[key];
    for (const auto& g : consequences) {
      auto names = concept_names(g);
      if (subset_of(names, u) && !subset_of(names, si) && !subset_of(names, sj))
        slice.push_back({next++, g, Provenance::materialized(key.first, key.second)});
    }
  }
  std::set<Gci> seen;
  auto take = [&](const std::vector<NetworkAxiom>& v) {
    for (const auto& a : v)
      if (seen.insert(a.gci).second) all_.push_back(a);
  };
  for (const auto& v : per_ontology_) take(v);
  for (const auto& [k, v] : per_alignment_) take(v);
}

const std::vector<NetworkAxiom>& MaterializedView::ontology(int i) const {
  if (i < 0 || i >= static_cast<int>(per_ontology_.size())) return empty_;
  return per_ontology_[i];
}

const std::vector<NetworkAxiom>& MaterializedView::alignment(AlignmentKey p) const {
  auto it = per_alignment_.find(p);
  return it == per_alignment_.end() ? empty_ : it->second;
}

std::vector<NetworkAxiom> materialize_ontology(const OntologyNetwork& net, int focus, const SccSpace& space) {
  if (focus < 0 || focus >= static_cast<int>(net.ontologies().size())) throw UnknownFocus("unknown ontology");
  return MaterializedView(net, space).ontology(focus);
}

std::vector<NetworkAxiom> materialize_alignment(const OntologyNetwork& net, AlignmentKey focus, const SccSpace& space) {
  if (!net.alignments().count(focus)) throw UnknownFocus("unknown alignment");
  return MaterializedView(net, space).alignment(focus);
}

std::vector<Gci> ScopedKb::gcis() const {
  std::vector<Gci> out;
  out.reserve(axioms.size());
  for (const auto& a : axioms) out.push_back(a.gci);
  return out;
}

std::vector<Gci> ScopedKb::asserted_gcis() const {
  std::vector<Gci> out;
  for (const auto& a : axioms)
    if (a.prov.kind != Provenance::Kind::Materialized) out.push_back(a.gci);
  return out;
}

ScopedKb scoped_kb(const OntologyNetwork& net, const KbScope& scope, const MaterializedView* mat) {
  ScopedKb kb;
  const auto& onts = net.ontologies();
  std::optional<MaterializedView> lazy;
  auto view = [&]() -> const MaterializedView& {
    if (mat) return *mat;
    if (!lazy) lazy.emplace(net, SccSpace::detection());
    return *lazy;
  };
  switch (scope.level) {
    case KbScope::Level::ON:
      kb.axioms = net.axioms();
      if (mat) kb.axioms.insert(kb.axioms.end(), mat->all().begin(), mat->all().end());
      kb.candidates = net.signature();
      return kb;
    case KbScope::Level::O:
    case KbScope::Level::MO: {
      if (scope.focus < 0 || scope.focus >= static_cast<int>(onts.size())) throw UnknownFocus("unknown ontology");
      kb.axioms = onts[scope.focus].axioms;
      sort_by_id(kb.axioms);
      if (scope.level == KbScope::Level::MO) {
        const auto& m = view().ontology(scope.focus);
        kb.axioms.insert(kb.axioms.end(), m.begin(), m.end());
      }
      kb.candidates = onts[scope.focus].signature;
      return kb;
    }
    case KbScope::Level::M:
    case KbScope::Level::MM: {
      auto it = net.alignments().find(scope.pair);
      if (it == net.alignments().end()) throw UnknownFocus("unknown alignment");
      kb.axioms = it->second;
      sort_by_id(kb.axioms);
      if (scope.level == KbScope::Level::MM) {
        const auto& m = view().alignment(scope.pair);
        kb.axioms.insert(kb.axioms.end(), m.begin(), m.end());
      }
      for (const auto& a : kb.axioms) {
        collect_concept_names(a.gci.lhs, kb.candidates);
        collect_concept_names(a.gci.rhs, kb.candidates);
      }
      return kb;
    }
  }
  return kb;
}

bool scope_admits(const OntologyNetwork& net, const KbScope& scope, const Gci& gci) {
  const auto names = concept_names(gci);
  const auto& onts = net.ontologies();
  switch (scope.level) {
    case KbScope::Level::ON: return true;
    case KbScope::Level::O:
    case KbScope::Level::MO: return subset_of(names, onts.at(scope.focus).signature);
    case KbScope::Level::M:
    case KbScope::Level::MM: {
      std::set<std::string> u = onts.at(scope.pair.first).signature;
      const auto& sj = onts.at(scope.pair.second).signature;
      u.insert(sj.begin(), sj.end());
      return subset_of(names, u);
    }
  }
  return false;
}

std::vector<Gci> filter_add_set(const std::vector<Gci>& axioms, AddScope scope, const OntologyNetwork& net) {
  if (scope == AddScope::ON) return axioms;
  std::vector<Gci> out;
  for (const auto& g : axioms) {
    const bool inside = net.within_one_ontology(g);
    if ((scope == AddScope::O) == inside) out.push_back(g);
  }
  return out;
}

OntologyNetwork finalize_materialize(const OntologyNetwork& repaired, const FinalizeTargets& targets,
                                     const std::vector<Gci>& removed, const SccSpace& space) {
  if (targets.empty()) return repaired;
  MaterializedView view(repaired, space);
  const std::set<Gci> removed_set(removed.begin(), removed.end());
  std::vector<NetworkAxiom> extra;
  auto add_slice = [&](const std::vector<NetworkAxiom>& slice, const std::vector<NetworkAxiom>& existing) {
    std::set<Gci> present;
    for (const auto& a : existing) present.insert(a.gci);
    for (const auto& a : slice)
      if (!present.count(a.gci) && !removed_set.count(a.gci)) extra.push_back(a);
  };
  for (int i : targets.ontologies) {
    if (i < 0 || i >= static_cast<int>(repaired.ontologies().size())) throw UnknownFocus("unknown ontology");
    add_slice(view.ontology(i), repaired.ontologies()[i].axioms);
  }
  for (const auto& p : targets.alignments) {
    auto it = repaired.alignments().find(p);
    if (it == repaired.alignments().end()) throw UnknownFocus("unknown alignment");
    add_slice(view.alignment(p), it->second);
  }
  return repaired.with_materialized(extra);
}

std::vector<ScopeReport> detect_unsatisfiable(const OntologyNetwork& net, KbScope::Level level) {
  std::vector<ScopeReport> out;
  std::optional<MaterializedView> mat;
  if (level == KbScope::Level::MO || level == KbScope::Level::MM) mat.emplace(net, SccSpace::detection());
  auto run = [&](std::string name, const KbScope& kb) {
    out.push_back({std::move(name), kb, unsatisfiable_concepts(scoped_kb(net, kb, mat ? &*mat : nullptr).gcis())});
  };
  const auto& onts = net.ontologies();
  switch (level) {
    case KbScope::Level::ON: run("ON", KbScope::on()); break;
    case KbScope::Level::O:
    case KbScope::Level::MO:
      for (std::size_t i = 0; i < onts.size(); ++i) {
        const int k = static_cast<int>(i);
        run(to_string(level) + "(" + onts[i].name + ")", level == KbScope::Level::O ? KbScope::o(k) : KbScope::mo(k));
      }
      break;
    case KbScope::Level::M:
    case KbScope::Level::MM:
      for (const auto& [p, axs] : net.alignments())
        run(to_string(level) + "(" + onts[p.first].name + "-" + onts[p.second].name + ")",
            level == KbScope::Level::M ? KbScope::m(p) : KbScope::mm(p));
      break;
  }
  return out;
}

}  // namespace onr
