#include "support.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ontorepair/io.hpp"
#include "ontorepair/reasoner.hpp"

namespace onr::testing {

namespace {

const std::string kBot = "\x01bottom";

struct Model {
  std::vector<Concept> seeds;
  std::vector<std::set<std::string>> labels;
  std::vector<std::set<std::pair<std::string, int>>> edges;
  bool full = true;

  int element(const Concept& seed) {
    for (std::size_t i = 0; i < seeds.size(); ++i)
      if (seeds[i] == seed) return static_cast<int>(i);
    seeds.push_back(seed);
    labels.emplace_back();
    edges.emplace_back();
    const int id = static_cast<int>(seeds.size()) - 1;
    add(id, seed);
    return id;
  }

  void add(int x, const Concept& c) {
    switch (c.kind()) {
      case ConceptKind::Top: break;
      case ConceptKind::Bottom: labels[x].insert(kBot); break;
      case ConceptKind::Named: labels[x].insert(c.name()); break;
      case ConceptKind::Conj:
        for (const auto& o : c.operands()) add(x, o);
        break;
      case ConceptKind::Exists: {
        const int y = element(c.filler());
        edges[x].insert({c.role(), y});
        break;
      }
    }
  }

  bool eval(int x, const Concept& c) const {
    switch (c.kind()) {
      case ConceptKind::Top: return true;
      case ConceptKind::Bottom: return labels[x].count(kBot) > 0;
      case ConceptKind::Named: return labels[x].count(c.name()) > 0;
      case ConceptKind::Conj:
        return std::all_of(c.operands().begin(), c.operands().end(), [&](const Concept& o) { return eval(x, o); });
      case ConceptKind::Exists:
        for (const auto& [r, y] : edges[x])
          if (r == c.role() && eval(y, c.filler())) return true;
        return false;
    }
    return false;
  }

  std::size_t size() const {
    std::size_t n = seeds.size();
    for (const auto& l : labels) n += l.size();
    for (const auto& e : edges) n += e.size();
    return n;
  }

  void saturate(const std::vector<Gci>& tbox) {
    for (;;) {
      const std::size_t before = size();
      for (std::size_t x = 0; x < seeds.size(); ++x) {
        for (const auto& g : tbox)
          if (eval(static_cast<int>(x), g.lhs)) add(static_cast<int>(x), g.rhs);
        if (full)
          for (const auto& [r, y] : edges[x])
            if (labels[y].count(kBot)) labels[x].insert(kBot);
      }
      if (size() == before) return;
    }
  }
};

}  // namespace

bool model_entails(const std::vector<Gci>& tbox, const Gci& query, Semantics sem) {
  Model m;
  m.full = sem == Semantics::Full;
  const int x = m.element(query.lhs);
  m.saturate(tbox);
  if (m.full && m.labels[x].count(kBot)) return true;
  return m.eval(x, query.rhs);
}

bool reach_entails(const std::vector<Gci>& tbox, const Gci& query) {
  std::map<std::string, std::set<std::string>> succ;
  std::vector<std::pair<std::string, std::string>> disjoint;
  std::set<std::string> bottom;
  for (const auto& g : tbox) {
    if (g.lhs.is_named() && g.rhs.is_named())
      succ[g.lhs.name()].insert(g.rhs.name());
    else if (g.lhs.is_named() && g.rhs.is_bottom())
      bottom.insert(g.lhs.name());
    else if (g.lhs.is_conj() && g.lhs.operands().size() == 2 && g.rhs.is_bottom() && g.lhs.operands()[0].is_named() &&
             g.lhs.operands()[1].is_named())
      disjoint.emplace_back(g.lhs.operands()[0].name(), g.lhs.operands()[1].name());
    else
      throw std::invalid_argument("not an atomic axiom: " + g.str());
  }
  if (!query.lhs.is_named()) throw std::invalid_argument("query must have a named left-hand side");
  std::set<std::string> reach{query.lhs.name()};
  std::vector<std::string> todo{query.lhs.name()};
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    for (const auto& y : succ[x])
      if (reach.insert(y).second) todo.push_back(y);
  }
  bool unsat = false;
  for (const auto& x : reach) unsat = unsat || bottom.count(x);
  for (const auto& [a, b] : disjoint) unsat = unsat || (reach.count(a) && reach.count(b));
  if (unsat) return true;
  if (query.rhs.is_top()) return true;
  if (query.rhs.is_bottom()) return false;
  if (!query.rhs.is_named()) throw std::invalid_argument("query must have a named right-hand side");
  return reach.count(query.rhs.name()) > 0;
}

std::vector<std::string> name_pool(int n, const std::string& prefix) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<Gci> random_atomic_tbox(std::mt19937_64& rng, int n, int axioms) {
  const auto names = name_pool(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> shape(0, 9);
  std::vector<Gci> out;
  for (int k = 0; k < axioms; ++k) {
    const auto& a = names[pick(rng)];
    const auto& b = names[pick(rng)];
    const int s = shape(rng);
    if (s == 0)
      out.push_back(atomic_gci(a, "bottom"));
    else if (s == 1 && a != b)
      out.emplace_back(Concept::conj(Concept::named(a), Concept::named(b)), Concept::bottom());
    else
      out.push_back(atomic_gci(a, b));
  }
  return out;
}

Concept random_concept(std::mt19937_64& rng, const std::vector<std::string>& names, int depth) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(names.size()) - 1);
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 9 : 5);
  const int k = kind(rng);
  if (k <= 4) return Concept::named(names[pick(rng)]);
  if (k == 5) return std::uniform_int_distribution<int>(0, 5)(rng) == 0 ? Concept::top() : Concept::named(names[pick(rng)]);
  if (k <= 7) return Concept::conj(random_concept(rng, names, depth - 1), random_concept(rng, names, depth - 1));
  return Concept::exists(std::uniform_int_distribution<int>(0, 1)(rng) ? "r" : "s", random_concept(rng, names, depth - 1));
}

std::vector<Gci> random_el_tbox(std::mt19937_64& rng, int n, int axioms, int depth) {
  const auto names = name_pool(n);
  std::vector<Gci> out;
  for (int k = 0; k < axioms; ++k) {
    Concept rhs = std::uniform_int_distribution<int>(0, 11)(rng) == 0 ? Concept::bottom()
                                                                       : random_concept(rng, names, depth);
    out.emplace_back(random_concept(rng, names, depth), rhs);
  }
  return out;
}

std::vector<std::vector<std::size_t>> brute_justifications(const std::vector<Gci>& tbox, const Gci& target) {
  const std::size_t n = tbox.size();
  if (n > 16) throw std::invalid_argument("too many axioms for exhaustive search");
  std::vector<std::uint32_t> entailing;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Gci> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) sub.push_back(tbox[i]);
    if (model_entails(sub, target)) entailing.push_back(mask);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto m : entailing) {
    bool minimal = true;
    for (auto o : entailing)
      if (o != m && (o & m) == o) minimal = false;
    if (!minimal) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1u) idx.push_back(i);
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<AxiomId>> brute_hitting_sets(const std::vector<std::vector<AxiomId>>& families) {
  std::set<AxiomId> universe;
  for (const auto& f : families) universe.insert(f.begin(), f.end());
  const std::vector<AxiomId> u(universe.begin(), universe.end());
  if (u.size() > 20) throw std::invalid_argument("universe too large");
  auto hits = [&](std::uint32_t mask) {
    for (const auto& f : families) {
      bool any = false;
      for (std::size_t i = 0; i < u.size(); ++i)
        if (mask >> i & 1u && std::find(f.begin(), f.end(), u[i]) != f.end()) any = true;
      if (!any) return false;
    }
    return true;
  };
  std::vector<std::uint32_t> all;
  for (std::uint32_t mask = 0; mask < (1u << u.size()); ++mask)
    if (hits(mask)) all.push_back(mask);
  std::vector<std::vector<AxiomId>> out;
  for (auto m : all) {
    bool minimal = true;
    for (auto o : all)
      if (o != m && (o & m) == o) minimal = false;
    if (!minimal) continue;
    std::vector<AxiomId> ids;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (m >> i & 1u) ids.push_back(u[i]);
    out.push_back(ids);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RandomInstance random_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  RandomInstance inst;
  inst.seed = seed;
  const int n_ont = uniform(2, 3);
  std::vector<std::vector<std::string>> names(n_ont);
  std::vector<std::pair<int, std::string>> order;  // (ontology, name)
  for (int k = 0; k < n_ont; ++k) {
    const int n = uniform(4, 12);
    for (int i = 0; i < n; ++i) {
      names[k].push_back(std::string(1, static_cast<char>('a' + k)) + std::to_string(i));
      order.emplace_back(k, names[k].back());
    }
  }
  std::shuffle(order.begin(), order.end(), rng);

  // Gold: each name gets up to two parents earlier in the shuffled order,
  // preferring its own ontology, plus some disjointness that keeps it coherent.
  std::vector<Gci> gold;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const int parents = uniform(0, 2);
    for (int p = 0; p < parents; ++p) {
      const auto& cand = order[uniform(0, static_cast<int>(i) - 1)];
      if (cand.first != order[i].first && !coin(0.35)) continue;
      gold.push_back(atomic_gci(order[i].second, cand.second));
    }
  }
  for (int tries = 0, added = 0; tries < 20 && added < 2; ++tries) {
    const int k = uniform(0, n_ont - 1);
    const auto& x = names[k][uniform(0, static_cast<int>(names[k].size()) - 1)];
    const auto& y = names[k][uniform(0, static_cast<int>(names[k].size()) - 1)];
    if (x == y) continue;
    auto trial = gold;
    trial.emplace_back(Concept::conj(Concept::named(x), Concept::named(y)), Concept::bottom());
    if (!unsatisfiable_concepts(trial).empty()) continue;
    gold = std::move(trial);
    ++added;
  }
  std::sort(gold.begin(), gold.end());
  gold.erase(std::unique(gold.begin(), gold.end()), gold.end());
  inst.gold = gold;

  auto ontology_of = [&](const std::string& n) { return n[0] - 'a'; };
  std::vector<std::vector<Gci>> ont_axioms(n_ont);
  std::map<AlignmentKey, std::vector<Gci>> mappings;
  auto place = [&](const Gci& g) {
    const auto ns = concept_names(g);
    std::set<int> os;
    for (const auto& n : ns) os.insert(ontology_of(n));
    if (os.size() == 1) {
      ont_axioms[*os.begin()].push_back(g);
    } else {
      const int a = *os.begin(), b = *os.rbegin();
      mappings[{a, b}].push_back(g);
    }
  };
  for (const auto& g : gold)
    if (coin(g.rhs.is_bottom() ? 0.8 : 0.7)) place(g);

  const Classifier gc(gold);
  const int n_wrong = uniform(1, 4);
  std::set<Gci> wrong;
  for (int tries = 0; tries < 200 && static_cast<int>(wrong.size()) < n_wrong; ++tries) {
    const auto& x = order[uniform(0, static_cast<int>(order.size()) - 1)];
    const auto& y = order[uniform(0, static_cast<int>(order.size()) - 1)];
    if (x.second == y.second) continue;
    if (x.first != y.first && coin(0.5)) continue;
    const auto g = atomic_gci(x.second, y.second);
    if (gc.entails(g) || wrong.count(g)) continue;
    wrong.insert(g);
    place(g);
  }
  inst.wrong.assign(wrong.begin(), wrong.end());

  for (int k = 0; k < n_ont; ++k) {
    std::set<std::string> declared(names[k].begin(), names[k].end());
    inst.network.add_ontology(std::string(1, static_cast<char>('A' + k)), ont_axioms[k], declared);
  }
  for (int a = 0; a < n_ont; ++a)
    for (int b = a + 1; b < n_ont; ++b) inst.network.add_alignment(a, b, mappings[{a, b}]);
  return inst;
}

Fixture basic_fixture() {
  auto b = load_bundle(ONTOREPAIR_FIXTURE_DIR "/basic_network");
  return {b.network, b.wrong, *b.gold};
}

std::vector<RepairPlan> plan_grid() {
  const std::pair<RemoveMode, AddBackMode> rab[] = {
      {RemoveMode::None, AddBackMode::None}, {RemoveMode::One, AddBackMode::None}, {RemoveMode::All, AddBackMode::None},
      {RemoveMode::One, AddBackMode::One},   {RemoveMode::All, AddBackMode::All},  {RemoveMode::One, AddBackMode::All},
      {RemoveMode::All, AddBackMode::One}};
  const UpdateMode upd[] = {UpdateMode::Now, UpdateMode::EndOne, UpdateMode::EndAll};
  const OntologyLevel ol[] = {OntologyLevel::O, OntologyLevel::MO, OntologyLevel::ON};
  const AlignmentLevel al[] = {AlignmentLevel::M, AlignmentLevel::MM, AlignmentLevel::ON};
  const AddScope as[] = {AddScope::ON, AddScope::O, AddScope::M};
  const DecideMode dm[] = {DecideMode::AllValidate, DecideMode::OneValidate, DecideMode::ValidateOne};
  std::vector<RepairPlan> out;
  for (int i = 0; i < 12; ++i) {
    RepairPlan p;
    p.select = i % 2 ? SelectMode::All : SelectMode::One;
    p.decide = dm[i % 3];
    std::tie(p.remove, p.add_back) = rab[i % 7];
    p.weaken = (i / 2) % 2 ? BatchMode::All : BatchMode::One;
    p.weaken_update = upd[(i + 1) % 3];
    p.complete = (i / 3) % 2 ? BatchMode::All : BatchMode::One;
    p.complete_update = upd[(i + 2) % 3];
    p.kb_ontology = ol[(i / 3) % 3];
    p.kb_alignment = al[(i / 4) % 3];
    p.add_scope = as[(i / 2) % 3];
    if (i % 4 == 3) p.finalize.ontologies = {0};
    if (i % 5 == 4) p.debug_kb = DebugKb::Home;
    if (i % 6 == 5) p.strict_removal = true;
    out.push_back(p);
  }
  return out;
}

std::set<std::string> names_of(const std::vector<Gci>& gs) { return concept_names(gs); }

std::vector<std::string> strs(const std::vector<Gci>& gs) {
  std::vector<std::string> out;
  for (const auto& g : gs) out.push_back(g.str());
  return out;
}

}  // namespace onr::testing
