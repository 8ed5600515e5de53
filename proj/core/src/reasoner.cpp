#include "ontorepair/reasoner.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace onr {

namespace {

constexpr int kTop = 0;
constexpr int kBottom = 1;

class Normalizer {
 public:
  explicit Normalizer(NormalizedTBox& out) : out_(out) {}

  void add(const Gci& g) {
    const Concept& lhs = g.lhs;
    const Concept& rhs = g.rhs;
    if (rhs.is_top() || lhs.is_bottom()) return;
    if (rhs.is_conj()) {
      for (const auto& op : rhs.operands()) add(Gci(lhs, op));
      return;
    }
    if (!lhs.is_atomic() && !rhs.is_atomic()) {
      Concept x = atomize(rhs, false);
      add(Gci(lhs, x));
      return;
    }
    if (lhs.is_atomic()) {
      if (rhs.is_atomic()) {
        emit(Gci(lhs, rhs));
      } else {  // rhs is ∃r.F
        Concept f = atomize(rhs.filler(), false);
        emit(Gci(lhs, Concept::exists(rhs.role(), f)));
      }
      return;
    }
    if (lhs.is_exists()) {
      Concept f = atomize(lhs.filler(), true);
      emit(Gci(Concept::exists(lhs.role(), f), rhs));
      return;
    }
    // lhs is a conjunction; binarize left to right.
    std::vector<Concept> ops;
    for (const auto& op : lhs.operands()) ops.push_back(atomize(op, true));
    Concept acc = ops.front();
    for (std::size_t i = 1; i + 1 < ops.size(); ++i) {
      Concept pair = Concept::conj(acc, ops[i]);
      if (pair.is_atomic()) {
        acc = pair;
        continue;
      }
      Concept y = fresh_for(pair);
      if (directions_.insert({pair, true}).second) emit(Gci(pair, y));
      acc = y;
    }
    emit(Gci(Concept::conj(acc, ops.back()), rhs));
  }

 private:
  // Returns a name standing for c. On the left c ⊑ X is added, on the right
  // X ⊑ c.
  Concept atomize(const Concept& c, bool lhs_side) {
    if (c.is_atomic()) return c;
    Concept x = fresh_for(c);
    if (directions_.insert({c, lhs_side}).second) {
      if (lhs_side)
        add(Gci(c, x));
      else
        add(Gci(x, c));
    }
    return x;
  }

  Concept fresh_for(const Concept& c) {
    auto it = fresh_of_.find(c);
    if (it != fresh_of_.end()) return Concept::named(it->second);
    std::string name = "$" + std::to_string(fresh_of_.size() + 1);
    fresh_of_.emplace(c, name);
    out_.fresh_map.emplace(name, c);
    return Concept::named(name);
  }

  void emit(Gci g) {
    if (g.is_tautology()) return;
    if (seen_.insert(g).second) out_.axioms.push_back(std::move(g));
  }

  NormalizedTBox& out_;
  std::map<Concept, std::string> fresh_of_;
  std::set<std::pair<Concept, bool>> directions_;
  std::set<Gci> seen_;
};

bool atomic_or_named(const Concept& c) { return c.is_atomic(); }

bool is_local(const Concept& c, const std::set<std::string>& concepts, const std::set<std::string>& roles) {
  switch (c.kind()) {
    case ConceptKind::Top: return false;
    case ConceptKind::Bottom: return true;
    case ConceptKind::Named: return !concepts.count(c.name());
    case ConceptKind::Exists: return !roles.count(c.role()) || is_local(c.filler(), concepts, roles);
    case ConceptKind::Conj:
      for (const auto& op : c.operands())
        if (is_local(op, concepts, roles)) return true;
      return false;
  }
  return false;
}

}  // namespace

bool is_fresh_name(const std::string& name) { return !name.empty() && name.front() == '$'; }

bool is_normal(const Gci& g) {
  const Concept& l = g.lhs;
  const Concept& r = g.rhs;
  if (l.is_atomic() && r.is_atomic()) return true;
  if (l.is_conj() && r.is_atomic())
    return l.operands().size() == 2 && atomic_or_named(l.operands()[0]) && atomic_or_named(l.operands()[1]);
  if (l.is_atomic() && r.is_exists()) return r.filler().is_atomic();
  if (l.is_exists() && r.is_atomic()) return l.filler().is_atomic();
  return false;
}

NormalizedTBox normalize(const std::vector<Gci>& axioms) {
  NormalizedTBox out;
  for (const auto& g : axioms) {
    collect_concept_names(g.lhs, out.original_concepts);
    collect_concept_names(g.rhs, out.original_concepts);
    collect_role_names(g.lhs, out.original_roles);
    collect_role_names(g.rhs, out.original_roles);
  }
  Normalizer n(out);
  for (const auto& g : axioms) n.add(g);
  return out;
}

Classifier::Classifier(const std::vector<Gci>& tbox, Semantics sem, const std::vector<Concept>& query_concepts)
    : sem_(sem), source_(tbox) {
  std::vector<Gci> all = tbox;
  std::vector<Concept> complex;
  for (const auto& q : query_concepts)
    if (!q.is_atomic() && std::find(complex.begin(), complex.end(), q) == complex.end()) complex.push_back(q);
  for (std::size_t i = 0; i < complex.size(); ++i) {
    all.emplace_back(Concept::named("$qL" + std::to_string(i)), complex[i]);
    all.emplace_back(complex[i], Concept::named("$qR" + std::to_string(i)));
  }
  NormalizedTBox nt = normalize(all);
  for (const auto& n : nt.original_concepts)
    if (!is_fresh_name(n)) signature_.insert(n);
  build(nt, {});
  for (std::size_t i = 0; i < complex.size(); ++i)
    query_ids_[complex[i]] = {ids_.at("$qL" + std::to_string(i)), ids_.at("$qR" + std::to_string(i))};
}

Classifier::Classifier(const NormalizedTBox& tbox, Semantics sem, const std::vector<Concept>& query_concepts)
    : sem_(sem), source_(tbox.axioms) {
  if (!query_concepts.empty()) {
    *this = Classifier(tbox.axioms, sem, query_concepts);
    return;
  }
  for (const auto& n : tbox.original_concepts)
    if (!is_fresh_name(n)) signature_.insert(n);
  build(tbox, {});
}

void Classifier::build(const NormalizedTBox& nt, const std::vector<Concept>&) {
  names_ = {"⊤", "⊥"};
  auto intern = [&](const Concept& c) -> int {
    if (c.is_top()) return kTop;
    if (c.is_bottom()) return kBottom;
    auto [it, fresh] = ids_.emplace(c.name(), static_cast<int>(names_.size()));
    if (fresh) names_.push_back(c.name());
    return it->second;
  };
  std::unordered_map<std::string, int> role_ids;
  auto role = [&](const std::string& r) {
    auto [it, fresh] = role_ids.emplace(r, static_cast<int>(role_ids.size()));
    return it->second;
  };
  for (const auto& n : signature_) intern(Concept::named(n));

  struct Told {
    int a, a2, r, b;
  };
  std::vector<Told> told, conj2, ex_rhs, ex_lhs;
  for (const auto& g : nt.axioms) {
    const Concept& l = g.lhs;
    const Concept& r = g.rhs;
    if (l.is_atomic() && r.is_atomic()) {
      told.push_back({intern(l), -1, -1, intern(r)});
    } else if (l.is_conj()) {
      conj2.push_back({intern(l.operands()[0]), intern(l.operands()[1]), -1, intern(r)});
    } else if (r.is_exists()) {
      ex_rhs.push_back({intern(l), -1, role(r.role()), intern(r.filler())});
    } else {
      ex_lhs.push_back({intern(l.filler()), -1, role(l.role()), intern(r)});
    }
  }
  const int n = static_cast<int>(names_.size());
  std::vector<std::vector<int>> told_idx(n);
  std::vector<std::vector<std::pair<int, int>>> conj_idx(n), exr_idx(n), exl_idx(n);
  for (const auto& t : told) told_idx[t.a].push_back(t.b);
  for (const auto& t : conj2) {
    conj_idx[t.a].push_back({t.a2, t.b});
    if (t.a2 != t.a) conj_idx[t.a2].push_back({t.a, t.b});
  }
  for (const auto& t : ex_rhs) exr_idx[t.a].push_back({t.r, t.b});
  for (const auto& t : ex_lhs) exl_idx[t.a].push_back({t.r, t.b});

  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(n, std::vector<std::uint64_t>(words, 0));
  std::vector<std::vector<int>> members(n);
  std::vector<std::vector<std::pair<int, int>>> succ(n), pred(n);
  std::set<std::tuple<int, int, int>> links;
  std::vector<std::pair<int, int>> queue;
  const bool full = sem_ == Semantics::Full;

  auto has = [&](int x, int a) { return (bits_[x][a >> 6] >> (a & 63)) & 1u; };
  auto add = [&](int x, int a) {
    if (has(x, a)) return;
    bits_[x][a >> 6] |= std::uint64_t{1} << (a & 63);
    members[x].push_back(a);
    queue.emplace_back(x, a);
  };
  auto link = [&](int x, int r, int y) {
    if (!links.emplace(x, r, y).second) return;
    succ[x].push_back({r, y});
    pred[y].push_back({r, x});
    for (std::size_t i = 0; i < members[y].size(); ++i) {
      int a = members[y][i];
      for (auto [rr, b] : exl_idx[a])
        if (rr == r) add(x, b);
    }
    if (full && has(y, kBottom)) add(x, kBottom);
  };

  for (int x = 0; x < n; ++x) {
    add(x, x);
    add(x, kTop);
  }
  while (!queue.empty()) {
    auto [x, a] = queue.back();
    queue.pop_back();
    for (int b : told_idx[a]) add(x, b);
    for (auto [a2, b] : conj_idx[a])
      if (has(x, a2)) add(x, b);
    for (auto [r, b] : exr_idx[a]) link(x, r, b);
    for (std::size_t i = 0; i < pred[x].size(); ++i) {
      auto [r, z] = pred[x][i];
      for (auto [rr, b] : exl_idx[a])
        if (rr == r) add(z, b);
      if (full && a == kBottom) add(z, kBottom);
    }
  }
}

int Classifier::id_of(const std::string& name) const {
  auto it = ids_.find(name);
  return it == ids_.end() ? -1 : it->second;
}

bool Classifier::holds(int x, int y) const {
  if ((bits_[x][y >> 6] >> (y & 63)) & 1u) return true;
  return sem_ == Semantics::Full && ((bits_[x][kBottom >> 6] >> (kBottom & 63)) & 1u);
}

bool Classifier::knows(const Concept& c) const { return c.is_atomic() || query_ids_.count(c); }

int Classifier::lhs_id(const Concept& c) const {
  if (c.is_top()) return kTop;
  if (c.is_bottom()) return kBottom;
  if (c.is_named()) return id_of(c.name());
  return query_ids_.at(c).first;
}

int Classifier::rhs_id(const Concept& c) const {
  if (c.is_top()) return kTop;
  if (c.is_bottom()) return kBottom;
  if (c.is_named()) return id_of(c.name());
  return query_ids_.at(c).second;
}

bool Classifier::subsumes(const Concept& sub, const Concept& sup) const {
  if (sub == sup || sup.is_top()) return true;
  if (!knows(sub) || !knows(sup)) {
    Classifier fresh(source_, sem_, {sub, sup});
    return fresh.subsumes(sub, sup);
  }
  if (sub.is_bottom() && sem_ == Semantics::Full) return true;
  int x = lhs_id(sub);
  int y = rhs_id(sup);
  // A name absent from the TBox behaves like ⊤ without extra constraints.
  if (x < 0) x = kTop;
  if (y < 0) return sem_ == Semantics::Full && holds(x, kBottom);
  return holds(x, y);
}

bool Classifier::subsumes_named(const std::string& sub, const std::string& sup) const {
  return subsumes(Concept::named(sub), Concept::named(sup));
}

std::set<std::string> Classifier::unsatisfiable() const {
  std::set<std::string> out;
  for (const auto& n : signature_)
    if (holds(ids_.at(n), kBottom)) out.insert(n);
  return out;
}

std::set<std::string> Classifier::sub_names(const Concept& target, const std::set<std::string>& candidates) const {
  if (!knows(target)) return Classifier(source_, sem_, {target}).sub_names(target, candidates);
  std::set<std::string> out;
  for (const auto& c : candidates)
    if (subsumes(Concept::named(c), target)) out.insert(c);
  return out;
}

std::set<std::string> Classifier::sup_names(const Concept& target, const std::set<std::string>& candidates) const {
  if (!knows(target)) return Classifier(source_, sem_, {target}).sup_names(target, candidates);
  std::set<std::string> out;
  for (const auto& c : candidates)
    if (subsumes(target, Concept::named(c))) out.insert(c);
  return out;
}

bool entails(const std::vector<Gci>& tbox, const Gci& query, Semantics sem) {
  if (query.is_tautology()) return true;
  std::vector<Concept> q;
  if (!query.lhs.is_atomic()) q.push_back(query.lhs);
  if (!query.rhs.is_atomic()) q.push_back(query.rhs);
  return Classifier(tbox, sem, q).entails(query);
}

std::set<std::string> unsatisfiable_concepts(const std::vector<Gci>& tbox) { return Classifier(tbox).unsatisfiable(); }

static std::set<std::string> default_scope(const std::vector<Gci>& tbox, const Concept& target,
                                           const CandidateOptions& opts) {
  if (opts.scope) return *opts.scope;
  std::set<std::string> s = concept_names(tbox);
  collect_concept_names(target, s);
  return s;
}

std::set<std::string> sub_named(const std::vector<Gci>& tbox, const Concept& target, const CandidateOptions& opts) {
  return Classifier(tbox, opts.semantics, {target}).sub_names(target, default_scope(tbox, target, opts));
}

std::set<std::string> sup_named(const std::vector<Gci>& tbox, const Concept& target, const CandidateOptions& opts) {
  return Classifier(tbox, opts.semantics, {target}).sup_names(target, default_scope(tbox, target, opts));
}

SccSpace SccSpace::detection(std::set<std::string> names) {
  SccSpace s;
  s.names = std::move(names);
  return s;
}

SccSpace SccSpace::positive(std::set<std::string> names) {
  SccSpace s;
  s.names = std::move(names);
  s.disjointness = false;
  s.semantics = Semantics::Positive;
  return s;
}

std::vector<Gci> scc_consequences(const std::vector<Gci>& tbox, const SccSpace& space) {
  std::set<std::string> names = space.names.empty() ? concept_names(tbox) : space.names;
  const std::size_t n = names.size();
  std::size_t size = 0;
  if (space.subsumptions) size += n * n;
  if (space.disjointness) size += n * (n - (n ? 1 : 0)) / 2;
  if (space.bottom_rhs) size += n;
  if (size > space.cap)
    throw SpaceTooLarge("consequence space of " + std::to_string(size) + " axioms exceeds cap " +
                        std::to_string(space.cap));
  std::vector<std::string> v(names.begin(), names.end());
  std::vector<Concept> queries;
  if (space.disjointness)
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        queries.push_back(Concept::conj(Concept::named(v[i]), Concept::named(v[j])));
  Classifier cl(tbox, space.semantics, queries);
  std::vector<Gci> out;
  for (const auto& x : v) {
    Concept cx = Concept::named(x);
    if (space.subsumptions)
      for (const auto& y : v)
        if (x != y && cl.subsumes(cx, Concept::named(y))) out.emplace_back(cx, Concept::named(y));
    if (space.bottom_rhs && cl.subsumes(cx, Concept::bottom())) out.emplace_back(cx, Concept::bottom());
  }
  for (const auto& q : queries)
    if (cl.subsumes(q, Concept::bottom())) out.emplace_back(q, Concept::bottom());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> bot_module(const std::vector<Gci>& tbox, const std::set<std::string>& concepts,
                                    const std::set<std::string>& roles) {
  std::set<std::string> sig_c = concepts;
  std::set<std::string> sig_r = roles;
  std::vector<bool> in(tbox.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < tbox.size(); ++i) {
      if (in[i] || tbox[i].rhs.is_top()) continue;
      if (is_local(tbox[i].lhs, sig_c, sig_r)) continue;
      in[i] = true;
      changed = true;
      collect_concept_names(tbox[i].lhs, sig_c);
      collect_concept_names(tbox[i].rhs, sig_c);
      collect_role_names(tbox[i].lhs, sig_r);
      collect_role_names(tbox[i].rhs, sig_r);
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < tbox.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

}  // namespace onr
