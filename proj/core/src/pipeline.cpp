#include "ontorepair/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>

namespace onr {

std::string to_string(SelectMode m) { return m == SelectMode::One ? "s-one" : "s-all"; }

std::string to_string(DecideMode m) {
  switch (m) {
    case DecideMode::AllValidate: return "d-all-v";
    case DecideMode::OneValidate: return "d-one-v";
    case DecideMode::ValidateOne: return "d-v-one";
  }
  return "?";
}

std::string to_string(BatchMode m) { return m == BatchMode::One ? "one" : "all"; }

std::string to_string(UpdateMode m) {
  switch (m) {
    case UpdateMode::Now: return "u-now";
    case UpdateMode::EndOne: return "u-end_one";
    case UpdateMode::EndAll: return "u-end_all";
  }
  return "?";
}

std::string to_string(OntologyLevel l) {
  switch (l) {
    case OntologyLevel::O: return "o";
    case OntologyLevel::MO: return "mo";
    case OntologyLevel::ON: return "on";
  }
  return "?";
}

std::string to_string(AlignmentLevel l) {
  switch (l) {
    case AlignmentLevel::M: return "m";
    case AlignmentLevel::MM: return "mm";
    case AlignmentLevel::ON: return "on";
  }
  return "?";
}

std::string to_string(Order o) {
  switch (o) {
    case Order::Greater: return "greater";
    case Order::Less: return "less";
    case Order::Equal: return "equal";
    case Order::Incomparable: return "incomparable";
  }
  return "?";
}

RepairPlan RepairPlan::algorithm1() { return {}; }

std::vector<std::string> RepairPlan::problems() const {
  std::vector<std::string> out;
  if (remove == RemoveMode::None && add_back != AddBackMode::None)
    out.push_back("r-none removes nothing, so add-back must be ab-none");
  if (max_justifications == 0) out.push_back("max_justifications must be at least 1");
  return out;
}

void RepairPlan::validate() const {
  auto p = problems();
  if (p.empty()) return;
  std::string msg = "invalid plan:";
  for (const auto& s : p) msg += " " + s + ";";
  throw InvalidPlan(msg);
}

std::string RepairPlan::label() const {
  std::string s = to_string(select) + "," + to_string(decide) + "/" + to_string(remove) + "," + to_string(add_back) +
                  "/w-" + to_string(weaken) + "," + to_string(weaken_update) + "/c-" + to_string(complete) + "," +
                  to_string(complete_update) + "/kb-ont:" + to_string(kb_ontology);
  for (const auto& [i, l] : kb_ontology_for) s += ",o" + std::to_string(i) + ":" + to_string(l);
  s += "/kb-map:" + to_string(kb_alignment);
  for (const auto& [p, l] : kb_alignment_for)
    s += ",m" + std::to_string(p.first) + "-" + std::to_string(p.second) + ":" + to_string(l);
  std::string as = to_string(add_scope);
  std::transform(as.begin(), as.end(), as.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  s += "/as:" + as;
  if (debug_kb == DebugKb::Home) s += "/debug:home";
  if (strict_removal) s += "/strict-removal";
  return s;
}

OntologyLevel RepairPlan::level_for(int ontology) const {
  auto it = kb_ontology_for.find(ontology);
  return it == kb_ontology_for.end() ? kb_ontology : it->second;
}

AlignmentLevel RepairPlan::level_for(AlignmentKey p) const {
  auto it = kb_alignment_for.find(p);
  return it == kb_alignment_for.end() ? kb_alignment : it->second;
}

KbScope repair_scope(const RepairPlan& plan, const Provenance& prov) {
  if (prov.first < 0) return KbScope::on();
  if (!prov.in_alignment()) {
    switch (plan.level_for(prov.first)) {
      case OntologyLevel::O: return KbScope::o(prov.first);
      case OntologyLevel::MO: return KbScope::mo(prov.first);
      case OntologyLevel::ON: return KbScope::on();
    }
  }
  const AlignmentKey key{prov.first, prov.second};
  switch (plan.level_for(key)) {
    case AlignmentLevel::M: return KbScope::m(key);
    case AlignmentLevel::MM: return KbScope::mm(key);
    case AlignmentLevel::ON: return KbScope::on();
  }
  return KbScope::on();
}

namespace {

std::string scope_name(const KbScope& s) {
  switch (s.level) {
    case KbScope::Level::ON: return "ON";
    case KbScope::Level::O:
    case KbScope::Level::MO: return to_string(s.level) + "(" + std::to_string(s.focus) + ")";
    case KbScope::Level::M:
    case KbScope::Level::MM:
      return to_string(s.level) + "(" + std::to_string(s.pair.first) + "," + std::to_string(s.pair.second) + ")";
  }
  return "?";
}

std::vector<std::string> strs(const std::vector<Gci>& gs) {
  std::vector<std::string> out;
  for (const auto& g : gs) out.push_back(g.str());
  return out;
}

void append_unique(std::vector<Gci>& into, const std::vector<Gci>& more) {
  for (const auto& g : more)
    if (std::find(into.begin(), into.end(), g) == into.end()) into.push_back(g);
}

std::vector<Gci> admitted(const std::vector<Gci>& gs, const OntologyNetwork& net, const KbScope& scope) {
  std::vector<Gci> out;
  for (const auto& g : gs)
    if (scope_admits(net, scope, g)) out.push_back(g);
  return out;
}

bool names_from_axioms(const KbScope& s) { return s.level == KbScope::Level::M || s.level == KbScope::Level::MM; }

// Asserted axioms the debugger may use for ψ under the plan.
std::vector<NetworkAxiom> debug_scope(const OntologyNetwork& net, const RepairPlan& plan, const Gci& psi) {
  if (plan.debug_kb == DebugKb::ON) return net.asserted();
  const Home h = net.home_of(psi);
  if (h.kind == Home::Kind::Ontology) return scoped_kb(net, KbScope::o(h.first)).axioms;
  if (h.kind == Home::Kind::Alignment && net.alignments().count({h.first, h.second}))
    return scoped_kb(net, KbScope::m({h.first, h.second})).axioms;
  return net.asserted();
}

std::vector<Gci> gcis_of(const std::vector<NetworkAxiom>& axs) {
  std::vector<Gci> out;
  for (const auto& a : axs) out.push_back(a.gci);
  return out;
}

}  // namespace

RepairResult run_repair(const OntologyNetwork& net, const std::vector<Gci>& wrong, const RepairPlan& plan,
                        OracleSession& oracle, const RunOptions& options) {
  if (options.check_plan) plan.validate();
  RepairResult res;
  res.repaired = net;
  Trace local;
  Trace& trace = options.trace ? *options.trace : local;
  trace.add("plan", plan.label(), {});
  if (wrong.empty()) {
    res.trace = trace;
    res.stats = oracle.stats();
    return res;
  }

  // Debugging.
  {
    const auto v = oracle.ask_all(wrong, {Phase::Debug, std::nullopt, "wrong", std::nullopt});
    for (std::size_t i = 0; i < wrong.size(); ++i)
      if (v[i]) throw OracleRejectsW("oracle validates wrong axiom " + wrong[i].str() + " as correct");
  }
  DebugConfig dc{plan.select, plan.decide, plan.max_justifications};
  std::set<AxiomId> removal;
  {
    // Group wrong axioms by debugging scope; with the ON scope there is one group.
    std::vector<std::pair<std::vector<NetworkAxiom>, std::vector<Gci>>> groups;
    for (const auto& psi : wrong) {
      auto scope = debug_scope(net, plan, psi);
      if (!entails(gcis_of(scope), psi)) throw NotEntailedWrongAxiom("wrong axiom " + psi.str() + " is not entailed");
      auto same = [&](const auto& g) {
        if (g.first.size() != scope.size()) return false;
        for (std::size_t i = 0; i < scope.size(); ++i)
          if (g.first[i].id != scope[i].id) return false;
        return true;
      };
      auto it = std::find_if(groups.begin(), groups.end(), same);
      if (it == groups.end())
        groups.push_back({std::move(scope), {psi}});
      else
        it->second.push_back(psi);
    }
    for (const auto& [scope, ws] : groups) {
      auto d = compute_removal_set(scope, ws, dc, oracle, &trace);
      removal.insert(d.begin(), d.end());
    }
  }
  std::vector<AxiomId> D(removal.begin(), removal.end());
  std::vector<Gci> d_gcis;
  for (AxiomId id : D) d_gcis.push_back(net.find(id)->gci);
  std::vector<Gci> excluded = d_gcis;
  append_unique(excluded, wrong);

  const MaterializedView mat(net, SccSpace::positive());
  const auto asserted = net.asserted();

  // Weakening, one removed axiom at a time in id order.
  OntologyNetwork current = apply_removal(net, D, plan.remove == RemoveMode::All ? RemoveMode::All : RemoveMode::None);
  std::vector<std::set<AxiomId>> removed_during;  // R_k per step
  for (AxiomId d : D) {
    const NetworkAxiom& wrong_ax = *net.find(d);
    if (plan.remove == RemoveMode::One) current = apply_removal(current, D, RemoveMode::One, d);
    std::set<AxiomId> r_k;
    for (AxiomId x : D)
      if (!current.find(x)) r_k.insert(x);
    removed_during.push_back(r_k);

    const KbScope scope = repair_scope(plan, wrong_ax.prov);
    const ScopedKb kb = scoped_kb(current, scope, &mat);
    std::vector<Gci> updates;
    if (plan.weaken == BatchMode::One && plan.weaken_update != UpdateMode::EndAll)
      for (const auto& s : res.weakening) append_unique(updates, admitted(s.result.kept, net, scope));

    WeakenInput in;
    in.wrong = wrong_ax.gci;
    in.scope = kb.gcis();
    in.scope.insert(in.scope.end(), updates.begin(), updates.end());
    in.candidates = kb.candidates;
    if (names_from_axioms(scope))
      for (const auto& g : updates) {
        auto n = concept_names(g);
        in.candidates.insert(n.begin(), n.end());
      }
    in.excluded = excluded;
    for (const auto& a : asserted)
      if (!r_k.count(a.id) && a.gci != wrong_ax.gci) in.redundancy_base.push_back(a.gci);
    in.redundancy_base.insert(in.redundancy_base.end(), updates.begin(), updates.end());
    in.network = &net;

    WeakenStep step{d, wrong_ax.gci, scope, weakened_axiom_set(in, oracle)};
    trace.add("weaken", wrong_ax.gci.str(), strs(step.result.kept),
              scope_name(scope) + " sub=" + std::to_string(step.result.sub.size()) +
                  " sup=" + std::to_string(step.result.sup.size()) +
                  " grid=" + std::to_string(step.result.grid_size));
    res.weakening.push_back(std::move(step));

    if (plan.remove == RemoveMode::One && plan.add_back != AddBackMode::None)
      current = apply_add_back(current, net, D, plan.add_back, d);
  }

  // Completing.
  const OntologyNetwork without_d = net.without(removal);
  for (std::size_t k = 0; k < res.weakening.size(); ++k) {
    const auto& ws = res.weakening[k];
    const NetworkAxiom& wrong_ax = *net.find(ws.source);
    const KbScope scope = ws.scope;
    const OntologyNetwork* base_net = &without_d;
    std::unique_ptr<OntologyNetwork> strict;
    if (plan.strict_removal) {
      strict = std::make_unique<OntologyNetwork>(net.without(removed_during[k]));
      base_net = strict.get();
    }
    const ScopedKb kb = scoped_kb(*base_net, scope, &mat);
    for (const auto& w : ws.result.kept) {
      std::vector<Gci> updates;
      if (plan.complete == BatchMode::One && plan.complete_update == UpdateMode::Now) {
        for (const auto& c : res.completing) append_unique(updates, admitted(c.result.kept, net, scope));
      } else if (plan.complete == BatchMode::One && plan.complete_update == UpdateMode::EndOne) {
        for (const auto& c : res.completing)
          if (c.source != ws.source) append_unique(updates, admitted(c.result.kept, net, scope));
      }
      CompleteInput in;
      in.weakened = w;
      in.scope = kb.gcis();
      in.scope.insert(in.scope.end(), updates.begin(), updates.end());
      in.candidates = kb.candidates;
      if (names_from_axioms(scope))
        for (const auto& g : updates) {
          auto n = concept_names(g);
          in.candidates.insert(n.begin(), n.end());
        }
      in.excluded = excluded;
      in.dominance_base = kb.asserted_gcis();
      in.dominance_base.insert(in.dominance_base.end(), updates.begin(), updates.end());
      in.network = &net;
      CompleteStep step{ws.source, w, scope, completed_axiom_set(in, oracle)};
      trace.add("complete", w.str(), strs(step.result.kept),
                scope_name(scope) + " for " + wrong_ax.gci.str() + " sup=" +
                    std::to_string(step.result.sup.size()) + " sub=" + std::to_string(step.result.sub.size()) +
                    " grid=" + std::to_string(step.result.grid_size));
      res.completing.push_back(std::move(step));
    }
  }

  std::vector<Gci> completed;
  for (const auto& c : res.completing) append_unique(completed, c.result.kept);
  std::sort(completed.begin(), completed.end());
  res.added = filter_add_set(completed, plan.add_scope, net);
  trace.add("add-set", to_string(plan.add_scope), strs(res.added));

  // Every wrong axiom must be underivable afterwards; when the added axioms
  // open a new derivation, its remaining false asserted axioms join D.
  const std::string label = plan.label();
  auto rebuild = [&] { return net.without(removal).with_added(res.added, label); };
  OntologyNetwork repaired = rebuild();
  for (bool again = true; again;) {
    again = false;
    for (const auto& psi : wrong) {
      if (!entails(repaired.assemble(), psi)) continue;
      std::set<AxiomId> ids;
      for (const auto& j : all_justifications(repaired.axioms(), psi, plan.max_justifications))
        for (AxiomId id : j.axioms)
          if (const auto* a = net.find(id); a && a->prov.asserted()) ids.insert(id);
      std::vector<AxiomId> cand(ids.begin(), ids.end());
      std::vector<Gci> gs;
      for (AxiomId id : cand) gs.push_back(net.find(id)->gci);
      const auto v = oracle.ask_all(gs, {Phase::Debug, psi, "justification", std::nullopt});
      std::vector<std::string> found;
      for (std::size_t i = 0; i < cand.size(); ++i)
        if (!v[i]) {
          removal.insert(cand[i]);
          found.push_back(describe(*net.find(cand[i])));
        }
      if (found.empty())
        throw NoFalseHittingSet("added axioms re-derive " + psi.str() + " from axioms the oracle accepts");
      trace.add("closing", psi.str(), found);
      repaired = rebuild();
      again = true;
    }
  }

  res.removed.assign(removal.begin(), removal.end());
  for (AxiomId id : res.removed) res.removed_axioms.push_back(net.find(id)->gci);
  if (!plan.finalize.empty()) repaired = finalize_materialize(repaired, plan.finalize, res.removed_axioms);
  res.repaired = std::move(repaired);
  res.trace = trace;
  res.stats = oracle.stats();
  return res;
}

std::vector<Gci> unsatisfiability_targets(const OntologyNetwork& network) {
  std::vector<Gci> out;
  for (const auto& x : unsatisfiable_concepts(network.assemble()))
    out.emplace_back(Concept::named(x), Concept::bottom());
  return out;
}

RepairResult run_repair(const OntologyNetwork& network, const std::vector<Gci>& wrong, const RepairPlan& plan,
                        Oracle& oracle, const RunOptions& options) {
  OracleSession session(oracle);
  return run_repair(network, wrong, plan, session, options);
}

VerifyReport verify_repair(const OntologyNetwork& network, const std::vector<Gci>& wrong,
                           const std::vector<Gci>& added, const std::vector<AxiomId>& removed, Oracle& oracle) {
  VerifyReport rep;
  auto fail = [](ConditionReport& c, std::string w) {
    c.ok = false;
    c.witnesses.push_back(std::move(w));
  };
  for (const auto& a : added) {
    auto v = oracle.verdict(a);
    if (!v)
      fail(rep.added_true, a.str() + " unanswered");
    else if (!*v)
      fail(rep.added_true, a.str());
  }
  std::set<AxiomId> ids;
  for (AxiomId id : removed) {
    const auto* a = network.find(id);
    if (!a || !a->prov.asserted()) {
      fail(rep.removed_asserted, "#" + std::to_string(id));
      continue;
    }
    ids.insert(id);
    auto v = oracle.verdict(a->gci);
    if (!v)
      fail(rep.removed_false, describe(*a) + " unanswered");
    else if (*v)
      fail(rep.removed_false, describe(*a));
  }
  auto tbox = network.without(ids).assemble();
  tbox.insert(tbox.end(), added.begin(), added.end());
  const Classifier c(tbox);
  for (const auto& psi : wrong)
    if (c.entails(psi)) fail(rep.wrong_not_entailed, psi.str());
  return rep;
}

VerifyReport verify_repair(const OntologyNetwork& network, const std::vector<Gci>& wrong, const RepairResult& result,
                           Oracle& oracle) {
  return verify_repair(network, wrong, result.added, result.removed, oracle);
}

ProbeSet ProbeSet::over(const std::set<std::string>& names) {
  ProbeSet p;
  for (const auto& x : names) {
    for (const auto& y : names)
      if (x != y) p.axioms.push_back(atomic_gci(x, y));
    p.axioms.push_back(Gci(Concept::named(x), Concept::bottom()));
  }
  return p;
}

ProbeSet& ProbeSet::extend(const std::vector<Gci>& extra) {
  append_unique(axioms, extra);
  return *this;
}

namespace {

Order order_of(bool first_has_more, bool second_has_more) {
  if (first_has_more && second_has_more) return Order::Incomparable;
  if (first_has_more) return Order::Greater;
  if (second_has_more) return Order::Less;
  return Order::Equal;
}

}  // namespace

Comparison compare_tboxes(const std::vector<Gci>& t1, const std::vector<Gci>& t2, Oracle& oracle,
                          const ProbeSet& probe) {
  Comparison cmp;
  const Classifier c1(t1, Semantics::Full, {});
  const Classifier c2(t2, Semantics::Full, {});
  for (const auto& psi : probe.axioms) {
    const bool e1 = c1.entails(psi);
    const bool e2 = c2.entails(psi);
    if (e1 == e2) continue;
    const auto v = oracle.verdict(psi);
    if (!v) continue;  // unanswered probes do not order the TBoxes
    auto& bucket = *v ? (e1 ? cmp.true_only_first : cmp.true_only_second)
                      : (e1 ? cmp.false_only_first : cmp.false_only_second);
    bucket.push_back(psi);
  }
  cmp.completeness = order_of(!cmp.true_only_first.empty(), !cmp.true_only_second.empty());
  cmp.incorrectness = order_of(!cmp.false_only_first.empty(), !cmp.false_only_second.empty());
  return cmp;
}

std::vector<HasseEdge> hasse_edges(const RepairPlan& base) {
  using K = HasseEdge::Kind;
  std::vector<HasseEdge> out;
  auto with = [&](const std::function<void(RepairPlan&)>& f) {
    RepairPlan p = base;
    f(p);
    return p;
  };
  auto edge = [&](std::string family, std::string name, RepairPlan lo, RepairPlan up, K kind, bool dbg = false) {
    out.push_back({std::move(family), std::move(name), std::move(lo), std::move(up), kind, dbg});
  };
  auto dbg = [&](SelectMode s, DecideMode d) {
    return with([&](RepairPlan& p) {
      p.select = s;
      p.decide = d;
    });
  };
  edge("debug", "s-one,d-all-v = s-all,d-all-v", dbg(SelectMode::One, DecideMode::AllValidate),
       dbg(SelectMode::All, DecideMode::AllValidate), K::Equal, true);
  for (auto s : {SelectMode::One, SelectMode::All})
    for (auto d : {DecideMode::OneValidate, DecideMode::ValidateOne})
      edge("debug", "s-all,d-all-v <= " + to_string(s) + "," + to_string(d),
           dbg(SelectMode::All, DecideMode::AllValidate), dbg(s, d), K::Covers, true);

  auto rem = [&](RemoveMode r, AddBackMode ab) {
    return with([&](RepairPlan& p) {
      p.remove = r;
      p.add_back = ab;
    });
  };
  edge("remove", "r-all,ab-none <= r-one,ab-none", rem(RemoveMode::All, AddBackMode::None),
       rem(RemoveMode::One, AddBackMode::None), K::Covers);
  edge("remove", "r-one,ab-none <= r-one,ab-one", rem(RemoveMode::One, AddBackMode::None),
       rem(RemoveMode::One, AddBackMode::One), K::Covers);
  edge("remove", "r-one,ab-one <= r-none,ab-none", rem(RemoveMode::One, AddBackMode::One),
       rem(RemoveMode::None, AddBackMode::None), K::Covers);
  edge("remove", "r-one,ab-one = r-one,ab-all", rem(RemoveMode::One, AddBackMode::One),
       rem(RemoveMode::One, AddBackMode::All), K::Equal);
  edge("remove", "r-all,ab-none = r-all,ab-one", rem(RemoveMode::All, AddBackMode::None),
       rem(RemoveMode::All, AddBackMode::One), K::Equal);
  edge("remove", "r-all,ab-none = r-all,ab-all", rem(RemoveMode::All, AddBackMode::None),
       rem(RemoveMode::All, AddBackMode::All), K::Equal);
  edge("remove", "r-none,ab-none = r-none,ab-one", rem(RemoveMode::None, AddBackMode::None),
       rem(RemoveMode::None, AddBackMode::One), K::Equal);
  edge("remove", "r-none,ab-none = r-none,ab-all", rem(RemoveMode::None, AddBackMode::None),
       rem(RemoveMode::None, AddBackMode::All), K::Equal);

  auto wk = [&](BatchMode b, UpdateMode u) {
    return with([&](RepairPlan& p) {
      p.weaken = b;
      p.weaken_update = u;
    });
  };
  edge("weaken", "w-one,u-now = w-one,u-end_one", wk(BatchMode::One, UpdateMode::Now),
       wk(BatchMode::One, UpdateMode::EndOne), K::Equal);
  edge("weaken", "w-all,u-now = w-all,u-end_one", wk(BatchMode::All, UpdateMode::Now),
       wk(BatchMode::All, UpdateMode::EndOne), K::Equal);
  edge("weaken", "w-all,u-now = w-all,u-end_all", wk(BatchMode::All, UpdateMode::Now),
       wk(BatchMode::All, UpdateMode::EndAll), K::Equal);
  edge("weaken", "w-all,u-end_all = w-one,u-end_all", wk(BatchMode::All, UpdateMode::EndAll),
       wk(BatchMode::One, UpdateMode::EndAll), K::Equal);
  edge("weaken", "w-one,u-end_all <= w-one,u-now", wk(BatchMode::One, UpdateMode::EndAll),
       wk(BatchMode::One, UpdateMode::Now), K::Covers);

  auto cp = [&](BatchMode b, UpdateMode u) {
    return with([&](RepairPlan& p) {
      p.complete = b;
      p.complete_update = u;
    });
  };
  edge("complete", "c-one,u-end_all = c-all,u-end_all", cp(BatchMode::One, UpdateMode::EndAll),
       cp(BatchMode::All, UpdateMode::EndAll), K::Equal);
  edge("complete", "c-all,u-end_all = c-all,u-end_one", cp(BatchMode::All, UpdateMode::EndAll),
       cp(BatchMode::All, UpdateMode::EndOne), K::Equal);
  edge("complete", "c-all,u-end_all = c-all,u-now", cp(BatchMode::All, UpdateMode::EndAll),
       cp(BatchMode::All, UpdateMode::Now), K::Equal);
  edge("complete", "c-one,u-end_all <= c-one,u-end_one", cp(BatchMode::One, UpdateMode::EndAll),
       cp(BatchMode::One, UpdateMode::EndOne), K::Covers);
  edge("complete", "c-one,u-end_one <= c-one,u-now", cp(BatchMode::One, UpdateMode::EndOne),
       cp(BatchMode::One, UpdateMode::Now), K::Covers);
  edge("complete", "c-one,u-end_all <= c-one,u-now", cp(BatchMode::One, UpdateMode::EndAll),
       cp(BatchMode::One, UpdateMode::Now), K::Covers);

  auto ko = [&](OntologyLevel l) { return with([&](RepairPlan& p) { p.kb_ontology = l; }); };
  edge("kb-ontology", "o <= mo", ko(OntologyLevel::O), ko(OntologyLevel::MO), K::Covers);
  edge("kb-ontology", "mo <= on", ko(OntologyLevel::MO), ko(OntologyLevel::ON), K::Covers);
  auto km = [&](AlignmentLevel l) { return with([&](RepairPlan& p) { p.kb_alignment = l; }); };
  edge("kb-alignment", "m <= mm", km(AlignmentLevel::M), km(AlignmentLevel::MM), K::Covers);
  edge("kb-alignment", "mm <= on", km(AlignmentLevel::MM), km(AlignmentLevel::ON), K::Covers);

  auto as = [&](AddScope s) { return with([&](RepairPlan& p) { p.add_scope = s; }); };
  edge("add-set", "as-o <= as-on", as(AddScope::O), as(AddScope::ON), K::Covers);
  edge("add-set", "as-m <= as-on", as(AddScope::M), as(AddScope::ON), K::Covers);
  return out;
}

std::size_t HasseReport::violations() const {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return !o.ok; }));
}

namespace {

class GoldView : public Oracle {
 public:
  explicit GoldView(const GoldOracle& g) : gold_(&g) {}
  std::optional<bool> verdict(const Gci& g) override { return gold_->gold_verdict(g); }

 private:
  const GoldOracle* gold_;
};

struct Run {
  std::optional<RepairResult> result;
  std::string error;
};

}  // namespace

HasseReport check_hasse_orders(const OntologyNetwork& network, const std::vector<Gci>& wrong, const GoldOracle& oracle,
                               const ProbeSet& probe, const std::vector<HasseEdge>& edges) {
  GoldView view(oracle);
  std::map<std::string, Run> runs;
  auto run = [&](const RepairPlan& p) -> const Run& {
    auto [it, fresh] = runs.try_emplace(p.label());
    if (fresh) {
      try {
        it->second.result = run_repair(network, wrong, p, view, RunOptions{false});
      } catch (const std::exception& e) {
        it->second.error = e.what();
      }
    }
    return it->second;
  };
  HasseReport rep;
  for (const auto& e : edges) {
    EdgeOutcome o;
    o.edge = &e;
    const Run& lo = run(e.lower);
    const Run& up = run(e.upper);
    if (!lo.result || !up.result) {
      o.ok = false;
      o.detail = "run failed: " + lo.error + up.error;
      rep.outcomes.push_back(std::move(o));
      continue;
    }
    if (e.kind == HasseEdge::Kind::Equal) {
      o.ok = lo.result->removed == up.result->removed && (e.debug_only || lo.result->added == up.result->added);
      if (!o.ok) o.detail = "results differ";
    } else {
      std::vector<Gci> t_lo, t_up;
      if (e.debug_only) {
        t_lo = network.without({lo.result->removed.begin(), lo.result->removed.end()}).assemble();
        t_up = network.without({up.result->removed.begin(), up.result->removed.end()}).assemble();
      } else {
        t_lo = lo.result->repaired.assemble();
        t_up = up.result->repaired.assemble();
      }
      o.comparison = compare_tboxes(t_up, t_lo, view, probe);
      o.ok = o.comparison.first_covers_second();
      if (!o.ok) {
        o.detail = "lower derives";
        for (const auto& g : o.comparison.true_only_second) o.detail += " " + g.str() + "(true)";
        for (const auto& g : o.comparison.false_only_second) o.detail += " " + g.str() + "(false)";
      }
    }
    rep.outcomes.push_back(std::move(o));
  }
  return rep;
}

}  // namespace onr
