#include "ontorepair/repair_ops.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>

namespace onr {

std::string to_string(FilterTag t) {
  switch (t) {
    case FilterTag::Tautology: return "tautology";
    case FilterTag::Excluded: return "excluded";
    case FilterTag::OracleFalse: return "oracle-false";
    case FilterTag::Redundant: return "redundant";
    case FilterTag::Dominated: return "dominated";
    case FilterTag::TieBreak: return "tie-break";
    case FilterTag::Kept: return "kept";
  }
  return "?";
}

std::string to_string(RemoveMode m) {
  switch (m) {
    case RemoveMode::None: return "r-none";
    case RemoveMode::One: return "r-one";
    case RemoveMode::All: return "r-all";
  }
  return "?";
}

std::string to_string(AddBackMode m) {
  switch (m) {
    case AddBackMode::None: return "ab-none";
    case AddBackMode::One: return "ab-one";
    case AddBackMode::All: return "ab-all";
  }
  return "?";
}

namespace {

using Dominates = std::function<bool(const Gci&, const Gci&)>;

// Shared tail of both operators: F1/F2, one oracle batch, F3, F4.
void select_candidates(CandidateResult& out, const std::vector<Gci>& grid, const QuestionContext& ctx,
                       const std::vector<Gci>& excluded,
                       const std::function<bool(const Gci&)>& redundant, const Dominates& dominates,
                       const OntologyNetwork* net, OracleSession& oracle) {
  out.grid_size = grid.size();
  const std::set<Gci> excl(excluded.begin(), excluded.end());
  std::vector<Gci> ask;
  for (const auto& c : grid) {
    if (c.is_tautology())
      out.log.push_back({c, FilterTag::Tautology});
    else if (excl.count(c))
      out.log.push_back({c, FilterTag::Excluded});
    else
      ask.push_back(c);
  }
  const auto verdicts = oracle.ask_all(ask, ctx);
  std::vector<Gci> survivors;
  for (std::size_t i = 0; i < ask.size(); ++i) {
    if (!verdicts[i])
      out.log.push_back({ask[i], FilterTag::OracleFalse});
    else if (redundant(ask[i]))
      out.log.push_back({ask[i], FilterTag::Redundant});
    else
      survivors.push_back(ask[i]);
  }
  const std::size_t n = survivors.size();
  std::vector<std::vector<char>> dom(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dom[i][j] = i == j || dominates(survivors[i], survivors[j]);
  auto same_ont = [&](const Gci& g) {
    return net && g.lhs.is_named() && g.rhs.is_named() && net->same_ontology(g.lhs.name(), g.rhs.name());
  };
  for (std::size_t j = 0; j < n; ++j) {
    bool strictly = false;
    for (std::size_t i = 0; i < n && !strictly; ++i) strictly = dom[i][j] && !dom[j][i];
    if (strictly) {
      out.log.push_back({survivors[j], FilterTag::Dominated});
      continue;
    }
    std::vector<Gci> eq;
    for (std::size_t i = 0; i < n; ++i)
      if (dom[i][j] && dom[j][i]) eq.push_back(survivors[i]);
    std::vector<Gci> local;
    for (const auto& g : eq)
      if (same_ont(g)) local.push_back(g);
    bool keep = false;
    if (!local.empty())
      keep = same_ont(survivors[j]);
    else
      keep = survivors[j] == *std::min_element(eq.begin(), eq.end());
    if (keep) {
      out.kept.push_back(survivors[j]);
      out.log.push_back({survivors[j], FilterTag::Kept});
    } else {
      out.log.push_back({survivors[j], FilterTag::TieBreak});
    }
  }
  std::sort(out.kept.begin(), out.kept.end());
}

PaneData pane_of(const std::set<std::string>& sub, const std::set<std::string>& sup, const Classifier& c) {
  PaneData p{{sub.begin(), sub.end()}, {sup.begin(), sup.end()}, {}};
  std::set<std::string> all = sub;
  all.insert(sup.begin(), sup.end());
  for (const auto& x : all)
    for (const auto& y : all)
      if (x != y && c.subsumes_named(x, y)) p.edges.emplace_back(x, y);
  return p;
}

std::vector<Gci> grid_of(const std::set<std::string>& lhs, const std::set<std::string>& rhs) {
  std::vector<Gci> grid;
  for (const auto& x : lhs)
    for (const auto& y : rhs) grid.emplace_back(Concept::named(x), Concept::named(y));
  return grid;
}

}  // namespace

CandidateResult weakened_axiom_set(const WeakenInput& in, OracleSession& oracle) {
  CandidateResult out;
  const Classifier h(in.scope, Semantics::Positive, {in.wrong.lhs, in.wrong.rhs});
  out.sub = h.sub_names(in.wrong.lhs, in.candidates);
  out.sup = h.sup_names(in.wrong.rhs, in.candidates);
  const Classifier base(in.redundancy_base, Semantics::Positive);
  std::vector<Gci> excluded = in.excluded;
  excluded.push_back(in.wrong);
  select_candidates(
      out, grid_of(out.sub, out.sup), {Phase::Weaken, in.wrong, "sb⊑sp", pane_of(out.sub, out.sup, h)}, excluded,
      [&](const Gci& c) { return base.entails(c); },
      // c2 is at least as strong as c1 when c1.lhs ⊑ c2.lhs and c2.rhs ⊑ c1.rhs.
      [&](const Gci& c2, const Gci& c1) { return h.subsumes(c1.lhs, c2.lhs) && h.subsumes(c2.rhs, c1.rhs); },
      in.network, oracle);
  return out;
}

CandidateResult completed_axiom_set(const CompleteInput& in, OracleSession& oracle) {
  CandidateResult out;
  const Classifier s(in.scope, Semantics::Positive, {in.weakened.lhs, in.weakened.rhs});
  out.sup = s.sup_names(in.weakened.lhs, in.candidates);
  out.sub = s.sub_names(in.weakened.rhs, in.candidates);
  std::map<Gci, std::unique_ptr<Classifier>> with;
  auto extended = [&](const Gci& c) -> const Classifier& {
    auto& slot = with[c];
    if (!slot) {
      auto tbox = in.dominance_base;
      tbox.push_back(c);
      slot = std::make_unique<Classifier>(tbox, Semantics::Positive);
    }
    return *slot;
  };
  select_candidates(
      out, grid_of(out.sup, out.sub), {Phase::Complete, in.weakened, "sp⊑sb", pane_of(out.sub, out.sup, s)},
      in.excluded,
      [&](const Gci& c) { return c != in.weakened && s.entails(c); },
      [&](const Gci& c2, const Gci& c1) { return extended(c2).entails(c1); }, in.network, oracle);
  return out;
}

namespace {

std::vector<AxiomId> selected(const std::vector<AxiomId>& removal, bool all, std::optional<AxiomId> current) {
  if (all) return removal;
  if (!current) throw UnknownAxiomId("one-at-a-time mode needs the current axiom");
  if (std::find(removal.begin(), removal.end(), *current) == removal.end())
    throw UnknownAxiomId("axiom #" + std::to_string(*current) + " is not in the removal set");
  return {*current};
}

}  // namespace

OntologyNetwork apply_removal(const OntologyNetwork& snapshot, const std::vector<AxiomId>& removal, RemoveMode mode,
                              std::optional<AxiomId> current) {
  if (mode == RemoveMode::None) return snapshot;
  const auto ids = selected(removal, mode == RemoveMode::All, current);
  for (AxiomId id : ids) {
    const auto* a = snapshot.find(id);
    if (a && !a->prov.asserted()) throw UnknownAxiomId("axiom #" + std::to_string(id) + " is not asserted");
  }
  return snapshot.without({ids.begin(), ids.end()});
}

OntologyNetwork apply_add_back(const OntologyNetwork& snapshot, const OntologyNetwork& original,
                               const std::vector<AxiomId>& removal, AddBackMode mode,
                               std::optional<AxiomId> current) {
  if (mode == AddBackMode::None) return snapshot;
  std::vector<NetworkAxiom> back;
  for (AxiomId id : selected(removal, mode == AddBackMode::All, current)) {
    const auto* a = original.find(id);
    if (!a) throw UnknownAxiomId("axiom #" + std::to_string(id) + " is not in the original network");
    back.push_back(*a);
  }
  return snapshot.with_restored(back);
}

}  // namespace onr
