#include "ontorepair/debug.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace onr {

namespace {

std::vector<Gci> gcis_of(const std::vector<NetworkAxiom>& axs) {
  std::vector<Gci> out;
  out.reserve(axs.size());
  for (const auto& a : axs) out.push_back(a.gci);
  return out;
}

bool entails_subset(const std::vector<NetworkAxiom>& axs, const Gci& target) {
  return entails(gcis_of(axs), target);
}

std::vector<NetworkAxiom> module_for(const std::vector<NetworkAxiom>& scope, const Gci& target) {
  std::vector<NetworkAxiom> sorted = scope;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  std::set<std::string> cs;
  std::set<std::string> rs;
  collect_concept_names(target.lhs, cs);
  collect_concept_names(target.rhs, cs);
  collect_role_names(target.lhs, rs);
  collect_role_names(target.rhs, rs);
  std::vector<NetworkAxiom> out;
  for (std::size_t i : bot_module(gcis_of(sorted), cs, rs)) out.push_back(sorted[i]);
  return out;
}

// Linear shrink; `axs` must entail the target.
std::vector<AxiomId> shrink(std::vector<NetworkAxiom> axs, const Gci& target) {
  for (std::size_t i = 0; i < axs.size();) {
    std::vector<NetworkAxiom> rest = axs;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (entails_subset(rest, target))
      axs = std::move(rest);
    else
      ++i;
  }
  std::vector<AxiomId> ids;
  for (const auto& a : axs) ids.push_back(a.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool disjoint(const std::vector<AxiomId>& a, const std::vector<AxiomId>& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return true;
}

bool subset(const std::vector<AxiomId>& a, const std::vector<AxiomId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool hs_less(const std::vector<AxiomId>& a, const std::vector<AxiomId>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<std::string> describe_ids(const std::vector<AxiomId>& ids, const std::map<AxiomId, NetworkAxiom>& by_id) {
  std::vector<std::string> out;
  for (AxiomId id : ids) out.push_back(describe(by_id.at(id)));
  return out;
}

}  // namespace

std::string describe(const NetworkAxiom& a) { return "#" + std::to_string(a.id) + " " + a.gci.str(); }

Justification single_justification(const std::vector<NetworkAxiom>& scope, const Gci& target) {
  auto mod = module_for(scope, target);
  if (!entails_subset(mod, target)) throw NotEntailed("scope does not entail " + target.str());
  return {target, shrink(std::move(mod), target)};
}

std::vector<Justification> all_justifications(const std::vector<NetworkAxiom>& scope, const Gci& target,
                                              std::size_t cap) {
  auto mod = module_for(scope, target);
  if (!entails_subset(mod, target)) throw NotEntailed("scope does not entail " + target.str());
  std::vector<std::vector<AxiomId>> found;
  std::vector<std::vector<AxiomId>> closed;
  std::set<std::vector<AxiomId>> seen;
  std::deque<std::vector<AxiomId>> queue{{}};
  while (!queue.empty() && found.size() < std::max<std::size_t>(cap, 1)) {
    std::vector<AxiomId> path = std::move(queue.front());
    queue.pop_front();
    if (!seen.insert(path).second) continue;
    if (std::any_of(closed.begin(), closed.end(), [&](const auto& c) { return subset(c, path); })) continue;
    const std::vector<AxiomId>* just = nullptr;
    for (const auto& j : found)
      if (disjoint(j, path)) {
        just = &j;
        break;
      }
    if (!just) {
      std::vector<NetworkAxiom> rest;
      for (const auto& a : mod)
        if (!std::binary_search(path.begin(), path.end(), a.id)) rest.push_back(a);
      if (!entails_subset(rest, target)) {
        closed.push_back(path);
        continue;
      }
      found.push_back(shrink(std::move(rest), target));
      just = &found.back();
    }
    const std::vector<AxiomId> j = *just;
    for (AxiomId a : j) {
      std::vector<AxiomId> child = path;
      child.insert(std::upper_bound(child.begin(), child.end(), a), a);
      queue.push_back(std::move(child));
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<Justification> out;
  for (auto& f : found) out.push_back({target, std::move(f)});
  return out;
}

std::vector<std::vector<AxiomId>> hitting_sets(const std::vector<Justification>& justifications, std::size_t limit) {
  std::vector<std::vector<AxiomId>> current{{}};
  for (const auto& j : justifications) {
    std::vector<std::vector<AxiomId>> next;
    for (const auto& h : current) {
      if (!disjoint(h, j.axioms)) {
        next.push_back(h);
        continue;
      }
      for (AxiomId a : j.axioms) {
        auto g = h;
        g.insert(std::upper_bound(g.begin(), g.end(), a), a);
        next.push_back(std::move(g));
      }
    }
    std::sort(next.begin(), next.end(), hs_less);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<std::vector<AxiomId>> minimal;
    for (auto& h : next) {
      if (std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) { return subset(m, h); })) continue;
      minimal.push_back(std::move(h));
      if (minimal.size() >= limit) break;
    }
    current = std::move(minimal);
  }
  std::sort(current.begin(), current.end(), hs_less);
  return current;
}

std::vector<AxiomId> compute_removal_set(const std::vector<NetworkAxiom>& scope, const std::vector<Gci>& wrong,
                                         const DebugConfig& config, OracleSession& oracle, Trace* trace) {
  std::vector<NetworkAxiom> asserted;
  std::map<AxiomId, NetworkAxiom> by_id;
  for (const auto& a : scope)
    if (a.prov.asserted()) {
      asserted.push_back(a);
      by_id.emplace(a.id, a);
    }
  std::set<AxiomId> removal;
  std::set<AxiomId> known_false;

  auto verdicts = [&](const std::vector<AxiomId>& ids, const Gci& source) {
    std::vector<Gci> gs;
    for (AxiomId id : ids) gs.push_back(by_id.at(id).gci);
    return oracle.ask_all(gs, {Phase::Debug, source, "justification", std::nullopt});
  };
  auto is_known_true = [&](AxiomId id) {
    auto k = oracle.known(by_id.at(id).gci);
    return k && *k;
  };

  // One group of justifications at a time: all of W for S_all, one wrong
  // axiom for S_one.
  auto decide = [&](const std::vector<Justification>& js, const Gci& source) {
    std::set<AxiomId> all_ids;
    for (const auto& j : js) all_ids.insert(j.axioms.begin(), j.axioms.end());
    switch (config.decide) {
      case DecideMode::AllValidate: {
        std::vector<AxiomId> ids(all_ids.begin(), all_ids.end());
        auto v = verdicts(ids, source);
        for (std::size_t i = 0; i < ids.size(); ++i)
          if (!v[i]) removal.insert(ids[i]);
        for (const auto& j : js)
          if (std::none_of(j.axioms.begin(), j.axioms.end(), [&](AxiomId a) { return removal.count(a) > 0; }))
            throw NoFalseHittingSet("justification for " + source.str() + " has no wrong axiom");
        return;
      }
      case DecideMode::OneValidate: {
        std::vector<Justification> open;
        for (const auto& j : js)
          if (std::none_of(j.axioms.begin(), j.axioms.end(), [&](AxiomId a) { return removal.count(a) > 0; }))
            open.push_back(j);
        if (open.empty()) return;
        for (const auto& h : hitting_sets(open)) {
          if (std::any_of(h.begin(), h.end(), is_known_true)) continue;
          auto v = verdicts(h, source);
          if (std::none_of(v.begin(), v.end(), [](bool b) { return b; })) {
            removal.insert(h.begin(), h.end());
            if (trace) trace->add("hitting-set", source.str(), describe_ids(h, by_id));
            return;
          }
        }
        throw NoFalseHittingSet("every hitting set for " + source.str() + " contains a correct axiom");
      }
      case DecideMode::ValidateOne: {
        std::vector<Justification> hit_by_false;
        for (const auto& j : js) {
          std::vector<AxiomId> inter;
          for (AxiomId a : j.axioms)
            if (known_false.count(a)) inter.push_back(a);
          if (inter.empty()) {
            for (AxiomId a : j.axioms) {
              if (is_known_true(a)) continue;
              if (!verdicts({a}, source).front()) {
                known_false.insert(a);
                inter.push_back(a);
                break;
              }
            }
          }
          if (inter.empty()) throw NoFalseHittingSet("justification for " + source.str() + " has no wrong axiom");
          hit_by_false.push_back({j.target, inter});
        }
        auto hs = hitting_sets(hit_by_false);
        const auto& h = hs.front();
        removal.insert(h.begin(), h.end());
        if (trace) trace->add("hitting-set", source.str(), describe_ids(h, by_id));
        return;
      }
    }
  };

  std::vector<Justification> pooled;
  for (const auto& psi : wrong) {
    auto js = all_justifications(asserted, psi, config.max_justifications);
    if (trace)
      for (const auto& j : js) trace->add("justification", psi.str(), describe_ids(j.axioms, by_id));
    if (config.select == SelectMode::One)
      decide(js, psi);
    else
      pooled.insert(pooled.end(), js.begin(), js.end());
  }
  if (config.select == SelectMode::All && !pooled.empty()) decide(pooled, wrong.front());
  std::vector<AxiomId> out(removal.begin(), removal.end());
  if (trace) trace->add("removal-set", "D", describe_ids(out, by_id));
  return out;
}

}  // namespace onr
