#include "ontorepair/oracle.hpp"

#include <algorithm>
#include <cstdio>

namespace onr {

std::string to_string(Phase p) {
  switch (p) {
    case Phase::Debug: return "debug";
    case Phase::Weaken: return "weaken";
    case Phase::Complete: return "complete";
  }
  return "?";
}

std::string question_id(const Gci& g) {
  // FNV-1a over the functional syntax.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : g.functional()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "q%016llx", static_cast<unsigned long long>(h));
  return buf;
}

GoldOracle::GoldOracle(std::vector<Gci> gold) : gold_(std::move(gold)), classifier_(gold_) {}

std::optional<bool> ScriptedOracle::verdict(const Gci& g) {
  auto it = answers_.find(g);
  if (it == answers_.end()) return std::nullopt;
  return it->second;
}

void OracleSession::record(const Gci& g, bool v, Phase phase) {
  cache_.emplace(g, v);
  stats_.answers.emplace_back(g, v);
  ++stats_.asked;
  ++stats_.per_phase[phase];
}

std::optional<bool> OracleSession::known(const Gci& g) const {
  auto it = cache_.find(g);
  if (it == cache_.end()) return std::nullopt;
  return it->second;
}

bool OracleSession::ask(const Gci& g, const QuestionContext& ctx) { return ask_all({g}, ctx).front(); }

std::vector<bool> OracleSession::ask_all(const std::vector<Gci>& gs, const QuestionContext& ctx) {
  std::vector<std::optional<bool>> got(gs.size());
  std::vector<PendingQuestion> missing;
  std::map<Gci, bool> fresh;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (auto k = known(gs[i])) {
      got[i] = k;
      continue;
    }
    if (auto it = fresh.find(gs[i]); it != fresh.end()) {
      got[i] = it->second;
      continue;
    }
    got[i] = backend_->verdict(gs[i]);
    if (got[i]) {
      fresh.emplace(gs[i], *got[i]);
    } else if (std::none_of(missing.begin(), missing.end(),
                            [&](const PendingQuestion& q) { return q.axiom == gs[i]; })) {
      missing.push_back({question_id(gs[i]), gs[i], ctx});
    }
  }
  if (!missing.empty()) throw NeedAnswers(std::move(missing));
  std::vector<bool> out(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (!known(gs[i])) record(gs[i], *got[i], ctx.phase);
    out[i] = *got[i];
  }
  return out;
}

}  // namespace onr
