#include "ontorepair/service.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include <httplib.h>

#include "ontorepair/debug.hpp"

namespace onr::service {

using nlohmann::json;

SessionInput SessionInput::from_json(const json& j) {
  if (!j.is_object()) throw BundleError("session request must be a JSON object");
  SessionInput in;
  auto strings = [&](const char* key, std::vector<std::string>& out) {
    if (!j.contains(key)) return;
    const auto& a = j.at(key);
    if (!a.is_array()) throw BundleError(std::string(key) + " must be an array of file texts");
    for (const auto& t : a) {
      if (!t.is_string()) throw BundleError(std::string(key) + " must be an array of file texts");
      out.push_back(t.get<std::string>());
    }
  };
  strings("ontologies", in.ontologies);
  strings("alignments", in.alignments);
  if (in.ontologies.empty()) throw BundleError("a session needs at least one ontology");
  if (j.contains("wrong") && !j.at("wrong").is_null()) {
    if (!j.at("wrong").is_string()) throw BundleError("wrong must be the text of an axiom list");
    in.wrong = j.at("wrong").get<std::string>();
  }
  in.plan = j.value("plan", json(nullptr));
  return in;
}

json SessionInput::to_json() const {
  json j{{"ontologies", ontologies}, {"alignments", alignments}, {"plan", plan}};
  j["wrong"] = wrong ? json(*wrong) : json(nullptr);
  return j;
}

namespace {

std::string phase_name(Phase p) {
  switch (p) {
    case Phase::Debug: return "debugging";
    case Phase::Weaken: return "weakening";
    case Phase::Complete: return "completing";
  }
  return "?";
}

}  // namespace

Session::Session(std::string id, SessionInput input) : id_(std::move(id)), input_(std::move(input)) {
  std::vector<OntologyText> ot;
  std::vector<AlignmentText> at;
  for (const auto& t : input_.ontologies) ot.push_back(parse_ontology(t));
  for (const auto& t : input_.alignments) at.push_back(parse_alignment(t));
  network_ = build_network(ot, at);
  wrong_ = input_.wrong ? parse_axiom_list(*input_.wrong) : unsatisfiability_targets(network_);
  plan_ = plan_from_json(input_.plan, network_);
  plan_.validate();
  state_ = std::make_shared<SessionState>();
}

std::shared_ptr<const SessionState> Session::state() const {
  std::lock_guard lock(snap_);
  return state_;
}

void Session::restore_answer(const Gci& g, bool verdict) {
  std::lock_guard lock(write_);
  answers_[g] = verdict;
  by_id_[question_id(g)] = {g, verdict};
}

void Session::advance() {
  auto next = std::make_shared<SessionState>();
  ScriptedOracle scripted(answers_);
  OracleSession oracle(scripted);
  Trace trace;
  next->answered = answers_.size();
  try {
    auto res = run_repair(network_, wrong_, plan_, oracle, {true, &trace});
    const auto verify = verify_repair(network_, wrong_, res, scripted);
    next->phase = "done";
    next->result = result_document(res, verify);
  } catch (const NeedAnswers& e) {
    next->pending = e.questions;
    const auto& ctx = e.questions.front().context;
    next->phase = phase_name(ctx.phase);
    if (ctx.pane) next->pane = pane_to_json(*ctx.pane, network_);
  } catch (const OracleRejectsW& e) {
    next->phase = "failed";
    next->error = e.what();
  } catch (const NotEntailedWrongAxiom& e) {
    next->phase = "failed";
    next->error = e.what();
  } catch (const NoFalseHittingSet& e) {
    next->phase = "failed";
    next->error = e.what();
  }
  next->trace = trace_to_json(trace);
  std::lock_guard lock(snap_);
  state_ = std::move(next);
}

Session::AnswerOutcome Session::answer(const std::vector<std::pair<std::string, bool>>& answers,
                                       const Persist& persist) {
  std::lock_guard lock(write_);
  const auto current = state();
  std::map<std::string, const PendingQuestion*> pending;
  for (const auto& q : current->pending) pending[q.id] = &q;
  AnswerOutcome out;
  std::map<std::string, bool> batch;
  for (const auto& [id, v] : answers) {
    if (auto it = by_id_.find(id); it != by_id_.end()) {
      if (it->second.second != v) return {AnswerStatus::Conflict, "question " + id + " was already answered differently", {}};
      continue;
    }
    if (auto it = batch.find(id); it != batch.end()) {
      if (it->second != v) return {AnswerStatus::Conflict, "question " + id + " answered both ways", {}};
      continue;
    }
    auto it = pending.find(id);
    if (it == pending.end()) return {AnswerStatus::UnknownQuestion, "question " + id + " is not pending", {}};
    batch[id] = v;
    out.recorded.emplace_back(it->second->axiom, v);
  }
  for (const auto& [g, v] : out.recorded) {
    if (persist) persist(g, v);
    answers_[g] = v;
    by_id_[question_id(g)] = {g, v};
  }
  if (!out.recorded.empty()) advance();
  return out;
}

json summary_json(const Session& s) {
  const auto st = s.state();
  json j{{"id", s.id()},
         {"phase", st->phase},
         {"pending", st->pending.size()},
         {"answered", st->answered},
         {"plan", s.plan().label()}};
  if (!st->error.empty()) j["error"] = st->error;
  return j;
}

json pending_json(const Session& s) {
  const auto st = s.state();
  json qs = json::array();
  for (const auto& q : st->pending) qs.push_back(question_to_json(q));
  json highlight = json::array();
  if (!st->pending.empty() && st->pending.front().context.source) {
    const auto& src = *st->pending.front().context.source;
    for (const auto& n : concept_names(src)) highlight.push_back(n);
  }
  json wrong = json::array();
  for (const auto& g : s.wrong()) wrong.push_back(gci_to_json(g));
  return {{"phase", st->phase}, {"questions", qs}, {"pane", st->pane}, {"highlight", highlight}, {"wrong", wrong}};
}

SessionStore::SessionStore(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {
  if (!dir_) return;
  std::filesystem::create_directories(*dir_);
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(*dir_))
    if (e.path().extension() == ".jsonl") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    try {
      replay(f);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "skipping journal %s: %s\n", f.string().c_str(), e.what());
    }
  }
}

void SessionStore::replay(const std::filesystem::path& file) {
  std::ifstream in(file);
  std::string line;
  std::shared_ptr<Session> s;
  const std::string id = file.stem().string();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::parse_error&) {
      break;  // torn final write
    }
    const auto type = rec.value("type", "");
    if (type == "create")
      s = std::make_shared<Session>(id, SessionInput::from_json(rec.at("input")));
    else if (type == "answer" && s)
      s->restore_answer(parse_gci(rec.at("axiom").get<std::string>()), rec.at("verdict").get<bool>());
  }
  if (!s) return;
  s->advance();
  sessions_[id] = s;
}

void SessionStore::journal(const std::string& id, const json& record) const {
  if (!dir_) return;
  std::ofstream out(*dir_ / (id + ".jsonl"), std::ios::app);
  out << record.dump() << '\n';
  out.flush();
  if (!out) throw std::runtime_error("cannot write session journal for " + id);
}

std::string SessionStore::fresh_id() const {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  for (;;) {
    std::ostringstream s;
    s << std::hex << (rng() & 0xffffffffffffULL);
    if (!sessions_.count(s.str())) return s.str();
  }
}

std::shared_ptr<Session> SessionStore::create(const SessionInput& input) {
  std::unique_lock lock(mu_);
  const auto id = fresh_id();
  auto s = std::make_shared<Session>(id, input);
  journal(id, {{"type", "create"}, {"input", input.to_json()}});
  s->advance();
  sessions_[id] = s;
  return s;
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::vector<std::shared_ptr<Session>> SessionStore::all() const {
  std::shared_lock lock(mu_);
  std::vector<std::shared_ptr<Session>> out;
  for (const auto& [id, s] : sessions_) out.push_back(s);
  return out;
}

namespace {

Response json_response(int status, const json& body) { return {status, body.dump(2) + "\n"}; }
Response error(int status, const std::string& msg) { return json_response(status, {{"error", msg}}); }

}  // namespace

Response SessionStore::post_answers(Session& s, const std::string& body) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::parse_error& e) {
    return error(400, std::string("invalid JSON: ") + e.what());
  }
  std::vector<std::pair<std::string, bool>> answers;
  auto one = [&](const json& a) {
    if (!a.is_object() || !a.contains("id") || !a.contains("verdict") || !a.at("id").is_string() ||
        !a.at("verdict").is_boolean())
      return false;
    answers.emplace_back(a.at("id").get<std::string>(), a.at("verdict").get<bool>());
    return true;
  };
  bool ok = true;
  if (j.is_object() && j.contains("answers") && j.at("answers").is_array()) {
    for (const auto& a : j.at("answers")) ok = ok && one(a);
  } else {
    ok = one(j);
  }
  if (!ok) return error(400, "expected {\"id\": string, \"verdict\": bool} or {\"answers\": [...]}");
  const auto out = s.answer(answers, [&](const Gci& g, bool v) {
    journal(s.id(), {{"type", "answer"}, {"axiom", g.functional()}, {"verdict", v}});
  });
  if (out.status == Session::AnswerStatus::UnknownQuestion) return error(404, out.detail);
  if (out.status == Session::AnswerStatus::Conflict) return error(409, out.detail);
  return json_response(200, summary_json(s));
}

Response SessionStore::dispatch(const std::string& method, const std::string& path, const std::string& body) {
  static const std::regex session_re("^/sessions/([0-9a-zA-Z_-]+)(/(pending|answers|result|trace))?/?$");
  try {
    if (path == "/health") return json_response(200, {{"ok", true}});
    if (path == "/sessions" || path == "/sessions/") {
      if (method == "GET") {
        json list = json::array();
        for (const auto& s : all()) list.push_back(summary_json(*s));
        return json_response(200, list);
      }
      if (method != "POST") return error(405, "method not allowed");
      json j;
      try {
        j = json::parse(body);
      } catch (const json::parse_error& e) {
        return error(400, std::string("invalid JSON: ") + e.what());
      }
      auto s = create(SessionInput::from_json(j));
      auto summary = summary_json(*s);
      summary["wrong"] = s->wrong().size();
      return json_response(201, summary);
    }
    std::smatch m;
    if (!std::regex_match(path, m, session_re)) return error(404, "no route for " + path);
    auto s = find(m[1].str());
    if (!s) return error(404, "unknown session " + m[1].str());
    const std::string sub = m[3].str();
    if (sub == "answers") {
      if (method != "POST") return error(405, "method not allowed");
      return post_answers(*s, body);
    }
    if (method != "GET") return error(405, "method not allowed");
    if (sub.empty()) return json_response(200, summary_json(*s));
    if (sub == "pending") return json_response(200, pending_json(*s));
    if (sub == "trace") return json_response(200, {{"phase", s->state()->phase}, {"events", s->state()->trace}});
    const auto st = s->state();
    if (!st->result) return error(409, "session is " + st->phase + (st->error.empty() ? "" : ": " + st->error));
    return {200, *st->result};
  } catch (const ParseError& e) {
    return error(400, e.what());
  } catch (const BundleError& e) {
    return error(400, e.what());
  } catch (const InvalidPlan& e) {
    return error(400, e.what());
  } catch (const NetworkError& e) {
    return error(400, e.what());
  } catch (const json::exception& e) {
    return error(400, std::string("malformed request: ") + e.what());
  }
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(SessionStore& store, std::optional<std::filesystem::path> static_dir)
    : impl_(std::make_unique<Impl>()) {
  auto handler = [&store](const httplib::Request& req, httplib::Response& res) {
    const auto r = store.dispatch(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  auto& sv = impl_->server;
  sv.Get(R"(/(health|sessions.*))", handler);
  sv.Post(R"(/sessions.*)", handler);
  if (static_dir) sv.set_mount_point("/", static_dir->string());
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace onr::service
