#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ontorepair/io.hpp"
#include "ontorepair/oracle.hpp"
#include "ontorepair/pipeline.hpp"

namespace onr::service {

// Read-only view of a session, replaced as a whole after every answer.
struct SessionState {
  std::string phase;  // debugging, weakening, completing, done, failed
  std::vector<PendingQuestion> pending;
  nlohmann::json pane;  // null outside weakening/completing
  std::optional<std::string> result;  // body of /result once done
  nlohmann::json trace = nlohmann::json::array();
  std::string error;
  std::size_t answered = 0;
};

// Request body of POST /sessions: ontology and alignment file texts, an
// optional wrong-axiom list and plan options. Without "wrong" the
// unsatisfiable concepts of the network are repaired.
struct SessionInput {
  std::vector<std::string> ontologies;
  std::vector<std::string> alignments;
  std::optional<std::string> wrong;
  nlohmann::json plan;

  static SessionInput from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

class Session {
 public:
  Session(std::string id, SessionInput input);

  const std::string& id() const { return id_; }
  const SessionInput& input() const { return input_; }
  const OntologyNetwork& network() const { return network_; }
  const std::vector<Gci>& wrong() const { return wrong_; }
  const RepairPlan& plan() const { return plan_; }

  std::shared_ptr<const SessionState> state() const;

  enum class AnswerStatus { Ok, UnknownQuestion, Conflict };
  struct AnswerOutcome {
    AnswerStatus status = AnswerStatus::Ok;
    std::string detail;
    std::vector<std::pair<Gci, bool>> recorded;  // new answers, in request order
  };
  using Persist = std::function<void(const Gci&, bool)>;
  // All-or-nothing: either every answer is accepted (new ones persisted,
  // recorded, and the pipeline re-run) or nothing changes.
  AnswerOutcome answer(const std::vector<std::pair<std::string, bool>>& answers, const Persist& persist = {});
  // Journal replay; does not re-run the pipeline.
  void restore_answer(const Gci& g, bool verdict);
  void advance();

 private:
  std::string id_;
  SessionInput input_;
  OntologyNetwork network_;
  std::vector<Gci> wrong_;
  RepairPlan plan_;
  std::map<Gci, bool> answers_;
  std::map<std::string, std::pair<Gci, bool>> by_id_;

  std::mutex write_;  // serializes answers
  mutable std::mutex snap_;
  std::shared_ptr<const SessionState> state_;
};

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// Sessions keyed by id. With a journal directory, every session has an
// append-only <id>.jsonl file and existing journals are replayed on start.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> journal_dir = std::nullopt);

  std::shared_ptr<Session> create(const SessionInput& input);
  std::shared_ptr<Session> find(const std::string& id) const;
  std::vector<std::shared_ptr<Session>> all() const;

  // Routes one API request; used by the HTTP server and directly by tests.
  Response dispatch(const std::string& method, const std::string& path, const std::string& body);

 private:
  std::string fresh_id() const;
  void journal(const std::string& id, const nlohmann::json& record) const;
  void replay(const std::filesystem::path& file);
  Response post_answers(Session& s, const std::string& body);

  std::optional<std::filesystem::path> dir_;
  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

nlohmann::json summary_json(const Session& s);
nlohmann::json pending_json(const Session& s);

// Blocking HTTP server on top of a store. Optional static directory serves
// the UI bundle.
class HttpServer {
 public:
  explicit HttpServer(SessionStore& store, std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Port 0 picks a free port; returns the bound port or -1.
  int bind(const std::string& host, int port);
  bool listen_after_bind();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace onr::service
