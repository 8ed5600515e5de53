#pragma once

#include <string>
#include <vector>

namespace onr {

// One auditable pipeline step. `kind` is a short tag such as
// "justification", "removal-set", "weaken-grid", "keep" or "drop:F3".
struct TraceEvent {
  std::string kind;
  std::string subject;
  std::vector<std::string> items;
  std::string note;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

class Trace {
 public:
  void add(std::string kind, std::string subject, std::vector<std::string> items = {}, std::string note = {}) {
    events_.push_back({std::move(kind), std::move(subject), std::move(items), std::move(note)});
  }
  const std::vector<TraceEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }

 private:
  std::vector<TraceEvent> events_;
};

}  // namespace onr
