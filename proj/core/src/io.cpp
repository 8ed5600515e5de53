#include "ontorepair/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

namespace onr {

ParseError::ParseError(const std::string& msg, int l, int c, std::string f)
    : std::runtime_error((f.empty() ? "" : f + ":") + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
      line(l),
      column(c),
      file(std::move(f)),
      message(msg) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

// Recursive-descent parser over one logical line.
class LineParser {
 public:
  LineParser(std::string_view text, int line) : s_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, static_cast<int>(pos_) + 1); }

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    ws();
    return pos_ >= s_.size();
  }
  void expect(char c) {
    ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string ident() {
    ws();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail("expected identifier");
    const std::size_t b = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }
  // Identifier possibly prefixed by "ontology:".
  std::pair<std::string, std::string> qualified() {
    std::string a = ident();
    if (accept(':')) return {a, ident()};
    return {{}, a};
  }

  Concept concept_expr() {
    ws();
    const std::size_t start = pos_;
    std::string head = ident();
    if (head == "Top") return Concept::top();
    if (head == "Bottom") return Concept::bottom();
    if (head == "And") {
      expect('(');
      std::vector<Concept> ops{concept_expr()};
      expect(',');
      ops.push_back(concept_expr());
      while (accept(',')) ops.push_back(concept_expr());
      expect(')');
      return Concept::conj(std::move(ops));
    }
    if (head == "Some") {
      expect('(');
      std::string role = ident();
      expect(',');
      Concept filler = concept_expr();
      expect(')');
      return Concept::exists(std::move(role), std::move(filler));
    }
    ws();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      pos_ = start;
      fail("unknown constructor '" + head + "'");
    }
    return Concept::named(std::move(head));
  }

  Gci subclass_body() {
    expect('(');
    Concept l = concept_expr();
    expect(',');
    Concept r = concept_expr();
    expect(')');
    return {std::move(l), std::move(r)};
  }

 private:
  std::string_view s_;
  int line_;
  std::size_t pos_ = 0;
};

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> logical_lines(std::string_view text) {
  std::vector<Line> out;
  int n = 0;
  std::size_t b = 0;
  while (b <= text.size()) {
    std::size_t e = text.find('\n', b);
    if (e == std::string_view::npos) e = text.size();
    ++n;
    std::string_view l = text.substr(b, e - b);
    if (auto h = l.find('#'); h != std::string_view::npos) l = l.substr(0, h);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    if (l.find_first_not_of(" \t") != std::string_view::npos) out.push_back({n, l});
    b = e + 1;
  }
  return out;
}

void finish(LineParser& p) {
  if (!p.at_end()) p.fail("unexpected trailing input");
}

std::string keyword(LineParser& p) { return p.ident(); }

}  // namespace

Concept parse_concept(std::string_view text) {
  LineParser p(text, 1);
  Concept c = p.concept_expr();
  finish(p);
  return c;
}

Gci parse_gci(std::string_view text) {
  LineParser p(text, 1);
  if (keyword(p) != "SubClassOf") p.fail("expected SubClassOf");
  Gci g = p.subclass_body();
  finish(p);
  return g;
}

OntologyText parse_ontology(std::string_view text) {
  OntologyText o;
  bool header = false;
  for (const auto& [n, l] : logical_lines(text)) {
    LineParser p(l, n);
    const std::string kw = keyword(p);
    if (kw == "Ontology") {
      if (header) p.fail("duplicate Ontology header");
      p.expect('(');
      o.name = p.ident();
      p.expect(')');
      header = true;
    } else if (!header) {
      p.fail("expected Ontology(name) header");
    } else if (kw == "Class") {
      p.expect('(');
      std::string x = p.ident();
      if (x == "Top" || x == "Bottom") p.fail("cannot declare " + x);
      o.declared.insert(std::move(x));
      p.expect(')');
    } else if (kw == "SubClassOf") {
      o.axioms.push_back(p.subclass_body());
    } else {
      p.fail("unknown statement '" + kw + "'");
    }
    finish(p);
  }
  if (!header) throw ParseError("missing Ontology(name) header", 1, 1);
  return o;
}

AlignmentText parse_alignment(std::string_view text) {
  AlignmentText a;
  bool header = false;
  for (const auto& [n, l] : logical_lines(text)) {
    LineParser p(l, n);
    const std::string kw = keyword(p);
    if (kw == "Alignment") {
      if (header) p.fail("duplicate Alignment header");
      p.expect('(');
      a.first = p.ident();
      p.expect(',');
      a.second = p.ident();
      p.expect(')');
      header = true;
    } else if (!header) {
      p.fail("expected Alignment(o1, o2) header");
    } else if (kw == "Map") {
      p.expect('(');
      auto [lo, ln] = p.qualified();
      p.expect(',');
      auto [ro, rn] = p.qualified();
      p.expect(')');
      for (const auto* o : {&lo, &ro})
        if (!o->empty() && *o != a.first && *o != a.second) p.fail("unknown ontology '" + *o + "' in mapping");
      a.mappings.emplace_back(Concept::named(ln), Concept::named(rn));
      a.sides.emplace_back(lo, ro);
    } else if (kw == "SubClassOf") {
      a.mappings.push_back(p.subclass_body());
      a.sides.emplace_back();
    } else {
      p.fail("unknown statement '" + kw + "'");
    }
    finish(p);
  }
  if (!header) throw ParseError("missing Alignment(o1, o2) header", 1, 1);
  return a;
}

std::vector<Gci> parse_axiom_list(std::string_view text) {
  std::vector<Gci> out;
  for (const auto& [n, l] : logical_lines(text)) {
    LineParser p(l, n);
    if (keyword(p) != "SubClassOf") p.fail("expected SubClassOf");
    out.push_back(p.subclass_body());
    finish(p);
  }
  return out;
}

std::map<Gci, bool> parse_answers(std::string_view text) {
  std::map<Gci, bool> out;
  for (const auto& [n, l] : logical_lines(text)) {
    LineParser p(l, n);
    const std::string v = keyword(p);
    if (v != "yes" && v != "no") p.fail("expected yes or no");
    if (keyword(p) != "SubClassOf") p.fail("expected SubClassOf");
    Gci g = p.subclass_body();
    finish(p);
    auto [it, fresh] = out.emplace(g, v == "yes");
    if (!fresh && it->second != (v == "yes")) p.fail("conflicting answer for " + g.functional());
  }
  return out;
}

std::string write_ontology(const OntologyText& o) {
  std::ostringstream s;
  s << "Ontology(" << o.name << ")\n";
  std::set<std::string> used = concept_names(o.axioms);
  for (const auto& x : o.declared)
    if (!used.count(x)) s << "Class(" << x << ")\n";
  for (const auto& g : o.axioms) s << g.functional() << "\n";
  return s.str();
}

std::string write_alignment(const AlignmentText& a) {
  std::ostringstream s;
  s << "Alignment(" << a.first << ", " << a.second << ")\n";
  for (std::size_t i = 0; i < a.mappings.size(); ++i) {
    const auto& g = a.mappings[i];
    const bool prefixed = i < a.sides.size() && !a.sides[i].first.empty() && !a.sides[i].second.empty();
    if (prefixed && g.lhs.is_named() && g.rhs.is_named())
      s << "Map(" << a.sides[i].first << ":" << g.lhs.name() << ", " << a.sides[i].second << ":" << g.rhs.name()
        << ")\n";
    else
      s << g.functional() << "\n";
  }
  return s.str();
}

std::string write_axiom_list(const std::vector<Gci>& axioms) {
  std::string s;
  for (const auto& g : axioms) s += g.functional() + "\n";
  return s;
}

std::string write_answers(const std::vector<std::pair<Gci, bool>>& answers) {
  std::string s;
  for (const auto& [g, v] : answers) s += (v ? "yes " : "no ") + g.functional() + "\n";
  return s;
}

OntologyNetwork build_network(const std::vector<OntologyText>& ontologies, const std::vector<AlignmentText>& alignments) {
  OntologyNetwork net;
  for (const auto& o : ontologies) net.add_ontology(o.name, o.axioms, o.declared);
  for (const auto& a : alignments) {
    const int i = net.ontology_index(a.first);
    const int j = net.ontology_index(a.second);
    if (i < 0) throw BundleError("alignment references unknown ontology '" + a.first + "'");
    if (j < 0) throw BundleError("alignment references unknown ontology '" + a.second + "'");
    for (std::size_t k = 0; k < a.mappings.size() && k < a.sides.size(); ++k) {
      const auto& g = a.mappings[k];
      const auto& [lo, ro] = a.sides[k];
      auto check = [&](const std::string& ont, const Concept& c) {
        if (ont.empty() || !c.is_named()) return;
        const auto& sig = net.ontologies()[net.ontology_index(ont)].signature;
        if (!sig.count(c.name())) throw BundleError("'" + c.name() + "' is not a concept of ontology '" + ont + "'");
      };
      check(lo, g.lhs);
      check(ro, g.rhs);
    }
    net.add_alignment(i, j, a.mappings);
  }
  return net;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw BundleError("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

namespace {

template <class F>
auto with_file(const std::filesystem::path& p, F&& f) {
  try {
    return f(read_file(p));
  } catch (const ParseError& e) {
    throw ParseError(e.message, e.line, e.column, p.filename().string());
  }
}

}  // namespace

Bundle load_bundle(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw BundleError(dir.string() + " is not a directory");
  std::vector<fs::path> onts, alns;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".ont") onts.push_back(e.path());
    if (e.path().extension() == ".aln") alns.push_back(e.path());
  }
  std::sort(onts.begin(), onts.end());
  std::sort(alns.begin(), alns.end());
  std::vector<OntologyText> ot;
  std::vector<AlignmentText> at;
  for (const auto& p : onts) ot.push_back(with_file(p, [](const std::string& s) { return parse_ontology(s); }));
  for (const auto& p : alns) at.push_back(with_file(p, [](const std::string& s) { return parse_alignment(s); }));
  Bundle b;
  b.network = build_network(ot, at);
  if (fs::exists(dir / "wrong.txt"))
    b.wrong = with_file(dir / "wrong.txt", [](const std::string& s) { return parse_axiom_list(s); });
  if (fs::exists(dir / "gold.txt")) {
    b.gold = with_file(dir / "gold.txt", [](const std::string& s) { return parse_axiom_list(s); });
    if (!unsatisfiable_concepts(*b.gold).empty()) throw BundleError("gold.txt is not coherent");
  }
  if (fs::exists(dir / "answers.txt"))
    b.answers = with_file(dir / "answers.txt", [](const std::string& s) { return parse_answers(s); });
  return b;
}

nlohmann::json concept_to_json(const Concept& c) {
  using nlohmann::json;
  switch (c.kind()) {
    case ConceptKind::Top: return json{{"kind", "top"}};
    case ConceptKind::Bottom: return json{{"kind", "bottom"}};
    case ConceptKind::Named: return json{{"kind", "named"}, {"name", c.name()}};
    case ConceptKind::Conj: {
      json ops = json::array();
      for (const auto& o : c.operands()) ops.push_back(concept_to_json(o));
      return json{{"kind", "and"}, {"operands", ops}};
    }
    case ConceptKind::Exists:
      return json{{"kind", "some"}, {"role", c.role()}, {"filler", concept_to_json(c.filler())}};
  }
  return {};
}

nlohmann::json gci_to_json(const Gci& g) {
  return {{"text", g.functional()}, {"lhs", concept_to_json(g.lhs)}, {"rhs", concept_to_json(g.rhs)}};
}

nlohmann::json question_to_json(const PendingQuestion& q) {
  nlohmann::json j{{"id", q.id},
                   {"axiom", gci_to_json(q.axiom)},
                   {"phase", to_string(q.context.phase)},
                   {"role", q.context.role}};
  j["source"] = q.context.source ? nlohmann::json(q.context.source->functional()) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json pane_to_json(const PaneData& pane, const OntologyNetwork& net) {
  auto origin = [&](const std::string& x) -> std::string {
    for (const auto& o : net.ontologies())
      if (o.signature.count(x)) return o.name;
    return "";
  };
  auto side = [&](const std::vector<std::string>& xs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : xs) a.push_back({{"name", x}, {"ontology", origin(x)}});
    return a;
  };
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [x, y] : pane.edges) edges.push_back({x, y});
  return {{"sub", side(pane.sub)}, {"sup", side(pane.sup)}, {"edges", edges}};
}

nlohmann::json verify_to_json(const VerifyReport& r) {
  auto cond = [](const ConditionReport& c) { return nlohmann::json{{"ok", c.ok}, {"witnesses", c.witnesses}}; };
  return {{"ok", r.ok()},
          {"added_true", cond(r.added_true)},
          {"removed_asserted", cond(r.removed_asserted)},
          {"removed_false", cond(r.removed_false)},
          {"wrong_not_entailed", cond(r.wrong_not_entailed)}};
}

namespace {

nlohmann::json texts(const std::vector<Gci>& gs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& g : gs) a.push_back(g.functional());
  return a;
}

std::string scope_text(const KbScope& s) {
  std::string out = to_string(s.level);
  if (s.level == KbScope::Level::O || s.level == KbScope::Level::MO) out += "(" + std::to_string(s.focus) + ")";
  if (s.level == KbScope::Level::M || s.level == KbScope::Level::MM)
    out += "(" + std::to_string(s.pair.first) + "," + std::to_string(s.pair.second) + ")";
  return out;
}

nlohmann::json candidates_json(const CandidateResult& c) {
  nlohmann::json log = nlohmann::json::array();
  for (const auto& r : c.log) log.push_back({{"candidate", r.candidate.functional()}, {"filter", to_string(r.tag)}});
  return {{"sub", c.sub}, {"sup", c.sup}, {"grid", c.grid_size}, {"kept", texts(c.kept)}, {"log", log}};
}

}  // namespace

nlohmann::json result_to_json(const RepairResult& r, const VerifyReport* verify) {
  using nlohmann::json;
  json removed = json::array();
  for (std::size_t i = 0; i < r.removed.size(); ++i)
    removed.push_back({{"id", r.removed[i]}, {"axiom", r.removed_axioms[i].functional()}});
  json weak = json::array();
  for (const auto& w : r.weakening) {
    json j = candidates_json(w.result);
    j["source"] = w.source;
    j["wrong"] = w.wrong.functional();
    j["scope"] = scope_text(w.scope);
    weak.push_back(j);
  }
  json comp = json::array();
  for (const auto& c : r.completing) {
    json j = candidates_json(c.result);
    j["source"] = c.source;
    j["weakened"] = c.weakened.functional();
    j["scope"] = scope_text(c.scope);
    comp.push_back(j);
  }
  json per_phase = json::object();
  for (const auto& [p, n] : r.stats.per_phase) per_phase[to_string(p)] = n;
  json answers = json::array();
  for (const auto& [g, v] : r.stats.answers) answers.push_back({{"axiom", g.functional()}, {"verdict", v}});
  json trace = trace_to_json(r.trace);
  json out{{"added", texts(r.added)},
           {"removed", removed},
           {"weakening", weak},
           {"completing", comp},
           {"repaired", texts(r.repaired.assemble())},
           {"stats", {{"asked", r.stats.asked}, {"per_phase", per_phase}, {"answers", answers}}},
           {"trace", trace}};
  if (verify) out["verify"] = verify_to_json(*verify);
  return out;
}

nlohmann::json trace_to_json(const Trace& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : t.events())
    out.push_back({{"kind", e.kind}, {"subject", e.subject}, {"items", e.items}, {"note", e.note}});
  return out;
}

std::string result_document(const RepairResult& r, const VerifyReport& verify) {
  return result_to_json(r, &verify).dump(2) + "\n";
}

nlohmann::json hasse_to_json(const HasseReport& r) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& o : r.outcomes)
    edges.push_back({{"family", o.edge->family},
                     {"edge", o.edge->name},
                     {"kind", o.edge->kind == HasseEdge::Kind::Equal ? "equal" : "covers"},
                     {"ok", o.ok},
                     {"detail", o.detail},
                     {"completeness", to_string(o.comparison.completeness)},
                     {"incorrectness", to_string(o.comparison.incorrectness)}});
  return {{"violations", r.violations()}, {"edges", edges}};
}

namespace {

template <class E, std::size_t N>
E enum_value(const nlohmann::json& j, const char* key, const std::array<std::pair<const char*, E>, N>& table) {
  if (!j.is_string()) throw InvalidPlan(std::string(key) + " must be a string");
  const auto v = j.get<std::string>();
  for (const auto& [name, e] : table)
    if (v == name) return e;
  std::string allowed;
  for (const auto& [name, e] : table) allowed += std::string(allowed.empty() ? "" : "|") + name;
  throw InvalidPlan("bad value '" + v + "' for " + key + " (expected " + allowed + ")");
}

constexpr std::array<std::pair<const char*, SelectMode>, 2> kSelect{{{"s-one", SelectMode::One},
                                                                     {"s-all", SelectMode::All}}};
constexpr std::array<std::pair<const char*, DecideMode>, 3> kDecide{{{"d-all-v", DecideMode::AllValidate},
                                                                     {"d-one-v", DecideMode::OneValidate},
                                                                     {"d-v-one", DecideMode::ValidateOne}}};
constexpr std::array<std::pair<const char*, RemoveMode>, 3> kRemove{
    {{"r-none", RemoveMode::None}, {"r-one", RemoveMode::One}, {"r-all", RemoveMode::All}}};
constexpr std::array<std::pair<const char*, AddBackMode>, 3> kAddBack{
    {{"ab-none", AddBackMode::None}, {"ab-one", AddBackMode::One}, {"ab-all", AddBackMode::All}}};
constexpr std::array<std::pair<const char*, BatchMode>, 2> kWeaken{{{"w-one", BatchMode::One}, {"w-all", BatchMode::All}}};
constexpr std::array<std::pair<const char*, BatchMode>, 2> kComplete{
    {{"c-one", BatchMode::One}, {"c-all", BatchMode::All}}};
constexpr std::array<std::pair<const char*, UpdateMode>, 3> kUpdate{
    {{"u-now", UpdateMode::Now}, {"u-end_one", UpdateMode::EndOne}, {"u-end_all", UpdateMode::EndAll}}};
constexpr std::array<std::pair<const char*, OntologyLevel>, 3> kOnt{
    {{"o", OntologyLevel::O}, {"mo", OntologyLevel::MO}, {"on", OntologyLevel::ON}}};
constexpr std::array<std::pair<const char*, AlignmentLevel>, 3> kMap{
    {{"m", AlignmentLevel::M}, {"mm", AlignmentLevel::MM}, {"on", AlignmentLevel::ON}}};
constexpr std::array<std::pair<const char*, AddScope>, 3> kAddSet{
    {{"on", AddScope::ON}, {"o", AddScope::O}, {"m", AddScope::M}}};
constexpr std::array<std::pair<const char*, DebugKb>, 2> kDebugKb{{{"on", DebugKb::ON}, {"home", DebugKb::Home}}};

template <class E, std::size_t N>
std::string enum_name(E e, const std::array<std::pair<const char*, E>, N>& table) {
  for (const auto& [name, v] : table)
    if (v == e) return name;
  return "?";
}

int ontology_ref(const std::string& name, const OntologyNetwork& net) {
  const int i = net.ontology_index(name);
  if (i < 0) throw InvalidPlan("unknown ontology '" + name + "'");
  return i;
}

AlignmentKey alignment_ref(const std::string& text, const OntologyNetwork& net) {
  const auto dash = text.find('-');
  if (dash == std::string::npos) throw InvalidPlan("alignment must be written O1-O2, got '" + text + "'");
  const int i = ontology_ref(text.substr(0, dash), net);
  const int j = ontology_ref(text.substr(dash + 1), net);
  const AlignmentKey key{std::min(i, j), std::max(i, j)};
  if (!net.alignments().count(key)) throw InvalidPlan("no alignment between " + text.substr(0, dash) + " and " +
                                                      text.substr(dash + 1));
  return key;
}

std::string alignment_text(AlignmentKey p, const OntologyNetwork& net) {
  return net.ontologies()[p.first].name + "-" + net.ontologies()[p.second].name;
}

}  // namespace

RepairPlan plan_from_json(const nlohmann::json& j, const OntologyNetwork& net) {
  if (j.is_null()) return RepairPlan::algorithm1();
  if (!j.is_object()) throw InvalidPlan("plan must be an object");
  RepairPlan p = RepairPlan::algorithm1();
  for (const auto& [key, v] : j.items()) {
    if (key == "select") p.select = enum_value(v, "select", kSelect);
    else if (key == "decide") p.decide = enum_value(v, "decide", kDecide);
    else if (key == "remove") p.remove = enum_value(v, "remove", kRemove);
    else if (key == "add_back") p.add_back = enum_value(v, "add_back", kAddBack);
    else if (key == "weaken") p.weaken = enum_value(v, "weaken", kWeaken);
    else if (key == "update_w") p.weaken_update = enum_value(v, "update_w", kUpdate);
    else if (key == "complete") p.complete = enum_value(v, "complete", kComplete);
    else if (key == "update_c") p.complete_update = enum_value(v, "update_c", kUpdate);
    else if (key == "kb_ont") p.kb_ontology = enum_value(v, "kb_ont", kOnt);
    else if (key == "kb_map") p.kb_alignment = enum_value(v, "kb_map", kMap);
    else if (key == "add_set") p.add_scope = enum_value(v, "add_set", kAddSet);
    else if (key == "debug_kb") p.debug_kb = enum_value(v, "debug_kb", kDebugKb);
    else if (key == "kb_ont_for") {
      if (!v.is_object()) throw InvalidPlan("kb_ont_for must be an object");
      for (const auto& [o, l] : v.items()) p.kb_ontology_for[ontology_ref(o, net)] = enum_value(l, "kb_ont_for", kOnt);
    } else if (key == "kb_map_for") {
      if (!v.is_object()) throw InvalidPlan("kb_map_for must be an object");
      for (const auto& [a, l] : v.items()) p.kb_alignment_for[alignment_ref(a, net)] = enum_value(l, "kb_map_for", kMap);
    } else if (key == "finalize") {
      if (!v.is_array()) throw InvalidPlan("finalize must be an array");
      for (const auto& t : v) {
        if (!t.is_string()) throw InvalidPlan("finalize entries must be strings");
        const auto s = t.get<std::string>();
        if (s.find('-') != std::string::npos)
          p.finalize.alignments.insert(alignment_ref(s, net));
        else
          p.finalize.ontologies.insert(ontology_ref(s, net));
      }
    } else if (key == "strict_removal") {
      if (!v.is_boolean()) throw InvalidPlan("strict_removal must be a boolean");
      p.strict_removal = v.get<bool>();
    } else if (key == "max_justifications") {
      if (!v.is_number_unsigned()) throw InvalidPlan("max_justifications must be a positive integer");
      p.max_justifications = v.get<std::size_t>();
    } else {
      throw InvalidPlan("unknown plan option '" + key + "'");
    }
  }
  return p;
}

nlohmann::json plan_to_json(const RepairPlan& p, const OntologyNetwork& net) {
  nlohmann::json j{{"select", enum_name(p.select, kSelect)},
                   {"decide", enum_name(p.decide, kDecide)},
                   {"remove", enum_name(p.remove, kRemove)},
                   {"add_back", enum_name(p.add_back, kAddBack)},
                   {"weaken", enum_name(p.weaken, kWeaken)},
                   {"update_w", enum_name(p.weaken_update, kUpdate)},
                   {"complete", enum_name(p.complete, kComplete)},
                   {"update_c", enum_name(p.complete_update, kUpdate)},
                   {"kb_ont", enum_name(p.kb_ontology, kOnt)},
                   {"kb_map", enum_name(p.kb_alignment, kMap)},
                   {"add_set", enum_name(p.add_scope, kAddSet)},
                   {"debug_kb", enum_name(p.debug_kb, kDebugKb)},
                   {"strict_removal", p.strict_removal},
                   {"max_justifications", p.max_justifications}};
  nlohmann::json ont_for = nlohmann::json::object(), map_for = nlohmann::json::object();
  for (const auto& [i, l] : p.kb_ontology_for) ont_for[net.ontologies()[i].name] = enum_name(l, kOnt);
  for (const auto& [k, l] : p.kb_alignment_for) map_for[alignment_text(k, net)] = enum_name(l, kMap);
  nlohmann::json fin = nlohmann::json::array();
  for (int i : p.finalize.ontologies) fin.push_back(net.ontologies()[i].name);
  for (const auto& k : p.finalize.alignments) fin.push_back(alignment_text(k, net));
  j["kb_ont_for"] = ont_for;
  j["kb_map_for"] = map_for;
  j["finalize"] = fin;
  return j;
}

std::string result_csv(const RepairResult& r) {
  auto join = [](const auto& xs) {
    std::string s;
    for (const auto& x : xs) {
      if (!s.empty()) s += " ";
      if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Gci>)
        s += x.str();
      else
        s += x;
    }
    return s;
  };
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  std::ostringstream out;
  out << "step,axiom,for,scope,sub_size,sup_size,grid,sub,sup,kept\n";
  for (const auto& w : r.weakening)
    out << "weaken," << quote(w.wrong.str()) << "," << quote(w.wrong.str()) << "," << scope_text(w.scope) << ","
        << w.result.sub.size() << "," << w.result.sup.size() << "," << w.result.grid_size << ","
        << quote(join(w.result.sub)) << "," << quote(join(w.result.sup)) << "," << quote(join(w.result.kept)) << "\n";
  for (const auto& c : r.completing) {
    const Gci* src = nullptr;
    for (const auto& w : r.weakening)
      if (w.source == c.source) src = &w.wrong;
    out << "complete," << quote(c.weakened.str()) << "," << quote(src ? src->str() : "") << ","
        << scope_text(c.scope) << "," << c.result.sub.size() << "," << c.result.sup.size() << ","
        << c.result.grid_size << "," << quote(join(c.result.sub)) << "," << quote(join(c.result.sup)) << ","
        << quote(join(c.result.kept)) << "\n";
  }
  return out.str();
}

}  // namespace onr
