// ontorepair: detect, repair, compare and serve ontology networks.
//
// Exit codes: 0 ok, 1 defect or violation found, 2 input or usage error.

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ontorepair/debug.hpp"
#include "ontorepair/io.hpp"
#include "ontorepair/pipeline.hpp"
#include "ontorepair/service.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kDefect = 1;
constexpr int kInput = 2;

struct PlanFlags {
  std::string plan_file;
  std::string select, decide, remove, add_back, weaken, update_w, complete, update_c, kb_ont, kb_map, add_set,
      debug_kb;
  std::vector<std::string> kb_ont_for, kb_map_for, finalize;
  bool strict_removal = false;
  std::size_t max_justifications = 0;

  void attach(CLI::App& app) {
    app.add_option("--plan", plan_file, "JSON file with plan options (flags override it)");
    app.add_option("--select", select, "s-one|s-all");
    app.add_option("--decide", decide, "d-all-v|d-one-v|d-v-one");
    app.add_option("--remove", remove, "r-none|r-one|r-all");
    app.add_option("--add-back", add_back, "ab-none|ab-one|ab-all");
    app.add_option("--weaken", weaken, "w-one|w-all");
    app.add_option("--update-w", update_w, "u-now|u-end_one|u-end_all");
    app.add_option("--complete", complete, "c-one|c-all");
    app.add_option("--update-c", update_c, "u-now|u-end_one|u-end_all");
    app.add_option("--kb-ont", kb_ont, "o|mo|on");
    app.add_option("--kb-ont-for", kb_ont_for, "per-ontology level, NAME=o|mo|on");
    app.add_option("--kb-map", kb_map, "m|mm|on");
    app.add_option("--kb-map-for", kb_map_for, "per-alignment level, A-B=m|mm|on");
    app.add_option("--add-set", add_set, "on|o|m");
    app.add_option("--finalize", finalize, "ontologies (NAME) or alignments (A-B) to materialize into")
        ->delimiter(',');
    app.add_option("--debug-kb", debug_kb, "on|home");
    app.add_flag("--strict-removal", strict_removal, "apply the removal schedule during completion too");
    app.add_option("--max-justifications", max_justifications, "justifications per wrong axiom (s-all)");
  }

  json to_json() const {
    json j = plan_file.empty() ? json::object() : json::parse(onr::read_file(plan_file));
    auto set = [&](const char* key, const std::string& v) {
      if (!v.empty()) j[key] = v;
    };
    set("select", select);
    set("decide", decide);
    set("remove", remove);
    set("add_back", add_back);
    set("weaken", weaken);
    set("update_w", update_w);
    set("complete", complete);
    set("update_c", update_c);
    set("kb_ont", kb_ont);
    set("kb_map", kb_map);
    set("add_set", add_set);
    set("debug_kb", debug_kb);
    auto pairs = [&](const char* key, const std::vector<std::string>& xs) {
      for (const auto& x : xs) {
        const auto eq = x.find('=');
        if (eq == std::string::npos) throw onr::InvalidPlan(std::string("--") + key + " expects NAME=LEVEL, got " + x);
        j[key][x.substr(0, eq)] = x.substr(eq + 1);
      }
    };
    pairs("kb_ont_for", kb_ont_for);
    pairs("kb_map_for", kb_map_for);
    if (!finalize.empty()) j["finalize"] = finalize;
    if (strict_removal) j["strict_removal"] = true;
    if (max_justifications) j["max_justifications"] = max_justifications;
    return j;
  }
};

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
  if (!out) throw onr::BundleError("cannot write " + p.string());
}

std::optional<onr::KbScope::Level> level_of(const std::string& s) {
  using L = onr::KbScope::Level;
  if (s == "on") return L::ON;
  if (s == "o") return L::O;
  if (s == "mo") return L::MO;
  if (s == "m") return L::M;
  if (s == "mm") return L::MM;
  return std::nullopt;
}

int cmd_detect(const std::string& bundle_dir, const std::vector<std::string>& kbs, bool as_json) {
  const auto bundle = onr::load_bundle(bundle_dir);
  bool incoherent = false;
  json out = json::array();
  for (const auto& k : kbs) {
    const auto level = level_of(k);
    if (!level) {
      std::cerr << "error: --kb expects on|o|mo|m|mm, got " << k << "\n";
      return kInput;
    }
    for (const auto& r : onr::detect_unsatisfiable(bundle.network, *level)) {
      incoherent = incoherent || !r.unsatisfiable.empty();
      if (as_json) {
        out.push_back({{"scope", r.scope}, {"unsatisfiable", r.unsatisfiable}});
        continue;
      }
      std::cout << r.scope << ":";
      if (r.unsatisfiable.empty()) std::cout << " none";
      for (const auto& x : r.unsatisfiable) std::cout << " " << x;
      std::cout << "\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return incoherent ? kDefect : kOk;
}

struct OracleChoice {
  std::unique_ptr<onr::Oracle> oracle;
  bool scripted = false;
};

OracleChoice choose_oracle(const onr::Bundle& bundle, const std::string& gold, const std::string& answers) {
  OracleChoice c;
  if (!answers.empty()) {
    c.oracle = std::make_unique<onr::ScriptedOracle>(onr::parse_answers(onr::read_file(answers)));
    c.scripted = true;
  } else if (!gold.empty()) {
    auto g = std::make_unique<onr::GoldOracle>(onr::parse_axiom_list(onr::read_file(gold)));
    if (!g->coherent()) throw onr::BundleError(gold + " is not coherent");
    c.oracle = std::move(g);
  } else if (bundle.gold) {
    c.oracle = std::make_unique<onr::GoldOracle>(*bundle.gold);
  } else if (bundle.answers) {
    c.oracle = std::make_unique<onr::ScriptedOracle>(*bundle.answers);
    c.scripted = true;
  } else {
    throw onr::BundleError("no oracle: pass --gold or --answers, or add gold.txt or answers.txt to the bundle");
  }
  return c;
}

std::optional<onr::ProbeSet> load_probe(const std::string& file, const onr::OntologyNetwork& net) {
  if (file.empty()) return std::nullopt;
  auto p = onr::ProbeSet::over(net.signature());
  p.extend(onr::parse_axiom_list(onr::read_file(file)));
  return p;
}

int cmd_repair(const std::string& bundle_dir, const PlanFlags& flags, const std::string& gold,
               const std::string& answers, const std::string& probe_file, const std::string& report,
               const std::string& out_dir) {
  const auto bundle = onr::load_bundle(bundle_dir);
  const auto plan = onr::plan_from_json(flags.to_json(), bundle.network);
  plan.validate();
  auto choice = choose_oracle(bundle, gold, answers);
  onr::RepairResult res;
  try {
    res = onr::run_repair(bundle.network, bundle.wrong, plan, *choice.oracle);
  } catch (const onr::NeedAnswers& e) {
    std::cerr << "error: the answers do not cover " << e.questions.size() << " question(s):\n";
    for (const auto& q : e.questions) std::cerr << "? " << q.axiom.functional() << "\n";
    return kInput;
  }
  const auto verify = onr::verify_repair(bundle.network, bundle.wrong, res, *choice.oracle);
  const auto document = onr::result_document(res, verify);
  const auto csv = onr::result_csv(res);
  std::optional<json> probe_json;
  if (auto probe = load_probe(probe_file, bundle.network)) {
    const auto c = onr::compare_tboxes(res.repaired.assemble(), bundle.network.assemble(), *choice.oracle, *probe);
    probe_json = json{{"completeness_vs_original", onr::to_string(c.completeness)},
                      {"incorrectness_vs_original", onr::to_string(c.incorrectness)},
                      {"probes", probe->axioms.size()}};
  }
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_text(fs::path(out_dir) / "result.json", document);
    write_text(fs::path(out_dir) / "table.csv", csv);
    write_text(fs::path(out_dir) / "trace.json", onr::trace_to_json(res.trace).dump(2) + "\n");
    json stats = json::parse(document)["stats"];
    write_text(fs::path(out_dir) / "stats.json", stats.dump(2) + "\n");
    if (probe_json) write_text(fs::path(out_dir) / "probe.json", probe_json->dump(2) + "\n");
  }
  if (report == "csv")
    std::cout << csv;
  else if (out_dir.empty() || report == "json")
    std::cout << document;
  if (probe_json) std::cerr << "probe: " << probe_json->dump() << "\n";
  if (!verify.ok()) {
    std::cerr << "verify_repair failed\n";
    return kDefect;
  }
  return kOk;
}

int cmd_compare(const std::string& bundle_dir, const PlanFlags& flags, const std::string& gold,
                const std::string& probe_file, const std::vector<std::string>& families, const std::string& out) {
  const auto bundle = onr::load_bundle(bundle_dir);
  const auto base = onr::plan_from_json(flags.to_json(), bundle.network);
  base.validate();
  std::vector<onr::Gci> gold_tbox;
  if (!gold.empty())
    gold_tbox = onr::parse_axiom_list(onr::read_file(gold));
  else if (bundle.gold)
    gold_tbox = *bundle.gold;
  else
    throw onr::BundleError("compare needs a gold TBox: pass --gold or add gold.txt to the bundle");
  const onr::GoldOracle oracle(gold_tbox);
  if (!oracle.coherent()) throw onr::BundleError("the gold TBox is not coherent");
  auto edges = onr::hasse_edges(base);
  if (!families.empty())
    std::erase_if(edges, [&](const onr::HasseEdge& e) {
      return std::find(families.begin(), families.end(), e.family) == families.end();
    });
  auto probe = load_probe(probe_file, bundle.network);
  if (!probe) probe = onr::ProbeSet::over(bundle.network.signature());
  const auto report = onr::check_hasse_orders(bundle.network, bundle.wrong, oracle, *probe, edges);
  const auto text = onr::hasse_to_json(report).dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    write_text(out, text);
  for (const auto& o : report.outcomes)
    if (!o.ok) std::cerr << "violated: " << o.edge->family << " " << o.edge->name << ": " << o.detail << "\n";
  return report.violations() ? kDefect : kOk;
}

onr::service::HttpServer* g_server = nullptr;

int cmd_serve(const std::string& host, int port, const std::string& journal, const std::string& static_dir) {
  onr::service::SessionStore store(journal.empty() ? std::nullopt : std::optional<fs::path>(journal));
  onr::service::HttpServer server(store,
                                  static_dir.empty() ? std::nullopt : std::optional<fs::path>(static_dir));
  const int bound = server.bind(host, port);
  if (bound < 0) {
    std::cerr << "error: cannot bind " << host << ":" << port << "\n";
    return kInput;
  }
  g_server = &server;
  std::signal(SIGINT, [](int) {
    if (g_server) g_server->stop();
  });
  std::signal(SIGTERM, [](int) {
    if (g_server) g_server->stop();
  });
  std::cout << "listening on http://" << host << ":" << bound << " (" << store.all().size()
            << " session(s) restored)" << std::endl;
  server.listen_after_bind();
  g_server = nullptr;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Debug and repair networks of EL ontologies and alignments"};
  app.require_subcommand(1);

  std::string bundle;
  auto* detect = app.add_subcommand("detect", "report unsatisfiable concepts per scope");
  std::vector<std::string> kbs{"on"};
  bool detect_json = false;
  detect->add_option("bundle", bundle, "bundle directory")->required();
  detect->add_option("--kb", kbs, "on|o|mo|m|mm (repeatable)")->delimiter(',');
  detect->add_flag("--json", detect_json, "JSON output");

  auto* repair = app.add_subcommand("repair", "debug and repair the wrong axioms of a bundle");
  PlanFlags repair_flags;
  std::string gold, answers, probe, report = "json", out_dir;
  repair->add_option("bundle", bundle, "bundle directory")->required();
  repair_flags.attach(*repair);
  repair->add_option("--gold", gold, "gold TBox answering validation questions");
  repair->add_option("--answers", answers, "scripted answers (yes/no lines)");
  repair->add_option("--probe", probe, "extra probe axioms for the original-vs-repaired comparison");
  repair->add_option("--report", report, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  repair->add_option("--out", out_dir, "write result.json, table.csv, trace.json and stats.json here");

  auto* compare = app.add_subcommand("compare", "check the predicted orderings between plans");
  PlanFlags compare_flags;
  std::vector<std::string> families;
  std::string compare_out;
  compare->add_option("bundle", bundle, "bundle directory")->required();
  compare_flags.attach(*compare);
  compare->add_option("--gold", gold, "gold TBox");
  compare->add_option("--probe", probe, "extra probe axioms");
  compare->add_option("--family", families, "edge families to check (default all)")->delimiter(',');
  compare->add_option("--out", compare_out, "write the ordering report here");

  auto* serve = app.add_subcommand("serve", "run the session API");
  std::string host = "127.0.0.1", journal, static_dir;
  int port = 8080;
  serve->add_option("--host", host);
  serve->add_option("--port", port);
  serve->add_option("--journal", journal, "directory of session journals");
  serve->add_option("--static", static_dir, "directory served at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*detect) return cmd_detect(bundle, kbs, detect_json);
    if (*repair) return cmd_repair(bundle, repair_flags, gold, answers, probe, report, out_dir);
    if (*compare) return cmd_compare(bundle, compare_flags, gold, probe, families, compare_out);
    if (*serve) return cmd_serve(host, port, journal, static_dir);
  } catch (const onr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInput;
  } catch (const onr::BundleError& e) {
    std::cerr << "bundle error: " << e.what() << "\n";
    return kInput;
  } catch (const onr::NetworkError& e) {
    std::cerr << "network error: " << e.what() << "\n";
    return kInput;
  } catch (const onr::InvalidPlan& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kInput;
  } catch (const onr::OracleRejectsW& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const onr::NotEntailedWrongAxiom& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const onr::NoFalseHittingSet& e) {
    std::cerr << "defect: " << e.what() << "\n";
    return kDefect;
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
