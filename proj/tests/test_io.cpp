#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include "ontorepair/io.hpp"
#include "support.hpp"

using namespace onr;
using namespace onr::testing;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("ontorepair_io_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void put(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(parse_gci("SubClassOf(And(D, E), Bottom)").str(), "D ⊓ E ⊑ ⊥");
  EXPECT_EQ(parse_gci("SubClassOf(A, A)").str(), "A ⊑ A");
  EXPECT_EQ(parse_gci("SubClassOf(Some(r, B), C)").str(), "∃r.B ⊑ C");
  EXPECT_EQ(parse_concept("And(A, And(C, B), A)"), parse_concept("And(A, B, C)"));
  EXPECT_TRUE(parse_concept("Top").is_top());
}

TEST(Parse, ErrorsCarryPosition) {
  try {
    parse_ontology("Ontology(X)\nSubClassOf(A, B)\nSubClassOf(A B)\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 3);
    EXPECT_GT(e.column, 1);
  }
  EXPECT_THROW(parse_ontology("SubClassOf(A, B)"), ParseError);
  EXPECT_THROW(parse_ontology("Ontology(X)\nClass(Top)"), ParseError);
  EXPECT_THROW(parse_alignment("Alignment(X, Y)\nMap(Z:a, Y:b)"), ParseError);
  EXPECT_THROW(parse_gci("SubClassOf(A, B) extra"), ParseError);
  EXPECT_THROW(parse_answers("maybe SubClassOf(A, B)"), ParseError);
  EXPECT_THROW(parse_answers("yes SubClassOf(A, B)\nno SubClassOf(A, B)"), ParseError);
}

TEST(Parse, CommentsAndBlankLines) {
  const auto o = parse_ontology("# header\nOntology(X) # name\n\nClass(Z)\nSubClassOf(A, B)  # told\n");
  EXPECT_EQ(o.name, "X");
  EXPECT_EQ(o.declared, (std::set<std::string>{"Z"}));
  ASSERT_EQ(o.axioms.size(), 1u);
}

TEST(RoundTrip, RandomAxiomLists) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const auto t = random_el_tbox(rng, 5, 6, 3);
    const auto text = write_axiom_list(t);
    const auto back = parse_axiom_list(text);
    ASSERT_EQ(back, t);
    ASSERT_EQ(write_axiom_list(back), text);
  }
}

TEST(RoundTrip, OntologyAlignmentAnswers) {
  OntologyText o{"X", {"Q"}, {atomic_gci("A", "B"), parse_gci("SubClassOf(Some(r, A), And(B, C))")}};
  const auto text = write_ontology(o);
  const auto back = parse_ontology(text);
  EXPECT_EQ(back.name, "X");
  EXPECT_EQ(back.axioms, o.axioms);
  EXPECT_EQ(write_ontology(back), text);

  AlignmentText a{"X", "Y", {atomic_gci("A", "a"), atomic_gci("b", "B")}, {{"X", "Y"}, {"Y", "X"}}};
  const auto at = write_alignment(a);
  EXPECT_EQ(at, "Alignment(X, Y)\nMap(X:A, Y:a)\nMap(Y:b, X:B)\n");
  EXPECT_EQ(write_alignment(parse_alignment(at)), at);

  const std::vector<std::pair<Gci, bool>> ans{{atomic_gci("A", "B"), true}, {atomic_gci("B", "A"), false}};
  const auto anst = write_answers(ans);
  const auto parsed = parse_answers(anst);
  EXPECT_EQ(parsed.at(atomic_gci("A", "B")), true);
  EXPECT_EQ(parsed.at(atomic_gci("B", "A")), false);
}

TEST(Bundle, LoadsFixture) {
  const auto b = load_bundle(ONTOREPAIR_FIXTURE_DIR "/basic_network");
  EXPECT_EQ(b.network.ontologies().size(), 2u);
  EXPECT_EQ(b.wrong.size(), 2u);
  ASSERT_TRUE(b.gold.has_value());
  EXPECT_EQ(b.gold->size(), 19u);
}

TEST(Bundle, RejectsBadInput) {
  auto d = temp_dir("bad");
  put(d / "a.ont", "Ontology(X)\nSubClassOf(A, B)\n");
  put(d / "m.aln", "Alignment(X, Nope)\n");
  EXPECT_THROW(load_bundle(d), BundleError);
  put(d / "m.aln", "Alignment(X, X)\nMap(X:Zed, X:A)\n");
  EXPECT_THROW(load_bundle(d), BundleError);
  fs::remove(d / "m.aln");
  put(d / "gold.txt", "SubClassOf(A, Bottom)\n");
  EXPECT_THROW(load_bundle(d), BundleError);
  put(d / "gold.txt", "SubClassOf(A, B)\n");
  put(d / "wrong.txt", "SubClassOf(A,\n");
  try {
    load_bundle(d);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.file, "wrong.txt");
    EXPECT_EQ(e.line, 1);
  }
  EXPECT_THROW(load_bundle(d / "missing"), BundleError);
  fs::remove_all(d);
}

TEST(Plans, JsonRoundTrip) {
  const auto f = basic_fixture();
  const auto j = nlohmann::json::parse(R"({"select": "s-all", "decide": "d-v-one", "remove": "r-one",
    "add_back": "ab-one", "weaken": "w-one", "update_w": "u-now", "complete": "c-one", "update_c": "u-end_one",
    "kb_ont": "mo", "kb_ont_for": {"O2": "o"}, "kb_map": "mm", "kb_map_for": {"O1-O2": "m"}, "add_set": "o",
    "finalize": ["O2", "O1-O2"], "strict_removal": true, "max_justifications": 5})");
  const auto p = plan_from_json(j, f.network);
  EXPECT_EQ(p.select, SelectMode::All);
  EXPECT_EQ(p.decide, DecideMode::ValidateOne);
  EXPECT_EQ(p.level_for(1), OntologyLevel::O);
  EXPECT_EQ(p.level_for(0), OntologyLevel::MO);
  EXPECT_EQ(p.level_for(AlignmentKey{0, 1}), AlignmentLevel::M);
  EXPECT_EQ(p.finalize.ontologies, (std::set<int>{1}));
  EXPECT_EQ(p.max_justifications, 5u);
  const auto back = plan_from_json(plan_to_json(p, f.network), f.network);
  EXPECT_EQ(back.label(), p.label());
  EXPECT_EQ(plan_from_json(nullptr, f.network).label(), RepairPlan::algorithm1().label());
  EXPECT_THROW(plan_from_json({{"kb_ont", "x"}}, f.network), InvalidPlan);
  EXPECT_THROW(plan_from_json({{"colour", "on"}}, f.network), InvalidPlan);
  EXPECT_THROW(plan_from_json({{"kb_ont_for", {{"O9", "o"}}}}, f.network), InvalidPlan);
  EXPECT_THROW(plan_from_json({{"finalize", {"O1-O9"}}}, f.network), InvalidPlan);
}

TEST(Reports, JsonAndCsv) {
  const auto f = basic_fixture();
  GoldOracle gold(f.gold);
  RepairPlan p;
  p.kb_ontology = OntologyLevel::O;
  p.kb_alignment = AlignmentLevel::M;
  const auto r = run_repair(f.network, f.wrong, p, gold);
  const auto v = verify_repair(f.network, f.wrong, r, gold);
  const auto j = result_to_json(r, &v);
  EXPECT_EQ(j["added"], nlohmann::json::array({"SubClassOf(f, b)"}));
  EXPECT_EQ(j["removed"].size(), 2u);
  EXPECT_TRUE(j["verify"]["ok"].get<bool>());
  EXPECT_EQ(j["stats"]["asked"], 4);
  const auto doc = result_document(r, v);
  EXPECT_EQ(doc.back(), '\n');
  EXPECT_EQ(nlohmann::json::parse(doc), j);
  const auto csv = result_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "step,axiom,for,scope,sub_size,sup_size,grid,sub,sup,kept");
  EXPECT_NE(csv.find("weaken,\"e ⊑ b\",\"e ⊑ b\",O(1),2,1,2,\"e f\",\"b\",\"f ⊑ b\""), std::string::npos);
  const auto gj = gci_to_json(parse_gci("SubClassOf(Some(r, A), Bottom)"));
  EXPECT_EQ(gj["lhs"]["kind"], "some");
  EXPECT_EQ(gj["lhs"]["filler"]["name"], "A");
  EXPECT_EQ(gj["rhs"]["kind"], "bottom");
}
