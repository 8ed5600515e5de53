#include <gtest/gtest.h>

#include <algorithm>

#include "ontorepair/repair_ops.hpp"
#include "support.hpp"

using namespace onr;
using namespace onr::testing;

namespace {

FilterTag tag_of(const CandidateResult& r, const Gci& g) {
  for (const auto& rec : r.log)
    if (rec.candidate == g) return rec.tag;
  ADD_FAILURE() << "no log entry for " << g.str();
  return FilterTag::Kept;
}

Gci g(const std::string& a, const std::string& b) { return atomic_gci(a, b); }

}  // namespace

TEST(Weaken, FiltersInOrder) {
  WeakenInput in;
  in.wrong = g("a", "b");
  in.scope = {g("x", "a"), g("a", "b"), g("b", "c")};
  in.candidates = {"a", "b", "c", "x"};
  in.redundancy_base = {g("x", "a"), g("b", "c")};
  GoldOracle gold({g("x", "b"), g("a", "c"), g("x", "c")});
  OracleSession oracle(gold);
  const auto r = weakened_axiom_set(in, oracle);
  EXPECT_EQ(r.sub, (std::set<std::string>{"a", "x"}));
  EXPECT_EQ(r.sup, (std::set<std::string>{"b", "c"}));
  EXPECT_EQ(r.grid_size, 4u);
  EXPECT_EQ(tag_of(r, g("a", "b")), FilterTag::Excluded);
  EXPECT_EQ(tag_of(r, g("x", "c")), FilterTag::Dominated);
  EXPECT_EQ(r.kept, (std::vector<Gci>{g("a", "c"), g("x", "b")}));
  EXPECT_EQ(oracle.stats().asked, 3u);
  EXPECT_EQ(oracle.stats().per_phase.at(Phase::Weaken), 3u);
}

TEST(Weaken, OracleFalseAndRedundant) {
  WeakenInput in;
  in.wrong = g("a", "b");
  in.scope = {g("x", "a"), g("a", "b"), g("b", "c"), g("x", "c")};
  in.candidates = {"a", "b", "c", "x"};
  in.redundancy_base = {g("x", "c")};
  GoldOracle gold({g("x", "c"), g("x", "a")});
  OracleSession oracle(gold);
  const auto r = weakened_axiom_set(in, oracle);
  EXPECT_EQ(tag_of(r, g("x", "b")), FilterTag::OracleFalse);
  EXPECT_EQ(tag_of(r, g("a", "c")), FilterTag::OracleFalse);
  EXPECT_EQ(tag_of(r, g("x", "c")), FilterTag::Redundant);
  EXPECT_TRUE(r.kept.empty());
}

TEST(Weaken, EquivalentCandidatesKeepOne) {
  WeakenInput in;
  in.wrong = g("a", "b");
  in.scope = {g("a", "b"), g("b", "b2"), g("b2", "b"), g("x", "a")};
  in.candidates = {"a", "b", "b2", "x"};
  GoldOracle gold({g("a", "b"), g("b", "b2"), g("b2", "b")});
  OracleSession oracle(gold);
  in.excluded = {};
  const auto r = weakened_axiom_set(in, oracle);
  // a ⊑ b is the wrong axiom itself; a ⊑ b2 is its equivalent and the only
  // survivor of the {a ⊑ b2} class.
  EXPECT_EQ(tag_of(r, g("a", "b")), FilterTag::Excluded);
  EXPECT_EQ(r.kept, (std::vector<Gci>{g("a", "b2")}));
}

TEST(Weaken, TieBreakPrefersOneOntologyThenLexicographic) {
  OntologyNetwork net;
  net.add_ontology("P", {g("x", "p")});
  net.add_ontology("Q", {g("q", "q2")});
  WeakenInput in;
  in.wrong = g("x", "z");
  in.scope = {g("x", "z"), g("z", "p"), g("p", "q"), g("q", "p")};
  in.candidates = {"p", "q", "x", "z"};
  GoldOracle gold({g("x", "p"), g("p", "q"), g("q", "p")});
  OracleSession oracle(gold);
  in.network = &net;
  auto r = weakened_axiom_set(in, oracle);
  EXPECT_EQ(r.kept, (std::vector<Gci>{g("x", "p")}));
  EXPECT_EQ(tag_of(r, g("x", "q")), FilterTag::TieBreak);
  in.network = nullptr;
  OracleSession again(gold);
  r = weakened_axiom_set(in, again);
  EXPECT_EQ(r.kept, (std::vector<Gci>{g("x", "p")}));
}

TEST(Complete, StrongestTrueAxioms) {
  // Weakened x ⊑ c; the gold also knows y ⊑ c and x ⊑ d with d ⊑ c.
  CompleteInput in;
  in.weakened = g("x", "c");
  in.scope = {g("x", "y"), g("d", "c"), g("x", "c")};
  in.candidates = {"c", "d", "x", "y"};
  in.dominance_base = {g("x", "y"), g("d", "c")};
  GoldOracle gold({g("x", "y"), g("d", "c"), g("y", "c"), g("x", "c")});
  OracleSession oracle(gold);
  const auto r = completed_axiom_set(in, oracle);
  EXPECT_EQ(r.sup, (std::set<std::string>{"c", "x", "y"}));  // Sup(x)
  EXPECT_EQ(r.sub, (std::set<std::string>{"c", "d", "x"}));  // Sub(c)
  EXPECT_EQ(r.kept, (std::vector<Gci>{g("y", "c")}));
  EXPECT_EQ(tag_of(r, g("x", "c")), FilterTag::Dominated);
  EXPECT_EQ(oracle.stats().per_phase.at(Phase::Complete), oracle.stats().asked);
}

TEST(Complete, KeepsWeakenedAxiomWhenNothingStronger) {
  CompleteInput in;
  in.weakened = g("x", "c");
  in.scope = {g("x", "c")};
  in.candidates = {"c", "x"};
  GoldOracle gold({g("x", "c")});
  OracleSession oracle(gold);
  const auto r = completed_axiom_set(in, oracle);
  EXPECT_EQ(r.kept, (std::vector<Gci>{g("x", "c")}));
}

TEST(RemovalModes, ApplyAndRestore) {
  const auto f = basic_fixture();
  std::vector<AxiomId> D;
  for (const auto& w : f.wrong) D.push_back(f.network.find_asserted(w).front());
  std::sort(D.begin(), D.end());
  EXPECT_EQ(apply_removal(f.network, D, RemoveMode::None).assemble(), f.network.assemble());
  const auto all = apply_removal(f.network, D, RemoveMode::All);
  EXPECT_EQ(all.asserted().size(), 12u);
  const auto one = apply_removal(f.network, D, RemoveMode::One, D[0]);
  EXPECT_EQ(one.asserted().size(), 13u);
  EXPECT_EQ(one.find(D[0]), nullptr);
  EXPECT_THROW(apply_removal(f.network, D, RemoveMode::One), UnknownAxiomId);
  EXPECT_THROW(apply_removal(f.network, D, RemoveMode::One, AxiomId{999}), UnknownAxiomId);
  const auto back = apply_add_back(all, f.network, D, AddBackMode::One, D[1]);
  EXPECT_NE(back.find(D[1]), nullptr);
  EXPECT_EQ(back.find(D[0]), nullptr);
  EXPECT_EQ(apply_add_back(all, f.network, D, AddBackMode::All).assemble(), f.network.assemble());
  EXPECT_EQ(apply_add_back(all, f.network, D, AddBackMode::None).assemble(), all.assemble());
  EXPECT_EQ(to_string(RemoveMode::One), "r-one");
  EXPECT_EQ(to_string(AddBackMode::All), "ab-all");
}
