#include <gtest/gtest.h>

#include <algorithm>

#include "ontorepair/network.hpp"
#include "support.hpp"

using namespace onr;
using namespace onr::testing;

namespace {

bool has(const std::vector<NetworkAxiom>& axs, const Gci& g) {
  return std::any_of(axs.begin(), axs.end(), [&](const NetworkAxiom& a) { return a.gci == g; });
}

}  // namespace

TEST(Network, FixtureShape) {
  const auto f = basic_fixture();
  ASSERT_EQ(f.network.ontologies().size(), 2u);
  EXPECT_EQ(f.network.ontologies()[0].name, "O1");
  EXPECT_EQ(f.network.ontologies()[0].signature, (std::set<std::string>{"A", "B", "C", "D", "E", "F"}));
  EXPECT_EQ(f.network.ontologies()[1].signature, (std::set<std::string>{"a", "b", "d", "e", "f"}));
  EXPECT_EQ(f.network.asserted().size(), 14u);
  EXPECT_EQ(f.network.home_of(atomic_gci("e", "b")), (Home{Home::Kind::Ontology, 1, -1}));
  EXPECT_EQ(f.network.home_of(atomic_gci("b", "D")), (Home{Home::Kind::Alignment, 0, 1}));
  EXPECT_TRUE(f.network.same_ontology("A", "F"));
  EXPECT_FALSE(f.network.same_ontology("A", "a"));
}

TEST(Network, MappingsMustUseBothSidesCorrectly) {
  OntologyNetwork n;
  n.add_ontology("X", {atomic_gci("A", "B")});
  n.add_ontology("Y", {atomic_gci("a", "b")});
  EXPECT_THROW(n.add_alignment(0, 0, {}), NetworkError);
  EXPECT_THROW(n.add_alignment(0, 1, {atomic_gci("A", "zz")}), NetworkError);
  EXPECT_THROW(n.add_alignment(0, 1, {{Concept::conj(Concept::named("A"), Concept::named("a")), Concept::named("b")}}),
               NetworkError);
  EXPECT_THROW(n.add_ontology("X", {}), NetworkError);
  n.add_alignment(1, 0, {atomic_gci("a", "A")});
  ASSERT_EQ(n.alignments().count({0, 1}), 1u);
}

TEST(Network, SnapshotsKeepIds) {
  const auto f = basic_fixture();
  const auto ids = f.network.find_asserted(atomic_gci("e", "b"));
  ASSERT_EQ(ids.size(), 1u);
  const auto* ax = f.network.find(ids[0]);
  ASSERT_NE(ax, nullptr);
  const auto without = f.network.without({ids[0]});
  EXPECT_EQ(without.find(ids[0]), nullptr);
  EXPECT_EQ(without.asserted().size(), 13u);
  const auto back = without.with_restored({*ax});
  ASSERT_NE(back.find(ids[0]), nullptr);
  EXPECT_EQ(back.assemble(), f.network.assemble());
  // Restoring twice changes nothing.
  EXPECT_EQ(back.with_restored({*ax}).assemble(), back.assemble());
}

TEST(Network, AddedAxiomsGoHome) {
  const auto f = basic_fixture();
  const auto n = f.network.with_added({atomic_gci("f", "b"), atomic_gci("b", "B")}, "plan");
  const auto& o2 = n.ontologies()[1].axioms;
  ASSERT_TRUE(has(o2, atomic_gci("f", "b")));
  const auto& m = n.alignments().at({0, 1});
  ASSERT_TRUE(has(m, atomic_gci("b", "B")));
  for (const auto& a : n.axioms())
    if (a.gci == atomic_gci("f", "b")) {
      EXPECT_EQ(a.prov.kind, Provenance::Kind::RepairAdded);
      EXPECT_EQ(a.prov.label, "plan");
    }
  EXPECT_THROW(f.network.with_added({atomic_gci("zz", "yy")}, "plan"), NetworkError);
}

TEST(Network, ScopedKbs) {
  const auto f = basic_fixture();
  const auto o1 = scoped_kb(f.network, KbScope::o(0));
  EXPECT_EQ(o1.axioms.size(), 4u);
  EXPECT_EQ(o1.candidates, f.network.ontologies()[0].signature);
  const MaterializedView mat(f.network, SccSpace::positive());
  const auto mo2 = scoped_kb(f.network, KbScope::mo(1), &mat);
  // e ⊑ b ⊑ D ⊑ B ⊑ A ⊑ a through the alignment.
  EXPECT_TRUE(has(mo2.axioms, atomic_gci("e", "a")));
  for (const auto& a : mo2.axioms) EXPECT_TRUE(scope_admits(f.network, KbScope::o(1), a.gci)) << a.gci.str();
  const auto m = scoped_kb(f.network, KbScope::m({0, 1}));
  EXPECT_EQ(m.axioms.size(), 7u);
  EXPECT_EQ(m.candidates, (std::set<std::string>{"A", "D", "E", "F", "a", "b", "e", "f"}));
  const auto on = scoped_kb(f.network, KbScope::on(), &mat);
  EXPECT_EQ(on.asserted_gcis().size(), 14u);
  EXPECT_GT(on.axioms.size(), 14u);
  EXPECT_THROW(scoped_kb(f.network, KbScope::o(5)), UnknownFocus);
  EXPECT_THROW(scoped_kb(f.network, KbScope::m({0, 5})), UnknownFocus);
}

TEST(Network, MaterializedSlicesAreEntailed) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = random_instance(seed);
    const MaterializedView mat(inst.network, SccSpace::positive());
    const auto all = inst.network.assemble();
    for (const auto& a : mat.all()) {
      ASSERT_TRUE(entails(all, a.gci, Semantics::Positive)) << a.gci.str();
      ASSERT_EQ(a.prov.kind, Provenance::Kind::Materialized);
    }
    for (std::size_t i = 0; i < inst.network.ontologies().size(); ++i)
      for (const auto& a : mat.ontology(static_cast<int>(i)))
        ASSERT_TRUE(scope_admits(inst.network, KbScope::o(static_cast<int>(i)), a.gci));
  }
}

TEST(Network, AddSetFilter) {
  const auto f = basic_fixture();
  const std::vector<Gci> a{atomic_gci("B", "b"), atomic_gci("E", "C"), atomic_gci("b", "B"), atomic_gci("e", "d")};
  EXPECT_EQ(filter_add_set(a, AddScope::ON, f.network), a);
  EXPECT_EQ(filter_add_set(a, AddScope::O, f.network), (std::vector<Gci>{atomic_gci("E", "C"), atomic_gci("e", "d")}));
  EXPECT_EQ(filter_add_set(a, AddScope::M, f.network), (std::vector<Gci>{atomic_gci("B", "b"), atomic_gci("b", "B")}));
}

TEST(Network, FinalizeAddsEntailedAxiomsOnly) {
  const auto f = basic_fixture();
  FinalizeTargets t;
  t.ontologies = {1};
  const auto fin = finalize_materialize(f.network, t, {atomic_gci("e", "a")});
  const auto& o2 = fin.ontologies()[1].axioms;
  EXPECT_FALSE(has(o2, atomic_gci("e", "a")));
  EXPECT_GT(o2.size(), f.network.ontologies()[1].axioms.size());
  for (const auto& a : o2) EXPECT_TRUE(entails(f.network.assemble(), a.gci)) << a.gci.str();
  EXPECT_EQ(finalize_materialize(f.network, {}, {}).assemble(), f.network.assemble());
}

TEST(Network, DetectionPerScope) {
  const auto f = basic_fixture();
  const auto on = detect_unsatisfiable(f.network, KbScope::Level::ON);
  ASSERT_EQ(on.size(), 1u);
  EXPECT_EQ(on[0].unsatisfiable, (std::set<std::string>{"E", "F", "e", "f"}));
  for (const auto& r : detect_unsatisfiable(f.network, KbScope::Level::O)) EXPECT_TRUE(r.unsatisfiable.empty());
  std::set<std::string> mo;
  for (const auto& r : detect_unsatisfiable(f.network, KbScope::Level::MO))
    mo.insert(r.unsatisfiable.begin(), r.unsatisfiable.end());
  EXPECT_EQ(mo, (std::set<std::string>{"E", "F", "e", "f"}));
  EXPECT_TRUE(detect_unsatisfiable(OntologyNetwork{}, KbScope::Level::ON).front().unsatisfiable.empty());
}
