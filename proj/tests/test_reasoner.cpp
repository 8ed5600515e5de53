#include <gtest/gtest.h>

#include <random>

#include "ontorepair/reasoner.hpp"
#include "support.hpp"

using namespace onr;
using namespace onr::testing;

namespace {

Gci sub(const std::string& a, const std::string& b) { return atomic_gci(a, b); }

std::vector<Gci> all_named_queries(const std::vector<std::string>& names, bool with_bottom) {
  std::vector<Gci> qs;
  for (const auto& a : names) {
    for (const auto& b : names)
      if (a != b) qs.push_back(sub(a, b));
    if (with_bottom) qs.push_back(sub(a, "bottom"));
  }
  return qs;
}

}  // namespace

TEST(Reasoner, ToldAndTransitive) {
  const std::vector<Gci> t{sub("A", "B"), sub("B", "C")};
  EXPECT_TRUE(entails(t, sub("A", "C")));
  EXPECT_FALSE(entails(t, sub("C", "A")));
  EXPECT_TRUE(entails(t, sub("A", "A")));
}

TEST(Reasoner, ConjunctionAndExistential) {
  // ∃r.A ⊑ B, C ⊑ ∃r.A  ⊨  C ⊑ B
  const std::vector<Gci> t{{Concept::exists("r", Concept::named("A")), Concept::named("B")},
                           {Concept::named("C"), Concept::exists("r", Concept::named("A"))}};
  EXPECT_TRUE(entails(t, sub("C", "B")));
  const Gci q{Concept::conj(Concept::named("C"), Concept::named("D")), Concept::named("B")};
  EXPECT_TRUE(entails(t, q));
  EXPECT_FALSE(entails(t, sub("B", "C")));
}

TEST(Reasoner, BottomPropagatesThroughSuccessors) {
  // A ⊑ ∃r.B, B ⊑ ⊥ makes A unsatisfiable, and so a subclass of everything.
  const std::vector<Gci> t{{Concept::named("A"), Concept::exists("r", Concept::named("B"))}, sub("B", "bottom"),
                           sub("Z", "Z2")};
  EXPECT_EQ(unsatisfiable_concepts(t), (std::set<std::string>{"A", "B"}));
  EXPECT_TRUE(entails(t, sub("A", "Z")));
  EXPECT_FALSE(entails(t, sub("A", "Z"), Semantics::Positive));
  EXPECT_TRUE(entails(t, sub("B", "bottom"), Semantics::Positive));
}

TEST(Reasoner, DisjointnessMakesUnsat) {
  const std::vector<Gci> t{{Concept::conj(Concept::named("D"), Concept::named("E")), Concept::bottom()},
                           sub("X", "D"), sub("X", "E")};
  EXPECT_EQ(unsatisfiable_concepts(t), (std::set<std::string>{"X"}));
}

TEST(Reasoner, AgreesWithCanonicalModelOnRandomElTboxes) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng(seed);
    const auto t = random_el_tbox(rng, 6, 8, 2);
    const auto names = name_pool(6);
    for (auto sem : {Semantics::Full, Semantics::Positive}) {
      const Classifier c(t, sem);
      for (const auto& q : all_named_queries(names, true))
        ASSERT_EQ(c.entails(q), model_entails(t, q, sem))
            << "seed " << seed << " query " << q.str() << (sem == Semantics::Full ? " full" : " positive");
    }
    for (int k = 0; k < 5; ++k) {
      const Gci q{random_concept(rng, names, 2), random_concept(rng, names, 2)};
      if (q.is_tautology()) continue;
      ASSERT_EQ(entails(t, q), model_entails(t, q)) << "seed " << seed << " query " << q.str();
    }
  }
}

TEST(Reasoner, AgreesWithReachabilityOnAtomicTboxes) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const auto t = random_atomic_tbox(rng, 8, 12);
    const Classifier c(t);
    for (const auto& q : all_named_queries(name_pool(8), true))
      ASSERT_EQ(c.entails(q), reach_entails(t, q)) << "seed " << seed << " " << q.str();
  }
}

TEST(Reasoner, NormalizationIsConservative) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    std::mt19937_64 rng(seed + 1000);
    const auto t = random_el_tbox(rng, 5, 7, 3);
    const auto nt = normalize(t);
    for (const auto& g : nt.axioms) ASSERT_TRUE(is_normal(g)) << g.str();
    for (const auto& [fresh, expr] : nt.fresh_map) ASSERT_TRUE(is_fresh_name(fresh));
    for (const auto& q : all_named_queries(name_pool(5), true))
      ASSERT_EQ(model_entails(nt.axioms, q), model_entails(t, q)) << "seed " << seed << " " << q.str();
  }
}

TEST(Reasoner, SubAndSupAreDual) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed + 7);
    const auto t = random_el_tbox(rng, 6, 9, 1);
    const auto names = name_pool(6);
    const std::set<std::string> cand(names.begin(), names.end());
    for (auto sem : {Semantics::Full, Semantics::Positive}) {
      const Classifier c(t, sem);
      for (const auto& x : names) {
        const auto subs = c.sub_names(Concept::named(x), cand);
        for (const auto& y : names)
          ASSERT_EQ(subs.count(y) > 0, c.sup_names(Concept::named(y), cand).count(x) > 0);
      }
    }
  }
}

TEST(Reasoner, QueryConceptsAreRegistered) {
  const std::vector<Gci> t{sub("A", "B"), sub("A", "C")};
  const Concept bc = Concept::conj(Concept::named("B"), Concept::named("C"));
  const Classifier c(t, Semantics::Full, {bc});
  EXPECT_TRUE(c.knows(bc));
  EXPECT_TRUE(c.subsumes(Concept::named("A"), bc));
  EXPECT_EQ(c.sub_names(bc, {"A", "B", "C"}), (std::set<std::string>{"A"}));
  EXPECT_EQ(c.signature(), (std::set<std::string>{"A", "B", "C"}));
}

TEST(Reasoner, SccConsequencesAreExactlyTheEntailedAtomicOnes) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::mt19937_64 rng(seed + 99);
    const auto t = random_atomic_tbox(rng, 6, 8);
    auto space = SccSpace::positive(std::set<std::string>{});
    const auto cons = scc_consequences(t, space);
    const std::set<Gci> got(cons.begin(), cons.end());
    const auto names = names_of(t);
    for (const auto& a : names)
      for (const auto& b : names) {
        if (a == b) continue;
        ASSERT_EQ(got.count(sub(a, b)) > 0, entails(t, sub(a, b), Semantics::Positive)) << a << " " << b;
      }
  }
}

TEST(Reasoner, BottomModuleKeepsEntailments) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed + 3);
    const auto t = random_el_tbox(rng, 6, 9, 2);
    const auto names = name_pool(6);
    for (int k = 0; k < 4; ++k) {
      const auto& a = names[rng() % 6];
      const auto& b = names[rng() % 6];
      const auto mod = bot_module(t, {a, b});
      std::vector<Gci> m;
      for (auto i : mod) m.push_back(t[i]);
      ASSERT_EQ(entails(m, sub(a, b)), entails(t, sub(a, b))) << "seed " << seed;
    }
  }
}
