#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "beldef/errors.hpp"
#include "beldef/instantiate.hpp"
#include "beldef/parser.hpp"
#include "beldef/zsystem.hpp"
#include "support/gen.hpp"

using namespace beldef;

namespace {

const std::string kPenguinKb = "atoms: b f p\nb ~> f\np ~> !f\np ~> b\n";
const std::string kLegsKb = "atoms: b f p l\nb ~> f\np ~> !f\np ~> b\nb ~> l\n";
const std::string kWingsKb = "atoms: b f p m\nb ~> f\np ~> !f\np ~> b\nm ~> f\n";

Formula parse(const char* text, Vocabulary& v) { return parse_formula(text, v); }

World world_of(const Vocabulary& v, const char* text) {
  Vocabulary copy = v;
  const WorldSet w = models(parse_formula(text, copy), copy);
  REQUIRE(w.count() == 1);
  return w.worlds().front();
}

}  // namespace

TEST_CASE("tolerance on the penguin base") {
  KnowledgeBase kb = parse_kb(kPenguinKb);
  const auto& rules = kb.base.rules();
  CHECK(tolerated(kb.vocab, rules[0], kb.base));        // b ~> f
  CHECK_FALSE(tolerated(kb.vocab, rules[2], kb.base));  // p ~> b

  // against the empty context: only joint satisfiability matters
  DefaultBase empty;
  CHECK(tolerated(kb.vocab, rules[0], empty));
  Vocabulary v = kb.vocab;
  DefaultRule contradiction{9, parse("b", v), parse("!b", v)};
  CHECK_FALSE(tolerated(v, contradiction, empty));
}

TEST_CASE("stratification layers") {
  KnowledgeBase kb = parse_kb(kPenguinKb);
  const Stratification s = stratify(kb.vocab, kb.base);
  REQUIRE(s.consistent());
  REQUIRE(s.layer_count() == 2);
  CHECK(s.strata[0] == std::vector<int>{1});
  CHECK(s.strata[1] == std::vector<int>{2, 3});
  CHECK(s.layer_of(1) == 1);
  CHECK(s.layer_of(3) == 2);

  KnowledgeBase clash = parse_kb("a ~> b\na ~> !b\n");
  const Stratification bad = stratify(clash.vocab, clash.base);
  CHECK_FALSE(bad.consistent());
  CHECK(bad.residue.size() == 2);

  KnowledgeBase none = parse_kb("# nothing\n");
  const Stratification empty = stratify(none.vocab, none.base);
  CHECK(empty.consistent());
  CHECK(empty.layer_count() == 0);
}

TEST_CASE("least-committed chain of the penguin base") {
  KnowledgeBase kb = parse_kb(kPenguinKb);
  const ConsonantEbf ebf = lc_build(kb.vocab, kb.base);
  REQUIRE(ebf.chain.size() == 2);
  REQUIRE(ebf.layers.size() == 2);
  CHECK(ebf.layers[0] == std::vector<int>{1});
  CHECK(ebf.layers[1] == std::vector<int>{2, 3});

  // innermost element: models of all material counterparts, strictly
  // increasing chain
  WorldSet supported = WorldSet::all(kb.vocab.size());
  for (const auto& r : kb.base.rules()) supported = supported & models(material(r), kb.vocab);
  CHECK(ebf.chain[0] == supported);
  CHECK(ebf.chain[0].is_subset_of(ebf.chain[1]));
  CHECK(ebf.chain[0].count() < ebf.chain[1].count());

  // numeric instantiation is a consonant assignment
  const MassAssignment m =
      consonant_mass(kb.vocab, ebf, {Rational(1, 100), Rational(1, 10000)});
  CHECK(is_consonant(m));
  CHECK(m.focals().size() == 3);

  // single-rule base: two-level chain
  KnowledgeBase single = parse_kb("b ~> f\n");
  const ConsonantEbf one = lc_build(single.vocab, single.base);
  CHECK(one.chain.size() == 1);
  CHECK(one.chain[0] == models(parse_formula("!b | f", single.vocab), single.vocab));

  KnowledgeBase clash = parse_kb("a ~> b\na ~> !b\n");
  CHECK_THROWS_AS(lc_build(clash.vocab, clash.base), InconsistentBaseError);
}

TEST_CASE("chain layers equal the tolerance strata on random bases") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 200; ++round) {
    KnowledgeBase kb = test::random_base(rng, {.max_atoms = 4, .max_rules = 5});
    const Stratification s = stratify(kb.vocab, kb.base);
    REQUIRE(s.consistent());
    const ConsonantEbf ebf = lc_build(kb.vocab, kb.base);
    CHECK(ebf.layers == s.strata);
    // strictly increasing chain
    for (std::size_t i = 0; i + 1 < ebf.chain.size(); ++i) {
      CHECK(ebf.chain[i].is_subset_of(ebf.chain[i + 1]));
      CHECK(ebf.chain[i] != ebf.chain[i + 1]);
    }
  }
}

TEST_CASE("world ranks on the penguin base") {
  KnowledgeBase kb = parse_kb(kPenguinKb);
  const Stratification s = stratify(kb.vocab, kb.base);
  CHECK(world_rank(kb.vocab, kb.base, s, world_of(kb.vocab, "b & f & !p")) == 0);
  CHECK(world_rank(kb.vocab, kb.base, s, world_of(kb.vocab, "b & !f & !p")) == 1);
  CHECK(world_rank(kb.vocab, kb.base, s, world_of(kb.vocab, "b & !f & p")) == 1);
  CHECK(world_rank(kb.vocab, kb.base, s, world_of(kb.vocab, "b & f & p")) == 2);

  // every penguin world ranks at least 1
  Vocabulary v = kb.vocab;
  models(parse("p", v), v).for_each([&](World w) {
    CHECK(world_rank(kb.vocab, kb.base, s, w) >= 1);
  });
}

TEST_CASE("rank-based entailment") {
  KnowledgeBase kb = parse_kb(kPenguinKb);
  Vocabulary& v = kb.vocab;
  CHECK(entails_z(v, kb.base, parse("b & p", v), parse("!f", v)));
  CHECK(entails_z(v, kb.base, parse("b", v), parse("f", v)));
  CHECK_FALSE(entails_z(v, kb.base, parse("b & p", v), parse("f", v)));
  // irrelevant extra property
  CHECK(entails_z(v, kb.base, parse("b & r", v), parse("f", v)));

  KnowledgeBase legs = parse_kb(kLegsKb);
  CHECK_FALSE(entails_z(legs.vocab, legs.base, parse("p", legs.vocab), parse("l", legs.vocab)));

  KnowledgeBase wings = parse_kb(kWingsKb);
  CHECK(entails_z(wings.vocab, wings.base, parse("b & p & m", wings.vocab),
                  parse("!f", wings.vocab)));

  // empty base: classical entailment only
  KnowledgeBase none = parse_kb("");
  Vocabulary& nv = none.vocab;
  CHECK(entails_z(nv, none.base, parse("a & b", nv), parse("a", nv)));
  CHECK_FALSE(entails_z(nv, none.base, parse("a", nv), parse("b", nv)));
  CHECK(entails_z(nv, none.base, parse("a & !a", nv), parse("b", nv)));

  KnowledgeBase clash = parse_kb("a ~> b\na ~> !b\n");
  Vocabulary& cv = clash.vocab;
  CHECK_THROWS_AS(entails_z(cv, clash.base, parse("a", cv), parse("b", cv)),
                  InconsistentBaseError);
}

TEST_CASE("preferential entailment via the consistency reduction") {
  KnowledgeBase kb = parse_kb(kPenguinKb);
  Vocabulary& v = kb.vocab;
  CHECK(entails_p(v, kb.base, parse("b & p", v), parse("!f", v)));
  CHECK(entails_p(v, kb.base, parse("b", v), parse("f", v)));
  CHECK_FALSE(entails_p(v, kb.base, parse("b & r", v), parse("f", v)));
  CHECK(entails_p(v, kb.base, parse("false", v), parse("f", v)));
  CHECK(entails_p(v, kb.base, parse("b & !b", v), parse("f", v)));
}

TEST_CASE("chain-based decision agrees with ranks everywhere") {
  std::mt19937_64 rng(67);
  for (int round = 0; round < 120; ++round) {
    KnowledgeBase kb = test::random_base(rng, {.max_atoms = 4, .max_rules = 5});
    for (int q = 0; q < 8; ++q) {
      const Formula alpha = test::random_formula(rng, kb.vocab, 2);
      const Formula beta = test::random_formula(rng, kb.vocab, 2);
      CHECK(entails_lc(kb.vocab, kb.base, alpha, beta) ==
            entails_z(kb.vocab, kb.base, alpha, beta));
    }
  }
}

TEST_CASE("rank-minimal models characterize the relation") {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 80; ++round) {
    KnowledgeBase kb = test::random_base(rng, {.max_atoms = 3, .max_rules = 4});
    const Stratification s = stratify(kb.vocab, kb.base);
    const Formula alpha = test::random_formula(rng, kb.vocab, 2);
    const Formula beta = test::random_formula(rng, kb.vocab, 2);
    const WorldSet a = models(alpha, kb.vocab);
    if (a.empty()) continue;

    std::optional<int> best;
    a.for_each([&](World w) {
      const int r = world_rank(kb.vocab, kb.base, s, w);
      if (!best || r < *best) best = r;
    });
    bool minimal_all_satisfy = true;
    const WorldSet b = models(beta, kb.vocab);
    a.for_each([&](World w) {
      if (world_rank(kb.vocab, kb.base, s, w) == *best && !b.contains(w)) {
        minimal_all_satisfy = false;
      }
    });
    CHECK(entails_z(kb.vocab, kb.base, alpha, beta) == minimal_all_satisfy);
  }
}

TEST_CASE("preferential consequences are rank consequences") {
  std::mt19937_64 rng(73);
  int p_hits = 0;
  for (int round = 0; round < 150; ++round) {
    KnowledgeBase kb = test::random_base(rng, {.max_atoms = 4, .max_rules = 4});
    const Formula alpha = test::random_formula(rng, kb.vocab, 2);
    const Formula beta = test::random_formula(rng, kb.vocab, 2);
    if (entails_p(kb.vocab, kb.base, alpha, beta)) {
      ++p_hits;
      CHECK(entails_z(kb.vocab, kb.base, alpha, beta));
    }
  }
  CHECK(p_hits > 10);
}
