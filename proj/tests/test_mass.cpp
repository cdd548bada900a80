#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "beldef/defaults.hpp"
#include "beldef/errors.hpp"
#include "beldef/instantiate.hpp"
#include "beldef/parser.hpp"
#include "beldef/mass.hpp"
#include "support/gen.hpp"

using namespace beldef;

namespace {

const std::string kPenguinKb = "atoms: b f p\nb ~> f\np ~> !f\np ~> b\n";

WorldSet set_of(std::size_t atoms, std::initializer_list<std::uint32_t> worlds) {
  WorldSet s = WorldSet::none(atoms);
  for (auto w : worlds) s.insert(World{w});
  return s;
}

MassAssignment random_mass(std::mt19937_64& rng, std::size_t atoms, int focals) {
  // Random positive weights on random nonempty sets, normalized. The
  // universe always carries some mass, so combinations never conflict
  // totally.
  std::vector<std::pair<WorldSet, Rational>> picks;
  picks.emplace_back(WorldSet::all(atoms), Rational(1));
  Rational total = 1;
  for (int i = 0; i < focals; ++i) {
    WorldSet s = WorldSet::none(atoms);
    const std::uint32_t universe = std::uint32_t{1} << atoms;
    for (std::uint32_t w = 0; w < universe; ++w) {
      if (rng() & 1) s.insert(World{w});
    }
    if (s.empty()) s.insert(World{static_cast<std::uint32_t>(rng() % universe)});
    const Rational weight(static_cast<int>(rng() % 7) + 1, 1);
    picks.emplace_back(std::move(s), weight);
    total += weight;
  }
  MassAssignment::Builder b(atoms);
  for (auto& [s, w] : picks) b.add(s, w / total);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("builder enforces the invariants") {
  CHECK_THROWS_AS(std::move(MassAssignment::Builder(2).add(WorldSet::none(2), Rational(1)))
                      .build(),
                  DegenerateMassError);
  CHECK_THROWS_AS(std::move(MassAssignment::Builder(2).add(WorldSet::all(2), Rational(1, 2)))
                      .build(),
                  DegenerateMassError);
  // merging entries and dropping zero mass
  MassAssignment m = std::move(MassAssignment::Builder(1)
                                   .add(WorldSet::all(1), Rational(1, 2))
                                   .add(WorldSet::all(1), Rational(1, 2))
                                   .add(set_of(1, {0}), Rational(0)))
                         .build();
  CHECK(m.focals().size() == 1);
}

TEST_CASE("belief and plausibility basics") {
  // m = {A: 1/2, universe: 1/2} over two atoms
  const WorldSet a = set_of(2, {0, 1});
  MassAssignment m = std::move(MassAssignment::Builder(2)
                                   .add(a, Rational(1, 2))
                                   .add(WorldSet::all(2), Rational(1, 2)))
                         .build();
  CHECK(m.belief(WorldSet::all(2)) == 1);
  CHECK(m.belief(WorldSet::none(2)) == 0);
  CHECK(m.belief(a) == Rational(1, 2));
  CHECK(m.plausibility(WorldSet::all(2)) == 1);
  const WorldSet disjoint = set_of(2, {2, 3});
  CHECK(m.plausibility(disjoint) == Rational(1, 2));
}

TEST_CASE("single-support stage of the penguin base") {
  KnowledgeBase kb = parse_kb(kPenguinKb);
  // innermost set: all three material counterparts hold
  WorldSet supported = WorldSet::all(3);
  for (const auto& r : kb.base.rules()) supported = supported & models(material(r), kb.vocab);
  const Rational e1(1, 1000);
  MassAssignment m = std::move(MassAssignment::Builder(3)
                                   .add(supported, 1 - e1)
                                   .add(WorldSet::all(3), e1))
                         .build();
  Vocabulary& v = kb.vocab;
  const auto worlds_of = [&](const char* text) {
    return models(parse_formula(text, v), v);
  };
  CHECK(m.plausibility(worlds_of("b & f")) == 1);
  CHECK(m.plausibility(worlds_of("b & !f")) == e1);
  CHECK(m.plausibility(worlds_of("p & b")) == e1);
  CHECK(m.plausibility(worlds_of("p & !b")) == e1);
}

TEST_CASE("duality and monotonicity") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 40; ++round) {
    const MassAssignment m = random_mass(rng, 3, 4);
    for (int i = 0; i < 10; ++i) {
      WorldSet a = WorldSet::none(3);
      for (std::uint32_t w = 0; w < 8; ++w) {
        if (rng() & 1) a.insert(World{w});
      }
      CHECK(m.plausibility(a) == 1 - m.belief(a.complement()));
      CHECK(m.belief(a) <= m.belief(a | set_of(3, {static_cast<std::uint32_t>(rng() % 8)})));
      CHECK(m.belief(a) <= m.plausibility(a));
    }
  }
}

TEST_CASE("simple support and consonance") {
  const WorldSet s = set_of(2, {0, 2});
  MassAssignment m = simple_support(s, Rational(1, 10));
  CHECK(m.focals().at(s) == Rational(9, 10));
  CHECK(m.focals().at(WorldSet::all(2)) == Rational(1, 10));
  CHECK(is_consonant(m));

  // support on the whole universe collapses to the vacuous assignment
  MassAssignment vac = simple_support(WorldSet::all(2), Rational(1, 10));
  CHECK(vac.focals().size() == 1);
  CHECK(is_consonant(MassAssignment::vacuous(2)));

  MassAssignment split = std::move(MassAssignment::Builder(2)
                                       .add(set_of(2, {0}), Rational(1, 2))
                                       .add(set_of(2, {1}), Rational(1, 2)))
                             .build();
  CHECK_FALSE(is_consonant(split));

  CHECK_THROWS_AS(simple_support(WorldSet::none(2), Rational(1, 10)), DegenerateMassError);
  CHECK_THROWS_AS(simple_support(s, Rational(3, 2)), DegenerateMassError);
}

TEST_CASE("conditioning") {
  const WorldSet s = set_of(2, {0, 1, 2});
  MassAssignment m = simple_support(s, Rational(1, 100));

  // conditioning on the universe is the identity
  ConditionalBelief on_all = condition(m, WorldSet::all(2));
  CHECK(on_all.belief(s) == m.belief(s));
  CHECK(on_all.belief(set_of(2, {3})) == m.belief(set_of(2, {3})));

  // for a simple support and A inside the support set, beliefs are 0/1
  const WorldSet a = set_of(2, {1});
  ConditionalBelief on_a = condition(m, a);
  CHECK(on_a.belief(set_of(2, {1, 3})) == 1);
  CHECK(on_a.belief(set_of(2, {0})) == 0);

  CHECK_THROWS_AS(condition(m, WorldSet::none(2)), DegenerateMassError);
}

TEST_CASE("combination basics") {
  std::mt19937_64 rng(43);
  const MassAssignment m = random_mass(rng, 3, 3);
  const MassAssignment vac = MassAssignment::vacuous(3);
  const MassAssignment both = combine(m, vac);
  CHECK(both.focals() == m.focals());

  // two simple supports on one set: the combined mass on it is 1 - e1*e2
  const WorldSet s = set_of(3, {1, 2, 5});
  const Rational e1(1, 10), e2(1, 7);
  MassAssignment c = combine(simple_support(s, e1), simple_support(s, e2));
  CHECK(c.focals().at(s) == 1 - e1 * e2);
  CHECK(c.focals().at(WorldSet::all(3)) == e1 * e2);

  // total conflict
  MassAssignment left = std::move(MassAssignment::Builder(1).add(set_of(1, {0}), 1)).build();
  MassAssignment right = std::move(MassAssignment::Builder(1).add(set_of(1, {1}), 1)).build();
  CHECK_THROWS_AS(combine(left, right), DegenerateMassError);
}

TEST_CASE("combination is commutative and associative") {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 25; ++round) {
    const MassAssignment m1 = random_mass(rng, 2, 3);
    const MassAssignment m2 = random_mass(rng, 2, 3);
    const MassAssignment m3 = random_mass(rng, 2, 2);
    CHECK(combine(m1, m2).focals() == combine(m2, m1).focals());
    CHECK(combine(combine(m1, m2), m3).focals() == combine(m1, combine(m2, m3)).focals());
  }
}

TEST_CASE("penguin combination: plausibility ratios and violated rules") {
  KnowledgeBase kb = parse_kb(kPenguinKb);
  const Rational e(1, 10);
  std::map<int, Rational> eps = {{1, e}, {2, e}, {3, e}};
  const MassAssignment m = combined_mass(kb.vocab, kb.base, eps);

  // world b, !f, p violates exactly the first rule
  Vocabulary& v = kb.vocab;
  const WorldSet w = models(parse_formula("b & !f & p", v), v);
  REQUIRE(w.count() == 1);
  CHECK(m.plausibility(w) == e);

  // ratio pl / e1 is exactly 1 here and stays 1 as e shrinks
  for (const Rational& base : {Rational(1, 100), Rational(1, 10000)}) {
    std::map<int, Rational> smaller = {{1, base}, {2, base}, {3, base}};
    CHECK(combined_mass(kb.vocab, kb.base, smaller).plausibility(w) == base);
  }
}

TEST_CASE("combined world plausibility tracks the violation product") {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 12; ++round) {
    KnowledgeBase kb = test::random_base(rng, {.max_atoms = 4, .max_rules = 4});
    for (const Rational& e : {Rational(1, 100), Rational(1, 10000), Rational(1, 1000000)}) {
      std::map<int, Rational> eps;
      for (const auto& r : kb.base.rules()) eps[r.id] = e;
      const MassAssignment m = combined_mass(kb.vocab, kb.base, eps);
      Rational worst = 0;
      for (std::uint32_t i = 0; i < kb.vocab.world_count(); ++i) {
        const World w{i};
        WorldSet singleton = WorldSet::none(kb.vocab.size());
        singleton.insert(w);
        const Rational ratio =
            m.plausibility(singleton) / viol_product(kb.vocab, kb.base, eps, w);
        Rational gap = ratio - 1;
        if (gap < 0) gap = -gap;
        if (gap > worst) worst = gap;
      }
      CHECK(worst <= 32 * e);
    }
  }
}

TEST_CASE("conditional belief of the penguin exception tends to one") {
  KnowledgeBase kb = parse_kb(kPenguinKb);
  Vocabulary& v = kb.vocab;
  const WorldSet bp = models(parse_formula("b & p", v), v);
  const WorldSet not_f = models(parse_formula("!f", v), v);

  Rational previous = -1;
  for (const Rational& e : {Rational(1, 100), Rational(1, 10000), Rational(1, 1000000)}) {
    // class-respecting weights: the general rule keeps the largest one
    std::map<int, Rational> eps = {{1, e}, {2, e * e}, {3, e * e}};
    const MassAssignment m = combined_mass(kb.vocab, kb.base, eps);
    const Rational b = condition(m, bp).belief(not_f);
    CHECK(b >= 1 - 10 * e);
    CHECK(b > previous);
    previous = b;
  }
}
