#include <benchmark/benchmark.h>

#include <random>

#include "beldef/alt_orders.hpp"
#include "beldef/errors.hpp"
#include "beldef/instantiate.hpp"
#include "beldef/lcd.hpp"
#include "beldef/parser.hpp"
#include "beldef/zsystem.hpp"

using namespace beldef;

namespace {

KnowledgeBase make_base(int atoms, int rules, unsigned long seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    KnowledgeBase kb{Vocabulary(), DefaultBase()};
    for (int i = 0; i < atoms; ++i) kb.vocab.intern(std::string(1, static_cast<char>('a' + i)));
    std::uniform_int_distribution<int> pick(0, atoms - 1);
    auto literal = [&]() {
      Formula f = Formula::atom(pick(rng));
      return (rng() & 1) ? Formula::negate(f) : f;
    };
    for (int i = 0; i < rules; ++i) {
      Formula a = literal();
      Formula b = literal();
      if ((models(a, kb.vocab) & models(b, kb.vocab)).empty()) {
        --i;
        continue;
      }
      kb.base.add(std::move(a), std::move(b));
    }
    if (!stratify(kb.vocab, kb.base).consistent()) continue;
    try {
      solve(kb.vocab, kb.base);
      return kb;
    } catch (const SolveError&) {
    }
  }
}

void BM_Models(benchmark::State& state) {
  Vocabulary v;
  const int atoms = static_cast<int>(state.range(0));
  for (int i = 0; i < atoms; ++i) v.intern(std::string(1, static_cast<char>('a' + i)));
  Vocabulary scratch = v;
  const Formula f = parse_formula("(a & b) | (!c & d) | (e <-> !a)", scratch);
  for (auto _ : state) {
    benchmark::DoNotOptimize(models(f, scratch));
  }
}
BENCHMARK(BM_Models)->Arg(8)->Arg(16)->Arg(20);

void BM_Stratify(benchmark::State& state) {
  KnowledgeBase kb = make_base(5, static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stratify(kb.vocab, kb.base).layer_count());
  }
}
BENCHMARK(BM_Stratify)->Arg(4)->Arg(8);

void BM_Solve(benchmark::State& state) {
  KnowledgeBase kb = make_base(5, static_cast<int>(state.range(0)), 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(kb.vocab, kb.base).system.classes().size());
  }
}
BENCHMARK(BM_Solve)->Arg(3)->Arg(5)->Arg(7);

void BM_EntailLcd(benchmark::State& state) {
  KnowledgeBase kb = make_base(5, static_cast<int>(state.range(0)), 17);
  const LcdModel model = solve(kb.vocab, kb.base);
  Vocabulary scratch = kb.vocab;
  const Formula alpha = parse_formula("a & b", scratch);
  const Formula beta = parse_formula("c | !d", scratch);
  for (auto _ : state) {
    benchmark::DoNotOptimize(entails_lcd(scratch, model, alpha, beta));
  }
}
BENCHMARK(BM_EntailLcd)->Arg(3)->Arg(5)->Arg(7);

void BM_EntailZ(benchmark::State& state) {
  KnowledgeBase kb = make_base(5, static_cast<int>(state.range(0)), 19);
  Vocabulary scratch = kb.vocab;
  const Formula alpha = parse_formula("a & b", scratch);
  const Formula beta = parse_formula("c | !d", scratch);
  for (auto _ : state) {
    benchmark::DoNotOptimize(entails_z(scratch, kb.base, alpha, beta));
  }
}
BENCHMARK(BM_EntailZ)->Arg(4)->Arg(8);

void BM_Combine(benchmark::State& state) {
  KnowledgeBase kb = make_base(4, static_cast<int>(state.range(0)), 23);
  const LcdModel model = solve(kb.vocab, kb.base);
  const auto eps = eps_from_exponents(Rational(1, 100), class_exponents(model.system));
  for (auto _ : state) {
    benchmark::DoNotOptimize(combined_mass(kb.vocab, kb.base, eps).focals().size());
  }
}
BENCHMARK(BM_Combine)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
