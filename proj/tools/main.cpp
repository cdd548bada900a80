// beldef: nonmonotonic entailment over propositional default bases.
//
// Subcommands:
//   entail   one query against one engine
//   analyze  strata, chain, constraints, classes and the world table
//   compare  one query against all six engines
//   oracle   numeric cross-checks of the symbolic verdicts

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "beldef/alt_orders.hpp"
#include "beldef/errors.hpp"
#include "beldef/instantiate.hpp"
#include "beldef/lcd.hpp"
#include "beldef/parser.hpp"
#include "beldef/zsystem.hpp"

using nlohmann::json;
using namespace beldef;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;

struct QueryResult {
  std::string engine;
  std::string alpha;
  std::string beta;
  std::string verdict;
  json diagnostics = json::object();
};

std::string terms_str(const std::vector<EpsTerm>& terms) {
  std::string out = "{";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += ", ";
    out += terms[i].str();
  }
  return out + "}";
}

std::string classes_str(const DegreeSystem& system) {
  std::string out;
  const auto& classes = system.classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i > 0) out += "; ";
    std::vector<EpsTerm> sorted = classes[i];
    std::sort(sorted.begin(), sorted.end());
    out += "\xce\xbe" + std::to_string(i) + " = " + terms_str(sorted);
  }
  return out.empty() ? "(none)" : out;
}

json ids_json(const std::vector<int>& ids) { return json(ids); }

json strata_json(const Stratification& strat) {
  json out = json::array();
  for (const auto& layer : strat.strata) out.push_back(ids_json(layer));
  return out;
}

json classes_json(const DegreeSystem& system) {
  json out = json::array();
  for (const auto& cls : system.classes()) {
    json inner = json::array();
    std::vector<EpsTerm> sorted = cls;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& t : sorted) inner.push_back(t.str());
    out.push_back(inner);
  }
  return out;
}

json terms_json(const std::vector<EpsTerm>& terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back(t.str());
  return out;
}

std::vector<std::string> world_names(const Vocabulary& vocab, const std::vector<World>& worlds,
                                     std::size_t cap = 8) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < worlds.size() && i < cap; ++i) {
    out.push_back(world_name(vocab, worlds[i]));
  }
  return out;
}

QueryResult run_engine(const std::string& engine, const Vocabulary& vocab,
                       const DefaultBase& base, const Formula& alpha, const Formula& beta) {
  QueryResult r;
  r.engine = engine;
  r.alpha = alpha.to_string(vocab);
  r.beta = beta.to_string(vocab);

  const auto plain = [&](bool entailed) { r.verdict = entailed ? "entailed" : "not-entailed"; };

  if (engine == "z") {
    const Stratification strat = stratify(vocab, base);
    if (!strat.consistent()) throw InconsistentBaseError("base has no stratification");
    plain(entails_z(vocab, base, alpha, beta));
    r.diagnostics["strata"] = strata_json(strat);
    const auto za = formula_rank(vocab, base, strat, Formula::conj(alpha, beta));
    const auto zb = formula_rank(vocab, base, strat, Formula::conj(alpha, Formula::negate(beta)));
    r.diagnostics["rank_support"] = za ? json(*za) : json();
    r.diagnostics["rank_against"] = zb ? json(*zb) : json();
  } else if (engine == "p") {
    plain(entails_p(vocab, base, alpha, beta));
    r.diagnostics["reduction"] = "tolerance consistency of base + (alpha ~> !beta)";
  } else if (engine == "lcd") {
    const LcdModel model = solve(vocab, base);
    const LcdAnswer answer = query_lcd(vocab, model, alpha, beta);
    if (answer.entailed) {
      r.verdict = "entailed";
    } else if (answer.route == LcdAnswer::Route::Compared &&
               answer.verdict == OrderVerdict::SameOrder) {
      r.verdict = "not-entailed-ambiguous";
    } else if (answer.route == LcdAnswer::Route::Compared &&
               answer.verdict == OrderVerdict::Incomparable) {
      r.verdict = "not-entailed-incomparable";
    } else {
      r.verdict = "not-entailed";
    }
    r.diagnostics["classes"] = classes_json(model.system);
    r.diagnostics["support_terms"] = terms_json(answer.support);
    r.diagnostics["against_terms"] = terms_json(answer.against);
    if (answer.route == LcdAnswer::Route::Compared) {
      r.diagnostics["comparison"] = to_string(answer.verdict);
    }
    if (!model.warnings.empty()) r.diagnostics["warnings"] = model.warnings;
    if (!models(alpha, vocab).empty()) {
      r.diagnostics["preferred_worlds"] =
          world_names(vocab, preferred_models(vocab, model, alpha));
    }
  } else if (engine == "penalty") {
    const Stratification strat = stratify(vocab, base);
    if (!strat.consistent()) throw InconsistentBaseError("base has no stratification");
    plain(entails_penalty(vocab, base, alpha, beta));
    const auto ca = formula_cost(vocab, base, strat, Formula::conj(alpha, beta));
    const auto cb = formula_cost(vocab, base, strat, Formula::conj(alpha, Formula::negate(beta)));
    r.diagnostics["cost_support"] = ca ? json(*ca) : json();
    r.diagnostics["cost_against"] = cb ? json(*cb) : json();
  } else if (engine == "lex") {
    plain(entails_lex(vocab, base, alpha, beta));
  } else if (engine == "brewka") {
    plain(entails_brewka(vocab, base, alpha, beta));
  } else {
    throw Error("unknown engine: " + engine);
  }
  return r;
}

void print_result_text(const QueryResult& r) {
  std::cout << "engine: " << r.engine << "\n";
  std::cout << "alpha: " << r.alpha << "\n";
  std::cout << "beta: " << r.beta << "\n";
  std::cout << "verdict: " << r.verdict << "\n";
  for (const auto& [key, value] : r.diagnostics.items()) {
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
  }
}

json result_json(const QueryResult& r) {
  return json{{"engine", r.engine},
              {"alpha", r.alpha},
              {"beta", r.beta},
              {"verdict", r.verdict},
              {"diagnostics", r.diagnostics}};
}

struct CommonOptions {
  std::string kb_path;
  std::string format = "text";
  std::size_t max_atoms = Vocabulary::kDefaultCapacity;
  unsigned long long seed = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--kb", opt.kb_path, "knowledge base file")->required();
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-atoms", opt.max_atoms, "vocabulary capacity");
  cmd->add_option("--seed", opt.seed, "seed for randomized sampling");
}

int cmd_entail(const CommonOptions& opt, const std::string& engine, const std::string& alpha_text,
               const std::string& beta_text) {
  KnowledgeBase kb = load_kb(opt.kb_path, opt.max_atoms);
  const Formula alpha = parse_formula(alpha_text, kb.vocab);
  const Formula beta = parse_formula(beta_text, kb.vocab);
  const QueryResult r = run_engine(engine, kb.vocab, kb.base, alpha, beta);
  if (opt.format == "json") {
    std::cout << result_json(r).dump(2) << "\n";
  } else {
    print_result_text(r);
  }
  return kExitOk;
}

int cmd_compare(const CommonOptions& opt, const std::string& alpha_text,
                const std::string& beta_text) {
  KnowledgeBase kb = load_kb(opt.kb_path, opt.max_atoms);
  const Formula alpha = parse_formula(alpha_text, kb.vocab);
  const Formula beta = parse_formula(beta_text, kb.vocab);
  if (!stratify(kb.vocab, kb.base).consistent()) {
    throw InconsistentBaseError("base has no stratification");
  }
  std::vector<QueryResult> results;
  for (const char* engine : {"p", "z", "lcd", "penalty", "lex", "brewka"}) {
    results.push_back(run_engine(engine, kb.vocab, kb.base, alpha, beta));
  }
  if (opt.format == "json") {
    json out{{"alpha", results.front().alpha},
             {"beta", results.front().beta},
             {"results", json::array()}};
    for (const auto& r : results) out["results"].push_back(result_json(r));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "alpha: " << results.front().alpha << "\n";
    std::cout << "beta: " << results.front().beta << "\n";
    for (const auto& r : results) std::cout << r.engine << ": " << r.verdict << "\n";
  }
  return kExitOk;
}

constexpr std::size_t kWorldTableCap = 256;

int cmd_analyze(const CommonOptions& opt) {
  KnowledgeBase kb = load_kb(opt.kb_path, opt.max_atoms);
  const Vocabulary& vocab = kb.vocab;
  const DefaultBase& base = kb.base;
  const Stratification strat = stratify(vocab, base);

  json out;
  out["kb"] = opt.kb_path;
  json atoms = json::array();
  for (std::size_t i = 0; i < vocab.size(); ++i) atoms.push_back(vocab.name(static_cast<int>(i)));
  out["atoms"] = atoms;
  json rules = json::array();
  for (const auto& rule : base.rules()) {
    rules.push_back({{"id", rule.id}, {"rule", rule_to_string(vocab, rule)}});
  }
  out["rules"] = rules;

  if (!strat.consistent()) {
    out["strata"] = json();
    out["residue"] = ids_json(strat.residue);
  } else {
    out["strata"] = strata_json(strat);

    const ConsonantEbf ebf = lc_build(vocab, base);
    json chain = json::array();
    for (std::size_t i = 0; i < ebf.chain.size(); ++i) {
      const std::string mass =
          i == 0 ? "1-e1"
                 : "e" + std::to_string(i) + "-e" + std::to_string(i + 1);
      chain.push_back({{"worlds", ebf.chain[i].count()}, {"mass", mass}});
    }
    chain.push_back({{"worlds", WorldSet::all(vocab.size()).count()},
                     {"mass", "e" + std::to_string(ebf.chain.size())}});
    out["lc_chain"] = chain;

    try {
      const LcdModel model = solve(vocab, base);
      json cons = json::array();
      for (const auto& c : model.constraints) {
        cons.push_back({{"rule", c.rule_id},
                        {"support", terms_json(c.lhs)},
                        {"against", terms_json(c.rhs)}});
      }
      out["constraints"] = cons;
      json rounds = json::array();
      for (const auto& r : model.rounds) {
        rounds.push_back({{"round", r.round},
                          {"discharged", ids_json(r.discharged)},
                          {"class_terms", terms_json(r.class_terms)}});
      }
      out["solve_rounds"] = rounds;
      out["classes"] = classes_json(model.system);
      out["classes_line"] = classes_str(model.system);
      out["warnings"] = model.warnings;
      if (!model.attached_symbols.empty()) out["attached_symbols"] = model.attached_symbols;
    } catch (const SolveError& e) {
      out["solve_error"] = e.what();
    }

    json worlds = json::array();
    const std::uint32_t universe = vocab.world_count();
    for (std::uint32_t i = 0; i < universe && i < kWorldTableCap; ++i) {
      const World w{i};
      worlds.push_back({{"world", world_name(vocab, w)},
                        {"term", viol_term(vocab, base, w).str()},
                        {"rank", world_rank(vocab, base, strat, w)},
                        {"cost", penalty_cost(vocab, base, strat, w)}});
    }
    out["worlds"] = worlds;
    if (universe > kWorldTableCap) out["worlds_truncated"] = true;
  }

  if (opt.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "kb: " << opt.kb_path << "\n";
    std::cout << "atoms:";
    for (const auto& a : out["atoms"]) std::cout << " " << a.get<std::string>();
    std::cout << "\nrules:\n";
    for (const auto& r : out["rules"]) {
      std::cout << "  " << r["id"].get<int>() << ": " << r["rule"].get<std::string>() << "\n";
    }
    if (!strat.consistent()) {
      std::cout << "strata: none (no stratification)\n";
      std::cout << "residue: " << out["residue"].dump() << "\n";
    } else {
      std::cout << "strata:\n";
      for (std::size_t i = 0; i < strat.strata.size(); ++i) {
        std::cout << "  " << (i + 1) << ": " << json(strat.strata[i]).dump() << "\n";
      }
      std::cout << "lc-chain:\n";
      for (const auto& link : out["lc_chain"]) {
        std::cout << "  " << link["worlds"].get<std::size_t>() << " worlds, mass "
                  << link["mass"].get<std::string>() << "\n";
      }
      if (out.contains("solve_error")) {
        std::cout << "solve-error: " << out["solve_error"].get<std::string>() << "\n";
      } else {
        std::cout << "constraints:\n";
        for (const auto& c : out["constraints"]) {
          std::cout << "  rule " << c["rule"].get<int>() << ": max" << c["support"].dump()
                    << " >> max" << c["against"].dump() << "\n";
        }
        std::cout << "solve:\n";
        for (const auto& r : out["solve_rounds"]) {
          std::cout << "  round " << r["round"].get<int>() << ": discharged "
                    << r["discharged"].dump() << ", class " << r["class_terms"].dump() << "\n";
        }
        std::cout << "classes: " << out["classes_line"].get<std::string>() << "\n";
        for (const auto& w : out["warnings"]) {
          std::cout << "warning: " << w.get<std::string>() << "\n";
        }
      }
      std::cout << "worlds:\n";
      for (const auto& w : out["worlds"]) {
        std::cout << "  " << w["world"].get<std::string>() << " | term "
                  << w["term"].get<std::string>() << " | rank " << w["rank"].get<int>()
                  << " | cost " << w["cost"].get<long>() << "\n";
      }
      if (out.contains("worlds_truncated")) std::cout << "  ... (truncated)\n";
    }
  }
  return strat.consistent() ? kExitOk : kExitInconsistent;
}

int cmd_oracle(const CommonOptions& opt, const std::string& eps_list) {
  KnowledgeBase kb = load_kb(opt.kb_path, opt.max_atoms);
  const Vocabulary& vocab = kb.vocab;
  const DefaultBase& base = kb.base;
  if (!stratify(vocab, base).consistent()) {
    throw InconsistentBaseError("base has no stratification");
  }

  std::vector<Rational> rungs;
  {
    std::string item;
    std::istringstream in(eps_list);
    while (std::getline(in, item, ',')) {
      const Rational e = parse_rational(item);
      if (!(e > 0 && e < 1)) throw ParseError("base epsilon outside (0,1): " + item, 0);
      rungs.push_back(e);
    }
  }

  std::cout << "oracle: " << opt.kb_path << "\n";

  // Class-respecting exponents; uniform fallback when solving fails.
  std::map<int, long> exponents;
  const LcdModel* model_ptr = nullptr;
  std::optional<LcdModel> model;
  std::optional<std::mt19937_64> rng;
  if (opt.seed != 0) rng.emplace(opt.seed);
  try {
    model.emplace(solve(vocab, base));
    model_ptr = &*model;
    exponents = class_exponents(model->system, rng ? &*rng : nullptr);
  } catch (const SolveError& e) {
    std::cout << "note: no class partition (" << e.what() << "); using uniform exponents\n";
    for (const auto& rule : base.rules()) exponents[rule.id] = 1;
  }
  std::cout << "exponents:";
  for (const auto& [id, k] : exponents) std::cout << " e" << id << "=" << k;
  std::cout << "\n";

  // Distinct violation terms with a representative world each.
  std::map<EpsTerm, World> representatives;
  const std::uint32_t universe = vocab.world_count();
  for (std::uint32_t i = 0; i < universe; ++i) {
    representatives.emplace(viol_term(vocab, base, World{i}), World{i});
  }

  bool all_ok = true;
  for (const Rational& e : rungs) {
    std::cout << "eps " << to_string(e) << ":\n";
    const auto eps = eps_from_exponents(e, exponents);
    MassAssignment m = MassAssignment::vacuous(vocab.size());
    try {
      m = combined_mass(vocab, base, eps);
    } catch (const DegenerateMassError& err) {
      std::cout << "  combination conflict: " << err.what() << "\n";
      all_ok = false;
      continue;
    }
    std::cout << "  focal-elements: " << m.focals().size() << "\n";

    // combined plausibility of each world against its violation product
    Rational worst = 0;
    for (std::uint32_t i = 0; i < universe; ++i) {
      WorldSet s = WorldSet::none(vocab.size());
      s.insert(World{i});
      const Rational ratio =
          m.plausibility(s) / viol_product(vocab, base, eps, World{i});
      Rational gap = ratio - 1;
      if (gap < 0) gap = -gap;
      if (gap > worst) worst = gap;
    }
    const Rational bound = 32 * e;
    const bool ratio_ok = worst <= bound;
    std::cout << "  pl-ratio-gap: " << to_string(worst) << " (bound " << to_string(bound) << ") "
              << (ratio_ok ? "OK" : "VIOLATED") << "\n";
    all_ok = all_ok && ratio_ok;

    if (model_ptr != nullptr) {
      // strict symbolic verdicts against exact numeric plausibilities
      std::size_t confirmed = 0, violated = 0, same_order = 0;
      for (auto it1 = representatives.begin(); it1 != representatives.end(); ++it1) {
        for (auto it2 = std::next(it1); it2 != representatives.end(); ++it2) {
          const OrderVerdict v = model_ptr->system.compare(it1->first, it2->first);
          if (v == OrderVerdict::SameOrder && it1->first != it2->first) ++same_order;
          if (v != OrderVerdict::Greater && v != OrderVerdict::Smaller) continue;
          WorldSet s1 = WorldSet::none(vocab.size());
          s1.insert(it1->second);
          WorldSet s2 = WorldSet::none(vocab.size());
          s2.insert(it2->second);
          const bool numeric = v == OrderVerdict::Greater
                                   ? m.plausibility(s1) > m.plausibility(s2)
                                   : m.plausibility(s1) < m.plausibility(s2);
          (numeric ? confirmed : violated) += 1;
        }
      }
      std::cout << "  strict-pairs: " << confirmed << " confirmed, " << violated
                << " violated\n";
      if (same_order > 0) {
        std::cout << "  same-order-pairs: " << same_order
                  << " (no strict numeric separation expected)\n";
      }
      all_ok = all_ok && violated == 0;

      // constraint separations
      std::size_t cons_ok = 0, cons_bad = 0;
      for (const auto& rule : base.rules()) {
        const WorldSet ab = models(rule.antecedent, vocab) & models(rule.consequent, vocab);
        const WorldSet anb = models(rule.antecedent, vocab) - models(rule.consequent, vocab);
        if (anb.empty()) continue;
        (m.plausibility(ab) > m.plausibility(anb) ? cons_ok : cons_bad) += 1;
      }
      std::cout << "  rule-separations: " << cons_ok << " confirmed, " << cons_bad
                << " violated\n";
      all_ok = all_ok && cons_bad == 0;

      // conditional belief of each rule at this instantiation
      std::optional<Rational> min_bel;
      for (const auto& rule : base.rules()) {
        const WorldSet a = models(rule.antecedent, vocab);
        if (m.plausibility(a) == 0) continue;
        const Rational b = condition(m, a).belief(models(rule.consequent, vocab));
        if (!min_bel || b < *min_bel) min_bel = b;
      }
      if (min_bel) {
        const bool bel_ok = *min_bel >= 1 - bound;
        std::cout << "  rule-conditionals: min " << to_string(*min_bel) << " "
                  << (bel_ok ? "OK" : "VIOLATED") << "\n";
        all_ok = all_ok && bel_ok;
      }
    }
  }
  std::cout << "result: " << (all_ok ? "PASS" : "FAIL") << "\n";
  return all_ok ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonmonotonic entailment over propositional default bases"};
  app.require_subcommand(1);

  CommonOptions entail_opt, analyze_opt, compare_opt, oracle_opt;
  std::string engine, alpha_text, beta_text, eps_list = "1/100,1/10000,1/1000000";

  CLI::App* entail = app.add_subcommand("entail", "decide one entailment query");
  add_common(entail, entail_opt);
  entail->add_option("--engine", engine, "one of p, z, lcd, penalty, lex, brewka")
      ->required()
      ->check(CLI::IsMember({"p", "z", "lcd", "penalty", "lex", "brewka"}));
  entail->add_option("alpha", alpha_text, "antecedent formula")->required();
  entail->add_option("beta", beta_text, "consequent formula")->required();

  CLI::App* analyze = app.add_subcommand("analyze", "dump the compiled forms of a base");
  add_common(analyze, analyze_opt);

  CLI::App* compare = app.add_subcommand("compare", "run one query across all engines");
  add_common(compare, compare_opt);
  compare->add_option("alpha", alpha_text, "antecedent formula")->required();
  compare->add_option("beta", beta_text, "consequent formula")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "numeric cross-checks of symbolic verdicts");
  add_common(oracle, oracle_opt);
  oracle->add_option("--eps", eps_list, "comma-separated base epsilons");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (entail->parsed()) return cmd_entail(entail_opt, engine, alpha_text, beta_text);
    if (analyze->parsed()) return cmd_analyze(analyze_opt);
    if (compare->parsed()) return cmd_compare(compare_opt, alpha_text, beta_text);
    if (oracle->parsed()) return cmd_oracle(oracle_opt, eps_list);
  } catch (const InconsistentBaseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const SolveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what();
    if (e.line > 0) std::cerr << " (line " << e.line << ")";
    std::cerr << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
