#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "hypernorm/cost_calculus.hpp"
#include "hypernorm/errors.hpp"
#include "hypernorm/exact_lp.hpp"
#include "hypernorm/family_norm.hpp"
#include "hypernorm/hamming_entropy.hpp"
#include "hypernorm/json_io.hpp"
#include "hypernorm/projection.hpp"

namespace hypernorm::cli {

namespace {

using json_io::json;
using json_io::to_json;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitInput = 2;

// Sweeps report failures through this instead of returning early, so the
// whole report is still printed before exiting with status 1.
struct Outcome {
  json report;
  bool invariant_ok = true;
};

struct InputSource {
  std::string file;
  std::string inline_json;

  void attach(CLI::App* cmd) {
    cmd->add_option("--file", file, "Read the input JSON from this path");
    cmd->add_option("--json", inline_json, "Inline input JSON");
  }

  bool given() const { return !file.empty() || !inline_json.empty(); }

  json load() const {
    if (!file.empty() && !inline_json.empty()) {
      throw StructuralError("give either --file or --json, not both");
    }
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw StructuralError("cannot read input file '" + file + "'");
      return json::parse(in);
    }
    if (!inline_json.empty()) return json::parse(inline_json);
    throw StructuralError("no input: pass --file or --json");
  }
};

// Accepts a rational ("1/1024") or a power of two ("2^-40").
Rational parse_precision(const std::string& text) {
  if (text.rfind("2^-", 0) == 0) {
    const auto bits = std::stoul(text.substr(3));
    Rational r = 1;
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
    return r;
  }
  Rational r = parse_rational(text);
  if (r <= 0) throw DomainError("precision must be positive");
  return r;
}

Rational resolve_precision(const std::string& flag) {
  if (!flag.empty()) return parse_precision(flag);
  if (const char* env = std::getenv("HYPERNORM_PRECISION"); env && *env) {
    return parse_precision(env);
  }
  return default_precision();
}

json norm_report(const SetFamily& family) {
  const NormResult result = norm(family);
  json out = to_json(result);
  out["family"] = to_json(family);
  if (!result.is_infinite()) {
    const auto lp = family.incidence_lp();
    LPResult lp_result;
    lp_result.status = LPStatus::Optimal;
    lp_result.optimal_value = result.value;
    lp_result.primal = result.primal->values;
    lp_result.dual = result.dual->values;
    out["certificates_verified"] = verify_certificates(lp, lp_result).pass;
  }
  return out;
}

SetFamily generate_family(const std::string& kind, std::size_t n, std::size_t k) {
  if (kind == "k-subsets") return k_subsets_family(n, k);
  if (kind == "cyclic") return cyclic_family(n, k);
  if (kind == "degenerate") return degenerate_family(n, k);
  throw DomainError("unknown family kind '" + kind + "' (k-subsets, cyclic, degenerate)");
}

Rational closed_form_norm(const std::string& kind, std::size_t n, std::size_t k) {
  if (kind == "degenerate") return degenerate_norm(n, k);
  return k_subsets_norm(n, k);  // cyclic windows share the value n/k
}

Weighting constant_weighting(const SetFamily& family) {
  Rational w(1UL, static_cast<unsigned long>(family.size()));
  w.canonicalize();
  return Weighting{std::vector<Rational>(family.size(), w)};
}

std::vector<SetFamily> nonempty_member_families(std::size_t n) {
  const std::uint64_t count = (std::uint64_t{1} << n) - 1;
  std::vector<SetFamily> out;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << count); ++pick) {
    std::vector<CoordSet> sets;
    for (std::uint64_t s = 0; s < count; ++s) {
      if ((pick >> s) & 1U) sets.emplace_back(s + 1);
    }
    out.emplace_back(n, std::move(sets));
  }
  return out;
}

FiniteRelation relation_from_mask(const std::vector<std::uint32_t>& sizes,
                                  const std::vector<Tuple>& product, std::uint64_t mask) {
  std::vector<Tuple> tuples;
  for (std::size_t i = 0; i < product.size(); ++i) {
    if ((mask >> i) & 1U) tuples.push_back(product[i]);
  }
  return FiniteRelation(sizes, std::move(tuples));
}

FiniteRelation random_relation(const std::vector<std::uint32_t>& sizes,
                               const std::vector<Tuple>& product, std::mt19937_64& rng) {
  std::vector<Tuple> tuples;
  for (const auto& t : product) {
    if (rng() & 1U) tuples.push_back(t);
  }
  return FiniteRelation(sizes, std::move(tuples));
}

// Shearer with the constant and the LP-optimal weightings, plus the
// geometric witness, over every family of nonempty subsets.
Outcome shearer_sweep(std::size_t arity, std::uint32_t alphabet, std::size_t samples,
                      std::uint64_t seed) {
  if (arity < 1 || arity > 4) throw DomainError("sweep arity must lie in 1..4");
  if (alphabet < 1) throw DomainError("alphabet must be at least 1");
  const std::vector<std::uint32_t> sizes(arity, alphabet);
  const auto product = FiniteRelation::full(sizes).tuples();
  const bool exhaustive = arity <= 3 && alphabet <= 2;

  struct Prepared {
    SetFamily family;
    Weighting constant;
    Weighting optimal;
  };
  std::vector<Prepared> families;
  for (auto& f : nonempty_member_families(arity)) {
    auto result = norm(f);
    families.push_back({f, constant_weighting(f), *result.primal});
  }

  std::vector<FiniteRelation> relations;
  if (exhaustive) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << product.size()); ++mask) {
      relations.push_back(relation_from_mask(sizes, product, mask));
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) relations.push_back(random_relation(sizes, product, rng));
  }

  std::size_t checks = 0;
  std::size_t violations = 0;
  std::size_t witness_failures = 0;
  for (const auto& rel : relations) {
    for (const auto& p : families) {
      for (const auto* w : {&p.constant, &p.optimal}) {
        ++checks;
        if (!shearer_check(rel, p.family, *w).comparison.holds()) ++violations;
      }
      try {
        geometric_witness(rel, p.family);
      } catch (const InvariantViolation&) {
        ++witness_failures;
      }
    }
  }
  Outcome outcome;
  outcome.report = {{"sweep", "shearer"},
                    {"arity", arity},
                    {"alphabet", alphabet},
                    {"mode", exhaustive ? "exhaustive" : "sampled"},
                    {"relations", relations.size()},
                    {"families", families.size()},
                    {"checks", checks},
                    {"violations", violations},
                    {"witness_failures", witness_failures}};
  if (!exhaustive) outcome.report["seed"] = seed;
  outcome.invariant_ok = violations == 0 && witness_failures == 0;
  outcome.report["pass"] = outcome.invariant_ok;
  return outcome;
}

Outcome norm_oracle_sweep(std::size_t max_n) {
  if (max_n < 1 || max_n > 10) throw DomainError("--max-n must lie in 1..10");
  std::size_t checked = 0;
  json mismatches = json::array();
  auto record = [&](const std::string& kind, std::size_t n, std::size_t k) {
    ++checked;
    const Rational expected = closed_form_norm(kind, n, k);
    const NormResult result = norm(generate_family(kind, n, k));
    if (result.is_infinite() || *result.value != expected) {
      mismatches.push_back({{"kind", kind}, {"n", n}, {"k", k}});
    }
  };
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      record("k-subsets", n, k);
      if (k < n) record("cyclic", n, k);
      if (1 < k && k < n) record("degenerate", n, k);
    }
  }
  Outcome outcome;
  outcome.invariant_ok = mismatches.empty();
  outcome.report = {{"sweep", "norm-oracles"}, {"max_n", max_n}, {"checked", checked},
                    {"mismatches", mismatches}, {"pass", outcome.invariant_ok}};
  return outcome;
}

Outcome ball_sweep(std::size_t max_n) {
  if (max_n < 1 || max_n > 256) throw DomainError("--max-n must lie in 1..256");
  std::size_t checked = 0;
  json failures = json::array();
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t j = 0; 2 * j <= n; ++j) {
      ++checked;
      Rational q(static_cast<unsigned long>(j), static_cast<unsigned long>(n));
      q.canonicalize();
      const auto bound = ball_bound_check({n, q});
      if (bound.verdict != Verdict::Hold) failures.push_back({{"n", n}, {"j", j}});
    }
  }
  Outcome outcome;
  outcome.invariant_ok = failures.empty();
  outcome.report = {{"sweep", "balls"}, {"max_n", max_n}, {"checked", checked},
                    {"failures", failures}, {"pass", outcome.invariant_ok}};
  return outcome;
}

Outcome duality_sweep(std::size_t samples, std::uint64_t seed, std::size_t max_n) {
  if (max_n < 1 || max_n > 12) throw DomainError("--max-n must lie in 1..12");
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t n = 1 + rng() % max_n;
    const std::size_t members = 1 + rng() % 24;
    std::vector<CoordSet> sets;
    while (sets.size() < members) {
      const std::uint64_t bits = rng() & ((std::uint64_t{1} << n) - 1);
      if (bits != 0) sets.emplace_back(bits);
    }
    const SetFamily family(n, std::move(sets));
    const NormResult result = norm(family);
    if (result.primal->total() != *result.value || result.dual->total() != *result.value) {
      ++failures;
    }
  }
  Outcome outcome;
  outcome.invariant_ok = failures == 0;
  outcome.report = {{"sweep", "duality"}, {"samples", samples}, {"seed", seed},
                    {"failures", failures}, {"pass", outcome.invariant_ok}};
  return outcome;
}

void print_table(const json& j, std::ostream& out, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      print_table(value, out, prefix.empty() ? key : prefix + "." + key);
    }
  } else if (j.is_string()) {
    out << prefix << "\t" << j.get<std::string>() << "\n";
  } else {
    out << prefix << "\t" << j.dump() << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact set-family norms, projection inequalities and cost-function tools",
               "hypernorm"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string precision_flag;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--precision", precision_flag,
                 "Interval error bound, e.g. 2^-64 or 1/1000 (default from "
                 "HYPERNORM_PRECISION, else 2^-64)");

  std::function<Outcome()> action;

  // norm
  auto* norm_cmd = app.add_subcommand("norm", "Exact norm of a set family with certificates");
  InputSource norm_input;
  norm_input.attach(norm_cmd);
  std::vector<std::size_t> k_subsets, cyclic, degenerate;
  norm_cmd->add_option("--k-subsets", k_subsets, "N K: all K-subsets of {1..N}")->expected(2);
  norm_cmd->add_option("--cyclic", cyclic, "N K: the N cyclic windows of length K")->expected(2);
  norm_cmd->add_option("--degenerate", degenerate, "N K: K-subsets plus {1..K-1}")->expected(2);
  norm_cmd->callback([&] {
    action = [&] {
      const int given = norm_input.given() + !k_subsets.empty() + !cyclic.empty() + !degenerate.empty();
      if (given != 1) throw StructuralError("norm needs exactly one family source");
      if (!k_subsets.empty()) return Outcome{norm_report(k_subsets_family(k_subsets[0], k_subsets[1]))};
      if (!cyclic.empty()) return Outcome{norm_report(cyclic_family(cyclic[0], cyclic[1]))};
      if (!degenerate.empty()) return Outcome{norm_report(degenerate_family(degenerate[0], degenerate[1]))};
      return Outcome{norm_report(json_io::family_from_json(norm_input.load()))};
    };
  });

  // family-gen
  auto* gen_cmd = app.add_subcommand("family-gen", "Emit a special family with both norms");
  std::string kind;
  std::size_t gen_n = 0, gen_k = 0;
  gen_cmd->add_option("kind", kind, "k-subsets | cyclic | degenerate")->required();
  gen_cmd->add_option("n", gen_n)->required();
  gen_cmd->add_option("k", gen_k)->required();
  gen_cmd->callback([&] {
    action = [&] {
      const SetFamily family = generate_family(kind, gen_n, gen_k);
      const Rational closed = closed_form_norm(kind, gen_n, gen_k);
      const NormResult result = norm(family);
      Outcome outcome;
      outcome.report = to_json(family);
      outcome.report["kind"] = kind;
      outcome.report["closed_form_norm"] = to_json(closed);
      outcome.report["lp_norm"] = result.is_infinite() ? json("inf") : to_json(*result.value);
      outcome.invariant_ok = !result.is_infinite() && *result.value == closed;
      outcome.report["agree"] = outcome.invariant_ok;
      if (kind == "degenerate") {
        const auto [x, y] = degenerate_certificates(gen_n, gen_k);
        outcome.report["certificates"] = {{"primal", to_json(x.values)}, {"dual", to_json(y.values)}};
      }
      return outcome;
    };
  });

  // shearer
  auto* shearer_cmd = app.add_subcommand(
      "shearer", "Check d(R) <= prod d(pi_F R)^x_F; input {relation, family, weighting?}");
  InputSource shearer_input;
  shearer_input.attach(shearer_cmd);
  shearer_cmd->callback([&] {
    action = [&] {
      const json in = shearer_input.load();
      const auto rel = json_io::relation_from_json(in.at("relation"));
      const auto family = json_io::family_from_json(in.at("family"));
      Weighting weighting;
      if (in.contains("weighting")) {
        weighting.values = json_io::rationals_from_json(in.at("weighting"));
      } else {
        const auto result = norm(family);
        if (result.is_infinite()) throw DomainError("family contains the empty set");
        weighting = *result.primal;
      }
      const auto report = shearer_check(rel, family, weighting);
      Outcome outcome;
      outcome.report = {{"relation_size", to_json(report.relation_size)},
                        {"projected_sizes", to_json(report.projected_sizes)},
                        {"weighting", to_json(weighting.values)},
                        {"exponent_scale", report.exponent_scale.get_str()},
                        {"comparison", to_json(report.comparison)},
                        {"verdict", report.comparison.holds() ? "hold" : "violate"}};
      outcome.invariant_ok = report.comparison.holds();
      return outcome;
    };
  });

  // witness
  auto* witness_cmd = app.add_subcommand(
      "witness", "Find F with d(pi_F R) >= d(R)^(1/||F||); input {relation, family}");
  InputSource witness_input;
  witness_input.attach(witness_cmd);
  witness_cmd->callback([&] {
    action = [&] {
      const json in = witness_input.load();
      const auto w = geometric_witness(json_io::relation_from_json(in.at("relation")),
                                       json_io::family_from_json(in.at("family")));
      return Outcome{{{"index", w.index + 1},
                      {"set", w.set.coordinates()},
                      {"norm", to_json(w.norm)},
                      {"comparison", to_json(w.comparison)}}};
    };
  });

  // sharp-box
  auto* box_cmd = app.add_subcommand("sharp-box", "Sharpness box for a family; input {family, c}");
  InputSource box_input;
  box_input.attach(box_cmd);
  box_cmd->callback([&] {
    action = [&] {
      const json in = box_input.load();
      const auto family = json_io::family_from_json(in.at("family"));
      const Rational c = in.contains("c") ? json_io::rational_from_json(in.at("c")) : Rational(1, 2);
      const auto box = sharp_box(family, c);
      const auto report = sharpness_report(family, box, norm(family));
      Outcome outcome;
      outcome.report = to_json(box);
      outcome.report["target_exponent"] = to_json(report.target);
      outcome.report["projection_exponents"] = to_json(report.projection_exponents);
      outcome.report["dual_tight"] = report.dual_tight;
      outcome.report["ok"] = report.ok();
      outcome.invariant_ok = report.ok();
      return outcome;
    };
  });

  // lw
  auto* lw_cmd = app.add_subcommand("lw", "Loomis-Whitney check on a relation");
  InputSource lw_input;
  lw_input.attach(lw_cmd);
  lw_cmd->callback([&] {
    action = [&] {
      const auto cmp = loomis_whitney_check(json_io::relation_from_json(lw_input.load()));
      return Outcome{to_json(cmp), cmp.holds()};
    };
  });

  // cost
  auto* cost_cmd = app.add_subcommand(
      "cost", "Cost-function calculus; input {beta, p, approximation, I?, h?}");
  InputSource cost_input;
  cost_input.attach(cost_cmd);
  std::string mode = "total";
  cost_cmd->add_option("--mode", mode, "total | weak | i-weak | n-stages | change-set | limit")
      ->check(CLI::IsMember({"total", "weak", "i-weak", "n-stages", "change-set", "limit"}));
  cost_cmd->callback([&] {
    action = [&] {
      const json in = cost_input.load();
      const Rational precision = resolve_precision(precision_flag);
      auto cost_fn = [&] {
        return make_cost(json_io::beta_from_json(in.at("beta")),
                         in.contains("p") ? json_io::rational_from_json(in.at("p")) : Rational(1));
      };
      json report;
      if (mode == "limit") {
        const auto limit = limit_condition_report(cost_fn());
        json values = json::array();
        for (const auto& t : limit.final_values) {
          values.push_back({{"base", to_json(t.base)}, {"exponent", to_json(t.exponent)}});
        }
        return Outcome{{{"final_values", values}, {"non_increasing", limit.non_increasing}}};
      }
      const auto approx = json_io::approximation_from_json(in.at("approximation"));
      if (mode == "total") {
        report = to_json(total_cost(approx, cost_fn(), precision));
      } else if (mode == "weak") {
        report = to_json(weak_total_cost(approx, cost_fn(), precision));
      } else if (mode == "i-weak") {
        std::vector<std::size_t> idx = in.at("I").get<std::vector<std::size_t>>();
        report = to_json(i_weak_total_cost(approx, cost_fn(), StageIndexSequence(idx), precision));
      } else if (mode == "n-stages") {
        report = {{"n_stages", n_stages(approx)}};
      } else {
        const auto cs = change_set(approx, in.at("h").get<std::vector<std::size_t>>());
        report = {{"change_set", to_json(cs.set)}, {"I", cs.blocks.indices()}};
        if (in.contains("beta")) {
          const auto cost = cost_fn();
          const auto linear = make_cost(json_io::beta_from_json(in.at("beta")), Rational(1));
          report["total_linear_cost"] = {{"approximation", to_json(total_cost(approx, linear, precision))},
                                         {"change_set", to_json(total_cost(cs.set, linear, precision))}};
          report["weak_cost"] = {{"approximation", to_json(weak_total_cost(approx, cost, precision))},
                                 {"change_set_i_weak", to_json(i_weak_total_cost(cs.set, cost, cs.blocks, precision))}};
        }
      }
      report["mode"] = mode;
      return Outcome{report};
    };
  });

  // entropy
  auto* entropy_cmd = app.add_subcommand("entropy", "Binary entropy, Hamming balls, delta threshold");
  std::string q_text, delta_p;
  std::vector<std::string> ball_args, density_args;
  entropy_cmd->add_option("--q", q_text, "Enclose H(q)");
  entropy_cmd->add_option("--ball", ball_args, "N Q: ball size and the 2^(H(q)N) bound")->expected(2);
  entropy_cmd->add_option("--delta", delta_p, "P: largest dyadic delta with H(2 delta) < 1 - P");
  entropy_cmd->add_option("--density", density_args, "S T: Hamming density of two strings")->expected(2);
  entropy_cmd->callback([&] {
    action = [&] {
      const Rational precision = resolve_precision(precision_flag);
      json report;
      if (!q_text.empty()) {
        report["entropy"] = to_json(entropy(parse_rational(q_text), precision));
      }
      if (!ball_args.empty()) {
        const BallQuery query{std::stoul(ball_args[0]), parse_rational(ball_args[1])};
        const BigInt size = ball_size(query);
        json ball = {{"n", query.n}, {"q", to_json(query.q)}, {"radius", query.radius()},
                     {"size", size.get_str()}};
        if (query.q <= Rational(1, 2)) {
          const auto bound = ball_bound_check(query);
          ball["bound"] = to_json(bound.bound);
          ball["verdict"] = json_io::to_string(bound.verdict);
          ball["equality"] = bound.equality;
        }
        report["ball"] = ball;
      }
      if (!delta_p.empty()) {
        const auto d = delta_threshold(parse_rational(delta_p), precision);
        if (!d) throw DomainError("no delta = 2^-k with k <= 64 certifies H(2 delta) < 1 - p");
        report["delta"] = {{"k", d->k}, {"delta", to_json(d->delta)},
                           {"entropy_at_2delta", to_json(d->entropy_at_2delta)}};
        if (d->entropy_at_4delta) report["delta"]["entropy_at_4delta"] = to_json(*d->entropy_at_4delta);
      }
      if (!density_args.empty()) {
        report["density"] = to_json(hamming_density(density_args[0], density_args[1]));
      }
      if (report.empty()) throw StructuralError("entropy needs --q, --ball, --delta or --density");
      return Outcome{report};
    };
  });

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Batch checks over generated instances");
  bool sweep_shearer = false, sweep_norms = false, sweep_balls = false, sweep_duality = false;
  std::size_t arity = 3, samples = 1000, max_n = 8;
  std::uint32_t alphabet = 2;
  std::uint64_t seed = 1;
  sweep_cmd->add_flag("--shearer", sweep_shearer, "Shearer + witness over relations");
  sweep_cmd->add_flag("--norm-oracles", sweep_norms, "LP norms vs closed forms");
  sweep_cmd->add_flag("--balls", sweep_balls, "Hamming ball bound for all q = j/n <= 1/2");
  sweep_cmd->add_flag("--duality", sweep_duality, "Strong duality on random families");
  sweep_cmd->add_option("--arity", arity);
  sweep_cmd->add_option("--alphabet", alphabet);
  sweep_cmd->add_option("--samples", samples, "Sample count for sampled sweeps");
  sweep_cmd->add_option("--seed", seed);
  sweep_cmd->add_option("--max-n", max_n);
  sweep_cmd->callback([&] {
    action = [&] {
      if (sweep_shearer + sweep_norms + sweep_balls + sweep_duality != 1) {
        throw StructuralError("sweep needs exactly one of --shearer, --norm-oracles, --balls, --duality");
      }
      if (sweep_shearer) return shearer_sweep(arity, alphabet, samples, seed);
      if (sweep_norms) return norm_oracle_sweep(max_n);
      if (sweep_balls) return ball_sweep(max_n);
      return duality_sweep(samples, seed, max_n);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    resolve_precision(precision_flag);
    Outcome outcome = action();
    std::ostringstream buffer;
    if (format == "table") {
      print_table(outcome.report, buffer);
    } else {
      buffer << outcome.report.dump() << "\n";
    }
    out << buffer.str();
    if (!outcome.invariant_ok) {
      err << "error: internal invariant violated (see report)\n";
      return kExitInvariant;
    }
    return kExitOk;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
  } catch (const StructuralError& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << "\n";
  }
  return kExitInput;
}

}  // namespace hypernorm::cli
