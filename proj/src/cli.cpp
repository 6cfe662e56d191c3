/*
 * Copyright 2026 The roabp-order Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "roabp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "roabp/boost.hpp"
#include "roabp/errors.hpp"
#include "roabp/io.hpp"
#include "roabp/nisan.hpp"
#include "roabp/orderfind.hpp"
#include "roabp/reduction.hpp"
#include "roabp/witness.hpp"

namespace roabp::cli {

namespace {

using json = nlohmann::ordered_json;

/// Ordered key/value report. Text mode prints "key: value"; list values print one line
/// per item under the same key.
class Report {
 public:
  template <typename T>
  void add(const std::string& key, const T& value) {
    doc_[key] = value;
  }

  void print(std::ostream& out, bool as_json) const {
    if (as_json) {
      out << doc_.dump(2) << "\n";
      return;
    }
    for (const auto& [key, value] : doc_.items()) {
      if (value.is_array()) {
        for (const auto& item : value) out << key << ": " << text(item) << "\n";
      } else {
        out << key << ": " << text(value) << "\n";
      }
    }
  }

 private:
  static std::string text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

  json doc_ = json::object();
};

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

u64 parse_prime_text(const std::string& text, const std::string& source) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw InputError(source + " must be a decimal integer, got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw InputError(source + " out of range");
  }
}

void echo_config(Report& r, const RunConfig& cfg, const std::string& command) {
  r.add("command", command);
  r.add("prime", cfg.prime);
  r.add("seed", cfg.seed);
  r.add("budget_subsets", cfg.budget_subsets);
  r.add("budget_expansion", cfg.budget_expansion);
}

void check_file_prime(const RunConfig& cfg, const PrimeField& field) {
  if (cfg.prime_explicit && cfg.prime != field.modulus()) {
    throw InputError("--prime " + std::to_string(cfg.prime) + " conflicts with the input file's p=" +
                     std::to_string(field.modulus()));
  }
}

// Polynomial input from --poly or --roabp; exactly one must be given.
PolyOracle load_input(const RunConfig& cfg, const std::string& poly_path, const std::string& roabp_path) {
  if (poly_path.empty() == roabp_path.empty()) throw InputError("give exactly one of --poly or --roabp");
  PolyOracle f = poly_path.empty() ? roabp_oracle(io::load_roabp(roabp_path))
                                   : io::load_poly_oracle(poly_path, cfg.budget_expansion);
  check_file_prime(cfg, f.field());
  return f;
}

void report_lists(Report& r, const GoodSetLists& lists) {
  std::vector<std::size_t> sizes;
  for (const auto& level : lists.levels) sizes.push_back(level.size());
  r.add("level_sizes", join(sizes));
  r.add("subset_tests", lists.tests);
}

int report_order_outcome(Report& r, const FindOrderOutcome& outcome) {
  if (const auto* ok = std::get_if<OrderResult>(&outcome)) {
    r.add("status", "ok");
    r.add("order", ok->tau.to_string());
    r.add("claimed_width", ok->claimed_width);
    r.add("verification", to_string(ok->verification));
    if (ok->verification == Verification::exact) r.add("per_layer", join(ok->per_layer));
    report_lists(r, ok->lists);
    return kOk;
  }
  const auto& failure = std::get<NoPathFailure>(outcome);
  r.add("status", to_string(failure.kind));
  r.add("detail", failure.detail);
  report_lists(r, failure.lists);
  return failure.kind == FailureKind::budget ? kBudget : kNegative;
}

Order order_argument(const std::string& text) {
  std::ifstream file(text);
  if (file) {
    std::stringstream buffer;
    buffer << file.rdbuf();
    std::string content = buffer.str();
    auto pos = content.find("order");
    if (pos != std::string::npos) content = content.substr(pos + 5);
    return Order::parse(content);
  }
  return Order::parse(text);
}

// Names the unknown subcommand when the first positional word is not one; otherwise
// CLI11's own message.
std::string parse_diagnostic(const CLI::App& app, const std::vector<std::string>& args, const CLI::ParseError& e) {
  static const std::vector<std::string> kValued = {"--prime", "--seed", "--budget-subsets", "--budget",
                                                   "--budget-expansion"};
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (std::find(kValued.begin(), kValued.end(), a) != kValued.end()) {
      ++i;
      continue;
    }
    if (a.empty() || a[0] == '-') continue;
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    const bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* sub) { return sub->get_name() == a; });
    if (!known) return "unknown subcommand '" + a + "'";
    break;
  }
  std::string what = e.what();
  std::replace(what.begin(), what.end(), '\n', ' ');
  return what;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Order finding and width analysis for read-once oblivious algebraic branching programs", "roabp"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string prime_text;
  app.add_option("--prime", prime_text, "Odd prime modulus (default 2^61-1, or $ROABP_PRIME)");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--budget-subsets,--budget", cfg.budget_subsets, "Limit on subset rank tests");
  app.add_option("--budget-expansion", cfg.budget_expansion, "Limit on dense grid entries");
  app.add_flag("--json", cfg.json, "Print the report as JSON");
  app.add_flag("-v,--verbose", cfg.verbosity, "Verbosity");

  std::string poly_path, roabp_path, graph_path, out_path, subset_text, order_text, format_text = "sparse";
  std::string approx_name = "mock2";
  std::size_t width = 0, trials = kDefaultTrials;
  bool exact = false, min_width = false;
  std::optional<std::size_t> threshold;
  int n = 0;
  u64 d = 0, w = 0;
  unsigned k = 0;
  double epsilon = 0, alpha = 2.0;

  auto* rank_cmd = app.add_subcommand("rank", "Nisan rank at a subset, exact or by randomized threshold test");
  rank_cmd->add_option("--poly", poly_path, "Polynomial file")->required();
  rank_cmd->add_option("--subset", subset_text, "Comma-separated variable indices")->required();
  auto* exact_flag = rank_cmd->add_flag("--exact", exact, "Exact rank from the coefficient grid");
  auto* threshold_opt = rank_cmd->add_option("--threshold", threshold, "Test rank <= W");
  rank_cmd->add_option("--trials", trials, "Independent determinant trials");
  exact_flag->excludes(threshold_opt);

  auto add_order_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--poly", poly_path, "Polynomial file");
    cmd->add_option("--roabp", roabp_path, "ROABP file (queried as a black box)");
    cmd->add_option("--trials", trials, "Determinant trials per rank test");
  };
  auto* find_cmd = app.add_subcommand("find-order", "Find an order of width W (or the least width with --min-width)");
  add_order_inputs(find_cmd);
  find_cmd->add_option("--width", width, "Target width");
  find_cmd->add_flag("--min-width", min_width, "Search for the least width");
  auto* minw_cmd = app.add_subcommand("min-width", "Least width found by doubling and binary search");
  add_order_inputs(minw_cmd);

  auto* decide_cmd = app.add_subcommand("decide-width", "Exact decision: is there an order of width <= W?");
  decide_cmd->add_option("--poly", poly_path, "Polynomial file")->required();
  decide_cmd->add_option("--width", width, "Width bound")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Gadget polynomial of a graph");
  reduce_cmd->add_option("--graph", graph_path, "Graph file")->required();
  reduce_cmd->add_option("--out", out_path, "Output polynomial file")->required();

  auto* certify_cmd = app.add_subcommand("certify", "Check rank = 2 + cut on every bipartition");
  certify_cmd->add_option("--graph", graph_path, "Graph file")->required();

  auto* cutwidth_cmd = app.add_subcommand("cutwidth", "Exact cutwidth by exhaustive search");
  cutwidth_cmd->add_option("--graph", graph_path, "Graph file")->required();

  auto* witness_cmd = app.add_subcommand("witness", "Polynomial of small width in an order but large rank at T");
  witness_cmd->add_option("--n", n, "Variables")->required();
  witness_cmd->add_option("--d", d, "Individual degree")->required();
  witness_cmd->add_option("--w", w, "Width")->required();
  witness_cmd->add_option("--subset", subset_text, "The set T")->required();
  witness_cmd->add_option("--order", order_text, "Order file or comma list (default identity)");
  witness_cmd->add_option("--out", out_path, "Write here instead of standard output");

  auto* boost_cmd = app.add_subcommand("boost", "k-th tensor power g of a polynomial");
  boost_cmd->add_option("--poly", poly_path, "Polynomial file")->required();
  boost_cmd->add_option("--k", k, "Power")->required();
  boost_cmd->add_option("--out", out_path, "Output polynomial file")->required();
  boost_cmd->add_option("--format", format_text, "sparse or dense");

  auto* ptas_cmd = app.add_subcommand("ptas", "Approximation scheme over an approximate order finder");
  ptas_cmd->add_option("--poly", poly_path, "Polynomial file")->required();
  ptas_cmd->add_option("--epsilon", epsilon, "Target accuracy")->required();
  ptas_cmd->add_option("--alpha", alpha, "Declared ratio of the inner finder");
  ptas_cmd->add_option("--approx", approx_name, "Inner finder")->check(CLI::IsMember({"brute", "mock2"}));

  auto* sample_cmd = app.add_subcommand("sample-roabp", "Random ROABP with i.i.d. uniform coefficient matrices");
  sample_cmd->add_option("--n", n, "Variables")->required();
  sample_cmd->add_option("--d", d, "Individual degree")->required();
  sample_cmd->add_option("--w", w, "Width")->required();
  sample_cmd->add_option("--order", order_text, "Order as a comma list (default identity)");
  sample_cmd->add_option("--out", out_path, "Write here instead of standard output");

  auto* expand_cmd = app.add_subcommand("expand", "Coefficient grid of an ROABP");
  expand_cmd->add_option("--roabp", roabp_path, "ROABP file")->required();
  expand_cmd->add_option("--out", out_path, "Output polynomial file")->required();
  expand_cmd->add_option("--format", format_text, "sparse or dense");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err) == 0 ? kOk : kBadInput;
    err << "error: " << parse_diagnostic(app, args, e) << "\n";
    return kBadInput;
  }

  try {
    if (!prime_text.empty()) {
      cfg.prime = parse_prime_text(prime_text, "--prime");
      cfg.prime_explicit = true;
    } else if (const char* env = std::getenv("ROABP_PRIME"); env != nullptr && *env != '\0') {
      cfg.prime = parse_prime_text(env, "ROABP_PRIME");
    }
    const PrimeField field(cfg.prime);
    Report r;

    if (rank_cmd->parsed()) {
      if (!exact && !threshold) throw InputError("rank needs --exact or --threshold");
      echo_config(r, cfg, "rank");
      PolyOracle f = io::load_poly_oracle(poly_path, cfg.budget_expansion);
      check_file_prime(cfg, f.field());
      const VarSubset t = VarSubset::parse(f.num_vars(), subset_text);
      r.add("subset", t.to_string());
      if (exact) {
        r.add("mode", "exact");
        r.add("rank", nisan_rank(expand_oracle(f, cfg.budget_expansion), t));
      } else {
        Rng rng(cfg.seed);
        auto report = prob_rank_at_most(f, t, *threshold, static_cast<int>(trials), rng);
        r.add("mode", "threshold");
        r.add("threshold", *threshold);
        r.add("verdict", to_string(report.verdict));
        r.add("trivial", report.trivial);
        r.add("trials_run", report.trials);
        std::vector<std::string> statuses;
        for (std::size_t i = 0; i < report.trial_nonzero.size(); ++i)
          statuses.push_back(std::to_string(i + 1) + (report.trial_nonzero[i] ? " nonzero" : " zero"));
        r.add("trial", statuses);
        std::ostringstream bound;
        bound.precision(6);
        bound << report.failure_bound();
        r.add("failure_bound", bound.str());
      }
      r.print(out, cfg.json);
      return kOk;
    }

    if (find_cmd->parsed() || minw_cmd->parsed()) {
      const bool search = minw_cmd->parsed() || min_width;
      echo_config(r, cfg, search ? "min-width" : "find-order");
      PolyOracle f = load_input(cfg, poly_path, roabp_path);
      SearchOptions options;
      options.subset_budget = cfg.budget_subsets;
      options.expansion_budget = cfg.budget_expansion;
      options.trials = static_cast<int>(trials);
      Rng rng(cfg.seed);
      r.add("n", f.num_vars());
      r.add("d", f.degree());
      if (search) {
        auto outcome = min_width_search(f, rng, options);
        if (auto* ok = std::get_if<OrderResult>(&outcome)) {
          r.add("min_width", ok->claimed_width);
          int code = report_order_outcome(r, FindOrderOutcome{std::move(*ok)});
          r.print(out, cfg.json);
          return code;
        }
        const auto& failure = std::get<MinWidthFailure>(outcome);
        r.add("status", to_string(failure.kind));
        r.add("bracket_lo", failure.bracket_lo);
        r.add("bracket_hi", failure.bracket_hi);
        r.add("detail", failure.detail);
        r.print(out, cfg.json);
        return failure.kind == FailureKind::budget ? kBudget : kNegative;
      }
      if (width == 0) throw InputError("find-order needs --width W >= 1 or --min-width");
      r.add("width", width);
      int code = report_order_outcome(r, find_order(f, width, rng, options));
      r.print(out, cfg.json);
      return code;
    }

    if (decide_cmd->parsed()) {
      echo_config(r, cfg, "decide-width");
      DensePoly f = io::load_poly_dense(poly_path, cfg.budget_expansion);
      check_file_prime(cfg, f.field());
      if (f.num_vars() > kDefaultBruteForceCap) {
        throw InputError("deciding ROABP width exactly is NP-hard; the exhaustive decider is capped at n = " +
                         std::to_string(kDefaultBruteForceCap));
      }
      auto best = brute_force_best_order(f);
      const bool yes = best.width <= width;
      r.add("width", width);
      r.add("decision", yes ? "yes" : "no");
      r.add("min_width", best.width);
      r.add("order", best.tau.to_string());
      r.print(out, cfg.json);
      return yes ? kOk : kNegative;
    }

    if (reduce_cmd->parsed()) {
      echo_config(r, cfg, "reduce");
      Graph g = io::load_graph(graph_path);
      SparsePoly f = build_gadget_poly(g, field);
      io::save_poly(out_path, f);
      r.add("vertices", g.num_vertices());
      r.add("edges", g.num_edges());
      r.add("max_degree", g.max_degree());
      r.add("individual_degree", f.degree());
      r.add("terms", f.terms().size());
      r.add("out", out_path);
      r.print(out, cfg.json);
      return kOk;
    }

    if (certify_cmd->parsed()) {
      echo_config(r, cfg, "certify");
      Graph g = io::load_graph(graph_path);
      auto cert = certify_rank_cut_identity(g, field, cfg.budget_expansion);
      std::vector<std::string> lines;
      for (const auto& c : cert.partitions) {
        lines.push_back(c.side.to_string() + " rank=" + std::to_string(c.rank) +
                        " expected=" + std::to_string(c.expected) + (c.equal() ? " ok" : " MISMATCH"));
      }
      r.add("partition", lines);
      r.add("partitions_checked", cert.partitions.size());
      r.add("result", cert.pass ? "pass" : "fail");
      r.print(out, cfg.json);
      return cert.pass ? kOk : kNegative;
    }

    if (cutwidth_cmd->parsed()) {
      echo_config(r, cfg, "cutwidth");
      Graph g = io::load_graph(graph_path);
      auto best = cutwidth_exact(g);
      r.add("cutwidth", best.width);
      r.add("arrangement", best.order.to_string());
      r.add("roabp_width", best.width + 2);
      r.print(out, cfg.json);
      return kOk;
    }

    if (witness_cmd->parsed()) {
      const VarSubset t = VarSubset::parse(n, subset_text);
      const Order sigma = order_text.empty() ? Order::identity(n) : order_argument(order_text);
      SparsePoly f = dense_to_sparse(witness_general(field, n, d, w, t, sigma));
      if (out_path.empty()) {
        io::write_sparse_poly(out, f);
        return kOk;
      }
      io::save_poly(out_path, f);
      echo_config(r, cfg, "witness");
      r.add("order", sigma.to_string());
      r.add("subset", t.to_string());
      r.add("pairs", witness_pair_count(d, w));
      r.add("terms", f.terms().size());
      r.add("out", out_path);
      r.print(out, cfg.json);
      return kOk;
    }

    if (boost_cmd->parsed()) {
      echo_config(r, cfg, "boost");
      const auto format = io::parse_format(format_text);
      DensePoly f = io::load_poly_dense(poly_path, cfg.budget_expansion);
      check_file_prime(cfg, f.field());
      DensePoly g = tensor_power_dense(f, k, cfg.budget_expansion);
      io::save_poly(out_path, g, format);
      r.add("k", k);
      r.add("n", g.num_vars());
      r.add("base_degree", f.degree());
      r.add("tensored_degree", g.degree());
      r.add("out", out_path);
      r.print(out, cfg.json);
      return kOk;
    }

    if (ptas_cmd->parsed()) {
      echo_config(r, cfg, "ptas");
      PolyOracle f = io::load_poly_oracle(poly_path, cfg.budget_expansion);
      check_file_prime(cfg, f.field());
      ApproxOracle approx = approx_name == "brute" ? brute_force_approx(alpha, cfg.budget_expansion)
                                                   : mock_double_approx(cfg.budget_expansion);
      approx.alpha = alpha;
      auto result = width_ptas(f, epsilon, approx);
      r.add("approx", approx.name);
      r.add("alpha", alpha);
      r.add("epsilon", epsilon);
      r.add("k", result.k);
      r.add("order", result.order.to_string());
      r.add("tensored_width", result.tensored_width);
      r.add("width_estimate", result.width_estimate);
      r.add("order_width", exact_width_in_order(expand_oracle(f, cfg.budget_expansion), result.order).width);
      r.print(out, cfg.json);
      return kOk;
    }

    if (sample_cmd->parsed()) {
      const Order sigma = order_text.empty() ? Order::identity(n) : Order::parse(order_text);
      Rng rng(cfg.seed);
      Roabp roabp = sample_random_roabp(field, n, d, w, sigma, rng);
      if (out_path.empty()) {
        io::write_roabp(out, roabp);
        return kOk;
      }
      std::ofstream file(out_path);
      if (!file) throw InputError("cannot write '" + out_path + "'");
      io::write_roabp(file, roabp);
      echo_config(r, cfg, "sample-roabp");
      r.add("order", sigma.to_string());
      r.add("widths", join(roabp.widths()));
      r.add("out", out_path);
      r.print(out, cfg.json);
      return kOk;
    }

    if (expand_cmd->parsed()) {
      echo_config(r, cfg, "expand");
      Roabp roabp = io::load_roabp(roabp_path);
      check_file_prime(cfg, roabp.field());
      DensePoly f = roabp_to_dense(roabp, cfg.budget_expansion);
      io::save_poly(out_path, f, io::parse_format(format_text));
      r.add("n", f.num_vars());
      r.add("d", f.degree());
      r.add("nonzero_terms", dense_to_sparse(f).terms().size());
      r.add("out", out_path);
      r.print(out, cfg.json);
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  err << "error: no subcommand\n";
  return kBadInput;
}

}  // namespace roabp::cli
