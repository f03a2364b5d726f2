#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "matchlab/adversary.hpp"
#include "matchlab/balance.hpp"
#include "matchlab/numeric.hpp"
#include "matchlab/pricing.hpp"
#include "matchlab/ranking.hpp"
#include "matchlab/sequences.hpp"
#include "matchlab/verify.hpp"

namespace {

using matchlab::BigRat;
using matchlab::BipartiteGraph;
using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "matchlab/1";
constexpr int kExactModeCap = 64;  // rational mode is for exact verification at desk scale

struct CommonOptions {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool exact = false;
  int threads = 0;
  std::string graph_file;
};

int threads_from_env() {
  const char* env = std::getenv("MATCHLAB_THREADS");
  if (env == nullptr) return 0;
  return std::max(0, std::atoi(env));
}

std::string rat_str(const BigRat& x) { return x.str(); }

double rat_f64(const BigRat& x) { return matchlab::to_double(x); }

std::string dec_str(const matchlab::Dec50& x) {
  return x.str(50, std::ios_base::fmtflags(0));
}

BipartiteGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return matchlab::graph_from_json(buffer.str());
}

void emit(const std::string& command, const Json& config, const Json& result) {
  Json doc;
  doc["schema"] = kSchema;
  doc["command"] = command;
  doc["config"] = config;
  doc["result"] = result;
  std::cout << doc.dump(2) << "\n";
}

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<Json>>& rows) {
  for (std::size_t c = 0; c < header.size(); ++c) {
    std::cout << (c ? "," : "") << header[c];
  }
  std::cout << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::cout << (c ? "," : "") << csv_cell(row[c]);
    }
    std::cout << "\n";
  }
}

Json base_config(const std::string& subcommand, const CommonOptions& opts) {
  Json config;
  config["subcommand"] = subcommand;
  config["trials"] = opts.trials;
  config["seed"] = opts.seed;
  config["format"] = opts.format;
  config["exact"] = opts.exact;
  config["threads"] = opts.threads;
  if (!opts.graph_file.empty()) config["graph"] = opts.graph_file;
  return config;
}

// ---------------------------------------------------------------- tables ---

void cmd_tables_d(int n_max, const CommonOptions& opts) {
  const auto triangle = matchlab::d_triangle(n_max);
  Json config = base_config("tables d", opts);
  config["n_max"] = n_max;
  if (opts.format == "csv") {
    std::vector<std::string> header{"n"};
    for (int i = 1; i <= n_max; ++i) header.push_back("d(n," + std::to_string(i) + ")");
    header.push_back("a(n)");
    std::vector<std::vector<Json>> rows;
    for (int n = 1; n <= n_max; ++n) {
      std::vector<Json> row{n};
      for (int i = 1; i <= n_max; ++i) {
        row.push_back(i <= n ? Json(triangle.at(n, i).str()) : Json(""));
      }
      row.push_back(triangle.row_sum(n).str());
      rows.push_back(std::move(row));
    }
    emit_csv(header, rows);
    return;
  }
  Json result;
  auto rows = Json::array();
  for (int n = 1; n <= n_max; ++n) {
    Json row;
    row["n"] = n;
    auto cells = Json::array();
    for (int i = 1; i <= n; ++i) cells.push_back(triangle.at(n, i).str());
    row["d"] = std::move(cells);
    row["row_sum"] = triangle.row_sum(n).str();
    rows.push_back(std::move(row));
  }
  result["rows"] = std::move(rows);
  emit("tables d", config, result);
}

void cmd_tables_a(int n_max, const CommonOptions& opts) {
  Json config = base_config("tables a", opts);
  config["n_max"] = n_max;
  if (opts.format == "csv") {
    std::vector<std::vector<Json>> rows;
    for (int n = 1; n <= n_max; ++n) rows.push_back({n, matchlab::a_exact(n).str()});
    emit_csv({"n", "a"}, rows);
    return;
  }
  Json result;
  auto rows = Json::array();
  for (int n = 1; n <= n_max; ++n) {
    rows.push_back(Json{{"n", n}, {"a", matchlab::a_exact(n).str()}});
  }
  result["rows"] = std::move(rows);
  emit("tables a", config, result);
}

// ------------------------------------------------------------------- rho ---

void cmd_rho(int n, const CommonOptions& opts) {
  const auto rho = matchlab::rho_ranking_monotone(n);
  Json config = base_config("rho", opts);
  config["n"] = n;
  Json result;
  result["n"] = rho.n;
  result["a"] = rho.a.str();
  result["rho"] = rat_str(rho.rho);
  result["rho_decimal"] = rat_f64(rho.rho);
  result["nu"] = dec_str(rho.nu);
  result["nu_bound"] = dec_str(rho.nu_bound);
  if (opts.format == "csv") {
    emit_csv({"n", "a", "rho", "rho_decimal", "nu", "nu_bound"},
             {{rho.n, rho.a.str(), rat_str(rho.rho), rat_f64(rho.rho), dec_str(rho.nu),
               dec_str(rho.nu_bound)}});
    return;
  }
  emit("rho", config, result);
}

// --------------------------------------------------------------- ranking ---

void cmd_ranking_exact(int n, const CommonOptions& opts) {
  const auto e = matchlab::enumerate_ranking_exact(n, opts.threads);
  Json config = base_config("ranking exact", opts);
  config["n"] = n;
  Json result;
  result["n"] = n;
  result["sum_of_sizes"] = e.sum_of_sizes.str();
  result["expectation"] = rat_str(e.expectation);
  result["expectation_decimal"] = rat_f64(e.expectation);
  if (opts.format == "csv") {
    emit_csv({"n", "sum_of_sizes", "expectation", "expectation_decimal"},
             {{n, e.sum_of_sizes.str(), rat_str(e.expectation), rat_f64(e.expectation)}});
    return;
  }
  emit("ranking exact", config, result);
}

Json estimate_to_json(const matchlab::EstimateReport& report) {
  Json j;
  j["n"] = report.n;
  j["trials"] = report.trials;
  j["mean"] = report.mean;
  j["stderr"] = report.std_error;
  j["lower_bound_theory"] = report.lower_bound_theory;
  if (report.upper_bound_theory) {
    j["upper_bound_theory"] = *report.upper_bound_theory;
  } else {
    j["upper_bound_theory"] = nullptr;
  }
  j["seed"] = report.seed;
  return j;
}

void cmd_ranking_mc(int n, const CommonOptions& opts) {
  const BipartiteGraph g =
      opts.graph_file.empty() ? matchlab::make_monotone_graph(n) : load_graph(opts.graph_file);
  const auto report = matchlab::ranking_monte_carlo(g, opts.trials, opts.seed, opts.threads);
  Json config = base_config("ranking mc", opts);
  config["n"] = g.n();
  if (opts.format == "csv") {
    emit_csv({"n", "trials", "seed", "mean", "stderr", "lower_bound_theory",
              "upper_bound_theory"},
             {{report.n, report.trials, report.seed, report.mean, report.std_error,
               report.lower_bound_theory,
               report.upper_bound_theory ? Json(*report.upper_bound_theory) : Json("")}});
    return;
  }
  emit("ranking mc", config, estimate_to_json(report));
}

// --------------------------------------------------------------- balance ---

void require_exact_cap(int n) {
  if (n > kExactModeCap) {
    throw std::invalid_argument("exact rational mode supports n <= 64; rerun without --exact");
  }
}

template <class Num>
Json steps_to_json(const std::vector<matchlab::WaterFillStep<Num>>& steps) {
  auto arr = Json::array();
  for (const auto& step : steps) {
    Json s;
    s["online"] = step.online + 1;
    if constexpr (std::is_same_v<Num, double>) {
      s["budget"] = step.budget;
      s["threshold"] = step.threshold ? Json(*step.threshold) : Json(nullptr);
    } else {
      s["budget"] = rat_str(step.budget);
      s["threshold"] = step.threshold ? Json(rat_str(*step.threshold)) : Json(nullptr);
    }
    auto raised = Json::array();
    for (const auto& [v, add] : step.raised) {
      if constexpr (std::is_same_v<Num, double>) {
        raised.push_back(Json::array({v + 1, add}));
      } else {
        raised.push_back(Json::array({v + 1, rat_str(add)}));
      }
    }
    s["raised"] = std::move(raised);
    arr.push_back(std::move(s));
  }
  return arr;
}

void cmd_balance_run(int n, bool trace, const CommonOptions& opts) {
  const BipartiteGraph g =
      opts.graph_file.empty() ? matchlab::make_monotone_graph(n) : load_graph(opts.graph_file);
  Json config = base_config("balance run", opts);
  config["n"] = g.n();
  config["trace"] = trace;
  Json result;
  result["n"] = g.n();
  if (opts.exact) {
    require_exact_cap(g.n());
    const auto balance = matchlab::run_balance<BigRat>(g);
    result["size"] = rat_str(balance.size());
    result["size_decimal"] = rat_f64(balance.size());
    result["valid"] = matchlab::validate_fractional(g, balance.matching).valid();
    if (trace) result["steps"] = steps_to_json(balance.steps);
  } else {
    const auto balance = matchlab::run_balance<double>(g);
    result["size"] = balance.size();
    result["valid"] = matchlab::validate_fractional(g, balance.matching).valid();
    if (trace) result["steps"] = steps_to_json(balance.steps);
  }
  if (opts.format == "csv") {
    emit_csv({"n", "exact", "size", "size_decimal"},
             {{g.n(), opts.exact, result["size"],
               opts.exact ? result["size_decimal"] : result["size"]}});
    return;
  }
  emit("balance run", config, result);
}

void cmd_balance_closed_form(long long n, const CommonOptions& opts) {
  Json config = base_config("balance closed-form", opts);
  config["n"] = n;
  Json result;
  result["n"] = n;
  if (n <= kExactModeCap || opts.exact) {
    const auto closed = matchlab::balance_monotone_closed_form(static_cast<int>(n));
    result["k"] = closed.k;
    result["size"] = rat_str(closed.size);
    result["size_decimal"] = rat_f64(closed.size);
  } else {
    const auto closed = matchlab::balance_monotone_closed_form_f64(n);
    result["k"] = closed.k;
    result["size"] = closed.size;
    result["size_decimal"] = closed.size;
  }
  if (opts.format == "csv") {
    emit_csv({"n", "k", "size", "size_decimal"},
             {{n, result["k"], result["size"], result["size_decimal"]}});
    return;
  }
  emit("balance closed-form", config, result);
}

void cmd_balance_averaging(int n, const CommonOptions& opts) {
  BipartiteGraph g =
      opts.graph_file.empty() ? matchlab::make_monotone_graph(n) : load_graph(opts.graph_file);
  if (!opts.graph_file.empty()) g = matchlab::certify(std::move(g));
  Json config = base_config("balance averaging", opts);
  config["n"] = g.n();
  Json result;
  result["n"] = g.n();
  if (opts.exact) {
    require_exact_cap(g.n());
    const auto trace = matchlab::averaging_process<BigRat>(g);
    const auto balance = matchlab::run_balance<BigRat>(g);
    result["stop_round"] = trace.stop_round;
    result["total"] = rat_str(trace.total);
    result["balance_size"] = rat_str(balance.size());
    result["equals_balance"] = trace.total == balance.size();
    auto credited = Json::array();
    for (const auto& c : trace.credited) credited.push_back(rat_str(c));
    auto slack = Json::array();
    for (const auto& s : trace.slack) slack.push_back(rat_str(s));
    result["credited"] = std::move(credited);
    result["slack"] = std::move(slack);
  } else {
    const auto trace = matchlab::averaging_process<double>(g);
    const auto balance = matchlab::run_balance<double>(g);
    result["stop_round"] = trace.stop_round;
    result["total"] = trace.total;
    result["balance_size"] = balance.size();
    result["equals_balance"] =
        std::abs(trace.total - balance.size()) <= matchlab::kFloatTolerance;
    result["credited"] = trace.credited;
    result["slack"] = trace.slack;
  }
  if (opts.format == "csv") {
    emit_csv({"n", "stop_round", "total", "balance_size", "equals_balance"},
             {{g.n(), result["stop_round"], result["total"], result["balance_size"],
               result["equals_balance"]}});
    return;
  }
  emit("balance averaging", config, result);
}

// --------------------------------------------------------------- pricing ---

void cmd_pricing_mc(int n, const CommonOptions& opts) {
  const BipartiteGraph g = matchlab::make_monotone_graph(n);
  const auto matching = matchlab::find_max_matching(g);
  const auto report = matchlab::per_edge_bound_mc(g, matching, opts.trials, opts.seed,
                                                  opts.threads);
  Json config = base_config("pricing mc", opts);
  config["n"] = n;
  if (opts.format == "csv") {
    std::vector<std::vector<Json>> rows;
    for (const auto& e : report.edges) {
      rows.push_back({e.offline + 1, e.online + 1, e.mean, e.std_error, e.flagged});
    }
    emit_csv({"offline", "online", "mean", "stderr", "flagged"}, rows);
    return;
  }
  Json result;
  result["n"] = n;
  result["trials"] = report.trials;
  result["seed"] = report.seed;
  result["bound"] = matchlab::constants::one_minus_inv_e_f64();
  auto edges = Json::array();
  for (const auto& e : report.edges) {
    edges.push_back(Json{{"offline", e.offline + 1},
                         {"online", e.online + 1},
                         {"mean", e.mean},
                         {"stderr", e.std_error},
                         {"flagged", e.flagged}});
  }
  result["edges"] = std::move(edges);
  result["sum_of_means"] = report.sum_of_means;
  result["mean_price"] = report.mean_price;
  result["price_stderr"] = report.price_std_error;
  emit("pricing mc", config, result);
}

void cmd_pricing_slackness(int n, const CommonOptions& opts) {
  const auto report = matchlab::slackness_mc(n, opts.trials, opts.seed, opts.threads);
  Json config = base_config("pricing slackness", opts);
  config["n"] = n;
  Json result;
  result["n"] = n;
  result["trials"] = report.trials;
  result["seed"] = report.seed;
  result["violations"] = report.violations;
  result["max_excess"] = report.max_excess;
  result["mean_sum"] = report.mean_sum;
  result["sum_stderr"] = report.sum_std_error;
  result["expected_sum_bound"] = matchlab::constants::inv_e_f64();
  if (opts.format == "csv") {
    emit_csv({"n", "trials", "seed", "violations", "max_excess", "mean_sum", "sum_stderr"},
             {{n, report.trials, report.seed, report.violations, report.max_excess,
               report.mean_sum, report.sum_std_error}});
    return;
  }
  emit("pricing slackness", config, result);
}

// ------------------------------------------------------------- adversary ---

void cmd_adversary(int n, const std::string& alg_name, const CommonOptions& opts) {
  std::unique_ptr<matchlab::OnlineAlgorithm> alg;
  if (alg_name == "lowest") {
    alg = matchlab::make_lowest_index_greedy();
  } else if (alg_name == "highest") {
    alg = matchlab::make_highest_index_greedy();
  } else if (alg_name == "ranking-fixed-pi") {
    alg = matchlab::make_fixed_ranking_greedy(opts.seed == 0 ? 1 : opts.seed);
  } else {
    throw std::invalid_argument("unknown algorithm: " + alg_name);
  }
  const auto transcript = matchlab::run_adaptive_adversary(*alg, n);
  Json config = base_config("adversary", opts);
  config["n"] = n;
  config["alg"] = alg_name;
  if (opts.format == "csv") {
    std::vector<std::vector<Json>> rows;
    for (int j = 0; j < transcript.n; ++j) {
      rows.push_back({j + 1, transcript.decisions[j] == matchlab::kSkip
                                 ? Json("")
                                 : Json(transcript.decisions[j] + 1)});
    }
    emit_csv({"arrival", "decision"}, rows);
    return;
  }
  Json result;
  result["algorithm"] = transcript.algorithm;
  result["n"] = transcript.n;
  result["graph"] = Json::parse(matchlab::graph_to_json(transcript.graph));
  auto decisions = Json::array();
  for (int d : transcript.decisions) {
    decisions.push_back(d == matchlab::kSkip ? Json(nullptr) : Json(d + 1));
  }
  result["decisions"] = std::move(decisions);
  result["matching_size"] = transcript.matching_size;
  result["max_matching_size"] = transcript.max_matching_size;
  auto non_greedy = Json::array();
  for (int j : transcript.non_greedy_steps) non_greedy.push_back(j + 1);
  result["non_greedy_steps"] = std::move(non_greedy);
  result["replay_consistent"] = transcript.replay_consistent;
  emit("adversary", config, result);
}

// ----------------------------------------------------------------- graph ---

void write_or_print(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot write file: " + out);
  file << text << "\n";
}

// ---------------------------------------------------------------- verify ---

int cmd_verify(const matchlab::verify::VerifyOptions& options, const CommonOptions& opts) {
  const auto report = matchlab::verify::run_verify(options);
  for (const auto& check : report.checks) {
    const char* tag = check.status == "pass" ? "PASS" : check.status == "skip" ? "SKIP" : "FAIL";
    std::cout << "[" << tag << "] " << check.name << " — " << check.measured << "\n";
  }
  Json config = base_config("verify", opts);
  config["n_max"] = options.n_max;
  Json result;
  auto checks = Json::array();
  for (const auto& check : report.checks) {
    checks.push_back(Json{{"name", check.name},
                          {"claim", check.claim},
                          {"status", check.status},
                          {"measured", check.measured},
                          {"expected", check.expected},
                          {"tolerance", check.tolerance}});
  }
  result["checks"] = std::move(checks);
  result["all_pass"] = report.all_pass();
  emit("verify", config, result);
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::string startup_error;
  if (!matchlab::constants::self_test(&startup_error)) {
    std::cerr << "constant self-test failed: " << startup_error << "\n";
    return 3;
  }

  CLI::App app{"online bipartite matching experiments and cross-verification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  CommonOptions opts;
  opts.threads = threads_from_env();
  app.add_option("--trials", opts.trials, "Monte Carlo trial count")->capture_default_str();
  app.add_option("--seed", opts.seed, "base RNG seed")->capture_default_str();
  app.add_option("--format", opts.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_flag("--exact", opts.exact, "use exact rational arithmetic (n <= 64)");
  app.add_option("--threads", opts.threads, "worker cap (default: MATCHLAB_THREADS or all cores)");

  int n = 0;
  int n_max = 0;
  bool trace = false;
  std::string alg = "lowest";
  std::string out_file;

  auto* tables = app.add_subcommand("tables", "derangement-triangle and a(n) tables");
  auto* tables_d = tables->add_subcommand("d", "d(n,i) triangle rows");
  tables_d->add_option("--n-max", n_max, "largest row")->required();
  auto* tables_a = tables->add_subcommand("a", "a(n) values");
  tables_a->add_option("--n-max", n_max, "largest n")->required();
  tables->require_subcommand(1);

  auto* rho_cmd = app.add_subcommand("rho", "exact expected matching ratio on the monotone graph");
  rho_cmd->add_option("--n", n, "graph size")->required();

  auto* ranking = app.add_subcommand("ranking", "rank-greedy matching experiments");
  auto* ranking_exact = ranking->add_subcommand("exact", "full enumeration over all rankings");
  ranking_exact->add_option("--n", n, "graph size (<= 10)")->required();
  auto* ranking_mc = ranking->add_subcommand("mc", "Monte Carlo estimate");
  ranking_mc->add_option("--n", n, "monotone graph size");
  ranking_mc->add_option("--graph", opts.graph_file, "graph fixture (JSON)");
  ranking->require_subcommand(1);

  auto* balance = app.add_subcommand("balance", "water-filling fractional matching");
  auto* balance_run = balance->add_subcommand("run", "run water-filling on a graph");
  balance_run->add_option("--n", n, "monotone graph size");
  balance_run->add_option("--graph", opts.graph_file, "graph fixture (JSON)");
  balance_run->add_flag("--trace", trace, "include per-step thresholds");
  auto* balance_cf = balance->add_subcommand("closed-form", "monotone-graph size in closed form");
  balance_cf->add_option("--n", n, "graph size")->required();
  auto* balance_avg = balance->add_subcommand("averaging", "averaged-credit replay");
  balance_avg->add_option("--n", n, "monotone graph size");
  balance_avg->add_option("--graph", opts.graph_file, "graph fixture (JSON)");
  balance->require_subcommand(1);

  auto* pricing = app.add_subcommand("pricing", "price-based revenue/utility analysis");
  auto* pricing_mc = pricing->add_subcommand("mc", "per-edge revenue+utility estimates");
  pricing_mc->add_option("--n", n, "monotone graph size")->required();
  auto* pricing_slack = pricing->add_subcommand("slackness", "per-realization slack-sum bound");
  pricing_slack->add_option("--n", n, "monotone graph size")->required();
  pricing->require_subcommand(1);

  auto* adversary = app.add_subcommand("adversary", "adaptive lower-bound instance");
  adversary->add_option("--n", n, "even number of arrivals")->required();
  adversary->add_option("--alg", alg, "lowest | highest | ranking-fixed-pi")
      ->check(CLI::IsMember({"lowest", "highest", "ranking-fixed-pi"}))
      ->capture_default_str();

  auto* graph = app.add_subcommand("graph", "fixture import/export");
  auto* graph_monotone = graph->add_subcommand("monotone", "write a monotone graph fixture");
  graph_monotone->add_option("--n", n, "graph size")->required();
  graph_monotone->add_option("--out", out_file, "output path (default: stdout)");
  auto* graph_dn = graph->add_subcommand("dn", "sample a nested-suffix instance");
  graph_dn->add_option("--n", n, "graph size")->required();
  graph_dn->add_option("--out", out_file, "output path (default: stdout)");
  auto* graph_info = graph->add_subcommand("info", "inspect a graph fixture");
  graph_info->add_option("--graph", opts.graph_file, "graph fixture (JSON)")->required();
  graph->require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the full verification battery");
  verify->add_option("--n-max", n_max, "clamp check scales (quick mode)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*tables_d) {
      cmd_tables_d(n_max, opts);
    } else if (*tables_a) {
      cmd_tables_a(n_max, opts);
    } else if (*rho_cmd) {
      cmd_rho(n, opts);
    } else if (*ranking_exact) {
      cmd_ranking_exact(n, opts);
    } else if (*ranking_mc) {
      if (n == 0 && opts.graph_file.empty()) {
        throw std::invalid_argument("ranking mc: provide --n or --graph");
      }
      cmd_ranking_mc(n, opts);
    } else if (*balance_run) {
      if (n == 0 && opts.graph_file.empty()) {
        throw std::invalid_argument("balance run: provide --n or --graph");
      }
      cmd_balance_run(n, trace, opts);
    } else if (*balance_cf) {
      cmd_balance_closed_form(n, opts);
    } else if (*balance_avg) {
      if (n == 0 && opts.graph_file.empty()) {
        throw std::invalid_argument("balance averaging: provide --n or --graph");
      }
      cmd_balance_averaging(n, opts);
    } else if (*pricing_mc) {
      cmd_pricing_mc(n, opts);
    } else if (*pricing_slack) {
      cmd_pricing_slackness(n, opts);
    } else if (*adversary) {
      cmd_adversary(n, alg, opts);
    } else if (*graph_monotone) {
      write_or_print(matchlab::graph_to_json(matchlab::make_monotone_graph(n)), out_file);
    } else if (*graph_dn) {
      write_or_print(matchlab::graph_to_json(matchlab::sample_dn(n, opts.seed).graph), out_file);
    } else if (*graph_info) {
      const BipartiteGraph g = load_graph(opts.graph_file);
      Json result;
      result["n"] = g.n();
      result["edges"] = g.edge_count();
      result["max_matching_size"] = matchlab::max_matching_size(g);
      result["monotone"] = matchlab::is_monotone_graph(g);
      emit("graph info", base_config("graph info", opts), result);
    } else if (*verify) {
      matchlab::verify::VerifyOptions options;
      options.n_max = n_max;
      options.trials = opts.trials;
      options.seed = opts.seed;
      options.threads = opts.threads;
      return cmd_verify(options, opts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
