#include "clusvul/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "clusvul/clustering.hpp"
#include "clusvul/errors.hpp"
#include "clusvul/generators.hpp"

namespace clusvul {

const std::vector<std::string>& known_methods() {
  static const std::vector<std::string> methods{"faga",       "simple_greedy", "lcc_greedy", "max_degree",
                                                "betweenness", "random",        "optimal"};
  return methods;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

double to_double(const std::string& s, const std::string& spec) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw UsageError("bad number '" + s + "' in generator spec '" + spec + "'");
  return v;
}

std::size_t to_count(const std::string& s, const std::string& spec) {
  const double v = to_double(s, spec);
  if (v < 0 || v != std::floor(v)) throw UsageError("bad count '" + s + "' in generator spec '" + spec + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

Graph generate_from_spec(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("generator spec '" + spec + "' lacks a model prefix");
  const std::string model = spec.substr(0, colon);
  const auto args = split(spec.substr(colon + 1), ',');
  auto want = [&](std::size_t n) {
    if (args.size() != n) {
      throw UsageError("generator '" + model + "' expects " + std::to_string(n) + " parameters in '" + spec + "'");
    }
  };
  if (model == "er") {
    want(2);
    return gen_er(to_count(args[0], spec), to_double(args[1], spec), seed);
  }
  if (model == "ba") {
    want(2);
    return gen_ba(to_count(args[0], spec), to_count(args[1], spec), seed);
  }
  if (model == "ws") {
    want(3);
    return gen_ws_torus(to_count(args[0], spec), to_count(args[1], spec), to_double(args[2], spec), seed);
  }
  throw UsageError("unknown generator model '" + model + "' (expected er|ba|ws)");
}

std::vector<std::string> default_methods(std::size_t n_vertices, bool force_simple_greedy) {
  std::vector<std::string> out;
  for (const auto& m : known_methods()) {
    if (m == "optimal") continue;
    if (m == "simple_greedy" && n_vertices > 5000 && !force_simple_greedy) continue;
    out.push_back(m);
  }
  return out;
}

std::size_t resolve_k(const ExperimentConfig& cfg, std::size_t n_vertices) {
  if (cfg.k.has_value() == cfg.k_fraction.has_value()) {
    throw UsageError("exactly one of k and k-fraction must be given");
  }
  std::size_t k = 0;
  if (cfg.k) {
    k = *cfg.k;
  } else {
    const double f = *cfg.k_fraction;
    if (!(f > 0.0 && f < 1.0)) throw UsageError("k-fraction must lie in (0, 1)");
    k = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(f * static_cast<double>(n_vertices))));
  }
  if (k < 1 || k >= n_vertices) {
    throw UsageError("k=" + std::to_string(k) + " must satisfy 1 <= k < N=" + std::to_string(n_vertices));
  }
  return k;
}

Graph load_input(const ExperimentConfig& cfg) {
  if (cfg.input_path.empty() == cfg.generator.empty()) {
    throw UsageError("exactly one of an input path and a generator spec must be given");
  }
  if (!cfg.input_path.empty()) return read_edge_list_file(cfg.input_path).graph;
  if (cfg.seeds.empty()) throw UsageError("at least one seed is required");
  return generate_from_spec(cfg.generator, cfg.seeds.front());
}

AttackResult run_method(const Graph& g, const std::string& method, std::size_t k, std::uint64_t seed,
                        DeltaMode mode, std::uint64_t optimal_budget) {
  AttackResult r;
  if (method == "faga") {
    r = faga(g, k, mode);
  } else if (method == "simple_greedy") {
    r = simple_greedy(g, k);
  } else if (method == "lcc_greedy") {
    r = baseline_lcc_greedy(g, k);
  } else if (method == "max_degree") {
    r = baseline_max_degree(g, k);
  } else if (method == "betweenness") {
    r = baseline_betweenness(g, k);
  } else if (method == "random") {
    r = baseline_random(g, k, seed);
  } else if (method == "optimal") {
    ExhaustiveOptions opts;
    opts.budget = optimal_budget;
    r = optimal_exhaustive(g, k, opts);
  } else {
    throw UsageError("unknown method '" + method + "'");
  }
  r.seed = seed;
  return r;
}

CsvTable attack_table(const Graph& g, const ExperimentConfig& cfg) {
  if (cfg.seeds.empty()) throw UsageError("at least one seed is required");
  const std::size_t k = resolve_k(cfg, g.num_alive());
  const auto methods = cfg.methods.empty() ? default_methods(g.num_alive(), cfg.force_simple_greedy) : cfg.methods;
  for (const auto& m : methods) {
    if (std::find(known_methods().begin(), known_methods().end(), m) == known_methods().end()) {
      throw UsageError("unknown method '" + m + "'");
    }
  }

  struct Job {
    std::string method;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (const auto& m : methods) {
    for (auto s : cfg.seeds) jobs.push_back({m, s});
  }
  std::vector<AttackResult> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = run_method(g, jobs[i].method, k, jobs[i].seed, cfg.mode, cfg.optimal_budget);
        const double recomputed = residual_alcc(g, results[i].removed);
        if (std::abs(recomputed - results[i].final_alcc()) > 1e-9) {
          throw std::logic_error(jobs[i].method + ": trajectory final ALCC " +
                                 format_number(results[i].final_alcc()) + " disagrees with recomputed " +
                                 format_number(recomputed));
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads = std::clamp<std::size_t>(cfg.threads, 1, std::max<std::size_t>(1, jobs.size()));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  CsvTable table;
  table.header = {"run_id", "method", "seed", "step", "removed_vertex", "alcc", "max_lcc", "elapsed_ms"};
  for (std::size_t run = 0; run < results.size(); ++run) {
    const AttackResult& r = results[run];
    for (std::size_t step = 0; step < r.alcc_trajectory.size(); ++step) {
      table.rows.push_back({std::to_string(run), jobs[run].method, std::to_string(jobs[run].seed),
                            std::to_string(step), step == 0 ? std::string() : std::to_string(r.removed[step - 1]),
                            format_number(r.alcc_trajectory[step]), format_number(r.max_lcc_trajectory[step]),
                            format_number(cfg.record_timing ? r.elapsed_ms[step] : 0.0)});
    }
  }
  return table;
}

CsvTable run_attack(const ExperimentConfig& cfg) { return attack_table(load_input(cfg), cfg); }

CsvTable run_influence(const InfluenceConfig& cfg) {
  if (cfg.p_grid.empty()) throw UsageError("influence: empty rewiring grid");
  for (double p : cfg.p_grid) {
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("influence: rewiring probability " + format_number(p) + " outside [0, 1]");
  }
  std::vector<double> cc;
  std::vector<double> spread;
  for (double p : cfg.p_grid) {
    const Graph g = gen_ws_torus(cfg.n, cfg.k_hops, p, cfg.seed);
    cc.push_back(alcc(g));
    const SpreadEstimate est = cfg.model == SpreadModel::kIC
                                   ? ic_spread_random_seed(g, cfg.edge_prob, cfg.trials, cfg.seed)
                                   : lt_spread_random_seed(g, cfg.trials, cfg.seed);
    spread.push_back(est.mean_activations);
  }
  // Normalize by the p = 0 row when the grid has one, otherwise by the first row.
  std::size_t base = 0;
  for (std::size_t i = 0; i < cfg.p_grid.size(); ++i) {
    if (cfg.p_grid[i] == 0.0) {
      base = i;
      break;
    }
  }
  CsvTable table;
  // A zero baseline (triangle-free lattice) leaves the ratio undefined.
  auto ratio = [](double x, double b) { return b == 0.0 ? std::nan("") : x / b; };
  table.header = {"p", "alcc", "alcc_normalized", "mean_spread", "spread_normalized"};
  for (std::size_t i = 0; i < cfg.p_grid.size(); ++i) {
    table.rows.push_back({format_number(cfg.p_grid[i]), format_number(cc[i]), format_number(ratio(cc[i], cc[base])),
                          format_number(spread[i]), format_number(spread[i] / spread[base])});
  }
  return table;
}

namespace {

std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> rank(x.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t t = i; t <= j; ++t) rank[order[t]] = avg;
    i = j + 1;
  }
  return rank;
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("spearman: need two equal-length samples of size >= 2");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace clusvul
