#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "clusvul/clustering.hpp"
#include "clusvul/errors.hpp"
#include "clusvul/experiment.hpp"
#include "clusvul/generators.hpp"
#include "clusvul/solvers.hpp"

using namespace clusvul;

namespace {

struct Source {
  std::string input;
  std::string gen;
  std::vector<std::uint64_t> seeds{1};
};

void add_source(CLI::App* cmd, Source& src) {
  auto* in = cmd->add_option("--input", src.input, "Edge-list file (one 'u v' pair per line)");
  auto* gen = cmd->add_option("--gen", src.gen, "Generator spec: er:n,p | ba:n,m | ws:n,k_hops,p");
  in->excludes(gen);
  cmd->add_option("--seed", src.seeds, "Seed list (comma separated); generators use the first")
      ->delimiter(',')
      ->expected(1, -1);
}

Graph load(const Source& src) {
  if (src.input.empty()) {
    ExperimentConfig cfg;
    cfg.generator = src.gen;
    cfg.seeds = src.seeds;
    return load_input(cfg);
  }
  EdgeListParse parsed = read_edge_list_file(src.input);
  if (parsed.stats.duplicate_edges + parsed.stats.self_loops > 0) {
    std::cerr << "clusvul: note: dropped " << parsed.stats.duplicate_edges << " duplicate edge(s) and "
              << parsed.stats.self_loops << " self-loop(s)\n";
  }
  return std::move(parsed.graph);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("write to standard output failed");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clustering vulnerability toolkit: ALCC attacks, generators and influence studies"};
  app.require_subcommand(1);
  std::string out_path;

  // gen
  Source gen_src;
  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  add_source(gen, gen_src);
  gen->get_option("--gen")->required();
  gen->get_option("--input")->group("");
  gen->add_option("--out", out_path, "Output path (default stdout)");

  // alcc
  Source alcc_src;
  auto* alcc_cmd = app.add_subcommand("alcc", "Print vertex, edge and triangle counts with ALCC and max-LCC");
  add_source(alcc_cmd, alcc_src);
  alcc_cmd->add_option("--out", out_path, "Output path (default stdout)");

  // attack
  Source attack_src;
  std::string methods, mode = "exact";
  std::optional<std::size_t> k;
  std::optional<double> k_frac;
  bool no_timing = false, with_simple_greedy = false;
  std::size_t threads = 1;
  std::uint64_t budget = 100'000'000;
  auto* attack = app.add_subcommand("attack", "Run removal strategies and write per-step trajectories as CSV");
  add_source(attack, attack_src);
  attack->add_option("--methods", methods, "Comma separated: " + [] {
    std::string s;
    for (const auto& m : known_methods()) s += (s.empty() ? "" : ",") + m;
    return s;
  }());
  auto* k_opt = attack->add_option("--k", k, "Number of vertices to remove");
  auto* f_opt = attack->add_option("--k-frac", k_frac, "Fraction of N to remove: max(1, floor(f * N))");
  k_opt->excludes(f_opt);
  attack->add_option("--mode", mode, "FAGA score: exact | paper")->check(CLI::IsMember({"exact", "paper"}));
  attack->add_flag("--no-timing", no_timing, "Write 0 for elapsed_ms so output is byte-reproducible");
  attack->add_flag("--with-simple-greedy", with_simple_greedy, "Keep simple_greedy in the default set above 5000 vertices");
  attack->add_option("--threads", threads, "Concurrent runs")->check(CLI::PositiveNumber);
  attack->add_option("--budget", budget, "Subset budget for the optimal method");
  attack->add_option("--out", out_path, "Output path (default stdout)");

  // influence
  InfluenceConfig inf;
  std::string p_grid, model = "ic";
  auto* influence = app.add_subcommand("influence", "ALCC and mean spread over a rewiring grid on the WS torus");
  influence->add_option("--n", inf.n, "Torus side (N = n^2)");
  influence->add_option("--k-hops", inf.k_hops, "Lattice neighbourhood radius");
  influence->add_option("--p-grid", p_grid, "Comma separated rewiring probabilities (default 0,0.1,...,0.9)");
  influence->add_option("--model", model, "Spread model: ic | lt")->check(CLI::IsMember({"ic", "lt"}));
  influence->add_option("--edge-prob", inf.edge_prob, "IC activation probability")->check(CLI::Range(0.0, 1.0));
  influence->add_option("--trials", inf.trials, "Monte-Carlo trials per grid point")->check(CLI::PositiveNumber);
  influence->add_option("--seed", inf.seed, "Master seed");
  influence->add_option("--out", out_path, "Output path (default stdout)");

  // reduce3sat
  std::string cnf_path, roles_path;
  auto* reduce = app.add_subcommand("reduce3sat", "Build the triangle-cover instance of a 3-CNF formula");
  reduce->add_option("--cnf", cnf_path, "DIMACS CNF file")->required();
  reduce->add_option("--roles", roles_path, "Also write vertex roles as CSV");
  reduce->add_option("--out", out_path, "Edge-list output path (default stdout)");

  // emit-ip
  Source ip_src;
  std::size_t ip_k = 0;
  auto* ip = app.add_subcommand("emit-ip", "Write the cubic survivor-variable program for a graph");
  add_source(ip, ip_src);
  ip->add_option("--k", ip_k, "Removal budget")->required();
  ip->add_option("--out", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (gen->parsed()) {
      emit(out_path, write_edge_list(load(gen_src)));
    } else if (alcc_cmd->parsed()) {
      const Graph g = load(alcc_src);
      const auto idx = build_triangle_index(g);
      CsvTable t{{"n", "m", "triangles", "alcc", "max_lcc"},
                 {{std::to_string(g.num_alive()), std::to_string(g.num_edges()), std::to_string(idx.total()),
                   format_number(clusvul::alcc(g, idx)), format_number(max_lcc(g, idx))}}};
      emit(out_path, write_csv(t));
    } else if (attack->parsed()) {
      ExperimentConfig cfg;
      cfg.seeds = attack_src.seeds;
      cfg.methods = split_list(methods);
      cfg.k = k;
      cfg.k_fraction = k_frac;
      cfg.mode = parse_delta_mode(mode);
      cfg.force_simple_greedy = with_simple_greedy;
      cfg.record_timing = !no_timing;
      cfg.optimal_budget = budget;
      cfg.threads = threads;
      emit(out_path, write_csv(attack_table(load(attack_src), cfg)));
    } else if (influence->parsed()) {
      if (!p_grid.empty()) {
        inf.p_grid.clear();
        for (const auto& s : split_list(p_grid)) {
          std::size_t used = 0;
          double p = 0.0;
          try {
            p = std::stod(s, &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used != s.size()) throw UsageError("bad rewiring probability '" + s + "'");
          inf.p_grid.push_back(p);
        }
      }
      inf.model = parse_spread_model(model);
      emit(out_path, write_csv(run_influence(inf)));
    } else if (reduce->parsed()) {
      const ReductionInstance r = reduce_3sat(parse_dimacs(read_text(cnf_path)));
      emit(out_path, "# k " + std::to_string(r.k) + "\n" + write_edge_list(r.graph));
      if (!roles_path.empty()) {
        CsvTable t{{"vertex", "role"}, {}};
        for (VertexId u = 0; u < r.roles.size(); ++u) {
          const char* role = r.roles[u] == VertexRole::kBlue ? "blue" : r.roles[u] == VertexRole::kGreen ? "green" : "red";
          t.rows.push_back({std::to_string(u), role});
        }
        write_csv_file(roles_path, t);
      }
    } else if (ip->parsed()) {
      emit(out_path, emit_cubic_ip(load(ip_src), ip_k));
    }
  } catch (const UsageError& e) {
    std::cerr << "clusvul: usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "clusvul: parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "clusvul: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
