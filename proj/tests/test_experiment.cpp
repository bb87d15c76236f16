#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "clusvul/clustering.hpp"
#include "clusvul/errors.hpp"
#include "clusvul/experiment.hpp"
#include "support/oracles.hpp"

using namespace clusvul;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("clusvul_test_" + name);
  std::ofstream(path) << contents;
  return path;
}

std::vector<std::string> column(const CsvTable& t, std::string_view name) {
  std::vector<std::string> out;
  const std::size_t c = t.column(name);
  for (const auto& row : t.rows) out.push_back(row[c]);
  return out;
}

}  // namespace

TEST_CASE("csv formatting and round trip") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(7.0 / 12.0) == "0.583333333333");
  CHECK(format_number(3.0) == "3");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(-std::nan("")) == "nan");
  CHECK(format_number(-INFINITY) == "-inf");

  CsvTable empty{{"a", "b"}, {}};
  CHECK(write_csv(empty) == "a,b\n");
  CsvTable one{{"a", "b"}, {{"1", "x"}}};
  CHECK(write_csv(one) == "a,b\n1,x\n");
  CsvTable quoted{{"name", "note"}, {{"a,b", "say \"hi\""}, {"", "line\nbreak"}}};
  CHECK(parse_csv(write_csv(quoted)).rows == quoted.rows);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  CsvTable nums{{"v"}, {}};
  std::vector<double> values;
  for (int i = 0; i < 500; ++i) {
    values.push_back(dist(rng) * std::pow(10.0, static_cast<int>(rng() % 12) - 10));
    nums.rows.push_back({format_number(values.back())});
  }
  const CsvTable back = parse_csv(write_csv(nums));
  for (std::size_t i = 0; i < values.size(); ++i) {
    CHECK(std::abs(std::stod(back.rows[i][0]) - values[i]) <= 1e-9 * std::max(1.0, std::abs(values[i])));
  }

  CHECK_THROWS_AS(parse_csv("a,b\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_csv("a\n\"open\n"), ParseError);
  CHECK_THROWS_AS(write_csv_file("/nonexistent-dir/x.csv", one), IoError);
  CHECK_THROWS_AS(one.column("missing"), std::out_of_range);
}

TEST_CASE("k resolution") {
  ExperimentConfig cfg;
  cfg.k_fraction = 0.1;
  CHECK(resolve_k(cfg, 35) == 3);
  CHECK(resolve_k(cfg, 5) == 1);
  cfg.k_fraction.reset();
  cfg.k = 4;
  CHECK(resolve_k(cfg, 35) == 4);
  cfg.k = 35;
  CHECK_THROWS_AS(resolve_k(cfg, 35), UsageError);
  cfg.k_fraction = 0.2;
  CHECK_THROWS_AS(resolve_k(cfg, 35), UsageError);
}

TEST_CASE("default method sets") {
  const auto small = default_methods(100, false);
  CHECK(std::find(small.begin(), small.end(), "simple_greedy") != small.end());
  CHECK(std::find(small.begin(), small.end(), "optimal") == small.end());
  const auto large = default_methods(5001, false);
  CHECK(std::find(large.begin(), large.end(), "simple_greedy") == large.end());
  const auto forced = default_methods(5001, true);
  CHECK(std::find(forced.begin(), forced.end(), "simple_greedy") != forced.end());
}

TEST_CASE("generator specs") {
  CHECK(generate_from_spec("er:20,1", 1).num_edges() == 190);
  CHECK(generate_from_spec("ba:10,2", 1).num_edges() == 1 + 2 * 8);
  CHECK(generate_from_spec("ws:5,1,0", 1).num_vertices() == 25);
  CHECK_THROWS_AS(generate_from_spec("er:20", 1), UsageError);
  CHECK_THROWS_AS(generate_from_spec("xx:1,2", 1), UsageError);
  CHECK_THROWS_AS(generate_from_spec("er:20,abc", 1), UsageError);
  CHECK_THROWS_AS(generate_from_spec("ba:2.5,1", 1), UsageError);
}

TEST_CASE("attack on the paw graph") {
  const auto path = temp_file("paw.txt", "0 1\n0 2\n1 2\n0 3\n");
  ExperimentConfig cfg;
  cfg.input_path = path.string();
  cfg.methods = {"faga"};
  cfg.k = 1;
  const CsvTable t = run_attack(cfg);
  CHECK(t.header == std::vector<std::string>{"run_id", "method", "seed", "step", "removed_vertex", "alcc",
                                             "max_lcc", "elapsed_ms"});
  REQUIRE(t.rows.size() == 2);
  CHECK(column(t, "alcc") == std::vector<std::string>{"0.583333333333", "0"});
  CHECK(column(t, "removed_vertex") == std::vector<std::string>{"", "0"});
  CHECK(column(t, "step") == std::vector<std::string>{"0", "1"});
  std::filesystem::remove(path);
}

TEST_CASE("attack output is deterministic and ordered") {
  ExperimentConfig cfg;
  cfg.generator = "er:40,0.2";
  cfg.methods = {"random"};
  cfg.seeds = {1, 1};
  cfg.k = 5;
  cfg.record_timing = false;
  const CsvTable t = run_attack(cfg);
  REQUIRE(t.rows.size() == 12);
  for (std::size_t i = 0; i < 6; ++i) {
    auto a = t.rows[i];
    auto b = t.rows[i + 6];
    a[0] = b[0] = "";
    CHECK(a == b);
  }

  ExperimentConfig all;
  all.generator = "er:30,0.2";
  all.seeds = {3, 4};
  all.k_fraction = 0.1;
  all.record_timing = false;
  const std::string one_thread = write_csv(run_attack(all));
  all.threads = 4;
  CHECK(write_csv(run_attack(all)) == one_thread);
}

TEST_CASE("attack rows reproduce residual ALCC") {
  const Graph g = generate_from_spec("er:35,0.2", 2);
  ExperimentConfig cfg;
  cfg.methods = known_methods();
  cfg.seeds = {5};
  cfg.k = 3;
  const CsvTable t = attack_table(g, cfg);
  const std::size_t mc = t.column("method"), rc = t.column("removed_vertex"), ac = t.column("alcc");
  for (const auto& method : known_methods()) {
    oracle::Dense dense(g);
    std::string last;
    for (const auto& row : t.rows) {
      if (row[mc] != method) continue;
      if (!row[rc].empty()) dense.kill(static_cast<VertexId>(std::stoul(row[rc])));
      last = row[ac];
    }
    CHECK(std::abs(std::stod(last) - dense.alcc()) <= 1e-9);
  }
}

TEST_CASE("attack errors") {
  ExperimentConfig cfg;
  cfg.generator = "er:20,0.3";
  cfg.k = 2;
  cfg.methods = {"faga", "pagerank"};
  CHECK_THROWS_AS(run_attack(cfg), UsageError);
  cfg.methods = {"faga"};
  cfg.input_path = "/nonexistent/graph.txt";
  CHECK_THROWS_AS(run_attack(cfg), UsageError);
  cfg.generator.clear();
  CHECK_THROWS_AS(run_attack(cfg), IoError);
  cfg.input_path.clear();
  CHECK_THROWS_AS(run_attack(cfg), UsageError);
  cfg.generator = "er:20,0.3";
  cfg.seeds.clear();
  CHECK_THROWS_AS(run_attack(cfg), UsageError);
  CHECK_THROWS_AS(run_method(oracle::paw(), "unknown", 1, 1, DeltaMode::kExact), UsageError);
}

TEST_CASE("influence study") {
  InfluenceConfig cfg;
  cfg.n = 8;
  cfg.k_hops = 2;
  cfg.p_grid = {0.0, 0.3, 0.9};
  cfg.edge_prob = 0.1;
  cfg.trials = 200;
  const CsvTable t = run_influence(cfg);
  CHECK(t.header == std::vector<std::string>{"p", "alcc", "alcc_normalized", "mean_spread", "spread_normalized"});
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0][t.column("alcc_normalized")] == "1");
  CHECK(t.rows[0][t.column("spread_normalized")] == "1");
  CHECK(std::stod(t.rows[0][t.column("alcc")]) > 0.0);
  CHECK(write_csv(run_influence(cfg)) == write_csv(t));
  cfg.model = SpreadModel::kLT;
  CHECK(run_influence(cfg).rows.size() == 3);
  // A triangle-free baseline has no meaningful ALCC ratio.
  cfg.k_hops = 1;
  cfg.p_grid = {0.0, 0.5};
  CHECK(run_influence(cfg).rows[1][t.column("alcc_normalized")] == "nan");
  cfg.p_grid = {1.5};
  CHECK_THROWS_AS(run_influence(cfg), UsageError);
}

TEST_CASE("spearman correlation") {
  const std::vector<double> a{1, 2, 3, 4, 5};
  const std::vector<double> b{10, 20, 30, 40, 50};
  const std::vector<double> c{5, 4, 3, 2, 1};
  CHECK(spearman(a, b) == doctest::Approx(1.0));
  CHECK(spearman(a, c) == doctest::Approx(-1.0));
  const std::vector<double> ties{1, 1, 2, 2, 3};
  // Average ranks 1.5 1.5 3.5 3.5 5 against 1..5.
  CHECK(spearman(a, ties) == doctest::Approx(0.9486832980505138));
  const std::vector<double> flat{2, 2, 2, 2, 2};
  CHECK(std::isnan(spearman(a, flat)));
  const std::vector<double> short_one{1};
  CHECK_THROWS_AS(spearman(short_one, short_one), DomainError);
}
