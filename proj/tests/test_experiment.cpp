// Copyright 2026 The QAFAS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qafas/experiment.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <set>
#include <sstream>

#include "qafas/capacity.hpp"
#include "qafas/errors.hpp"
#include "qafas/io.hpp"
#include "support/oracle.hpp"

namespace qafas {
namespace {

using Catch::Approx;

ExperimentConfig tiny_config() {
  ExperimentConfig cfg;
  cfg.n_antennas = 8;
  cfg.n_users = 2;
  cfg.k_values = {2, 4};
  cfg.bits_values = {1, QuantizerModel::kInfiniteBits};
  cfg.rho_dbm_values = {0.0, 10.0};
  cfg.trials = 3;
  cfg.master_seed = 99;
  cfg.methods = {Method::kQafas, Method::kFas, Method::kRandom,
                 Method::kExhaustive};
  return cfg;
}

TEST_CASE("config validation names the offending field") {
  ExperimentConfig cfg = tiny_config();
  cfg.trials = 0;
  CHECK_THROWS_WITH(cfg.validate(), Catch::Matchers::ContainsSubstring("trials"));

  cfg = tiny_config();
  cfg.k_values = {9};
  CHECK_THROWS_WITH(cfg.validate(),
                    Catch::Matchers::ContainsSubstring("k_values"));

  cfg = tiny_config();
  cfg.methods.clear();
  CHECK_THROWS_WITH(cfg.validate(),
                    Catch::Matchers::ContainsSubstring("methods"));

  cfg = tiny_config();
  cfg.bits_values = {0};
  CHECK_THROWS_WITH(cfg.validate(),
                    Catch::Matchers::ContainsSubstring("bits_values"));
}

TEST_CASE("exhaustive cap violations name the offending pair") {
  ExperimentConfig cfg = tiny_config();
  cfg.n_antennas = 40;
  cfg.k_values = {20};
  CHECK_THROWS_AS(cfg.validate(), SearchTooLargeError);
  CHECK_THROWS_WITH(cfg.validate(),
                    Catch::Matchers::ContainsSubstring("N_r=40") &&
                        Catch::Matchers::ContainsSubstring("K=20"));
  cfg.methods = {Method::kQafas};
  CHECK_NOTHROW(cfg.validate());  // cap only matters for exhaustive
}

TEST_CASE("records come back sorted and unique per cell") {
  const auto cfg = tiny_config();
  const auto records = run_experiment(cfg);
  REQUIRE(records.size() == 4u * 2 * 2 * 2 * 3);  // methods*K*bits*rho*trials

  std::set<std::tuple<int, int, int, double, int>> seen;
  for (const auto& r : records) {
    CHECK(r.capacity_bps_hz >= 0.0);
    seen.insert({static_cast<int>(r.method), r.k, r.bits, r.rho_dbm, r.trial});
  }
  CHECK(seen.size() == records.size());

  // deterministic: a second run is identical
  const auto again = run_experiment(cfg);
  REQUIRE(again.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(again[i].capacity_bps_hz == records[i].capacity_bps_hz);
    CHECK(again[i].trial == records[i].trial);
  }
}

TEST_CASE("infinite resolution collapses qafas onto fas row-for-row") {
  ExperimentConfig cfg = tiny_config();
  cfg.bits_values = {QuantizerModel::kInfiniteBits};
  cfg.methods = {Method::kQafas, Method::kFas};
  cfg.trials = 1;
  const auto records = run_experiment(cfg);
  std::map<std::tuple<int, int, double, int>, double> qafas_rows, fas_rows;
  for (const auto& r : records) {
    const auto key = std::make_tuple(r.k, r.bits, r.rho_dbm, r.trial);
    (r.method == Method::kQafas ? qafas_rows : fas_rows)[key] =
        r.capacity_bps_hz;
  }
  REQUIRE(qafas_rows.size() == fas_rows.size());
  for (const auto& [key, capacity] : qafas_rows) {
    CHECK(fas_rows.at(key) == capacity);
  }
}

TEST_CASE("trial channels are deterministic and distinct across trials") {
  const auto cfg = tiny_config();
  CHECK(trial_channel(cfg, 0).entries() == trial_channel(cfg, 0).entries());
  CHECK(trial_channel(cfg, 0).entries() != trial_channel(cfg, 1).entries());
  ExperimentConfig other = cfg;
  other.master_seed += 1;
  CHECK(trial_channel(cfg, 0).entries() !=
        trial_channel(other, 0).entries());
}

TEST_CASE("per-method records do not depend on which methods run") {
  // the paired design: every method sees the same per-trial channel
  ExperimentConfig cfg = tiny_config();
  const auto full = run_experiment(cfg);

  cfg.methods = {Method::kQafas};
  const auto only_qafas = run_experiment(cfg);

  std::map<std::tuple<int, int, double, int>, double> from_full;
  for (const auto& r : full) {
    if (r.method == Method::kQafas) {
      from_full[{r.k, r.bits, r.rho_dbm, r.trial}] = r.capacity_bps_hz;
    }
  }
  REQUIRE(from_full.size() == only_qafas.size());
  for (const auto& r : only_qafas) {
    CHECK(from_full.at({r.k, r.bits, r.rho_dbm, r.trial}) ==
          r.capacity_bps_hz);
  }
}

TEST_CASE("selected capacity never exceeds the full array's capacity") {
  ExperimentConfig cfg = tiny_config();
  cfg.methods = {Method::kQafas, Method::kFas};
  cfg.trials = 2;
  const auto records = run_experiment(cfg);

  for (const auto& r : records) {
    const auto channel = trial_channel(cfg, r.trial);
    const auto q = r.bits == QuantizerModel::kInfiniteBits
                       ? QuantizerModel::infinite()
                       : QuantizerModel::from_bits(r.bits);
    std::vector<int> all(cfg.n_antennas);
    for (int i = 0; i < cfg.n_antennas; ++i) all[i] = i;
    const double full_capacity = capacity_penalty_form(
        SubchannelView(channel, all), std::pow(10.0, r.rho_dbm / 10.0), q);
    CHECK(r.capacity_bps_hz <= full_capacity + 1e-9);
  }
}

TEST_CASE("capacity is nondecreasing in resolution for every method") {
  ExperimentConfig cfg = tiny_config();
  cfg.bits_values = {1, 2, 3, QuantizerModel::kInfiniteBits};
  cfg.trials = 4;
  const auto records = run_experiment(cfg);

  // per (method, K, rho, trial): capacity sorted by the bits sweep order
  std::map<std::tuple<int, int, double, int>, std::vector<double>> cells;
  for (const int bits : cfg.bits_values) {
    for (const auto& r : records) {
      if (r.bits == bits) {
        cells[{static_cast<int>(r.method), r.k, r.rho_dbm, r.trial}]
            .push_back(r.capacity_bps_hz);
      }
    }
  }
  for (const auto& [key, capacities] : cells) {
    REQUIRE(capacities.size() == 4);
    for (std::size_t i = 1; i < capacities.size(); ++i) {
      CHECK(capacities[i] >= capacities[i - 1] - 1e-9);
    }
  }
}

TEST_CASE("summarize basics") {
  std::vector<ExperimentRecord> records;
  records.push_back({Method::kQafas, 2, 3, 5.0, 0, 1.5});
  auto rows = summarize(records);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].mean_capacity == 1.5);
  CHECK(rows[0].stderr_capacity == 0.0);
  CHECK(rows[0].trials == 1);

  records.push_back({Method::kQafas, 2, 3, 5.0, 1, 3.5});
  rows = summarize(records);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].mean_capacity == Approx(2.5));
  CHECK(rows[0].trials == 2);

  records.push_back({Method::kFas, 2, 3, 5.0, 0, 1.0});
  rows = summarize(records);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].method == Method::kQafas);  // method order is the sort key
  CHECK(rows[1].method == Method::kFas);

  CHECK_THROWS_AS(summarize({}), ConfigError);
}

TEST_CASE("run CSV round-trips through the reader") {
  ExperimentConfig cfg = tiny_config();
  cfg.trials = 2;
  cfg.methods = {Method::kQafas, Method::kRandom};
  const auto records = run_experiment(cfg);

  std::ostringstream out;
  write_records_csv(out, records);

  std::istringstream in(out.str());
  const auto parsed = read_records_csv(in);
  REQUIRE(parsed.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(parsed[i].method == records[i].method);
    CHECK(parsed[i].k == records[i].k);
    CHECK(parsed[i].bits == records[i].bits);
    CHECK(parsed[i].rho_dbm == records[i].rho_dbm);
    CHECK(parsed[i].trial == records[i].trial);
    // 10 significant digits survive the text round trip
    CHECK(parsed[i].capacity_bps_hz ==
          Approx(records[i].capacity_bps_hz).epsilon(1e-9));
  }

  // emitting the same records twice gives identical bytes
  std::ostringstream out2;
  write_records_csv(out2, records);
  CHECK(out.str() == out2.str());
  CHECK(out.str().substr(0, out.str().find('\n')) ==
        "method,K,bits,rho_dbm,trial,capacity_bps_hz");
}

TEST_CASE("summary CSV header and inf bits rendering") {
  std::vector<ExperimentRecord> records;
  records.push_back(
      {Method::kQafas, 2, QuantizerModel::kInfiniteBits, 5.0, 0, 1.0});
  const auto rows = summarize(records);
  std::ostringstream out;
  write_summary_csv(out, rows);
  CHECK(out.str() ==
        "method,K,bits,rho_dbm,trials,mean_capacity,stderr\n"
        "qafas,2,inf,5,1,1,0\n");
}

TEST_CASE("config text parsing", "[io]") {
  std::istringstream in(
      "# comment\n"
      "n_antennas = 16\n"
      "n_users = 3\n"
      "k_values = 2, 4\n"
      "bits_values = 1, inf\n"
      "rho_dbm_values = -5, 0, 2.5\n"
      "trials = 7\n"
      "master_seed = 1234\n"
      "methods = qafas, random\n"
      "cell_radius_m = 1500   # inline comment\n");
  const auto cfg = parse_config_text(in, ExperimentConfig{});
  CHECK(cfg.n_antennas == 16);
  CHECK(cfg.n_users == 3);
  CHECK(cfg.k_values == std::vector<int>{2, 4});
  CHECK(cfg.bits_values ==
        std::vector<int>{1, QuantizerModel::kInfiniteBits});
  CHECK(cfg.rho_dbm_values == std::vector<double>{-5, 0, 2.5});
  CHECK(cfg.trials == 7);
  CHECK(cfg.master_seed == 1234);
  REQUIRE(cfg.methods.size() == 2);
  CHECK(cfg.methods[0] == Method::kQafas);
  CHECK(cfg.methods[1] == Method::kRandom);
  CHECK(cfg.cell.cell_radius_m == 1500.0);

  std::istringstream bad_key("unknown_thing = 3\n");
  CHECK_THROWS_AS(parse_config_text(bad_key, ExperimentConfig{}),
                  ConfigError);
  std::istringstream bad_method("methods = qafas, sideways\n");
  CHECK_THROWS_AS(parse_config_text(bad_method, ExperimentConfig{}),
                  ConfigError);
  std::istringstream bad_number("trials = many\n");
  CHECK_THROWS_AS(parse_config_text(bad_number, ExperimentConfig{}),
                  ConfigError);
}

TEST_CASE("profiles set the two scales") {
  const auto desk = profile_config("desk");
  CHECK(desk.n_antennas == 64);
  CHECK(desk.trials == 200);
  const auto paper = profile_config("paper");
  CHECK(paper.n_antennas == 128);
  CHECK_THROWS_AS(profile_config("laptop"), ConfigError);
}

TEST_CASE("channel files round-trip") {
  Rng rng(31);
  const auto channel = test::random_channel(5, 3, rng);
  std::ostringstream out;
  write_channel_text(out, channel);

  std::istringstream in(out.str());
  const auto parsed = read_channel_text(in);
  REQUIRE(parsed.n_antennas() == 5);
  REQUIRE(parsed.n_users() == 3);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(parsed.entries()(i, j) - channel.entries()(i, j)) <=
            1e-9 * std::abs(channel.entries()(i, j)));
    }
  }

  std::istringstream bad_header("0 2\n");
  CHECK_THROWS_AS(read_channel_text(bad_header), ConfigError);
  std::istringstream bad_entry("1 1\n2.5\n");
  CHECK_THROWS_AS(read_channel_text(bad_entry), ConfigError);
  std::istringstream truncated("2 2\n1+0j 2+0j\n");
  CHECK_THROWS_AS(read_channel_text(truncated), ConfigError);
}

TEST_CASE("bits token parsing") {
  CHECK(parse_bits_token("inf") == QuantizerModel::kInfiniteBits);
  CHECK(parse_bits_token(" 4 ") == 4);
  CHECK_THROWS_AS(parse_bits_token("0"), ConfigError);
  CHECK_THROWS_AS(parse_bits_token("four"), ConfigError);
}

TEST_CASE("method names round-trip") {
  for (const Method m : {Method::kQafas, Method::kFas, Method::kRandom,
                         Method::kExhaustive}) {
    CHECK(method_from_name(method_name(m)) == m);
  }
  CHECK(!method_from_name("qafas2").has_value());
}

}  // namespace
}  // namespace qafas
