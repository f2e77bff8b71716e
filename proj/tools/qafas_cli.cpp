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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qafas/capacity.hpp"
#include "qafas/errors.hpp"
#include "qafas/experiment.hpp"
#include "qafas/io.hpp"
#include "qafas/selection.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitConfig = 2;
constexpr int kExitSearchTooLarge = 3;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw qafas::ConfigError("cannot open output file '" + path + "'.");
  }
  return out;
}

int run_command(const std::string& config_path, const std::string& out_path,
                const std::optional<std::uint64_t>& seed,
                const std::string& profile) {
  qafas::ExperimentConfig cfg = qafas::profile_config(profile);
  if (!config_path.empty()) {
    cfg = qafas::load_config_file(config_path, cfg);
  }
  if (seed) {
    cfg.master_seed = *seed;
  }
  const auto records = qafas::run_experiment(cfg);
  if (out_path.empty()) {
    qafas::write_records_csv(std::cout, records);
  } else {
    auto out = open_output(out_path);
    qafas::write_records_csv(out, records);
  }
  return kExitOk;
}

int summarize_command(const std::string& in_path, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) {
    throw qafas::ConfigError("cannot open input file '" + in_path + "'.");
  }
  const auto rows = qafas::summarize(qafas::read_records_csv(in));
  if (out_path.empty()) {
    qafas::write_summary_csv(std::cout, rows);
  } else {
    auto out = open_output(out_path);
    qafas::write_summary_csv(out, rows);
  }
  return kExitOk;
}

int select_command(const std::string& channel_path, int k,
                   const std::string& bits_token, double rho_dbm,
                   const std::string& method_token, std::uint64_t seed,
                   std::uint64_t max_subsets) {
  const qafas::ChannelMatrix channel = qafas::load_channel_file(channel_path);
  const int bits = qafas::parse_bits_token(bits_token);
  const qafas::QuantizerModel q =
      bits == qafas::QuantizerModel::kInfiniteBits
          ? qafas::QuantizerModel::infinite()
          : qafas::QuantizerModel::from_bits(bits);
  const double rho = std::pow(10.0, rho_dbm / 10.0);
  const auto method = qafas::method_from_name(method_token);
  if (!method) {
    throw qafas::ConfigError("unknown method '" + method_token + "'.");
  }

  qafas::SelectionResult result;
  switch (*method) {
    case qafas::Method::kQafas:
      result = qafas::select_qafas(channel, k, rho, q);
      break;
    case qafas::Method::kFas:
      result = qafas::select_fas(channel, k, rho);
      break;
    case qafas::Method::kRandom: {
      qafas::Rng rng(seed);
      result = qafas::select_random(channel.n_antennas(), k, rng);
      result = qafas::trace_selection(channel, result.order, rho, q);
      break;
    }
    case qafas::Method::kExhaustive:
      result = qafas::select_exhaustive(channel, k, rho, q, max_subsets);
      break;
  }

  std::cout << "stage,antenna,stage_ratio,capacity_bps_hz\n";
  for (std::size_t stage = 0; stage < result.order.size(); ++stage) {
    std::cout << stage + 1 << ',' << result.order[stage] << ','
              << qafas::format_double(result.stage_ratio[stage]) << ','
              << qafas::format_double(result.stage_capacity[stage]) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quantization-aware greedy antenna selection for large-scale MIMO "
      "uplink receivers with low-resolution ADCs"};
  app.require_subcommand(1);

  // run
  std::string run_config;
  std::string run_out;
  std::optional<std::uint64_t> run_seed;
  std::string run_profile = "desk";
  auto* run = app.add_subcommand(
      "run", "Run a seeded Monte Carlo capacity sweep and emit CSV");
  run->add_option("--config", run_config,
                  "Flat key = value config file overriding the profile");
  run->add_option("--out", run_out, "Output CSV path (default: stdout)");
  run->add_option("--seed", run_seed, "Master seed override");
  run->add_option("--profile", run_profile, "Scale profile: desk or paper")
      ->check(CLI::IsMember({"desk", "paper"}));

  // summarize
  std::string sum_in;
  std::string sum_out;
  auto* summarize = app.add_subcommand(
      "summarize", "Aggregate a run CSV into per-cell mean and stderr");
  summarize->add_option("--in", sum_in, "Run CSV to aggregate")->required();
  summarize->add_option("--out", sum_out, "Output CSV path (default: stdout)");

  // select
  std::string sel_channel;
  int sel_k = 0;
  std::string sel_bits = "3";
  double sel_rho_dbm = 5.0;
  std::string sel_method = "qafas";
  std::uint64_t sel_seed = 0;
  std::uint64_t sel_cap = 1000000;
  auto* select = app.add_subcommand(
      "select", "One-shot antenna selection on a channel read from file");
  select->add_option("channel", sel_channel, "Channel file (N_r N_u header)")
      ->required();
  select->add_option("--k", sel_k, "Number of antennas to select")->required();
  select->add_option("--bits", sel_bits, "ADC resolution (integer or inf)");
  select->add_option("--rho-dbm", sel_rho_dbm, "Transmit power in dBm");
  select->add_option("--method", sel_method,
                     "qafas, fas, random or exhaustive");
  select->add_option("--seed", sel_seed, "Seed for the random method");
  select->add_option("--max-subsets", sel_cap,
                     "Cap for the exhaustive method");

  try {
    app.parse(argc, argv);
    if (run->parsed()) {
      return run_command(run_config, run_out, run_seed, run_profile);
    }
    if (summarize->parsed()) {
      return summarize_command(sum_in, sum_out);
    }
    if (select->parsed()) {
      return select_command(sel_channel, sel_k, sel_bits, sel_rho_dbm,
                            sel_method, sel_seed, sel_cap);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  } catch (const qafas::SearchTooLargeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSearchTooLarge;
  } catch (const qafas::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}
