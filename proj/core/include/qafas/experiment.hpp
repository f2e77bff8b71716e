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

#ifndef QAFAS_EXPERIMENT_HPP_
#define QAFAS_EXPERIMENT_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qafas/channel.hpp"
#include "qafas/quantizer.hpp"

namespace qafas {

enum class Method { kQafas, kFas, kRandom, kExhaustive };

std::string_view method_name(Method method);
std::optional<Method> method_from_name(std::string_view name);

/// One Monte Carlo sweep. Field names double as the config-file keys;
/// every key is optional and falls back to these defaults.
struct ExperimentConfig {
  int n_antennas = 128;
  int n_users = 10;
  std::vector<int> k_values = {10, 20, 40};
  /// QuantizerModel::kInfiniteBits marks the perfect quantizer ("inf").
  std::vector<int> bits_values = {3};
  std::vector<double> rho_dbm_values = {-10, -5, 0, 5, 10, 15, 20};
  int trials = 200;
  std::uint64_t master_seed = 1;
  std::vector<Method> methods = {Method::kQafas, Method::kFas,
                                 Method::kRandom};
  CellConfig cell;
  std::uint64_t exhaustive_cap = 1000000;

  /// Throws ConfigError naming the offending field; SearchTooLargeError
  /// when exhaustive is requested past its cap.
  void validate() const;
};

/// Base config for a named scale: "desk" (N_r = 64, runs in minutes) or
/// "paper" (N_r = 128, the full-scale array). Throws ConfigError for
/// unknown names.
ExperimentConfig profile_config(std::string_view profile);

/// One Monte Carlo cell: the capacity one method achieved on one trial's
/// channel at one (K, bits, rho) operating point.
struct ExperimentRecord {
  Method method;
  int k;
  int bits;  // QuantizerModel::kInfiniteBits for the perfect quantizer
  double rho_dbm;
  int trial;
  double capacity_bps_hz;
};

struct SummaryRow {
  Method method;
  int k;
  int bits;
  double rho_dbm;
  int trials;
  double mean_capacity;
  double stderr_capacity;
};

/// The channel drawn for one trial of a config: placement, shadowing and
/// fading from the trial's own seed substream. Every method and every
/// (K, bits, rho) cell of that trial sees exactly this matrix.
ChannelMatrix trial_channel(const ExperimentConfig& cfg, int trial);

/// Paired Monte Carlo sweep: each trial draws trial_channel(cfg, t) once,
/// and every (method, K, bits, rho) cell is evaluated on it. The achieved
/// capacity is always the quantized capacity of the chosen subset,
/// whichever method chose it. Records are returned sorted by
/// (method, K, bits, rho_dbm, trial); two runs with the same config are
/// identical.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg);

/// Per-cell mean and standard error. Summation is compensated and runs in
/// ascending trial order, so means are reproducible bit-exactly. Throws
/// ConfigError on an empty record table.
std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord>& records);

}  // namespace qafas

#endif  // QAFAS_EXPERIMENT_HPP_
