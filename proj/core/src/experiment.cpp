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

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <string>
#include <thread>
#include <tuple>
#include <utility>

#include "qafas/capacity.hpp"
#include "qafas/errors.hpp"
#include "qafas/selection.hpp"

namespace qafas {

namespace {

// Substream tags so channel draws and random-selection draws never share
// a stream.
constexpr std::uint64_t kChannelStream = 0x6368616e;
constexpr std::uint64_t kSelectionStream = 0x73656c65;

double dbm_to_linear_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

int bits_sort_key(int bits) {
  return bits == QuantizerModel::kInfiniteBits
             ? std::numeric_limits<int>::max()
             : bits;
}

auto record_key(const ExperimentRecord& r) {
  return std::make_tuple(static_cast<int>(r.method), r.k,
                         bits_sort_key(r.bits), r.rho_dbm, r.trial);
}

struct KahanSum {
  double sum = 0.0;
  double compensation = 0.0;
  void add(double value) {
    const double y = value - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }
};

// All records of one trial, in deterministic intra-trial order.
std::vector<ExperimentRecord> run_trial(const ExperimentConfig& cfg,
                                        int trial) {
  const ChannelMatrix channel = trial_channel(cfg, trial);

  const bool want_random =
      std::find(cfg.methods.begin(), cfg.methods.end(), Method::kRandom) !=
      cfg.methods.end();
  const bool want_fas =
      std::find(cfg.methods.begin(), cfg.methods.end(), Method::kFas) !=
      cfg.methods.end();

  std::vector<ExperimentRecord> records;
  records.reserve(cfg.methods.size() * cfg.k_values.size() *
                  cfg.bits_values.size() * cfg.rho_dbm_values.size());

  for (const int k : cfg.k_values) {
    // The random baseline depends only on (trial, K): the same subset is
    // reused across every quantizer and power point of this trial.
    std::vector<int> random_order;
    if (want_random) {
      Rng selection_rng = Rng::substream(
          cfg.master_seed, {kSelectionStream,
                            static_cast<std::uint64_t>(trial),
                            static_cast<std::uint64_t>(k)});
      random_order = select_random(cfg.n_antennas, k, selection_rng).order;
    }
    for (const double rho_dbm : cfg.rho_dbm_values) {
      const double rho = dbm_to_linear_mw(rho_dbm);
      // The conventional baseline ignores the quantizer, so its pick is
      // shared across the bits sweep.
      std::vector<int> fas_order;
      if (want_fas) {
        fas_order = select_fas(channel, k, rho).order;
      }
      for (const int bits : cfg.bits_values) {
        const QuantizerModel q = bits == QuantizerModel::kInfiniteBits
                                     ? QuantizerModel::infinite()
                                     : QuantizerModel::from_bits(bits);
        for (const Method method : cfg.methods) {
          std::vector<int> order;
          switch (method) {
            case Method::kQafas:
              order = select_qafas(channel, k, rho, q).order;
              break;
            case Method::kFas:
              order = fas_order;
              break;
            case Method::kRandom:
              order = random_order;
              break;
            case Method::kExhaustive:
              order =
                  select_exhaustive(channel, k, rho, q, cfg.exhaustive_cap)
                      .order;
              break;
          }
          const double capacity =
              capacity_penalty_form(SubchannelView(channel, order), rho, q);
          records.push_back(
              {method, k, bits, rho_dbm, trial, capacity});
        }
      }
    }
  }
  return records;
}

}  // namespace

ChannelMatrix trial_channel(const ExperimentConfig& cfg, int trial) {
  Rng rng = Rng::substream(cfg.master_seed,
                           {kChannelStream, static_cast<std::uint64_t>(trial)});
  const Eigen::VectorXd gains =
      generate_large_scale(cfg.n_users, cfg.cell, rng);
  const Eigen::MatrixXcd fading =
      generate_small_scale(cfg.n_antennas, cfg.n_users, rng);
  return assemble_channel(fading, gains);
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kQafas:
      return "qafas";
    case Method::kFas:
      return "fas";
    case Method::kRandom:
      return "random";
    case Method::kExhaustive:
      return "exhaustive";
  }
  return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
  if (name == "qafas") return Method::kQafas;
  if (name == "fas") return Method::kFas;
  if (name == "random") return Method::kRandom;
  if (name == "exhaustive") return Method::kExhaustive;
  return std::nullopt;
}

void ExperimentConfig::validate() const {
  if (n_antennas < 1) {
    throw ConfigError("config: n_antennas must be >= 1.");
  }
  if (n_users < 1) {
    throw ConfigError("config: n_users must be >= 1.");
  }
  if (trials < 1) {
    throw ConfigError("config: trials must be >= 1.");
  }
  if (k_values.empty()) {
    throw ConfigError("config: k_values must be nonempty.");
  }
  for (const int k : k_values) {
    if (k < 1 || k > n_antennas) {
      throw ConfigError("config: k_values entry " + std::to_string(k) +
                        " must be in [1, n_antennas].");
    }
  }
  if (bits_values.empty()) {
    throw ConfigError("config: bits_values must be nonempty.");
  }
  for (const int bits : bits_values) {
    if (bits != QuantizerModel::kInfiniteBits && bits < 1) {
      throw ConfigError("config: bits_values entry " + std::to_string(bits) +
                        " must be >= 1 or inf.");
    }
  }
  if (rho_dbm_values.empty()) {
    throw ConfigError("config: rho_dbm_values must be nonempty.");
  }
  if (methods.empty()) {
    throw ConfigError("config: methods must be nonempty.");
  }
  cell.validate();
  if (std::find(methods.begin(), methods.end(), Method::kExhaustive) !=
      methods.end()) {
    for (const int k : k_values) {
      if (!exhaustive_within_cap(n_antennas, k, exhaustive_cap)) {
        throw SearchTooLargeError(
            "config: exhaustive search over (N_r=" +
            std::to_string(n_antennas) + ", K=" + std::to_string(k) +
            ") exceeds the cap of " + std::to_string(exhaustive_cap) +
            " subsets.");
      }
    }
  }
}

ExperimentConfig profile_config(std::string_view profile) {
  ExperimentConfig cfg;
  if (profile == "desk") {
    cfg.n_antennas = 64;
    cfg.trials = 200;
    return cfg;
  }
  if (profile == "paper") {
    return cfg;  // the defaults are already full scale
  }
  throw ConfigError("unknown profile '" + std::string(profile) +
                    "' (expected desk or paper).");
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();

  std::vector<std::vector<ExperimentRecord>> per_trial(cfg.trials);
  const unsigned hw = std::thread::hardware_concurrency();
  const int n_workers =
      std::max(1, std::min<int>(cfg.trials, hw == 0 ? 1 : static_cast<int>(hw)));

  if (n_workers == 1) {
    for (int trial = 0; trial < cfg.trials; ++trial) {
      per_trial[trial] = run_trial(cfg, trial);
    }
  } else {
    // Trials are pure functions of (config, trial), so striping them over
    // workers cannot change any value, only the completion order.
    std::vector<std::future<void>> workers;
    workers.reserve(n_workers);
    for (int w = 0; w < n_workers; ++w) {
      workers.push_back(std::async(std::launch::async, [&cfg, &per_trial, w,
                                                        n_workers]() {
        for (int trial = w; trial < cfg.trials; trial += n_workers) {
          per_trial[trial] = run_trial(cfg, trial);
        }
      }));
    }
    for (auto& worker : workers) {
      worker.get();
    }
  }

  std::vector<ExperimentRecord> records;
  for (auto& chunk : per_trial) {
    records.insert(records.end(), chunk.begin(), chunk.end());
  }
  std::sort(records.begin(), records.end(),
            [](const ExperimentRecord& a, const ExperimentRecord& b) {
              return record_key(a) < record_key(b);
            });
  return records;
}

std::vector<SummaryRow> summarize(
    const std::vector<ExperimentRecord>& records) {
  if (records.empty()) {
    throw ConfigError("summarize: empty record table.");
  }
  std::vector<ExperimentRecord> sorted = records;
  std::sort(sorted.begin(), sorted.end(),
            [](const ExperimentRecord& a, const ExperimentRecord& b) {
              return record_key(a) < record_key(b);
            });

  std::vector<SummaryRow> rows;
  std::size_t begin = 0;
  while (begin < sorted.size()) {
    std::size_t end = begin + 1;
    const auto same_cell = [&](const ExperimentRecord& r) {
      return r.method == sorted[begin].method && r.k == sorted[begin].k &&
             r.bits == sorted[begin].bits &&
             r.rho_dbm == sorted[begin].rho_dbm;
    };
    while (end < sorted.size() && same_cell(sorted[end])) {
      ++end;
    }
    const int count = static_cast<int>(end - begin);
    KahanSum total;
    for (std::size_t i = begin; i < end; ++i) {
      total.add(sorted[i].capacity_bps_hz);
    }
    const double mean = total.sum / count;
    double stderr_capacity = 0.0;
    if (count > 1) {
      KahanSum squares;
      for (std::size_t i = begin; i < end; ++i) {
        const double dev = sorted[i].capacity_bps_hz - mean;
        squares.add(dev * dev);
      }
      stderr_capacity =
          std::sqrt(squares.sum / (count - 1)) / std::sqrt(count);
    }
    rows.push_back({sorted[begin].method, sorted[begin].k, sorted[begin].bits,
                    sorted[begin].rho_dbm, count, mean, stderr_capacity});
    begin = end;
  }
  return rows;
}

}  // namespace qafas
