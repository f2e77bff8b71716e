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

#include "qafas/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qafas/errors.hpp"

namespace qafas {

namespace {

constexpr double kSpeedOfLight = 299792458.0;

}  // namespace

void CellConfig::validate() const {
  if (!(min_distance_m > 0.0)) {
    throw ConfigError("cell config: min_distance_m must be > 0.");
  }
  if (!(min_distance_m < cell_radius_m)) {
    throw ConfigError(
        "cell config: min_distance_m must be smaller than cell_radius_m.");
  }
  if (!(shadowing_std_db >= 0.0)) {
    throw ConfigError("cell config: shadowing_std_db must be >= 0.");
  }
  if (!(pathloss_exponent > 0.0)) {
    throw ConfigError("cell config: pathloss_exponent must be > 0.");
  }
  if (!(carrier_freq_hz > 0.0)) {
    throw ConfigError("cell config: carrier_freq_hz must be > 0.");
  }
  if (!(bandwidth_hz > 0.0)) {
    throw ConfigError("cell config: bandwidth_hz must be > 0.");
  }
  if (!(reference_distance_m > 0.0)) {
    throw ConfigError("cell config: reference_distance_m must be > 0.");
  }
}

ChannelMatrix::ChannelMatrix(Eigen::MatrixXcd entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.cols() < 1) {
    throw std::invalid_argument("ChannelMatrix: dimensions must be >= 1.");
  }
  if (!entries_.allFinite()) {
    throw std::invalid_argument("ChannelMatrix: entries must be finite.");
  }
}

Eigen::MatrixXcd generate_small_scale(int n_antennas, int n_users, Rng& rng) {
  if (n_antennas < 1 || n_users < 1) {
    throw std::invalid_argument(
        "generate_small_scale: dimensions must be >= 1, got " +
        std::to_string(n_antennas) + " x " + std::to_string(n_users) + ".");
  }
  Eigen::MatrixXcd fading(n_antennas, n_users);
  for (int user = 0; user < n_users; ++user) {
    for (int antenna = 0; antenna < n_antennas; ++antenna) {
      fading(antenna, user) = rng.complex_normal();
    }
  }
  return fading;
}

double large_scale_gain(double distance_m, double shadowing_db,
                        const CellConfig& cell) {
  if (!(distance_m > 0.0)) {
    throw std::invalid_argument("large_scale_gain: distance must be > 0.");
  }
  // Free-space loss at the reference distance anchors the intercept.
  const double reference_loss_db =
      20.0 * std::log10(4.0 * std::numbers::pi * cell.reference_distance_m *
                        cell.carrier_freq_hz / kSpeedOfLight);
  const double pathloss_db =
      reference_loss_db + 10.0 * cell.pathloss_exponent *
                              std::log10(distance_m / cell.reference_distance_m);
  // -174 dBm/Hz thermal floor plus bandwidth and noise figure; dividing by
  // the noise power makes the AWGN in the receive model unit variance.
  const double noise_norm_db =
      174.0 - 10.0 * std::log10(cell.bandwidth_hz) - cell.noise_figure_db;
  const double gain_db = -pathloss_db - shadowing_db + noise_norm_db;
  return std::pow(10.0, gain_db / 10.0);
}

Eigen::VectorXd generate_large_scale(int n_users, const CellConfig& cell,
                                     Rng& rng) {
  if (n_users < 1) {
    throw std::invalid_argument("generate_large_scale: n_users must be >= 1.");
  }
  cell.validate();
  const double r2_min = cell.min_distance_m * cell.min_distance_m;
  const double r2_max = cell.cell_radius_m * cell.cell_radius_m;
  Eigen::VectorXd gains(n_users);
  for (int user = 0; user < n_users; ++user) {
    // Uniform over the annulus area: density proportional to the radius.
    const double distance = std::sqrt(r2_min + rng.uniform() * (r2_max - r2_min));
    const double shadowing = cell.shadowing_std_db * rng.normal();
    gains(user) = large_scale_gain(distance, shadowing, cell);
  }
  return gains;
}

ChannelMatrix assemble_channel(const Eigen::MatrixXcd& small_scale,
                               const Eigen::VectorXd& large_scale) {
  if (small_scale.cols() != large_scale.size()) {
    throw std::invalid_argument(
        "assemble_channel: one large-scale gain per user is required.");
  }
  Eigen::MatrixXcd entries = small_scale;
  for (Eigen::Index user = 0; user < large_scale.size(); ++user) {
    const double gain = large_scale(user);
    if (gain < 0.0) {
      throw std::invalid_argument(
          "assemble_channel: large-scale gains must be >= 0.");
    }
    entries.col(user) *= std::sqrt(gain);
  }
  return ChannelMatrix(std::move(entries));
}

}  // namespace qafas
