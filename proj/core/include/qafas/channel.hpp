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

#ifndef QAFAS_CHANNEL_HPP_
#define QAFAS_CHANNEL_HPP_

#include <Eigen/Dense>

#include "qafas/rng.hpp"

namespace qafas {

/// Cell geometry and link-budget constants for the large-scale fading
/// draw. Gains are normalized so the additive receiver noise has unit
/// variance; transmit power is then linear milliwatts (dBm at the CLI).
struct CellConfig {
  double cell_radius_m = 2000.0;
  double min_distance_m = 100.0;
  double carrier_freq_hz = 2.4e9;
  double bandwidth_hz = 10e6;
  double shadowing_std_db = 8.7;
  double noise_figure_db = 5.0;
  double pathloss_exponent = 3.76;
  double reference_distance_m = 100.0;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Complex N_r x N_u uplink channel. Column i is user i's channel vector
/// sqrt(gamma_i) g_i; row i (written f_i^H) is what receive antenna i
/// sees across users.
class ChannelMatrix {
 public:
  /// Throws std::invalid_argument on empty or non-finite input.
  explicit ChannelMatrix(Eigen::MatrixXcd entries);

  int n_antennas() const { return static_cast<int>(entries_.rows()); }
  int n_users() const { return static_cast<int>(entries_.cols()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

  /// Channel vector f_i of antenna i (conjugate of row i), as a column.
  Eigen::VectorXcd antenna_vector(int antenna) const {
    return entries_.row(antenna).adjoint();
  }

 private:
  Eigen::MatrixXcd entries_;
};

/// i.i.d. CN(0, 1) small-scale fading (real and imaginary parts each of
/// variance 1/2), filled column by column. Identical (dims, seed) pairs
/// produce bit-identical matrices.
Eigen::MatrixXcd generate_small_scale(int n_antennas, int n_users, Rng& rng);

/// Noise-normalized linear gain of a user at the given distance with the
/// given shadowing draw (dB): log-distance pathloss anchored at the
/// free-space loss of the reference distance, minus shadowing, plus the
/// thermal-noise normalization 174 - 10 log10(BW) - NF.
double large_scale_gain(double distance_m, double shadowing_db,
                        const CellConfig& cell);

/// Per-user large-scale gains gamma_i. Users are placed uniformly over
/// the annulus area between min_distance_m and cell_radius_m; shadowing
/// is lognormal (normal in dB), independent per user.
Eigen::VectorXd generate_large_scale(int n_users, const CellConfig& cell,
                                     Rng& rng);

/// Column i of the result is sqrt(gamma_i) times column i of small_scale.
/// Zero gains are legal and produce zero columns.
ChannelMatrix assemble_channel(const Eigen::MatrixXcd& small_scale,
                               const Eigen::VectorXd& large_scale);

}  // namespace qafas

#endif  // QAFAS_CHANNEL_HPP_
