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

#ifndef QAFAS_SELECTION_HPP_
#define QAFAS_SELECTION_HPP_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qafas/capacity.hpp"
#include "qafas/channel.hpp"
#include "qafas/quantizer.hpp"
#include "qafas/rng.hpp"

namespace qafas {

/// Outcome of a selection run: the chosen antenna indices in pick order,
/// the cumulative capacity after each stage, and the winning objective
/// ratio c_J / d_J per stage.
struct SelectionResult {
  std::vector<int> order;
  std::vector<double> stage_capacity;
  std::vector<double> stage_ratio;
};

/// Greedy score of a candidate: its capacity gain c_j discounted by the
/// quantization penalty d_j its own aggregate channel gain would add.
inline double greedy_objective(double c_j, double d_j) { return c_j / d_j; }

/// Incremental state of the greedy capacity-maximization recursion.
///
/// Maintains Q_n = (I + rho alpha H_n^H D_n^{-1} H_n)^{-1} on the
/// N_u x N_u dual side together with the candidate gains
/// c_j = f_j^H Q_n f_j, updating both with a rank-one step per selection:
///   a   = (c_J + d_J / (rho alpha))^{-1/2} Q f_J,
///   Q  <- Q - a a^H,
///   c_j <- c_j - |f_j^H a|^2.
/// One stage therefore costs O(N_u^2 + N_r N_u); a K-of-N_r selection is
/// O(K N_u N_r) overall. No K x K matrix is ever formed.
class GreedySelector {
 public:
  /// Throws std::invalid_argument for non-positive rho.
  GreedySelector(const ChannelMatrix& channel, double rho,
                 const QuantizerModel& q);

  int n_selected() const { return static_cast<int>(selected_.size()); }
  bool exhausted() const { return remaining_.empty(); }

  /// Candidate maximizing c_j / d_j; ties go to the lowest index.
  int best_candidate() const;

  /// Runs one selection stage for the given candidate (must be
  /// unselected). Exposed so callers can force a pick.
  void select(int antenna);

  /// best_candidate() + select(); returns the picked antenna.
  int select_best();

  double cumulative_capacity() const { return capacity_; }
  double last_ratio() const { return last_ratio_; }

  // State accessors, used by the selection wrappers and by verification.
  const Eigen::MatrixXcd& q_matrix() const { return q_matrix_; }
  double gain(int antenna) const { return gains_[antenna]; }
  double penalty(int antenna) const { return penalties_[antenna]; }
  const std::vector<int>& remaining() const { return remaining_; }
  const std::vector<int>& selected() const { return selected_; }

 private:
  const ChannelMatrix* channel_;
  double rho_alpha_;
  Eigen::MatrixXcd q_matrix_;
  std::vector<double> gains_;      // c_j; stale once antenna j is selected
  std::vector<double> penalties_;  // d_j
  std::vector<int> remaining_;     // ascending
  std::vector<int> selected_;
  double capacity_ = 0.0;
  double last_ratio_ = 0.0;
};

/// Greedy quantization-aware selection of K of the N_r antennas.
SelectionResult select_qafas(const ChannelMatrix& channel, int k, double rho,
                             const QuantizerModel& q);

/// Conventional greedy selection for an unquantized receiver: exactly the
/// alpha = 1 parameterization of select_qafas, not a separate code path.
SelectionResult select_fas(const ChannelMatrix& channel, int k, double rho);

/// Uniformly random K-subset (partial Fisher-Yates). Stage capacities are
/// not filled in; run trace_selection afterwards if they are needed.
SelectionResult select_random(int n_antennas, int k, Rng& rng);

/// True when (n_antennas choose k) is at most cap: the admission check
/// select_exhaustive applies, exposed so sweep configs can pre-validate.
bool exhaustive_within_cap(int n_antennas, int k, std::uint64_t cap);

/// Brute-force oracle: maximizes capacity_penalty_form over all
/// (N_r choose K) subsets, ties resolved toward the lexicographically
/// smallest index sequence. Throws SearchTooLargeError when the subset
/// count exceeds max_subsets.
SelectionResult select_exhaustive(const ChannelMatrix& channel, int k,
                                  double rho, const QuantizerModel& q,
                                  std::uint64_t max_subsets = 1000000);

/// Prefix capacity trace for an externally produced selection order; the
/// per-stage ratio is backed out of each capacity increment.
SelectionResult trace_selection(const ChannelMatrix& channel,
                                const std::vector<int>& order, double rho,
                                const QuantizerModel& q);

}  // namespace qafas

#endif  // QAFAS_SELECTION_HPP_
