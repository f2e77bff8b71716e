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

#include "qafas/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qafas/errors.hpp"

namespace qafas {

namespace {

void check_selection_size(int k, int n_antennas, const char* where) {
  if (k < 1 || k > n_antennas) {
    throw std::invalid_argument(std::string(where) + ": K must be in [1, " +
                                std::to_string(n_antennas) + "], got " +
                                std::to_string(k) + ".");
  }
}

double capacity_increment(double rho_alpha, double ratio) {
  return std::log1p(rho_alpha * ratio) / std::numbers::ln2;
}

// Lexicographic successor of a K-combination of {0..n-1}; false at the end.
bool next_combination(std::vector<int>& combo, int n) {
  const int k = static_cast<int>(combo.size());
  for (int i = k - 1; i >= 0; --i) {
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (int j = i + 1; j < k; ++j) {
        combo[j] = combo[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

GreedySelector::GreedySelector(const ChannelMatrix& channel, double rho,
                               const QuantizerModel& q)
    : channel_(&channel) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw std::invalid_argument(
        "GreedySelector: rho must be finite and positive.");
  }
  if (!(q.alpha() > 0.0)) {
    throw std::invalid_argument(
        "GreedySelector: quantizer gain alpha must be positive.");
  }
  rho_alpha_ = rho * q.alpha();

  const int n_antennas = channel.n_antennas();
  gains_.resize(n_antennas);
  penalties_.resize(n_antennas);
  for (int j = 0; j < n_antennas; ++j) {
    const double row_gain = channel.entries().row(j).squaredNorm();
    gains_[j] = row_gain;
    penalties_[j] = 1.0 + rho * q.beta() * row_gain;
  }
  q_matrix_ = Eigen::MatrixXcd::Identity(channel.n_users(), channel.n_users());
  remaining_.resize(n_antennas);
  std::iota(remaining_.begin(), remaining_.end(), 0);
  selected_.reserve(n_antennas);
}

int GreedySelector::best_candidate() const {
  if (remaining_.empty()) {
    throw std::logic_error("GreedySelector: no candidates remain.");
  }
  int best = remaining_.front();
  double best_score = greedy_objective(gains_[best], penalties_[best]);
  for (std::size_t i = 1; i < remaining_.size(); ++i) {
    const int j = remaining_[i];
    const double score = greedy_objective(gains_[j], penalties_[j]);
    if (score > best_score) {  // strict: ties keep the lowest index
      best = j;
      best_score = score;
    }
  }
  return best;
}

void GreedySelector::select(int antenna) {
  const auto it =
      std::lower_bound(remaining_.begin(), remaining_.end(), antenna);
  if (it == remaining_.end() || *it != antenna) {
    throw std::invalid_argument("GreedySelector: antenna " +
                                std::to_string(antenna) +
                                " is not an unselected candidate.");
  }
  remaining_.erase(it);
  selected_.push_back(antenna);

  const double gain = gains_[antenna];
  const double penalty = penalties_[antenna];
  last_ratio_ = greedy_objective(gain, penalty);
  capacity_ += capacity_increment(rho_alpha_, last_ratio_);

  // d_J >= 1 keeps the radicand positive even for a zero-gain row, in
  // which case a = 0 and the state is unchanged.
  const Eigen::VectorXcd direction =
      (q_matrix_ * channel_->antenna_vector(antenna)) /
      std::sqrt(gain + penalty / rho_alpha_);
  q_matrix_ -= direction * direction.adjoint();

  // One multiply for all rows, then touch only the surviving candidates.
  const Eigen::VectorXcd overlap = channel_->entries() * direction;
  for (const int j : remaining_) {
    gains_[j] = std::max(gains_[j] - std::norm(overlap(j)), 0.0);
  }
}

int GreedySelector::select_best() {
  const int antenna = best_candidate();
  select(antenna);
  return antenna;
}

SelectionResult select_qafas(const ChannelMatrix& channel, int k, double rho,
                             const QuantizerModel& q) {
  check_selection_size(k, channel.n_antennas(), "select_qafas");
  GreedySelector selector(channel, rho, q);
  SelectionResult result;
  result.order.reserve(k);
  result.stage_capacity.reserve(k);
  result.stage_ratio.reserve(k);
  for (int stage = 0; stage < k; ++stage) {
    result.order.push_back(selector.select_best());
    result.stage_capacity.push_back(selector.cumulative_capacity());
    result.stage_ratio.push_back(selector.last_ratio());
  }
  return result;
}

SelectionResult select_fas(const ChannelMatrix& channel, int k, double rho) {
  return select_qafas(channel, k, rho, QuantizerModel::infinite());
}

SelectionResult select_random(int n_antennas, int k, Rng& rng) {
  check_selection_size(k, n_antennas, "select_random");
  std::vector<int> pool(n_antennas);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    const int j =
        i + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(
                n_antennas - i)));
    std::swap(pool[i], pool[j]);
  }
  SelectionResult result;
  result.order.assign(pool.begin(), pool.begin() + k);
  return result;
}

bool exhaustive_within_cap(int n_antennas, int k, std::uint64_t cap) {
  // Exact prefix-binomial products; each step grows the count by at most a
  // factor of n_antennas, so the early exit fires long before overflow.
  unsigned __int128 count = 1;
  for (int i = 1; i <= k; ++i) {
    count = count * static_cast<unsigned>(n_antennas - k + i) /
            static_cast<unsigned>(i);
    if (count > cap) {
      return false;
    }
  }
  return true;
}

SelectionResult select_exhaustive(const ChannelMatrix& channel, int k,
                                  double rho, const QuantizerModel& q,
                                  std::uint64_t max_subsets) {
  const int n_antennas = channel.n_antennas();
  check_selection_size(k, n_antennas, "select_exhaustive");
  if (!exhaustive_within_cap(n_antennas, k, max_subsets)) {
    throw SearchTooLargeError(
        "select_exhaustive: (" + std::to_string(n_antennas) + " choose " +
        std::to_string(k) + ") exceeds the cap of " +
        std::to_string(max_subsets) + " subsets.");
  }

  std::vector<int> combo(k);
  std::iota(combo.begin(), combo.end(), 0);
  std::vector<int> best_combo = combo;
  double best_capacity = -1.0;
  do {
    const double capacity =
        capacity_penalty_form(SubchannelView(channel, combo), rho, q);
    if (capacity > best_capacity) {  // strict: first (lex-smallest) wins ties
      best_capacity = capacity;
      best_combo = combo;
    }
  } while (next_combination(combo, n_antennas));

  return trace_selection(channel, best_combo, rho, q);
}

SelectionResult trace_selection(const ChannelMatrix& channel,
                                const std::vector<int>& order, double rho,
                                const QuantizerModel& q) {
  SubchannelView full(channel, order);  // validates indices
  SelectionResult result;
  result.order = order;
  result.stage_capacity.reserve(order.size());
  result.stage_ratio.reserve(order.size());
  double previous = 0.0;
  for (std::size_t prefix = 1; prefix <= order.size(); ++prefix) {
    const SubchannelView view(
        channel, std::vector<int>(order.begin(), order.begin() + prefix));
    const double capacity = capacity_penalty_form(view, rho, q);
    result.stage_capacity.push_back(capacity);
    result.stage_ratio.push_back(
        (std::exp2(capacity - previous) - 1.0) / (rho * q.alpha()));
    previous = capacity;
  }
  return result;
}

}  // namespace qafas
