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

#ifndef QAFAS_CAPACITY_HPP_
#define QAFAS_CAPACITY_HPP_

#include <vector>

#include <Eigen/Dense>

#include "qafas/channel.hpp"
#include "qafas/quantizer.hpp"

namespace qafas {

/// An ordered subset of receive antennas of a parent channel. Indices are
/// distinct and in [0, n_antennas); the empty subset is legal.
class SubchannelView {
 public:
  SubchannelView(const ChannelMatrix& parent, std::vector<int> indices);

  const ChannelMatrix& parent() const { return *parent_; }
  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }

  /// H_K: the selected rows stacked in selection order (K x N_u).
  Eigen::MatrixXcd selected_rows() const;

 private:
  const ChannelMatrix* parent_;
  std::vector<int> indices_;
};

/// Achievable capacity of the selected subchannel under coarse
/// quantization, in bits/s/Hz:
///   log2 det(I + rho alpha^2 (alpha^2 I + R_qq)^{-1} H_K H_K^H),
/// evaluated in the K x K domain through a symmetrically scaled Cholesky
/// factorization. Zero for the empty selection.
double capacity_covariance_form(const SubchannelView& sub, double rho,
                                const QuantizerModel& q);

/// Algebraically equal diagonal-penalty form
///   log2 det(I + rho alpha D^{-1} H_K H_K^H),
/// D = diag(1 + rho (1 - alpha) ||f_i||^2), evaluated on the N_u x N_u
/// dual side (the small side once K grows past N_u). Zero for the empty
/// selection; also valid at alpha = 1 where D collapses to I.
double capacity_penalty_form(const SubchannelView& sub, double rho,
                             const QuantizerModel& q);

}  // namespace qafas

#endif  // QAFAS_CAPACITY_HPP_
