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

#ifndef QAFAS_QUANTIZER_HPP_
#define QAFAS_QUANTIZER_HPP_

#include <Eigen/Dense>

namespace qafas {

/// Additive-noise linearization of a b-bit scalar minimum-MSE quantizer.
/// beta is the normalized mean squared quantization error (tabulated for
/// b <= 5, closed-form tail above) and alpha = 1 - beta is the gain the
/// linearized quantizer applies to its input. alpha + beta == 1 exactly.
class QuantizerModel {
 public:
  /// Distinguished resolution meaning "no quantization". Modeled as
  /// alpha == 1 exactly, never as a large finite b.
  static constexpr int kInfiniteBits = -1;

  /// bits >= 1; throws std::invalid_argument otherwise.
  static QuantizerModel from_bits(int bits);
  static QuantizerModel infinite();

  /// kInfiniteBits for the perfect quantizer.
  int bits() const { return bits_; }
  bool is_infinite() const { return bits_ == kInfiniteBits; }
  double beta() const { return beta_; }
  double alpha() const { return alpha_; }

 private:
  // alpha is the rounded complement of the tabulated beta; beta is then
  // re-derived as 1 - alpha, which is exact for alpha in [0.5, 1], so the
  // pair always sums to 1 bit-exactly.
  explicit QuantizerModel(int bits, double beta)
      : bits_(bits), alpha_(1.0 - beta), beta_(1.0 - alpha_) {}

  int bits_;
  double alpha_;
  double beta_;
};

/// Distortion factor of a b-bit quantizer: tabulated constants for
/// b in {1..5}, (pi sqrt(3) / 2) 2^(-2b) for finite b > 5, and 0 for
/// kInfiniteBits. Throws std::invalid_argument for b <= 0.
double beta_of_bits(int bits);

/// Quantization-noise covariance of the K selected antennas,
///   R_qq = alpha (1 - alpha) diag(rho H_K H_K^H + I),
/// where selected_rows is H_K with one selected antenna per row. Diagonal
/// by construction; every entry is >= alpha (1 - alpha).
Eigen::DiagonalMatrix<double, Eigen::Dynamic> quantization_covariance(
    const Eigen::MatrixXcd& selected_rows, double rho,
    const QuantizerModel& q);

/// Per-antenna penalty d = 1 + rho (1 - alpha) ||f||^2 for the antenna
/// whose channel vector is f. Equals 1 under perfect quantization and is
/// nondecreasing in ||f||^2, rho and beta.
double penalty_d(const Eigen::Ref<const Eigen::VectorXcd>& f, double rho,
                 const QuantizerModel& q);

}  // namespace qafas

#endif  // QAFAS_QUANTIZER_HPP_
