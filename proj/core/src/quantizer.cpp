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

#include "qafas/quantizer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qafas {

namespace {

// Normalized MSE of the scalar minimum-MSE quantizer for Gaussian input,
// 1 through 5 bits. The closed-form tail below is only accurate past 5
// bits, so these stay hard-coded.
constexpr double kBetaTable[5] = {0.3634, 0.1175, 0.03454, 0.009497,
                                  0.002499};

}  // namespace

double beta_of_bits(int bits) {
  if (bits == QuantizerModel::kInfiniteBits) {
    return 0.0;
  }
  if (bits < 1) {
    throw std::invalid_argument(
        "beta_of_bits: resolution must be >= 1 bit (or infinite).");
  }
  if (bits <= 5) {
    return kBetaTable[bits - 1];
  }
  return std::numbers::pi * std::numbers::sqrt3 / 2.0 *
         std::exp2(-2.0 * static_cast<double>(bits));
}

QuantizerModel QuantizerModel::from_bits(int bits) {
  return QuantizerModel(bits, beta_of_bits(bits));
}

QuantizerModel QuantizerModel::infinite() {
  return QuantizerModel(kInfiniteBits, 0.0);
}

Eigen::DiagonalMatrix<double, Eigen::Dynamic> quantization_covariance(
    const Eigen::MatrixXcd& selected_rows, double rho,
    const QuantizerModel& q) {
  if (selected_rows.rows() == 0 || selected_rows.cols() == 0) {
    throw std::invalid_argument(
        "quantization_covariance: channel matrix must be nonempty.");
  }
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw std::invalid_argument(
        "quantization_covariance: rho must be finite and positive.");
  }
  const double scale = q.alpha() * (1.0 - q.alpha());
  Eigen::VectorXd diag(selected_rows.rows());
  for (Eigen::Index i = 0; i < selected_rows.rows(); ++i) {
    diag(i) = scale * (rho * selected_rows.row(i).squaredNorm() + 1.0);
  }
  return diag.asDiagonal();
}

double penalty_d(const Eigen::Ref<const Eigen::VectorXcd>& f, double rho,
                 const QuantizerModel& q) {
  if (rho < 0.0 || !std::isfinite(rho)) {
    throw std::invalid_argument("penalty_d: rho must be finite and >= 0.");
  }
  return 1.0 + rho * q.beta() * f.squaredNorm();
}

}  // namespace qafas
