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

#include "qafas/capacity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qafas {

namespace {

void check_rho(double rho, const char* where) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw std::invalid_argument(std::string(where) +
                                ": rho must be finite and positive.");
  }
}

void check_quantizer(const QuantizerModel& q, const char* where) {
  if (!(q.alpha() > 0.0)) {
    throw std::invalid_argument(std::string(where) +
                                ": quantizer gain alpha must be positive.");
  }
}

// log2 det of a Hermitian positive definite matrix via Cholesky.
double log2_det_hermitian(Eigen::MatrixXcd matrix, const char* where) {
  const Eigen::LLT<Eigen::MatrixXcd, Eigen::Lower> llt(std::move(matrix));
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error(std::string(where) +
                             ": Cholesky factorization failed.");
  }
  double log_det = 0.0;
  const auto& factor = llt.matrixLLT();
  for (Eigen::Index i = 0; i < factor.rows(); ++i) {
    log_det += std::log(factor(i, i).real());
  }
  return 2.0 * log_det / std::numbers::ln2;
}

}  // namespace

SubchannelView::SubchannelView(const ChannelMatrix& parent,
                               std::vector<int> indices)
    : parent_(&parent), indices_(std::move(indices)) {
  std::vector<char> seen(parent.n_antennas(), 0);
  for (int index : indices_) {
    if (index < 0 || index >= parent.n_antennas()) {
      throw std::invalid_argument("SubchannelView: antenna index " +
                                  std::to_string(index) + " out of range.");
    }
    if (seen[index]) {
      throw std::invalid_argument("SubchannelView: antenna index " +
                                  std::to_string(index) + " repeated.");
    }
    seen[index] = 1;
  }
}

Eigen::MatrixXcd SubchannelView::selected_rows() const {
  Eigen::MatrixXcd rows(indices_.size(), parent_->n_users());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    rows.row(i) = parent_->entries().row(indices_[i]);
  }
  return rows;
}

double capacity_covariance_form(const SubchannelView& sub, double rho,
                                const QuantizerModel& q) {
  check_rho(rho, "capacity_covariance_form");
  check_quantizer(q, "capacity_covariance_form");
  if (sub.size() == 0) {
    return 0.0;
  }
  const double alpha = q.alpha();
  Eigen::MatrixXcd rows = sub.selected_rows();
  const Eigen::VectorXd noise_diag =
      quantization_covariance(rows, rho, q).diagonal();

  // det(I + rho a^2 S^{-1} H H^H) with S = a^2 I + R_qq equals
  // det(I + A A^H) for A = sqrt(rho) a S^{-1/2} H, which is Hermitian
  // positive definite and safe to factor.
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    const double s = alpha * alpha + noise_diag(i);
    rows.row(i) *= std::sqrt(rho) * alpha / std::sqrt(s);
  }
  Eigen::MatrixXcd gram =
      Eigen::MatrixXcd::Identity(rows.rows(), rows.rows());
  gram.selfadjointView<Eigen::Lower>().rankUpdate(rows, 1.0);
  return log2_det_hermitian(std::move(gram), "capacity_covariance_form");
}

double capacity_penalty_form(const SubchannelView& sub, double rho,
                             const QuantizerModel& q) {
  check_rho(rho, "capacity_penalty_form");
  check_quantizer(q, "capacity_penalty_form");
  if (sub.size() == 0) {
    return 0.0;
  }
  const int n_users = sub.parent().n_users();
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Identity(n_users, n_users);
  for (int index : sub.indices()) {
    const Eigen::VectorXcd f = sub.parent().antenna_vector(index);
    const double d = penalty_d(f, rho, q);
    gram.selfadjointView<Eigen::Lower>().rankUpdate(f, rho * q.alpha() / d);
  }
  return log2_det_hermitian(std::move(gram), "capacity_penalty_form");
}

}  // namespace qafas
