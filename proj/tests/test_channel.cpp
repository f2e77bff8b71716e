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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <stdexcept>

#include "qafas/errors.hpp"

namespace qafas {
namespace {

using Catch::Approx;

TEST_CASE("small-scale fading is deterministic under the seed") {
  Rng rng_a(42);
  Rng rng_b(42);
  const auto a = generate_small_scale(5, 4, rng_a);
  const auto b = generate_small_scale(5, 4, rng_b);
  CHECK(a == b);

  Rng rng_c(43);
  const auto c = generate_small_scale(5, 4, rng_c);
  CHECK(a != c);
}

TEST_CASE("small-scale fading shape and dimension errors") {
  Rng rng(1);
  const auto m = generate_small_scale(2, 3, rng);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK_THROWS_AS(generate_small_scale(0, 3, rng), std::invalid_argument);
  CHECK_THROWS_AS(generate_small_scale(3, 0, rng), std::invalid_argument);
}

TEST_CASE("small-scale fading has unit power") {
  Rng rng(7);
  const auto m = generate_small_scale(10000, 1, rng);
  const double mean_power = m.squaredNorm() / 10000.0;
  CHECK(mean_power == Approx(1.0).epsilon(0.05));
  // real and imaginary parts carry half the power each
  const double real_power = m.real().squaredNorm() / 10000.0;
  CHECK(real_power == Approx(0.5).epsilon(0.1));
}

TEST_CASE("substreams are deterministic and distinct") {
  CHECK(Rng::substream(99, {1, 0}).next_u64() ==
        Rng::substream(99, {1, 0}).next_u64());
  CHECK(Rng::substream(99, {1, 0}).next_u64() !=
        Rng::substream(99, {1, 1}).next_u64());
  CHECK(Rng::substream(99, {1, 0}).next_u64() !=
        Rng::substream(98, {1, 0}).next_u64());
}

TEST_CASE("log-distance pathloss drops 10 exponent dB per decade") {
  const CellConfig cell;
  const double near = large_scale_gain(cell.reference_distance_m, 0.0, cell);
  const double far =
      large_scale_gain(10.0 * cell.reference_distance_m, 0.0, cell);
  const double delta_db = 10.0 * std::log10(far / near);
  CHECK(delta_db == Approx(-37.6).margin(1e-9));
}

TEST_CASE("large-scale gains are positive and deterministic") {
  const CellConfig cell;
  Rng rng_a(5);
  Rng rng_b(5);
  const auto a = generate_large_scale(8, cell, rng_a);
  const auto b = generate_large_scale(8, cell, rng_b);
  CHECK(a == b);
  for (int i = 0; i < a.size(); ++i) {
    CHECK(a(i) > 0.0);
  }
}

TEST_CASE("degenerate placement with no shadowing gives equal gains") {
  CellConfig cell;
  cell.shadowing_std_db = 0.0;
  cell.min_distance_m = 2000.0 - 1e-6;  // pin users to (almost) one radius
  Rng rng(3);
  const auto gains = generate_large_scale(6, cell, rng);
  for (int i = 1; i < gains.size(); ++i) {
    CHECK(gains(i) == Approx(gains(0)).epsilon(1e-6));
  }
}

TEST_CASE("cell config validation names bad fields") {
  CellConfig cell;
  cell.min_distance_m = 3000.0;
  CHECK_THROWS_AS(cell.validate(), ConfigError);
  cell = CellConfig{};
  cell.shadowing_std_db = -1.0;
  CHECK_THROWS_AS(cell.validate(), ConfigError);
  cell = CellConfig{};
  cell.pathloss_exponent = 0.0;
  CHECK_THROWS_AS(cell.validate(), ConfigError);
}

TEST_CASE("assemble_channel scales columns by sqrt gain") {
  Eigen::MatrixXcd small = Eigen::MatrixXcd::Ones(3, 1);
  Eigen::VectorXd gains(1);
  gains << 4.0;
  const auto channel = assemble_channel(small, gains);
  for (int i = 0; i < 3; ++i) {
    CHECK(channel.entries()(i, 0).real() == Approx(2.0));
  }

  // unit gains pass through
  Eigen::MatrixXcd small2 = Eigen::MatrixXcd::Random(4, 3);
  const auto channel2 =
      assemble_channel(small2, Eigen::VectorXd::Ones(3));
  CHECK(channel2.entries() == small2);

  // zero gain is a legal degenerate column
  Eigen::VectorXd zero_gain(1);
  zero_gain << 0.0;
  const auto channel3 = assemble_channel(small, zero_gain);
  CHECK(channel3.entries().isZero(0.0));
}

TEST_CASE("assemble_channel rejects mismatches and negative gains") {
  const Eigen::MatrixXcd small = Eigen::MatrixXcd::Ones(3, 2);
  CHECK_THROWS_AS(assemble_channel(small, Eigen::VectorXd::Ones(3)),
                  std::invalid_argument);
  Eigen::VectorXd negative(2);
  negative << 1.0, -1.0;
  CHECK_THROWS_AS(assemble_channel(small, negative), std::invalid_argument);
}

TEST_CASE("ChannelMatrix rejects empty and non-finite input") {
  CHECK_THROWS_AS(ChannelMatrix(Eigen::MatrixXcd(0, 2)),
                  std::invalid_argument);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Ones(2, 2);
  bad(1, 1) = std::complex<double>(std::nan(""), 0.0);
  CHECK_THROWS_AS(ChannelMatrix(bad), std::invalid_argument);
}

TEST_CASE("assembled column power matches the large-scale gain") {
  // E|H_ji|^2 = gamma_i over small-scale realizations
  const int n_draws = 10000;
  Eigen::VectorXd gains(3);
  gains << 0.5, 2.0, 9.0;
  Rng rng(2024);
  Eigen::VectorXd accumulated = Eigen::VectorXd::Zero(3);
  for (int draw = 0; draw < n_draws; ++draw) {
    const auto small = generate_small_scale(1, 3, rng);
    const auto channel = assemble_channel(small, gains);
    for (int user = 0; user < 3; ++user) {
      accumulated(user) += std::norm(channel.entries()(0, user));
    }
  }
  for (int user = 0; user < 3; ++user) {
    CHECK(accumulated(user) / n_draws ==
          Approx(gains(user)).epsilon(0.05));
  }
}

TEST_CASE("full channel pipeline is a pure function of config and seed") {
  const CellConfig cell;
  const auto make = [&](std::uint64_t seed) {
    Rng rng = Rng::substream(seed, {0});
    const auto gains = generate_large_scale(4, cell, rng);
    const auto small = generate_small_scale(16, 4, rng);
    return assemble_channel(small, gains);
  };
  CHECK(make(11).entries() == make(11).entries());
  CHECK(make(11).entries() != make(12).entries());
}

}  // namespace
}  // namespace qafas
