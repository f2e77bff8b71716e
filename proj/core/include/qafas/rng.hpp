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

#ifndef QAFAS_RNG_HPP_
#define QAFAS_RNG_HPP_

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace qafas {

/// Deterministic random source for channel synthesis and the Monte Carlo
/// harness. All draws are derived from the mt19937_64 bit stream through
/// fixed arithmetic (no implementation-defined std distributions), so a
/// given seed reproduces the same sequence everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for a (master seed, id path) pair. Trials, and
  /// selections within a trial, each get their own stream so they can be
  /// evaluated in any order without changing results.
  static Rng substream(std::uint64_t master_seed,
                       std::initializer_list<std::uint64_t> path);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer on [0, bound), bound >= 1. Unbiased via rejection.
  std::uint64_t uniform_int(std::uint64_t bound);

  /// Standard normal (Box-Muller; the second draw of each pair is cached).
  double normal();

  /// Circularly-symmetric complex normal with zero mean and unit variance.
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace qafas

#endif  // QAFAS_RNG_HPP_
