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

#ifndef QAFAS_ERRORS_HPP_
#define QAFAS_ERRORS_HPP_

#include <stdexcept>

namespace qafas {

/// Malformed experiment configuration: bad field values, unknown keys,
/// unparsable input files. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search was requested whose subset count exceeds the
/// configured cap. The CLI maps this to exit code 3.
class SearchTooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qafas

#endif  // QAFAS_ERRORS_HPP_
