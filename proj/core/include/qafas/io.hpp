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

#ifndef QAFAS_IO_HPP_
#define QAFAS_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "qafas/channel.hpp"
#include "qafas/experiment.hpp"

namespace qafas {

/// 10-significant-digit rendering used on every text surface.
std::string format_double(double value);

/// "inf" for QuantizerModel::kInfiniteBits, the integer otherwise.
std::string format_bits(int bits);

/// Inverse of format_bits; throws ConfigError on anything else.
int parse_bits_token(const std::string& token);

// --- run and summary CSV ------------------------------------------------
// Run schema:     method,K,bits,rho_dbm,trial,capacity_bps_hz
// Summary schema: method,K,bits,rho_dbm,trials,mean_capacity,stderr

void write_records_csv(std::ostream& out,
                       const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> read_records_csv(std::istream& in);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

// --- flat "key = value" config files ------------------------------------
// Keys are the ExperimentConfig and CellConfig field names; lists are
// comma-separated; '#' starts a comment. Unknown keys are an error.

ExperimentConfig parse_config_text(std::istream& in, ExperimentConfig base);
ExperimentConfig load_config_file(const std::string& path,
                                  ExperimentConfig base);

// --- channel files --------------------------------------------------------
// First line "N_r N_u", then N_r lines of N_u whitespace-separated complex
// entries written as re+imj (e.g. 1.5-0.25j).

ChannelMatrix read_channel_text(std::istream& in);
ChannelMatrix load_channel_file(const std::string& path);
void write_channel_text(std::ostream& out, const ChannelMatrix& channel);

}  // namespace qafas

#endif  // QAFAS_IO_HPP_
