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

#include "qafas/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qafas/errors.hpp"

namespace qafas {

namespace {

constexpr char kRunHeader[] = "method,K,bits,rho_dbm,trial,capacity_bps_hz";
constexpr char kSummaryHeader[] =
    "method,K,bits,rho_dbm,trials,mean_capacity,stderr";

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string::size_type begin = 0;
  while (true) {
    const auto end = text.find(separator, begin);
    if (end == std::string::npos) {
      parts.push_back(text.substr(begin));
      return parts;
    }
    parts.push_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
}

double parse_double(const std::string& token, const std::string& what) {
  const std::string t = trim(token);
  char* end = nullptr;
  const double value = std::strtod(t.c_str(), &end);
  if (end == t.c_str() || *end != '\0') {
    throw ConfigError(what + ": cannot parse number '" + t + "'.");
  }
  return value;
}

long parse_long(const std::string& token, const std::string& what) {
  const std::string t = trim(token);
  char* end = nullptr;
  const long value = std::strtol(t.c_str(), &end, 10);
  if (end == t.c_str() || *end != '\0') {
    throw ConfigError(what + ": cannot parse integer '" + t + "'.");
  }
  return value;
}

std::uint64_t parse_u64(const std::string& token, const std::string& what) {
  const std::string t = trim(token);
  char* end = nullptr;
  const unsigned long long value = std::strtoull(t.c_str(), &end, 10);
  if (end == t.c_str() || *end != '\0') {
    throw ConfigError(what + ": cannot parse integer '" + t + "'.");
  }
  return static_cast<std::uint64_t>(value);
}

// One complex entry in re+imj form; advances *cursor past it.
std::complex<double> parse_complex(const char* text, const char** cursor,
                                   const std::string& what) {
  char* end = nullptr;
  const double re = std::strtod(text, &end);
  if (end == text) {
    throw ConfigError(what + ": expected a complex entry, got '" +
                      std::string(text) + "'.");
  }
  if (*end != '+' && *end != '-') {
    throw ConfigError(what + ": complex entry must be re+imj, got '" +
                      std::string(text) + "'.");
  }
  const char* im_begin = end;
  const double im = std::strtod(im_begin, &end);
  if (end == im_begin || (*end != 'j' && *end != 'i')) {
    throw ConfigError(what + ": complex entry must be re+imj, got '" +
                      std::string(text) + "'.");
  }
  *cursor = end + 1;
  return {re, im};
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

std::string format_bits(int bits) {
  return bits == QuantizerModel::kInfiniteBits ? "inf" : std::to_string(bits);
}

int parse_bits_token(const std::string& token) {
  const std::string t = trim(token);
  if (t == "inf") {
    return QuantizerModel::kInfiniteBits;
  }
  const long bits = parse_long(t, "bits");
  if (bits < 1) {
    throw ConfigError("bits: must be >= 1 or inf, got '" + t + "'.");
  }
  return static_cast<int>(bits);
}

void write_records_csv(std::ostream& out,
                       const std::vector<ExperimentRecord>& records) {
  out << kRunHeader << '\n';
  for (const auto& r : records) {
    out << method_name(r.method) << ',' << r.k << ',' << format_bits(r.bits)
        << ',' << format_double(r.rho_dbm) << ',' << r.trial << ','
        << format_double(r.capacity_bps_hz) << '\n';
  }
}

std::vector<ExperimentRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kRunHeader) {
    throw ConfigError(std::string("records CSV: expected header '") +
                      kRunHeader + "'.");
  }
  std::vector<ExperimentRecord> records;
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) {
      continue;
    }
    const auto fields = split(trim(line), ',');
    const std::string where = "records CSV line " + std::to_string(line_number);
    if (fields.size() != 6) {
      throw ConfigError(where + ": expected 6 fields.");
    }
    const auto method = method_from_name(fields[0]);
    if (!method) {
      throw ConfigError(where + ": unknown method '" + fields[0] + "'.");
    }
    ExperimentRecord record;
    record.method = *method;
    record.k = static_cast<int>(parse_long(fields[1], where));
    record.bits = parse_bits_token(fields[2]);
    record.rho_dbm = parse_double(fields[3], where);
    record.trial = static_cast<int>(parse_long(fields[4], where));
    record.capacity_bps_hz = parse_double(fields[5], where);
    records.push_back(record);
  }
  return records;
}

void write_summary_csv(std::ostream& out,
                       const std::vector<SummaryRow>& rows) {
  out << kSummaryHeader << '\n';
  for (const auto& row : rows) {
    out << method_name(row.method) << ',' << row.k << ','
        << format_bits(row.bits) << ',' << format_double(row.rho_dbm) << ','
        << row.trials << ',' << format_double(row.mean_capacity) << ','
        << format_double(row.stderr_capacity) << '\n';
  }
}

ExperimentConfig parse_config_text(std::istream& in, ExperimentConfig base) {
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto comment = line.find('#');
    if (comment != std::string::npos) {
      line = line.substr(0, comment);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto equals = line.find('=');
    if (equals == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_number) +
                        ": expected key = value.");
    }
    const std::string key = trim(line.substr(0, equals));
    const std::string value = trim(line.substr(equals + 1));

    if (key == "n_antennas") {
      base.n_antennas = static_cast<int>(parse_long(value, key));
    } else if (key == "n_users") {
      base.n_users = static_cast<int>(parse_long(value, key));
    } else if (key == "k_values") {
      base.k_values.clear();
      for (const auto& token : split(value, ',')) {
        base.k_values.push_back(static_cast<int>(parse_long(token, key)));
      }
    } else if (key == "bits_values") {
      base.bits_values.clear();
      for (const auto& token : split(value, ',')) {
        base.bits_values.push_back(parse_bits_token(token));
      }
    } else if (key == "rho_dbm_values") {
      base.rho_dbm_values.clear();
      for (const auto& token : split(value, ',')) {
        base.rho_dbm_values.push_back(parse_double(token, key));
      }
    } else if (key == "trials") {
      base.trials = static_cast<int>(parse_long(value, key));
    } else if (key == "master_seed") {
      base.master_seed = parse_u64(value, key);
    } else if (key == "exhaustive_cap") {
      base.exhaustive_cap = parse_u64(value, key);
    } else if (key == "methods") {
      base.methods.clear();
      for (const auto& token : split(value, ',')) {
        const auto method = method_from_name(trim(token));
        if (!method) {
          throw ConfigError("config: unknown method '" + trim(token) + "'.");
        }
        base.methods.push_back(*method);
      }
    } else if (key == "cell_radius_m") {
      base.cell.cell_radius_m = parse_double(value, key);
    } else if (key == "min_distance_m") {
      base.cell.min_distance_m = parse_double(value, key);
    } else if (key == "carrier_freq_hz") {
      base.cell.carrier_freq_hz = parse_double(value, key);
    } else if (key == "bandwidth_hz") {
      base.cell.bandwidth_hz = parse_double(value, key);
    } else if (key == "shadowing_std_db") {
      base.cell.shadowing_std_db = parse_double(value, key);
    } else if (key == "noise_figure_db") {
      base.cell.noise_figure_db = parse_double(value, key);
    } else if (key == "pathloss_exponent") {
      base.cell.pathloss_exponent = parse_double(value, key);
    } else if (key == "reference_distance_m") {
      base.cell.reference_distance_m = parse_double(value, key);
    } else {
      throw ConfigError("config line " + std::to_string(line_number) +
                        ": unknown key '" + key + "'.");
    }
  }
  return base;
}

ExperimentConfig load_config_file(const std::string& path,
                                  ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'.");
  }
  return parse_config_text(in, std::move(base));
}

ChannelMatrix read_channel_text(std::istream& in) {
  int n_antennas = 0;
  int n_users = 0;
  if (!(in >> n_antennas >> n_users) || n_antennas < 1 || n_users < 1) {
    throw ConfigError("channel file: first line must be 'N_r N_u'.");
  }
  Eigen::MatrixXcd entries(n_antennas, n_users);
  std::string token;
  for (int antenna = 0; antenna < n_antennas; ++antenna) {
    for (int user = 0; user < n_users; ++user) {
      if (!(in >> token)) {
        throw ConfigError("channel file: expected " +
                          std::to_string(n_antennas * n_users) +
                          " entries, file ended early.");
      }
      const char* cursor = nullptr;
      const std::complex<double> value =
          parse_complex(token.c_str(), &cursor, "channel file");
      if (*cursor != '\0') {
        throw ConfigError("channel file: trailing characters in entry '" +
                          token + "'.");
      }
      entries(antenna, user) = value;
    }
  }
  return ChannelMatrix(std::move(entries));
}

ChannelMatrix load_channel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open channel file '" + path + "'.");
  }
  return read_channel_text(in);
}

void write_channel_text(std::ostream& out, const ChannelMatrix& channel) {
  out << channel.n_antennas() << ' ' << channel.n_users() << '\n';
  char buffer[128];
  for (int antenna = 0; antenna < channel.n_antennas(); ++antenna) {
    for (int user = 0; user < channel.n_users(); ++user) {
      const std::complex<double> value = channel.entries()(antenna, user);
      std::snprintf(buffer, sizeof(buffer), "%.10g%+.10gj", value.real(),
                    value.imag());
      out << buffer << (user + 1 == channel.n_users() ? '\n' : ' ');
    }
  }
}

}  // namespace qafas
