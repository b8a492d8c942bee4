// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lexshift/conllu.hpp"
#include "lexshift/stats.hpp"

namespace lexshift {

// {"emoji": {"sentence_rate": r, "sentences": s, "token_count": t}, ...}
std::string feature_rate_report_to_json(const FeatureRateReport& report);

// Counts, length statistics, per-UPOS histogram, feature rates and violations.
std::string stats_report_to_json(std::string_view label, const ValidationReport& validation,
                                 const LengthStats& lengths, const FeatureRateReport& features);

// Side-by-side feature rates of two corpora.
std::string diff_report_to_json(std::string_view label_a, const FeatureRateReport& a,
                                std::string_view label_b, const FeatureRateReport& b);

std::string_view tool_version();

struct FileDigest {
  std::string path;
  std::string sha256;
};

struct RunManifest {
  std::string tool_version;
  std::string command;
  std::string config_json;  // snapshot, embedded as an object
  std::uint64_t master_seed = 0;
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;
  std::string started_at;   // ISO-8601 UTC
  std::string finished_at;
};

std::string manifest_to_json(const RunManifest& manifest);

std::string utc_timestamp(std::chrono::system_clock::time_point when = std::chrono::system_clock::now());

}  // namespace lexshift
