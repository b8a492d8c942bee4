// SPDX-License-Identifier: Apache-2.0
#include "lexshift/reports.hpp"

#include <ctime>

#include "json.hpp"

#ifndef LEXSHIFT_VERSION
#define LEXSHIFT_VERSION "0.0.0"
#endif

namespace lexshift {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

ordered_json features_value(const FeatureRateReport& report) {
  ordered_json out = ordered_json::object();
  for (Feature f : kAllFeatures) {
    const FeatureRate& rate = report[f];
    out[std::string(to_string(f))] = {{"sentence_rate", rate.sentence_rate},
                                      {"sentences", rate.sentences_with},
                                      {"token_count", rate.token_count}};
  }
  return out;
}

}  // namespace

std::string feature_rate_report_to_json(const FeatureRateReport& report) {
  return features_value(report).dump(2) + "\n";
}

std::string stats_report_to_json(std::string_view label, const ValidationReport& validation,
                                 const LengthStats& lengths, const FeatureRateReport& features) {
  ordered_json upos = ordered_json::object();
  for (Upos tag : kAllUpos) upos[std::string(to_string(tag))] = validation.count(tag);
  ordered_json violations = ordered_json::array();
  for (const Violation& v : validation.violations) {
    ordered_json item = {{"sentence", v.sentence_index}, {"message", v.message}};
    if (v.token_index) item["token"] = *v.token_index;
    violations.push_back(std::move(item));
  }
  ordered_json doc = {
      {"label", label},
      {"sentences", validation.sentences},
      {"tokens", validation.tokens},
      {"length", {{"mean_tokens", lengths.mean_tokens},
                  {"std_tokens", lengths.std_tokens},
                  {"n_sentences", lengths.n_sentences}}},
      {"upos", std::move(upos)},
      {"features", features_value(features)},
      {"violations", std::move(violations)},
  };
  return doc.dump(2) + "\n";
}

std::string diff_report_to_json(std::string_view label_a, const FeatureRateReport& a,
                                std::string_view label_b, const FeatureRateReport& b) {
  ordered_json features = ordered_json::object();
  for (Feature f : kAllFeatures) {
    features[std::string(to_string(f))] = {
        {"a", {{"sentence_rate", a[f].sentence_rate}, {"token_count", a[f].token_count}}},
        {"b", {{"sentence_rate", b[f].sentence_rate}, {"token_count", b[f].token_count}}},
        {"delta_sentence_rate", b[f].sentence_rate - a[f].sentence_rate}};
  }
  ordered_json doc = {{"a", {{"label", label_a}, {"sentences", a.n_sentences}}},
                      {"b", {{"label", label_b}, {"sentences", b.n_sentences}}},
                      {"features", std::move(features)}};
  return doc.dump(2) + "\n";
}

std::string_view tool_version() { return LEXSHIFT_VERSION; }

std::string manifest_to_json(const RunManifest& manifest) {
  auto digests = [](const std::vector<FileDigest>& files) {
    ordered_json out = ordered_json::array();
    for (const FileDigest& f : files) out.push_back({{"path", f.path}, {"sha256", f.sha256}});
    return out;
  };
  ordered_json doc = {
      {"tool_version", manifest.tool_version},
      {"command", manifest.command},
      {"master_seed", manifest.master_seed},
      {"config", manifest.config_json.empty() ? ordered_json(nullptr)
                                              : ordered_json::parse(manifest.config_json)},
      {"inputs", digests(manifest.inputs)},
      {"outputs", digests(manifest.outputs)},
      {"started_at", manifest.started_at},
      {"finished_at", manifest.finished_at},
  };
  return doc.dump(2) + "\n";
}

std::string utc_timestamp(std::chrono::system_clock::time_point when) {
  const std::time_t t = std::chrono::system_clock::to_time_t(when);
  std::tm tm{};
#if defined(_WIN32)
  gmtime_s(&tm, &t);
#else
  gmtime_r(&t, &tm);
#endif
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace lexshift
