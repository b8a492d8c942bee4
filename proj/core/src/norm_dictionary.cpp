// SPDX-License-Identifier: Apache-2.0
#include "lexshift/norm_dictionary.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "lexshift/error.hpp"

namespace lexshift {
namespace {

using nlohmann::json;

bool has_whitespace(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; });
}

std::vector<std::string> string_array(const json& record, const std::string& key,
                                      std::size_t index) {
  const auto it = record.find(key);
  if (it == record.end() || !it->is_array()) {
    throw Error(ErrorCode::kMissingField, "record lacks array field '" + key + "'",
                std::nullopt, index);
  }
  std::vector<std::string> out;
  out.reserve(it->size());
  for (const json& item : *it) {
    if (!item.is_string()) {
      throw Error(ErrorCode::kMissingField, "field '" + key + "' must hold strings",
                  std::nullopt, index);
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

LexnormParseResult parse_lexnorm(std::string_view text, const LexnormKeys& keys) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedJson, e.what());
  }
  if (!doc.is_array()) {
    throw Error(ErrorCode::kMalformedJson, "top-level value must be an array of records");
  }
  LexnormParseResult result;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& record = doc[i];
    if (!record.is_object()) {
      throw Error(ErrorCode::kMissingField, "record is not an object", std::nullopt, i);
    }
    LexnormRecord parsed{string_array(record, keys.input, i), string_array(record, keys.output, i)};
    if (parsed.input.size() != parsed.output.size()) {
      ++result.warnings;
      continue;
    }
    result.records.push_back(std::move(parsed));
  }
  return result;
}

void NormalizationDictionary::add(std::string_view canonical, std::string_view variant,
                                  std::size_t count) {
  if (canonical.empty() || variant.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "dictionary key and variant must be non-empty");
  }
  if (has_whitespace(canonical) || has_whitespace(variant)) {
    throw Error(ErrorCode::kInvalidConfig, "dictionary entries must not contain whitespace");
  }
  if (count == 0) throw Error(ErrorCode::kInvalidConfig, "variant count must be >= 1");
  std::string key = ascii_lower(canonical);
  if (ascii_lower(variant) == key) {
    throw Error(ErrorCode::kInvalidConfig,
                "variant '" + std::string(variant) + "' equals its key '" + key + "'");
  }
  auto& variants = entries_[std::move(key)];
  auto it = std::lower_bound(variants.begin(), variants.end(), variant,
                             [](const NormVariant& v, std::string_view s) { return v.variant < s; });
  if (it != variants.end() && it->variant == variant) {
    it->count += count;
  } else {
    variants.insert(it, NormVariant{std::string(variant), count});
  }
}

std::optional<std::span<const NormVariant>> NormalizationDictionary::lookup(
    std::string_view form) const {
  const auto it = entries_.find(ascii_lower(form));
  if (it == entries_.end()) return std::nullopt;
  return std::span<const NormVariant>(it->second);
}

std::size_t NormalizationDictionary::total_variants() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::size_t{0},
                         [](std::size_t acc, const auto& kv) { return acc + kv.second.size(); });
}

NormalizationDictionary build_dictionary(std::span<const LexnormRecord> records) {
  NormalizationDictionary dict;
  for (const LexnormRecord& record : records) {
    const std::size_t n = std::min(record.input.size(), record.output.size());
    for (std::size_t i = 0; i < n; ++i) {
      const std::string& noisy = record.input[i];
      const std::string& canonical = record.output[i];
      if (noisy.empty() || canonical.empty()) continue;
      if (has_whitespace(canonical) || has_whitespace(noisy)) continue;
      if (ascii_lower(noisy) == ascii_lower(canonical)) continue;
      dict.add(canonical, noisy);
    }
  }
  return dict;
}

const std::string& sample_variant(const NormalizationDictionary& dict, std::string_view form,
                                  RngStream& rng, VariantWeighting weighting) {
  const auto variants = dict.lookup(form);
  if (!variants || variants->empty()) {
    throw Error(ErrorCode::kNoVariants, "no variants for '" + std::string(form) + "'");
  }
  if (weighting == VariantWeighting::kUniform) {
    return (*variants)[rng.uniform_index(variants->size())].variant;
  }
  std::size_t total = 0;
  for (const NormVariant& v : *variants) total += v.count;
  std::size_t target = rng.uniform_index(total);
  for (const NormVariant& v : *variants) {
    if (target < v.count) return v.variant;
    target -= v.count;
  }
  return variants->back().variant;
}

std::string dictionary_to_json(const NormalizationDictionary& dict) {
  json doc = json::object();
  for (const auto& [key, variants] : dict.entries()) {
    json list = json::array();
    for (const NormVariant& v : variants) list.push_back({{"variant", v.variant}, {"count", v.count}});
    doc[key] = std::move(list);
  }
  return doc.dump(2) + "\n";
}

NormalizationDictionary dictionary_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedJson, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kMalformedJson, "dictionary must be a JSON object");
  NormalizationDictionary dict;
  for (const auto& [key, list] : doc.items()) {
    if (!list.is_array()) {
      throw Error(ErrorCode::kMalformedJson, "entry '" + key + "' must be an array");
    }
    for (const json& item : list) {
      if (!item.is_object() || !item.contains("variant") || !item.contains("count") ||
          !item["variant"].is_string() || !item["count"].is_number_unsigned()) {
        throw Error(ErrorCode::kMissingField,
                    "entry '" + key + "' needs {\"variant\": str, \"count\": int}");
      }
      dict.add(key, item["variant"].get<std::string>(), item["count"].get<std::size_t>());
    }
  }
  return dict;
}

}  // namespace lexshift
