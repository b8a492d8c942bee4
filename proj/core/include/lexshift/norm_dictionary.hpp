// SPDX-License-Identifier: Apache-2.0
//
// Inverse lexical-normalization dictionary: canonical form -> noisy variants,
// built by inverting the aligned pairs of a lexical normalization dataset.
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexshift/rng.hpp"

namespace lexshift {

struct LexnormRecord {
  std::vector<std::string> input;   // raw tokens
  std::vector<std::string> output;  // aligned normalizations; a slot may hold several words
};

struct LexnormKeys {
  std::string input = "input";
  std::string output = "output";
};

struct LexnormParseResult {
  std::vector<LexnormRecord> records;
  std::size_t warnings = 0;  // records dropped for mismatched lengths
};

// Parses the shared-task JSON array. Throws Error{kMalformedJson} when the text
// is not a JSON array and Error{kMissingField} (with the record index) when a
// record lacks either token array.
LexnormParseResult parse_lexnorm(std::string_view text, const LexnormKeys& keys = {});

struct NormVariant {
  std::string variant;
  std::size_t count = 0;

  friend bool operator==(const NormVariant&, const NormVariant&) = default;
};

std::string ascii_lower(std::string_view text);

class NormalizationDictionary {
 public:
  using Entries = std::map<std::string, std::vector<NormVariant>, std::less<>>;

  // Adds `count` observations of canonical -> variant. The key is
  // case-folded; the variant is kept verbatim. Variants stay sorted so the
  // dictionary does not depend on insertion order. Throws
  // Error{kInvalidConfig} for whitespace, empty strings, zero counts, or a
  // variant equal to its key ignoring case.
  void add(std::string_view canonical, std::string_view variant, std::size_t count = 1);

  std::optional<std::span<const NormVariant>> lookup(std::string_view form) const;

  const Entries& entries() const { return entries_; }
  std::size_t total_entries() const { return entries_.size(); }
  std::size_t total_variants() const;
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const NormalizationDictionary&, const NormalizationDictionary&) = default;

 private:
  Entries entries_;
};

// Inverts 1-to-1 aligned pairs whose case-folded forms differ. Multiword
// output slots are skipped.
NormalizationDictionary build_dictionary(std::span<const LexnormRecord> records);

enum class VariantWeighting { kUniform, kFrequency };

// Throws Error{kNoVariants} when `form` has no entry.
const std::string& sample_variant(const NormalizationDictionary& dict, std::string_view form,
                                  RngStream& rng,
                                  VariantWeighting weighting = VariantWeighting::kUniform);

// {canonical: [{"variant": str, "count": int}, ...]}
std::string dictionary_to_json(const NormalizationDictionary& dict);
NormalizationDictionary dictionary_from_json(std::string_view text);

}  // namespace lexshift
