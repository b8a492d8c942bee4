// SPDX-License-Identifier: Apache-2.0
//
// Positional placement model, corpus length statistics and surface feature
// rates.
#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexshift/corpus.hpp"
#include "lexshift/rng.hpp"

namespace lexshift {

// Gaussian over the relative in-sentence position (0 = first token, 1 = last).
struct PlacementModel {
  double mean = 0.5;
  double std = 0.0;
  std::size_t n_observations = 1;

  // Throws Error{kInvalidConfig} unless 0 <= mean <= 1, std >= 0, n >= 1.
  void check() const;

  friend bool operator==(const PlacementModel&, const PlacementModel&) = default;
};

using TokenPredicate = std::function<bool(const Token&)>;

// i / (L - 1) for each matching token at index i of a sentence of length L;
// 0.5 for single-token sentences. Corpus order.
std::vector<double> relative_positions(const Corpus& corpus, const TokenPredicate& predicate);

// Arithmetic mean and population standard deviation. Throws
// Error{kNoObservations} on empty input.
PlacementModel fit_location_gaussian(std::span<const double> positions);

// Insertion index in [0, sentence_len]; index k inserts before token k.
std::size_t sample_position(const PlacementModel& model, std::size_t sentence_len,
                            RngStream& rng);

struct LengthStats {
  double mean_tokens = 0.0;
  double std_tokens = 0.0;
  std::size_t n_sentences = 0;
};

LengthStats sentence_length_stats(const Corpus& corpus);

// Forms that count as emoji without being in the pictograph ranges.
class EmoticonLexicon {
 public:
  EmoticonLexicon();  // the default emoticon set
  explicit EmoticonLexicon(std::vector<std::string> forms);

  bool contains(std::string_view form) const { return forms_.count(std::string(form)) > 0; }
  const std::set<std::string>& forms() const { return forms_; }

 private:
  std::set<std::string> forms_;
};

const EmoticonLexicon& default_emoticons();

bool is_emoji_token(std::string_view form, const EmoticonLexicon& lexicon = default_emoticons());
bool is_url_form(std::string_view form);
bool is_hashtag_form(std::string_view form);
bool is_mention_form(std::string_view form);

enum class Feature : std::uint8_t {
  kEmoji,
  kRetweet,
  kUrl,
  kHashtag,
  kUserMention,
  kUnnormalizedToken,
};

inline constexpr std::array<Feature, 6> kAllFeatures = {
    Feature::kEmoji,   Feature::kRetweet,     Feature::kUrl,
    Feature::kHashtag, Feature::kUserMention, Feature::kUnnormalizedToken};

std::string_view to_string(Feature feature);

struct FeatureRate {
  double sentence_rate = 0.0;  // fraction of sentences with >= 1 occurrence
  std::size_t sentences_with = 0;
  std::size_t token_count = 0;

  friend bool operator==(const FeatureRate&, const FeatureRate&) = default;
};

struct FeatureRateReport {
  std::size_t n_sentences = 0;
  std::array<FeatureRate, kAllFeatures.size()> rates{};

  const FeatureRate& operator[](Feature f) const { return rates[static_cast<std::size_t>(f)]; }
  FeatureRate& operator[](Feature f) { return rates[static_cast<std::size_t>(f)]; }

  friend bool operator==(const FeatureRateReport&, const FeatureRateReport&) = default;
};

FeatureRateReport feature_rate_report(const Corpus& corpus,
                                      const EmoticonLexicon& lexicon = default_emoticons());

}  // namespace lexshift
