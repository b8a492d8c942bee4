// SPDX-License-Identifier: Apache-2.0
//
// Label-preserving lexical transformations that turn standard-English
// sentences into tweet-like ones:
//
//   apply_iln      replace dictionary words with noisy variants (tag kept)
//   convert_propn  prefix proper nouns with '@' or '#' (tag stays PROPN)
//   inject_emojis  insert one emoji per selected sentence (tag SYM)
//   inject_x       add RT + mention, URL and tag-like hashtags (tag X)
//
// Every stage is a pure Corpus -> Corpus function. Randomness comes from one
// stream per (master seed, stage, sentence index), so results do not depend on
// the thread count.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexshift/corpus.hpp"
#include "lexshift/norm_dictionary.hpp"
#include "lexshift/rng.hpp"
#include "lexshift/stats.hpp"

namespace lexshift {

enum class PlacementMode { kRandom, kLocationSampling };

struct PlacementConfig {
  PlacementMode mode = PlacementMode::kLocationSampling;
  std::optional<PlacementModel> model;  // required for kLocationSampling
};

struct EmojiConfig {
  bool enabled = true;
  double sentence_prob = 0.25;
  PlacementConfig placement;
  std::vector<std::string> inventory;
};

struct IlnConfig {
  bool enabled = true;
  double token_prob = 0.75;
  VariantWeighting weighting = VariantWeighting::kUniform;
};

struct PropnConfig {
  bool enabled = true;
  double p_mention = 0.50;
  double p_hashtag = 0.20;
};

enum class UrlStyle { kPlaceholder, kPseudoTco };

struct XConfig {
  bool enabled = true;
  double p_rt = 0.30;
  double p_url = 0.60;
  double p_hashtag = 0.10;
  std::vector<std::string> hashtag_inventory;
  UrlStyle url_style = UrlStyle::kPlaceholder;
  PlacementConfig hashtag_placement;
};

struct TransformConfig {
  EmojiConfig emoji;
  IlnConfig iln;
  PropnConfig propn;
  XConfig x;
  std::uint64_t master_seed = 0;

  // Shipped inventories and default probabilities; placement models unset.
  static TransformConfig defaults();
};

// Each check throws Error{kInvalidConfig} naming the offending field.
void check(const EmojiConfig& cfg);
void check(const IlnConfig& cfg);
void check(const PropnConfig& cfg);
void check(const XConfig& cfg);
void check(const TransformConfig& cfg);

// One form per line. Blank lines and lines that are "#" or start with "# "
// are comments, so "#tag" lines remain usable as hashtag entries.
std::vector<std::string> parse_inventory(std::string_view text);
const std::vector<std::string>& default_emoji_inventory();
const std::vector<std::string>& default_hashtag_inventory();

struct ExecutionOptions {
  unsigned threads = 1;
};

Corpus apply_iln(const Corpus& corpus, const NormalizationDictionary& dict, const IlnConfig& cfg,
                 const StreamFactory& streams, ExecutionOptions exec = {});
Corpus convert_propn(const Corpus& corpus, const PropnConfig& cfg, const StreamFactory& streams,
                     ExecutionOptions exec = {});
Corpus inject_emojis(const Corpus& corpus, const EmojiConfig& cfg, const StreamFactory& streams,
                     ExecutionOptions exec = {});
Corpus inject_x(const Corpus& corpus, const XConfig& cfg, const StreamFactory& streams,
                ExecutionOptions exec = {});

// Enabled stages in the order iln -> propn -> emoji -> x. `dict` may be null
// only when ILN is disabled. The result is labelled source_label + "-T".
Corpus transform_all(const Corpus& corpus, const TransformConfig& config,
                     const NormalizationDictionary* dict, ExecutionOptions exec = {});

// Drops injected tokens and restores rewritten forms; strips a trailing "-T"
// from the label. Throws Error{kMissingProvenance} for a rewritten token
// without its original form.
Corpus restore_original(const Corpus& corpus);

// Sentences of a then b, labelled "a+b" (an empty label is omitted).
Corpus concat(const Corpus& a, const Corpus& b);

}  // namespace lexshift
