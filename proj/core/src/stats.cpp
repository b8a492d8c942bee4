// SPDX-License-Identifier: Apache-2.0
#include "lexshift/stats.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "lexshift/error.hpp"
#include "utf8.hpp"

namespace lexshift {
namespace {

bool in_pictograph_range(char32_t cp) {
  return (cp >= 0x1F600 && cp <= 0x1F64F) ||  // emoticons
         (cp >= 0x1F300 && cp <= 0x1F5FF) ||  // misc symbols and pictographs
         (cp >= 0x1F680 && cp <= 0x1F6FF) ||  // transport and map
         (cp >= 0x1F900 && cp <= 0x1F9FF) ||  // supplemental symbols
         (cp >= 0x2600 && cp <= 0x26FF) ||    // misc symbols
         (cp >= 0x2700 && cp <= 0x27BF);      // dingbats
}

bool is_emoji_joiner(char32_t cp) {
  return cp == 0x200D || cp == 0xFE0E || cp == 0xFE0F;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

void PlacementModel::check() const {
  if (!(mean >= 0.0 && mean <= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "placement mean must lie in [0, 1]");
  }
  if (!(std >= 0.0) || !std::isfinite(std)) {
    throw Error(ErrorCode::kInvalidConfig, "placement std must be finite and >= 0");
  }
  if (n_observations < 1) {
    throw Error(ErrorCode::kInvalidConfig, "placement model needs n >= 1");
  }
}

std::vector<double> relative_positions(const Corpus& corpus, const TokenPredicate& predicate) {
  std::vector<double> out;
  for (const Sentence& sentence : corpus.sentences) {
    const std::size_t len = sentence.tokens.size();
    for (std::size_t i = 0; i < len; ++i) {
      if (!predicate(sentence.tokens[i])) continue;
      out.push_back(len > 1 ? static_cast<double>(i) / static_cast<double>(len - 1) : 0.5);
    }
  }
  return out;
}

PlacementModel fit_location_gaussian(std::span<const double> positions) {
  if (positions.empty()) {
    throw Error(ErrorCode::kNoObservations, "no feature occurrences to fit");
  }
  // Welford's running update.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t n = 0;
  for (double x : positions) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }
  PlacementModel model;
  model.mean = std::clamp(mean, 0.0, 1.0);
  model.std = std::sqrt(std::max(0.0, m2 / static_cast<double>(n)));
  model.n_observations = n;
  return model;
}

std::size_t sample_position(const PlacementModel& model, std::size_t sentence_len,
                            RngStream& rng) {
  const double g = std::clamp(model.mean + model.std * rng.normal(), 0.0, 1.0);
  const auto index = static_cast<std::size_t>(std::lround(g * static_cast<double>(sentence_len)));
  return std::min(index, sentence_len);
}

LengthStats sentence_length_stats(const Corpus& corpus) {
  LengthStats stats;
  stats.n_sentences = corpus.sentences.size();
  if (stats.n_sentences == 0) return stats;
  double sum = 0.0;
  for (const Sentence& s : corpus.sentences) sum += static_cast<double>(s.tokens.size());
  stats.mean_tokens = sum / static_cast<double>(stats.n_sentences);
  double sq = 0.0;
  for (const Sentence& s : corpus.sentences) {
    const double d = static_cast<double>(s.tokens.size()) - stats.mean_tokens;
    sq += d * d;
  }
  stats.std_tokens = std::sqrt(sq / static_cast<double>(stats.n_sentences));
  return stats;
}

EmoticonLexicon::EmoticonLexicon()
    : forms_{":)", ":(", ":D", ";)", ":-)", ":-(", ":P", "<3"} {}

EmoticonLexicon::EmoticonLexicon(std::vector<std::string> forms)
    : forms_(std::make_move_iterator(forms.begin()), std::make_move_iterator(forms.end())) {}

const EmoticonLexicon& default_emoticons() {
  static const EmoticonLexicon lexicon;
  return lexicon;
}

bool is_emoji_token(std::string_view form, const EmoticonLexicon& lexicon) {
  if (form.empty()) return false;
  if (lexicon.contains(form)) return true;
  const auto cps = detail::decode_utf8(form);
  if (!cps) return false;
  bool any_pictograph = false;
  for (char32_t cp : *cps) {
    if (in_pictograph_range(cp)) {
      any_pictograph = true;
    } else if (!is_emoji_joiner(cp)) {
      return false;
    }
  }
  return any_pictograph;
}

bool is_url_form(std::string_view form) {
  for (std::string_view scheme : {"http://", "https://", "ftp://"}) {
    if (starts_with(form, scheme) && form.size() > scheme.size()) return true;
  }
  if (starts_with(form, "t.co/") && form.size() > 5) return true;
  // Anonymised placeholder, e.g. "URL107".
  if (starts_with(form, "URL") && form.size() > 3) {
    return std::all_of(form.begin() + 3, form.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  }
  return false;
}

bool is_hashtag_form(std::string_view form) { return form.size() >= 2 && form.front() == '#'; }

bool is_mention_form(std::string_view form) { return form.size() >= 2 && form.front() == '@'; }

std::string_view to_string(Feature feature) {
  switch (feature) {
    case Feature::kEmoji: return "emoji";
    case Feature::kRetweet: return "retweet";
    case Feature::kUrl: return "url";
    case Feature::kHashtag: return "hashtag";
    case Feature::kUserMention: return "user_mention";
    case Feature::kUnnormalizedToken: return "unnormalized_token";
  }
  return "unknown";
}

FeatureRateReport feature_rate_report(const Corpus& corpus, const EmoticonLexicon& lexicon) {
  FeatureRateReport report;
  report.n_sentences = corpus.sentences.size();
  for (const Sentence& sentence : corpus.sentences) {
    std::array<bool, kAllFeatures.size()> seen{};
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      const Token& token = sentence.tokens[i];
      auto hit = [&](Feature f) {
        ++report[f].token_count;
        seen[static_cast<std::size_t>(f)] = true;
      };
      if (is_emoji_token(token.form, lexicon)) hit(Feature::kEmoji);
      if (i == 0 && token.form == "RT") hit(Feature::kRetweet);
      if (is_url_form(token.form)) hit(Feature::kUrl);
      if (is_hashtag_form(token.form)) hit(Feature::kHashtag);
      if (is_mention_form(token.form)) hit(Feature::kUserMention);
      if (const auto* rw = std::get_if<Rewritten>(&token.provenance);
          rw && rw->transform == TransformId::kIln) {
        hit(Feature::kUnnormalizedToken);
      }
    }
    for (std::size_t f = 0; f < seen.size(); ++f) {
      if (seen[f]) ++report.rates[f].sentences_with;
    }
  }
  if (report.n_sentences > 0) {
    for (FeatureRate& rate : report.rates) {
      rate.sentence_rate =
          static_cast<double>(rate.sentences_with) / static_cast<double>(report.n_sentences);
    }
  }
  return report;
}

}  // namespace lexshift
