// SPDX-License-Identifier: Apache-2.0
#include "lexshift/corpus.hpp"

#include <numeric>

namespace lexshift {
namespace {

constexpr std::array<std::string_view, kUposCount> kUposNames = {
    "ADJ",  "ADP",  "ADV",   "AUX",   "CCONJ", "DET",  "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM",  "VERB", "X"};

constexpr std::array<std::string_view, 6> kTransformNames = {
    "emoji", "iln", "propn", "x_rt", "x_url", "x_hashtag"};

}  // namespace

std::string_view to_string(Upos tag) {
  return kUposNames[static_cast<std::size_t>(tag)];
}

std::optional<Upos> parse_upos(std::string_view text) {
  for (std::size_t i = 0; i < kUposNames.size(); ++i) {
    if (kUposNames[i] == text) return static_cast<Upos>(i);
  }
  return std::nullopt;
}

std::string_view to_string(TransformId id) {
  return kTransformNames[static_cast<std::size_t>(id)];
}

std::optional<TransformId> parse_transform_id(std::string_view text) {
  for (std::size_t i = 0; i < kTransformNames.size(); ++i) {
    if (kTransformNames[i] == text) return static_cast<TransformId>(i);
  }
  return std::nullopt;
}

bool Token::touched_by(TransformId id) const {
  if (const auto* inj = std::get_if<Injected>(&provenance)) return inj->transform == id;
  if (const auto* rw = std::get_if<Rewritten>(&provenance)) return rw->transform == id;
  return false;
}

std::size_t Corpus::token_count() const {
  return std::accumulate(sentences.begin(), sentences.end(), std::size_t{0},
                         [](std::size_t acc, const Sentence& s) { return acc + s.tokens.size(); });
}

}  // namespace lexshift
