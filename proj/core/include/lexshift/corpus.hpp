// SPDX-License-Identifier: Apache-2.0
//
// Value types for POS-annotated corpora. A Token always carries its tag, so
// label alignment cannot drift under insertion.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lexshift {

// The 17 Universal Dependencies part-of-speech tags.
enum class Upos : std::uint8_t {
  ADJ,
  ADP,
  ADV,
  AUX,
  CCONJ,
  DET,
  INTJ,
  NOUN,
  NUM,
  PART,
  PRON,
  PROPN,
  PUNCT,
  SCONJ,
  SYM,
  VERB,
  X,
};

inline constexpr std::size_t kUposCount = 17;

inline constexpr std::array<Upos, kUposCount> kAllUpos = {
    Upos::ADJ,  Upos::ADP,   Upos::ADV,   Upos::AUX,   Upos::CCONJ, Upos::DET,
    Upos::INTJ, Upos::NOUN,  Upos::NUM,   Upos::PART,  Upos::PRON,  Upos::PROPN,
    Upos::PUNCT, Upos::SCONJ, Upos::SYM,  Upos::VERB,  Upos::X};

std::string_view to_string(Upos tag);
std::optional<Upos> parse_upos(std::string_view text);

enum class TransformId : std::uint8_t {
  kEmoji,
  kIln,
  kPropn,
  kXRt,
  kXUrl,
  kXHashtag,
};

std::string_view to_string(TransformId id);
std::optional<TransformId> parse_transform_id(std::string_view text);

struct Original {
  friend bool operator==(const Original&, const Original&) = default;
};

struct Injected {
  TransformId transform;
  friend bool operator==(const Injected&, const Injected&) = default;
};

// original_form is the form the token had before the first rewrite.
struct Rewritten {
  TransformId transform;
  std::string original_form;
  friend bool operator==(const Rewritten&, const Rewritten&) = default;
};

using Provenance = std::variant<Original, Injected, Rewritten>;

struct Token {
  std::string form;
  Upos upos = Upos::X;
  Provenance provenance = Original{};

  bool is_original() const { return std::holds_alternative<Original>(provenance); }
  bool is_injected() const { return std::holds_alternative<Injected>(provenance); }
  bool is_rewritten() const { return std::holds_alternative<Rewritten>(provenance); }

  // True when the token was injected or rewritten by `id`.
  bool touched_by(TransformId id) const;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::optional<std::string> sent_id;
  std::vector<std::string> comments;  // raw lines, including the leading '#'
  std::vector<Token> tokens;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Corpus {
  std::vector<Sentence> sentences;
  std::string source_label;

  std::size_t token_count() const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

}  // namespace lexshift
