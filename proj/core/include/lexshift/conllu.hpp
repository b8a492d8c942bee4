// SPDX-License-Identifier: Apache-2.0
//
// CoNLL-U reading and writing restricted to the ID, FORM and UPOS columns.
//
// Multiword-token ranges ("3-4") and empty nodes ("5.1") are skipped. Comment
// lines are kept verbatim on the sentence that follows them. Token provenance
// round-trips through the MISC column as `Injected=<id>` or
// `Rewritten=<id>|OrigForm=<form>`; every other MISC entry is discarded.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexshift/corpus.hpp"

namespace lexshift {

// Throws Error{kMalformedLine} for token lines without exactly ten columns or
// with an unparseable ID, and Error{kUnknownUpos} when UPOS is outside the
// tag set (including "_").
Corpus parse_conllu(std::string_view text, std::string source_label = {});

struct SerializeOptions {
  // Emit non-Original provenance into MISC. Off by default so plain output
  // keeps every column but FORM and UPOS as "_".
  bool provenance = false;
};

std::string serialize_conllu(const Corpus& corpus, SerializeOptions options = {});

struct Violation {
  std::size_t sentence_index = 0;
  std::optional<std::size_t> token_index;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::size_t sentences = 0;
  std::size_t tokens = 0;
  std::array<std::size_t, kUposCount> upos_histogram{};
  std::vector<Violation> violations;

  std::size_t count(Upos tag) const { return upos_histogram[static_cast<std::size_t>(tag)]; }
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Corpus& corpus);

}  // namespace lexshift
