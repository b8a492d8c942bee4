// SPDX-License-Identifier: Apache-2.0
#include "lexshift/conllu.hpp"

#include <algorithm>
#include <cctype>

#include "lexshift/error.hpp"

namespace lexshift {
namespace {

constexpr std::size_t kColumns = 10;
constexpr std::size_t kColId = 0;
constexpr std::size_t kColForm = 1;
constexpr std::size_t kColUpos = 3;
constexpr std::size_t kColMisc = 9;

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// The ID column is either a positive integer, a range "N-M" or an empty node
// "N.M". Anything else is malformed.
enum class IdKind { kToken, kRange, kEmptyNode, kInvalid };

IdKind classify_id(std::string_view id) {
  if (all_digits(id)) return IdKind::kToken;
  if (const auto dash = id.find('-'); dash != std::string_view::npos) {
    return all_digits(id.substr(0, dash)) && all_digits(id.substr(dash + 1)) ? IdKind::kRange
                                                                             : IdKind::kInvalid;
  }
  if (const auto dot = id.find('.'); dot != std::string_view::npos) {
    return all_digits(id.substr(0, dot)) && all_digits(id.substr(dot + 1)) ? IdKind::kEmptyNode
                                                                           : IdKind::kInvalid;
  }
  return IdKind::kInvalid;
}

std::optional<std::string> extract_sent_id(std::string_view comment) {
  std::string_view body = comment.substr(1);
  body = trim(body);
  constexpr std::string_view kKey = "sent_id";
  if (body.substr(0, kKey.size()) != kKey) return std::nullopt;
  body.remove_prefix(kKey.size());
  body = trim(body);
  if (body.empty() || body.front() != '=') return std::nullopt;
  body.remove_prefix(1);
  return std::string(trim(body));
}

std::string escape_misc(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    if (c == '%') {
      out += "%25";
    } else if (c == '|') {
      out += "%7C";
    } else {
      out += c;
    }
  }
  return out;
}

std::string unescape_misc(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (value[i] == '%' && i + 2 < value.size()) {
      const std::string_view code = value.substr(i + 1, 2);
      if (code == "25") {
        out += '%';
        i += 2;
        continue;
      }
      if (code == "7C" || code == "7c") {
        out += '|';
        i += 2;
        continue;
      }
    }
    out += value[i];
  }
  return out;
}

Provenance parse_provenance(std::string_view misc, std::size_t line_no) {
  if (misc == "_" || misc.empty()) return Original{};
  std::optional<std::string_view> injected;
  std::optional<std::string_view> rewritten;
  std::optional<std::string> orig_form;
  for (std::string_view item : split(misc, '|')) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) continue;
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "Injected") {
      injected = value;
    } else if (key == "Rewritten") {
      rewritten = value;
    } else if (key == "OrigForm") {
      orig_form = unescape_misc(value);
    }
  }
  auto transform_of = [line_no](std::string_view name) {
    const auto id = parse_transform_id(name);
    if (!id) {
      throw Error(ErrorCode::kMalformedLine,
                  "unknown transform id '" + std::string(name) + "' in MISC", line_no);
    }
    return *id;
  };
  if (injected && rewritten) {
    throw Error(ErrorCode::kMalformedLine, "token is both Injected and Rewritten", line_no);
  }
  if (injected) return Injected{transform_of(*injected)};
  if (rewritten) return Rewritten{transform_of(*rewritten), orig_form.value_or(std::string{})};
  return Original{};
}

std::string format_provenance(const Provenance& provenance) {
  if (const auto* inj = std::get_if<Injected>(&provenance)) {
    return "Injected=" + std::string(to_string(inj->transform));
  }
  if (const auto* rw = std::get_if<Rewritten>(&provenance)) {
    return "Rewritten=" + std::string(to_string(rw->transform)) +
           "|OrigForm=" + escape_misc(rw->original_form);
  }
  return "_";
}

bool has_control_char(std::string_view form) {
  return std::any_of(form.begin(), form.end(),
                     [](unsigned char c) { return c < 0x20 || c == 0x7f; });
}

}  // namespace

Corpus parse_conllu(std::string_view text, std::string source_label) {
  Corpus corpus;
  corpus.source_label = std::move(source_label);

  Sentence current;
  auto flush = [&] {
    if (!current.tokens.empty()) {
      corpus.sentences.push_back(std::move(current));
      current = Sentence{};
    }
    // A block without integer-ID tokens keeps its comments for the next one.
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (is_blank(line)) {
      flush();
      continue;
    }
    if (line.front() == '#') {
      if (auto id = extract_sent_id(line)) current.sent_id = std::move(*id);
      current.comments.emplace_back(line);
      continue;
    }

    const auto fields = split(line, '\t');
    if (fields.size() != kColumns) {
      throw Error(ErrorCode::kMalformedLine,
                  "expected 10 tab-separated columns, found " + std::to_string(fields.size()),
                  line_no);
    }
    switch (classify_id(fields[kColId])) {
      case IdKind::kRange:
      case IdKind::kEmptyNode:
        continue;
      case IdKind::kInvalid:
        throw Error(ErrorCode::kMalformedLine,
                    "invalid ID '" + std::string(fields[kColId]) + "'", line_no);
      case IdKind::kToken:
        break;
    }
    if (fields[kColForm].empty()) {
      throw Error(ErrorCode::kMalformedLine, "empty FORM", line_no);
    }
    const auto upos = parse_upos(fields[kColUpos]);
    if (!upos) {
      throw Error(ErrorCode::kUnknownUpos, "UPOS '" + std::string(fields[kColUpos]) +
                                               "' is not one of the 17 universal tags",
                  line_no);
    }
    current.tokens.push_back(Token{std::string(fields[kColForm]), *upos,
                                   parse_provenance(fields[kColMisc], line_no)});
  }
  flush();
  return corpus;
}

std::string serialize_conllu(const Corpus& corpus, SerializeOptions options) {
  std::string out;
  for (const Sentence& sentence : corpus.sentences) {
    if (sentence.sent_id) {
      const bool present = std::any_of(
          sentence.comments.begin(), sentence.comments.end(),
          [](const std::string& c) { return extract_sent_id(c).has_value(); });
      if (!present) out += "# sent_id = " + *sentence.sent_id + "\n";
    }
    for (const std::string& comment : sentence.comments) {
      out += comment;
      out += '\n';
    }
    std::size_t id = 1;
    for (const Token& token : sentence.tokens) {
      out += std::to_string(id++);
      out += '\t';
      out += token.form;
      out += "\t_\t";
      out += to_string(token.upos);
      out += "\t_\t_\t_\t_\t_\t";
      out += options.provenance ? format_provenance(token.provenance) : "_";
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

ValidationReport validate(const Corpus& corpus) {
  ValidationReport report;
  report.sentences = corpus.sentences.size();
  for (std::size_t si = 0; si < corpus.sentences.size(); ++si) {
    const Sentence& sentence = corpus.sentences[si];
    if (sentence.tokens.empty()) {
      report.violations.push_back({si, std::nullopt, "sentence has no tokens"});
    }
    for (std::size_t ti = 0; ti < sentence.tokens.size(); ++ti) {
      const Token& token = sentence.tokens[ti];
      ++report.tokens;
      ++report.upos_histogram[static_cast<std::size_t>(token.upos)];
      if (token.form.empty()) {
        report.violations.push_back({si, ti, "empty form"});
      } else if (has_control_char(token.form)) {
        report.violations.push_back({si, ti, "control character in form"});
      }
      if (const auto* rw = std::get_if<Rewritten>(&token.provenance)) {
        if (rw->original_form.empty() || rw->original_form == token.form) {
          report.violations.push_back(
              {si, ti, "rewritten token lacks a distinct original form"});
        }
      }
    }
  }
  return report;
}

}  // namespace lexshift
