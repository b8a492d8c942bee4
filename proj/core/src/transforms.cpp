// SPDX-License-Identifier: Apache-2.0
#include "lexshift/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "lexshift/error.hpp"

namespace lexshift {
namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::kInvalidConfig, field + ": " + why);
}

void check_probability(double p, const std::string& field) {
  if (!(p >= 0.0 && p <= 1.0)) invalid(field, "must lie in [0, 1]");
}

void check_form(const std::string& form, const std::string& field) {
  if (form.empty()) invalid(field, "contains an empty form");
  for (unsigned char c : form) {
    if (c < 0x20 || c == 0x7f || c == ' ') {
      invalid(field, "form '" + form + "' contains whitespace or control characters");
    }
  }
}

void check_placement(const PlacementConfig& placement, const std::string& field) {
  if (placement.mode != PlacementMode::kLocationSampling) return;
  if (!placement.model) {
    invalid(field + ".model", "location sampling requires a fitted placement model");
  }
  try {
    placement.model->check();
  } catch (const Error& e) {
    invalid(field + ".model", e.what());
  }
}

// Runs fn(i) for every sentence index; chunks are contiguous so each worker
// writes a disjoint slice of the output.
template <typename Fn>
void for_each_sentence(std::size_t n, ExecutionOptions exec, Fn&& fn) {
  const unsigned threads = std::max(1U, std::min<unsigned>(exec.threads, n == 0 ? 1 : n));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

std::size_t draw_position(const PlacementConfig& placement, std::size_t len, RngStream& rng) {
  if (placement.mode == PlacementMode::kRandom) return rng.uniform_index(len + 1);
  return sample_position(*placement.model, len, rng);
}

const std::string& root_form(const Token& token) {
  if (const auto* rw = std::get_if<Rewritten>(&token.provenance)) return rw->original_form;
  return token.form;
}

void rewrite(Token& token, TransformId transform, std::string new_form) {
  std::string original = root_form(token);
  token.form = std::move(new_form);
  token.provenance = Rewritten{transform, std::move(original)};
}

std::string pseudo_tco(RngStream& rng) {
  static constexpr std::string_view kAlphabet =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
  std::string out = "http://t.co/";
  for (int k = 0; k < 8; ++k) out += kAlphabet[rng.uniform_index(kAlphabet.size())];
  return out;
}

}  // namespace

TransformConfig TransformConfig::defaults() {
  TransformConfig cfg;
  cfg.emoji.inventory = default_emoji_inventory();
  cfg.x.hashtag_inventory = default_hashtag_inventory();
  return cfg;
}

void check(const EmojiConfig& cfg) {
  check_probability(cfg.sentence_prob, "emoji.sentence_prob");
  if (!cfg.enabled) return;
  if (cfg.inventory.empty()) invalid("emoji.inventory", "must not be empty");
  for (const auto& form : cfg.inventory) check_form(form, "emoji.inventory");
  check_placement(cfg.placement, "emoji.placement");
}

void check(const IlnConfig& cfg) { check_probability(cfg.token_prob, "iln.token_prob"); }

void check(const PropnConfig& cfg) {
  check_probability(cfg.p_mention, "propn.p_mention");
  check_probability(cfg.p_hashtag, "propn.p_hashtag");
  if (cfg.p_mention + cfg.p_hashtag > 1.0 + 1e-12) {
    invalid("propn.p_hashtag", "p_mention + p_hashtag must not exceed 1");
  }
}

void check(const XConfig& cfg) {
  check_probability(cfg.p_rt, "x.p_rt");
  check_probability(cfg.p_url, "x.p_url");
  check_probability(cfg.p_hashtag, "x.p_hashtag");
  if (!cfg.enabled || cfg.p_hashtag == 0.0) return;
  if (cfg.hashtag_inventory.empty()) invalid("x.hashtag_inventory", "must not be empty");
  for (const auto& form : cfg.hashtag_inventory) {
    check_form(form, "x.hashtag_inventory");
    if (!is_hashtag_form(form)) invalid("x.hashtag_inventory", "'" + form + "' must start with '#'");
  }
  check_placement(cfg.hashtag_placement, "x.hashtag_placement");
}

void check(const TransformConfig& cfg) {
  check(cfg.emoji);
  check(cfg.iln);
  check(cfg.propn);
  check(cfg.x);
}

std::vector<std::string> parse_inventory(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line == "#" || line.substr(0, 2) == "# ") continue;
    out.emplace_back(line);
  }
  return out;
}

Corpus apply_iln(const Corpus& corpus, const NormalizationDictionary& dict, const IlnConfig& cfg,
                 const StreamFactory& streams, ExecutionOptions exec) {
  check(cfg);
  Corpus out = corpus;
  if (!cfg.enabled || cfg.token_prob == 0.0) return out;
  for_each_sentence(out.sentences.size(), exec, [&](std::size_t i) {
    RngStream rng = streams.derive(TransformId::kIln, i);
    for (Token& token : out.sentences[i].tokens) {
      if (token.is_injected() || !dict.lookup(token.form)) continue;
      if (rng.uniform() >= cfg.token_prob) continue;
      rewrite(token, TransformId::kIln, sample_variant(dict, token.form, rng, cfg.weighting));
    }
  });
  return out;
}

Corpus convert_propn(const Corpus& corpus, const PropnConfig& cfg, const StreamFactory& streams,
                     ExecutionOptions exec) {
  check(cfg);
  Corpus out = corpus;
  if (!cfg.enabled || (cfg.p_mention == 0.0 && cfg.p_hashtag == 0.0)) return out;
  for_each_sentence(out.sentences.size(), exec, [&](std::size_t i) {
    RngStream rng = streams.derive(TransformId::kPropn, i);
    for (Token& token : out.sentences[i].tokens) {
      if (token.upos != Upos::PROPN || !token.is_original()) continue;
      // One draw partitions [0, 1) into mention, hashtag and unchanged.
      const double u = rng.uniform();
      if (u < cfg.p_mention) {
        rewrite(token, TransformId::kPropn, "@" + token.form);
      } else if (u < cfg.p_mention + cfg.p_hashtag) {
        rewrite(token, TransformId::kPropn, "#" + token.form);
      }
    }
  });
  return out;
}

Corpus inject_emojis(const Corpus& corpus, const EmojiConfig& cfg, const StreamFactory& streams,
                     ExecutionOptions exec) {
  check(cfg);
  Corpus out = corpus;
  if (!cfg.enabled || cfg.sentence_prob == 0.0) return out;
  for_each_sentence(out.sentences.size(), exec, [&](std::size_t i) {
    RngStream rng = streams.derive(TransformId::kEmoji, i);
    if (rng.uniform() >= cfg.sentence_prob) return;
    auto& tokens = out.sentences[i].tokens;
    const std::string& form = cfg.inventory[rng.uniform_index(cfg.inventory.size())];
    const std::size_t pos = draw_position(cfg.placement, tokens.size(), rng);
    tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                  Token{form, Upos::SYM, Injected{TransformId::kEmoji}});
  });
  return out;
}

Corpus inject_x(const Corpus& corpus, const XConfig& cfg, const StreamFactory& streams,
                ExecutionOptions exec) {
  check(cfg);
  Corpus out = corpus;
  if (!cfg.enabled || (cfg.p_rt == 0.0 && cfg.p_url == 0.0 && cfg.p_hashtag == 0.0)) return out;
  for_each_sentence(out.sentences.size(), exec, [&](std::size_t i) {
    RngStream rt_rng = streams.derive(TransformId::kXRt, i);
    RngStream url_rng = streams.derive(TransformId::kXUrl, i);
    RngStream tag_rng = streams.derive(TransformId::kXHashtag, i);
    const std::string k = std::to_string(i);

    const bool add_rt = rt_rng.uniform() < cfg.p_rt;
    std::optional<Token> url;
    if (url_rng.uniform() < cfg.p_url) {
      url = Token{cfg.url_style == UrlStyle::kPlaceholder ? "URL" + k : pseudo_tco(url_rng),
                  Upos::X, Injected{TransformId::kXUrl}};
    }

    auto& tokens = out.sentences[i].tokens;
    // The hashtag position is drawn over the body before RT/URL go in, so it
    // always lands after the RT prefix and before the URL.
    if (tag_rng.uniform() < cfg.p_hashtag) {
      const std::string& form =
          cfg.hashtag_inventory[tag_rng.uniform_index(cfg.hashtag_inventory.size())];
      const std::size_t pos = draw_position(cfg.hashtag_placement, tokens.size(), tag_rng);
      tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                    Token{form, Upos::X, Injected{TransformId::kXHashtag}});
    }
    if (add_rt) {
      const Token rt[] = {Token{"RT", Upos::X, Injected{TransformId::kXRt}},
                          Token{"@USER" + k, Upos::X, Injected{TransformId::kXRt}}};
      tokens.insert(tokens.begin(), std::begin(rt), std::end(rt));
    }
    if (url) tokens.push_back(std::move(*url));
  });
  return out;
}

Corpus transform_all(const Corpus& corpus, const TransformConfig& config,
                     const NormalizationDictionary* dict, ExecutionOptions exec) {
  check(config);
  if (config.iln.enabled && config.iln.token_prob > 0.0 && (dict == nullptr || dict->empty())) {
    invalid("iln.dictionary", "a non-empty normalization dictionary is required when ILN is enabled");
  }
  const StreamFactory streams(config.master_seed);
  Corpus out = corpus;
  if (config.iln.enabled) out = apply_iln(out, *dict, config.iln, streams, exec);
  if (config.propn.enabled) out = convert_propn(out, config.propn, streams, exec);
  if (config.emoji.enabled) out = inject_emojis(out, config.emoji, streams, exec);
  if (config.x.enabled) out = inject_x(out, config.x, streams, exec);
  out.source_label = corpus.source_label + "-T";
  return out;
}

Corpus restore_original(const Corpus& corpus) {
  Corpus out;
  out.source_label = corpus.source_label;
  if (out.source_label.size() >= 2 &&
      std::string_view(out.source_label).substr(out.source_label.size() - 2) == "-T") {
    out.source_label.resize(out.source_label.size() - 2);
  }
  out.sentences.reserve(corpus.sentences.size());
  for (std::size_t si = 0; si < corpus.sentences.size(); ++si) {
    const Sentence& sentence = corpus.sentences[si];
    Sentence restored{sentence.sent_id, sentence.comments, {}};
    restored.tokens.reserve(sentence.tokens.size());
    for (std::size_t ti = 0; ti < sentence.tokens.size(); ++ti) {
      const Token& token = sentence.tokens[ti];
      if (token.is_injected()) continue;
      if (const auto* rw = std::get_if<Rewritten>(&token.provenance)) {
        if (rw->original_form.empty()) {
          throw Error(ErrorCode::kMissingProvenance,
                      "sentence " + std::to_string(si) + " token " + std::to_string(ti) +
                          " is rewritten but carries no original form");
        }
        restored.tokens.push_back(Token{rw->original_form, token.upos, Original{}});
      } else {
        restored.tokens.push_back(token);
      }
    }
    out.sentences.push_back(std::move(restored));
  }
  return out;
}

Corpus concat(const Corpus& a, const Corpus& b) {
  Corpus out;
  out.sentences.reserve(a.sentences.size() + b.sentences.size());
  out.sentences.insert(out.sentences.end(), a.sentences.begin(), a.sentences.end());
  out.sentences.insert(out.sentences.end(), b.sentences.begin(), b.sentences.end());
  if (a.source_label.empty()) {
    out.source_label = b.source_label;
  } else if (b.source_label.empty()) {
    out.source_label = a.source_label;
  } else {
    out.source_label = a.source_label + "+" + b.source_label;
  }
  return out;
}

}  // namespace lexshift
