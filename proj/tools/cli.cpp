// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "lexshift/config.hpp"
#include "lexshift/conllu.hpp"
#include "lexshift/error.hpp"
#include "lexshift/fileio.hpp"
#include "lexshift/norm_dictionary.hpp"
#include "lexshift/reports.hpp"
#include "lexshift/stats.hpp"
#include "lexshift/transforms.hpp"

namespace lexshift::cli {
namespace {

namespace fs = std::filesystem;

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::string config_path;
  std::vector<std::string> overrides;
};

struct LoadedCorpus {
  Corpus corpus;
  FileDigest digest;
};

LoadedCorpus load_corpus(const std::string& path) {
  const std::string bytes = read_file(path);
  return {parse_conllu(bytes, fs::path(path).stem().string()), {path, sha256_hex(bytes)}};
}

int cmd_fit_placement(const std::string& corpus_path, const std::string& feature,
                      const std::string& out_path, std::ostream& out) {
  const Corpus corpus = load_corpus(corpus_path).corpus;
  TokenPredicate predicate;
  if (feature == "emoji") {
    predicate = [](const Token& t) { return is_emoji_token(t.form); };
  } else {
    // X-tagged hashtags are the ones the X injection stage imitates.
    predicate = [](const Token& t) { return t.upos == Upos::X && is_hashtag_form(t.form); };
  }
  const std::vector<double> positions = relative_positions(corpus, predicate);
  const PlacementModel model = fit_location_gaussian(positions);
  write_file_atomic(out_path, placement_model_to_json(model));
  out << "n_observations=" << model.n_observations << " mean=" << std::setprecision(6)
      << model.mean << " std=" << model.std << "\n";
  return kExitOk;
}

int cmd_build_dict(const std::string& lexnorm_path, const std::string& out_path,
                   const LexnormKeys& keys, std::ostream& out) {
  const LexnormParseResult parsed = parse_lexnorm(read_file(lexnorm_path), keys);
  const NormalizationDictionary dict = build_dictionary(parsed.records);
  write_file_atomic(out_path, dictionary_to_json(dict));
  out << "entries=" << dict.total_entries() << " variants=" << dict.total_variants()
      << " records=" << parsed.records.size() << " dropped_records=" << parsed.warnings << "\n";
  return kExitOk;
}

struct TransformArgs {
  std::string in_path;
  std::string out_path;
  std::string manifest_path;
  std::string dict_path;
  std::string emoji_model_path;
  std::string hashtag_model_path;
  unsigned threads = 1;
  bool no_provenance = false;
};

int cmd_transform(const GlobalOptions& global, const TransformArgs& args, std::ostream& out) {
  RunManifest manifest;
  manifest.tool_version = std::string(tool_version());
  manifest.command = "transform";
  manifest.started_at = utc_timestamp();

  LoadedCorpus input = load_corpus(args.in_path);
  manifest.inputs.push_back(input.digest);

  ConfigInputs inputs;
  inputs.overrides = global.overrides;
  inputs.seed = global.seed;
  if (!global.config_path.empty()) {
    inputs.json_text = read_file(global.config_path);
    inputs.base_dir = fs::path(global.config_path).parent_path();
    manifest.inputs.push_back({global.config_path, sha256_hex(*inputs.json_text)});
  }
  TransformConfig config = resolve_config(inputs);

  auto load_model = [&manifest](const std::string& path) {
    const std::string bytes = read_file(path);
    manifest.inputs.push_back({path, sha256_hex(bytes)});
    return placement_model_from_json(bytes);
  };
  if (!args.emoji_model_path.empty()) {
    config.emoji.placement.model = load_model(args.emoji_model_path);
  }
  if (!args.hashtag_model_path.empty()) {
    config.x.hashtag_placement.model = load_model(args.hashtag_model_path);
  }

  std::optional<NormalizationDictionary> dict;
  if (!args.dict_path.empty()) {
    const std::string bytes = read_file(args.dict_path);
    manifest.inputs.push_back({args.dict_path, sha256_hex(bytes)});
    dict = dictionary_from_json(bytes);
  }

  const Corpus transformed = transform_all(input.corpus, config, dict ? &*dict : nullptr,
                                           ExecutionOptions{std::max(1U, args.threads)});
  const std::string text =
      serialize_conllu(transformed, SerializeOptions{.provenance = !args.no_provenance});

  manifest.master_seed = config.master_seed;
  manifest.config_json = config_to_json(config);
  manifest.outputs.push_back({args.out_path, sha256_hex(text)});
  write_file_atomic(args.out_path, text);
  manifest.finished_at = utc_timestamp();
  write_file_atomic(args.manifest_path.empty() ? args.out_path + ".manifest.json"
                                               : args.manifest_path,
                    manifest_to_json(manifest));
  out << "sentences=" << transformed.sentences.size() << " tokens=" << transformed.token_count()
      << " sha256=" << manifest.outputs.front().sha256 << "\n";
  return kExitOk;
}

int cmd_stats(const std::string& path, std::ostream& out) {
  const Corpus corpus = load_corpus(path).corpus;
  out << stats_report_to_json(corpus.source_label, validate(corpus), sentence_length_stats(corpus),
                              feature_rate_report(corpus));
  return kExitOk;
}

int cmd_concat(const std::vector<std::string>& paths, const std::string& out_path,
               std::ostream& out) {
  Corpus combined;
  for (const std::string& path : paths) combined = concat(combined, load_corpus(path).corpus);
  write_file_atomic(out_path, serialize_conllu(combined, SerializeOptions{.provenance = true}));
  out << "sentences=" << combined.sentences.size() << " tokens=" << combined.token_count()
      << "\n";
  return kExitOk;
}

int cmd_diff_report(const std::string& path_a, const std::string& path_b, std::ostream& out) {
  const Corpus a = load_corpus(path_a).corpus;
  const Corpus b = load_corpus(path_b).corpus;
  out << diff_report_to_json(a.source_label, feature_rate_report(a), b.source_label,
                             feature_rate_report(b));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lexshift: lexical transformations from standard English to tweet-like text"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  GlobalOptions global;
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "Master seed (unsigned 64-bit)");
  app.add_option("--config", global.config_path, "TransformConfig JSON file")
      ->check(CLI::ExistingFile);
  app.add_option("--set", global.overrides, "Dotted config override key=value (repeatable)")
      ->take_all();
  app.fallthrough();

  std::string fit_corpus, fit_feature = "emoji", fit_out;
  auto* fit = app.add_subcommand("fit-placement", "Fit the positional Gaussian of a feature");
  fit->add_option("corpus", fit_corpus, "Target CoNLL-U corpus")->required();
  fit->add_option("--feature", fit_feature, "Feature to fit")
      ->check(CLI::IsMember({"emoji", "hashtag"}));
  fit->add_option("-o,--out", fit_out, "Output placement model JSON")->required();

  std::string dict_in, dict_out;
  LexnormKeys keys;
  auto* build = app.add_subcommand("build-dict", "Build the inverse normalization dictionary");
  build->add_option("lexnorm", dict_in, "Lexical normalization JSON")->required();
  build->add_option("-o,--out", dict_out, "Output dictionary JSON")->required();
  build->add_option("--input-key", keys.input, "Record key of the raw tokens");
  build->add_option("--output-key", keys.output, "Record key of the normalized tokens");

  TransformArgs targs;
  auto* transform = app.add_subcommand("transform", "Apply the lexical transformations");
  transform->add_option("input", targs.in_path, "Source CoNLL-U corpus")->required();
  transform->add_option("-o,--out", targs.out_path, "Output CoNLL-U")->required();
  transform->add_option("--manifest", targs.manifest_path,
                        "Run manifest JSON (default: <out>.manifest.json)");
  transform->add_option("--dict", targs.dict_path, "Normalization dictionary JSON");
  transform->add_option("--emoji-model", targs.emoji_model_path, "Emoji placement model JSON");
  transform->add_option("--hashtag-model", targs.hashtag_model_path,
                        "X-hashtag placement model JSON");
  transform->add_option("--threads", targs.threads, "Worker threads")->check(CLI::PositiveNumber);
  transform->add_flag("--no-provenance", targs.no_provenance,
                      "Do not record token provenance in MISC");

  std::string stats_in;
  auto* stats = app.add_subcommand("stats", "Print corpus statistics as JSON");
  stats->add_option("input", stats_in, "CoNLL-U corpus")->required();

  std::vector<std::string> concat_in;
  std::string concat_out;
  auto* cat = app.add_subcommand("concat", "Concatenate corpora in argument order");
  cat->add_option("inputs", concat_in, "CoNLL-U corpora")->required();
  cat->add_option("-o,--out", concat_out, "Output CoNLL-U")->required();

  std::string diff_a, diff_b;
  auto* diff = app.add_subcommand("diff-report", "Compare feature rates of two corpora");
  diff->add_option("a", diff_a, "First CoNLL-U corpus")->required();
  diff->add_option("b", diff_b, "Second CoNLL-U corpus")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  if (seed_opt->count() > 0) global.seed = seed_value;

  try {
    if (*fit) return cmd_fit_placement(fit_corpus, fit_feature, fit_out, out);
    if (*build) return cmd_build_dict(dict_in, dict_out, keys, out);
    if (*transform) return cmd_transform(global, targs, out);
    if (*stats) return cmd_stats(stats_in, out);
    if (*cat) return cmd_concat(concat_in, concat_out, out);
    if (*diff) return cmd_diff_report(diff_a, diff_b, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kNoObservations ? kExitNoObservations : kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace lexshift::cli
