// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate. Prints one line per criterion:
//
//   [PASS] name: detail (seconds)
//   [FAIL] name: detail (seconds)
//   [SKIP] name: reason
//
// Exits non-zero if any criterion fails. Criteria that need the licensed
// corpora read them from the variables listed in datasets.hpp and skip when
// they are absent; the injection-rate check falls back to a synthetic corpus
// with the same sentence and token counts.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "datasets.hpp"
#include "json.hpp"
#include "lexshift/conllu.hpp"
#include "lexshift/error.hpp"
#include "lexshift/fileio.hpp"
#include "lexshift/norm_dictionary.hpp"
#include "lexshift/stats.hpp"
#include "lexshift/transforms.hpp"
#include "properties.hpp"
#include "synthetic.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace lexshift::acceptance {
namespace {

enum class Status { kPass, kFail, kSkip };

struct Outcome {
  Status status = Status::kPass;
  std::string detail;
};

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void within(const std::string& name, double value, double lo, double hi) {
    std::ostringstream s;
    s << name << "=" << value;
    if (value < lo || value > hi) s << " outside [" << lo << ", " << hi << "]";
    (value >= lo && value <= hi ? notes_ : failures_).push_back(s.str());
  }
  void note(const std::string& text) { notes_.push_back(text); }

  Outcome outcome() const {
    const auto& parts = failures_.empty() ? notes_ : failures_;
    std::string detail;
    for (const auto& p : parts) detail += (detail.empty() ? "" : "; ") + p;
    return {failures_.empty() ? Status::kPass : Status::kFail, detail};
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Workspace {
  fs::path dir;
  Workspace() {
    std::random_device entropy;
    dir = fs::temp_directory_path() / ("lexshift_acceptance_" + std::to_string(entropy()));
    fs::create_directories(dir);
  }
  ~Workspace() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str();
  if (code != 0) std::cerr << "  lexshift " << args.front() << ": " << e.str();
  return code;
}

// Source corpus, dictionary and placement models for the transform criteria,
// from the real datasets when available.
struct PipelineInputs {
  std::string source;
  std::string dict;
  std::string emoji_model;
  std::string hashtag_model;
  std::string provenance;
};

PipelineInputs stage_inputs(const Workspace& ws) {
  PipelineInputs in;
  std::vector<std::string> origin;
  if (auto gum = testing::dataset_path("LEXSHIFT_GUM_TRAIN")) {
    in.source = *gum;
    origin.push_back("GUM train");
  } else {
    in.source = ws.path("GUM-train.conllu");
    write_file_atomic(in.source, serialize_conllu(testing::make_gum_like_corpus()));
    origin.push_back("synthetic GUM-shaped source (LEXSHIFT_GUM_TRAIN not set)");
  }

  std::string lexnorm;
  if (auto real = testing::dataset_path("LEXSHIFT_LEXNORM")) {
    lexnorm = *real;
    origin.push_back("lexnorm 2015");
  } else {
    lexnorm = ws.path("lexnorm.json");
    write_file_atomic(lexnorm, testing::make_lexnorm_json());
    origin.push_back("synthetic lexnorm");
  }
  in.dict = ws.path("dict.json");
  if (run_cli({"build-dict", lexnorm, "-o", in.dict}) != 0) throw std::runtime_error("build-dict failed");

  std::string target;
  if (auto tb = testing::dataset_path("LEXSHIFT_TBV2_TRAIN")) {
    target = *tb;
    origin.push_back("TBv2 placement models");
  } else {
    target = ws.path("target.conllu");
    write_file_atomic(target, serialize_conllu(testing::make_target_corpus(1639, 11)));
    origin.push_back("synthetic target placement models");
  }
  in.emoji_model = ws.path("emoji_model.json");
  in.hashtag_model = ws.path("hashtag_model.json");
  if (run_cli({"fit-placement", target, "--feature", "emoji", "-o", in.emoji_model}) != 0 ||
      run_cli({"fit-placement", target, "--feature", "hashtag", "-o", in.hashtag_model}) != 0) {
    throw std::runtime_error("fit-placement failed");
  }
  for (const auto& o : origin) in.provenance += (in.provenance.empty() ? "" : ", ") + o;
  return in;
}

std::vector<std::string> transform_args(const PipelineInputs& in, const std::string& seed,
                                        const std::string& out) {
  return {"--seed", seed, "transform", in.source, "-o", out, "--dict", in.dict,
          "--emoji-model", in.emoji_model, "--hashtag-model", in.hashtag_model};
}

Outcome dataset_statistics(const Workspace&) {
  const auto gum = testing::dataset_path("LEXSHIFT_GUM_TRAIN");
  const auto tb = testing::dataset_path("LEXSHIFT_TBV2_TRAIN");
  if (!gum || !tb) {
    return {Status::kSkip, "needs LEXSHIFT_GUM_TRAIN and LEXSHIFT_TBV2_TRAIN (licensed data, not bundled)"};
  }
  Checks c;
  std::string out;
  c.expect(run_cli({"stats", *gum}, &out) == 0, "stats on GUM train failed");
  if (!out.empty()) {
    const json r = json::parse(out);
    c.expect(r["sentences"] == 6917, "GUM sentences=" + r["sentences"].dump() + " != 6917");
    c.expect(r["tokens"] == 124923, "GUM tokens=" + r["tokens"].dump() + " != 124923");
    c.within("GUM mean", r["length"]["mean_tokens"].get<double>(), 18.01, 18.11);
    c.within("GUM std", r["length"]["std_tokens"].get<double>(), 13.2, 13.4);
  }
  out.clear();
  c.expect(run_cli({"stats", *tb}, &out) == 0, "stats on TBv2 train failed");
  if (!out.empty()) {
    const json r = json::parse(out);
    c.within("TBv2 mean", r["length"]["mean_tokens"].get<double>(), 15.05, 15.15);
    c.within("TBv2 std", r["length"]["std_tokens"].get<double>(), 7.64, 7.84);
  }
  return c.outcome();
}

bool injected_in(const Sentence& s, TransformId id) {
  return std::any_of(s.tokens.begin(), s.tokens.end(),
                     [&](const Token& t) { return t.is_injected() && t.touched_by(id); });
}

Outcome injection_rates(const Workspace& ws) {
  const PipelineInputs in = stage_inputs(ws);
  const std::string out_path = ws.path("rates.conllu");
  const auto start = std::chrono::steady_clock::now();
  if (run_cli(transform_args(in, "20240601", out_path)) != 0) return {Status::kFail, "transform failed"};
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const Corpus src = parse_conllu(read_file(in.source));
  const Corpus out = parse_conllu(read_file(out_path));
  const NormalizationDictionary dict = dictionary_from_json(read_file(in.dict));

  const double n = static_cast<double>(out.sentences.size());
  std::size_t emoji = 0, rt = 0, url = 0, tag = 0;
  for (const Sentence& s : out.sentences) {
    emoji += injected_in(s, TransformId::kEmoji);
    rt += injected_in(s, TransformId::kXRt);
    url += injected_in(s, TransformId::kXUrl);
    tag += injected_in(s, TransformId::kXHashtag);
  }

  // Walk source tokens alongside the surviving output tokens.
  std::size_t eligible = 0, iln = 0, propn = 0, mentions = 0, hashtags = 0;
  for (std::size_t si = 0; si < src.sentences.size(); ++si) {
    std::vector<const Token*> kept;
    for (const Token& t : out.sentences[si].tokens) {
      if (!t.is_injected()) kept.push_back(&t);
    }
    const auto& source_tokens = src.sentences[si].tokens;
    if (kept.size() != source_tokens.size()) return {Status::kFail, "token alignment broken"};
    for (std::size_t ti = 0; ti < kept.size(); ++ti) {
      const Token& before = source_tokens[ti];
      const Token& after = *kept[ti];
      const bool by_iln = after.is_rewritten() && after.touched_by(TransformId::kIln);
      if (dict.lookup(before.form)) {
        ++eligible;
        iln += by_iln;
      }
      if (before.upos == Upos::PROPN && !by_iln) {
        ++propn;
        if (after.touched_by(TransformId::kPropn)) {
          (after.form.front() == '@' ? mentions : hashtags) += 1;
        }
      }
    }
  }

  Checks c;
  c.note(in.provenance);
  c.within("emoji", emoji / n, 0.235, 0.265);
  c.within("RT", rt / n, 0.28, 0.32);
  c.within("URL", url / n, 0.58, 0.62);
  c.within("X-hashtag", tag / n, 0.085, 0.115);
  c.within("ILN/eligible", eligible ? double(iln) / eligible : 0.0, 0.73, 0.77);
  c.within("PROPN mention", propn ? double(mentions) / propn : 0.0, 0.48, 0.52);
  c.within("PROPN hashtag", propn ? double(hashtags) / propn : 0.0, 0.185, 0.215);
  c.within("transform seconds", seconds, 0.0, 30.0);
  return c.outcome();
}

Outcome determinism(const Workspace& ws) {
  const PipelineInputs in = stage_inputs(ws);
  Checks c;
  c.expect(run_cli(transform_args(in, "7", ws.path("d1.conllu"))) == 0, "first run failed");
  c.expect(run_cli(transform_args(in, "7", ws.path("d2.conllu"))) == 0, "second run failed");
  c.expect(run_cli(transform_args(in, "8", ws.path("d3.conllu"))) == 0, "third run failed");
  auto threaded = transform_args(in, "7", ws.path("d4.conllu"));
  threaded.insert(threaded.end(), {"--threads", "8"});
  c.expect(run_cli(threaded) == 0, "threaded run failed");
  const std::string a = read_file(ws.path("d1.conllu"));
  c.expect(a == read_file(ws.path("d2.conllu")), "same seed produced different bytes");
  c.expect(a == read_file(ws.path("d4.conllu")), "thread count changed the output");
  c.expect(a != read_file(ws.path("d3.conllu")), "different seed produced identical output");
  c.note("sha256=" + sha256_hex(a).substr(0, 16) + "... identical across runs and threads");
  return c.outcome();
}

constexpr std::uint64_t kPropertyTrials = 250;

struct PropertySuite {
  std::size_t trials = 0;
  std::vector<std::string> restore_failures;
  std::vector<std::string> contract_failures;
  std::size_t injected = 0;
  std::size_t rewritten = 0;
};

const PropertySuite& property_suite() {
  static const PropertySuite suite = [] {
    PropertySuite s;
    const Corpus src = testing::make_source_corpus(testing::SourceShape{1000}, 2024, "synthetic");
    const NormalizationDictionary dict = testing::make_dictionary();
    for (std::uint64_t trial = 0; trial < kPropertyTrials; ++trial) {
      const TransformConfig cfg = testing::random_config(trial);
      const Corpus out = transform_all(src, cfg, &dict);
      ++s.trials;
      for (const auto& sent : out.sentences) {
        for (const auto& t : sent.tokens) {
          s.injected += t.is_injected();
          s.rewritten += t.is_rewritten();
        }
      }
      if (auto v = testing::label_contract_violation(src, out, dict)) {
        s.contract_failures.push_back("trial " + std::to_string(trial) + ": " + *v);
      }
      const Corpus restored = restore_original(out);
      if (!(restored == src)) {
        const auto why = testing::restore_mismatch(src, restored);
        s.restore_failures.push_back("trial " + std::to_string(trial) + ": " +
                                     why.value_or("label or provenance differs"));
      }
    }
    return s;
  }();
  return suite;
}

Outcome invertibility(const Workspace&) {
  const PropertySuite& s = property_suite();
  Checks c;
  c.expect(s.trials >= 200, "only " + std::to_string(s.trials) + " trials");
  for (const auto& f : s.restore_failures) c.expect(false, f);
  c.note(std::to_string(s.trials) + " random (config, seed) pairs on 1000 sentences, " +
         std::to_string(s.injected) + " injected and " + std::to_string(s.rewritten) +
         " rewritten tokens restored exactly");
  return c.outcome();
}

Outcome label_contract(const Workspace&) {
  const PropertySuite& s = property_suite();
  Checks c;
  for (const auto& f : s.contract_failures) c.expect(false, f);
  c.note("emoji->SYM, x_*->X, propn->PROPN, iln keeps tag across " + std::to_string(s.trials) +
         " trials");
  return c.outcome();
}

Outcome gaussian_oracle(const Workspace&) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> length(1, 400);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> xs(static_cast<std::size_t>(length(rng)));
    for (double& x : xs) x = unit(rng);
    long double sum = 0;
    for (double x : xs) sum += x;
    const long double mean = sum / xs.size();
    long double ss = 0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    const long double std = std::sqrt(ss / xs.size());
    const PlacementModel m = fit_location_gaussian(xs);
    worst = std::max({worst, static_cast<double>(std::fabs(m.mean - mean)),
                      static_cast<double>(std::fabs(m.std - std))});
  }
  Checks c;
  c.expect(worst <= 1e-12, "max deviation " + std::to_string(worst));
  const std::vector<double> single{0.37};
  const PlacementModel one = fit_location_gaussian(single);
  c.expect(one.mean == 0.37 && one.std == 0.0 && one.n_observations == 1, "single point not exact");
  const std::vector<double> constant(57, 0.8125);
  const PlacementModel flat = fit_location_gaussian(constant);
  c.expect(flat.mean == 0.8125 && flat.std == 0.0, "constant list not exact");
  std::ostringstream s;
  s << "1000 inputs, max |deviation| = " << worst << "; degenerate cases exact";
  c.note(s.str());
  return c.outcome();
}

Outcome round_trip(const Workspace&) {
  Checks c;
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(LEXSHIFT_TEST_DATA_DIR)) {
    if (entry.path().extension() != ".conllu") continue;
    ++files;
    const std::string name = entry.path().filename().string();
    try {
      const Corpus first = parse_conllu(read_file(entry.path()), name);
      const std::string text = serialize_conllu(first, SerializeOptions{.provenance = true});
      const Corpus second = parse_conllu(text, name);
      c.expect(second == first, name + ": structure changed");
      c.expect(serialize_conllu(second, SerializeOptions{.provenance = true}) == text,
               name + ": serialization not idempotent");
    } catch (const Error& e) {
      c.expect(false, name + ": " + e.what());
    }
  }
  c.expect(files >= 4, "fixtures missing");
  c.note(std::to_string(files) + " fixtures (range lines, empty nodes, comments, CRLF)");
  return c.outcome();
}

}  // namespace
}  // namespace lexshift::acceptance

int main() {
  using namespace lexshift::acceptance;
  struct Criterion {
    const char* name;
    std::function<Outcome(const Workspace&)> check;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"dataset-statistics", dataset_statistics, 10},
      {"injection-rates", injection_rates, 30},
      {"determinism", determinism, 60},
      {"invertibility", invertibility, 120},
      {"label-contract", label_contract, 120},
      {"gaussian-fit-oracle", gaussian_oracle, 60},
      {"round-trip-parsing", round_trip, 60},
  };

  const Workspace ws;
  int failures = 0;
  for (const Criterion& crit : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = crit.check(ws);
    } catch (const std::exception& e) {
      outcome = {Status::kFail, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.status != Status::kSkip && seconds > crit.budget_seconds) {
      outcome.status = Status::kFail;
      outcome.detail += "; exceeded " + std::to_string(static_cast<int>(crit.budget_seconds)) + " s";
    }
    const char* tag = outcome.status == Status::kPass   ? "[PASS]"
                      : outcome.status == Status::kFail ? "[FAIL]"
                                                        : "[SKIP]";
    std::printf("%s %s: %s", tag, crit.name, outcome.detail.c_str());
    if (outcome.status != Status::kSkip) std::printf(" (%.2f s)", seconds);
    std::printf("\n");
    std::fflush(stdout);
    failures += outcome.status == Status::kFail;
  }
  return failures == 0 ? 0 : 1;
}
