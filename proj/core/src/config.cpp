// SPDX-License-Identifier: Apache-2.0
#include "lexshift/config.hpp"

#include <charconv>
#include <set>

#include "json_util.hpp"
#include "lexshift/error.hpp"
#include "lexshift/fileio.hpp"

namespace lexshift {
namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::kInvalidConfig, field + ": " + why);
}

// Reads one object section, remembering which keys were consumed so stray
// keys can be reported.
class Section {
 public:
  Section(const json& value, std::string path) : value_(value), path_(std::move(path)) {
    if (!value_.is_object()) invalid(path_, "must be a JSON object");
  }

  const json* get(const std::string& key) {
    seen_.insert(key);
    const auto it = value_.find(key);
    return it == value_.end() || it->is_null() ? nullptr : &*it;
  }

  std::string field(const std::string& key) const { return path_ + "." + key; }

  void read(const std::string& key, bool& out) {
    if (const json* v = get(key)) {
      if (!v->is_boolean()) invalid(field(key), "must be true or false");
      out = v->get<bool>();
    }
  }

  void read(const std::string& key, double& out) {
    if (const json* v = get(key)) {
      if (!v->is_number()) invalid(field(key), "must be a number");
      out = v->get<double>();
    }
  }

  void read(const std::string& key, std::vector<std::string>& out) {
    if (const json* v = get(key)) {
      if (!v->is_array()) invalid(field(key), "must be an array of strings");
      out.clear();
      for (const json& item : *v) {
        if (!item.is_string()) invalid(field(key), "must be an array of strings");
        out.push_back(item.get<std::string>());
      }
    }
  }

  std::optional<std::string> read_string(const std::string& key) {
    if (const json* v = get(key)) {
      if (!v->is_string()) invalid(field(key), "must be a string");
      return v->get<std::string>();
    }
    return std::nullopt;
  }

  void reject_unknown() const {
    for (const auto& [key, _] : value_.items()) {
      if (!seen_.count(key)) invalid(field(key), "unknown configuration key");
    }
  }

 private:
  const json& value_;
  std::string path_;
  std::set<std::string> seen_;
};

PlacementMode parse_mode(const std::string& text, const std::string& field) {
  if (text == "location_sampling") return PlacementMode::kLocationSampling;
  if (text == "random") return PlacementMode::kRandom;
  invalid(field, "expected \"location_sampling\" or \"random\", got \"" + text + "\"");
}

std::string mode_name(PlacementMode mode) {
  return mode == PlacementMode::kRandom ? "random" : "location_sampling";
}

void read_inventory(Section& s, const std::string& key, const std::filesystem::path& base_dir,
                    std::vector<std::string>& out) {
  s.read(key, out);
  if (auto file = s.read_string(key + "_file")) {
    if (s.get(key)) invalid(s.field(key + "_file"), "give either " + key + " or " + key + "_file");
    std::filesystem::path path(*file);
    if (path.is_relative()) path = base_dir / path;
    try {
      out = parse_inventory(read_file(path));
    } catch (const Error& e) {
      invalid(s.field(key + "_file"), e.what());
    }
  }
}

void read_placement(Section& s, const std::string& mode_key, const std::string& model_key,
                    PlacementConfig& out) {
  if (auto mode = s.read_string(mode_key)) out.mode = parse_mode(*mode, s.field(mode_key));
  if (const json* model = s.get(model_key)) {
    out.model = detail::placement_model_from_value(*model, s.field(model_key));
  }
}

std::uint64_t parse_seed(const json& v) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
    if (ec == std::errc{} && ptr == s.data() + s.size() && !s.empty()) return seed;
  }
  invalid("master_seed", "must be an unsigned 64-bit integer");
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    invalid("--set " + assignment, "expected key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  json value;
  try {
    value = json::parse(raw);
  } catch (const json::parse_error&) {
    value = raw;  // bare words are strings
  }
  json* node = &doc;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (part.empty()) invalid(key, "malformed dotted key");
    if (!node->is_object()) invalid(key, "parent is not an object");
    if (dot == std::string::npos) {
      (*node)[part] = std::move(value);
      return;
    }
    node = &(*node)[part];
    if (node->is_null()) *node = json::object();
    start = dot + 1;
  }
}

TransformConfig from_json_value(const json& doc, const std::filesystem::path& base_dir,
                                bool& has_seed) {
  TransformConfig cfg = TransformConfig::defaults();
  Section root(doc, "config");
  if (const json* seed = root.get("master_seed")) {
    cfg.master_seed = parse_seed(*seed);
    has_seed = true;
  }
  if (const json* v = root.get("emoji")) {
    Section s(*v, "emoji");
    s.read("enabled", cfg.emoji.enabled);
    s.read("sentence_prob", cfg.emoji.sentence_prob);
    read_placement(s, "placement", "placement_model", cfg.emoji.placement);
    read_inventory(s, "inventory", base_dir, cfg.emoji.inventory);
    s.reject_unknown();
  }
  if (const json* v = root.get("iln")) {
    Section s(*v, "iln");
    s.read("enabled", cfg.iln.enabled);
    s.read("token_prob", cfg.iln.token_prob);
    if (auto w = s.read_string("weighting")) {
      if (*w == "uniform") {
        cfg.iln.weighting = VariantWeighting::kUniform;
      } else if (*w == "frequency") {
        cfg.iln.weighting = VariantWeighting::kFrequency;
      } else {
        invalid("iln.weighting", "expected \"uniform\" or \"frequency\"");
      }
    }
    s.reject_unknown();
  }
  if (const json* v = root.get("propn")) {
    Section s(*v, "propn");
    s.read("enabled", cfg.propn.enabled);
    s.read("p_mention", cfg.propn.p_mention);
    s.read("p_hashtag", cfg.propn.p_hashtag);
    s.reject_unknown();
  }
  if (const json* v = root.get("x")) {
    Section s(*v, "x");
    s.read("enabled", cfg.x.enabled);
    s.read("p_rt", cfg.x.p_rt);
    s.read("p_url", cfg.x.p_url);
    s.read("p_hashtag", cfg.x.p_hashtag);
    if (auto style = s.read_string("url_style")) {
      if (*style == "placeholder") {
        cfg.x.url_style = UrlStyle::kPlaceholder;
      } else if (*style == "pseudo_tco") {
        cfg.x.url_style = UrlStyle::kPseudoTco;
      } else {
        invalid("x.url_style", "expected \"placeholder\" or \"pseudo_tco\"");
      }
    }
    read_placement(s, "hashtag_placement", "hashtag_placement_model", cfg.x.hashtag_placement);
    read_inventory(s, "hashtag_inventory", base_dir, cfg.x.hashtag_inventory);
    s.reject_unknown();
  }
  root.reject_unknown();
  return cfg;
}

}  // namespace

TransformConfig resolve_config(const ConfigInputs& inputs) {
  json doc = json::object();
  if (inputs.json_text) {
    try {
      doc = json::parse(*inputs.json_text);
    } catch (const json::parse_error& e) {
      invalid("config", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) invalid("config", "top-level value must be an object");
  }
  for (const std::string& assignment : inputs.overrides) apply_override(doc, assignment);
  bool has_seed = false;
  TransformConfig cfg = from_json_value(doc, inputs.base_dir, has_seed);
  if (inputs.seed) {
    cfg.master_seed = *inputs.seed;
    has_seed = true;
  }
  if (inputs.require_seed && !has_seed) {
    invalid("master_seed", "is required (pass --seed or set master_seed)");
  }
  return cfg;
}

std::string config_to_json(const TransformConfig& cfg) {
  auto model_or_null = [](const PlacementConfig& p) {
    return p.model ? detail::to_json_value(*p.model) : json(nullptr);
  };
  json doc = {
      {"master_seed", cfg.master_seed},
      {"emoji",
       {{"enabled", cfg.emoji.enabled},
        {"sentence_prob", cfg.emoji.sentence_prob},
        {"placement", mode_name(cfg.emoji.placement.mode)},
        {"placement_model", model_or_null(cfg.emoji.placement)},
        {"inventory", cfg.emoji.inventory}}},
      {"iln",
       {{"enabled", cfg.iln.enabled},
        {"token_prob", cfg.iln.token_prob},
        {"weighting", cfg.iln.weighting == VariantWeighting::kUniform ? "uniform" : "frequency"}}},
      {"propn",
       {{"enabled", cfg.propn.enabled},
        {"p_mention", cfg.propn.p_mention},
        {"p_hashtag", cfg.propn.p_hashtag}}},
      {"x",
       {{"enabled", cfg.x.enabled},
        {"p_rt", cfg.x.p_rt},
        {"p_url", cfg.x.p_url},
        {"p_hashtag", cfg.x.p_hashtag},
        {"url_style", cfg.x.url_style == UrlStyle::kPlaceholder ? "placeholder" : "pseudo_tco"},
        {"hashtag_placement", mode_name(cfg.x.hashtag_placement.mode)},
        {"hashtag_placement_model", model_or_null(cfg.x.hashtag_placement)},
        {"hashtag_inventory", cfg.x.hashtag_inventory}}},
  };
  return doc.dump(2) + "\n";
}

namespace detail {

json to_json_value(const PlacementModel& model) {
  return {{"mean", model.mean}, {"std", model.std}, {"n", model.n_observations}};
}

PlacementModel placement_model_from_value(const json& value, const std::string& field) {
  if (!value.is_object()) throw Error(ErrorCode::kMalformedJson, field + ": must be an object");
  for (const char* key : {"mean", "std", "n"}) {
    if (!value.contains(key) || !value[key].is_number()) {
      throw Error(ErrorCode::kMissingField, field + ": needs numeric '" + key + "'");
    }
  }
  if (!value["n"].is_number_unsigned()) {
    throw Error(ErrorCode::kInvalidConfig, field + ": 'n' must be a positive integer");
  }
  PlacementModel model{value["mean"].get<double>(), value["std"].get<double>(),
                       value["n"].get<std::size_t>()};
  try {
    model.check();
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidConfig, field + ": " + e.what());
  }
  return model;
}

}  // namespace detail

std::string placement_model_to_json(const PlacementModel& model) {
  return detail::to_json_value(model).dump(2) + "\n";
}

PlacementModel placement_model_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedJson, e.what());
  }
  return detail::placement_model_from_value(doc, "placement model");
}

}  // namespace lexshift
