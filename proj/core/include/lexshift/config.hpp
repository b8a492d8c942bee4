// SPDX-License-Identifier: Apache-2.0
//
// TransformConfig from JSON plus dotted `key=value` overrides.
//
//   {
//     "master_seed": 42,
//     "emoji": {"enabled": true, "sentence_prob": 0.25,
//               "placement": "location_sampling" | "random",
//               "placement_model": {"mean": 0.9, "std": 0.2, "n": 310},
//               "inventory": [...] | "inventory_file": "emoji.txt"},
//     "iln":   {"enabled": true, "token_prob": 0.75,
//               "weighting": "uniform" | "frequency"},
//     "propn": {"enabled": true, "p_mention": 0.5, "p_hashtag": 0.2},
//     "x":     {"enabled": true, "p_rt": 0.3, "p_url": 0.6, "p_hashtag": 0.1,
//               "url_style": "placeholder" | "pseudo_tco",
//               "hashtag_placement": "location_sampling" | "random",
//               "hashtag_placement_model": {...},
//               "hashtag_inventory": [...] | "hashtag_inventory_file": "tags.txt"}
//   }
//
// Missing fields take their defaults; unknown keys are rejected.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lexshift/transforms.hpp"

namespace lexshift {

struct ConfigInputs {
  std::optional<std::string> json_text;  // contents of --config
  std::filesystem::path base_dir;        // resolves *_inventory_file paths
  std::vector<std::string> overrides;    // "emoji.sentence_prob=0.5"
  std::optional<std::uint64_t> seed;     // --seed, applied last
  bool require_seed = true;
};

// Throws Error{kInvalidConfig} naming the offending field. Placement-model
// presence is not enforced here; check() does that once models are attached.
TransformConfig resolve_config(const ConfigInputs& inputs);

std::string config_to_json(const TransformConfig& config);

std::string placement_model_to_json(const PlacementModel& model);
// Throws Error{kMalformedJson} / Error{kMissingField} / Error{kInvalidConfig}.
PlacementModel placement_model_from_json(std::string_view text);

}  // namespace lexshift
