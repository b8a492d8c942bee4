// SPDX-License-Identifier: Apache-2.0
//
// Seeded random streams with platform-independent output.
//
// std::mt19937_64 has a fully specified output sequence, but the standard
// distributions do not, so the uniform, index and normal draws are written out
// here. Each (master seed, transform, sentence index) triple owns one stream,
// which makes a transform's output independent of the order in which
// sentences are processed.
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "lexshift/corpus.hpp"

namespace lexshift {

std::uint64_t splitmix64(std::uint64_t x);

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform();

  // Uniform in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);

  // Standard normal via Box-Muller; consumes two uniforms per call.
  double normal();

 private:
  std::mt19937_64 engine_;
};

class StreamFactory {
 public:
  explicit StreamFactory(std::uint64_t master_seed) : master_seed_(master_seed) {}

  std::uint64_t master_seed() const { return master_seed_; }
  RngStream derive(TransformId transform, std::uint64_t sentence_index) const;

 private:
  std::uint64_t master_seed_;
};

}  // namespace lexshift
