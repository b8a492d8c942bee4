// SPDX-License-Identifier: Apache-2.0
#include "lexshift/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace lexshift {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double RngStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t RngStream::uniform_index(std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return static_cast<std::size_t>(x % bound);
}

double RngStream::normal() {
  // 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

RngStream StreamFactory::derive(TransformId transform, std::uint64_t sentence_index) const {
  std::uint64_t h = splitmix64(master_seed_);
  h = splitmix64(h ^ (static_cast<std::uint64_t>(transform) + 1) * 0xd1b54a32d192ed03ULL);
  h = splitmix64(h ^ sentence_index);
  return RngStream(h);
}

}  // namespace lexshift
