// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "lexshift/rng.hpp"

namespace lexshift {
namespace {

TEST(StreamFactory, SameKeySameSequence) {
  const StreamFactory a(42), b(42);
  RngStream x = a.derive(TransformId::kEmoji, 17);
  RngStream y = b.derive(TransformId::kEmoji, 17);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(x.next_u64(), y.next_u64());
}

TEST(StreamFactory, IndependentOfDerivationOrder) {
  const StreamFactory f(7);
  std::vector<std::uint64_t> forward, backward(50);
  for (std::uint64_t i = 0; i < 50; ++i) forward.push_back(f.derive(TransformId::kIln, i).next_u64());
  for (std::uint64_t i = 50; i-- > 0;) backward[i] = f.derive(TransformId::kIln, i).next_u64();
  EXPECT_EQ(forward, backward);
}

TEST(StreamFactory, DistinctKeysDiffer) {
  const StreamFactory f(7), g(8);
  std::set<std::uint64_t> firsts;
  for (std::uint64_t i = 0; i < 100; ++i) {
    for (auto id : {TransformId::kEmoji, TransformId::kIln, TransformId::kPropn,
                    TransformId::kXRt, TransformId::kXUrl, TransformId::kXHashtag}) {
      firsts.insert(f.derive(id, i).next_u64());
      firsts.insert(g.derive(id, i).next_u64());
    }
  }
  EXPECT_EQ(firsts.size(), 1200u);
}

// Pins the stream output so accidental changes to derivation or the draw
// functions show up as a failing test rather than silently new corpora.
TEST(Splitmix64, ReferenceOutputs) {
  // First outputs of the reference generator seeded with state 0.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(splitmix64(0x9e3779b97f4a7c15ULL), 0x6e789e6aa1b965f4ULL);
}

TEST(RngStream, EngineIsStandardMt19937_64) {
  // The 10000th output for the default seed is fixed by the C++ standard.
  RngStream rng(5489);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.next_u64();
  EXPECT_EQ(x, 9981545732273789042ULL);
}

TEST(RngStream, FrozenDerivedSequence) {
  RngStream a = StreamFactory(42).derive(TransformId::kEmoji, 0);
  RngStream b = StreamFactory(42).derive(TransformId::kEmoji, 0);
  const double u = a.uniform();
  EXPECT_EQ(u, static_cast<double>(b.next_u64() >> 11) * 0x1.0p-53);
  EXPECT_GE(u, 0.0);
  EXPECT_LT(u, 1.0);
}

TEST(RngStream, UniformIndexCoversRange) {
  RngStream rng(3);
  std::vector<int> counts(7);
  for (int i = 0; i < 70000; ++i) ++counts[rng.uniform_index(7)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 400);
}

TEST(RngStream, NormalMoments) {
  RngStream rng(9);
  double sum = 0, sq = 0;
  constexpr int kN = 100000;
  for (int i = 0; i < kN; ++i) {
    const double z = rng.normal();
    sum += z;
    sq += z * z;
  }
  EXPECT_NEAR(sum / kN, 0.0, 0.02);
  EXPECT_NEAR(sq / kN, 1.0, 0.02);
}

}  // namespace
}  // namespace lexshift
