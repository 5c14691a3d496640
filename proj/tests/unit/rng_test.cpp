#include <set>

#include <gtest/gtest.h>

#include "plcsec/rng.hpp"

using namespace plcsec;

TEST(RandomStream, Reproducible) {
  RandomStream a(123), b(123);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.standard_normal(), b.standard_normal());
  RandomStream c(124);
  RandomStream d(123);
  int same = 0;
  for (int i = 0; i < 100; ++i) same += c.standard_normal() == d.standard_normal();
  EXPECT_EQ(same, 0);
}

TEST(RandomStream, SubstreamsDependOnlyOnPath) {
  const RandomStream root(7);
  auto x = root.substream(3).substream(2);
  auto y = RandomStream(7).substream(3).substream(2);
  EXPECT_EQ(x.key(), y.key());
  for (int i = 0; i < 50; ++i) EXPECT_EQ(x.standard_normal(), y.standard_normal());

  std::set<std::uint64_t> keys;
  for (std::uint64_t i = 0; i < 1000; ++i) keys.insert(root.substream(i).key());
  EXPECT_EQ(keys.size(), 1000u);
  EXPECT_NE(role_stream(root, StreamRole::destination_noise).key(),
            role_stream(root, StreamRole::eavesdropper_noise).key());
}

TEST(RandomStream, ConsumingParentDoesNotShiftChildren) {
  RandomStream root(99);
  const auto before = root.substream(5).key();
  for (int i = 0; i < 10; ++i) root.standard_normal();
  EXPECT_EQ(root.substream(5).key(), before);
}
