#include <gtest/gtest.h>

#include <vector>

#include "dronecell/mac.hpp"

namespace dronecell {
namespace {

TEST(Fdma, EqualSplit) {
  const std::vector<int> five{0, 1, 2, 3, 4};
  const auto a = fdma_allocate(five, 10e6);
  ASSERT_EQ(a.size(), 5u);
  for (int u : five) EXPECT_DOUBLE_EQ(a.bandwidth_of(u), 2e6);
  EXPECT_DOUBLE_EQ(a.bandwidth_of(9), 0.0);

  const std::vector<int> one{3};
  EXPECT_DOUBLE_EQ(fdma_allocate(one, 10e6).bandwidth_of(3), 10e6);

  const std::vector<int> four{0, 1, 3, 4};
  for (int u : four) EXPECT_DOUBLE_EQ(fdma_allocate(four, 10e6).bandwidth_of(u), 2.5e6);

  EXPECT_TRUE(fdma_allocate({}, 10e6).empty());
}

TEST(Fdma, SharesSumToBandwidth) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> active(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) active[static_cast<std::size_t>(i)] = i;
    EXPECT_NEAR(fdma_allocate(active, 10e6).total(), 10e6, 1e-6) << n;
  }
}

class TdmaTest : public ::testing::Test {
 protected:
  Channel ch{};
  DronePose drone{{0, 0}, 10.0, 0.0};
};

TEST_F(TdmaTest, NearestWins) {
  ASSERT_GT(ch.expected_received_power(10, 5), ch.expected_received_power(10, 30));
  const std::vector<GroundPoint> pos{{30, 0}, {0, 5}};
  const std::vector<int> active{0, 1};
  const auto a = tdma_select(active, drone, pos, ch);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.grants()[0].user_id, 1);
  EXPECT_DOUBLE_EQ(a.bandwidth_of(1), 10e6);
  EXPECT_DOUBLE_EQ(a.bandwidth_of(0), 0.0);
}

TEST_F(TdmaTest, SingletonAndTies) {
  const std::vector<GroundPoint> pos{{7, 7}, {7, 7}, {7, 7}};
  const std::vector<int> only{2};
  EXPECT_DOUBLE_EQ(tdma_select(only, drone, pos, ch).bandwidth_of(2), 10e6);
  const std::vector<int> tied{1, 2};
  EXPECT_EQ(tdma_select(tied, drone, pos, ch).grants()[0].user_id, 1);
  EXPECT_TRUE(tdma_select({}, drone, pos, ch).empty());
}

TEST_F(TdmaTest, ExactlyOneGrantAndMacsAgreeOnSingleUser) {
  const std::vector<GroundPoint> pos{{3, 1}, {-20, 4}, {11, -9}, {0, 35}};
  const std::vector<int> active{0, 1, 2, 3};
  const auto t = allocate(MacScheme::Tdma, active, drone, pos, ch);
  EXPECT_EQ(t.size(), 1u);
  EXPECT_DOUBLE_EQ(t.total(), 10e6);
  for (int u = 0; u < 4; ++u) {
    const std::vector<int> one{u};
    const auto f = allocate(MacScheme::Fdma, one, drone, pos, ch);
    const auto s = allocate(MacScheme::Tdma, one, drone, pos, ch);
    EXPECT_EQ(f.grants()[0].user_id, s.grants()[0].user_id);
    EXPECT_DOUBLE_EQ(f.bandwidth_of(u), s.bandwidth_of(u));
  }
}

}  // namespace
}  // namespace dronecell
