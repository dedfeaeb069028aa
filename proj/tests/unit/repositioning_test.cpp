#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dronecell/repositioning.hpp"
#include "support/oracles.hpp"

namespace dronecell {
namespace {

using testing::brute_force_argmax;
using testing::kPi;
using testing::reference_candidate;

constexpr double kDeg5 = kPi / 36.0;
const CellBounds kCell{0, 0, 80, 80};

HeadingPolicy policy(PolicyKind kind, double step = kDeg5) { return {kind, step, 200.0}; }

double wrap_diff(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2 * kPi);
  return std::min(d, 2 * kPi - d);
}

class RepositioningTest : public ::testing::Test {
 protected:
  Channel ch{};
  DronePose pose{{40, 40}, 10.0, 0.0};
};

TEST_F(RepositioningTest, CandidateCounts) {
  EXPECT_EQ(policy(PolicyKind::MaxSnr).candidate_count(), 72);
  EXPECT_EQ(policy(PolicyKind::MaxSnr, kPi / 2).candidate_count(), 4);
  EXPECT_THROW((void)policy(PolicyKind::MaxSnr, 0.7).candidate_count(), std::invalid_argument);
  EXPECT_THROW((void)policy(PolicyKind::MaxSnr, 0.0).candidate_count(), std::invalid_argument);
}

TEST_F(RepositioningTest, FourCandidatesAreAxisOffsets) {
  const auto c = candidate_positions(pose, 10.0, 0.1, kPi / 2, kCell);
  ASSERT_EQ(c.size(), 4u);
  const GroundPoint expected[] = {{41, 40}, {40, 41}, {39, 40}, {40, 39}};
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(c[static_cast<std::size_t>(i)].position.x, expected[i].x, 1e-12);
    EXPECT_NEAR(c[static_cast<std::size_t>(i)].position.y, expected[i].y, 1e-12);
    EXPECT_NEAR(c[static_cast<std::size_t>(i)].heading, i * kPi / 2, 1e-15);
  }
}

TEST_F(RepositioningTest, CandidatesRespectStepAndCell) {
  for (const GroundPoint start : {GroundPoint{40, 40}, GroundPoint{0, 0}, GroundPoint{79.7, 12}}) {
    const DronePose p{start, 10.0, 0.0};
    const auto c = candidate_positions(p, 10.0, 0.1, kDeg5, kCell);
    ASSERT_EQ(c.size(), 72u);
    for (const auto& cand : c) {
      EXPECT_LE(ground_distance(cand.position, start), 1.0 + 1e-12);
      EXPECT_TRUE(kCell.contains(cand.position));
      const auto ref = reference_candidate(start, cand.heading, 1.0, kCell);
      EXPECT_NEAR(cand.position.x, ref.x, 1e-12);
      EXPECT_NEAR(cand.position.y, ref.y, 1e-12);
    }
  }
}

TEST_F(RepositioningTest, HoverWhenIdleOrHoverPolicy) {
  const std::vector<GroundPoint> users{{60, 60}};
  EXPECT_FALSE(decide(policy(PolicyKind::MaxSnr), pose, 10, 0.1, kCell, {}, {}, ch).has_value());
  EXPECT_FALSE(decide(policy(PolicyKind::MaxSlr), pose, 10, 0.1, kCell, {}, {}, ch).has_value());
  EXPECT_FALSE(decide(policy(PolicyKind::Hover), pose, 10, 0.1, kCell, users, {}, ch).has_value());
}

TEST_F(RepositioningTest, SingleUserBearing) {
  const double bearing = 37.0 * kPi / 180.0;
  const std::vector<GroundPoint> users{{40 + 25 * std::cos(bearing), 40 + 25 * std::sin(bearing)}};
  const auto h = decide(policy(PolicyKind::MaxSnr), pose, 10, 0.1, kCell, users, {}, ch);
  ASSERT_TRUE(h.has_value());
  EXPECT_LE(wrap_diff(*h, bearing), kDeg5 / 2 + 1e-12);
  const int idx = brute_force_argmax(pose.ground, 1.0, 72, kCell, [&](GroundPoint c) {
    return ch.expected_se(10, ground_distance(c, users[0]));
  });
  EXPECT_NEAR(*h, idx * kDeg5, 1e-12);
}

TEST_F(RepositioningTest, UserBelowStillMoves) {
  const std::vector<GroundPoint> users{pose.ground};
  const auto h = decide(policy(PolicyKind::MaxSnr), pose, 10, 0.1, kCell, users, {}, ch);
  ASSERT_TRUE(h.has_value());
  // Every heading is equally bad; the tie rule keeps the first one.
  EXPECT_DOUBLE_EQ(*h, 0.0);
  const double stay = score_snr(pose.ground, 10, users, ch);
  for (const auto& c : candidate_positions(pose, 10, 0.1, kDeg5, kCell)) {
    EXPECT_LT(score_snr(c.position, 10, users, ch), stay);
  }
}

TEST_F(RepositioningTest, MatchesBruteForceOnRandomScenes) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coord(0.0, 80.0);
  std::uniform_int_distribution<int> n_users(1, 5);
  for (int scene = 0; scene < 200; ++scene) {
    const DronePose p{{coord(rng), coord(rng)}, 10.0, 0.0};
    std::vector<GroundPoint> own(static_cast<std::size_t>(n_users(rng)));
    for (auto& u : own) u = {coord(rng), coord(rng)};
    NeighborSnapshot nb{{1, {120, 40}, {{coord(rng) + 80, coord(rng)}, {coord(rng) + 80, coord(rng)}}}};

    const int snr_idx = brute_force_argmax(p.ground, 1.0, 72, kCell, [&](GroundPoint c) {
      double s = 0;
      for (auto& u : own) s += ch.expected_se(10, ground_distance(c, u));
      return s;
    });
    const auto snr = decide(policy(PolicyKind::MaxSnr), p, 10, 0.1, kCell, own, nb, ch);
    ASSERT_TRUE(snr.has_value());
    EXPECT_NEAR(*snr, snr_idx * kDeg5, 1e-12) << scene;

    const int slr_idx = brute_force_argmax(p.ground, 1.0, 72, kCell, [&](GroundPoint c) {
      double leak = 0, sig = 0;
      for (auto& u : nb[0].active_users) leak += ch.expected_received_power(10, ground_distance(c, u));
      for (auto& u : own) sig += ch.expected_received_power(10, ground_distance(c, u));
      return sig / (leak + ch.full_band_noise());
    });
    const auto slr = decide(policy(PolicyKind::MaxSlr), p, 10, 0.1, kCell, own, nb, ch);
    ASSERT_TRUE(slr.has_value());
    EXPECT_NEAR(*slr, slr_idx * kDeg5, 1e-12) << scene;
  }
}

TEST_F(RepositioningTest, SlrWithoutNeighborsRanksLikeSnrForOneUser) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> coord(0.0, 80.0);
  for (int scene = 0; scene < 100; ++scene) {
    const DronePose p{{coord(rng), coord(rng)}, 10.0, 0.0};
    const std::vector<GroundPoint> own{{coord(rng), coord(rng)}};
    const auto a = decide(policy(PolicyKind::MaxSnr), p, 10, 0.1, kCell, own, {}, ch);
    const auto b = decide(policy(PolicyKind::MaxSlr), p, 10, 0.1, kCell, own, {}, ch);
    EXPECT_EQ(a, b) << scene;
  }
}

TEST_F(RepositioningTest, SlrAvoidsOppositeNeighborUser) {
  const DronePose p{{40, 40}, 10.0, 0.0};
  const std::vector<GroundPoint> own{{40, 70}};
  const NeighborSnapshot nb{{1, {40, -40}, {{40, -5}}}};
  const auto h = decide(policy(PolicyKind::MaxSlr), p, 10, 0.1, kCell, own, nb, ch);
  ASSERT_TRUE(h.has_value());
  EXPECT_NEAR(*h, kPi / 2, 1e-12);
  EXPECT_LT(leakage({40, 41}, 10, nb, ch), leakage({40, 39}, 10, nb, ch));
}

TEST_F(RepositioningTest, SymmetricSceneBreaksTieToSmallestHeading) {
  // Own user below the drone, neighbor users due north and due south. East
  // and west are mirror images and both beat north and south on leakage.
  const DronePose p{{40, 40}, 10.0, 0.0};
  const std::vector<GroundPoint> own{{40, 40}};
  const NeighborSnapshot nb{{1, {40, 120}, {{40, 90}}}, {2, {40, -40}, {{40, -10}}}};
  const double east = score_slr({41, 40}, 10, own, nb, ch);
  const double west = score_slr({39, 40}, 10, own, nb, ch);
  EXPECT_NEAR(east / west, 1.0, 1e-12);
  EXPECT_GT(east, score_slr({40, 41}, 10, own, nb, ch));
  EXPECT_GT(east, score_slr({40, 39}, 10, own, nb, ch));
  const auto h = decide(policy(PolicyKind::MaxSlr, kPi / 2), p, 10, 0.1, kCell, own, nb, ch);
  ASSERT_TRUE(h.has_value());
  EXPECT_DOUBLE_EQ(*h, 0.0);

  // A single northern neighbor breaks the symmetry toward the south.
  const NeighborSnapshot north{{1, {40, 120}, {{40, 90}}}};
  EXPECT_NEAR(*decide(policy(PolicyKind::MaxSlr, kPi / 2), p, 10, 0.1, kCell, own, north, ch), 3 * kPi / 2, 1e-12);
}

TEST_F(RepositioningTest, SingleUserApproachStrictlyReducesDistance) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> coord(0.0, 80.0);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    const DronePose p{{coord(rng), coord(rng)}, 10.0, 0.0};
    const std::vector<GroundPoint> own{{coord(rng), coord(rng)}};
    const double before = ground_distance(p.ground, own[0]);
    if (before <= 1.0) continue;
    const auto h = decide(policy(PolicyKind::MaxSnr), p, 10, 0.1, kCell, own, {}, ch);
    const auto next = reference_candidate(p.ground, *h, 1.0, kCell);
    EXPECT_LT(ground_distance(next, own[0]), before);
    ++checked;
  }
  EXPECT_GT(checked, 400);
}

TEST_F(RepositioningTest, ScaleInvariance) {
  // Scaling h, positions and v*dt together scales every link length, which
  // preserves the order of candidate distances and hence the argmax when the
  // drone stays clear of the clamp.
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> coord(20.0, 60.0);
  const CellBounds open{-1e6, -1e6, 1e6, 1e6};
  for (int i = 0; i < 50; ++i) {
    const DronePose p{{coord(rng), coord(rng)}, 10.0, 0.0};
    const std::vector<GroundPoint> own{{coord(rng), coord(rng)}};
    const double k = 2.5;
    const DronePose q{{p.ground.x * k, p.ground.y * k}, 10.0 * k, 0.0};
    const std::vector<GroundPoint> own_k{{own[0].x * k, own[0].y * k}};
    const auto a = decide(policy(PolicyKind::MaxSnr), p, 10, 0.1, open, own, {}, ch);
    const auto b = decide(policy(PolicyKind::MaxSnr), q, 10 * k, 0.1, open, own_k, {}, ch);
    EXPECT_NEAR(*a, *b, 1e-12) << i;
  }
}

TEST_F(RepositioningTest, OracleSingleDroneMatchesDecide) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(0.0, 80.0);
  for (int i = 0; i < 50; ++i) {
    OracleDrone d{{{coord(rng), coord(rng)}, 10.0, 0.0}, kCell, {{coord(rng), coord(rng)}, {coord(rng), coord(rng)}}};
    const std::vector<OracleDrone> drones{d};
    const auto res = centralized_oracle(
        drones, [&](std::span<const GroundPoint> pos) { return system_expected_se(drones, pos, 200.0, ch); }, 10, 0.1,
        kPi / 4);
    const auto h = decide(policy(PolicyKind::MaxSnr, kPi / 4), d.pose, 10, 0.1, kCell, d.active_users, {}, ch);
    ASSERT_EQ(res.headings.size(), 1u);
    EXPECT_EQ(res.headings[0], h) << i;
  }
}

TEST_F(RepositioningTest, OracleDominatesDistributedDecisions) {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> coord(0.0, 80.0);
  const CellBounds right{80, 0, 160, 80};
  for (int i = 0; i < 50; ++i) {
    std::vector<OracleDrone> drones{
        {{{coord(rng), coord(rng)}, 10.0, 0.0}, kCell, {{coord(rng), coord(rng)}}},
        {{{coord(rng) + 80, coord(rng)}, 10.0, 0.0}, right, {{coord(rng) + 80, coord(rng)}, {coord(rng) + 80, coord(rng)}}}};
    auto objective = [&](std::span<const GroundPoint> pos) { return system_expected_se(drones, pos, 200.0, ch); };
    const auto joint = centralized_oracle(drones, objective, 10, 0.1, kPi / 2);

    std::vector<GroundPoint> distributed;
    for (std::size_t n = 0; n < drones.size(); ++n) {
      const auto& d = drones[n];
      const auto h = decide(policy(PolicyKind::MaxSnr, kPi / 2), d.pose, 10, 0.1, d.bounds, d.active_users, {}, ch);
      distributed.push_back(reference_candidate(d.pose.ground, *h, 1.0, d.bounds));
    }
    EXPECT_GE(joint.score, objective(distributed) - 1e-12) << i;

    // The reported score is the objective at the reported headings.
    std::vector<GroundPoint> at_joint;
    for (std::size_t n = 0; n < drones.size(); ++n) {
      at_joint.push_back(reference_candidate(drones[n].pose.ground, *joint.headings[n], 1.0, drones[n].bounds));
    }
    EXPECT_NEAR(objective(at_joint), joint.score, 1e-12);
  }
}

TEST_F(RepositioningTest, OracleMirrorScene) {
  // Two drones mirrored about x = 80 serving mirrored users.
  const CellBounds right{80, 0, 160, 80};
  std::vector<OracleDrone> drones{{{{40, 40}, 10.0, 0.0}, kCell, {{60, 40}}},
                                  {{{120, 40}, 10.0, 0.0}, right, {{100, 40}}}};
  auto objective = [&](std::span<const GroundPoint> pos) { return system_expected_se(drones, pos, 200.0, ch); };
  const auto res = centralized_oracle(drones, objective, 10, 0.1, kPi / 2);
  ASSERT_TRUE(res.headings[0] && res.headings[1]);
  EXPECT_NEAR(*res.headings[0], 0.0, 1e-12);
  EXPECT_NEAR(*res.headings[1], kPi, 1e-12);
}

TEST_F(RepositioningTest, OracleIdleDroneHoversAndGuards) {
  std::vector<OracleDrone> drones{{{{40, 40}, 10.0, 0.0}, kCell, {{60, 40}}}, {{{120, 40}, 10.0, 0.0}, kCell, {}}};
  auto objective = [&](std::span<const GroundPoint> pos) { return system_expected_se(drones, pos, 200.0, ch); };
  const auto res = centralized_oracle(drones, objective, 10, 0.1, kPi / 2);
  EXPECT_TRUE(res.headings[0].has_value());
  EXPECT_FALSE(res.headings[1].has_value());

  EXPECT_THROW((void)centralized_oracle(drones, objective, 10, 0.1, kPi / 8), std::invalid_argument);
  std::vector<OracleDrone> four(4, drones[0]);
  EXPECT_THROW((void)centralized_oracle(four, objective, 10, 0.1, kPi / 2), std::invalid_argument);
}

}  // namespace
}  // namespace dronecell
