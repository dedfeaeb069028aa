#include <gtest/gtest.h>

#include "dronecell/config.hpp"

namespace dronecell {
namespace {

TEST(Config, DefaultsAreValid) {
  const ScenarioConfig c;
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(c.slot_count(), 4000);
  EXPECT_DOUBLE_EQ(c.request_size_bits(), 16777216.0);
  EXPECT_EQ(c.heading_policy().candidate_count(), 72);
}

TEST(Config, ParsesKeysCommentsAndEnums) {
  const auto c = parse_config(
      "# scenario\n"
      "grid_side = 5\n"
      "\n"
      "mac=tdma   # trailing comment\n"
      "policy = max_slr\n"
      "tx_power_dbm = 30\n"
      "mbyte_convention = decimal\n"
      "seed = 77\n");
  EXPECT_EQ(c.grid_side, 5);
  EXPECT_EQ(c.mac, MacScheme::Tdma);
  EXPECT_EQ(c.policy, PolicyKind::MaxSlr);
  EXPECT_NEAR(c.channel.p_tx_w, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(c.request_size_bits(), 16e6);
  EXPECT_EQ(c.base_seed, 77u);
  EXPECT_EQ(c.users_per_cell, 5);
}

TEST(Config, ErrorsNameKeyAndLine) {
  try {
    (void)parse_config("grid_side=7\nbogus=1\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.key(), "bogus");
    EXPECT_EQ(e.line(), 2);
  }
  try {
    (void)parse_config("runs=abc\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.key(), "runs");
    EXPECT_EQ(e.line(), 1);
  }
  EXPECT_THROW((void)parse_config("no equals sign\n"), ConfigError);
  EXPECT_THROW((void)parse_config("mac=cdma\n"), ConfigError);
  EXPECT_THROW((void)parse_config("grid_side=6\n"), ConfigError);
  EXPECT_THROW((void)parse_config("angle_step_deg=7\n"), ConfigError);
  EXPECT_THROW((void)parse_config("duration_s=1.05\n"), ConfigError);
  EXPECT_THROW((void)parse_config("bandwidth_hz=0\n"), ConfigError);
  EXPECT_THROW((void)parse_config("user_speed_min_mps=4\n"), ConfigError);
}

TEST(Config, ResolvedSettingsRoundTrip) {
  ScenarioConfig c;
  c.grid_side = 9;
  c.policy = PolicyKind::MaxSnr;
  c.channel.alpha = 12.08;
  c.drone_speed_mps = 15.0;
  std::string text;
  for (const auto& [k, v] : resolved_settings(c)) text += k + " = " + v + "\n";
  const auto back = parse_config(text);
  EXPECT_EQ(resolved_settings(back), resolved_settings(c));
  EXPECT_EQ(back.grid_side, 9);
  EXPECT_DOUBLE_EQ(back.channel.alpha, 12.08);
}

TEST(Config, EnumNames) {
  EXPECT_EQ(parse_policy("hover"), PolicyKind::Hover);
  EXPECT_EQ(parse_policy("max_snr"), PolicyKind::MaxSnr);
  EXPECT_EQ(to_string(PolicyKind::MaxSlr), "max_slr");
  EXPECT_EQ(to_string(MacScheme::Fdma), "fdma");
  EXPECT_THROW((void)parse_policy("greedy"), ConfigError);
}

}  // namespace
}  // namespace dronecell
