#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dronecell/channel.hpp"
#include "dronecell/mac.hpp"
#include "dronecell/mobility.hpp"
#include "dronecell/repositioning.hpp"
#include "dronecell/traffic.hpp"

namespace dronecell {

/// Bad configuration value or key. `line` is 0 when the error is not tied to
/// a config file line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, int line, const std::string& message);
  [[nodiscard]] const std::string& key() const noexcept { return key_; }
  [[nodiscard]] int line() const noexcept { return line_; }

 private:
  std::string key_;
  int line_;
};

/// Complete experiment description. Defaults reproduce the reference
/// 49-cell scenario: 80 m cells, 5 users each, drones at 10 m flying
/// 10 m/s, 20 s mean reading time, 2 MByte requests, 100 ms slots, 400 s.
struct ScenarioConfig {
  int grid_side = 7;
  double cell_edge_m = 80.0;
  int users_per_cell = 5;

  ChannelParams channel;
  double drone_height_m = 10.0;
  double drone_speed_mps = 10.0;

  double mean_reading_time_s = 20.0;
  double data_size_mbyte = 2.0;
  MegabyteConvention mbyte_convention = MegabyteConvention::Binary;

  RwpParams user_mobility;

  double slot_s = 0.1;
  double angle_step_deg = 5.0;
  double interference_distance_m = 200.0;

  MacScheme mac = MacScheme::Fdma;
  PolicyKind policy = PolicyKind::Hover;

  double duration_s = 400.0;
  int runs = 10;
  std::uint64_t base_seed = 1;

  /// Throws ConfigError naming the offending field.
  void validate() const;

  [[nodiscard]] long slot_count() const;
  [[nodiscard]] double request_size_bits() const { return data_size_bits(data_size_mbyte, mbyte_convention); }
  [[nodiscard]] HeadingPolicy heading_policy() const;
};

[[nodiscard]] std::string_view to_string(MacScheme mac) noexcept;
[[nodiscard]] std::string_view to_string(PolicyKind policy) noexcept;
[[nodiscard]] std::string_view to_string(MegabyteConvention convention) noexcept;
/// Accepts fdma, tdma. Throws ConfigError.
[[nodiscard]] MacScheme parse_mac(std::string_view text);
/// Accepts hover, max_snr, max_slr. Throws ConfigError.
[[nodiscard]] PolicyKind parse_policy(std::string_view text);

/// Parses `key=value` lines; `#` starts a comment. Unknown keys, malformed
/// lines and invalid values raise ConfigError with the line number. Keys not
/// mentioned keep their defaults.
[[nodiscard]] ScenarioConfig parse_config(std::string_view text);

/// Applies one key=value assignment (same keys as parse_config).
void apply_setting(ScenarioConfig& config, std::string_view key, std::string_view value, int line = 0);

/// Every key with its resolved value, in a fixed order, in config-file syntax.
[[nodiscard]] std::vector<std::pair<std::string, std::string>> resolved_settings(const ScenarioConfig& config);

}  // namespace dronecell
