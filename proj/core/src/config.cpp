#include "dronecell/config.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

namespace dronecell {

ConfigError::ConfigError(std::string key, int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + key + ": " + message : key + ": " + message),
      key_(std::move(key)),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view value, int line) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
    throw ConfigError(std::string(key), line, "expected a number, got '" + std::string(value) + "'");
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view value, int line) {
  Int out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(std::string(key), line, "expected an integer, got '" + std::string(value) + "'");
  }
  return out;
}

std::string format_double(double v) {
  // Shortest representation that round-trips.
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

struct Field {
  std::function<void(ScenarioConfig&, std::string_view, int)> set;
  std::function<std::string(const ScenarioConfig&)> get;
};

#define DRONECELL_DOUBLE_FIELD(name, member)                                                           \
  {                                                                                                    \
    name, Field {                                                                                      \
      [](ScenarioConfig& c, std::string_view v, int line) { c.member = parse_double(name, v, line); }, \
          [](const ScenarioConfig& c) { return format_double(c.member); }                              \
    }                                                                                                  \
  }

const std::vector<std::pair<std::string, Field>>& fields() {
  static const std::vector<std::pair<std::string, Field>> table = {
      {"grid_side", Field{[](ScenarioConfig& c, std::string_view v, int line) { c.grid_side = parse_int<int>("grid_side", v, line); },
                          [](const ScenarioConfig& c) { return std::to_string(c.grid_side); }}},
      DRONECELL_DOUBLE_FIELD("cell_edge_m", cell_edge_m),
      {"users_per_cell",
       Field{[](ScenarioConfig& c, std::string_view v, int line) { c.users_per_cell = parse_int<int>("users_per_cell", v, line); },
             [](const ScenarioConfig& c) { return std::to_string(c.users_per_cell); }}},
      DRONECELL_DOUBLE_FIELD("drone_height_m", drone_height_m),
      DRONECELL_DOUBLE_FIELD("drone_speed_mps", drone_speed_mps),
      DRONECELL_DOUBLE_FIELD("bandwidth_hz", channel.bandwidth_hz),
      DRONECELL_DOUBLE_FIELD("carrier_hz", channel.carrier_hz),
      {"tx_power_dbm",
       Field{[](ScenarioConfig& c, std::string_view v, int line) { c.channel.p_tx_w = dbm_to_watt(parse_double("tx_power_dbm", v, line)); },
             [](const ScenarioConfig& c) { return format_double(std::round(watt_to_dbm(c.channel.p_tx_w) * 1e9) / 1e9); }}},
      DRONECELL_DOUBLE_FIELD("ue_noise_figure_db", channel.ue_noise_figure_db),
      DRONECELL_DOUBLE_FIELD("los_ref_loss_db", channel.a_los_db),
      DRONECELL_DOUBLE_FIELD("nlos_ref_loss_db", channel.a_nlos_db),
      DRONECELL_DOUBLE_FIELD("los_exponent", channel.gamma_los),
      DRONECELL_DOUBLE_FIELD("nlos_exponent", channel.gamma_nlos),
      DRONECELL_DOUBLE_FIELD("los_alpha", channel.alpha),
      DRONECELL_DOUBLE_FIELD("los_beta", channel.beta),
      DRONECELL_DOUBLE_FIELD("interference_distance_m", interference_distance_m),
      DRONECELL_DOUBLE_FIELD("mean_reading_time_s", mean_reading_time_s),
      DRONECELL_DOUBLE_FIELD("data_size_mbyte", data_size_mbyte),
      {"mbyte_convention",
       Field{[](ScenarioConfig& c, std::string_view v, int line) {
               if (v == "binary") {
                 c.mbyte_convention = MegabyteConvention::Binary;
               } else if (v == "decimal") {
                 c.mbyte_convention = MegabyteConvention::Decimal;
               } else {
                 throw ConfigError("mbyte_convention", line, "expected one of {binary, decimal}, got '" + std::string(v) + "'");
               }
             },
             [](const ScenarioConfig& c) { return std::string(to_string(c.mbyte_convention)); }}},
      DRONECELL_DOUBLE_FIELD("user_speed_min_mps", user_mobility.speed_min),
      DRONECELL_DOUBLE_FIELD("user_speed_max_mps", user_mobility.speed_max),
      DRONECELL_DOUBLE_FIELD("slot_s", slot_s),
      DRONECELL_DOUBLE_FIELD("angle_step_deg", angle_step_deg),
      {"mac", Field{[](ScenarioConfig& c, std::string_view v, int line) {
                      try {
                        c.mac = parse_mac(v);
                      } catch (const ConfigError& e) {
                        throw ConfigError("mac", line, "expected one of {fdma, tdma}, got '" + std::string(v) + "'");
                      }
                    },
                    [](const ScenarioConfig& c) { return std::string(to_string(c.mac)); }}},
      {"policy", Field{[](ScenarioConfig& c, std::string_view v, int line) {
                         try {
                           c.policy = parse_policy(v);
                         } catch (const ConfigError& e) {
                           throw ConfigError("policy", line,
                                             "expected one of {hover, max_snr, max_slr}, got '" + std::string(v) + "'");
                         }
                       },
                       [](const ScenarioConfig& c) { return std::string(to_string(c.policy)); }}},
      DRONECELL_DOUBLE_FIELD("duration_s", duration_s),
      {"runs", Field{[](ScenarioConfig& c, std::string_view v, int line) { c.runs = parse_int<int>("runs", v, line); },
                     [](const ScenarioConfig& c) { return std::to_string(c.runs); }}},
      {"seed", Field{[](ScenarioConfig& c, std::string_view v, int line) { c.base_seed = parse_int<std::uint64_t>("seed", v, line); },
                     [](const ScenarioConfig& c) { return std::to_string(c.base_seed); }}},
  };
  return table;
}

#undef DRONECELL_DOUBLE_FIELD

}  // namespace

std::string_view to_string(MacScheme mac) noexcept { return mac == MacScheme::Fdma ? "fdma" : "tdma"; }

std::string_view to_string(PolicyKind policy) noexcept {
  switch (policy) {
    case PolicyKind::Hover: return "hover";
    case PolicyKind::MaxSnr: return "max_snr";
    case PolicyKind::MaxSlr: return "max_slr";
  }
  return "?";
}

std::string_view to_string(MegabyteConvention convention) noexcept {
  return convention == MegabyteConvention::Binary ? "binary" : "decimal";
}

MacScheme parse_mac(std::string_view text) {
  if (text == "fdma") return MacScheme::Fdma;
  if (text == "tdma") return MacScheme::Tdma;
  throw ConfigError("mac", 0, "expected one of {fdma, tdma}, got '" + std::string(text) + "'");
}

PolicyKind parse_policy(std::string_view text) {
  if (text == "hover") return PolicyKind::Hover;
  if (text == "max_snr") return PolicyKind::MaxSnr;
  if (text == "max_slr") return PolicyKind::MaxSlr;
  throw ConfigError("policy", 0, "expected one of {hover, max_snr, max_slr}, got '" + std::string(text) + "'");
}

void apply_setting(ScenarioConfig& config, std::string_view key, std::string_view value, int line) {
  for (const auto& [name, field] : fields()) {
    if (name == key) {
      field.set(config, value, line);
      return;
    }
  }
  throw ConfigError(std::string(key), line, "unknown key");
}

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig config;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(line), line_no, "expected key=value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (value.empty()) throw ConfigError(std::string(key), line_no, "missing value");
    apply_setting(config, key, value, line_no);
  }
  config.validate();
  return config;
}

std::vector<std::pair<std::string, std::string>> resolved_settings(const ScenarioConfig& config) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [name, field] : fields()) out.emplace_back(name, field.get(config));
  return out;
}

void ScenarioConfig::validate() const {
  auto positive = [](const char* key, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(key, 0, "must be positive");
  };
  if (grid_side < 1 || grid_side % 2 == 0) throw ConfigError("grid_side", 0, "must be a positive odd integer");
  positive("cell_edge_m", cell_edge_m);
  if (users_per_cell < 1) throw ConfigError("users_per_cell", 0, "must be >= 1");
  positive("drone_height_m", drone_height_m);
  if (!(drone_speed_mps >= 0.0)) throw ConfigError("drone_speed_mps", 0, "must be non-negative");
  try {
    (void)channel.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("channel", 0, e.what());
  }
  positive("mean_reading_time_s", mean_reading_time_s);
  positive("data_size_mbyte", data_size_mbyte);
  positive("user_speed_min_mps", user_mobility.speed_min);
  if (!(user_mobility.speed_max >= user_mobility.speed_min)) {
    throw ConfigError("user_speed_max_mps", 0, "must be >= user_speed_min_mps");
  }
  positive("slot_s", slot_s);
  positive("interference_distance_m", interference_distance_m);
  positive("duration_s", duration_s);
  try {
    (void)heading_policy().candidate_count();
  } catch (const std::invalid_argument&) {
    throw ConfigError("angle_step_deg", 0, "must divide 180 degrees evenly");
  }
  const double slots = duration_s / slot_s;
  if (std::abs(slots - std::round(slots)) > 1e-6 * std::max(1.0, slots)) {
    throw ConfigError("duration_s", 0, "must be a multiple of slot_s");
  }
  if (runs < 1) throw ConfigError("runs", 0, "must be >= 1");
}

long ScenarioConfig::slot_count() const { return std::lround(duration_s / slot_s); }

HeadingPolicy ScenarioConfig::heading_policy() const {
  return {policy, angle_step_deg * std::numbers::pi / 180.0, interference_distance_m};
}

}  // namespace dronecell
