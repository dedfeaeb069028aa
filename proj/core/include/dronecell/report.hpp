#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dronecell/analytic.hpp"
#include "dronecell/config.hpp"
#include "dronecell/metrics.hpp"

namespace dronecell {

inline constexpr std::string_view kSlotsSchema = "slots/v1";
inline constexpr std::string_view kRequestsSchema = "requests/v1";
inline constexpr std::string_view kAnalyticSchema = "analytic/v1";
inline constexpr std::string_view kSummarySchema = "summary/v1";

/// Analytic grid: every (tau, v) pair at fixed h and R.
struct SweepSpec {
  std::vector<double> taus;
  std::vector<double> speeds;
  std::optional<double> height_m;
  std::optional<double> radius_m;
};

/// Parses space-separated `name=values` terms, names tau, v, h, R. Values are
/// `start:stop:step` (inclusive) or a comma list. Throws ConfigError.
[[nodiscard]] SweepSpec parse_sweep_spec(std::string_view text);

enum class SlotOutput { Inner, All, None };

struct RunFlags {
  std::vector<PolicyKind> policies{PolicyKind::Hover};
  std::vector<MacScheme> macs{MacScheme::Fdma};
  std::optional<int> runs;
  std::optional<std::uint64_t> seed;
  std::optional<int> grid_side;
  std::optional<double> duration_s;
  std::optional<SweepSpec> analytic_sweep;
  /// Skip the network simulation; only meaningful with analytic_sweep.
  bool analytic_only = false;
  SlotOutput slots = SlotOutput::Inner;
  std::filesystem::path out_dir = "out";
};

struct SchemeResult {
  PolicyKind policy;
  MacScheme mac;
  SummaryStats stats;
  /// Against hover under the same MAC, when hover was part of the invocation.
  std::optional<double> se_ratio_vs_hover;
};

struct OutputBundle {
  ScenarioConfig config;
  std::vector<SchemeResult> schemes;
  std::vector<analytic::SweepRow> analytic;
};

/// Config with command-line overrides applied and validated.
[[nodiscard]] ScenarioConfig resolve_config(ScenarioConfig config, const RunFlags& flags);

/// Runs every (policy, mac) pair and the analytic sweep, writing
/// summary.txt, slots.csv, requests.csv and analytic.csv under flags.out_dir.
/// On failure the files written so far are removed and the error rethrown.
OutputBundle run_scenario(const ScenarioConfig& config, const RunFlags& flags);

void write_summary(std::ostream& out, const OutputBundle& bundle);
void write_analytic_csv(std::ostream& out, std::span<const analytic::SweepRow> rows);

/// Shortest round-trip decimal form.
[[nodiscard]] std::string format_number(double v);

}  // namespace dronecell
