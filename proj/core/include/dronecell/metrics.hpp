#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dronecell/geometry.hpp"
#include "dronecell/records.hpp"
#include "dronecell/traffic.hpp"

namespace dronecell {

/// (sum r)^2 / (n sum r^2). Throws std::invalid_argument for an empty list,
/// a negative rate, or all-zero rates.
[[nodiscard]] double jain_index(std::span<const double> rates);

/// Time-average of SE * b_u over `horizon_s` for each id in `users`, idle
/// slots counting as zero.
[[nodiscard]] std::vector<double> mean_user_rates(std::span<const SlotRecord> records, std::span<const int> users,
                                                  double slot_s, double horizon_s);

/// Smallest absolute difference between two headings, in degrees [0, 180].
[[nodiscard]] double turning_angle_deg(double from_rad, double to_rad) noexcept;

/// Mean turn between consecutive headings of each sequence (one sequence per
/// drone, moving slots only). Empty when no sequence has two entries.
[[nodiscard]] std::optional<double> turning_angle_stats(std::span<const std::vector<double>> heading_sequences);

/// Mean completed_at - requested_at over completed requests; empty if none.
[[nodiscard]] std::optional<double> transmission_time_stats(std::span<const Request> completed);

/// Inner-cell statistics of one replication.
struct RunSummary {
  int run = 0;
  /// Mean over inner cells of the per-active-user SE average.
  double system_se = 0.0;
  /// Same with each cell's SE sum divided by users_per_cell every slot.
  double system_se_per_user = 0.0;
  double jain = 0.0;
  std::optional<double> mean_transmission_time_s;
  long completed_requests = 0;
  std::optional<double> mean_turning_angle_deg;
  long turning_pairs = 0;
};

/// Aggregate over replications.
struct SummaryStats {
  double system_se = 0.0;
  double system_se_per_user = 0.0;
  double jain = 0.0;
  std::optional<double> mean_transmission_time_s;
  std::optional<double> mean_turning_angle_deg;
  std::vector<RunSummary> runs;
};

/// Equal-weight means for SE and Jain; request- and turn-weighted means for
/// transmission time and turning angle.
[[nodiscard]] SummaryStats summarize(std::vector<RunSummary> runs);

/// scheme.system_se / hover.system_se.
[[nodiscard]] double se_ratio(const SummaryStats& scheme, const SummaryStats& hover);

struct RunResults {
  SummaryStats summary;
};

/// Folds one replication's records into a RunSummary, keeping only inner
/// cells of `grid`.
class MetricsAccumulator final : public RecordSink {
 public:
  MetricsAccumulator(const CellGrid& grid, std::vector<std::vector<int>> users_by_cell, int users_per_cell,
                     double slot_s, double horizon_s);

  void on_slot(const SlotRecord& record) override;
  void on_request(int run, const Request& completed) override;

  [[nodiscard]] RunSummary finish(int run) const;

 private:
  struct CellAccumulator {
    double se_sum = 0.0;
    long samples = 0;
    long slots = 0;
    std::optional<double> last_heading;
    double turn_sum_deg = 0.0;
    long turn_pairs = 0;
  };

  std::vector<char> inner_;
  std::vector<CellAccumulator> cells_;
  std::vector<int> inner_users_;
  std::vector<double> user_bits_;  // indexed by user id
  int users_per_cell_;
  double slot_s_;
  double horizon_s_;
  double tx_time_sum_ = 0.0;
  long tx_count_ = 0;
};

}  // namespace dronecell
