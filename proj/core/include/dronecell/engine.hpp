#pragma once

#include <vector>

#include "dronecell/channel.hpp"
#include "dronecell/config.hpp"
#include "dronecell/geometry.hpp"
#include "dronecell/metrics.hpp"
#include "dronecell/mobility.hpp"
#include "dronecell/records.hpp"
#include "dronecell/rng.hpp"
#include "dronecell/traffic.hpp"

namespace dronecell {

/// One replication of the slotted multi-cell network. Drones start above
/// their cell centers; users start uniformly in their cells, reading.
///
/// Each step():
///   1. activates users whose reading time ended,
///   2. freezes positions and active sets,
///   3. lets every drone pick a heading from that snapshot,
///   4. moves drones, then users,
///   5. allocates bandwidth per cell,
///   6. evaluates every active user's expected SE against transmitting
///      drones within the interference distance,
///   7. delivers SE * b_u * dt bits and emits records.
class Simulation {
 public:
  Simulation(const ScenarioConfig& config, int run_index);

  void step(RecordSink& sink);
  void run_to_end(RecordSink& sink);

  [[nodiscard]] double now() const noexcept { return static_cast<double>(slot_) * config_.slot_s; }
  [[nodiscard]] long slot() const noexcept { return slot_; }
  [[nodiscard]] const CellGrid& grid() const noexcept { return grid_; }
  [[nodiscard]] const Channel& channel() const noexcept { return channel_; }
  [[nodiscard]] const std::vector<DronePose>& drones() const noexcept { return drones_; }
  [[nodiscard]] const std::vector<GroundPoint>& user_positions() const noexcept { return user_positions_; }
  [[nodiscard]] const TrafficState& traffic() const noexcept { return traffic_; }
  [[nodiscard]] TrafficState& traffic() noexcept { return traffic_; }
  [[nodiscard]] const std::vector<int>& users_of(int cell_id) const { return users_by_cell_.at(static_cast<std::size_t>(cell_id)); }

  /// Places a user, keeping its waypoint. For tests.
  void place_user(int user_id, GroundPoint position);
  /// Freezes users in place (speed 0). For tests.
  void freeze_users();

 private:
  ScenarioConfig config_;
  int run_;
  CellGrid grid_;
  Channel channel_;
  HeadingPolicy policy_;
  std::vector<CellBounds> bounds_;
  std::vector<DronePose> drones_;
  std::vector<RwpState> users_;
  std::vector<GroundPoint> user_positions_;
  std::vector<Rng> mobility_rngs_;
  std::vector<std::vector<int>> users_by_cell_;
  /// Cells whose center lies within the interference distance (self excluded).
  std::vector<std::vector<int>> leakage_neighbors_;
  /// Cells whose drone can come within the interference distance of a user here.
  std::vector<std::vector<int>> interferer_candidates_;
  TrafficState traffic_;
  bool users_frozen_ = false;
  long slot_ = 0;
};

/// Every replication of `config` (seeds base_seed + run index), aggregated over
/// inner cells. `extra`, when given, also receives every record.
[[nodiscard]] RunResults run(const ScenarioConfig& config, RecordSink* extra = nullptr);

/// One replication.
[[nodiscard]] RunSummary run_once(const ScenarioConfig& config, int run_index, RecordSink* extra = nullptr);

}  // namespace dronecell
