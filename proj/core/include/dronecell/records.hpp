#pragma once

#include <optional>
#include <vector>

#include "dronecell/geometry.hpp"
#include "dronecell/traffic.hpp"

namespace dronecell {

/// One active user's state in a slot. `bandwidth_hz` is zero for a TDMA user
/// that was not scheduled; its link SE is still reported.
struct UserSample {
  int user_id = 0;
  double expected_se = 0.0;
  double bandwidth_hz = 0.0;
  double delivered_bits = 0.0;
};

/// Per (run, slot, cell) outcome. `t` is the slot start time.
struct SlotRecord {
  int run = 0;
  long slot = 0;
  double t = 0.0;
  int cell_id = 0;
  std::vector<UserSample> users;
  DronePose drone;
  /// Heading flown this slot; empty when the drone hovered.
  std::optional<double> heading;

  [[nodiscard]] int active_count() const noexcept { return static_cast<int>(users.size()); }
};

/// Receiver for everything a simulation run emits.
class RecordSink {
 public:
  virtual ~RecordSink() = default;
  virtual void on_slot(const SlotRecord& record) = 0;
  virtual void on_request(int run, const Request& completed) = 0;
};

}  // namespace dronecell
