#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dronecell/channel.hpp"
#include "dronecell/geometry.hpp"

namespace dronecell {

enum class PolicyKind { Hover, MaxSnr, MaxSlr };

/// Heading rule plus its discretization. `angle_step` must split the circle
/// into an even number 2M of equal candidates.
struct HeadingPolicy {
  PolicyKind kind = PolicyKind::MaxSnr;
  double angle_step = 0.0872664625997164788;  // 5 degrees
  double interference_distance = 200.0;

  /// 2M; throws std::invalid_argument if angle_step does not divide pi.
  [[nodiscard]] int candidate_count() const;
};

struct Candidate {
  double heading;
  GroundPoint position;
};

/// What a drone knows about one neighbor cell at slot start.
struct NeighborCell {
  int cell_id = -1;
  GroundPoint drone;
  std::vector<GroundPoint> active_users;
};
using NeighborSnapshot = std::vector<NeighborCell>;

/// Headings 0, step, 2 step, ... with the position reached after v*dt,
/// clamped to `bounds`.
[[nodiscard]] std::vector<Candidate> candidate_positions(const DronePose& pose, double v, double dt,
                                                         double angle_step, const CellBounds& bounds);

/// Interference-blind: sum of the own active users' expected SE.
[[nodiscard]] double score_snr(GroundPoint candidate, double h, std::span<const GroundPoint> own_active,
                               const Channel& channel);

/// Expected power a drone at `candidate` deposits on the neighbors' active users.
[[nodiscard]] double leakage(GroundPoint candidate, double h, const NeighborSnapshot& neighbors,
                             const Channel& channel);

/// Sum of own users' expected signal over (leakage + full-band noise).
[[nodiscard]] double score_slr(GroundPoint candidate, double h, std::span<const GroundPoint> own_active,
                               const NeighborSnapshot& neighbors, const Channel& channel);

/// Heading chosen for the slot, or nullopt to hover. A drone with active
/// users always moves; ties go to the smallest heading.
[[nodiscard]] std::optional<double> decide(const HeadingPolicy& policy, const DronePose& pose, double v, double dt,
                                           const CellBounds& bounds, std::span<const GroundPoint> own_active,
                                           const NeighborSnapshot& neighbors, const Channel& channel);

// Exhaustive joint search, for tiny instances only.

struct OracleDrone {
  DronePose pose;
  CellBounds bounds;
  std::vector<GroundPoint> active_users;
};

/// Scores the drones' ground positions (one per OracleDrone, same order).
using JointObjective = std::function<double(std::span<const GroundPoint>)>;

/// Mean over transmitting cells of the mean per-user expected SE, with every
/// other transmitting drone within `interference_distance` of a user as an
/// interferer.
[[nodiscard]] double system_expected_se(std::span<const OracleDrone> drones, std::span<const GroundPoint> positions,
                                        double interference_distance, const Channel& channel);

struct OracleResult {
  std::vector<std::optional<double>> headings;
  double score = 0.0;
};

/// Best joint heading assignment over all (2M)^N combinations. Drones with
/// no active users hover. Rejects N > 3 or 2M > 8 with std::invalid_argument.
[[nodiscard]] OracleResult centralized_oracle(std::span<const OracleDrone> drones, const JointObjective& objective,
                                              double v, double dt, double angle_step);

}  // namespace dronecell
