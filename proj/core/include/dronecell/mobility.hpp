#pragma once

#include "dronecell/geometry.hpp"
#include "dronecell/rng.hpp"

namespace dronecell {

/// Speed range for pedestrian random-waypoint motion.
struct RwpParams {
  double speed_min = 1.0;
  double speed_max = 3.0;
};

struct RwpState {
  GroundPoint position;
  GroundPoint waypoint;
  double speed = 1.0;
  int cell_id = 0;
};

[[nodiscard]] GroundPoint uniform_point(Rng& rng, const CellBounds& bounds);

/// Uniform start position, first waypoint and speed.
[[nodiscard]] RwpState rwp_init(Rng& rng, const CellBounds& bounds, const RwpParams& params, int cell_id);

/// Walks speed*dt toward the waypoint. Reaching it clips the move at the
/// waypoint and draws the next waypoint and speed; there is no pause.
[[nodiscard]] RwpState rwp_step(const RwpState& state, Rng& rng, double dt, const CellBounds& bounds,
                                const RwpParams& params = {});

/// Moves the drone v*dt along `heading` and clamps it to `bounds`.
[[nodiscard]] DronePose drone_step(const DronePose& pose, double heading, double v, double dt,
                                   const CellBounds& bounds);

}  // namespace dronecell
