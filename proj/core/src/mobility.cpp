#include "dronecell/mobility.hpp"

#include <cmath>
#include <stdexcept>

namespace dronecell {

GroundPoint uniform_point(Rng& rng, const CellBounds& bounds) {
  const double x = bounds.x_min + uniform01(rng) * (bounds.x_max - bounds.x_min);
  const double y = bounds.y_min + uniform01(rng) * (bounds.y_max - bounds.y_min);
  return {x, y};
}

namespace {

double draw_speed(Rng& rng, const RwpParams& params) {
  return params.speed_min + uniform01(rng) * (params.speed_max - params.speed_min);
}

}  // namespace

RwpState rwp_init(Rng& rng, const CellBounds& bounds, const RwpParams& params, int cell_id) {
  RwpState s;
  s.cell_id = cell_id;
  s.position = uniform_point(rng, bounds);
  s.waypoint = uniform_point(rng, bounds);
  s.speed = draw_speed(rng, params);
  return s;
}

RwpState rwp_step(const RwpState& state, Rng& rng, double dt, const CellBounds& bounds, const RwpParams& params) {
  if (!(dt > 0.0)) throw std::invalid_argument("rwp_step: dt must be positive");
  RwpState next = state;
  const double dx = state.waypoint.x - state.position.x;
  const double dy = state.waypoint.y - state.position.y;
  const double remaining = std::hypot(dx, dy);
  const double travel = state.speed * dt;
  if (travel >= remaining) {
    next.position = state.waypoint;
    next.waypoint = uniform_point(rng, bounds);
    next.speed = draw_speed(rng, params);
    return next;
  }
  const double f = travel / remaining;
  next.position = bounds.clamp({state.position.x + f * dx, state.position.y + f * dy});
  return next;
}

DronePose drone_step(const DronePose& pose, double heading, double v, double dt, const CellBounds& bounds) {
  DronePose next = pose;
  const double step = v * dt;
  next.ground = bounds.clamp({pose.ground.x + step * std::cos(heading), pose.ground.y + step * std::sin(heading)});
  next.heading = normalize_heading(heading);
  return next;
}

}  // namespace dronecell
