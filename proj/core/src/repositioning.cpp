#include "dronecell/repositioning.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dronecell {

namespace {

// Relative margin below which two candidate scores count as tied.
constexpr double kTieTolerance = 1e-12;

bool strictly_better(double score, double best) {
  if (std::isinf(best)) return score > best;
  return score > best + kTieTolerance * std::abs(best);
}

}  // namespace

int HeadingPolicy::candidate_count() const {
  if (!(angle_step > 0.0)) throw std::invalid_argument("angle_step must be positive");
  const double m = std::numbers::pi / angle_step;
  const double rounded = std::round(m);
  if (rounded < 1.0 || std::abs(m - rounded) > 1e-9 * rounded) {
    throw std::invalid_argument("angle_step must equal pi/M for an integer M >= 1");
  }
  return 2 * static_cast<int>(rounded);
}

std::vector<Candidate> candidate_positions(const DronePose& pose, double v, double dt, double angle_step,
                                           const CellBounds& bounds) {
  const int count = HeadingPolicy{PolicyKind::MaxSnr, angle_step, 0.0}.candidate_count();
  const double step = v * dt;
  std::vector<Candidate> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double heading = i * angle_step;
    const GroundPoint p{pose.ground.x + step * std::cos(heading), pose.ground.y + step * std::sin(heading)};
    out.push_back({heading, bounds.clamp(p)});
  }
  return out;
}

double score_snr(GroundPoint candidate, double h, std::span<const GroundPoint> own_active, const Channel& channel) {
  double total = 0.0;
  for (const auto& u : own_active) total += channel.expected_se(h, ground_distance(candidate, u));
  return total;
}

double leakage(GroundPoint candidate, double h, const NeighborSnapshot& neighbors, const Channel& channel) {
  double total = 0.0;
  for (const auto& cell : neighbors) {
    for (const auto& u : cell.active_users) {
      total += channel.expected_received_power(h, ground_distance(candidate, u));
    }
  }
  return total;
}

double score_slr(GroundPoint candidate, double h, std::span<const GroundPoint> own_active,
                 const NeighborSnapshot& neighbors, const Channel& channel) {
  const double denom = leakage(candidate, h, neighbors, channel) + channel.full_band_noise();
  double signal = 0.0;
  for (const auto& u : own_active) signal += channel.expected_received_power(h, ground_distance(candidate, u));
  return signal / denom;
}

std::optional<double> decide(const HeadingPolicy& policy, const DronePose& pose, double v, double dt,
                             const CellBounds& bounds, std::span<const GroundPoint> own_active,
                             const NeighborSnapshot& neighbors, const Channel& channel) {
  if (policy.kind == PolicyKind::Hover || own_active.empty()) return std::nullopt;

  const auto candidates = candidate_positions(pose, v, dt, policy.angle_step, bounds);
  double best_score = -std::numeric_limits<double>::infinity();
  double best_heading = 0.0;
  for (const auto& c : candidates) {
    const double s = policy.kind == PolicyKind::MaxSnr ? score_snr(c.position, pose.height, own_active, channel)
                                                       : score_slr(c.position, pose.height, own_active, neighbors, channel);
    if (strictly_better(s, best_score)) {
      best_score = s;
      best_heading = c.heading;
    }
  }
  return best_heading;
}

double system_expected_se(std::span<const OracleDrone> drones, std::span<const GroundPoint> positions,
                          double interference_distance, const Channel& channel) {
  double cell_sum = 0.0;
  int cells = 0;
  for (std::size_t n = 0; n < drones.size(); ++n) {
    const auto& users = drones[n].active_users;
    if (users.empty()) continue;
    double user_sum = 0.0;
    for (const auto& u : users) {
      double interference = 0.0;
      for (std::size_t i = 0; i < drones.size(); ++i) {
        if (i == n || drones[i].active_users.empty()) continue;
        const double r = ground_distance(positions[i], u);
        if (r <= interference_distance) interference += channel.expected_received_power(drones[i].pose.height, r);
      }
      user_sum += channel.expected_se(drones[n].pose.height, ground_distance(positions[n], u), interference, 1.0);
    }
    cell_sum += user_sum / static_cast<double>(users.size());
    ++cells;
  }
  return cells == 0 ? 0.0 : cell_sum / cells;
}

OracleResult centralized_oracle(std::span<const OracleDrone> drones, const JointObjective& objective, double v,
                                double dt, double angle_step) {
  const int count = HeadingPolicy{PolicyKind::MaxSnr, angle_step, 0.0}.candidate_count();
  if (drones.size() > 3 || count > 8) {
    throw std::invalid_argument("centralized_oracle is limited to N <= 3 drones and 2M <= 8 headings");
  }

  std::vector<std::vector<Candidate>> options;
  for (const auto& d : drones) {
    if (d.active_users.empty()) {
      options.push_back({{-1.0, d.pose.ground}});  // hover
    } else {
      options.push_back(candidate_positions(d.pose, v, dt, angle_step, d.bounds));
    }
  }

  OracleResult best;
  best.score = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> index(drones.size(), 0);
  std::vector<GroundPoint> positions(drones.size());
  while (true) {
    for (std::size_t n = 0; n < drones.size(); ++n) positions[n] = options[n][index[n]].position;
    const double s = objective(positions);
    if (strictly_better(s, best.score)) {
      best.score = s;
      best.headings.clear();
      for (std::size_t n = 0; n < drones.size(); ++n) {
        const double h = options[n][index[n]].heading;
        best.headings.push_back(h < 0.0 ? std::nullopt : std::optional<double>(h));
      }
    }
    // Odometer increment, last drone fastest.
    std::size_t n = drones.size();
    while (n > 0) {
      --n;
      if (++index[n] < options[n].size()) break;
      index[n] = 0;
      if (n == 0) return best;
    }
    if (drones.empty()) return best;
  }
}

}  // namespace dronecell
