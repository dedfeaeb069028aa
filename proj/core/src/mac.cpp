#include "dronecell/mac.hpp"

#include <numeric>

namespace dronecell {

double Allocation::bandwidth_of(int user_id) const noexcept {
  for (const auto& g : grants_) {
    if (g.user_id == user_id) return g.bandwidth_hz;
  }
  return 0.0;
}

double Allocation::total() const noexcept {
  return std::accumulate(grants_.begin(), grants_.end(), 0.0,
                         [](double acc, const Grant& g) { return acc + g.bandwidth_hz; });
}

Allocation fdma_allocate(std::span<const int> active, double bandwidth_hz) {
  if (active.empty()) return {};
  const double share = bandwidth_hz / static_cast<double>(active.size());
  std::vector<Allocation::Grant> grants;
  grants.reserve(active.size());
  for (int u : active) grants.push_back({u, share});
  return Allocation(std::move(grants));
}

Allocation tdma_select(std::span<const int> active, const DronePose& drone, std::span<const GroundPoint> user_positions,
                       const Channel& channel) {
  if (active.empty()) return {};
  int best_user = -1;
  double best_power = -1.0;
  for (int u : active) {
    const double r = ground_distance(drone.ground, user_positions[static_cast<std::size_t>(u)]);
    const double power = channel.expected_received_power(drone.height, r);
    if (power > best_power || (power == best_power && u < best_user)) {
      best_power = power;
      best_user = u;
    }
  }
  return Allocation({{best_user, channel.params().bandwidth_hz}});
}

Allocation allocate(MacScheme scheme, std::span<const int> active, const DronePose& drone,
                    std::span<const GroundPoint> user_positions, const Channel& channel) {
  return scheme == MacScheme::Fdma ? fdma_allocate(active, channel.params().bandwidth_hz)
                                   : tdma_select(active, drone, user_positions, channel);
}

}  // namespace dronecell
