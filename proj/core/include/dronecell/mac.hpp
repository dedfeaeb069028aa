#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dronecell/channel.hpp"
#include "dronecell/geometry.hpp"

namespace dronecell {

enum class MacScheme { Fdma, Tdma };

/// Per-slot bandwidth grants of one cell, ascending by user id. Users not
/// listed hold no bandwidth.
class Allocation {
 public:
  struct Grant {
    int user_id;
    double bandwidth_hz;
  };

  Allocation() = default;
  explicit Allocation(std::vector<Grant> grants) : grants_(std::move(grants)) {}

  [[nodiscard]] bool empty() const noexcept { return grants_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return grants_.size(); }
  [[nodiscard]] const std::vector<Grant>& grants() const noexcept { return grants_; }
  [[nodiscard]] double bandwidth_of(int user_id) const noexcept;
  [[nodiscard]] double total() const noexcept;

 private:
  std::vector<Grant> grants_;
};

/// Equal split of `bandwidth_hz` among `active`.
[[nodiscard]] Allocation fdma_allocate(std::span<const int> active, double bandwidth_hz);

/// Whole band to the active user with the strongest expected received power
/// from the drone; lowest id wins ties. `user_positions` is indexed by user id.
[[nodiscard]] Allocation tdma_select(std::span<const int> active, const DronePose& drone,
                                     std::span<const GroundPoint> user_positions, const Channel& channel);

[[nodiscard]] Allocation allocate(MacScheme scheme, std::span<const int> active, const DronePose& drone,
                                  std::span<const GroundPoint> user_positions, const Channel& channel);

}  // namespace dronecell
