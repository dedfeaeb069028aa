#pragma once

#include <cstddef>
#include <vector>

namespace dronecell {

/// Ground-plane coordinates in meters, grid-global.
struct GroundPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const GroundPoint&, const GroundPoint&) = default;
};

/// Axis-aligned square region; a cell footprint.
struct CellBounds {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  [[nodiscard]] bool contains(GroundPoint p) const noexcept;
  [[nodiscard]] GroundPoint clamp(GroundPoint p) const noexcept;
  [[nodiscard]] GroundPoint center() const noexcept;
};

/// Drone location: ground projection, fixed height and the last commanded
/// heading in [0, 2*pi).
struct DronePose {
  GroundPoint ground;
  double height = 10.0;
  double heading = 0.0;
};

/// Normalizes an angle in radians to [0, 2*pi).
[[nodiscard]] double normalize_heading(double radians) noexcept;

[[nodiscard]] double ground_distance(GroundPoint a, GroundPoint b) noexcept;

/// 3D link length for ground distance `r` and height `h`.
[[nodiscard]] double euclidean_distance(double r, double h) noexcept;

/// k-by-k grid of square cells laid out from the origin. Cell id is
/// row * k + col, row along y, col along x.
class CellGrid {
 public:
  CellGrid(int side_count, double edge_length);

  [[nodiscard]] int side_count() const noexcept { return side_count_; }
  [[nodiscard]] double edge_length() const noexcept { return edge_length_; }
  [[nodiscard]] std::size_t size() const noexcept { return centers_.size(); }

  [[nodiscard]] const std::vector<GroundPoint>& centers() const noexcept { return centers_; }
  [[nodiscard]] const std::vector<int>& inner_cell_ids() const noexcept { return inner_; }
  [[nodiscard]] bool is_inner(int cell_id) const noexcept;

  [[nodiscard]] CellBounds bounds(int cell_id) const;
  [[nodiscard]] GroundPoint center(int cell_id) const { return centers_.at(static_cast<std::size_t>(cell_id)); }

  /// Cell containing `p`, or -1 outside the grid. Points on a shared edge
  /// belong to the cell with the larger index along that axis, except on
  /// the outer boundary.
  [[nodiscard]] int cell_of(GroundPoint p) const noexcept;

 private:
  int side_count_;
  double edge_length_;
  std::vector<GroundPoint> centers_;
  std::vector<int> inner_;
  std::vector<char> inner_mask_;
};

/// Throws std::invalid_argument for an even or non-positive side count.
[[nodiscard]] CellGrid build_grid(int side_count, double edge_length);

}  // namespace dronecell
