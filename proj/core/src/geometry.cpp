#include "dronecell/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dronecell {

bool CellBounds::contains(GroundPoint p) const noexcept {
  return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
}

GroundPoint CellBounds::clamp(GroundPoint p) const noexcept {
  return {std::clamp(p.x, x_min, x_max), std::clamp(p.y, y_min, y_max)};
}

GroundPoint CellBounds::center() const noexcept {
  return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max)};
}

double normalize_heading(double radians) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double h = std::fmod(radians, two_pi);
  if (h < 0.0) h += two_pi;
  // fmod of a value just below zero can round back up to exactly 2*pi.
  if (h >= two_pi) h = 0.0;
  return h;
}

double ground_distance(GroundPoint a, GroundPoint b) noexcept {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double euclidean_distance(double r, double h) noexcept { return std::hypot(r, h); }

CellGrid::CellGrid(int side_count, double edge_length)
    : side_count_(side_count), edge_length_(edge_length) {
  if (side_count < 1) {
    throw std::invalid_argument("grid side_count must be >= 1, got " + std::to_string(side_count));
  }
  if (side_count % 2 == 0) {
    throw std::invalid_argument("grid side_count must be odd (inner block needs a center cell), got " +
                                std::to_string(side_count));
  }
  if (!(edge_length > 0.0) || !std::isfinite(edge_length)) {
    throw std::invalid_argument("grid edge_length must be a positive finite length");
  }

  const auto k = static_cast<std::size_t>(side_count);
  centers_.reserve(k * k);
  inner_mask_.assign(k * k, 0);
  // Two boundary tiers are excluded once the grid is large enough to have them.
  const int margin = side_count >= 5 ? 2 : 0;
  for (int row = 0; row < side_count; ++row) {
    for (int col = 0; col < side_count; ++col) {
      centers_.push_back({(col + 0.5) * edge_length, (row + 0.5) * edge_length});
      const bool inner = row >= margin && row < side_count - margin && col >= margin &&
                         col < side_count - margin;
      if (inner) {
        const int id = row * side_count + col;
        inner_.push_back(id);
        inner_mask_[static_cast<std::size_t>(id)] = 1;
      }
    }
  }
}

bool CellGrid::is_inner(int cell_id) const noexcept {
  return cell_id >= 0 && static_cast<std::size_t>(cell_id) < inner_mask_.size() &&
         inner_mask_[static_cast<std::size_t>(cell_id)] != 0;
}

CellBounds CellGrid::bounds(int cell_id) const {
  if (cell_id < 0 || static_cast<std::size_t>(cell_id) >= centers_.size()) {
    throw std::out_of_range("cell id " + std::to_string(cell_id) + " outside grid");
  }
  const int row = cell_id / side_count_;
  const int col = cell_id % side_count_;
  return {col * edge_length_, row * edge_length_, (col + 1) * edge_length_, (row + 1) * edge_length_};
}

int CellGrid::cell_of(GroundPoint p) const noexcept {
  const double extent = side_count_ * edge_length_;
  if (!(p.x >= 0.0 && p.x <= extent && p.y >= 0.0 && p.y <= extent)) return -1;
  const int col = std::min(static_cast<int>(p.x / edge_length_), side_count_ - 1);
  const int row = std::min(static_cast<int>(p.y / edge_length_), side_count_ - 1);
  return row * side_count_ + col;
}

CellGrid build_grid(int side_count, double edge_length) { return CellGrid(side_count, edge_length); }

}  // namespace dronecell
