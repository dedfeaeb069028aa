#include "dronecell/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dronecell {

namespace {
constexpr std::uint64_t kTrafficStream = 1;
}

double data_size_bits(double mbyte, MegabyteConvention convention) {
  const double bytes_per_mbyte = convention == MegabyteConvention::Binary ? 1048576.0 : 1e6;
  return mbyte * bytes_per_mbyte * 8.0;
}

double exponential_from_uniform(double u, double mean) { return -mean * std::log1p(-u); }

double draw_reading_time(Rng& rng, double mean_s) {
  if (!(mean_s > 0.0)) throw std::invalid_argument("mean reading time must be positive");
  double t = 0.0;
  while (!(t > 0.0)) t = exponential_from_uniform(uniform01(rng), mean_s);
  return t;
}

TrafficState::TrafficState(std::vector<int> user_cells, double mean_reading_time_s, double request_size_bits,
                           std::uint64_t seed)
    : user_cells_(std::move(user_cells)),
      mean_reading_time_(mean_reading_time_s),
      request_size_bits_(request_size_bits) {
  if (!(mean_reading_time_s > 0.0)) throw std::invalid_argument("mean reading time must be positive");
  if (!(request_size_bits > 0.0)) throw std::invalid_argument("request size must be positive");
  int max_cell = -1;
  for (int c : user_cells_) max_cell = std::max(max_cell, c);
  users_by_cell_.resize(static_cast<std::size_t>(max_cell + 1));
  phases_.reserve(user_cells_.size());
  rngs_.reserve(user_cells_.size());
  for (std::size_t u = 0; u < user_cells_.size(); ++u) {
    users_by_cell_[static_cast<std::size_t>(user_cells_[u])].push_back(static_cast<int>(u));
    rngs_.push_back(make_stream(seed, u, kTrafficStream));
    phases_.emplace_back(Reading{draw_reading_time(rngs_.back(), mean_reading_time_)});
  }
}

bool TrafficState::is_active(int user_id) const { return std::holds_alternative<Active>(phase(user_id)); }

AdvanceResult TrafficState::advance(int user_id, double now, double delivered_bits) {
  if (delivered_bits < 0.0) throw std::invalid_argument("delivered bits must be non-negative");
  auto& ph = phases_.at(static_cast<std::size_t>(user_id));
  AdvanceResult result;

  if (auto* reading = std::get_if<Reading>(&ph)) {
    if (delivered_bits > 0.0) {
      throw std::logic_error("bits delivered to reading user " + std::to_string(user_id));
    }
    if (reading->until <= now) {
      Request req;
      req.user_id = user_id;
      req.cell_id = cell_of(user_id);
      req.size_bits = request_size_bits_;
      req.remaining_bits = request_size_bits_;
      req.requested_at = reading->until;
      ph = Active{req};
      result.activated = true;
    }
    return result;
  }

  auto& req = std::get<Active>(ph).request;
  req.remaining_bits -= std::min(delivered_bits, req.remaining_bits);
  if (req.remaining_bits <= 0.0) {
    req.remaining_bits = 0.0;
    req.completed_at = now;
    result.completed = req;
    ph = Reading{now + draw_reading_time(rngs_[static_cast<std::size_t>(user_id)], mean_reading_time_)};
  }
  return result;
}

std::vector<int> TrafficState::active_set(int cell_id) const {
  std::vector<int> out;
  if (cell_id < 0 || static_cast<std::size_t>(cell_id) >= users_by_cell_.size()) return out;
  for (int u : users_by_cell_[static_cast<std::size_t>(cell_id)]) {
    if (is_active(u)) out.push_back(u);
  }
  return out;
}

void TrafficState::set_phase(int user_id, UserPhase phase) {
  phases_.at(static_cast<std::size_t>(user_id)) = std::move(phase);
}

}  // namespace dronecell
