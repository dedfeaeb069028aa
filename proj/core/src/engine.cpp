#include "dronecell/engine.hpp"

#include <cmath>
#include <numbers>

#include "dronecell/mac.hpp"
#include "dronecell/repositioning.hpp"

namespace dronecell {

namespace {

constexpr std::uint64_t kMobilityStream = 2;

std::vector<int> user_cells(int cell_count, int users_per_cell) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cell_count * users_per_cell));
  for (int c = 0; c < cell_count; ++c) {
    for (int k = 0; k < users_per_cell; ++k) out.push_back(c);
  }
  return out;
}

std::uint64_t run_seed(const ScenarioConfig& config, int run_index) {
  return config.base_seed + static_cast<std::uint64_t>(run_index);
}

}  // namespace

Simulation::Simulation(const ScenarioConfig& config, int run_index)
    : config_(config),
      run_(run_index),
      grid_((config.validate(), build_grid(config.grid_side, config.cell_edge_m))),
      channel_(config.channel),
      policy_(config.heading_policy()),
      traffic_(user_cells(static_cast<int>(grid_.size()), config.users_per_cell), config.mean_reading_time_s,
               config.request_size_bits(), run_seed(config, run_index)) {
  const auto cells = static_cast<int>(grid_.size());
  bounds_.reserve(grid_.size());
  drones_.reserve(grid_.size());
  users_by_cell_.resize(grid_.size());
  for (int c = 0; c < cells; ++c) {
    bounds_.push_back(grid_.bounds(c));
    drones_.push_back(DronePose{grid_.center(c), config.drone_height_m, 0.0});
  }

  const auto user_count = static_cast<std::size_t>(cells * config.users_per_cell);
  users_.reserve(user_count);
  user_positions_.reserve(user_count);
  mobility_rngs_.reserve(user_count);
  for (std::size_t u = 0; u < user_count; ++u) {
    const int cell = traffic_.cell_of(static_cast<int>(u));
    mobility_rngs_.push_back(make_stream(run_seed(config, run_index), u, kMobilityStream));
    users_.push_back(rwp_init(mobility_rngs_.back(), bounds_[static_cast<std::size_t>(cell)], config.user_mobility, cell));
    user_positions_.push_back(users_.back().position);
    users_by_cell_[static_cast<std::size_t>(cell)].push_back(static_cast<int>(u));
  }

  // A drone and a user in cells whose centers are D apart can be as close as
  // D - sqrt(2) * edge.
  const double kappa = config.interference_distance_m;
  const double reach = kappa + std::numbers::sqrt2 * config.cell_edge_m;
  leakage_neighbors_.resize(grid_.size());
  interferer_candidates_.resize(grid_.size());
  for (int a = 0; a < cells; ++a) {
    for (int b = 0; b < cells; ++b) {
      if (a == b) continue;
      const double d = ground_distance(grid_.center(a), grid_.center(b));
      if (d <= kappa) leakage_neighbors_[static_cast<std::size_t>(a)].push_back(b);
      if (d <= reach) interferer_candidates_[static_cast<std::size_t>(a)].push_back(b);
    }
  }
}

void Simulation::place_user(int user_id, GroundPoint position) {
  auto& u = users_.at(static_cast<std::size_t>(user_id));
  u.position = position;
  user_positions_[static_cast<std::size_t>(user_id)] = position;
}

void Simulation::freeze_users() { users_frozen_ = true; }

void Simulation::step(RecordSink& sink) {
  const double t = now();
  const double dt = config_.slot_s;
  const auto cells = grid_.size();
  const double h = config_.drone_height_m;

  // 1. Reading periods that ended become requests at this slot boundary.
  for (std::size_t u = 0; u < users_.size(); ++u) (void)traffic_.advance(static_cast<int>(u), t, 0.0);

  // 2. Slot-start snapshot.
  std::vector<std::vector<int>> active(cells);
  std::vector<std::vector<GroundPoint>> active_positions(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    active[c] = traffic_.active_set(static_cast<int>(c));
    for (int u : active[c]) active_positions[c].push_back(user_positions_[static_cast<std::size_t>(u)]);
  }

  // 3. Decisions read only the snapshot, so their order does not matter.
  std::vector<std::optional<double>> headings(cells);
  if (policy_.kind != PolicyKind::Hover) {
    NeighborSnapshot neighbors;
    for (std::size_t c = 0; c < cells; ++c) {
      if (active[c].empty()) continue;
      neighbors.clear();
      if (policy_.kind == PolicyKind::MaxSlr) {
        for (int n : leakage_neighbors_[c]) {
          const auto nc = static_cast<std::size_t>(n);
          if (active_positions[nc].empty()) continue;
          neighbors.push_back({n, drones_[nc].ground, active_positions[nc]});
        }
      }
      headings[c] = decide(policy_, drones_[c], config_.drone_speed_mps, dt, bounds_[c], active_positions[c], neighbors,
                           channel_);
    }
  }

  // 4. Move drones, then users.
  for (std::size_t c = 0; c < cells; ++c) {
    if (headings[c]) drones_[c] = drone_step(drones_[c], *headings[c], config_.drone_speed_mps, dt, bounds_[c]);
  }
  if (!users_frozen_) {
    for (std::size_t u = 0; u < users_.size(); ++u) {
      const auto cell = static_cast<std::size_t>(users_[u].cell_id);
      users_[u] = rwp_step(users_[u], mobility_rngs_[u], dt, bounds_[cell], config_.user_mobility);
      user_positions_[u] = users_[u].position;
    }
  }

  // 5. Bandwidth.
  std::vector<Allocation> allocations(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    allocations[c] = allocate(config_.mac, active[c], drones_[c], user_positions_, channel_);
  }

  // 6-7. Link quality, delivery, records.
  const double kappa = config_.interference_distance_m;
  for (std::size_t c = 0; c < cells; ++c) {
    SlotRecord rec;
    rec.run = run_;
    rec.slot = slot_;
    rec.t = t;
    rec.cell_id = static_cast<int>(c);
    rec.heading = headings[c];
    rec.users.reserve(active[c].size());
    for (int u : active[c]) {
      const GroundPoint pos = user_positions_[static_cast<std::size_t>(u)];
      double interference = 0.0;
      for (int i : interferer_candidates_[c]) {
        const auto ic = static_cast<std::size_t>(i);
        if (allocations[ic].empty()) continue;
        const double r = ground_distance(drones_[ic].ground, pos);
        if (r <= kappa) interference += channel_.expected_received_power(drones_[ic].height, r);
      }
      UserSample s;
      s.user_id = u;
      s.bandwidth_hz = allocations[c].bandwidth_of(u);
      const double fraction = s.bandwidth_hz > 0.0 ? s.bandwidth_hz / config_.channel.bandwidth_hz : 1.0;
      s.expected_se = channel_.expected_se(h, ground_distance(drones_[c].ground, pos), interference, fraction);
      if (s.bandwidth_hz > 0.0) {
        const auto& phase = std::get<Active>(traffic_.phase(u));
        s.delivered_bits = std::min(s.expected_se * s.bandwidth_hz * dt, phase.request.remaining_bits);
      }
      rec.users.push_back(s);
    }
    rec.drone = drones_[c];
    for (const auto& s : rec.users) {
      if (s.bandwidth_hz <= 0.0) continue;
      auto result = traffic_.advance(s.user_id, t + dt, s.delivered_bits);
      if (result.completed) sink.on_request(run_, *result.completed);
    }
    sink.on_slot(rec);
  }
  ++slot_;
}

void Simulation::run_to_end(RecordSink& sink) {
  const long total = config_.slot_count();
  while (slot_ < total) step(sink);
}

namespace {

class TeeSink final : public RecordSink {
 public:
  TeeSink(RecordSink& a, RecordSink* b) : a_(a), b_(b) {}
  void on_slot(const SlotRecord& r) override {
    a_.on_slot(r);
    if (b_) b_->on_slot(r);
  }
  void on_request(int run, const Request& q) override {
    a_.on_request(run, q);
    if (b_) b_->on_request(run, q);
  }

 private:
  RecordSink& a_;
  RecordSink* b_;
};

}  // namespace

RunSummary run_once(const ScenarioConfig& config, int run_index, RecordSink* extra) {
  Simulation sim(config, run_index);
  std::vector<std::vector<int>> by_cell(sim.grid().size());
  for (std::size_t c = 0; c < by_cell.size(); ++c) by_cell[c] = sim.users_of(static_cast<int>(c));
  MetricsAccumulator metrics(sim.grid(), std::move(by_cell), config.users_per_cell, config.slot_s,
                             static_cast<double>(config.slot_count()) * config.slot_s);
  TeeSink tee(metrics, extra);
  sim.run_to_end(tee);
  return metrics.finish(run_index);
}

RunResults run(const ScenarioConfig& config, RecordSink* extra) {
  config.validate();
  std::vector<RunSummary> runs;
  runs.reserve(static_cast<std::size_t>(config.runs));
  for (int r = 0; r < config.runs; ++r) runs.push_back(run_once(config, r, extra));
  return {summarize(std::move(runs))};
}

}  // namespace dronecell
