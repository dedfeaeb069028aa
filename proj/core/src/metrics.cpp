#include "dronecell/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace dronecell {

double jain_index(std::span<const double> rates) {
  if (rates.empty()) throw std::invalid_argument("jain_index: empty rate list");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double r : rates) {
    if (r < 0.0) throw std::invalid_argument("jain_index: negative rate");
    sum += r;
    sum_sq += r * r;
  }
  if (sum_sq == 0.0) throw std::invalid_argument("jain_index: all rates are zero");
  return sum * sum / (static_cast<double>(rates.size()) * sum_sq);
}

std::vector<double> mean_user_rates(std::span<const SlotRecord> records, std::span<const int> users, double slot_s,
                                    double horizon_s) {
  std::unordered_map<int, double> bits;
  for (const auto& rec : records) {
    for (const auto& s : rec.users) bits[s.user_id] += s.expected_se * s.bandwidth_hz * slot_s;
  }
  std::vector<double> out;
  out.reserve(users.size());
  for (int u : users) {
    const auto it = bits.find(u);
    out.push_back(it == bits.end() ? 0.0 : it->second / horizon_s);
  }
  return out;
}

double turning_angle_deg(double from_rad, double to_rad) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double diff = std::fmod(std::abs(to_rad - from_rad), two_pi);
  if (diff > std::numbers::pi) diff = two_pi - diff;
  return diff * 180.0 / std::numbers::pi;
}

std::optional<double> turning_angle_stats(std::span<const std::vector<double>> heading_sequences) {
  double sum = 0.0;
  long pairs = 0;
  for (const auto& seq : heading_sequences) {
    for (std::size_t i = 1; i < seq.size(); ++i) {
      sum += turning_angle_deg(seq[i - 1], seq[i]);
      ++pairs;
    }
  }
  if (pairs == 0) return std::nullopt;
  return sum / static_cast<double>(pairs);
}

std::optional<double> transmission_time_stats(std::span<const Request> completed) {
  if (completed.empty()) return std::nullopt;
  double sum = 0.0;
  for (const auto& r : completed) sum += r.transmission_time();
  return sum / static_cast<double>(completed.size());
}

SummaryStats summarize(std::vector<RunSummary> runs) {
  SummaryStats s;
  if (runs.empty()) return s;
  double tx_sum = 0.0;
  long tx_n = 0;
  double turn_sum = 0.0;
  long turn_n = 0;
  for (const auto& r : runs) {
    s.system_se += r.system_se;
    s.system_se_per_user += r.system_se_per_user;
    s.jain += r.jain;
    if (r.mean_transmission_time_s) {
      tx_sum += *r.mean_transmission_time_s * static_cast<double>(r.completed_requests);
      tx_n += r.completed_requests;
    }
    if (r.mean_turning_angle_deg) {
      turn_sum += *r.mean_turning_angle_deg * static_cast<double>(r.turning_pairs);
      turn_n += r.turning_pairs;
    }
  }
  const auto n = static_cast<double>(runs.size());
  s.system_se /= n;
  s.system_se_per_user /= n;
  s.jain /= n;
  if (tx_n > 0) s.mean_transmission_time_s = tx_sum / static_cast<double>(tx_n);
  if (turn_n > 0) s.mean_turning_angle_deg = turn_sum / static_cast<double>(turn_n);
  s.runs = std::move(runs);
  return s;
}

double se_ratio(const SummaryStats& scheme, const SummaryStats& hover) {
  if (!(hover.system_se > 0.0)) throw std::invalid_argument("se_ratio: hover SE must be positive");
  return scheme.system_se / hover.system_se;
}

MetricsAccumulator::MetricsAccumulator(const CellGrid& grid, std::vector<std::vector<int>> users_by_cell,
                                       int users_per_cell, double slot_s, double horizon_s)
    : inner_(grid.size(), 0),
      cells_(grid.size()),
      users_per_cell_(users_per_cell),
      slot_s_(slot_s),
      horizon_s_(horizon_s) {
  int max_user = -1;
  for (int c : grid.inner_cell_ids()) {
    inner_[static_cast<std::size_t>(c)] = 1;
    for (int u : users_by_cell.at(static_cast<std::size_t>(c))) {
      inner_users_.push_back(u);
      max_user = std::max(max_user, u);
    }
  }
  std::sort(inner_users_.begin(), inner_users_.end());
  user_bits_.assign(static_cast<std::size_t>(max_user + 1), 0.0);
}

void MetricsAccumulator::on_slot(const SlotRecord& record) {
  const auto c = static_cast<std::size_t>(record.cell_id);
  if (!inner_[c]) return;
  auto& cell = cells_[c];
  ++cell.slots;
  for (const auto& s : record.users) {
    cell.se_sum += s.expected_se;
    ++cell.samples;
    user_bits_[static_cast<std::size_t>(s.user_id)] += s.expected_se * s.bandwidth_hz * slot_s_;
  }
  if (record.heading) {
    if (cell.last_heading) {
      cell.turn_sum_deg += turning_angle_deg(*cell.last_heading, *record.heading);
      ++cell.turn_pairs;
    }
    cell.last_heading = record.heading;
  }
}

void MetricsAccumulator::on_request(int /*run*/, const Request& completed) {
  if (!inner_[static_cast<std::size_t>(completed.cell_id)]) return;
  tx_time_sum_ += completed.transmission_time();
  ++tx_count_;
}

RunSummary MetricsAccumulator::finish(int run) const {
  RunSummary out;
  out.run = run;
  double se_sum = 0.0;
  double se_per_user_sum = 0.0;
  int sampled_cells = 0;
  int cells = 0;
  double turn_sum = 0.0;
  long turn_pairs = 0;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (!inner_[c]) continue;
    const auto& cell = cells_[c];
    ++cells;
    if (cell.samples > 0) {
      se_sum += cell.se_sum / static_cast<double>(cell.samples);
      ++sampled_cells;
    }
    if (cell.slots > 0) se_per_user_sum += cell.se_sum / (static_cast<double>(cell.slots) * users_per_cell_);
    turn_sum += cell.turn_sum_deg;
    turn_pairs += cell.turn_pairs;
  }
  out.system_se = sampled_cells > 0 ? se_sum / sampled_cells : 0.0;
  out.system_se_per_user = cells > 0 ? se_per_user_sum / cells : 0.0;

  std::vector<double> rates;
  rates.reserve(inner_users_.size());
  for (int u : inner_users_) rates.push_back(user_bits_[static_cast<std::size_t>(u)] / horizon_s_);
  const bool any_rate = std::any_of(rates.begin(), rates.end(), [](double r) { return r > 0.0; });
  out.jain = any_rate ? jain_index(rates) : 0.0;

  out.completed_requests = tx_count_;
  if (tx_count_ > 0) out.mean_transmission_time_s = tx_time_sum_ / static_cast<double>(tx_count_);
  out.turning_pairs = turn_pairs;
  if (turn_pairs > 0) out.mean_turning_angle_deg = turn_sum / static_cast<double>(turn_pairs);
  return out;
}

}  // namespace dronecell
