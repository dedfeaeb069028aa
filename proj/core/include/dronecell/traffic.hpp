#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "dronecell/rng.hpp"

namespace dronecell {

enum class MegabyteConvention { Binary, Decimal };

/// Bits in `mbyte` megabytes: 2^20 bytes per MByte (binary) or 10^6 (decimal).
[[nodiscard]] double data_size_bits(double mbyte, MegabyteConvention convention);

/// One downlink data package.
struct Request {
  int user_id = 0;
  int cell_id = 0;
  double size_bits = 0.0;
  double remaining_bits = 0.0;
  double requested_at = 0.0;
  std::optional<double> completed_at;

  [[nodiscard]] double transmission_time() const { return completed_at.value() - requested_at; }
};

/// Inverse CDF of the exponential distribution with mean `mean`.
[[nodiscard]] double exponential_from_uniform(double u, double mean);

/// Exponential reading time with mean `mean_s`; strictly positive.
[[nodiscard]] double draw_reading_time(Rng& rng, double mean_s);

struct Reading {
  double until = 0.0;
};
struct Active {
  Request request;
};
using UserPhase = std::variant<Reading, Active>;

struct AdvanceResult {
  std::optional<Request> completed;
  bool activated = false;
};

/// Per-user reading/downloading alternation. A user never holds more than
/// one request. Activation is quantized: a reading period that ends inside a
/// slot becomes a request at the next call to advance(), stamped with the
/// true end of the reading period.
class TrafficState {
 public:
  /// `user_cells[u]` is the serving cell of user u. Each user draws its
  /// first reading time at t = 0 from its own stream.
  TrafficState(std::vector<int> user_cells, double mean_reading_time_s, double request_size_bits,
               std::uint64_t seed);

  [[nodiscard]] std::size_t user_count() const noexcept { return phases_.size(); }
  [[nodiscard]] double mean_reading_time() const noexcept { return mean_reading_time_; }
  [[nodiscard]] double request_size_bits() const noexcept { return request_size_bits_; }
  [[nodiscard]] const UserPhase& phase(int user_id) const { return phases_.at(static_cast<std::size_t>(user_id)); }
  [[nodiscard]] bool is_active(int user_id) const;
  [[nodiscard]] int cell_of(int user_id) const { return user_cells_.at(static_cast<std::size_t>(user_id)); }

  /// Delivers `delivered_bits` to an active user (throws std::logic_error for
  /// a reading user), completing its request if nothing remains; a reading
  /// user whose period has elapsed by `now` becomes active.
  AdvanceResult advance(int user_id, double now, double delivered_bits);

  /// Users of `cell_id` currently downloading, ascending by id.
  [[nodiscard]] std::vector<int> active_set(int cell_id) const;

  /// Test hook: force a phase.
  void set_phase(int user_id, UserPhase phase);

 private:
  std::vector<int> user_cells_;
  std::vector<std::vector<int>> users_by_cell_;
  std::vector<UserPhase> phases_;
  std::vector<Rng> rngs_;
  double mean_reading_time_;
  double request_size_bits_;
};

}  // namespace dronecell
