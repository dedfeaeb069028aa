#include "dronecell/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <sstream>

#include "dronecell/engine.hpp"

namespace dronecell {

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace {

double parse_number(std::string_view term, std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError("analytic-sweep", 0, "bad number '" + std::string(text) + "' in " + std::string(term));
  }
  return v;
}

std::vector<double> parse_values(std::string_view term, std::string_view text) {
  std::vector<double> out;
  if (const auto c1 = text.find(':'); c1 != std::string_view::npos) {
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw ConfigError("analytic-sweep", 0, "range needs start:stop:step in " + std::string(term));
    const double start = parse_number(term, text.substr(0, c1));
    const double stop = parse_number(term, text.substr(c1 + 1, c2 - c1 - 1));
    const double step = parse_number(term, text.substr(c2 + 1));
    if (!(step > 0.0) || stop < start) throw ConfigError("analytic-sweep", 0, "empty or invalid range " + std::string(term));
    const long n = std::lround(std::floor((stop - start) / step + 1e-9));
    for (long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    out.push_back(parse_number(term, text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

nlohmann::ordered_json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

class CsvSink final : public RecordSink {
 public:
  CsvSink(std::ostream& slots, std::ostream& requests, const CellGrid& grid, SlotOutput mode, PolicyKind policy,
          MacScheme mac)
      : slots_(slots), requests_(requests), grid_(grid), mode_(mode), policy_(to_string(policy)), mac_(to_string(mac)) {}

  void on_slot(const SlotRecord& r) override {
    if (mode_ == SlotOutput::None || (mode_ == SlotOutput::Inner && !grid_.is_inner(r.cell_id))) return;
    double se_sum = 0.0;
    double bw = 0.0;
    std::string users;
    for (const auto& s : r.users) {
      se_sum += s.expected_se;
      bw += s.bandwidth_hz;
      if (!users.empty()) users += '|';
      users += std::to_string(s.user_id) + ':' + format_number(s.expected_se) + ':' + format_number(s.bandwidth_hz);
    }
    const std::string mean_se = r.users.empty() ? "" : format_number(se_sum / static_cast<double>(r.users.size()));
    const std::string heading_deg = r.heading ? format_number(*r.heading * 180.0 / std::numbers::pi) : "";
    slots_ << kSlotsSchema << ',' << policy_ << ',' << mac_ << ',' << r.run << ',' << r.slot << ',' << format_number(r.t)
           << ',' << r.cell_id << ',' << r.active_count() << ',' << format_number(bw) << ','
           << format_number(r.drone.ground.x) << ',' << format_number(r.drone.ground.y) << ','
           << heading_deg << ',' << mean_se << ',' << users << '\n';
  }

  void on_request(int run, const Request& q) override {
    requests_ << kRequestsSchema << ',' << policy_ << ',' << mac_ << ',' << run << ',' << q.user_id << ',' << q.cell_id
              << ',' << (grid_.is_inner(q.cell_id) ? 1 : 0) << ',' << format_number(q.size_bits) << ','
              << format_number(q.requested_at) << ',' << format_number(*q.completed_at) << ','
              << format_number(q.transmission_time()) << '\n';
  }

 private:
  std::ostream& slots_;
  std::ostream& requests_;
  const CellGrid& grid_;
  SlotOutput mode_;
  std::string_view policy_;
  std::string_view mac_;
};

}  // namespace

SweepSpec parse_sweep_spec(std::string_view text) {
  SweepSpec spec;
  std::istringstream in{std::string(text)};
  std::string term;
  while (in >> term) {
    const auto eq = term.find('=');
    if (eq == std::string::npos) throw ConfigError("analytic-sweep", 0, "expected name=values, got '" + term + "'");
    const std::string name = term.substr(0, eq);
    const auto values = parse_values(term, std::string_view(term).substr(eq + 1));
    if (name == "tau") {
      spec.taus = values;
    } else if (name == "v") {
      spec.speeds = values;
    } else if (name == "h" || name == "R") {
      if (values.size() != 1) throw ConfigError("analytic-sweep", 0, name + " takes a single value");
      (name == "h" ? spec.height_m : spec.radius_m) = values.front();
    } else {
      throw ConfigError("analytic-sweep", 0, "unknown sweep variable '" + name + "' (expected tau, v, h, R)");
    }
  }
  if (spec.taus.empty()) throw ConfigError("analytic-sweep", 0, "tau values are required");
  for (double t : spec.taus) {
    if (!(t > 0.0)) throw ConfigError("analytic-sweep", 0, "tau values must be positive");
  }
  for (double v : spec.speeds) {
    if (v < 0.0) throw ConfigError("analytic-sweep", 0, "speeds must be non-negative");
  }
  return spec;
}

ScenarioConfig resolve_config(ScenarioConfig config, const RunFlags& flags) {
  if (flags.runs) config.runs = *flags.runs;
  if (flags.seed) config.base_seed = *flags.seed;
  if (flags.grid_side) config.grid_side = *flags.grid_side;
  if (flags.duration_s) config.duration_s = *flags.duration_s;
  config.validate();
  return config;
}

void write_analytic_csv(std::ostream& out, std::span<const analytic::SweepRow> rows) {
  out << kAnalyticSchema << ",tau,v,h,R,hover_se,mobile_se,ratio,bound\n";
  for (const auto& r : rows) {
    out << kAnalyticSchema << ',' << format_number(r.tau_s) << ',' << format_number(r.speed_mps) << ','
        << format_number(r.height_m) << ',' << format_number(r.radius_m) << ',' << format_number(r.hover_se) << ','
        << format_number(r.mobile_se) << ',' << format_number(r.ratio) << ',' << format_number(r.bound) << '\n';
  }
}

void write_summary(std::ostream& out, const OutputBundle& bundle) {
  nlohmann::ordered_json doc;
  doc["schema"] = kSummarySchema;
  nlohmann::ordered_json cfg;
  for (const auto& [key, value] : resolved_settings(bundle.config)) cfg[key] = value;
  doc["config"] = cfg;
  doc["schemes"] = nlohmann::ordered_json::array();
  for (const auto& s : bundle.schemes) {
    nlohmann::ordered_json row;
    row["policy"] = to_string(s.policy);
    row["mac"] = to_string(s.mac);
    row["system_se"] = s.stats.system_se;
    row["system_se_per_user"] = s.stats.system_se_per_user;
    row["se_ratio_vs_hover"] = optional_json(s.se_ratio_vs_hover);
    row["jain"] = s.stats.jain;
    row["mean_transmission_time_s"] = optional_json(s.stats.mean_transmission_time_s);
    row["mean_turning_angle_deg"] = optional_json(s.stats.mean_turning_angle_deg);
    row["runs"] = nlohmann::ordered_json::array();
    for (const auto& r : s.stats.runs) {
      row["runs"].push_back({{"run", r.run},
                             {"system_se", r.system_se},
                             {"system_se_per_user", r.system_se_per_user},
                             {"jain", r.jain},
                             {"mean_transmission_time_s", optional_json(r.mean_transmission_time_s)},
                             {"completed_requests", r.completed_requests},
                             {"mean_turning_angle_deg", optional_json(r.mean_turning_angle_deg)}});
    }
    doc["schemes"].push_back(std::move(row));
  }
  if (!bundle.analytic.empty()) {
    doc["analytic_rows"] = bundle.analytic.size();
  }
  out << doc.dump(2) << '\n';
}

OutputBundle run_scenario(const ScenarioConfig& base, const RunFlags& flags) {
  OutputBundle bundle;
  bundle.config = resolve_config(base, flags);

  namespace fs = std::filesystem;
  fs::create_directories(flags.out_dir);
  const fs::path summary_path = flags.out_dir / "summary.txt";
  const fs::path slots_path = flags.out_dir / "slots.csv";
  const fs::path requests_path = flags.out_dir / "requests.csv";
  const fs::path analytic_path = flags.out_dir / "analytic.csv";
  std::vector<fs::path> written;

  try {
    if (!flags.analytic_only) {
      std::ofstream slots(slots_path);
      written.push_back(slots_path);
      std::ofstream requests(requests_path);
      written.push_back(requests_path);
      if (!slots || !requests) throw std::runtime_error("cannot open output files in " + flags.out_dir.string());
      slots << kSlotsSchema << ",policy,mac,run,slot,t,cell,active,allocated_hz,drone_x,drone_y,heading_deg,mean_se,users\n";
      requests << kRequestsSchema
               << ",policy,mac,run,user,cell,inner,size_bits,requested_at,completed_at,transmission_time\n";

      const CellGrid grid = build_grid(bundle.config.grid_side, bundle.config.cell_edge_m);
      for (MacScheme mac : flags.macs) {
        for (PolicyKind policy : flags.policies) {
          ScenarioConfig cfg = bundle.config;
          cfg.mac = mac;
          cfg.policy = policy;
          CsvSink sink(slots, requests, grid, flags.slots, policy, mac);
          bundle.schemes.push_back({policy, mac, run(cfg, &sink).summary, std::nullopt});
        }
      }
      for (auto& s : bundle.schemes) {
        for (const auto& h : bundle.schemes) {
          if (h.mac == s.mac && h.policy == PolicyKind::Hover && h.stats.system_se > 0.0) {
            s.se_ratio_vs_hover = se_ratio(s.stats, h.stats);
          }
        }
      }
      if (!slots || !requests) throw std::runtime_error("write failure in " + flags.out_dir.string());
    }

    if (flags.analytic_sweep) {
      analytic::AnalyticScenario scn;
      scn.channel = bundle.config.channel;
      scn.height_m = flags.analytic_sweep->height_m.value_or(bundle.config.drone_height_m);
      scn.radius_m = flags.analytic_sweep->radius_m.value_or(bundle.config.cell_edge_m / 2.0);
      std::vector<double> speeds = flags.analytic_sweep->speeds;
      if (speeds.empty()) speeds.push_back(bundle.config.drone_speed_mps);
      bundle.analytic = analytic::sweep(scn, flags.analytic_sweep->taus, speeds);
      std::ofstream out(analytic_path);
      written.push_back(analytic_path);
      write_analytic_csv(out, bundle.analytic);
      if (!out) throw std::runtime_error("write failure: " + analytic_path.string());
    }

    std::ofstream summary(summary_path);
    written.push_back(summary_path);
    write_summary(summary, bundle);
    if (!summary) throw std::runtime_error("write failure: " + summary_path.string());
  } catch (...) {
    std::error_code ec;
    for (const auto& p : written) fs::remove(p, ec);
    throw;
  }
  return bundle;
}

}  // namespace dronecell
