// Command-line driver: runs hover/repositioning schemes on a drone small-cell
// grid and exports summary.txt, slots.csv, requests.csv and analytic.csv.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dronecell/config.hpp"
#include "dronecell/report.hpp"

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drone small-cell repositioning simulator"};

  std::string config_path;
  std::string policies = "hover";
  std::string macs = "fdma";
  std::optional<int> runs;
  std::optional<std::uint64_t> seed;
  std::optional<int> grid;
  std::optional<double> duration;
  std::string out_dir = "out";
  std::string sweep;
  std::string slots = "inner";
  bool analytic_only = false;

  app.add_option("--config", config_path, "key=value scenario file")->check(CLI::ExistingFile);
  app.add_option("--policy", policies, "Comma list of hover, max_snr, max_slr");
  app.add_option("--mac", macs, "Comma list of fdma, tdma");
  app.add_option("--runs", runs, "Independent replications");
  app.add_option("--seed", seed, "Base seed; run i uses seed + i");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--analytic-sweep", sweep, "e.g. \"tau=0.5:6:0.5 v=10,15,20\"");
  app.add_option("--grid", grid, "Grid side count (odd)");
  app.add_option("--duration", duration, "Simulated seconds per run");
  app.add_option("--slots", slots, "Per-slot rows to write: inner, all, none")
      ->check(CLI::IsMember({"inner", "all", "none"}));
  app.add_flag("--analytic-only", analytic_only, "Only evaluate the analytic sweep");

  CLI11_PARSE(app, argc, argv);

  try {
    dronecell::ScenarioConfig config;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      std::stringstream buf;
      buf << in.rdbuf();
      config = dronecell::parse_config(buf.str());
    }

    dronecell::RunFlags flags;
    flags.policies.clear();
    for (const auto& p : split_list(policies)) flags.policies.push_back(dronecell::parse_policy(p));
    flags.macs.clear();
    for (const auto& m : split_list(macs)) flags.macs.push_back(dronecell::parse_mac(m));
    flags.runs = runs;
    flags.seed = seed;
    flags.grid_side = grid;
    flags.duration_s = duration;
    flags.out_dir = out_dir;
    flags.slots = slots == "all" ? dronecell::SlotOutput::All
                  : slots == "none" ? dronecell::SlotOutput::None
                                    : dronecell::SlotOutput::Inner;
    if (!sweep.empty()) flags.analytic_sweep = dronecell::parse_sweep_spec(sweep);
    flags.analytic_only = analytic_only;
    if (analytic_only && !flags.analytic_sweep) {
      std::cerr << "error: --analytic-only needs --analytic-sweep\n";
      return 2;
    }

    const auto bundle = dronecell::run_scenario(config, flags);
    for (const auto& s : bundle.schemes) {
      std::cout << dronecell::to_string(s.policy) << '/' << dronecell::to_string(s.mac)
                << "  SE=" << s.stats.system_se;
      if (s.se_ratio_vs_hover) std::cout << "  ratio=" << *s.se_ratio_vs_hover;
      std::cout << "  jain=" << s.stats.jain;
      if (s.stats.mean_transmission_time_s) std::cout << "  tx=" << *s.stats.mean_transmission_time_s << "s";
      if (s.stats.mean_turning_angle_deg) std::cout << "  turn=" << *s.stats.mean_turning_angle_deg << "deg";
      std::cout << '\n';
    }
    if (!bundle.analytic.empty()) std::cout << bundle.analytic.size() << " analytic rows\n";
  } catch (const dronecell::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
