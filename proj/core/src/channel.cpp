#include "dronecell/channel.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace dronecell {

double dbm_to_watt(double dbm) noexcept { return std::pow(10.0, dbm / 10.0) * 1e-3; }
double watt_to_dbm(double watt) noexcept { return 10.0 * std::log10(watt * 1e3); }
double to_db(double ratio) noexcept { return 10.0 * std::log10(ratio); }

std::vector<std::string> ChannelParams::validate() const {
  const std::pair<const char*, double> fields[] = {
      {"alpha", alpha},         {"beta", beta},           {"a_los_db", a_los_db},
      {"a_nlos_db", a_nlos_db}, {"gamma_los", gamma_los}, {"gamma_nlos", gamma_nlos},
      {"p_tx_w", p_tx_w},       {"bandwidth_hz", bandwidth_hz}, {"carrier_hz", carrier_hz},
      {"ue_noise_figure_db", ue_noise_figure_db},
  };
  for (const auto& [name, value] : fields) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw std::invalid_argument(std::string("channel parameter ") + name + " must be positive and finite");
    }
  }
  std::vector<std::string> warnings;
  if (gamma_nlos < gamma_los) {
    warnings.emplace_back("gamma_nlos < gamma_los: NLoS decays slower than LoS");
  }
  return warnings;
}

Channel::Channel(const ChannelParams& params)
    : params_(params),
      los_intercept_(std::pow(10.0, -params.a_los_db / 10.0)),
      nlos_intercept_(std::pow(10.0, -params.a_nlos_db / 10.0)),
      noise_density_(std::pow(10.0, (-174.0 + params.ue_noise_figure_db) / 10.0) * 1e-3) {
  (void)params_.validate();
}

double Channel::intercept_linear(PathKind kind) const noexcept {
  return kind == PathKind::LoS ? los_intercept_ : nlos_intercept_;
}

double Channel::elevation_deg(double h, double r) noexcept {
  return std::atan2(h, r) * (180.0 / std::numbers::pi);
}

double Channel::los_probability(double h, double r) const noexcept {
  const double theta = elevation_deg(h, r);
  return 1.0 / (1.0 + params_.alpha * std::exp(-params_.beta * (theta - params_.alpha)));
}

double Channel::path_loss_db(PathKind kind, double d) const noexcept {
  const double dd = d < 1.0 ? 1.0 : d;
  return kind == PathKind::LoS ? params_.a_los_db + 10.0 * params_.gamma_los * std::log10(dd)
                               : params_.a_nlos_db + 10.0 * params_.gamma_nlos * std::log10(dd);
}

namespace {

double clamp_reference(double d) noexcept { return d < 1.0 ? 1.0 : d; }

}  // namespace

double Channel::received_power(PathKind kind, double h, double r, double band_fraction) const noexcept {
  const double d = clamp_reference(std::hypot(r, h));
  const double gamma = kind == PathKind::LoS ? params_.gamma_los : params_.gamma_nlos;
  return band_fraction * params_.p_tx_w * intercept_linear(kind) * std::pow(d, -gamma);
}

double Channel::expected_received_power(double h, double r) const noexcept {
  const double d = clamp_reference(std::hypot(r, h));
  const double log_d = std::log(d);
  const double p_los = los_probability(h, r);
  const double s_los = los_intercept_ * std::exp(-params_.gamma_los * log_d);
  const double s_nlos = nlos_intercept_ * std::exp(-params_.gamma_nlos * log_d);
  return params_.p_tx_w * (p_los * s_los + (1.0 - p_los) * s_nlos);
}

double Channel::snr(PathKind kind, double h, double r) const noexcept {
  return received_power(kind, h, r, 1.0) / full_band_noise();
}

double Channel::sinr(PathKind kind, double h, double r_serving, std::span<const double> interferer_powers,
                     double band_fraction) const noexcept {
  const double interference = std::accumulate(interferer_powers.begin(), interferer_powers.end(), 0.0);
  const double signal = received_power(kind, h, r_serving, band_fraction);
  return signal / (band_fraction * interference + noise_power(band_fraction * params_.bandwidth_hz));
}

double Channel::path_se(PathKind kind, double h, double r, double interference) const noexcept {
  const double signal = received_power(kind, h, r, 1.0);
  return std::log2(1.0 + signal / (interference + full_band_noise()));
}

double Channel::expected_se(double h, double r_serving, double interference, double band_fraction) const noexcept {
  // The allocated fraction scales signal, interference and noise alike.
  const double denom = band_fraction * (interference + full_band_noise());
  const double p_los = los_probability(h, r_serving);
  const double se_los = std::log2(1.0 + received_power(PathKind::LoS, h, r_serving, band_fraction) / denom);
  const double se_nlos = std::log2(1.0 + received_power(PathKind::NLoS, h, r_serving, band_fraction) / denom);
  return p_los * se_los + (1.0 - p_los) * se_nlos;
}

}  // namespace dronecell
