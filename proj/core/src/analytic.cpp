#include "dronecell/analytic.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

namespace dronecell::analytic {

double integrate(const std::function<double(double)>& f, double a, double b) {
  if (a == b) return 0.0;
  double error = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 20, 1e-10, &error);
  if (!std::isfinite(value) || error > std::max(1e-9, 1e-6 * std::abs(value))) {
    throw QuadratureError("quadrature did not converge on [" + std::to_string(a) + ", " + std::to_string(b) +
                          "]: error estimate " + std::to_string(error));
  }
  return value;
}

namespace {

void check_radius(const AnalyticScenario& scn, double r0) {
  if (!(r0 >= 0.0) || r0 > scn.radius_m) throw std::invalid_argument("r0 must lie in [0, R]");
}

double hover_at(const Channel& ch, double h, double r) { return ch.expected_se(h, r); }

double mobile_at(const Channel& ch, const AnalyticScenario& scn, double r0) {
  const double h = scn.height_m;
  if (scn.speed_mps <= 0.0) return hover_at(ch, h, r0);
  if (r0 <= 0.0) return hover_at(ch, h, 0.0);
  const double t_move = std::min(r0 / scn.speed_mps, scn.tau_s);
  const double c = t_move / scn.tau_s;
  const double end = std::max(0.0, r0 - scn.speed_mps * t_move);
  // Constant speed turns the time average into a distance average.
  const double path_avg = integrate([&](double r) { return hover_at(ch, h, r); }, end, r0) / (r0 - end);
  return c * path_avg + (1.0 - c) * hover_at(ch, h, 0.0);
}

}  // namespace

double hover_se_at(const AnalyticScenario& scn, double r0) {
  check_radius(scn, r0);
  return hover_at(Channel(scn.channel), scn.height_m, r0);
}

double hover_se_expected(const AnalyticScenario& scn) {
  if (!(scn.radius_m > 0.0)) throw std::invalid_argument("radius must be positive");
  const Channel ch(scn.channel);
  const double r2 = scn.radius_m * scn.radius_m;
  return integrate([&](double r) { return hover_at(ch, scn.height_m, r) * 2.0 * r / r2; }, 0.0, scn.radius_m);
}

double mobile_se_at(const AnalyticScenario& scn, double r0) {
  check_radius(scn, r0);
  if (!(scn.tau_s > 0.0)) throw std::invalid_argument("tau must be positive");
  return mobile_at(Channel(scn.channel), scn, r0);
}

double mobile_se_expected(const AnalyticScenario& scn) {
  if (!(scn.radius_m > 0.0)) throw std::invalid_argument("radius must be positive");
  if (!(scn.tau_s > 0.0)) throw std::invalid_argument("tau must be positive");
  const Channel ch(scn.channel);
  const double r2 = scn.radius_m * scn.radius_m;
  auto density_weighted = [&](double r) { return mobile_at(ch, scn, r) * 2.0 * r / r2; };
  // Users beyond v*tau are never reached; the integrand has a kink there.
  const double reach = scn.speed_mps > 0.0 ? std::min(scn.speed_mps * scn.tau_s, scn.radius_m) : scn.radius_m;
  return integrate(density_weighted, 0.0, reach) + integrate(density_weighted, reach, scn.radius_m);
}

BoundResult theorem1_bound(const AnalyticScenario& scn) {
  const Channel ch(scn.channel);
  const auto& p = scn.channel;
  BoundResult out;
  out.overhead_los_snr =
      p.p_tx_w * ch.intercept_linear(PathKind::LoS) * std::pow(scn.height_m, -p.gamma_los) / ch.full_band_noise();
  out.edge_nlos_snr =
      p.p_tx_w * ch.intercept_linear(PathKind::NLoS) * std::pow(scn.radius_m, -p.gamma_nlos) / ch.full_band_noise();
  out.ratio = std::log2(out.overhead_los_snr) / std::log2(out.edge_nlos_snr);
  out.high_snr = out.overhead_los_snr > 10.0 && out.edge_nlos_snr > 10.0;
  return out;
}

std::vector<SweepRow> sweep(const AnalyticScenario& base, std::span<const double> taus,
                            std::span<const double> speeds) {
  std::vector<SweepRow> rows;
  rows.reserve(taus.size() * speeds.size());
  const double hover = hover_se_expected(base);
  const double bound = theorem1_bound(base).ratio;
  for (double v : speeds) {
    for (double tau : taus) {
      AnalyticScenario scn = base;
      scn.speed_mps = v;
      scn.tau_s = tau;
      const double mobile = mobile_se_expected(scn);
      rows.push_back({tau, v, base.height_m, base.radius_m, hover, mobile, mobile / hover, bound});
    }
  }
  return rows;
}

}  // namespace dronecell::analytic
