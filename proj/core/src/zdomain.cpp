#include "attsteer/zdomain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "attsteer/error.hpp"

namespace attsteer {

namespace {

using cplx = std::complex<double>;

constexpr double kCriticalBand = 1e-9;
constexpr double kImagTolerance = 1e-9;

void check_loop(double omega_n, double zeta) {
  if (!(omega_n > 0.0) || !std::isfinite(omega_n)) throw std::invalid_argument("omega_n must be positive");
  if (!(zeta >= 0.0) || !std::isfinite(zeta)) throw std::invalid_argument("zeta must be non-negative");
}

void check_period(double T) {
  if (!(T > 0.0) || !std::isfinite(T)) throw std::invalid_argument("sample period must be positive");
}

void check_offset(double m) {
  if (!(m >= 0.0 && m < 1.0)) throw std::invalid_argument("time shift m must lie in [0, 1)");
}

bool underdamped(double zeta) { return zeta < 1.0 - kCriticalBand; }
bool critical(double zeta) { return std::abs(zeta - 1.0) <= kCriticalBand; }

// Decay rates p, q with impulse response of Kp/(s^2 + Kd s + Kp) equal to
// pq/(q - p) (e^{-pt} - e^{-qt}).
std::pair<cplx, cplx> decay_rates(double omega_n, double zeta) {
  const PlantPoles poles = plant_poles(omega_n, zeta);
  return {-poles.b, -poles.a};
}

Polynomial denominator(double omega_n, double zeta, double T) {
  const double sigma = zeta * omega_n;
  if (underdamped(zeta)) {
    const double wd = omega_n * std::sqrt(1.0 - zeta * zeta);
    return {1.0, -2.0 * std::exp(-sigma * T) * std::cos(wd * T), std::exp(-2.0 * sigma * T)};
  }
  const auto [p, q] = decay_rates(omega_n, zeta);
  const double rp = std::exp(-p.real() * T);
  const double rq = std::exp(-q.real() * T);
  return {1.0, -(rp + rq), rp * rq};
}

void check_observable(const Polynomial& num, double omega_n, double zeta, double T) {
  const double scale = std::abs(omega_n * omega_n * T) + 1.0;
  const bool all_zero = std::all_of(num.begin(), num.end(), [scale](double c) { return std::abs(c) <= 1e-14 * scale; });
  if (all_zero) {
    throw NumericError(fmt::format(
        "degenerate sampling: omega_d T is a multiple of pi (omega_n={}, zeta={}, T={}); "
        "the oscillatory mode is invisible to the sampler",
        omega_n, zeta, T));
  }
}

}  // namespace

PlantPoles plant_poles(double omega_n, double zeta) {
  check_loop(omega_n, zeta);
  PlantPoles out;
  out.omega_n = omega_n;
  out.zeta = zeta;
  const double sigma = zeta * omega_n;
  if (underdamped(zeta)) {
    out.omega_d = omega_n * std::sqrt(1.0 - zeta * zeta);
    out.a = {-sigma, out.omega_d};
    out.b = {-sigma, -out.omega_d};
  } else {
    const double spread = omega_n * std::sqrt(std::max(0.0, zeta * zeta - 1.0));
    out.a = {-sigma + spread, 0.0};
    out.b = {-sigma - spread, 0.0};
  }
  return out;
}

void DiscreteTransferFunction::validate() const {
  const Polynomial d = poly_trim(den);
  if (d.empty() || den.empty() || den.front() == 0.0) {
    throw std::invalid_argument("denominator leading coefficient must be non-zero");
  }
  if (poly_trim(num).size() > den.size()) throw std::invalid_argument("transfer function must be proper");
  if (!(T > 0.0)) throw std::invalid_argument("sample period must be positive");
}

DiscreteTransferFunction zoh_rate_tf(double omega_n, double zeta, double T) {
  check_loop(omega_n, zeta);
  check_period(T);
  if (!underdamped(zeta)) return zoh_rate_tf_factored(omega_n, zeta, T);
  const double sigma = zeta * omega_n;
  const double wd = omega_n * std::sqrt(1.0 - zeta * zeta);
  const double c = omega_n / std::sqrt(1.0 - zeta * zeta) * std::exp(-sigma * T) * std::sin(wd * T);
  DiscreteTransferFunction tf{{c, -c}, denominator(omega_n, zeta, T), T, 1.0};
  check_observable(tf.num, omega_n, zeta, T);
  return tf;
}

DiscreteTransferFunction modified_rate_tf_factored(double omega_n, double zeta, double T, double m) {
  check_loop(omega_n, zeta);
  check_period(T);
  check_offset(m);
  DiscreteTransferFunction tf;
  tf.T = T;
  if (critical(zeta)) {
    // Repeated pole: p(t) = wn^2 t e^{-wn t}.
    const double r = std::exp(-omega_n * T);
    const double g = omega_n * omega_n * T * std::exp(-omega_n * m * T);
    tf.num = poly_multiply({g * m, g * r * (1.0 - m)}, {1.0, -1.0});
    tf.den = {1.0, -2.0 * r, r * r};
    return tf;
  }
  const auto [p, q] = decay_rates(omega_n, zeta);
  const cplx c = p * q / (q - p);
  const cplx lead = c * (std::exp(-p * m * T) - std::exp(-q * m * T));
  const cplx tail = c * (std::exp(-p * T) * std::exp(-q * m * T) - std::exp(-q * T) * std::exp(-p * m * T));
  tf.num = {lead.real(), tail.real() - lead.real(), -tail.real()};
  tf.den = denominator(omega_n, zeta, T);
  return tf;
}

DiscreteTransferFunction zoh_rate_tf_factored(double omega_n, double zeta, double T) {
  DiscreteTransferFunction tf = modified_rate_tf_factored(omega_n, zeta, T, 0.0);
  // At m = 0 the leading coefficient vanishes identically.
  tf.num.erase(tf.num.begin());
  check_observable(tf.num, omega_n, zeta, T);
  return tf;
}

DiscreteTransferFunction modified_rate_tf(double omega_n, double zeta, double T, double m) {
  check_loop(omega_n, zeta);
  check_period(T);
  check_offset(m);
  if (!underdamped(zeta)) return modified_rate_tf_factored(omega_n, zeta, T, m);
  const double sigma = zeta * omega_n;
  const double wd = omega_n * std::sqrt(1.0 - zeta * zeta);
  const double g = omega_n / std::sqrt(1.0 - zeta * zeta);
  const double a = g * std::exp(-sigma * T * m) * std::sin(wd * T * m);
  const double b = g * std::exp(-sigma * T * (1.0 + m)) * std::sin(wd * T * (1.0 - m));
  DiscreteTransferFunction tf{{a, b - a, -b}, denominator(omega_n, zeta, T), T, 1.0};
  check_observable(tf.num, omega_n, zeta, T);
  return tf;
}

std::vector<double> simulate_tf(const DiscreteTransferFunction& tf, std::span<const double> input) {
  tf.validate();
  const std::size_t n = tf.den.size();
  const Polynomial trimmed = poly_trim(tf.num);
  Polynomial b(n, 0.0);
  std::copy(trimmed.begin(), trimmed.end(), b.begin() + static_cast<std::ptrdiff_t>(n - trimmed.size()));
  const double d0 = tf.den.front();

  std::vector<double> y(input.size(), 0.0);
  for (std::size_t k = 0; k < input.size(); ++k) {
    if (!std::isfinite(input[k])) throw std::invalid_argument("input sequence must be finite");
    double acc = 0.0;
    for (std::size_t i = 0; i < n && i <= k; ++i) acc += b[i] * input[k - i];
    for (std::size_t i = 1; i < n && i <= k; ++i) acc -= tf.den[i] * y[k - i];
    y[k] = acc / d0;
  }
  for (double& v : y) v *= tf.gain;
  return y;
}

double ramp_final_value(const DiscreteTransferFunction& tf) {
  tf.validate();
  const Polynomial num = poly_trim(tf.num);
  if (num.empty()) throw NumericError("zero numerator has no final value");
  double rem = 0.0;
  const Polynomial reduced = poly_deflate(num, 1.0, &rem);
  double scale = 0.0;
  for (double c : num) scale = std::max(scale, std::abs(c));
  if (std::abs(rem) > 1e-12 * scale) throw NumericError("numerator lacks the hold zero at z = 1; ramp response diverges");
  const double den1 = poly_eval(tf.den, 1.0);
  if (den1 == 0.0) throw NumericError("denominator vanishes at z = 1");
  return tf.T * poly_eval(reduced, 1.0) / den1;
}

double normalizing_gain(const DiscreteTransferFunction& tf) {
  const double fv = ramp_final_value(tf);
  if (fv == 0.0 || !std::isfinite(fv)) throw NumericError("ramp final value is zero; no normalizing gain exists");
  return 1.0 / fv;
}

EquivalentPole equivalent_pole_params(std::complex<double> z_pole, double T) {
  check_period(T);
  if (z_pole == std::complex<double>(0.0, 0.0)) throw std::invalid_argument("pole at the origin has no s-plane image");
  const std::complex<double> s = std::log(z_pole);
  return {std::abs(s) / T, -std::cos(std::arg(s))};
}

double samples_per_oscillation(double omega_n, double zeta, double T) {
  if (!(zeta < 1.0)) throw std::invalid_argument("samples per oscillation needs zeta < 1");
  check_period(T);
  if (!(omega_n > 0.0)) throw std::invalid_argument("omega_n must be positive");
  return 2.0 * std::numbers::pi / (omega_n * T * std::sqrt(1.0 - zeta * zeta));
}

namespace {

// steady_state_ripple with the m = 0 normalization hoisted out.
class RippleCurve {
 public:
  RippleCurve(double omega_n, double zeta, double T, double omega_max)
      : omega_n_(omega_n), zeta_(zeta), T_(T),
        scale_(omega_max * normalizing_gain(zoh_rate_tf(omega_n, zeta, T))) {}

  double operator()(double m) const { return scale_ * ramp_final_value(modified_rate_tf(omega_n_, zeta_, T_, m)); }

 private:
  double omega_n_, zeta_, T_, scale_;
};

RipplePeak grid_peak(const RippleCurve& curve, double dm) {
  RipplePeak best{0.0, curve(0.0), false};
  const auto steps = static_cast<long>(std::ceil(1.0 / dm));
  for (long i = 1; i < steps; ++i) {
    const double m = static_cast<double>(i) * dm;
    if (m >= 1.0) break;
    const double v = curve(m);
    if (v > best.omega_peak) best = {m, v, false};
  }
  return best;
}

}  // namespace

double steady_state_ripple(double omega_n, double zeta, double T, double m, double omega_max) {
  check_offset(m);
  return RippleCurve(omega_n, zeta, T, omega_max)(m);
}

RipplePeak ripple_peak_grid(double omega_n, double zeta, double T, double omega_max, double dm) {
  if (!(dm > 0.0 && dm < 1.0)) throw std::invalid_argument("grid spacing must lie in (0, 1)");
  return grid_peak(RippleCurve(omega_n, zeta, T, omega_max), dm);
}

RipplePeak ripple_peak(double omega_n, double zeta, double T, double omega_max) {
  const RippleCurve curve(omega_n, zeta, T, omega_max);

  std::vector<double> candidates;
  if (!critical(zeta)) {
    const auto [p, q] = decay_rates(omega_n, zeta);
    const cplx m_c = (std::log(q * (1.0 - std::exp(-p * T))) - std::log(p * (1.0 - std::exp(-q * T)))) / ((q - p) * T);
    if (std::isfinite(m_c.real()) && std::abs(m_c.imag()) < kImagTolerance) {
      if (underdamped(zeta)) {
        // The stationarity condition repeats every pi / (wd T) in m.
        const double period = std::numbers::pi / (plant_poles(omega_n, zeta).omega_d * T);
        for (double m = m_c.real() - std::floor(m_c.real() / period) * period; m < 1.0; m += period) {
          if (m >= 0.0) candidates.push_back(m);
        }
      } else if (m_c.real() >= 0.0 && m_c.real() < 1.0) {
        candidates.push_back(m_c.real());
      }
    }
  }

  RipplePeak best{0.0, -std::numeric_limits<double>::infinity(), true};
  for (double m : candidates) {
    const double v = curve(m);
    if (v > best.omega_peak) best = {m, v, true};
  }
  // A stationary point can also be a minimum; confirm against a coarse grid.
  const RipplePeak coarse = grid_peak(curve, 1e-3);
  if (candidates.empty() || coarse.omega_peak > best.omega_peak + 1e-9 * std::abs(best.omega_peak)) {
    return grid_peak(curve, 1e-5);
  }
  return best;
}

std::vector<GainPoint> gain_curve(double omega_n, double zeta, double T, int samples) {
  if (samples < 1) throw std::invalid_argument("gain curve needs at least one sample");
  std::vector<GainPoint> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double m = static_cast<double>(i) / samples;
    out.push_back({m, 20.0 * std::log10(normalizing_gain(modified_rate_tf(omega_n, zeta, T, m)))});
  }
  return out;
}

PoleZero pole_zero(const DiscreteTransferFunction& tf) {
  if (poly_trim(tf.num).empty() || poly_trim(tf.den).empty()) {
    throw std::invalid_argument("pole-zero analysis needs non-zero polynomials");
  }
  return {poly_roots(tf.num), poly_roots(tf.den)};
}

std::vector<double> sampled_ramp(double omega_max, double T, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = omega_max * T * static_cast<double>(k);
  return out;
}

std::vector<TimedValue> intersample_response(double omega_n, double zeta, double T, double omega_max,
                                             std::size_t samples, std::span<const double> offsets) {
  const double k0 = normalizing_gain(zoh_rate_tf(omega_n, zeta, T));
  const std::vector<double> ramp = sampled_ramp(omega_max, T, samples);
  std::vector<TimedValue> out;
  out.reserve(samples * offsets.size());
  for (double m : offsets) {
    DiscreteTransferFunction tf = modified_rate_tf(omega_n, zeta, T, m);
    tf.gain = k0;
    const std::vector<double> y = simulate_tf(tf, ramp);
    for (std::size_t k = 0; k < y.size(); ++k) out.push_back({(static_cast<double>(k) + m) * T, y[k]});
  }
  std::stable_sort(out.begin(), out.end(), [](const TimedValue& a, const TimedValue& b) { return a.t < b.t; });
  return out;
}

RippleReport analyze_ripple(double omega_n, double zeta, double T, double omega_max, int gain_samples) {
  RippleReport report;
  report.T = T;
  const RipplePeak peak = ripple_peak(omega_n, zeta, T, omega_max);
  report.m_star = peak.m_star;
  report.omega_peak = peak.omega_peak;
  report.closed_form = peak.closed_form;
  report.gain = gain_curve(omega_n, zeta, T, gain_samples);
  report.pole_zero = pole_zero(modified_rate_tf(omega_n, zeta, T, peak.m_star));
  const auto poles = report.pole_zero.poles;
  if (!poles.empty() && poles.front() != std::complex<double>(0.0, 0.0)) {
    const EquivalentPole eq = equivalent_pole_params(poles.front(), T);
    if (eq.zeta < 1.0) report.samples_per_oscillation = samples_per_oscillation(eq.omega_n, eq.zeta, T);
  }
  return report;
}

}  // namespace attsteer
