#pragma once

#include <complex>
#include <span>
#include <vector>

#include "attsteer/polynomial.hpp"

namespace attsteer {

// Sampled-data analysis of one decoupled control channel: the continuous
// loop Kp / (s^2 + Kd s + Kp) from commanded angle to angle, driven through
// a zero-order hold of period T and observed as body rate. omega_n and zeta
// are in rad/s and dimensionless; rates passed as `omega_max` come back in
// the same unit (the tables use deg/s).

/// Continuous poles of the loop. For zeta < 1, a = -zeta wn + j wd and
/// b = conj(a); for zeta >= 1 both are real (a the slower one) and wd = 0.
struct PlantPoles {
  std::complex<double> a;
  std::complex<double> b;
  double omega_n = 0.0;
  double zeta = 0.0;
  double omega_d = 0.0;
};

/// Throws std::invalid_argument unless omega_n > 0 and zeta >= 0.
PlantPoles plant_poles(double omega_n, double zeta);

/// Ratio of polynomials in z with sample period T and a scalar gain.
struct DiscreteTransferFunction {
  Polynomial num;
  Polynomial den;
  double T = 1.0;
  double gain = 1.0;

  /// Throws std::invalid_argument for a zero leading denominator
  /// coefficient or an improper ratio.
  void validate() const;
};

/// Zero-order-hold equivalent from held angle command to sampled rate:
///   (wn / sqrt(1 - zeta^2)) e^{-zeta wn T} sin(wd T) (z - 1)
///   ---------------------------------------------------------
///      z^2 - 2 e^{-zeta wn T} cos(wd T) z + e^{-2 zeta wn T}
/// Overdamped and critically damped loops use the factored route. Throws
/// NumericError when wd T is a multiple of pi: the sampler cannot see the
/// oscillatory mode and the numerator vanishes.
DiscreteTransferFunction zoh_rate_tf(double omega_n, double zeta, double T);

/// The same transfer function assembled from the factored plant
/// ab/((s+a)(s+b)) with decay rates a, b (complex arithmetic, real result).
DiscreteTransferFunction zoh_rate_tf_factored(double omega_n, double zeta, double T);

/// Modified z-transform: sample k of the output is the rate at (k + m) T.
///   (wn / sqrt(1 - zeta^2)) (A z + B)(z - 1) / den(z)
///   A = e^{-zeta wn T m} sin(wd T m),  B = e^{-zeta wn T (1+m)} sin(wd T (1-m))
/// with the same denominator as zoh_rate_tf. The numerator always has three
/// coefficients (the leading one is zero at m = 0). Throws
/// std::invalid_argument unless 0 <= m < 1.
DiscreteTransferFunction modified_rate_tf(double omega_n, double zeta, double T, double m);
DiscreteTransferFunction modified_rate_tf_factored(double omega_n, double zeta, double T, double m);

/// Zero-state response of gain * num / den to `input`.
std::vector<double> simulate_tf(const DiscreteTransferFunction& tf, std::span<const double> input);

/// Final value of tf driven by the unit-slope sampled ramp T z / (z - 1)^2,
/// i.e. T * [num / (z - 1)](1) / den(1). Ignores tf.gain. Requires the
/// numerator to vanish at z = 1 (ZOH zero).
double ramp_final_value(const DiscreteTransferFunction& tf);

/// K such that K * ramp_final_value(tf) == 1. Throws NumericError when the
/// final value is zero or not finite.
double normalizing_gain(const DiscreteTransferFunction& tf);

/// Continuous-equivalent natural frequency |ln z| / T and damping
/// -cos(arg ln z) of a discrete pole (principal logarithm).
struct EquivalentPole {
  double omega_n;
  double zeta;
};
EquivalentPole equivalent_pole_params(std::complex<double> z_pole, double T);

/// 2 pi / (wn T sqrt(1 - zeta^2)). Throws std::invalid_argument for zeta >= 1.
double samples_per_oscillation(double omega_n, double zeta, double T);

/// Steady-state rate at fraction m of the hold interval for a ramp of slope
/// omega_max, scaled by the single normalizing gain of the m = 0 channel so
/// that held samples settle exactly at omega_max.
double steady_state_ripple(double omega_n, double zeta, double T, double m, double omega_max);

struct RipplePeak {
  double m_star = 0.0;
  double omega_peak = 0.0;
  bool closed_form = false;  // false when the grid fallback produced m_star
};

/// Peak of steady_state_ripple over m in [0, 1). m* comes from the stationary
/// point of the final value in closed form,
///   m* = [ln(b (1 - e^{-aT})) - ln(a (1 - e^{-bT}))] / ((b - a) T),
/// with a, b the decay rates of the plant, folded into [0, 1) by its period
/// pi / (wd T). Falls back to a dense grid when the candidate is not real or
/// not in range.
RipplePeak ripple_peak(double omega_n, double zeta, double T, double omega_max);

/// Grid maximization of steady_state_ripple with spacing `dm`.
RipplePeak ripple_peak_grid(double omega_n, double zeta, double T, double omega_max, double dm = 1e-5);

struct GainPoint {
  double m;
  double gain_db;  // 20 log10 K(m)
};

/// Normalizing gain of the modified transfer function at `samples` evenly
/// spaced m in [0, 1).
std::vector<GainPoint> gain_curve(double omega_n, double zeta, double T, int samples);

struct PoleZero {
  std::vector<std::complex<double>> zeros;
  std::vector<std::complex<double>> poles;
};
PoleZero pole_zero(const DiscreteTransferFunction& tf);

/// Samples omega_max * T * k, k = 0..count-1, of the ramp omega_max * t.
std::vector<double> sampled_ramp(double omega_max, double T, std::size_t count);

struct TimedValue {
  double t;
  double value;
};

/// Rate response to a held ramp reconstructed from a bank of time-shifted
/// samplers: for every m in `offsets`, sample k of the normalized modified
/// transfer function is placed at (k + m) T. Output sorted by time.
std::vector<TimedValue> intersample_response(double omega_n, double zeta, double T, double omega_max,
                                             std::size_t samples, std::span<const double> offsets);

struct RippleReport {
  double T = 0.0;
  double m_star = 0.0;
  double omega_peak = 0.0;  // deg/s when omega_max is in deg/s
  bool closed_form = false;
  double samples_per_oscillation = 0.0;
  std::vector<GainPoint> gain;
  PoleZero pole_zero;  // of the modified transfer function at m*
};

RippleReport analyze_ripple(double omega_n, double zeta, double T, double omega_max, int gain_samples = 100);

}  // namespace attsteer
