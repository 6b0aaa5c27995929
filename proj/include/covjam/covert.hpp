#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "covjam/model.hpp"

namespace covjam {

/// Monte Carlo estimate of min over thresholds of P_FA + P_MD for Willie's
/// energy detector on one fixed channel realization.
struct DetectionEstimate {
  double error_sum = 1.0;
  double std_error = 0.0;
  double threshold = 0.0;  // empirical minimizing threshold
  double p_fa = 1.0;       // at the minimizing threshold
  double p_md = 0.0;
  long n_slots = 0;
  int n = 0;
};

struct PsiSample {
  double value;
  int d;
};

NoiseVariancePair willie_variances(const ChannelRealization& ch, const JammerStrategy& s,
                                   double p_j, double p_a, const SystemParams& params);

/// Largest P_a keeping the system covert when Willie's CSI is known:
/// (epsilon P_max / 4|h_aw|^2) h_jw^dagger V X V^dagger h_jw.
double alice_power_full_csi(const ChannelRealization& ch, const JammerStrategy& s,
                            const SystemParams& params);

/// Covert power without Willie's CSI for an equal-power rank-d jammer:
/// epsilon^2 P_max d / (72 e ln(6/epsilon)).
double alice_power_no_csi(int d, const SystemParams& params);

/// Single-antenna jammer without Willie's CSI:
/// ln(6/(6-epsilon)) / ln(6/epsilon) * epsilon/12 * P_max.
double alice_power_no_csi_n1(const SystemParams& params);

/// One draw of Willie's average received power over a slot,
/// Gamma(shape n, scale sigma/n).
double simulate_slot_statistic(std::uint64_t seed, int n, double sigma);
double draw_slot_statistic(Rng& rng, int n, double sigma);

/// min_tau (P_FA(tau) + P_MD(tau)) for the detector "declare H1 iff
/// statistic >= tau", evaluated exactly over the empirical samples.
DetectionEstimate min_error_sum(std::span<const double> h0, std::span<const double> h1);

/// Simulates n_slots slots under each hypothesis.  Every slot redraws
/// P_j ~ Uniform[0, P_max] and one Gamma statistic with the matching variance.
DetectionEstimate estimate_min_error_sum(std::uint64_t seed, const ChannelRealization& ch,
                                         const JammerStrategy& s, double p_a,
                                         const SystemParams& params, long n_slots);

/// psi = d h_jw^dagger V X V^dagger h_jw / |h_aw|^2 for fresh h_jw, h_aw and
/// the equal-power strategy over the first d canonical directions.
PsiSample sample_psi(std::uint64_t seed, int d, int N);

/// Same, for an arbitrary equal-power strategy.
PsiSample sample_psi(std::uint64_t seed, const JammerStrategy& s);

/// Beta-prime(d, 1) CDF, (x / (1 + x))^d.
double psi_cdf(double x, int d);

/// One-sample Kolmogorov-Smirnov statistic against psi_cdf(., d).
double ks_distance(std::span<const double> samples, int d);

/// Asymptotic 1% critical value of the one-sample KS statistic.
double ks_critical_1pct(long n_samples);

}  // namespace covjam
