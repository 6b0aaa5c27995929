#include "covjam/covert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "covjam/errors.hpp"

namespace covjam {

NoiseVariancePair willie_variances(const ChannelRealization& ch, const JammerStrategy& s,
                                   double p_j, double p_a, const SystemParams& params) {
  if (!(p_j >= 0.0) || !(p_a >= 0.0)) {
    throw std::invalid_argument("willie_variances: powers must be nonnegative");
  }
  const double an = p_j * quadform(ch.h_jw, s.shape());
  const double sigma0 = params.sigma_w2 + an;
  return {sigma0, sigma0 + p_a * std::norm(ch.h_aw)};
}

double alice_power_full_csi(const ChannelRealization& ch, const JammerStrategy& s,
                            const SystemParams& params) {
  const double gain = std::norm(ch.h_aw);
  if (!(gain > 0.0)) throw DegenerateError("alice_power_full_csi: h_aw is zero");
  return params.epsilon * params.p_max / (4.0 * gain) * quadform(ch.h_jw, s.shape());
}

double alice_power_no_csi(int d, const SystemParams& params) {
  params.validate();
  if (d < 1 || d > params.N) {
    throw std::invalid_argument("alice_power_no_csi: rank must lie in [1, N]");
  }
  const double eps = params.epsilon;
  return eps * eps * params.p_max / (72.0 * std::numbers::e * std::log(6.0 / eps)) * d;
}

double alice_power_no_csi_n1(const SystemParams& params) {
  params.validate();
  const double eps = params.epsilon;
  return std::log(6.0 / (6.0 - eps)) / std::log(6.0 / eps) * eps / 12.0 * params.p_max;
}

double draw_slot_statistic(Rng& rng, int n, double sigma) {
  std::gamma_distribution<double> gamma(static_cast<double>(n), sigma / n);
  return gamma(rng);
}

double simulate_slot_statistic(std::uint64_t seed, int n, double sigma) {
  if (n < 1 || !(sigma > 0.0)) {
    throw std::invalid_argument("simulate_slot_statistic: need n >= 1 and sigma > 0");
  }
  Rng rng = make_rng(seed);
  return draw_slot_statistic(rng, n, sigma);
}

DetectionEstimate min_error_sum(std::span<const double> h0, std::span<const double> h1) {
  if (h0.empty() || h1.empty()) throw std::invalid_argument("min_error_sum: empty sample");
  std::vector<double> a(h0.begin(), h0.end());
  std::vector<double> b(h1.begin(), h1.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double n0 = static_cast<double>(a.size());
  const double n1 = static_cast<double>(b.size());

  // tau below every sample: always declare H1, P_FA = 1, P_MD = 0.
  std::size_t i = 0, j = 0;
  std::size_t best_i = 0, best_j = 0;
  double best = 1.0;
  double best_tau = std::min(a.front(), b.front());
  while (i < a.size() || j < b.size()) {
    double v;
    if (j >= b.size() || (i < a.size() && a[i] <= b[j])) {
      v = a[i];
    } else {
      v = b[j];
    }
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    // tau just above v: H0 samples <= v are correct rejections, H1 samples <= v are misses.
    const double err = (n0 - i) / n0 + j / n1;
    if (err < best) {
      best = err;
      best_i = i;
      best_j = j;
      double next = v;
      if (i < a.size()) next = a[i];
      if (j < b.size()) next = (i < a.size()) ? std::min(next, b[j]) : b[j];
      best_tau = 0.5 * (v + next);
    }
  }

  DetectionEstimate est;
  est.p_fa = (n0 - best_i) / n0;
  est.p_md = best_j / n1;
  est.error_sum = std::clamp(best, 0.0, 1.0);
  est.threshold = best_tau;
  est.std_error = std::sqrt(est.p_fa * (1.0 - est.p_fa) / n0 + est.p_md * (1.0 - est.p_md) / n1);
  est.n_slots = static_cast<long>(std::min(a.size(), b.size()));
  return est;
}

DetectionEstimate estimate_min_error_sum(std::uint64_t seed, const ChannelRealization& ch,
                                         const JammerStrategy& s, double p_a,
                                         const SystemParams& params, long n_slots) {
  params.validate();
  if (!(p_a >= 0.0)) throw std::invalid_argument("estimate_min_error_sum: negative p_a");
  if (n_slots < 1000) throw std::invalid_argument("estimate_min_error_sum: need n_slots >= 1000");

  const double an_gain = quadform(ch.h_jw, s.shape());
  const double alice = p_a * std::norm(ch.h_aw);
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> jammer_power(0.0, params.p_max);

  std::vector<double> h0(static_cast<std::size_t>(n_slots));
  std::vector<double> h1(static_cast<std::size_t>(n_slots));
  for (auto& x : h0) {
    const double sigma0 = params.sigma_w2 + jammer_power(rng) * an_gain;
    x = draw_slot_statistic(rng, params.n, sigma0);
  }
  for (auto& x : h1) {
    const double sigma1 = params.sigma_w2 + jammer_power(rng) * an_gain + alice;
    x = draw_slot_statistic(rng, params.n, sigma1);
  }
  DetectionEstimate est = min_error_sum(h0, h1);
  est.n = params.n;
  return est;
}

PsiSample sample_psi(std::uint64_t seed, const JammerStrategy& s) {
  if (!s.is_equal_power()) {
    throw std::invalid_argument("sample_psi: strategy must split power equally");
  }
  Rng rng = make_rng(seed);
  const Complex h_aw = complex_gaussian(rng);
  const CVector h_jw = complex_gaussian_vector(rng, s.N());
  const double q = quadform(h_jw, s.shape());
  return {s.d() * q / std::norm(h_aw), s.d()};
}

PsiSample sample_psi(std::uint64_t seed, int d, int N) {
  if (d < 1 || d > N) throw std::invalid_argument("sample_psi: need 1 <= d <= N");
  return sample_psi(seed, equal_power(CMatrix::Identity(N, d)));
}

double psi_cdf(double x, int d) {
  if (!(x >= 0.0)) throw std::invalid_argument("psi_cdf: x must be nonnegative");
  if (std::isinf(x)) return 1.0;
  return std::pow(x / (1.0 + x), d);
}

double ks_distance(std::span<const double> samples, int d) {
  if (samples.empty()) throw std::invalid_argument("ks_distance: empty sample");
  std::vector<double> x(samples.begin(), samples.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double dmax = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = psi_cdf(std::max(x[i], 0.0), d);
    dmax = std::max({dmax, (i + 1) / n - f, f - i / n});
  }
  return dmax;
}

double ks_critical_1pct(long n_samples) {
  if (n_samples < 1) throw std::invalid_argument("ks_critical_1pct: need n >= 1");
  return 1.63 / std::sqrt(static_cast<double>(n_samples));
}

}  // namespace covjam
