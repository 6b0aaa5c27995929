#include "covjam/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "covjam/covert.hpp"
#include "covjam/errors.hpp"

namespace covjam {

namespace {

std::string join_reals(std::span<const double> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ';';
    out += format_real(xs[i]);
  }
  return out;
}

template <class T>
std::string join_list(const std::vector<T>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ";" : "") << xs[i];
  return out.str();
}

void add_common_meta(RunReport& r, const char* command, std::uint64_t seed) {
  r.add_meta("tool", "covjam");
  r.add_meta("version", kVersion);
  r.add_meta("command", command);
  r.add_meta("seed", std::to_string(seed));
}

double percentile(std::vector<double> xs, double q) {
  std::sort(xs.begin(), xs.end());
  const double pos = q * static_cast<double>(xs.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, xs.size() - 1);
  return xs[lo] + (pos - static_cast<double>(lo)) * (xs[hi] - xs[lo]);
}

// Stream tags keep the channel, Monte Carlo and restart substreams apart.
constexpr std::uint64_t kChannelStream = 0x43484e4cULL;
constexpr std::uint64_t kRestartStream = 0x52535452ULL;
constexpr std::uint64_t kBootstrapStream = 0x424f4f54ULL;
constexpr std::uint64_t kSlotStream = 0x534c4f54ULL;
constexpr std::uint64_t kPsiStream = 0x50534931ULL;

std::uint64_t channel_seed(std::uint64_t master, std::uint64_t k) {
  return derive_seed(derive_seed(master, kChannelStream), k);
}

}  // namespace

void SweepConfig::validate() const {
  if (sigma_grid.empty()) throw std::invalid_argument("sigma grid is empty");
  for (double s : sigma_grid) {
    if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("sigma values must be > 0");
  }
  if (n_channel_draws < 1) throw std::invalid_argument("draws must be positive");
  if (N < 1 || M < 1) throw std::invalid_argument("antenna counts must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0,1)");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (bootstrap_resamples < 0) throw std::invalid_argument("bootstrap resamples must be >= 0");
}

std::vector<double> make_grid(double start, double step, double stop) {
  if (!(step > 0.0) || !(stop >= start)) {
    throw std::invalid_argument("sigma grid: need step > 0 and stop >= start");
  }
  const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  // Snap to 12 significant digits so 0.1:0.1:6 yields 0.3 rather than 0.30000000000000004.
  char buf[32];
  for (long i = 0; i < count; ++i) {
    std::snprintf(buf, sizeof buf, "%.12g", start + static_cast<double>(i) * step);
    grid.push_back(std::strtod(buf, nullptr));
  }
  return grid;
}

std::vector<double> parse_sigma_grid(const std::string& spec) {
  double parts[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? spec.find(':', pos) : spec.size();
    if (end == std::string::npos) {
      throw std::invalid_argument("sigma grid must look like start:step:stop");
    }
    try {
      std::size_t used = 0;
      const std::string token = spec.substr(pos, end - pos);
      parts[i] = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("sigma grid: cannot parse '" + spec + "'");
    }
    pos = end + 1;
  }
  return make_grid(parts[0], parts[1], parts[2]);
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

MeanStderr mean_stderr(std::span<const double> xs) {
  if (xs.empty()) return {};
  const double n = static_cast<double>(xs.size());
  const double mean = pairwise_sum(xs) / n;
  if (xs.size() < 2) return {mean, 0.0};
  std::vector<double> sq(xs.size());
  std::transform(xs.begin(), xs.end(), sq.begin(), [mean](double x) { return (x - mean) * (x - mean); });
  const double var = pairwise_sum(sq) / (n - 1.0);
  return {mean, std::sqrt(var / n)};
}

std::optional<double> interpolate_crossover(std::span<const double> grid,
                                            std::span<const double> diff) {
  for (std::size_t i = 1; i < grid.size() && i < diff.size(); ++i) {
    if (diff[i - 1] <= 0.0 && diff[i] > 0.0) {
      const double t = -diff[i - 1] / (diff[i] - diff[i - 1]);
      return grid[i - 1] + t * (grid[i] - grid[i - 1]);
    }
  }
  return std::nullopt;
}

Fig3Result run_fig3(const SweepConfig& cfg) {
  cfg.validate();
  if (cfg.M != 1) throw std::invalid_argument("fig3 requires M = 1");
  if (cfg.N < 2) throw std::invalid_argument("fig3 requires N >= 2");

  SystemParams params;
  params.N = cfg.N;
  params.M = 1;
  params.epsilon = cfg.epsilon;
  const std::size_t n_sigma = cfg.sigma_grid.size();
  const auto draws = static_cast<std::size_t>(cfg.n_channel_draws);

  // [draw][sigma]
  std::vector<std::vector<double>> null_v(draws), full_v(draws);
  parallel_for(draws, cfg.threads, [&](std::size_t k) {
    const ChannelRealization ch = sample_channel(channel_seed(cfg.master_seed, k), params);
    const NoCsiCandidates cand = no_csi_candidates_m1(ch);
    null_v[k].resize(n_sigma);
    full_v[k].resize(n_sigma);
    for (std::size_t s = 0; s < n_sigma; ++s) {
      null_v[k][s] = objective_no_csi_m1(ch, cand.null_space, cfg.sigma_grid[s]);
      full_v[k][s] = objective_no_csi_m1(ch, cand.full_space, cfg.sigma_grid[s]);
    }
  });

  Fig3Result out;
  RunReport& r = out.report;
  r.columns = {"sigma", "null_space_mean", "null_space_stderr", "full_space_mean",
               "full_space_stderr", "n_draws"};
  std::vector<double> diff(n_sigma);
  std::vector<double> col(draws);
  for (std::size_t s = 0; s < n_sigma; ++s) {
    for (std::size_t k = 0; k < draws; ++k) col[k] = null_v[k][s];
    const MeanStderr nm = mean_stderr(col);
    for (std::size_t k = 0; k < draws; ++k) col[k] = full_v[k][s];
    const MeanStderr fm = mean_stderr(col);
    out.null_mean.push_back(nm.mean);
    out.full_mean.push_back(fm.mean);
    diff[s] = fm.mean - nm.mean;
    r.rows.push_back({cfg.sigma_grid[s], nm.mean, nm.std_error, fm.mean, fm.std_error,
                      static_cast<long long>(draws)});
  }
  for (std::size_t s = 1; s < n_sigma; ++s) {
    if ((diff[s - 1] > 0.0) != (diff[s] > 0.0)) ++out.sign_changes;
  }

  if (auto x = interpolate_crossover(cfg.sigma_grid, diff)) {
    std::vector<double> boots;
    Rng rng = make_rng(derive_seed(cfg.master_seed, kBootstrapStream));
    std::uniform_int_distribution<std::size_t> pick(0, draws - 1);
    std::vector<double> acc(n_sigma);
    for (int b = 0; b < cfg.bootstrap_resamples; ++b) {
      std::fill(acc.begin(), acc.end(), 0.0);
      for (std::size_t k = 0; k < draws; ++k) {
        const std::size_t j = pick(rng);
        for (std::size_t s = 0; s < n_sigma; ++s) acc[s] += full_v[j][s] - null_v[j][s];
      }
      if (auto bx = interpolate_crossover(cfg.sigma_grid, acc)) boots.push_back(*bx);
    }
    Crossover c{*x, *x, *x};
    if (!boots.empty()) {
      c.ci_lo = percentile(boots, 0.025);
      c.ci_hi = percentile(boots, 0.975);
    }
    out.crossover = c;
  }

  add_common_meta(r, "fig3", cfg.master_seed);
  r.add_meta("N", std::to_string(cfg.N));
  r.add_meta("M", "1");
  r.add_meta("draws", std::to_string(cfg.n_channel_draws));
  r.add_meta("sigma_grid", join_reals(cfg.sigma_grid));
  r.add_meta("bootstrap_resamples", std::to_string(cfg.bootstrap_resamples));
  r.add_meta("sign_changes", std::to_string(out.sign_changes));
  for (std::size_t i = 0; i < n_sigma; ++i) {
    if (diff[i] > 0.0) {
      r.add_meta("crossover_grid", format_real(cfg.sigma_grid[i]));
      break;
    }
  }
  if (out.crossover) {
    r.add_meta("crossover", format_real(out.crossover->sigma));
    r.add_meta("crossover_ci_lo", format_real(out.crossover->ci_lo));
    r.add_meta("crossover_ci_hi", format_real(out.crossover->ci_hi));
  } else {
    r.add_meta("crossover", "none");
  }
  return out;
}

std::vector<std::string> applicable_fig4_schemes(int N, int M) {
  std::vector<std::string> s = {scheme::kGlobal, scheme::kCMrc, scheme::kVWillie};
  if (bob_cancels_applicable(N, M)) s.emplace_back(scheme::kBobCancels);
  if (jammer_cancels_applicable(N, M)) s.emplace_back(scheme::kJammerCancels);
  return s;
}

Fig4Result run_fig4(const SweepConfig& cfg) {
  cfg.validate();
  const std::vector<std::string> available = applicable_fig4_schemes(cfg.N, cfg.M);
  std::vector<std::string> schemes = cfg.schemes.empty() ? available : cfg.schemes;
  for (const auto& name : schemes) {
    if (std::find(available.begin(), available.end(), name) == available.end()) {
      throw NotApplicableError("scheme '" + name + "' is not applicable for N=" +
                               std::to_string(cfg.N) + ", M=" + std::to_string(cfg.M));
    }
  }
  std::sort(schemes.begin(), schemes.end());
  schemes.erase(std::unique(schemes.begin(), schemes.end()), schemes.end());

  SystemParams params;
  params.N = cfg.N;
  params.M = cfg.M;
  params.epsilon = cfg.epsilon;
  const std::size_t n_sigma = cfg.sigma_grid.size();
  const auto draws = static_cast<std::size_t>(cfg.n_channel_draws);

  Fig4Result out;
  for (const auto& name : schemes) {
    out.values[name].assign(n_sigma, std::vector<double>(draws, 0.0));
  }
  auto wants = [&](const char* name) { return out.values.count(name) > 0; };

  parallel_for(draws, cfg.threads, [&](std::size_t k) {
    const ChannelRealization ch = sample_channel(channel_seed(cfg.master_seed, k), params);
    for (std::size_t s = 0; s < n_sigma; ++s) {
      const double sigma = cfg.sigma_grid[s];
      if (wants(scheme::kGlobal)) {
        GlobalOptOptions opt = cfg.global;
        opt.record_trace = false;
        opt.seed = derive_seed(derive_seed(cfg.master_seed, kRestartStream), k * n_sigma + s);
        out.values[scheme::kGlobal][s][k] = global_opt_alternating(ch, sigma, opt).evaluation.value;
      }
      if (wants(scheme::kCMrc)) out.values[scheme::kCMrc][s][k] = scheme_c_mrc(ch, sigma).value;
      if (wants(scheme::kVWillie)) {
        out.values[scheme::kVWillie][s][k] = scheme_v_willie(ch, sigma).value;
      }
      if (wants(scheme::kBobCancels)) {
        out.values[scheme::kBobCancels][s][k] = scheme_bob_cancels(ch, sigma).value;
      }
      if (wants(scheme::kJammerCancels)) {
        out.values[scheme::kJammerCancels][s][k] = scheme_jammer_cancels(ch, sigma).value;
      }
    }
  });

  RunReport& r = out.report;
  r.columns = {"sigma", "scheme", "mean", "stderr", "n_draws", "N", "M"};
  int violations = 0;
  for (std::size_t s = 0; s < n_sigma; ++s) {
    std::optional<MeanStderr> global;
    if (wants(scheme::kGlobal)) global = mean_stderr(out.values[scheme::kGlobal][s]);
    for (const auto& name : schemes) {  // sorted, so rows are ordered by (sigma, scheme)
      const MeanStderr m = mean_stderr(out.values[name][s]);
      if (global && m.mean > global->mean + 2.0 * m.std_error) ++violations;
      r.rows.push_back({cfg.sigma_grid[s], name, m.mean, m.std_error,
                        static_cast<long long>(draws), static_cast<long long>(cfg.N),
                        static_cast<long long>(cfg.M)});
    }
  }

  add_common_meta(r, "fig4", cfg.master_seed);
  r.add_meta("N", std::to_string(cfg.N));
  r.add_meta("M", std::to_string(cfg.M));
  r.add_meta("draws", std::to_string(cfg.n_channel_draws));
  r.add_meta("sigma_grid", join_reals(cfg.sigma_grid));
  r.add_meta("schemes", join_list(schemes));
  r.add_meta("global_restarts", std::to_string(cfg.global.restarts));
  r.add_meta("global_tol", format_real(cfg.global.tol));
  r.add_meta("global_max_iter", std::to_string(cfg.global.max_iter));
  r.add_meta("dominance_violations", std::to_string(violations));
  return out;
}

RunReport run_psi_check(const std::vector<int>& d_list, long n_samples, std::uint64_t seed,
                        const PsiCheckOptions& options) {
  if (d_list.empty()) throw std::invalid_argument("psi-check: empty d list");
  if (n_samples < 1000) throw std::invalid_argument("psi-check: need n_samples >= 1000");
  const int max_d = *std::max_element(d_list.begin(), d_list.end());
  const int N = options.N > 0 ? options.N : max_d;
  for (int d : d_list) {
    if (d < 1 || d > N) throw std::invalid_argument("psi-check: need 1 <= d <= N");
  }
  if (options.reference_offset < 0 && d_list.front() + options.reference_offset < 1) {
    throw std::invalid_argument("psi-check: reference d must be >= 1");
  }

  RunReport r;
  r.columns = {"d", "n_samples", "ks_stat", "critical", "pass"};
  bool all_pass = true;
  std::vector<std::pair<std::string, std::string>> medians;
  for (int d : d_list) {
    const std::uint64_t base = derive_seed(derive_seed(seed, kPsiStream), static_cast<std::uint64_t>(d));
    CMatrix v = CMatrix::Identity(N, d);
    if (options.random_v) {
      Rng rng = make_rng(derive_seed(base, 0xFFFFFFFFULL));
      v = random_orthonormal(rng, N, d);
    }
    const JammerStrategy s = equal_power(v);
    std::vector<double> samples(static_cast<std::size_t>(n_samples));
    parallel_for(samples.size(), options.threads, [&](std::size_t i) {
      samples[i] = sample_psi(derive_seed(base, i), s).value;
    });
    const double ks = ks_distance(samples, d + options.reference_offset);
    const double crit = ks_critical_1pct(n_samples);
    const bool pass = ks < crit;
    all_pass = all_pass && pass;
    r.rows.push_back({static_cast<long long>(d), static_cast<long long>(n_samples), ks, crit,
                      std::string(pass ? "true" : "false")});
    std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
    medians.emplace_back("median_d" + std::to_string(d), format_real(samples[samples.size() / 2]));
  }

  add_common_meta(r, "psi-check", seed);
  r.add_meta("N", std::to_string(N));
  r.add_meta("random_v", options.random_v ? "true" : "false");
  r.add_meta("reference_offset", std::to_string(options.reference_offset));
  for (auto& m : medians) r.metadata.push_back(std::move(m));
  r.add_meta("all_pass", all_pass ? "true" : "false");
  return r;
}

RunReport run_covert_check(const std::vector<double>& eps_list, int n, long n_slots,
                           int n_channels, std::uint64_t seed, const CovertCheckOptions& options) {
  if (eps_list.empty()) throw std::invalid_argument("covert-check: empty epsilon list");
  if (n_channels < 1) throw std::invalid_argument("covert-check: need at least one channel");
  if (!(options.power_scale >= 0.0)) throw std::invalid_argument("covert-check: power scale");
  if (n_slots < 10000) throw std::invalid_argument("covert-check: need n_slots >= 10000");

  SystemParams params;
  params.n = n;
  params.N = options.N;
  params.M = 1;
  params.p_max = options.p_max;
  params.sigma_w2 = options.sigma_w2;
  params.sigma_b2 = options.sigma_b2;
  for (double eps : eps_list) {
    params.epsilon = eps;
    params.validate();
  }
  // The jammer fixes its beam with the nominal noise-to-jam ratio at full power.
  const double sigma = params.sigma_b2 / params.p_max;

  struct Cellout {
    double error_sum, std_error;
    bool pass;
  };
  const std::size_t n_eps = eps_list.size();
  const auto n_ch = static_cast<std::size_t>(n_channels);
  std::vector<Cellout> cells(n_eps * n_ch);
  parallel_for(cells.size(), options.threads, [&](std::size_t idx) {
    const std::size_t e = idx / n_ch;
    const std::size_t k = idx % n_ch;
    SystemParams p = params;
    p.epsilon = eps_list[e];
    const ChannelRealization ch = sample_channel(channel_seed(seed, k), p);
    const JammerStrategy s = jammer_full_csi_m1(ch, sigma);
    const double p_a = options.power_scale * alice_power_full_csi(ch, s, p);
    const DetectionEstimate est = estimate_min_error_sum(
        derive_seed(derive_seed(seed, kSlotStream), idx), ch, s, p_a, p, n_slots);
    const bool pass = est.error_sum >= 1.0 - p.epsilon - 3.0 * est.std_error;
    cells[idx] = {est.error_sum, est.std_error, pass};
  });

  RunReport r;
  r.columns = {"epsilon", "channel_idx", "error_sum", "stderr", "pass"};
  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    r.rows.push_back({eps_list[idx / n_ch], static_cast<long long>(idx % n_ch),
                      cells[idx].error_sum, cells[idx].std_error,
                      std::string(cells[idx].pass ? "true" : "false")});
  }
  add_common_meta(r, "covert-check", seed);
  r.add_meta("N", std::to_string(params.N));
  r.add_meta("M", "1");
  r.add_meta("n", std::to_string(n));
  r.add_meta("slots", std::to_string(n_slots));
  r.add_meta("channels", std::to_string(n_channels));
  r.add_meta("p_max", format_real(params.p_max));
  r.add_meta("sigma_w2", format_real(params.sigma_w2));
  r.add_meta("sigma_b2", format_real(params.sigma_b2));
  r.add_meta("power_scale", format_real(options.power_scale));
  bool all_pass = true;
  for (double eps : eps_list) {
    const double frac = covert_pass_fraction(r, eps);
    all_pass = all_pass && frac == 1.0;
    r.add_meta("pass_fraction_eps_" + format_real(eps), format_real(frac));
  }
  r.add_meta("all_pass", all_pass ? "true" : "false");
  return r;
}

double covert_pass_fraction(const RunReport& report, double epsilon) {
  long total = 0, passed = 0;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    if (report.real(i, "epsilon") != epsilon) continue;
    ++total;
    if (report.text(i, "pass") == "true") ++passed;
  }
  if (total == 0) throw std::invalid_argument("covert_pass_fraction: no rows for epsilon");
  return static_cast<double>(passed) / static_cast<double>(total);
}

RunReport run_optimize_dump(const ChannelRealization& ch, double sigma,
                            const GlobalOptOptions& global) {
  const bool single = ch.M() == 1;
  SnrEvaluation best = single
      ? SnrEvaluation{0.0, jammer_full_csi_m1(ch, sigma), ReceiveFilter(CVector::Ones(1)),
                      scheme::kFullCsiM1}
      : global_opt_alternating(ch, sigma, global).evaluation;
  if (single) best.value = objective_filtered(ch, best.strategy, *best.filter, sigma);

  const CVector v = best.strategy.direction();
  const CVector w = ch.h_jw / ch.h_jw.norm();
  const double h_fro = ch.H_jb.norm();
  Eigen::JacobiSVD<CMatrix> svd(ch.H_jb, Eigen::ComputeFullV);
  const CVector bob_dir = normalize_phase(svd.matrixV().col(0));

  RunReport r;
  r.columns = {"name", "index", "re", "im"};
  auto vec = [&](const std::string& name, const CVector& x) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      r.rows.push_back({name, static_cast<long long>(i), x(i).real(), x(i).imag()});
    }
  };
  auto scalar = [&](const std::string& name, double x) {
    r.rows.push_back({name, 0LL, x, 0.0});
  };
  vec("v_star", v);
  vec("c_star", best.filter->c());
  vec("h_jw_dir", w);
  vec("h_jb_dir", bob_dir);
  vec("h_ab", ch.h_ab);
  scalar("alignment_willie", std::abs(v.dot(ch.h_jw)) / ch.h_jw.norm());
  scalar("interference_ratio", (ch.H_jb * v).norm() / h_fro);
  scalar("interference_ratio_toward_willie", (ch.H_jb * w).norm() / h_fro);
  // Least interference any unit beam can cause; zero when H_jb has a null space.
  const double floor_sv = ch.N() > ch.M() ? 0.0 : svd.singularValues()(ch.N() - 1);
  scalar("interference_ratio_min", floor_sv / h_fro);
  scalar("objective:" + best.scheme_tag, best.value);
  if (!single) scalar(std::string("objective:") + scheme::kGlobal + ":converged",
                      global_opt_alternating(ch, sigma, global).converged ? 1.0 : 0.0);
  scalar(std::string("objective:") + scheme::kCMrc, scheme_c_mrc(ch, sigma).value);
  scalar(std::string("objective:") + scheme::kVWillie, scheme_v_willie(ch, sigma).value);
  if (bob_cancels_applicable(ch.N(), ch.M())) {
    scalar(std::string("objective:") + scheme::kBobCancels, scheme_bob_cancels(ch, sigma).value);
  }
  if (jammer_cancels_applicable(ch.N(), ch.M())) {
    scalar(std::string("objective:") + scheme::kJammerCancels,
           scheme_jammer_cancels(ch, sigma).value);
  }

  r.add_meta("tool", "covjam");
  r.add_meta("version", kVersion);
  r.add_meta("command", "optimize");
  r.add_meta("N", std::to_string(ch.N()));
  r.add_meta("M", std::to_string(ch.M()));
  r.add_meta("sigma", format_real(sigma));
  r.add_meta("optimizer", best.scheme_tag);
  return r;
}

RunReport run_optimize_dump(std::uint64_t seed, int N, int M, double sigma,
                            const GlobalOptOptions& global) {
  SystemParams params;
  params.N = N;
  params.M = M;
  const ChannelRealization ch = sample_channel(channel_seed(seed, 0), params);
  RunReport r = run_optimize_dump(ch, sigma, global);
  r.metadata.insert(r.metadata.begin() + 3, {"seed", std::to_string(seed)});
  return r;
}

}  // namespace covjam
