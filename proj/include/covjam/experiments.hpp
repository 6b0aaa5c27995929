#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covjam/report.hpp"
#include "covjam/strategies.hpp"

namespace covjam {

struct SweepConfig {
  std::vector<double> sigma_grid;
  int n_channel_draws = 2000;
  std::uint64_t master_seed = 1;
  int N = 4;
  int M = 1;
  double epsilon = 0.1;
  /// fig4 only; empty selects every scheme applicable to (N, M).
  std::vector<std::string> schemes;
  int threads = 1;
  int bootstrap_resamples = 200;
  GlobalOptOptions global;

  void validate() const;
};

/// "start:step:stop" inclusive, e.g. "0.1:0.1:6".
std::vector<double> parse_sigma_grid(const std::string& spec);
std::vector<double> make_grid(double start, double step, double stop);

/// Runs fn(i) for i in [0, n) on up to `threads` workers.  Every index is
/// independent, so results do not depend on the worker count.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

double pairwise_sum(std::span<const double> xs);

struct MeanStderr {
  double mean = 0.0;
  double std_error = 0.0;
};
MeanStderr mean_stderr(std::span<const double> xs);

// ---- fig3: no-CSI M = 1 null-space vs full-space ------------------------

struct Crossover {
  double sigma;  // linear interpolation inside the bracketing grid cell
  double ci_lo;  // bootstrap percentile interval (2.5%, 97.5%)
  double ci_hi;
};

struct Fig3Result {
  RunReport report;
  std::vector<double> null_mean;
  std::vector<double> full_mean;
  int sign_changes = 0;
  std::optional<Crossover> crossover;
};

Fig3Result run_fig3(const SweepConfig& cfg);

/// First grid crossing of (full - null) from <= 0 to > 0, interpolated.
std::optional<double> interpolate_crossover(std::span<const double> grid,
                                            std::span<const double> diff);

// ---- fig4: scheme comparison for M > 1 -----------------------------------

struct Fig4Result {
  RunReport report;
  /// values[scheme][grid index][draw index], normalized objectives.
  std::map<std::string, std::vector<std::vector<double>>> values;
};

/// Schemes evaluated for (N, M): global, c-mrc, v-willie and the applicable
/// cancellation scheme, if any.
std::vector<std::string> applicable_fig4_schemes(int N, int M);

Fig4Result run_fig4(const SweepConfig& cfg);

// ---- verification suites -------------------------------------------------

struct PsiCheckOptions {
  int N = 0;                 // antennas; 0 means max(d_list)
  bool random_v = false;     // a Haar-random V per d instead of canonical directions
  int reference_offset = 0;  // test against d + offset (negative control)
  int threads = 1;
};

RunReport run_psi_check(const std::vector<int>& d_list, long n_samples, std::uint64_t seed,
                        const PsiCheckOptions& options = {});

struct CovertCheckOptions {
  int N = 4;
  double p_max = 1.0;
  double sigma_w2 = 1.0;
  double sigma_b2 = 1.0;
  double power_scale = 1.0;  // multiplies the covert power (negative control)
  int threads = 1;
};

RunReport run_covert_check(const std::vector<double>& eps_list, int n, long n_slots,
                           int n_channels, std::uint64_t seed,
                           const CovertCheckOptions& options = {});

/// Fraction of rows in a covert-check report with the given epsilon that pass.
double covert_pass_fraction(const RunReport& report, double epsilon);

// ---- single-realization direction dump ----------------------------------

RunReport run_optimize_dump(const ChannelRealization& ch, double sigma,
                            const GlobalOptOptions& global = {});
RunReport run_optimize_dump(std::uint64_t seed, int N, int M, double sigma,
                            const GlobalOptOptions& global = {});

}  // namespace covjam
