// covjam command line: regenerates the figure data and runs the verification suites.
#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covjam/errors.hpp"
#include "covjam/experiments.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kVerificationFailed = 2;

struct Antennas {
  int N = 4;
  int M = 1;
};

Antennas parse_antennas(const std::string& s) {
  const auto x = s.find_first_of("xX");
  if (x == std::string::npos) throw std::invalid_argument("--antennas must look like NxM");
  Antennas a;
  try {
    std::size_t used = 0;
    a.N = std::stoi(s.substr(0, x), &used);
    if (used != x) throw std::invalid_argument("N");
    const std::string m = s.substr(x + 1);
    a.M = std::stoi(m, &used);
    if (used != m.size()) throw std::invalid_argument("M");
  } catch (const std::exception&) {
    throw std::invalid_argument("--antennas must look like NxM, got '" + s + "'");
  }
  if (a.N < 1 || a.M < 1) throw std::invalid_argument("--antennas: N and M must be >= 1");
  return a;
}

void emit(const covjam::RunReport& r, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << covjam::to_csv(r);
  } else {
    covjam::write_csv(r, out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covjam: jamming-assisted covert communication simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(covjam::kVersion));

  std::uint64_t seed = 1;
  std::string out;
  int threads = 1;
  std::string antennas = "4x1";
  std::string grid = "0.1:0.1:6";
  int draws = 2000;
  double epsilon = 0.1;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "master seed")->capture_default_str();
    sub->add_option("--out", out, "output CSV path (stdout if omitted)");
    sub->add_option("--threads", threads, "worker threads")->capture_default_str();
  };

  auto* fig3 = app.add_subcommand("fig3", "no-CSI null-space vs full-space sweep (M = 1)");
  common(fig3);
  int bootstrap = 200;
  fig3->add_option("--draws", draws)->capture_default_str();
  fig3->add_option("--sigma-grid", grid, "start:step:stop")->capture_default_str();
  fig3->add_option("--antennas", antennas, "NxM")->capture_default_str();
  fig3->add_option("--epsilon", epsilon)->capture_default_str();
  fig3->add_option("--bootstrap", bootstrap, "crossover bootstrap resamples")->capture_default_str();

  auto* fig4 = app.add_subcommand("fig4", "multi-antenna scheme comparison");
  common(fig4);
  std::vector<std::string> schemes;
  int restarts = 8;
  fig4->add_option("--draws", draws)->capture_default_str();
  fig4->add_option("--sigma-grid", grid, "start:step:stop")->capture_default_str();
  fig4->add_option("--antennas", antennas, "NxM")->capture_default_str();
  fig4->add_option("--epsilon", epsilon)->capture_default_str();
  fig4->add_option("--schemes", schemes, "subset of global,c-mrc,v-willie,bob-cancels,jammer-cancels")
      ->delimiter(',');
  fig4->add_option("--restarts", restarts, "random restarts of the alternating optimizer")
      ->capture_default_str();

  auto* psi = app.add_subcommand("psi-check", "KS test of the no-CSI Willie gain law");
  common(psi);
  std::vector<int> d_list = {1, 2, 4, 8};
  long samples = 10000;
  bool random_v = false;
  int reference_offset = 0;
  int psi_n = 0;
  psi->add_option("--d", d_list, "comma-separated dimensions")->delimiter(',')->capture_default_str();
  psi->add_option("--samples", samples)->capture_default_str();
  psi->add_option("--antennas-n", psi_n, "jammer antennas (default max d)");
  psi->add_flag("--random-v", random_v, "Haar-random directions instead of canonical ones");
  psi->add_option("--reference-offset", reference_offset, "compare against d + offset");

  auto* cov = app.add_subcommand("covert-check", "Monte Carlo check of the covertness constraint");
  common(cov);
  std::vector<double> eps_list = {0.05, 0.1, 0.2};
  int n = 100;
  long slots = 20000;
  int channels = 20;
  double power_scale = 1.0;
  cov->add_option("--epsilon", eps_list, "comma-separated epsilons")->delimiter(',')->capture_default_str();
  cov->add_option("--n", n, "channel uses per slot")->capture_default_str();
  cov->add_option("--slots", slots, "slots per hypothesis")->capture_default_str();
  cov->add_option("--channels", channels)->capture_default_str();
  cov->add_option("--antennas", antennas, "NxM (M must be 1)")->capture_default_str();
  cov->add_option("--power-scale", power_scale, "multiplies Alice's power")->capture_default_str();

  auto* opt = app.add_subcommand("optimize", "optimal directions for one channel draw");
  common(opt);
  double sigma = 1.0;
  opt->add_option("--antennas", antennas, "NxM")->capture_default_str();
  opt->add_option("--sigma", sigma)->capture_default_str();
  opt->add_option("--restarts", restarts)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (threads < 1) throw std::invalid_argument("--threads must be >= 1");
    if (*fig3 || *fig4) {
      const Antennas a = parse_antennas(antennas);
      covjam::SweepConfig cfg;
      cfg.sigma_grid = covjam::parse_sigma_grid(grid);
      cfg.n_channel_draws = draws;
      cfg.master_seed = seed;
      cfg.N = a.N;
      cfg.M = a.M;
      cfg.epsilon = epsilon;
      cfg.threads = threads;
      if (*fig3) {
        cfg.bootstrap_resamples = bootstrap;
        const auto res = covjam::run_fig3(cfg);
        emit(res.report, out);
        if (res.sign_changes != 1) {
          std::cerr << "fig3: note: full - null changes sign " << res.sign_changes
                    << " times on this grid\n";
        }
      } else {
        cfg.schemes = schemes;
        cfg.global.restarts = restarts;
        const auto res = covjam::run_fig4(cfg);
        emit(res.report, out);
        if (res.report.meta("dominance_violations") != "0") {
          std::cerr << "fig4: note: a scheme exceeded the global mean by > 2 stderr at "
                    << res.report.meta("dominance_violations") << " grid points\n";
        }
      }
    } else if (*psi) {
      covjam::PsiCheckOptions o;
      o.N = psi_n;
      o.random_v = random_v;
      o.reference_offset = reference_offset;
      o.threads = threads;
      const auto r = covjam::run_psi_check(d_list, samples, seed, o);
      emit(r, out);
      if (r.meta("all_pass") != "true") {
        std::cerr << "psi-check: KS statistic above the 1% critical value\n";
        return kVerificationFailed;
      }
    } else if (*cov) {
      const Antennas a = parse_antennas(antennas);
      if (a.M != 1) throw std::invalid_argument("covert-check supports M = 1 only");
      covjam::CovertCheckOptions o;
      o.N = a.N;
      o.power_scale = power_scale;
      o.threads = threads;
      const auto r = covjam::run_covert_check(eps_list, n, slots, channels, seed, o);
      emit(r, out);
      if (r.meta("all_pass") != "true") {
        std::cerr << "covert-check: detection error sum below 1 - epsilon\n";
        return kVerificationFailed;
      }
    } else if (*opt) {
      const Antennas a = parse_antennas(antennas);
      if (!(sigma > 0.0)) throw std::invalid_argument("--sigma must be > 0");
      covjam::GlobalOptOptions g;
      g.restarts = restarts;
      emit(covjam::run_optimize_dump(seed, a.N, a.M, sigma, g), out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::logic_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kOk;
}
