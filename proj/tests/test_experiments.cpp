#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "covjam/errors.hpp"
#include "covjam/experiments.hpp"
#include "covjam/report.hpp"

using namespace covjam;

TEST_CASE("sigma grid parsing") {
  const auto g = parse_sigma_grid("0.1:0.1:6");
  REQUIRE(g.size() == 60);
  CHECK(g.front() == 0.1);
  CHECK(g[2] == 0.3);
  CHECK(g.back() == 6.0);
  CHECK(parse_sigma_grid("1:1:1").size() == 1);
  CHECK_THROWS_AS(parse_sigma_grid("1:0:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sigma_grid("2:1:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sigma_grid("0.1:0.1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sigma_grid("a:b:c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sigma_grid("0.1x:0.1:1"), std::invalid_argument);
}

TEST_CASE("mean and stderr against a hand computation") {
  const std::vector<double> xs = {1.0, 2.0, 3.0, 4.0};
  const MeanStderr m = mean_stderr(xs);
  CHECK(m.mean == doctest::Approx(2.5));
  // sample variance 5/3, stderr sqrt(5/12)
  CHECK(m.std_error == doctest::Approx(std::sqrt(5.0 / 12.0)));
  std::vector<double> many(1001, 0.1);
  CHECK(pairwise_sum(many) == doctest::Approx(100.1).epsilon(1e-15));
}

TEST_CASE("crossover interpolation") {
  const std::vector<double> grid = {1.0, 2.0, 3.0};
  CHECK(*interpolate_crossover(grid, std::vector<double>{-1.0, -0.5, 0.5}) == doctest::Approx(2.5));
  CHECK_FALSE(interpolate_crossover(grid, std::vector<double>{-1.0, -0.5, -0.1}).has_value());
}

TEST_CASE("parallel_for visits every index once and propagates errors") {
  std::vector<int> hits(97, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(10, 3,
                               [](std::size_t i) {
                                 if (i == 7) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}

TEST_CASE("CSV round trip is exact") {
  RunReport r;
  r.add_meta("command", "test");
  r.add_meta("note", "a=b, with comma");
  r.columns = {"x", "name", "k"};
  r.rows.push_back({0.1, std::string("plain"), 3LL});
  r.rows.push_back({1.0 / 3.0, std::string("has,comma"), -7LL});
  r.rows.push_back({1e-300, std::string("has \"quote\""), 0LL});
  r.rows.push_back({12345678.0, std::string("true"), 1LL});
  const std::string text = to_csv(r);
  const RunReport back = parse_csv(text);
  CHECK(back == r);
  CHECK(to_csv(back) == text);
  CHECK(back.meta("note") == "a=b, with comma");
  CHECK(back.real(1, "x") == 1.0 / 3.0);

  const auto path = std::filesystem::temp_directory_path() / "covjam_roundtrip.csv";
  write_csv(r, path);
  CHECK(read_csv(path) == r);
  std::filesystem::remove(path);
}

TEST_CASE("CSV rejects malformed input") {
  CHECK_THROWS(parse_csv("# just=meta\n"));
  CHECK_THROWS(parse_csv("a,b\n1\n"));
  CHECK_THROWS(parse_csv("a,b\n\"open,1\n"));
  RunReport bad;
  bad.columns = {"a"};
  bad.rows.push_back({1LL, 2LL});
  CHECK_THROWS(to_csv(bad));
}

TEST_CASE("real formatting always marks a real") {
  CHECK(format_real(1.0) == "1.0");
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(1e21).find_first_of(".e") != std::string::npos);
}

TEST_CASE("fig3 sweep: columns, determinism, thread independence") {
  SweepConfig cfg;
  cfg.sigma_grid = parse_sigma_grid("0.5:0.5:6");
  cfg.n_channel_draws = 400;
  cfg.bootstrap_resamples = 50;
  const Fig3Result a = run_fig3(cfg);
  cfg.threads = 3;
  const Fig3Result b = run_fig3(cfg);
  CHECK(to_csv(a.report) == to_csv(b.report));
  CHECK(a.report.columns == std::vector<std::string>{"sigma", "null_space_mean", "null_space_stderr",
                                                     "full_space_mean", "full_space_stderr",
                                                     "n_draws"});
  CHECK(a.report.rows.size() == cfg.sigma_grid.size());
  CHECK(a.sign_changes == 1);
  REQUIRE(a.crossover.has_value());
  CHECK(a.crossover->ci_lo <= a.crossover->sigma);
  CHECK(a.crossover->sigma <= a.crossover->ci_hi);
  CHECK(a.report.meta("crossover") == format_real(a.crossover->sigma));
  // Null-space objective is (N-1)/sigma exactly.
  CHECK(a.report.real(0, "null_space_mean") == doctest::Approx(6.0));
  CHECK(a.report.real(0, "null_space_stderr") == doctest::Approx(0.0));

  cfg.master_seed = 2;
  CHECK(to_csv(run_fig3(cfg).report) != to_csv(a.report));
  cfg.M = 2;
  CHECK_THROWS_AS(run_fig3(cfg), std::invalid_argument);
}

TEST_CASE("fig4 sweep: sorted rows, requested schemes, inapplicable schemes") {
  SweepConfig cfg;
  cfg.sigma_grid = {0.5, 2.0};
  cfg.n_channel_draws = 30;
  cfg.N = 4;
  cfg.M = 2;
  const Fig4Result r = run_fig4(cfg);
  CHECK(r.report.columns ==
        std::vector<std::string>{"sigma", "scheme", "mean", "stderr", "n_draws", "N", "M"});
  CHECK(r.report.rows.size() == 2 * 4);
  for (std::size_t i = 1; i < r.report.rows.size(); ++i) {
    const double s0 = r.report.real(i - 1, "sigma"), s1 = r.report.real(i, "sigma");
    CHECK((s0 < s1 || (s0 == s1 && r.report.text(i - 1, "scheme") < r.report.text(i, "scheme"))));
  }
  CHECK(r.report.meta("dominance_violations") == "0");
  CHECK(applicable_fig4_schemes(2, 4) ==
        std::vector<std::string>{"global", "c-mrc", "v-willie", "bob-cancels"});
  CHECK(applicable_fig4_schemes(3, 3) == std::vector<std::string>{"global", "c-mrc", "v-willie"});

  cfg.schemes = {"c-mrc"};
  CHECK(run_fig4(cfg).report.rows.size() == 2);
  cfg.schemes = {"bob-cancels"};
  CHECK_THROWS_AS(run_fig4(cfg), NotApplicableError);

  cfg.schemes = {};
  cfg.threads = 2;
  CHECK(to_csv(run_fig4(cfg).report) == to_csv(r.report));
}

TEST_CASE("psi-check passes for the right law, fails the shifted negative control") {
  const RunReport ok = run_psi_check({1, 2}, 4000, 9);
  CHECK(ok.meta("all_pass") == "true");
  CHECK(ok.rows.size() == 2);
  PsiCheckOptions neg;
  neg.reference_offset = 1;
  const RunReport bad = run_psi_check({1, 2}, 4000, 9, neg);
  CHECK(bad.meta("all_pass") == "false");
  CHECK(bad.text(0, "pass") == "false");
  PsiCheckOptions rv;
  rv.random_v = true;
  rv.N = 4;
  CHECK(run_psi_check({2}, 4000, 9, rv).meta("all_pass") == "true");
  CHECK_THROWS_AS(run_psi_check({5}, 4000, 9, rv), std::invalid_argument);
}

TEST_CASE("covert-check passes at the covert power and fails at 100x") {
  const RunReport ok = run_covert_check({0.1}, 100, 10000, 4, 3);
  CHECK(ok.rows.size() == 4);
  CHECK(covert_pass_fraction(ok, 0.1) == 1.0);
  CovertCheckOptions loud;
  loud.power_scale = 100.0;
  const RunReport bad = run_covert_check({0.1}, 100, 10000, 4, 3, loud);
  CHECK(covert_pass_fraction(bad, 0.1) < 0.5);
  CHECK_THROWS_AS(covert_pass_fraction(ok, 0.2), std::invalid_argument);
}

TEST_CASE("optimize dump carries the direction vectors and diagnostics") {
  const RunReport r = run_optimize_dump(5, 4, 2, 1.0);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < r.rows.size(); ++i) names.push_back(r.text(i, "name"));
  auto count = [&](const std::string& n) { return std::count(names.begin(), names.end(), n); };
  CHECK(count("v_star") == 4);
  CHECK(count("c_star") == 2);
  CHECK(count("h_jw_dir") == 4);
  CHECK(count("h_jb_dir") == 4);
  CHECK(count("alignment_willie") == 1);
  CHECK(count("objective:global") == 1);
  CHECK(count("objective:jammer-cancels") == 1);
  CHECK(r.meta("seed") == "5");

  const RunReport m1 = run_optimize_dump(5, 4, 1, 1.0);
  CHECK(m1.meta("optimizer") == "full-csi-m1");
}

TEST_CASE("fig3: single point, single draw is reproducible byte for byte") {
  SweepConfig cfg;
  cfg.sigma_grid = {1.0};
  cfg.n_channel_draws = 1;
  cfg.master_seed = 42;
  CHECK(to_csv(run_fig3(cfg).report) == to_csv(run_fig3(cfg).report));
}

TEST_CASE("fig3: null-space mean falls with sigma, crossover_grid brackets the interpolation") {
  SweepConfig cfg;
  cfg.sigma_grid = parse_sigma_grid("0.1:0.1:6");
  cfg.n_channel_draws = 2000;
  cfg.bootstrap_resamples = 20;
  const Fig3Result r = run_fig3(cfg);
  for (std::size_t i = 1; i < r.null_mean.size(); ++i) CHECK(r.null_mean[i] < r.null_mean[i - 1]);
  CHECK(r.sign_changes == 1);
  const double grid_x = std::stod(r.report.meta("crossover_grid"));
  CHECK(r.crossover->sigma <= grid_x);
  CHECK(r.crossover->sigma > grid_x - 0.1 - 1e-12);
  // stderr stays under 2% of the mean at the default draw count.
  for (std::size_t i = 0; i < r.report.rows.size(); ++i) {
    CHECK(r.report.real(i, "full_space_stderr") < 0.02 * r.report.real(i, "full_space_mean"));
  }
}

TEST_CASE("psi-check: d+2 negative control fails, d=1 median near 1") {
  const RunReport ok = run_psi_check({1, 2, 4, 8}, 10000, 1);
  CHECK(ok.meta("all_pass") == "true");
  const double med = std::stod(ok.meta("median_d1"));
  CHECK(med >= 0.95);
  CHECK(med <= 1.05);
  PsiCheckOptions neg;
  neg.reference_offset = 2;
  const RunReport bad = run_psi_check({1, 2, 4, 8}, 10000, 1, neg);
  for (std::size_t i = 0; i < bad.rows.size(); ++i) CHECK(bad.text(i, "pass") == "false");
  CHECK_THROWS_AS(run_psi_check({1}, 999, 1), std::invalid_argument);
}

TEST_CASE("covert-check: a lax epsilon passes trivially, short runs are rejected") {
  const RunReport r = run_covert_check({0.9}, 100, 10000, 3, 5);
  CHECK(covert_pass_fraction(r, 0.9) == 1.0);
  CHECK_THROWS_AS(run_covert_check({0.1}, 100, 9999, 3, 5), std::invalid_argument);
}

namespace {

double dump_scalar(const RunReport& r, const std::string& name) {
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (r.text(i, "name") == name) return r.real(i, "re");
  }
  throw std::out_of_range(name);
}

}  // namespace

TEST_CASE("optimize dump: Willie orthogonal to Bob means beam straight at Willie") {
  ChannelRealization ch;
  ch.h_aw = 1.0;
  ch.h_ab = CVector::Ones(1);
  ch.h_jw = CVector::Zero(3);
  ch.h_jw(0) = Complex(0.6, 0.8);
  ch.H_jb = CMatrix::Zero(1, 3);
  ch.H_jb(0, 1) = 2.0;
  const RunReport r = run_optimize_dump(ch, 1.0);
  CHECK(dump_scalar(r, "alignment_willie") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dump_scalar(r, "interference_ratio") == doctest::Approx(0.0));
}

TEST_CASE("optimize dump: a generic draw trades Willie alignment against Bob interference") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (auto [N, M] : {std::pair{4, 1}, {4, 2}, {2, 4}}) {
      const RunReport r = run_optimize_dump(seed, N, M, 1.0);
      const double a = dump_scalar(r, "alignment_willie");
      CHECK(a > 0.0);
      CHECK(a < 1.0);
      if (M > 1) continue;  // with a receive filter, |H_jb v| is not what Bob sees
      const double i = dump_scalar(r, "interference_ratio");
      CHECK(i > dump_scalar(r, "interference_ratio_min"));
      CHECK(i < dump_scalar(r, "interference_ratio_toward_willie"));
    }
  }
  CHECK(to_csv(run_optimize_dump(3, 4, 2, 0.5)) == to_csv(run_optimize_dump(3, 4, 2, 0.5)));
}
