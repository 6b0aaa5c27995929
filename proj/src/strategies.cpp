#include "covjam/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "covjam/errors.hpp"

namespace covjam {

namespace {

void require_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("sigma must be positive and finite");
  }
}

void require_single_bob_antenna(const ChannelRealization& ch, const char* what) {
  if (ch.M() != 1) throw DimensionError(std::string(what) + ": requires M = 1");
}

void require_filter_dim(const ChannelRealization& ch, const ReceiveFilter& c) {
  if (c.M() != ch.M()) throw DimensionError("receive filter length does not match M");
}

// Equal power over Q's columns, optionally with one extra direction appended.
JammerStrategy equal_power_with(const SubspaceBasis& q, const CVector* extra) {
  CMatrix v(q.ambient_dim(), q.size() + (extra ? 1 : 0));
  v.leftCols(q.size()) = q.columns();
  if (extra) v.col(q.size()) = *extra / extra->norm();
  return equal_power(v);
}

// Candidates for the equal-power problems: the null space of `interferer`
// (a vector in C^N) and that null space completed by the interferer direction.
NoCsiCandidates null_and_full(const CVector& interferer) {
  if (!(interferer.norm() > 0.0)) {
    throw DegenerateError("no-CSI candidates: interference vector is zero");
  }
  const SubspaceBasis q = nullspace_basis(CMatrix(interferer.adjoint()));
  return {equal_power_with(q, nullptr), equal_power_with(q, &interferer)};
}

}  // namespace

ReceiveFilter::ReceiveFilter(const CVector& c) : c_(normalize_phase(c)) {}

double objective_m1(const ChannelRealization& ch, const JammerStrategy& s, double sigma) {
  require_single_bob_antenna(ch, "objective_m1");
  require_sigma(sigma);
  const CMatrix shape = s.shape();
  return quadform(ch.h_jw, shape) / (quadform(ch.h_jb(), shape) + sigma);
}

double objective_no_csi_m1(const ChannelRealization& ch, const JammerStrategy& s, double sigma) {
  require_single_bob_antenna(ch, "objective_no_csi_m1");
  require_sigma(sigma);
  if (!s.is_equal_power()) {
    throw std::invalid_argument("objective_no_csi_m1: strategy must split power equally");
  }
  const double d = s.d();
  const CVector b = s.V().adjoint() * ch.h_jb();
  return d / (b.squaredNorm() / d + sigma);
}

double objective_filtered(const ChannelRealization& ch, const JammerStrategy& s,
                          const ReceiveFilter& c, double sigma) {
  require_filter_dim(ch, c);
  require_sigma(sigma);
  const CMatrix shape = s.shape();
  const CVector h_tilde = ch.H_jb.adjoint() * c.c();
  const double gain = std::norm(c.c().dot(ch.h_ab));
  const double den = quadform(h_tilde, shape) + sigma * c.c().squaredNorm();
  return quadform(ch.h_jw, shape) * gain / den;
}

double objective_no_csi_filtered(const ChannelRealization& ch, const JammerStrategy& s,
                                 const ReceiveFilter& c, double sigma) {
  require_filter_dim(ch, c);
  require_sigma(sigma);
  if (!s.is_equal_power()) {
    throw std::invalid_argument("objective_no_csi_filtered: strategy must split power equally");
  }
  const double d = s.d();
  const CVector b = s.V().adjoint() * (ch.H_jb.adjoint() * c.c());
  return d / (b.squaredNorm() / d + sigma * c.c().squaredNorm());
}

double bob_snr(const ChannelRealization& ch, const JammerStrategy& s, const ReceiveFilter& c,
               double p_a, double p_j, double sigma_b2) {
  require_filter_dim(ch, c);
  if (!(p_a >= 0.0) || !(p_j >= 0.0) || !(sigma_b2 > 0.0)) {
    throw std::invalid_argument("bob_snr: invalid powers");
  }
  const CVector h_tilde = ch.H_jb.adjoint() * c.c();
  const double den = p_j * quadform(h_tilde, s.shape()) + sigma_b2 * c.c().squaredNorm();
  return p_a * std::norm(c.c().dot(ch.h_ab)) / den;
}

double full_csi_snr_scale(const ChannelRealization& ch, const SystemParams& params, double p_j) {
  if (!(p_j > 0.0)) throw std::invalid_argument("full_csi_snr_scale: p_j must be positive");
  return params.epsilon * params.p_max / (4.0 * std::norm(ch.h_aw) * p_j);
}

JammerStrategy jammer_full_csi_m1(const ChannelRealization& ch, double sigma) {
  require_single_bob_antenna(ch, "jammer_full_csi_m1");
  require_sigma(sigma);
  const CVector h_jb = ch.h_jb();
  const CMatrix b = h_jb * h_jb.adjoint() + sigma * CMatrix::Identity(ch.N(), ch.N());
  return single_beam(top_gen_eig_rank1(ch.h_jw, b));
}

NoCsiCandidates no_csi_candidates_m1(const ChannelRealization& ch) {
  require_single_bob_antenna(ch, "no_csi_candidates_m1");
  if (ch.N() < 2) throw DimensionError("no_csi_candidates_m1: requires N >= 2");
  return null_and_full(ch.h_jb());
}

double no_csi_switch_sigma(const ChannelRealization& ch) {
  require_single_bob_antenna(ch, "no_csi_switch_sigma");
  const double n = ch.N();
  return (n - 1.0) * ch.h_jb().squaredNorm() / n;
}

JammerStrategy jammer_no_csi_m1(const ChannelRealization& ch, double sigma) {
  require_sigma(sigma);
  NoCsiCandidates cand = no_csi_candidates_m1(ch);
  const double null_value = objective_no_csi_m1(ch, cand.null_space, sigma);
  const double full_value = objective_no_csi_m1(ch, cand.full_space, sigma);
  return full_value > null_value ? std::move(cand.full_space) : std::move(cand.null_space);
}

JammerStrategy jammer_given_filter(const ChannelRealization& ch, const ReceiveFilter& c,
                                   double sigma) {
  require_filter_dim(ch, c);
  require_sigma(sigma);
  const CVector h_tilde = ch.H_jb.adjoint() * c.c();
  const CMatrix b = h_tilde * h_tilde.adjoint() +
                    sigma * c.c().squaredNorm() * CMatrix::Identity(ch.N(), ch.N());
  return single_beam(top_gen_eig_rank1(ch.h_jw, b));
}

ReceiveFilter filter_given_direction(const ChannelRealization& ch, const JammerStrategy& s,
                                     double sigma) {
  require_sigma(sigma);
  if (s.N() != ch.N()) throw DimensionError("filter_given_direction: strategy dimension");
  const CMatrix b = ch.H_jb * s.shape() * ch.H_jb.adjoint() +
                    sigma * CMatrix::Identity(ch.M(), ch.M());
  return ReceiveFilter(top_gen_eig_rank1(ch.h_ab, 0.5 * (b + b.adjoint())));
}

ReceiveFilter mrc_filter(const ChannelRealization& ch) { return ReceiveFilter(ch.h_ab); }

SnrEvaluation scheme_c_mrc(const ChannelRealization& ch, double sigma) {
  ReceiveFilter c = mrc_filter(ch);
  JammerStrategy s = jammer_given_filter(ch, c, sigma);
  const double value = objective_filtered(ch, s, c, sigma);
  return {value, std::move(s), std::move(c), scheme::kCMrc};
}

SnrEvaluation scheme_v_willie(const ChannelRealization& ch, double sigma) {
  JammerStrategy s = single_beam(ch.h_jw);
  ReceiveFilter c = filter_given_direction(ch, s, sigma);
  const double value = objective_filtered(ch, s, c, sigma);
  return {value, std::move(s), std::move(c), scheme::kVWillie};
}

bool bob_cancels_applicable(int N, int M) { return M > N; }
bool jammer_cancels_applicable(int N, int M) { return N > M; }

SnrEvaluation scheme_bob_cancels(const ChannelRealization& ch, double sigma) {
  if (!bob_cancels_applicable(ch.N(), ch.M())) {
    throw NotApplicableError("bob-cancels requires M > N");
  }
  // c^dagger H_jb = 0  <=>  H_jb^dagger c = 0.
  const SubspaceBasis q = nullspace_basis(ch.H_jb.adjoint());
  ReceiveFilter c(project_unit(ch.h_ab, q));
  JammerStrategy s = single_beam(ch.h_jw);
  const double value = objective_filtered(ch, s, c, sigma);
  return {value, std::move(s), std::move(c), scheme::kBobCancels};
}

SnrEvaluation scheme_jammer_cancels(const ChannelRealization& ch, double sigma) {
  if (!jammer_cancels_applicable(ch.N(), ch.M())) {
    throw NotApplicableError("jammer-cancels requires N > M");
  }
  const SubspaceBasis q = nullspace_basis(ch.H_jb);
  JammerStrategy s = single_beam(project_unit(ch.h_jw, q));
  ReceiveFilter c = mrc_filter(ch);
  const double value = objective_filtered(ch, s, c, sigma);
  return {value, std::move(s), std::move(c), scheme::kJammerCancels};
}

JammerStrategy jammer_no_csi_isotropic(int N) {
  if (N < 1) throw std::invalid_argument("jammer_no_csi_isotropic: N must be >= 1");
  return equal_power(CMatrix::Identity(N, N));
}

JammerStrategy jammer_no_csi_bob_mrc(const ChannelRealization& ch, double sigma) {
  require_sigma(sigma);
  if (ch.N() < 2) throw DimensionError("jammer_no_csi_bob_mrc: requires N >= 2");
  const ReceiveFilter c = mrc_filter(ch);
  NoCsiCandidates cand = null_and_full(ch.H_jb.adjoint() * c.c());
  const double null_value = objective_no_csi_filtered(ch, cand.null_space, c, sigma);
  const double full_value = objective_no_csi_filtered(ch, cand.full_space, c, sigma);
  return full_value > null_value ? std::move(cand.full_space) : std::move(cand.null_space);
}

GlobalOptResult global_opt_alternating(const ChannelRealization& ch, double sigma,
                                       const GlobalOptOptions& options) {
  require_sigma(sigma);
  if (options.restarts < 1) throw std::invalid_argument("global_opt_alternating: restarts >= 1");
  if (!(options.tol > 0.0)) throw std::invalid_argument("global_opt_alternating: tol > 0");
  if (options.max_iter < 1) throw std::invalid_argument("global_opt_alternating: max_iter >= 1");

  std::vector<ReceiveFilter> starts;
  starts.push_back(mrc_filter(ch));
  if (static_cast<int>(starts.size()) < options.restarts) {
    starts.push_back(filter_given_direction(ch, single_beam(ch.h_jw), sigma));
  }
  if (bob_cancels_applicable(ch.N(), ch.M()) &&
      static_cast<int>(starts.size()) < options.restarts) {
    starts.push_back(*scheme_bob_cancels(ch, sigma).filter);
  }
  for (std::uint64_t k = 0; static_cast<int>(starts.size()) < options.restarts; ++k) {
    Rng rng = make_rng(derive_seed(options.seed, k));
    starts.emplace_back(random_unit_vector(rng, ch.M()));
  }

  std::optional<SnrEvaluation> best;
  GlobalOptResult result{SnrEvaluation{0.0, single_beam(ch.h_jw), std::nullopt, scheme::kGlobal},
                         true, 0, {}};
  for (const ReceiveFilter& start : starts) {
    std::vector<double> trace;
    ReceiveFilter c = start;
    JammerStrategy v = jammer_given_filter(ch, c, sigma);
    double value = objective_filtered(ch, v, c, sigma);
    if (options.record_trace) trace.push_back(value);

    bool converged = false;
    int iter = 0;
    while (iter < options.max_iter) {
      ++iter;
      const double before = value;
      c = filter_given_direction(ch, v, sigma);
      value = objective_filtered(ch, v, c, sigma);
      if (options.record_trace) trace.push_back(value);
      v = jammer_given_filter(ch, c, sigma);
      value = objective_filtered(ch, v, c, sigma);
      if (options.record_trace) trace.push_back(value);
      if (value - before <= options.tol * std::max(1.0, std::abs(value))) {
        converged = true;
        break;
      }
    }
    if (options.record_trace) result.traces.push_back(std::move(trace));
    if (!best || value > best->value) {
      best = SnrEvaluation{value, v, c, scheme::kGlobal};
      result.converged = converged;
      result.iterations = iter;
    }
  }
  result.evaluation = std::move(*best);
  return result;
}

}  // namespace covjam
