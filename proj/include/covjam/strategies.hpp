#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covjam/model.hpp"

namespace covjam {

/// Bob's linear combining weights.  Stored unit-norm and phase-normalized;
/// every SNR objective is invariant to scaling c.
class ReceiveFilter {
 public:
  explicit ReceiveFilter(const CVector& c);
  const CVector& c() const noexcept { return c_; }
  int M() const noexcept { return static_cast<int>(c_.size()); }

 private:
  CVector c_;
};

namespace scheme {
inline constexpr const char* kFullCsiM1 = "full-csi-m1";
inline constexpr const char* kNullSpace = "null-space";
inline constexpr const char* kFullSpace = "full-space";
inline constexpr const char* kGlobal = "global";
inline constexpr const char* kCMrc = "c-mrc";
inline constexpr const char* kVWillie = "v-willie";
inline constexpr const char* kBobCancels = "bob-cancels";
inline constexpr const char* kJammerCancels = "jammer-cancels";
inline constexpr const char* kIsotropic = "isotropic";
inline constexpr const char* kBobMrcNoCsi = "no-csi-bob-mrc";
}  // namespace scheme

/// Normalized covert-SNR value with the leading constants (C, C1, C2 and
/// P_max/P_j) stripped, plus the (strategy, filter) that produced it.
struct SnrEvaluation {
  double value = 0.0;
  JammerStrategy strategy;
  std::optional<ReceiveFilter> filter;
  std::string scheme_tag;
};

// ---- objectives ----------------------------------------------------------

/// M = 1, Willie's CSI known:
///   h_jw^dagger S h_jw / (h_jb^dagger S h_jb + sigma),  S = V X V^dagger.
double objective_m1(const ChannelRealization& ch, const JammerStrategy& s, double sigma);

/// M = 1, no CSI of Willie, equal-power strategy of rank d:
///   d / ((1/d) sum_l |b_l|^2 + sigma),  b = V^dagger h_jb.
double objective_no_csi_m1(const ChannelRealization& ch, const JammerStrategy& s, double sigma);

/// Any M, Willie's CSI known, Bob filters with c:
///   (h_jw^dagger S h_jw) |c^dagger h_ab|^2 / c^dagger (H_jb S H_jb^dagger + sigma I) c.
/// Note this keeps |c^dagger h_ab|^2, so at M = 1 it equals |h_ab|^2 objective_m1.
double objective_filtered(const ChannelRealization& ch, const JammerStrategy& s,
                          const ReceiveFilter& c, double sigma);

/// No CSI of Willie with a fixed filter c, equal-power rank d:
///   d / ((1/d) sum_l |b_l|^2 + sigma ||c||^2),  b = V^dagger H_jb^dagger c.
double objective_no_csi_filtered(const ChannelRealization& ch, const JammerStrategy& s,
                                 const ReceiveFilter& c, double sigma);

/// Raw (unnormalized) SNR at Bob's filter output for actual powers.
double bob_snr(const ChannelRealization& ch, const JammerStrategy& s, const ReceiveFilter& c,
               double p_a, double p_j, double sigma_b2);

/// Leading factor C2 P_max / P_j = epsilon P_max / (4 |h_aw|^2 P_j) such that
/// bob_snr at the full-CSI covert power equals it times objective_filtered.
double full_csi_snr_scale(const ChannelRealization& ch, const SystemParams& params, double p_j);

// ---- jammer strategies and filters ---------------------------------------

/// Optimal full-CSI strategy for a single-antenna Bob: one beam along
/// (h_jb h_jb^dagger + sigma I)^{-1} h_jw.
JammerStrategy jammer_full_csi_m1(const ChannelRealization& ch, double sigma);

struct NoCsiCandidates {
  JammerStrategy null_space;  // equal power over the N-1 directions orthogonal to the interferer
  JammerStrategy full_space;  // equal power over all N directions
};

/// The two candidates compared when Willie's CSI is unknown and M = 1.
NoCsiCandidates no_csi_candidates_m1(const ChannelRealization& ch);

/// Noise level at which the full-space candidate overtakes the null-space one,
/// from (N-1)/sigma = N/(|h_jb|^2/N + sigma): (N-1)|h_jb|^2 / N.
double no_csi_switch_sigma(const ChannelRealization& ch);

/// Better of the two candidates by direct objective comparison; ties go to the
/// null space.  Requires N >= 2, M = 1.
JammerStrategy jammer_no_csi_m1(const ChannelRealization& ch, double sigma);

/// Best single beam for a fixed filter c.
JammerStrategy jammer_given_filter(const ChannelRealization& ch, const ReceiveFilter& c,
                                   double sigma);

/// Best filter for a fixed strategy:  top_gen_eig_rank1(h_ab, H_jb S H_jb^dagger + sigma I).
ReceiveFilter filter_given_direction(const ChannelRealization& ch, const JammerStrategy& s,
                                     double sigma);

/// Filter matched to h_ab (maximal ratio combining).
ReceiveFilter mrc_filter(const ChannelRealization& ch);

SnrEvaluation scheme_c_mrc(const ChannelRealization& ch, double sigma);
SnrEvaluation scheme_v_willie(const ChannelRealization& ch, double sigma);

/// Bob nulls the AN (requires M > N); jammer beams toward Willie.
SnrEvaluation scheme_bob_cancels(const ChannelRealization& ch, double sigma);

/// Jammer nulls its AN at Bob (requires N > M); Bob uses MRC.
SnrEvaluation scheme_jammer_cancels(const ChannelRealization& ch, double sigma);

bool bob_cancels_applicable(int N, int M);
bool jammer_cancels_applicable(int N, int M);

JammerStrategy jammer_no_csi_isotropic(int N);

/// No CSI of Willie, Bob fixed to MRC: null-space of H_jb^dagger c* versus
/// full space, chosen by direct comparison of objective_no_csi_filtered.
JammerStrategy jammer_no_csi_bob_mrc(const ChannelRealization& ch, double sigma);

// ---- coupled problem -----------------------------------------------------

struct GlobalOptOptions {
  int restarts = 8;
  double tol = 1e-9;
  int max_iter = 500;
  std::uint64_t seed = 0;  // random restart filters
  bool record_trace = false;
};

struct GlobalOptResult {
  SnrEvaluation evaluation;
  bool converged = true;
  int iterations = 0;  // of the winning start
  /// Objective after every half-step, one vector per start (if recorded).
  std::vector<std::vector<double>> traces;
};

/// Alternating maximization over a single beam v and filter c.  Each
/// half-step is the closed-form argmax for the other variable held fixed,
/// so the objective never decreases within a run.  Starts: MRC filter,
/// the v-willie filter, the bob-cancels filter when M > N, then random
/// unit filters up to `restarts` in total.
GlobalOptResult global_opt_alternating(const ChannelRealization& ch, double sigma,
                                       const GlobalOptOptions& options = {});

}  // namespace covjam
