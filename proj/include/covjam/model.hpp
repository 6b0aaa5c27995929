#pragma once

#include <cstdint>
#include <random>

#include "covjam/numerics.hpp"

namespace covjam {

struct SystemParams {
  double epsilon = 0.1;   // covertness requirement, P_MD + P_FA >= 1 - epsilon
  int n = 100;            // channel uses per slot
  double p_max = 1.0;     // jammer power is Uniform[0, p_max] per slot
  double sigma_w2 = 1.0;  // Willie noise variance
  double sigma_b2 = 1.0;  // Bob noise variance
  int M = 1;              // Bob antennas
  int N = 4;              // jammer antennas

  /// Throws std::invalid_argument on any out-of-range field.
  void validate() const;
};

/// One block-fading draw.  H_jb is M x N.
struct ChannelRealization {
  Complex h_aw;
  CVector h_ab;
  CVector h_jw;
  CMatrix H_jb;

  int M() const noexcept { return static_cast<int>(H_jb.rows()); }
  int N() const noexcept { return static_cast<int>(H_jb.cols()); }

  /// For M == 1: the vector h_jb with interference power h_jb^dagger S h_jb,
  /// i.e. the conjugate transpose of the single row of H_jb.
  CVector h_jb() const;
};

/// AN covariance shape: orthonormal directions V (N x d) and power fractions
/// xi summing to one.  Covariance at total power P_j is P_j V diag(xi) V^dagger.
class JammerStrategy {
 public:
  const CMatrix& V() const noexcept { return v_; }
  const RVector& xi() const noexcept { return xi_; }
  int d() const noexcept { return static_cast<int>(v_.cols()); }
  int N() const noexcept { return static_cast<int>(v_.rows()); }

  bool is_single_direction() const noexcept { return v_.cols() == 1; }
  bool is_equal_power(double tol = 1e-12) const;

  /// V diag(xi) V^dagger, the covariance at unit total power.
  CMatrix shape() const;

  /// The first column; only meaningful for single-direction strategies.
  CVector direction() const { return v_.col(0); }

 private:
  friend JammerStrategy make_strategy(const CMatrix& v, const RVector& xi);
  JammerStrategy(CMatrix v, RVector xi) : v_(std::move(v)), xi_(std::move(xi)) {}

  CMatrix v_;
  RVector xi_;
};

/// Validates and normalizes: V must be orthonormal within 1e-8 (it is then
/// re-orthonormalized), xi nonnegative with positive sum (rescaled to sum 1).
JammerStrategy make_strategy(const CMatrix& v, const RVector& xi);

/// Single beam along v (normalized internally).
JammerStrategy single_beam(const CVector& v);

/// Equal power over the columns of v.
JammerStrategy equal_power(const CMatrix& v);

/// P_j V X V^dagger.
CMatrix covariance(const JammerStrategy& s, double p_j);

struct NoiseVariancePair {
  double sigma0;  // Willie's received variance under H0
  double sigma1;  // ... under H1
};

// ---- seeded sampling ------------------------------------------------------

using Rng = std::mt19937_64;

/// SplitMix64 finalizer over (master, stream).  Substream k of a run is
/// derive_seed(master, k) so results never depend on how work is split.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

Rng make_rng(std::uint64_t seed);

/// Circularly-symmetric CN(0, 1): real and imaginary parts N(0, 1/2).
Complex complex_gaussian(Rng& rng);
CVector complex_gaussian_vector(Rng& rng, Eigen::Index n);

/// Draws a ChannelRealization with i.i.d. CN(0, 1) entries in the order
/// h_aw, h_ab, h_jw, H_jb (row-major).
ChannelRealization sample_channel(std::uint64_t seed, const SystemParams& params);

/// Haar-distributed N x d matrix with orthonormal columns.
CMatrix random_orthonormal(Rng& rng, int n, int d);

/// Uniform unit vector in C^n.
CVector random_unit_vector(Rng& rng, int n);

}  // namespace covjam
