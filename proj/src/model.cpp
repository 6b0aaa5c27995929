#include "covjam/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "covjam/errors.hpp"

namespace covjam {

void SystemParams::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  if (n < 1) throw std::invalid_argument("n must be a positive integer");
  if (!(p_max > 0.0)) throw std::invalid_argument("p_max must be positive");
  if (!(sigma_w2 > 0.0)) throw std::invalid_argument("sigma_w2 must be positive");
  if (!(sigma_b2 > 0.0)) throw std::invalid_argument("sigma_b2 must be positive");
  if (M < 1 || N < 1) throw std::invalid_argument("antenna counts must be >= 1");
}

CVector ChannelRealization::h_jb() const {
  if (H_jb.rows() != 1) {
    throw DimensionError("h_jb is only defined for a single-antenna Bob");
  }
  return H_jb.row(0).adjoint();
}

bool JammerStrategy::is_equal_power(double tol) const {
  const double target = 1.0 / static_cast<double>(xi_.size());
  return (xi_.array() - target).abs().maxCoeff() <= tol;
}

CMatrix JammerStrategy::shape() const {
  CMatrix s = v_ * xi_.cast<Complex>().asDiagonal() * v_.adjoint();
  return 0.5 * (s + s.adjoint());
}

JammerStrategy make_strategy(const CMatrix& v, const RVector& xi) {
  if (v.cols() < 1 || v.rows() < 1) {
    throw DimensionError("make_strategy: V must have at least one column");
  }
  if (v.cols() > v.rows()) {
    throw DimensionError("make_strategy: more directions than antennas");
  }
  if (xi.size() != v.cols()) {
    throw DimensionError("make_strategy: xi length must equal the number of columns of V");
  }
  if (!v.allFinite() || !xi.allFinite()) {
    throw std::invalid_argument("make_strategy: non-finite input");
  }
  if ((xi.array() < 0.0).any()) {
    throw std::invalid_argument("make_strategy: negative power fraction");
  }
  const double total = xi.sum();
  if (!(total > 0.0)) throw std::invalid_argument("make_strategy: power fractions sum to zero");

  // Modified Gram-Schmidt keeps each column's direction; only drift is removed.
  CMatrix q = v;
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    for (Eigen::Index k = 0; k < j; ++k) {
      q.col(j) -= q.col(k).dot(q.col(j)) * q.col(k);
    }
    const double nrm = q.col(j).norm();
    if (nrm < 1e-10) throw DegenerateError("make_strategy: V has dependent columns");
    q.col(j) /= nrm;
  }
  const CMatrix gram = v.adjoint() * v;
  if ((gram - CMatrix::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff() > 1e-8) {
    throw std::invalid_argument("make_strategy: columns of V are not orthonormal");
  }
  return JammerStrategy(std::move(q), xi / total);
}

JammerStrategy single_beam(const CVector& v) {
  const double n = v.norm();
  if (!(n > 0.0)) throw DegenerateError("single_beam: zero direction");
  return make_strategy(CMatrix(v / n), RVector::Ones(1));
}

JammerStrategy equal_power(const CMatrix& v) {
  return make_strategy(v, RVector::Ones(v.cols()));
}

CMatrix covariance(const JammerStrategy& s, double p_j) {
  if (!(p_j >= 0.0)) throw std::invalid_argument("covariance: negative jammer power");
  return p_j * s.shape();
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng make_rng(std::uint64_t seed) { return Rng(seed); }

Complex complex_gaussian(Rng& rng) {
  std::normal_distribution<double> half(0.0, std::sqrt(0.5));
  const double re = half(rng);
  const double im = half(rng);
  return {re, im};
}

CVector complex_gaussian_vector(Rng& rng, Eigen::Index n) {
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = complex_gaussian(rng);
  return v;
}

ChannelRealization sample_channel(std::uint64_t seed, const SystemParams& params) {
  params.validate();
  Rng rng = make_rng(seed);
  ChannelRealization ch;
  ch.h_aw = complex_gaussian(rng);
  ch.h_ab = complex_gaussian_vector(rng, params.M);
  ch.h_jw = complex_gaussian_vector(rng, params.N);
  ch.H_jb.resize(params.M, params.N);
  for (int r = 0; r < params.M; ++r) {
    for (int c = 0; c < params.N; ++c) ch.H_jb(r, c) = complex_gaussian(rng);
  }
  return ch;
}

CMatrix random_orthonormal(Rng& rng, int n, int d) {
  if (d < 1 || d > n) throw DimensionError("random_orthonormal: need 1 <= d <= n");
  CMatrix g(n, d);
  for (int c = 0; c < d; ++c) g.col(c) = complex_gaussian_vector(rng, n);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, d);
  const CMatrix& r = qr.matrixQR();
  for (int c = 0; c < d; ++c) {
    const double m = std::abs(r(c, c));
    if (m > 0.0) q.col(c) *= r(c, c) / m;
  }
  return q;
}

CVector random_unit_vector(Rng& rng, int n) {
  CVector v = complex_gaussian_vector(rng, n);
  return v / v.norm();
}

}  // namespace covjam
