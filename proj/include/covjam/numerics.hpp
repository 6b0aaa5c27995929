#pragma once

#include <complex>

#include <Eigen/Dense>

namespace covjam {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kHermitian = 1e-9;
inline constexpr double kNullResidual = 1e-10;
inline constexpr double kPsdClamp = 1e-12;
inline constexpr double kSingular = 1e-12;
inline constexpr double kOrthonormal = 1e-10;
}  // namespace tol

/// Orthonormal basis of a subspace of C^n, stored as the columns of an
/// n x k matrix.  Constructing one checks orthonormality to 1e-10.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(CMatrix columns);

  const CMatrix& columns() const noexcept { return columns_; }
  Eigen::Index ambient_dim() const noexcept { return columns_.rows(); }
  Eigen::Index size() const noexcept { return columns_.cols(); }
  bool empty() const noexcept { return columns_.cols() == 0; }

  /// Orthogonal projector Q Q^dagger applied to x.
  CVector project(const CVector& x) const;

 private:
  CMatrix columns_;
};

/// max |A - A^dagger| entrywise, relative to max(1, max|A|).
double hermitian_defect(const CMatrix& a);

/// h^dagger A h for Hermitian PSD A.  Round-off negatives are clamped to 0.
double quadform(const CVector& h, const CMatrix& a);

/// Unit vector maximizing (v^dagger w w^dagger v) / (v^dagger B v).
///
/// Because the numerator matrix has rank one, the dominant eigenvector of
/// B^{-1} w w^dagger is B^{-1} w itself; this solves one Hermitian PD system
/// instead of running an eigensolver.  Result is phase-normalized.
CVector top_gen_eig_rank1(const CVector& w, const CMatrix& b);

/// Orthonormal basis of {x : A x = 0}.  Throws DegenerateError when A has
/// full column rank.
SubspaceBasis nullspace_basis(const CMatrix& a);

/// Unit vector in span(Q) closest in direction to x, i.e. Q Q^dagger x
/// normalized.  Maximizes |y^dagger x| over unit y in span(Q).
CVector project_unit(const CVector& x, const SubspaceBasis& q);

/// Scales v to unit norm and rotates its phase so that the first entry of
/// modulus > 1e-12 is real positive.
CVector normalize_phase(const CVector& v);

}  // namespace covjam
