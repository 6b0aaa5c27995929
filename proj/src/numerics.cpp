#include "covjam/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "covjam/errors.hpp"

namespace covjam {

namespace {

void require_square(const CMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DimensionError(std::string(what) + ": matrix must be square and non-empty");
  }
}

void require_hermitian(const CMatrix& a, const char* what) {
  if (hermitian_defect(a) > tol::kHermitian) {
    throw MatrixError(std::string(what) + ": matrix is not Hermitian");
  }
}

}  // namespace

SubspaceBasis::SubspaceBasis(CMatrix columns) : columns_(std::move(columns)) {
  if (columns_.cols() > columns_.rows()) {
    throw DimensionError("SubspaceBasis: more columns than ambient dimension");
  }
  if (columns_.cols() > 0) {
    const CMatrix gram = columns_.adjoint() * columns_;
    const CMatrix eye = CMatrix::Identity(gram.rows(), gram.cols());
    if ((gram - eye).cwiseAbs().maxCoeff() > tol::kOrthonormal) {
      throw MatrixError("SubspaceBasis: columns are not orthonormal");
    }
  }
}

CVector SubspaceBasis::project(const CVector& x) const {
  if (x.size() != ambient_dim()) {
    throw DimensionError("SubspaceBasis::project: dimension mismatch");
  }
  return columns_ * (columns_.adjoint() * x);
}

double hermitian_defect(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  return (a - a.adjoint()).cwiseAbs().maxCoeff() / scale;
}

double quadform(const CVector& h, const CMatrix& a) {
  require_square(a, "quadform");
  if (h.size() != a.rows()) {
    throw DimensionError("quadform: vector length " + std::to_string(h.size()) +
                         " does not match matrix order " + std::to_string(a.rows()));
  }
  require_hermitian(a, "quadform");
  const double value = h.dot(a * h).real();  // dot() conjugates the left operand
  if (value >= 0.0) return value;
  const double scale = std::max(1.0, h.squaredNorm() * a.cwiseAbs().maxCoeff());
  if (value >= -tol::kPsdClamp * scale) return 0.0;
  throw MatrixError("quadform: matrix is not positive semidefinite");
}

CVector top_gen_eig_rank1(const CVector& w, const CMatrix& b) {
  require_square(b, "top_gen_eig_rank1");
  if (w.size() != b.rows()) {
    throw DimensionError("top_gen_eig_rank1: dimension mismatch");
  }
  require_hermitian(b, "top_gen_eig_rank1");
  if (w.squaredNorm() == 0.0) {
    throw DegenerateError("top_gen_eig_rank1: zero numerator vector");
  }

  const CMatrix sym = 0.5 * (b + b.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(sym, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(hi > 0.0) || lo < tol::kSingular * hi) {
    throw MatrixError("top_gen_eig_rank1: B is singular or not positive definite");
  }

  Eigen::LLT<CMatrix> llt(sym);
  if (llt.info() != Eigen::Success) {
    throw MatrixError("top_gen_eig_rank1: Cholesky factorization failed");
  }
  return normalize_phase(llt.solve(w));
}

SubspaceBasis nullspace_basis(const CMatrix& a) {
  const Eigen::Index n = a.cols();
  if (n == 0) throw DimensionError("nullspace_basis: matrix has no columns");

  Eigen::Index rank = 0;
  CMatrix v;
  if (a.rows() == 0) {
    v = CMatrix::Identity(n, n);
  } else {
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double smax = s.size() > 0 ? s(0) : 0.0;
    const double cut = static_cast<double>(std::max(a.rows(), a.cols())) * 1e-13 * smax;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (s(i) > cut) ++rank;
    }
    v = svd.matrixV();
  }
  if (rank == n) {
    throw DegenerateError("nullspace_basis: matrix has full column rank");
  }

  CMatrix basis = v.rightCols(n - rank);
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    basis.col(j) = normalize_phase(basis.col(j));
  }
  return SubspaceBasis(std::move(basis));
}

CVector project_unit(const CVector& x, const SubspaceBasis& q) {
  if (q.empty()) throw DegenerateError("project_unit: empty subspace");
  const CVector p = q.project(x);
  const double xn = x.norm();
  if (xn == 0.0 || p.norm() <= 1e-12 * xn) {
    throw DegenerateError("project_unit: vector is orthogonal to the subspace");
  }
  return normalize_phase(p);
}

CVector normalize_phase(const CVector& v) {
  const double n = v.norm();
  if (v.size() == 0 || !(n > 0.0) || !std::isfinite(n)) {
    throw DegenerateError("normalize_phase: zero or non-finite vector");
  }
  CVector u = v / n;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const double m = std::abs(u(i));
    if (m > 1e-12) {
      u *= std::conj(u(i)) / m;
      u(i) = Complex(m, 0.0);
      break;
    }
  }
  return u;
}

}  // namespace covjam
