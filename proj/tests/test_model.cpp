#include "doctest.h"

#include <set>

#include "covjam/errors.hpp"
#include "covjam/model.hpp"

using namespace covjam;

TEST_CASE("SystemParams validation") {
  SystemParams p;
  CHECK_NOTHROW(p.validate());
  for (double eps : {0.0, 1.0, -0.1}) {
    SystemParams q;
    q.epsilon = eps;
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
  }
  SystemParams q;
  q.p_max = 0.0;
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
  q = {};
  q.N = 0;
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
  q = {};
  q.n = 0;
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
}

TEST_CASE("make_strategy normalizes power fractions and keeps directions") {
  const CMatrix v = CMatrix::Identity(4, 2);
  RVector xi(2);
  xi << 3.0, 1.0;
  const JammerStrategy s = make_strategy(v, xi);
  CHECK(s.xi().sum() == doctest::Approx(1.0));
  CHECK(s.xi()(0) == doctest::Approx(0.75));
  CHECK(s.d() == 2);
  CHECK(s.N() == 4);
  CHECK_FALSE(s.is_equal_power());
  CHECK(s.shape().trace().real() == doctest::Approx(1.0));
  CHECK(s.shape()(0, 0).real() == doctest::Approx(0.75));
}

TEST_CASE("make_strategy rejects bad input") {
  RVector two = RVector::Ones(2);
  CHECK_THROWS_AS(make_strategy(CMatrix::Identity(3, 2), RVector::Ones(3)), DimensionError);
  CHECK_THROWS_AS(make_strategy(CMatrix::Identity(2, 3), RVector::Ones(3)), DimensionError);
  RVector neg = two;
  neg(1) = -0.5;
  CHECK_THROWS_AS(make_strategy(CMatrix::Identity(3, 2), neg), std::invalid_argument);
  CHECK_THROWS_AS(make_strategy(CMatrix::Identity(3, 2), RVector::Zero(2)), std::invalid_argument);
  CMatrix dep(3, 2);
  dep.col(0) = CVector::Unit(3, 0);
  dep.col(1) = CVector::Unit(3, 0);
  CHECK_THROWS_AS(make_strategy(dep, two), DegenerateError);
  CMatrix skew = CMatrix::Identity(3, 2);
  skew(0, 1) = 0.3;
  CHECK_THROWS_AS(make_strategy(skew, two), std::invalid_argument);
}

TEST_CASE("single_beam is unit norm and single direction") {
  CVector v(3);
  v << Complex(3, 0), Complex(0, 4), Complex(0, 0);
  const JammerStrategy s = single_beam(v);
  CHECK(s.is_single_direction());
  CHECK(s.direction().norm() == doctest::Approx(1.0));
  CHECK(s.shape().trace().real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(single_beam(CVector::Zero(3)), DegenerateError);
}

TEST_CASE("covariance scales the shape by the jammer power") {
  const JammerStrategy s = equal_power(CMatrix::Identity(3, 3));
  CHECK(covariance(s, 2.0).trace().real() == doctest::Approx(2.0));
  CHECK_THROWS_AS(covariance(s, -1.0), std::invalid_argument);
}

TEST_CASE("sample_channel is deterministic per seed and has the right shape") {
  SystemParams p;
  p.N = 3;
  p.M = 2;
  const ChannelRealization a = sample_channel(7, p);
  const ChannelRealization b = sample_channel(7, p);
  const ChannelRealization c = sample_channel(8, p);
  CHECK(a.h_aw == b.h_aw);
  CHECK(a.H_jb == b.H_jb);
  CHECK(a.h_jw == b.h_jw);
  CHECK(a.h_aw != c.h_aw);
  CHECK(a.N() == 3);
  CHECK(a.M() == 2);
  CHECK(a.h_ab.size() == 2);
  CHECK_THROWS_AS(a.h_jb(), DimensionError);
}

TEST_CASE("h_jb is the conjugated single row of H_jb") {
  SystemParams p;
  p.N = 4;
  const ChannelRealization ch = sample_channel(1, p);
  const CVector h = ch.h_jb();
  // h^H x == H_jb x for every x.
  const CVector x = CVector::LinSpaced(4, 1.0, 4.0);
  CHECK(std::abs(h.dot(x) - (ch.H_jb * x)(0)) < 1e-14);
}

TEST_CASE("complex Gaussian entries have unit power split evenly") {
  Rng rng = make_rng(2024);
  const int n = 200000;
  double p = 0, re2 = 0, im2 = 0, cross = 0;
  Complex mean{0, 0};
  for (int i = 0; i < n; ++i) {
    const Complex z = complex_gaussian(rng);
    p += std::norm(z);
    re2 += z.real() * z.real();
    im2 += z.imag() * z.imag();
    cross += z.real() * z.imag();
    mean += z;
  }
  // Standard errors: E|z|^2 has sd 1, so 1/sqrt(n) ~ 0.0022.
  CHECK(p / n == doctest::Approx(1.0).epsilon(0.012));
  CHECK(re2 / n == doctest::Approx(0.5).epsilon(0.02));
  CHECK(im2 / n == doctest::Approx(0.5).epsilon(0.02));
  CHECK(std::abs(cross / n) < 0.006);
  CHECK(std::abs(mean / static_cast<double>(n)) < 0.008);
}

TEST_CASE("derive_seed separates streams") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t m = 0; m < 20; ++m) {
    for (std::uint64_t k = 0; k < 50; ++k) seen.insert(derive_seed(m, k));
  }
  CHECK(seen.size() == 1000);
  CHECK(derive_seed(5, 9) == derive_seed(5, 9));
}

TEST_CASE("random_orthonormal has orthonormal columns") {
  Rng rng = make_rng(31);
  for (int d = 1; d <= 4; ++d) {
    const CMatrix q = random_orthonormal(rng, 4, d);
    CHECK((q.adjoint() * q - CMatrix::Identity(d, d)).norm() < 1e-12);
  }
  CHECK_THROWS_AS(random_orthonormal(rng, 3, 4), DimensionError);
}

TEST_CASE("random_orthonormal directions are isotropic") {
  // For a Haar vector in C^4, E|q_0|^2 = 1/4.
  Rng rng = make_rng(32);
  const int n = 40000;
  double acc = 0;
  for (int i = 0; i < n; ++i) acc += std::norm(random_orthonormal(rng, 4, 2)(0, 1));
  // sd of |q_0|^2 is sqrt(3/80) ~ 0.19.
  CHECK(acc / n == doctest::Approx(0.25).epsilon(0.02));
}

TEST_CASE("random_unit_vector is unit norm") {
  Rng rng = make_rng(33);
  CHECK(random_unit_vector(rng, 5).norm() == doctest::Approx(1.0));
}
