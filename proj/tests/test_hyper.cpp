#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hcx/hyper.hpp"
#include "oracle.hpp"

using namespace hcx;
using oracle::MatrixXd;
using oracle::VectorXd;

namespace {

double nijenhuis_norm(const oracle::Bracket& br, const MatrixXd& A) {
  double worst = 0;
  const auto n = br.dim();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const VectorXd x = VectorXd::Unit(n, i), y = VectorXd::Unit(n, j);
      const VectorXd N = br(x, y) + A * br(A * x, y) + A * br(x, A * y) - br(A * x, A * y);
      worst = std::max(worst, N.norm());
    }
  return worst;
}

double hermitian_defect(const MatrixXd& h, const MatrixXd& A) { return (A.transpose() * h * A - h).norm(); }

// Hamilton's table for (1, i, j, k), written out by hand.
VectorXd hamilton(const VectorXd& p, const VectorXd& q) {
  VectorXd r(4);
  r(0) = p(0) * q(0) - p(1) * q(1) - p(2) * q(2) - p(3) * q(3);
  r(1) = p(0) * q(1) + p(1) * q(0) + p(2) * q(3) - p(3) * q(2);
  r(2) = p(0) * q(2) - p(1) * q(3) + p(2) * q(0) + p(3) * q(1);
  r(3) = p(0) * q(3) + p(1) * q(2) - p(2) * q(1) + p(3) * q(0);
  return r;
}

}  // namespace

TEST_CASE("Joyce structure: quaternion relations, integrability, Hermitian Killing form") {
  const auto H = hyper::build_joyce_su3();
  const oracle::Bracket br(H.algebra);
  const MatrixXd I = oracle::to_eigen(H.I), J = oracle::to_eigen(H.J), K = oracle::to_eigen(H.K);
  const MatrixXd id = MatrixXd::Identity(8, 8);
  CHECK((I * I + id).norm() < 1e-14);
  CHECK((J * J + id).norm() < 1e-14);
  CHECK((I * J - K).norm() < 1e-14);
  CHECK((J * I + K).norm() < 1e-14);
  CHECK(nijenhuis_norm(br, I) < 1e-12);
  CHECK(nijenhuis_norm(br, J) < 1e-12);
  CHECK(nijenhuis_norm(br, K) < 1e-12);
  const MatrixXd h = br.killing();
  CHECK(hermitian_defect(h, I) < 1e-10);
  CHECK(hermitian_defect(h, J) < 1e-10);
  CHECK(hermitian_defect(h, K) < 1e-10);

  const Report rep = hyper::verify_hypercomplex(H);
  CHECK(rep.summary().failed == 0);
  CHECK(rep.summary().skipped == 0);
}

TEST_CASE("Joyce adapted basis is isomorphic to su(3)") {
  const auto H = hyper::build_joyce_su3();
  const MatrixXd h = oracle::Bracket(H.algebra).killing();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(h);
  CHECK(es.eigenvalues().maxCoeff() < 0);  // compact and semisimple
  // dimension 8 with a rank-2 Cartan: a generic ad has a 2-dimensional kernel
  const oracle::Bracket br(H.algebra);
  VectorXd x(8);
  x << 0.3, -0.7, 0.11, 0.5, -0.2, 0.9, 0.4, -0.6;
  CHECK(8 - oracle::rank(br.ad(x)) == 2);
}

TEST_CASE("Euler normalisation and frozen convention") {
  const auto H = hyper::build_joyce_su3();
  REQUIRE(H.convention.has_value());
  CHECK(exact::to_string(H.convention->alpha_squared) == "1/3");
  const auto j = hyper::to_json(H);
  CHECK(j.contains("alpha"));
  CHECK(j.contains("sign_choices"));
  // (ad E)^2 on g1 is a negative multiple of the identity
  const oracle::Bracket br(H.algebra);
  const MatrixXd adE = br.ad(oracle::to_eigen(H.euler));
  MatrixXd g1(8, 4);
  for (std::size_t k = 0; k < 4; ++k) g1.col(k) = VectorXd::Unit(8, H.g1[k]);
  const MatrixXd sq = g1.transpose() * adE * adE * g1;
  CHECK((sq - sq(0, 0) * MatrixXd::Identity(4, 4)).norm() < 1e-12);
  CHECK(sq(0, 0) < 0);
}

TEST_CASE("standard basis with alpha = 1 is integrable but not Hermitian") {
  const auto S = hyper::joyce_su3_standard_basis(exact::Rat(1));
  const oracle::Bracket br(S.algebra);
  CHECK(nijenhuis_norm(br, oracle::to_eigen(S.I)) < 1e-12);
  CHECK(nijenhuis_norm(br, oracle::to_eigen(S.J)) < 1e-12);
  CHECK(hermitian_defect(br.killing(), oracle::to_eigen(S.I)) > 1e-3);
  const Report rep = hyper::verify_hypercomplex(S, "s");
  CHECK(rep.find("s.killing_hermitian_I")->status == Status::fail);
  CHECK(rep.find("s.nijenhuis_I")->status == Status::pass);
}

TEST_CASE("random conjugate of a complex structure is not integrable") {
  const auto H = hyper::build_joyce_su3();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> dist(-2, 2);
  exact::Mat A0(8, 8), P(8, 8);
  for (std::size_t k = 0; k < 8; k += 2) {
    A0(k + 1, k) = 1;
    A0(k, k + 1) = -1;
  }
  std::optional<exact::Mat> Pi;
  while (!Pi) {
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c) P(r, c) = dist(rng);
    Pi = exact::inverse(P);
  }
  const exact::Mat A = P * A0 * *Pi;
  CHECK(A * A == -exact::Mat::identity(8));
  CHECK(nijenhuis_norm(oracle::Bracket(H.algebra), oracle::to_eigen(A)) > 1e-6);
  bool nonzero = false;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (!exact::is_zero(std::span<const exact::Rat>(hyper::nijenhuis(H, A, exact::unit(8, i), exact::unit(8, j)))))
        nonzero = true;
  CHECK(nonzero);
}

TEST_CASE("J negated on g1 breaks IJ = K") {
  auto H = hyper::build_joyce_su3();
  for (auto r : H.g1)
    for (auto c : H.g1) H.J(r, c) = -H.J(r, c);
  const Report rep = hyper::verify_hypercomplex(H, "m");
  CHECK(rep.find("m.quaternion.IJ_eq_K")->status == Status::fail);
}

TEST_CASE("Hopf instance is the quaternion commutator algebra") {
  const auto H = hyper::build_hopf_g0();
  REQUIRE(H.dim() == 4);
  CHECK(H.g1.empty());
  const oracle::Bracket br(H.algebra);
  for (Eigen::Index a = 0; a < 4; ++a)
    for (Eigen::Index b = 0; b < 4; ++b) {
      const VectorXd x = VectorXd::Unit(4, a), y = VectorXd::Unit(4, b);
      CHECK((br(x, y) - (hamilton(x, y) - hamilton(y, x))).norm() < 1e-14);
      CHECK((oracle::to_eigen(H.I) * y - hamilton(VectorXd::Unit(4, 1), y)).norm() < 1e-14);
      CHECK((oracle::to_eigen(H.J) * y - hamilton(VectorXd::Unit(4, 2), y)).norm() < 1e-14);
    }
  CHECK(nijenhuis_norm(br, oracle::to_eigen(H.I)) < 1e-14);
  const Report rep = hyper::verify_hypercomplex(H);
  CHECK(rep.summary().failed == 0);
}

TEST_CASE("quaternion product helper") {
  using Q = std::array<exact::Rat, 4>;
  const Q i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  CHECK(hyper::quaternion_product(i, j) == k);
  CHECK(hyper::quaternion_product(j, i) == Q{0, 0, 0, -1});
  CHECK(hyper::quaternion_product(i, i) == Q{-1, 0, 0, 0});
}
