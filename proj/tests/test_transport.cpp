#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hcx/errors.hpp"
#include "hcx/transport.hpp"
#include "oracle.hpp"

using namespace hcx;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;

namespace {

// exp of a normal matrix by diagonalisation.
MatrixXcd exp_normal(const MatrixXcd& x) {
  Eigen::ComplexEigenSolver<MatrixXcd> es(x);
  const auto& V = es.eigenvectors();
  return V * es.eigenvalues().array().exp().matrix().asDiagonal() * V.inverse();
}

MatrixXcd random_su3(std::mt19937_64& rng, double norm) {
  std::normal_distribution<double> g;
  MatrixXcd a(3, 3);
  for (Eigen::Index r = 0; r < 3; ++r)
    for (Eigen::Index c = 0; c < 3; ++c) a(r, c) = {g(rng), g(rng)};
  MatrixXcd x = a - a.adjoint();
  x -= (x.trace() / 3.0) * MatrixXcd::Identity(3, 3);
  return x * (norm / x.norm());
}

struct Models {
  hyper::HypercomplexLieAlgebra H = hyper::build_joyce_su3();
  obata::Connection C = obata::obata_lambda(H);
  transport::FloatModel M{H, C};
};

}  // namespace

TEST_CASE("su(3) exponential matches diagonalisation; log inverts it") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const MatrixXcd x = random_su3(rng, 0.05 + 2.0 * t / 50);
    const MatrixXcd u = transport::su3_exp(x);
    CHECK((u - exp_normal(x)).norm() < 1e-12);
    CHECK((u.adjoint() * u - MatrixXcd::Identity(3, 3)).norm() < 1e-12);
    CHECK(std::abs(u.determinant() - 1.0) < 1e-12);
    CHECK((transport::su3_log(u) - x).norm() < 1e-10);
  }
}

TEST_CASE("real expm, sqrtm and logm") {
  MatrixXd s(3, 3);
  s << 0.4, 0.1, -0.2, 0.1, -0.3, 0.05, -0.2, 0.05, 0.7;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(s);
  const MatrixXd ref = es.eigenvectors() * es.eigenvalues().array().exp().matrix().asDiagonal() *
                       es.eigenvectors().transpose();
  const MatrixXd ex = transport::expm(s);
  CHECK((ex - ref).norm() < 1e-12);
  CHECK((transport::logm(ex) - s).norm() < 1e-10);
  const MatrixXd r = transport::sqrtm(ex);
  CHECK((r * r - ex).norm() < 1e-12);
  CHECK((transport::expm(MatrixXd(MatrixXd::Zero(4, 4))) - MatrixXd::Identity(4, 4)).norm() == 0.0);
}

TEST_CASE("log refuses the negative real axis") {
  MatrixXd m = MatrixXd::Identity(2, 2);
  m(0, 0) = -1;
  CHECK_THROWS_AS(transport::logm(m), NumericalDomainError);
  MatrixXcd u = MatrixXcd::Identity(3, 3);
  u(0, 0) = -1;
  u(1, 1) = -1;
  CHECK_THROWS_AS(transport::su3_log(u), NumericalDomainError);
}

TEST_CASE("float model agrees with the exact data") {
  const Models m;
  CHECK((m.M.I() - oracle::to_eigen(m.H.I)).norm() < 1e-14);
  CHECK((m.M.killing() - oracle::Bracket(m.H.algebra).killing()).norm() < 1e-10);
  Eigen::VectorXd x(8);
  x << 0.1, -0.2, 0.3, 0.05, 0.2, -0.1, 0.15, 0.4;
  CHECK((m.M.coordinates(m.M.to_group_algebra(x)) - x).norm() < 1e-12);
  MatrixXd ref = MatrixXd::Zero(8, 8);
  for (Eigen::Index i = 0; i < 8; ++i) ref += x(i) * oracle::to_eigen(m.C.lambda[static_cast<std::size_t>(i)]);
  CHECK((m.M.lambda(x) - ref).norm() < 1e-14);
}

TEST_CASE("loop transport preserves I, J, K and approaches -R/2") {
  const Models m;
  const auto loop = transport::sample_loop(8, 42, 0, 0.1);
  const MatrixXd T = transport::loop_holonomy(m.M, loop);
  CHECK(oracle::commutator(T, m.M.I()).norm() < 1e-10);
  CHECK(oracle::commutator(T, m.M.J()).norm() < 1e-10);
  // float curvature from the definition
  const oracle::Bracket br(m.H.algebra);
  const MatrixXd R = oracle::commutator(m.M.lambda(loop.x), m.M.lambda(loop.y)) - m.M.lambda(br(loop.x, loop.y));
  const MatrixXd lim = transport::curvature_limit(m.M, loop.x, loop.y);
  CHECK((lim + 0.5 * R).norm() / R.norm() < 5e-3);
  CHECK((lim - 0.5 * R).norm() / R.norm() > 0.5);
}

TEST_CASE("sampled loops are deterministic") {
  const auto a = transport::sample_loop(8, 42, 3, 0.1), b = transport::sample_loop(8, 42, 3, 0.1);
  CHECK(a.x == b.x);
  CHECK(a.y == b.y);
  CHECK(transport::sample_loop(8, 42, 4, 0.1).x != a.x);
}

TEST_CASE("dimension estimate") {
  const Models m;
  const auto reference = transport::to_float(holonomy::nomizu_closure(m.H.algebra, m.C).matrices());
  const auto est = transport::estimate_holonomy_dimension(m.M, reference, {200, 0.1, 42, 1e-6});
  CHECK(est.dim == 16);
  CHECK(est.max_quaternion_defect < 1e-8);
  CHECK(est.metric_changed == est.samples_used);
  const auto fine = transport::estimate_holonomy_dimension(m.M, reference, {200, 0.05, 42, 1e-6});
  CHECK(fine.max_principal_angle < 1e-6);

  const auto H = hyper::build_hopf_g0();
  const transport::FloatModel P(H, obata::obata_lambda(H));
  const auto flat = transport::estimate_holonomy_dimension(P, {}, {50, 0.1, 42, 1e-6});
  CHECK(flat.dim == 0);
  CHECK(flat.max_principal_angle == 0.0);
}

TEST_CASE("estimate rejects bad options") {
  const Models m;
  CHECK_THROWS_AS(transport::estimate_holonomy_dimension(m.M, {}, {0, 0.1, 42, 1e-6}), InputError);
  CHECK_THROWS_AS(transport::estimate_holonomy_dimension(m.M, {}, {10, 0.0, 42, 1e-6}), InputError);
  CHECK_THROWS_AS(transport::estimate_holonomy_dimension(m.M, {}, {10, 0.6, 42, 1e-6}), InputError);
  CHECK_THROWS_AS(transport::estimate_holonomy_dimension(m.M, {}, {10, 0.1, 42, 0.0}), InputError);
}
