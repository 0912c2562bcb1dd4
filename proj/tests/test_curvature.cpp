#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hcx/curvature.hpp"
#include "oracle.hpp"

using namespace hcx;
using oracle::MatrixXd;
using oracle::VectorXd;

namespace {

struct FloatCurvature {
  std::vector<MatrixXd> lambda;
  oracle::Bracket br;

  FloatCurvature(const hyper::HypercomplexLieAlgebra& H, const obata::Connection& C) : br(H.algebra) {
    for (const auto& m : C.lambda) lambda.push_back(oracle::to_eigen(m));
  }

  MatrixXd lam(const VectorXd& x) const {
    MatrixXd out = MatrixXd::Zero(x.size(), x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out += x(i) * lambda[static_cast<std::size_t>(i)];
    return out;
  }

  MatrixXd R(const VectorXd& x, const VectorXd& y) const {
    return oracle::commutator(lam(x), lam(y)) - lam(br(x, y));
  }
};

VectorXd e(Eigen::Index n, Eigen::Index i) { return VectorXd::Unit(n, i); }

}  // namespace

TEST_CASE("exact curvature matches [Lambda_X, Lambda_Y] - Lambda_[X,Y]") {
  const auto H = hyper::build_joyce_su3();
  const auto C = obata::obata_lambda(H);
  const FloatCurvature F(H, C);
  const auto R = curvature::curvature_tensor(H.algebra, C);
  std::vector<MatrixXd> all;
  for (Eigen::Index i = 0; i < 8; ++i)
    for (Eigen::Index j = 0; j < 8; ++j) {
      const MatrixXd f = F.R(e(8, i), e(8, j));
      if (i != j) {
        CHECK((oracle::to_eigen(R.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) - f).norm() < 1e-12);
        all.push_back(f);
      }
    }
  CHECK(oracle::rank(oracle::stack(all)) == 3);
  CHECK(curvature::curvature_rank(R) == 3);
}

TEST_CASE("first Bianchi identity and kernel on the Euler field") {
  const auto H = hyper::build_joyce_su3();
  const FloatCurvature F(H, obata::obata_lambda(H));
  const VectorXd E = oracle::to_eigen(H.euler);
  for (Eigen::Index a = 0; a < 8; ++a)
    for (Eigen::Index b = 0; b < 8; ++b) {
      CHECK((F.R(e(8, a), e(8, b)) * E).norm() < 1e-12);
      for (Eigen::Index c = 0; c < 8; ++c) {
        const VectorXd cyc = F.R(e(8, a), e(8, b)) * e(8, c) + F.R(e(8, b), e(8, c)) * e(8, a) +
                             F.R(e(8, c), e(8, a)) * e(8, b);
        CHECK(cyc.norm() < 1e-12);
      }
    }
}

TEST_CASE("curvature commutes with I, J, K") {
  const auto H = hyper::build_joyce_su3();
  const FloatCurvature F(H, obata::obata_lambda(H));
  const MatrixXd I = oracle::to_eigen(H.I), J = oracle::to_eigen(H.J);
  for (Eigen::Index a = 0; a < 8; ++a)
    for (Eigen::Index b = 0; b < 8; ++b) {
      CHECK(oracle::commutator(F.R(e(8, a), e(8, b)), I).norm() < 1e-12);
      CHECK(oracle::commutator(F.R(e(8, a), e(8, b)), J).norm() < 1e-12);
    }
}

TEST_CASE("curvature checks pass and golden dimensions") {
  const auto H = hyper::build_joyce_su3();
  const auto C = obata::obata_lambda(H);
  const Report rep = curvature::verify_curvature(H, C, {42, 50});
  CHECK(rep.summary().failed == 0);
  CHECK(rep.summary().skipped == 0);
  CHECK(curvature::z_span_dimension(H, C) == 3);
  CHECK(curvature::g1_image_dimension(H, curvature::curvature_tensor(H.algebra, C)) == 4);
}

TEST_CASE("a perturbed connection fails the curvature checks") {
  const auto H = hyper::build_joyce_su3();
  auto C = obata::obata_lambda(H);
  C.lambda[4](5, 6) += 1;
  const Report rep = curvature::verify_curvature(H, C, {42, 10}, "bad");
  CHECK(rep.summary().failed > 0);
}

TEST_CASE("Hopf connection is flat") {
  const auto H = hyper::build_hopf_g0();
  const auto C = obata::obata_lambda(H);
  const FloatCurvature F(H, C);
  for (Eigen::Index a = 0; a < 4; ++a)
    for (Eigen::Index b = 0; b < 4; ++b) CHECK(F.R(e(4, a), e(4, b)).norm() < 1e-14);
  CHECK(curvature::curvature_rank(curvature::curvature_tensor(H.algebra, C)) == 0);
}

TEST_CASE("seeded random vectors are reproducible") {
  CHECK(curvature::random_vectors(8, 5, 42) == curvature::random_vectors(8, 5, 42));
  CHECK(curvature::random_vectors(8, 5, 42) != curvature::random_vectors(8, 5, 43));
}
