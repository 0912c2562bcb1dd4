#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hcx/errors.hpp"
#include "hcx/obata.hpp"
#include "oracle.hpp"

using namespace hcx;
using oracle::MatrixXd;
using oracle::VectorXd;

namespace {

// Float system for torsion-free + nabla A = 0 over the 512 entries of
// Lambda; unknown (i, r, c) is entry (r, c) of Lambda_{e_i}.
Eigen::Index nullity(const hyper::HypercomplexLieAlgebra& H, bool use_j) {
  const Eigen::Index n = static_cast<Eigen::Index>(H.dim());
  auto idx = [n](Eigen::Index i, Eigen::Index r, Eigen::Index c) { return i * n * n + r * n + c; };
  std::vector<MatrixXd> structures{oracle::to_eigen(H.I)};
  if (use_j) structures.push_back(oracle::to_eigen(H.J));
  const Eigen::Index rows = n * (n - 1) / 2 * n + static_cast<Eigen::Index>(structures.size()) * n * n * n;
  MatrixXd sys = MatrixXd::Zero(rows, n * n * n);
  Eigen::Index row = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      for (Eigen::Index r = 0; r < n; ++r, ++row) {
        sys(row, idx(i, r, j)) += 1;
        sys(row, idx(j, r, i)) -= 1;
      }
  for (const auto& A : structures)
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c, ++row) {
          // (Lambda A - A Lambda)(r, c)
          for (Eigen::Index m = 0; m < n; ++m) {
            sys(row, idx(i, r, m)) += A(m, c);
            sys(row, idx(i, m, c)) -= A(r, m);
          }
        }
  return n * n * n - oracle::rank(sys);
}

MatrixXd lam(const obata::Connection& C, Eigen::Index i) { return oracle::to_eigen(C.lambda[static_cast<std::size_t>(i)]); }

}  // namespace

TEST_CASE("Obata connection is torsion free and parallelises I, J, K") {
  const auto H = hyper::build_joyce_su3();
  const auto C = obata::obata_lambda(H);
  const oracle::Bracket br(H.algebra);
  const MatrixXd I = oracle::to_eigen(H.I), J = oracle::to_eigen(H.J), K = oracle::to_eigen(H.K);
  for (Eigen::Index i = 0; i < 8; ++i) {
    CHECK(oracle::commutator(lam(C, i), I).norm() < 1e-12);
    CHECK(oracle::commutator(lam(C, i), J).norm() < 1e-12);
    CHECK(oracle::commutator(lam(C, i), K).norm() < 1e-12);
    for (Eigen::Index j = 0; j < 8; ++j) {
      const VectorXd torsion = lam(C, i).col(j) - lam(C, j).col(i) - br(VectorXd::Unit(8, i), VectorXd::Unit(8, j));
      CHECK(torsion.norm() < 1e-12);
    }
  }
}

TEST_CASE("the connection is unique and the solver reproduces the closed form") {
  const auto H = hyper::build_joyce_su3();
  CHECK(nullity(H, true) == 0);
  const auto U = obata::solve_unique_connection(H);
  CHECK(U.unknowns == 512);
  CHECK(U.rank == 512);
  CHECK(U.matches_formula);
  CHECK(U.connection == obata::obata_lambda(H));
}

TEST_CASE("dropping nabla J leaves a large solution space") {
  const auto H = hyper::build_joyce_su3();
  obata::Constraints c;
  c.nabla_J = false;
  const auto d = obata::solution_dimension(H, c);
  REQUIRE(d.has_value());
  CHECK(static_cast<Eigen::Index>(*d) == nullity(H, false));
  CHECK(*d > 0);
}

TEST_CASE("Euler field package") {
  const auto H = hyper::build_joyce_su3();
  const auto C = obata::obata_lambda(H);
  const VectorXd E = oracle::to_eigen(H.euler);
  // nabla_X E = X
  for (Eigen::Index i = 0; i < 8; ++i) CHECK((lam(C, i) * E - VectorXd::Unit(8, i)).norm() < 1e-12);
  CHECK(obata::parallel_field_dimension(C) == 0);
  const Report rep = obata::euler_report(H, C);
  CHECK(rep.summary().failed == 0);
  CHECK(rep.summary().skipped == 0);
  const Report conn = obata::verify_connection(H, C);
  CHECK(conn.summary().failed == 0);
}

TEST_CASE("Hopf connection is minus right multiplication") {
  const auto H = hyper::build_hopf_g0();
  const auto C = obata::obata_lambda(H);
  // (a, b) -> coordinates of -e_b e_a, from Hamilton's table
  const int table[4][4][2] = {{{0, 1}, {1, 1}, {2, 1}, {3, 1}},
                              {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
                              {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
                              {{3, 1}, {2, 1}, {1, -1}, {0, -1}}};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const auto [k, s] = table[b][a];
      exact::Vec expect = exact::zeros(4);
      expect[k] = -s;
      CHECK(obata::nabla(C, exact::unit(4, a), exact::unit(4, b)) == expect);
    }
  CHECK(obata::solve_unique_connection(H).matches_formula);
}

TEST_CASE("a structure with a nonzero Nijenhuis tensor admits no such connection") {
  auto H = hyper::build_joyce_su3();
  // swap I for a non-integrable complex structure: conjugate by a shear
  exact::Mat P = exact::Mat::identity(8);
  P(0, 5) = 1;
  P(4, 1) = 2;
  const exact::Mat I2 = P * H.I * *exact::inverse(P);
  H.I = I2;
  H.K = H.I * H.J;
  CHECK_THROWS_AS(obata::solve_unique_connection(H), ConstructionError);
}
