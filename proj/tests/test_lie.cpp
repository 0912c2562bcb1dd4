#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hcx/errors.hpp"
#include "hcx/lie.hpp"
#include "oracle.hpp"

using namespace hcx;
using oracle::MatrixXcd;

namespace {

const std::complex<double> I1(0, 1);

// su(n) basis written out from the documented recipe.
std::vector<MatrixXcd> su_basis(int n) {
  if (n == 1) return {};
  std::vector<MatrixXcd> out;
  for (const auto& m : su_basis(n - 1)) {
    MatrixXcd big = MatrixXcd::Zero(n, n);
    big.topLeftCorner(n - 1, n - 1) = m;
    out.push_back(big);
  }
  MatrixXcd d = MatrixXcd::Zero(n, n);
  for (int k = 0; k < n - 1; ++k) d(k, k) = I1;
  d(n - 1, n - 1) = -double(n - 1) * I1;
  out.push_back(d);
  for (int k = 0; k < n - 1; ++k) {
    MatrixXcd a = MatrixXcd::Zero(n, n), s = MatrixXcd::Zero(n, n);
    a(k, n - 1) = 1;
    a(n - 1, k) = -1;
    s(k, n - 1) = I1;
    s(n - 1, k) = I1;
    out.push_back(a);
    out.push_back(s);
  }
  return out;
}

// Coordinates of m in the basis, by least squares on real and imaginary parts.
Eigen::VectorXd coords(const std::vector<MatrixXcd>& basis, const MatrixXcd& m) {
  const Eigen::Index n2 = m.size();
  Eigen::MatrixXd A(2 * n2, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    A.col(k).head(n2) = basis[k].real().reshaped();
    A.col(k).tail(n2) = basis[k].imag().reshaped();
  }
  Eigen::VectorXd b(2 * n2);
  b.head(n2) = m.real().reshaped();
  b.tail(n2) = m.imag().reshaped();
  return A.colPivHouseholderQr().solve(b);
}

void check_against_matrices(int n) {
  const auto L = lie::build_su(n);
  const auto basis = su_basis(n);
  REQUIRE(L.dim() == basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto c = coords(basis, basis[i] * basis[j] - basis[j] * basis[i]);
      CHECK((c - oracle::to_eigen(L.structure(i, j))).norm() < 1e-12);
    }
}

}  // namespace

TEST_CASE("su(2) and su(3) structure constants match matrix commutators") {
  check_against_matrices(2);
  check_against_matrices(3);
}

TEST_CASE("su(n) passes the axiom checks") {
  for (int n : {2, 3, 4}) {
    const Report rep = lie::verify_lie_axioms(lie::build_su(n));
    CHECK(rep.summary().failed == 0);
    CHECK(rep.summary().skipped == 0);
  }
}

TEST_CASE("Killing form of su(3) is 6 tr(XY)") {
  const auto L = lie::build_su(3);
  const auto h = lie::killing_form(L);
  const auto basis = su_basis(3);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      CHECK(std::abs(h.gram(i, j).get_d() - 6.0 * (basis[i] * basis[j]).trace().real()) < 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle::to_eigen(h.gram));
  CHECK(es.eigenvalues().maxCoeff() < 0);
}

TEST_CASE("a corrupted structure constant breaks Jacobi") {
  const auto L = lie::build_su(3);
  auto sc = L.constants();
  // keep antisymmetry so only Jacobi can notice
  sc[0][3][4] += 1;
  sc[3][0][4] -= 1;
  const lie::LieAlgebra bad(L.labels(), sc);
  const Report rep = lie::verify_lie_axioms(bad, "bad");
  CHECK(rep.find("bad.antisymmetry")->status == Status::pass);
  CHECK(rep.find("bad.jacobi")->status == Status::fail);
}

TEST_CASE("non-antisymmetric constants are reported") {
  const auto L = lie::build_su(2);
  auto sc = L.constants();
  sc[0][0][1] = 1;
  const Report rep = lie::verify_lie_axioms(lie::LieAlgebra(L.labels(), sc), "bad");
  CHECK(rep.find("bad.antisymmetry")->status == Status::fail);
}

TEST_CASE("structure constant dump") {
  const auto j = lie::to_json(lie::build_su(3));
  REQUIRE(j["structure_constants"].size() == 8);
  for (const auto& row : j["structure_constants"]) {
    REQUIRE(row.size() == 8);
    for (const auto& v : row) {
      REQUIRE(v.size() == 8);
      for (const auto& x : v) CHECK(x.get<std::string>().find('/') != std::string::npos);
    }
  }
}
