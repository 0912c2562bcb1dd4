#pragma once

// Double-precision reference computations for the tests. Everything here is
// written from the definitions directly and shares no code with the exact
// library beyond reading its data.

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "hcx/exact/matrix.hpp"
#include "hcx/lie.hpp"

namespace oracle {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

inline MatrixXd to_eigen(const hcx::exact::Mat& m) {
  MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_d();
  return out;
}

inline VectorXd to_eigen(const hcx::exact::Vec& v) {
  VectorXd out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(i) = v[i].get_d();
  return out;
}

/// Structure constants as c[k](i, j) = coefficient of e_k in [e_i, e_j].
struct Bracket {
  std::vector<MatrixXd> c;

  explicit Bracket(const hcx::lie::LieAlgebra& L) : c(L.dim(), MatrixXd::Zero(L.dim(), L.dim())) {
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = 0; j < L.dim(); ++j)
        for (std::size_t k = 0; k < L.dim(); ++k) c[k](i, j) = L.structure(i, j)[k].get_d();
  }

  Eigen::Index dim() const { return static_cast<Eigen::Index>(c.size()); }

  VectorXd operator()(const VectorXd& x, const VectorXd& y) const {
    VectorXd out(dim());
    for (Eigen::Index k = 0; k < dim(); ++k) out(k) = x.dot(c[k] * y);
    return out;
  }

  MatrixXd ad(const VectorXd& x) const {
    MatrixXd out(dim(), dim());
    for (Eigen::Index j = 0; j < dim(); ++j) out.col(j) = (*this)(x, VectorXd::Unit(dim(), j));
    return out;
  }

  MatrixXd killing() const {
    MatrixXd h(dim(), dim());
    for (Eigen::Index i = 0; i < dim(); ++i)
      for (Eigen::Index j = 0; j < dim(); ++j)
        h(i, j) = (ad(VectorXd::Unit(dim(), i)) * ad(VectorXd::Unit(dim(), j))).trace();
    return h;
  }
};

/// Numerical rank from singular values relative to the largest.
inline Eigen::Index rank(const MatrixXd& m, double rel = 1e-9) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel * s(0)) ++r;
  return r;
}

/// Stacks flattened matrices as columns.
inline MatrixXd stack(const std::vector<MatrixXd>& mats) {
  if (mats.empty()) return {};
  MatrixXd out(mats[0].size(), static_cast<Eigen::Index>(mats.size()));
  for (std::size_t k = 0; k < mats.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = mats[k].reshaped();
  return out;
}

/// Dimension of {X : AX = XA for all A}, via the Kronecker form of X -> AX - XA.
inline Eigen::Index commutant_dim(const std::vector<MatrixXd>& gens, Eigen::Index n) {
  if (gens.empty()) return n * n;
  const MatrixXd id = MatrixXd::Identity(n, n);
  MatrixXd sys(static_cast<Eigen::Index>(gens.size()) * n * n, n * n);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    MatrixXd block(n * n, n * n);
    // vec(AX - XA) = (I kron A - A^T kron I) vec(X), column-major vec.
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b) block.block(a * n, b * n, n, n) = id(a, b) * gens[g] - gens[g](b, a) * id;
    sys.middleRows(static_cast<Eigen::Index>(g) * n * n, n * n) = block;
  }
  return n * n - rank(sys);
}

inline MatrixXd commutator(const MatrixXd& a, const MatrixXd& b) { return a * b - b * a; }

}  // namespace oracle
