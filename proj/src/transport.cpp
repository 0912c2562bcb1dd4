#include "hcx/transport.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hcx/errors.hpp"

namespace hcx::transport {

namespace {

template <class M>
double norm1(const M& a) {
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

template <class M>
M expm_impl(const M& a) {
  const auto n = a.rows();
  const double nrm = n == 0 ? 0.0 : norm1(a);
  int squarings = 0;
  if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  const M s = a / std::ldexp(1.0, squarings);
  M result = M::Identity(n, n);
  M term = M::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = (term * s) / static_cast<double>(k);
    result += term;
    if (norm1(term) < 1e-17 * norm1(result)) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

template <class M>
M sqrtm_impl(const M& a) {
  const auto n = a.rows();
  M y = a, z = M::Identity(n, n);
  for (int k = 0; k < 100; ++k) {
    const M y_inv = y.inverse(), z_inv = z.inverse();
    const M y_next = 0.5 * (y + z_inv);
    z = 0.5 * (z + y_inv);
    const double change = norm1(M(y_next - y));
    y = y_next;
    if (change <= 1e-15 * norm1(y)) break;
  }
  return y;
}

template <class M>
void check_log_domain(const M& a) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a.template cast<std::complex<double>>());
  for (const auto& ev : es.eigenvalues())
    if (ev.real() <= 0 && std::abs(ev.imag()) < 1e-8)
      throw NumericalDomainError("matrix logarithm: eigenvalue on the negative real axis");
}

template <class M>
M logm_impl(M a) {
  const auto n = a.rows();
  check_log_domain(a);
  const M id = M::Identity(n, n);
  int roots = 0;
  while (norm1(M(a - id)) > 0.25) {
    if (++roots > 60) throw NumericalDomainError("matrix logarithm: square roots did not converge");
    a = sqrtm_impl(a);
  }
  const M x = a - id;
  M term = id, result = M::Zero(n, n);
  for (int k = 1; k <= 200; ++k) {
    term = term * x;
    const M add = term / static_cast<double>(k);
    if (k % 2 == 1)
      result += add;
    else
      result -= add;
    if (norm1(add) < 1e-17 * std::max(1.0, norm1(result))) break;
  }
  return std::ldexp(1.0, roots) * result;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Eigen::VectorXd flatten(const Eigen::MatrixXd& m) {
  // Row-major, matching the exact flattening convention.
  Eigen::VectorXd v(m.size());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) v(r * m.cols() + c) = m(r, c);
  return v;
}

/// Singular values at or below this are rounding noise whatever the
/// relative tolerance says (a flat connection gives only such values).
constexpr double kAbsoluteFloor = 1e-12;

/// Orthonormal basis of the numerical column space (relative tolerance).
Eigen::MatrixXd column_space(const Eigen::MatrixXd& a, double tol, std::vector<double>* singular = nullptr) {
  if (a.cols() == 0) return Eigen::MatrixXd(a.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  if (singular) singular->assign(s.data(), s.data() + s.size());
  Eigen::Index rank = 0;
  const double top = s.size() ? s(0) : 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > kAbsoluteFloor && s(i) > tol * top) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) { return expm_impl(a); }
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) { return expm_impl(a); }
Eigen::MatrixXd sqrtm(const Eigen::MatrixXd& a) { return sqrtm_impl(a); }
Eigen::MatrixXcd sqrtm(const Eigen::MatrixXcd& a) { return sqrtm_impl(a); }
Eigen::MatrixXd logm(const Eigen::MatrixXd& a) { return logm_impl(a); }
Eigen::MatrixXcd logm(const Eigen::MatrixXcd& a) { return logm_impl(a); }

Eigen::MatrixXcd su3_exp(const Eigen::MatrixXcd& x) {
  if (x.rows() != 3 || x.cols() != 3) throw InputError("su3_exp: expected a 3x3 matrix");
  return expm(x);
}

Eigen::MatrixXcd su3_log(const Eigen::MatrixXcd& u) {
  if (u.rows() != 3 || u.cols() != 3) throw InputError("su3_log: expected a 3x3 matrix");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(u);
  for (const auto& ev : es.eigenvalues())
    if (std::abs(ev + 1.0) < 1e-8) throw NumericalDomainError("su3_log: eigenvalue at -1");
  Eigen::MatrixXcd x = logm(u);
  // Project onto skew-Hermitian traceless matrices to remove rounding drift.
  x = 0.5 * (x - x.adjoint().eval());
  x -= (x.trace() / 3.0) * Eigen::MatrixXcd::Identity(3, 3);
  return x;
}

Eigen::MatrixXd to_float(const exact::Mat& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_d();
  return out;
}

std::vector<Eigen::MatrixXd> to_float(const std::vector<exact::Mat>& mats) {
  std::vector<Eigen::MatrixXd> out;
  for (const auto& m : mats) out.push_back(to_float(m));
  return out;
}

FloatModel::FloatModel(const HypercomplexLieAlgebra& H, const Connection& C)
    : basis_(H.numeric_realization),
      lambda_(to_float(C.lambda)),
      I_(to_float(H.I)),
      J_(to_float(H.J)),
      K_(to_float(H.K)),
      killing_(to_float(lie::killing_form(H.algebra).gram)) {
  const std::size_t d = H.dim();
  if (basis_.size() != d) throw InputError("FloatModel: numeric realization missing or incomplete");
  const auto m = basis_.front().rows();
  coord_system_.resize(2 * m * m, static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < d; ++k) {
    Eigen::Index idx = 0;
    for (Eigen::Index r = 0; r < m; ++r)
      for (Eigen::Index c = 0; c < m; ++c) {
        coord_system_(idx++, static_cast<Eigen::Index>(k)) = basis_[k](r, c).real();
        coord_system_(idx++, static_cast<Eigen::Index>(k)) = basis_[k](r, c).imag();
      }
  }
}

Eigen::MatrixXcd FloatModel::to_group_algebra(const Eigen::VectorXd& x) const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(basis_.front().rows(), basis_.front().cols());
  for (std::size_t k = 0; k < basis_.size(); ++k) out += x(static_cast<Eigen::Index>(k)) * basis_[k];
  return out;
}

Eigen::VectorXd FloatModel::coordinates(const Eigen::MatrixXcd& m) const {
  Eigen::VectorXd rhs(coord_system_.rows());
  Eigen::Index idx = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rhs(idx++) = m(r, c).real();
      rhs(idx++) = m(r, c).imag();
    }
  return coord_system_.colPivHouseholderQr().solve(rhs);
}

Eigen::MatrixXd FloatModel::lambda(const Eigen::VectorXd& x) const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
  for (std::size_t k = 0; k < lambda_.size(); ++k) out += x(static_cast<Eigen::Index>(k)) * lambda_[k];
  return out;
}

Eigen::MatrixXd loop_holonomy(const FloatModel& M, const Loop& loop) {
  const double eps = loop.scale;
  const Eigen::MatrixXcd g = expm(Eigen::MatrixXcd(eps * M.to_group_algebra(loop.x))) *
                             expm(Eigen::MatrixXcd(eps * M.to_group_algebra(loop.y)));
  const Eigen::VectorXd z = M.coordinates(logm(g));
  const Eigen::MatrixXd t1 = expm(Eigen::MatrixXd(-eps * M.lambda(loop.x)));
  const Eigen::MatrixXd t2 = expm(Eigen::MatrixXd(-eps * M.lambda(loop.y)));
  const Eigen::MatrixXd t3 = expm(Eigen::MatrixXd(M.lambda(z)));
  return t3 * t2 * t1;
}

Eigen::MatrixXd curvature_limit(const FloatModel& M, const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                const std::vector<double>& scales) {
  if (scales.empty()) throw InputError("curvature_limit: need at least one scale");
  std::vector<Eigen::MatrixXd> level;
  for (double eps : scales) level.push_back(logm(loop_holonomy(M, Loop{x, y, eps})) / (eps * eps));
  // Halving the scale: level k removes the eps^k error term.
  for (std::size_t k = 1; k < scales.size(); ++k) {
    const double f = std::ldexp(1.0, static_cast<int>(k));
    std::vector<Eigen::MatrixXd> next;
    for (std::size_t i = 0; i + 1 < level.size(); ++i) next.push_back((f * level[i + 1] - level[i]) / (f - 1.0));
    level = std::move(next);
  }
  return level.front();
}

Loop sample_loop(std::size_t dim, std::uint64_t seed, std::size_t index, double scale) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index))));
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Loop loop;
  loop.x.resize(static_cast<Eigen::Index>(dim));
  loop.y.resize(static_cast<Eigen::Index>(dim));
  for (auto& v : loop.x) v = dist(rng);
  for (auto& v : loop.y) v = dist(rng);
  loop.scale = scale;
  return loop;
}

DimensionEstimate estimate_holonomy_dimension(const FloatModel& M, const std::vector<Eigen::MatrixXd>& reference,
                                              const EstimateOptions& opts) {
  if (opts.loops == 0) throw InputError("estimate_holonomy_dimension: loops must be at least 1");
  if (!(opts.scale > 0.0 && opts.scale <= 0.5))
    throw InputError("estimate_holonomy_dimension: scale must lie in (0, 0.5]");
  if (!(opts.tolerance > 0.0)) throw InputError("estimate_holonomy_dimension: tolerance must be positive");
  const auto n = static_cast<Eigen::Index>(M.dim());
  DimensionEstimate out;
  std::vector<Eigen::VectorXd> logs;
  const double h_norm = M.killing().norm();
  for (std::size_t i = 0; i < opts.loops; ++i) {
    const Loop loop = sample_loop(M.dim(), opts.seed, i, opts.scale);
    try {
      const Eigen::MatrixXd T = loop_holonomy(M, loop);
      logs.push_back(flatten(logm(T)));
      const double t_norm = T.norm();
      for (const auto* A : {&M.I(), &M.J(), &M.K()})
        out.max_quaternion_defect = std::max(out.max_quaternion_defect, (T * *A - *A * T).norm() / t_norm);
      if ((T.transpose() * M.killing() * T - M.killing()).norm() > 1e-9 * h_norm) ++out.metric_changed;
    } catch (const NumericalDomainError&) {
      out.discarded.push_back(i);
    }
  }
  out.samples_used = logs.size();

  Eigen::MatrixXd samples(n * n, static_cast<Eigen::Index>(logs.size()));
  for (std::size_t k = 0; k < logs.size(); ++k) samples.col(static_cast<Eigen::Index>(k)) = logs[k];
  const Eigen::MatrixXd q1 = column_space(samples, opts.tolerance, &out.singular_values);
  out.dim = static_cast<std::size_t>(q1.cols());

  Eigen::MatrixXd ref(n * n, static_cast<Eigen::Index>(reference.size()));
  for (std::size_t k = 0; k < reference.size(); ++k) ref.col(static_cast<Eigen::Index>(k)) = flatten(reference[k]);
  const Eigen::MatrixXd q2 = column_space(ref, 1e-12);

  if (q1.cols() != q2.cols()) {
    out.max_principal_angle = std::numbers::pi / 2;
  } else if (q1.cols() == 0) {
    out.max_principal_angle = 0.0;
  } else {
    // sin of the largest principal angle is ||(I - Q2 Q2^T) Q1||_2.
    const Eigen::MatrixXd resid = q1 - q2 * (q2.transpose() * q1);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(resid);
    out.max_principal_angle = std::asin(std::min(1.0, svd.singularValues()(0)));
  }
  return out;
}

}  // namespace hcx::transport
