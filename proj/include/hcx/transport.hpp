#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hcx/holonomy.hpp"
#include "hcx/report.hpp"

namespace hcx::transport {

using hyper::HypercomplexLieAlgebra;
using obata::Connection;

// Matrix functions. exp: scaling and squaring with a truncated Taylor
// series. sqrt: Denman-Beavers iteration. log: repeated square roots until
// the argument is within 1/4 of the identity, then the Mercator series.
// log throws NumericalDomainError if an eigenvalue lies on (or within 1e-8
// of) the closed negative real axis.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);
Eigen::MatrixXd sqrtm(const Eigen::MatrixXd& a);
Eigen::MatrixXcd sqrtm(const Eigen::MatrixXcd& a);
Eigen::MatrixXd logm(const Eigen::MatrixXd& a);
Eigen::MatrixXcd logm(const Eigen::MatrixXcd& a);

/// exp and principal log on SU(3); su3_log requires no eigenvalue near -1.
Eigen::MatrixXcd su3_exp(const Eigen::MatrixXcd& x);
Eigen::MatrixXcd su3_log(const Eigen::MatrixXcd& u);

/// Float model of a hypercomplex Lie algebra: realization matrices,
/// Lambda_{e_i}, I, J, K and the Killing form in double precision.
class FloatModel {
 public:
  FloatModel(const HypercomplexLieAlgebra& H, const Connection& C);

  std::size_t dim() const { return lambda_.size(); }
  Eigen::MatrixXcd to_group_algebra(const Eigen::VectorXd& x) const;
  /// Coordinates of a realized algebra element (least squares).
  Eigen::VectorXd coordinates(const Eigen::MatrixXcd& m) const;
  Eigen::MatrixXd lambda(const Eigen::VectorXd& x) const;
  const Eigen::MatrixXd& I() const { return I_; }
  const Eigen::MatrixXd& J() const { return J_; }
  const Eigen::MatrixXd& K() const { return K_; }
  const Eigen::MatrixXd& killing() const { return killing_; }

 private:
  std::vector<Eigen::MatrixXcd> basis_;
  std::vector<Eigen::MatrixXd> lambda_;
  Eigen::MatrixXd I_, J_, K_, killing_;
  Eigen::MatrixXd coord_system_;
};

/// Closed loop exp(t eps X), exp(eps X) exp(t eps Y), exp((1-t) Z) with
/// exp(Z) = exp(eps X) exp(eps Y).
struct Loop {
  Eigen::VectorXd x, y;
  double scale = 0.1;
};

/// Transport of left-invariant frames around the loop: segment with
/// constant left logarithmic derivative a contributes exp(-Lambda_a).
/// Result is exp(Lambda_Z) exp(-eps Lambda_Y) exp(-eps Lambda_X).
Eigen::MatrixXd loop_holonomy(const FloatModel& M, const Loop& loop);

/// log(T(eps))/eps^2 extrapolated to eps -> 0 over the given scales
/// (each half the previous). The limit is -(1/2) R(X, Y).
Eigen::MatrixXd curvature_limit(const FloatModel& M, const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                const std::vector<double>& scales = {0.2, 0.1, 0.05});

/// Deterministic per-sample generator: splitmix64 of (seed, index) seeds a
/// mt19937_64; coordinates uniform in [-1, 1].
Loop sample_loop(std::size_t dim, std::uint64_t seed, std::size_t index, double scale);

struct EstimateOptions {
  std::size_t loops = 200;
  double scale = 0.1;
  std::uint64_t seed = 42;
  double tolerance = 1e-6;
};

struct DimensionEstimate {
  std::size_t dim = 0;
  double max_principal_angle = 0.0;
  std::size_t samples_used = 0;
  std::vector<std::size_t> discarded;
  std::vector<double> singular_values;
  /// max over samples of ||[T, A]|| / ||T|| for A in {I, J, K}.
  double max_quaternion_defect = 0.0;
  /// number of samples with ||T^T h T - h|| > 1e-9 ||h||.
  std::size_t metric_changed = 0;
};

/// Numerical rank of the span of log(T) over sampled loops (singular values
/// above tolerance * largest and above an absolute floor of 1e-12), and the largest
/// principal angle between that span and the span of `reference` (the
/// Nomizu basis). With an empty reference, the angle is 0 when the sampled
/// span is also empty and pi/2 otherwise.
DimensionEstimate estimate_holonomy_dimension(const FloatModel& M, const std::vector<Eigen::MatrixXd>& reference,
                                              const EstimateOptions& opts);

std::vector<Eigen::MatrixXd> to_float(const std::vector<exact::Mat>& mats);
Eigen::MatrixXd to_float(const exact::Mat& m);

}  // namespace hcx::transport
