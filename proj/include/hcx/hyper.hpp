#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcx/exact/matrix.hpp"
#include "hcx/lie.hpp"
#include "hcx/report.hpp"
#include "json.hpp"

namespace hcx::hyper {

using exact::Mat;
using exact::Rat;
using exact::Vec;

/// Signs of the distinguished elements relative to the fixed su(3) basis:
/// I_cal = iota*e1, J_cal = jota*e2, K_cal = kota*e3, E = euler*alpha*e4.
struct SignChoice {
  int iota = 1;
  int jota = 1;
  int kota = 1;
  int euler = 1;
};

/// Everything the Joyce builder had to decide, recorded for the dump.
struct Convention {
  SignChoice signs;
  Rat alpha_squared;
  std::string alpha;             // exact, as an element of Q(sqrt 3)
  std::string right_quaternion;  // ad E on g1 is right multiplication by this
  std::size_t w_seed = 0;        // index of the su(3) basis vector that seeded W
  std::string f_scale_squared;   // W normalisation factor, squared
  /// Adapted basis vectors in standard su(3) coordinates (g1 vectors before
  /// normalisation), as exact Q(sqrt 3) strings.
  std::vector<std::vector<std::string>> basis_change;
  std::size_t candidates_tried = 0;
};

/// A Lie algebra with a left-invariant hypercomplex structure and the data
/// of the graded decomposition g = g0 + g1.
struct HypercomplexLieAlgebra {
  lie::LieAlgebra algebra;
  Mat I, J, K;
  std::vector<std::size_t> g0, g1;
  Vec euler;                 // E, maps to -1 under phi
  Vec w;                     // H-generator of g1 (empty when g1 = 0)
  Vec iota, jota, kota;      // elements of g0 mapping to i, j, k
  Mat phi;                   // g0 coordinates -> quaternion coordinates (1, i, j, k)
  std::optional<Convention> convention;
  /// Complex matrices realising the basis (double precision), for the
  /// floating-point group computations.
  std::vector<Eigen::MatrixXcd> numeric_realization;

  std::size_t dim() const { return algebra.dim(); }
};

/// Quaternion product in coordinates (1, i, j, k).
std::array<Rat, 4> quaternion_product(const std::array<Rat, 4>& p, const std::array<Rat, 4>& q);

/// 4x4 matrix of left multiplication by the quaternion unit
/// (0 -> 1, 1 -> i, 2 -> j, 3 -> k) in the basis (1, i, j, k).
Mat left_multiplication(int unit);

/// The Joyce hypercomplex structure on su(3), in an adapted rational basis
/// (iota, jota, kota, euler, w, Iw, Jw, Kw). Throws ConstructionError if no
/// sign convention passes verification.
HypercomplexLieAlgebra build_joyce_su3();

/// The same construction directly in the standard su(3) basis, for a rational
/// Euler scale E = signs.euler * alpha * diag(i, i, -2i). Integrable for every
/// alpha; the Killing form is quaternionic Hermitian only for alpha^2 = 1/3.
HypercomplexLieAlgebra joyce_su3_standard_basis(const Rat& alpha, SignChoice signs = {});

/// su(2) + u(1) identified with H: bracket is the quaternion commutator and
/// I, J, K are left multiplication by i, j, k. g1 is empty.
HypercomplexLieAlgebra build_hopf_g0();

/// N_A(X, Y) = [X,Y] + A[AX,Y] + A[X,AY] - [AX,AY]. Requires A^2 = -Id.
Vec nijenhuis(const HypercomplexLieAlgebra& H, const Mat& A, const Vec& x, const Vec& y);

/// (1/2)([X,Y] + I[IX,Y]).
Vec dbar(const HypercomplexLieAlgebra& H, const Vec& x, const Vec& y);

/// Quaternion relations, grading, Nijenhuis vanishing for I, J, K on all
/// basis pairs, Killing form quaternionic Hermitian, and the H-basis
/// property of (E, W).
Report verify_hypercomplex(const HypercomplexLieAlgebra& H, const std::string& prefix = "hyper");

/// Dump: {I, J, K, euler, w, alpha, alpha_squared, sign_choices, ...}.
nlohmann::json to_json(const HypercomplexLieAlgebra& H);

}  // namespace hcx::hyper
