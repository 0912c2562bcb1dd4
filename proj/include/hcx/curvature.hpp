#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hcx/obata.hpp"
#include "hcx/report.hpp"
#include "json.hpp"

namespace hcx::curvature {

using exact::Mat;
using exact::Rat;
using exact::Vec;
using hyper::HypercomplexLieAlgebra;
using obata::Connection;

/// R(X, Y) = [Lambda_X, Lambda_Y] - Lambda_{[X,Y]}.
Mat curvature_endo(const lie::LieAlgebra& L, const Connection& C, const Vec& x, const Vec& y);

/// R on basis pairs i < j.
struct CurvatureTensor {
  std::size_t dim = 0;
  std::map<std::pair<std::size_t, std::size_t>, Mat> r;

  /// R(e_i, e_j) for any ordered pair, using antisymmetry.
  Mat at(std::size_t i, std::size_t j) const;
};

CurvatureTensor curvature_tensor(const lie::LieAlgebra& L, const Connection& C);

/// Rank of the span of all flattened R(e_i, e_j).
std::size_t curvature_rank(const CurvatureTensor& R);

/// dim span{R(W,IW)W, R(W,JW)W, R(W,KW)W}.
std::size_t z_span_dimension(const HypercomplexLieAlgebra& H, const Connection& C);

/// dim of the sum of the images R(e_i, e_j)(g1) over all pairs.
std::size_t g1_image_dimension(const HypercomplexLieAlgebra& H, const CurvatureTensor& R);

/// `count` vectors with entries drawn uniformly from {-3, ..., 3} / 2 by a
/// mt19937_64 seeded with `seed`.
std::vector<Vec> random_vectors(std::size_t dim, std::size_t count, std::uint64_t seed);

struct CurvatureOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 50;
};

/// Symmetry, H-linearity, Bianchi, the pointwise identities for R(X,IX)X
/// and R(E,X)X, R(.,.)E = 0, grading facts and the Z-span dimension.
Report verify_curvature(const HypercomplexLieAlgebra& H, const Connection& C, CurvatureOptions opts = {},
                        const std::string& prefix = "curvature");

/// {"i,j": matrix} for i < j, 1-indexed.
nlohmann::json to_json(const CurvatureTensor& R);

}  // namespace hcx::curvature
