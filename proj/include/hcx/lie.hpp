#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcx/exact/matrix.hpp"
#include "hcx/exact/rational.hpp"
#include "hcx/report.hpp"
#include "json.hpp"

namespace hcx::lie {

using exact::Mat;
using exact::Rat;
using exact::Vec;

/// Complex matrix with exact rational real and imaginary parts.
struct ComplexRatMat {
  Mat re;
  Mat im;

  friend ComplexRatMat operator*(const ComplexRatMat& a, const ComplexRatMat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRatMat operator-(const ComplexRatMat& a, const ComplexRatMat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend bool operator==(const ComplexRatMat&, const ComplexRatMat&) = default;
};

/// Structure constants: constants[i][j] holds the coordinates of [e_i, e_j].
using StructureTensor = std::vector<std::vector<Vec>>;

/// A finite-dimensional real Lie algebra given by exact structure constants.
/// The constructor checks shapes only; use verify_lie_axioms for the axioms.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> labels, StructureTensor constants,
             std::optional<std::vector<ComplexRatMat>> realization = std::nullopt);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const StructureTensor& constants() const { return constants_; }
  const Vec& structure(std::size_t i, std::size_t j) const { return constants_.at(i).at(j); }
  const std::optional<std::vector<ComplexRatMat>>& realization() const { return realization_; }

  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad(e_i): column j holds [e_i, e_j].
  const Mat& ad(std::size_t i) const { return ad_.at(i); }
  Mat ad(const Vec& x) const;

 private:
  std::vector<std::string> labels_;
  StructureTensor constants_;
  std::vector<Mat> ad_;
  std::optional<std::vector<ComplexRatMat>> realization_;
};

struct BilinearForm {
  Mat gram;
  Rat operator()(const Vec& x, const Vec& y) const;
};

/// Structure constants of the real span of the given matrices, which must be
/// linearly independent and closed under the commutator.
LieAlgebra from_matrix_basis(std::vector<std::string> labels, std::vector<ComplexRatMat> basis);

/// su(n) in a recursive basis: su(n-1) in the upper-left block, then
/// diag(i, ..., i, -(n-1)i), then the pairs E_kn - E_nk, i(E_kn + E_nk).
/// For n = 3 this is (d: e1..e3, b: e4, f: e5..e8).
LieAlgebra build_su(int n);

/// Killing form: gram(i, j) = tr(ad e_i ad e_j).
BilinearForm killing_form(const LieAlgebra& L);

/// Antisymmetry, Jacobi on all basis triples, and (when present) agreement
/// of the matrix realization with the structure constants.
Report verify_lie_axioms(const LieAlgebra& L, const std::string& prefix = "lie");

nlohmann::json to_json(const LieAlgebra& L);

}  // namespace hcx::lie
