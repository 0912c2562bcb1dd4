#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hcx/curvature.hpp"
#include "hcx/exact/subspace.hpp"
#include "hcx/report.hpp"
#include "json.hpp"

namespace hcx::holonomy {

using exact::Mat;
using exact::Rat;
using exact::Subspace;
using exact::Vec;
using hyper::HypercomplexLieAlgebra;
using obata::Connection;

/// Subspace of End(Q^n), stored flattened row-major in Q^{n*n}.
struct EndoSubspace {
  std::size_t n = 0;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  std::vector<Mat> matrices() const;
  bool contains(const Mat& m) const;
  bool contains(const EndoSubspace& other) const { return space.contains(other.space); }
  friend bool operator==(const EndoSubspace&, const EndoSubspace&) = default;
};

EndoSubspace span_of(std::size_t n, const std::vector<Mat>& mats);

/// Smallest subspace containing every R(e_i, e_j), stable under
/// ad(Lambda_{e_i}) for all i and closed under the commutator.
EndoSubspace nomizu_closure(const lie::LieAlgebra& L, const Connection& C);

/// Re-runs the closure recipe starting from an existing subspace.
EndoSubspace reclose(const EndoSubspace& sub, const Connection& C);

/// {X : AX = XA for every A in gens}. For empty gens, all of End(Q^n).
EndoSubspace commutant(std::size_t n, const std::vector<Mat>& gens);

enum class Valence { vector, covector, bilinear, symmetric_bilinear, bivector, endomorphism, top_form };

/// Parses "1,0", "0,1", "0,2", "2,0", "1,1", "sym" / "0,2s", and "top".
Valence parse_valence(const std::string& text);
std::string to_string(Valence v);

/// Dimension of the tensors of the given valence killed by every element of
/// `hol` acting as a derivation.
std::size_t invariant_tensor_dims(const EndoSubspace& hol, Valence valence);

/// Id on g0 plus ad E on g1; the witness with three distinct eigenvalues.
Mat three_eigenvalue_witness(const HypercomplexLieAlgebra& H);

/// Zero on g0, ad E on g1: acts on g1 as right multiplication by a non-real
/// quaternion.
Mat g0_annihilating_witness(const HypercomplexLieAlgebra& H);

/// dim {A in hol : A restricted to g0 is zero}.
std::size_t g0_annihilator_dimension(const EndoSubspace& hol, const HypercomplexLieAlgebra& H);

/// Whether sub is closed under the commutator (checked on basis pairs).
bool is_lie_subalgebra(const EndoSubspace& sub);

/// Whether `alg` equals span{Id, I, J, K} and, in that basis, its product
/// reproduces the quaternion multiplication table.
bool has_quaternion_structure(const EndoSubspace& alg, const HypercomplexLieAlgebra& H);

/// Checks that hol is the full commutant of {I, J, K}, plus the
/// supporting witnesses. Expected values are those of su(3).
Report identify_gl2h(const EndoSubspace& hol, const HypercomplexLieAlgebra& H,
                     const std::string& prefix = "holonomy");

struct ProjectionAlgebra {
  std::size_t dim = 0;
  bool mat2_iso = false;
};

/// V1, V2, V3 pairwise complementary n-dimensional subspaces of Q^{2n}.
/// Builds the six projections P_ij onto V_i along V_j, closes them under
/// product, and checks that in the basis (A w, w) with A = P12 P31 and w
/// running over a basis of V2 every P_ij is X (x) Id_n with the X spanning
/// all 2x2 matrices.
ProjectionAlgebra projection_algebra_dim(const Subspace& V1, const Subspace& V2, const Subspace& V3);

/// Random n-dimensional subspaces of Q^{2n}, pairwise complementary, from a
/// seeded generator (small integer entries, resampled until complementary).
std::vector<Subspace> random_complementary_triple(std::size_t n, std::uint64_t seed);

/// Real 8x8 matrices of rho(H), rho(E), rho(F), rho(iH), rho(iE), rho(iF) on
/// the cubic binary forms S^3 C^2, in weight basis x^3, x^2 y, x y^2, y^3 with
/// real and imaginary parts stacked.
std::vector<Mat> sl2c_s3c2_generators();

std::size_t sl2c_s3c2_commutant_dim();

nlohmann::json to_json(const EndoSubspace& sub);

}  // namespace hcx::holonomy
