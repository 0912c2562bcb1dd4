#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hcx/exact/matrix.hpp"
#include "hcx/exact/rational.hpp"

namespace hcx::exact {

/// A linear subspace of Q^n stored by its reduced row-echelon basis.
///
/// Because the RREF basis of a subspace is unique, two Subspace objects are
/// equal exactly when they hold bit-identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  /// Residue of v after eliminating every pivot coordinate; zero iff v lies
  /// in the subspace.
  Vec reduce(Vec v) const;
  bool contains(std::span<const Rat> v) const;
  bool contains(const Subspace& other) const;

  /// Adds v to the span. Returns true if the dimension grew.
  bool insert(Vec v);

  /// Coordinates of v with respect to basis(); nullopt if v is not a member.
  std::optional<Vec> coordinates(std::span<const Rat> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Rank of m together with its row space.
std::pair<std::size_t, Subspace> rank_and_basis(const Mat& m);

/// Null space {x : m x = 0}.
Subspace solve_homogeneous(const Mat& m);

struct AffineSolution {
  Vec particular;
  Subspace directions;
};

/// Solution set of m x = b, or nullopt if the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Mat& m, std::span<const Rat> b);

using LinearMap = std::function<Vec(const Vec&)>;
using BilinearMap = std::function<Vec(const Vec&, const Vec&)>;

/// Smallest subspace containing `seed`, invariant under every map and, when
/// `product` is given, closed under it. Worklist driven: each accepted
/// vector is pushed through the maps once and multiplied against every
/// earlier accepted vector, in both orders.
Subspace subspace_closure(std::size_t ambient_dim, const std::vector<Vec>& seed,
                          const std::vector<LinearMap>& maps,
                          const BilinearMap& product = nullptr);

/// Overload with matrix-valued maps.
Subspace subspace_closure(std::size_t ambient_dim, const std::vector<Vec>& seed,
                          const std::vector<Mat>& maps, const BilinearMap& product = nullptr);

}  // namespace hcx::exact
