#include "hcx/exact/subspace.hpp"

#include <algorithm>
#include <deque>

namespace hcx::exact {

namespace {

std::size_t leading_index(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) return i;
  return v.size();
}

}  // namespace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw InputError("Subspace: vector length does not match ambient dimension");
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (is_zero(v[p])) continue;
    Rat f = v[p];
    axpy(v, -f, basis_[r]);
  }
  return v;
}

bool Subspace::contains(std::span<const Rat> v) const {
  return is_zero(std::span<const Rat>(reduce(Vec(v.begin(), v.end()))));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vec& v) { return contains(v); });
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  const std::size_t lead = leading_index(v);
  if (lead == v.size()) return false;
  Rat inv = 1 / v[lead];
  for (auto& x : v)
    if (!is_zero(x)) x *= inv;
  for (auto& row : basis_) {
    if (is_zero(row[lead])) continue;
    Rat f = row[lead];
    axpy(row, -f, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  const auto idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, lead);
  basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

std::optional<Vec> Subspace::coordinates(std::span<const Rat> v) const {
  if (!contains(v)) return std::nullopt;
  // In RREF the coordinate along row r is just the pivot entry of v.
  Vec c(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

std::pair<std::size_t, Subspace> rank_and_basis(const Mat& m) {
  auto red = rref(m);
  Subspace s(m.cols());
  for (std::size_t r = 0; r < red.pivots.size(); ++r) s.insert(red.matrix.row(r));
  return {red.pivots.size(), std::move(s)};
}

namespace {

Subspace nullspace_from_rref(const Rref<Rat>& red, std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  Subspace ns(ncols);
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols);
    v[free] = 1;
    for (std::size_t r = 0; r < red.pivots.size(); ++r) v[red.pivots[r]] = -red.matrix(r, free);
    ns.insert(std::move(v));
  }
  return ns;
}

}  // namespace

Subspace solve_homogeneous(const Mat& m) {
  return nullspace_from_rref(rref(m), m.cols());
}

std::optional<AffineSolution> solve_affine(const Mat& m, std::span<const Rat> b) {
  if (b.size() != m.rows()) throw InputError("solve_affine: rhs length mismatch");
  const std::size_t n = m.cols();
  Mat aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  auto red = rref(std::move(aug));
  if (!red.pivots.empty() && red.pivots.back() == n) return std::nullopt;
  Vec particular(n);
  for (std::size_t r = 0; r < red.pivots.size(); ++r) particular[red.pivots[r]] = red.matrix(r, n);

  Rref<Rat> coeff{Mat(red.matrix.rows(), n), red.pivots};
  for (std::size_t r = 0; r < red.matrix.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) coeff.matrix(r, c) = red.matrix(r, c);
  return AffineSolution{std::move(particular), nullspace_from_rref(coeff, n)};
}

Subspace subspace_closure(std::size_t ambient_dim, const std::vector<Vec>& seed,
                          const std::vector<LinearMap>& maps, const BilinearMap& product) {
  for (const auto& v : seed)
    if (v.size() != ambient_dim) throw InputError("subspace_closure: seed vector has wrong length");

  Subspace span(ambient_dim);
  std::vector<Vec> accepted;
  std::deque<std::size_t> work;
  auto offer = [&](Vec v) {
    if (v.size() != ambient_dim) throw InputError("subspace_closure: map output has wrong length");
    if (span.insert(v)) {
      accepted.push_back(std::move(v));
      work.push_back(accepted.size() - 1);
    }
  };

  for (const auto& v : seed) offer(v);
  while (!work.empty() && span.dim() < ambient_dim) {
    const std::size_t k = work.front();
    work.pop_front();
    for (const auto& f : maps) offer(f(accepted[k]));
    if (product) {
      for (std::size_t j = 0; j <= k; ++j) {
        offer(product(accepted[k], accepted[j]));
        if (j != k) offer(product(accepted[j], accepted[k]));
      }
    }
  }
  return span;
}

Subspace subspace_closure(std::size_t ambient_dim, const std::vector<Vec>& seed,
                          const std::vector<Mat>& maps, const BilinearMap& product) {
  std::vector<LinearMap> fs;
  fs.reserve(maps.size());
  for (const auto& m : maps) {
    if (m.rows() != ambient_dim || m.cols() != ambient_dim)
      throw InputError("subspace_closure: map is not an endomorphism of the ambient space");
    fs.emplace_back([&m](const Vec& v) { return m.apply(v); });
  }
  return subspace_closure(ambient_dim, seed, fs, product);
}

std::string to_string(const Mat& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ", ";
    out += to_string(std::span<const Rat>(m.row(r)));
  }
  return out + "]";
}

}  // namespace hcx::exact
