#include "hcx/lie.hpp"

#include "hcx/errors.hpp"
#include "hcx/exact/subspace.hpp"

namespace hcx::lie {

using exact::to_string;

LieAlgebra::LieAlgebra(std::vector<std::string> labels, StructureTensor constants,
                       std::optional<std::vector<ComplexRatMat>> realization)
    : labels_(std::move(labels)), constants_(std::move(constants)), realization_(std::move(realization)) {
  const std::size_t n = labels_.size();
  if (constants_.size() != n) throw InputError("LieAlgebra: structure tensor has wrong outer size");
  for (const auto& row : constants_) {
    if (row.size() != n) throw InputError("LieAlgebra: structure tensor has wrong row size");
    for (const auto& v : row)
      if (v.size() != n) throw InputError("LieAlgebra: structure constant vector has wrong length");
  }
  if (realization_ && realization_->size() != n)
    throw InputError("LieAlgebra: realization size does not match dimension");
  ad_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Mat a(n, n);
    for (std::size_t j = 0; j < n; ++j) a.set_column(j, constants_[i][j]);
    ad_.push_back(std::move(a));
  }
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw InputError("bracket: vector length mismatch");
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (exact::is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (exact::is_zero(y[j])) continue;
      exact::axpy(out, x[i] * y[j], constants_[i][j]);
    }
  }
  return out;
}

Mat LieAlgebra::ad(const Vec& x) const {
  if (x.size() != dim()) throw InputError("ad: vector length mismatch");
  Mat out(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!exact::is_zero(x[i])) out += x[i] * ad_[i];
  return out;
}

Rat BilinearForm::operator()(const Vec& x, const Vec& y) const {
  return exact::dot(x, gram.apply(y));
}

namespace {

Vec realify(const ComplexRatMat& m) {
  Vec out = m.re.flatten();
  const Vec im = m.im.flatten();
  out.insert(out.end(), im.begin(), im.end());
  return out;
}

ComplexRatMat unit_matrix(int n, int r, int c, const Rat& re, const Rat& im) {
  ComplexRatMat m{Mat(n, n), Mat(n, n)};
  m.re(r, c) = re;
  m.im(r, c) = im;
  return m;
}

ComplexRatMat add(const ComplexRatMat& a, const ComplexRatMat& b) { return {a.re + b.re, a.im + b.im}; }

}  // namespace

LieAlgebra from_matrix_basis(std::vector<std::string> labels, std::vector<ComplexRatMat> basis) {
  const std::size_t d = basis.size();
  if (labels.size() != d) throw InputError("from_matrix_basis: label count mismatch");
  if (d == 0) return LieAlgebra({}, {}, std::vector<ComplexRatMat>{});
  std::vector<Vec> cols;
  for (const auto& b : basis) cols.push_back(realify(b));
  const Mat coord = Mat::from_columns(cols.front().size(), cols);
  if (exact::rank_and_basis(coord).first != d)
    throw InputError("from_matrix_basis: basis matrices are linearly dependent");

  StructureTensor c(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto comm = basis[i] * basis[j] - basis[j] * basis[i];
      auto sol = exact::solve_affine(coord, realify(comm));
      if (!sol) throw InputError("from_matrix_basis: span is not closed under the commutator");
      c[i][j] = std::move(sol->particular);
    }
  return LieAlgebra(std::move(labels), std::move(c), std::move(basis));
}

LieAlgebra build_su(int n) {
  if (n < 2) throw InputError("build_su: n must be at least 2");
  const Rat zero(0), one(1);
  std::vector<ComplexRatMat> basis;
  for (int m = 2; m <= n; ++m) {
    // su(2) seed block; later layers add one row/column each.
    if (m == 2) {
      ComplexRatMat h{Mat(n, n), Mat(n, n)};
      h.im(0, 0) = 1;
      h.im(1, 1) = -1;
      basis.push_back(h);
      basis.push_back(add(unit_matrix(n, 0, 1, one, zero), unit_matrix(n, 1, 0, -one, zero)));
      basis.push_back(add(unit_matrix(n, 0, 1, zero, one), unit_matrix(n, 1, 0, zero, one)));
      continue;
    }
    const int last = m - 1;
    ComplexRatMat diag{Mat(n, n), Mat(n, n)};
    for (int k = 0; k < last; ++k) diag.im(k, k) = 1;
    diag.im(last, last) = -(m - 1);
    basis.push_back(diag);
    for (int k = 0; k < last; ++k) {
      basis.push_back(add(unit_matrix(n, k, last, one, zero), unit_matrix(n, last, k, -one, zero)));
      basis.push_back(add(unit_matrix(n, k, last, zero, one), unit_matrix(n, last, k, zero, one)));
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) labels.push_back("e" + std::to_string(i + 1));
  return from_matrix_basis(std::move(labels), std::move(basis));
}

BilinearForm killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Mat g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      g(i, j) = (L.ad(i) * L.ad(j)).trace();
      g(j, i) = g(i, j);
    }
  return {std::move(g)};
}

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

}  // namespace

Report verify_lie_axioms(const LieAlgebra& L, const std::string& prefix) {
  Report rep;
  const std::size_t n = L.dim();

  std::string bad = "none";
  for (std::size_t i = 0; i < n && bad == "none"; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (L.structure(i, j) != exact::scale(Rat(-1), L.structure(j, i))) {
        bad = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        break;
      }
  rep.expect_eq(prefix + ".antisymmetry", "lie-bracket", "none", bad);

  std::string jacobi = "none";
  for (std::size_t i = 0; i < n && jacobi == "none"; ++i)
    for (std::size_t j = 0; j < n && jacobi == "none"; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec ei = exact::unit(n, i), ej = exact::unit(n, j), ek = exact::unit(n, k);
        Vec s = L.bracket(ei, L.structure(j, k));
        s = exact::add(s, L.bracket(ej, L.structure(k, i)));
        s = exact::add(s, L.bracket(ek, L.structure(i, j)));
        if (!exact::is_zero(std::span<const Rat>(s))) {
          jacobi = triple(i, j, k);
          break;
        }
      }
  rep.expect_eq(prefix + ".jacobi", "lie-bracket", "none", jacobi);

  if (L.realization()) {
    const auto& R = *L.realization();
    std::string mismatch = "none";
    for (std::size_t i = 0; i < n && mismatch == "none"; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto comm = R[i] * R[j] - R[j] * R[i];
        ComplexRatMat expect{Mat(comm.re.rows(), comm.re.cols()), Mat(comm.im.rows(), comm.im.cols())};
        const Vec& c = L.structure(i, j);
        for (std::size_t k = 0; k < n; ++k)
          if (!exact::is_zero(c[k])) expect = add(expect, ComplexRatMat{c[k] * R[k].re, c[k] * R[k].im});
        if (!(expect == comm)) {
          mismatch = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
          break;
        }
      }
    rep.expect_eq(prefix + ".realization", "matrix-model", "none", mismatch);
  } else {
    rep.skip(prefix + ".realization", "matrix-model", "no matrix realization");
  }
  return rep;
}

nlohmann::json to_json(const LieAlgebra& L) {
  nlohmann::json sc = nlohmann::json::array();
  for (std::size_t i = 0; i < L.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < L.dim(); ++j) {
      nlohmann::json v = nlohmann::json::array();
      for (const auto& x : L.structure(i, j)) v.push_back(to_string(x));
      row.push_back(std::move(v));
    }
    sc.push_back(std::move(row));
  }
  return {{"dim", L.dim()}, {"labels", L.labels()}, {"structure_constants", std::move(sc)}};
}

}  // namespace hcx::lie
