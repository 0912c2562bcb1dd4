#include "hcx/holonomy.hpp"

#include <functional>
#include <random>

#include "hcx/errors.hpp"
#include "hcx/exact/polynomial.hpp"

namespace hcx::holonomy {

using exact::to_string;

namespace {

Mat unflatten(std::size_t n, const Vec& v) { return Mat::from_flat(n, std::span<const Rat>(v)); }

/// Stacks, for every generator A, the n*n linear equations coeff(A, r, c)
/// on an unknown n x n matrix and returns the dimension of the solutions.
/// coeff must return the row for entry (r, c) over unknowns indexed r*n + c.
using EntryEquation = std::function<Vec(const Mat& A, std::size_t r, std::size_t c)>;

Subspace solve_entrywise(std::size_t n, const std::vector<Mat>& gens, const EntryEquation& eq,
                         std::vector<Vec> extra_rows = {}) {
  std::vector<Vec> rows = std::move(extra_rows);
  for (const auto& A : gens)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) rows.push_back(eq(A, r, c));
  if (rows.empty()) rows.push_back(Vec(n * n));
  return exact::solve_homogeneous(Mat::from_rows(n * n, rows));
}

Subspace solve_vectorwise(std::size_t n, const std::vector<Mat>& gens, bool transpose) {
  std::vector<Vec> rows;
  for (const auto& A : gens)
    for (std::size_t r = 0; r < n; ++r) rows.push_back(transpose ? A.column(r) : A.row(r));
  if (rows.empty()) rows.push_back(Vec(n));
  return exact::solve_homogeneous(Mat::from_rows(n, rows));
}

Mat projection(const Subspace& onto, const Subspace& along) {
  std::vector<Vec> cols = onto.basis();
  cols.insert(cols.end(), along.basis().begin(), along.basis().end());
  const std::size_t m = onto.ambient_dim();
  const Mat M = Mat::from_columns(m, cols);
  const auto M_inv = exact::inverse(M);
  if (!M_inv) throw InputError("projection: subspaces are not complementary");
  Mat D(m, m);
  for (std::size_t i = 0; i < onto.dim(); ++i) D(i, i) = 1;
  return M * D * *M_inv;
}

bool complementary(const Subspace& a, const Subspace& b) {
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all).dim() == a.ambient_dim();
}

Mat realify(const Mat& re, const Mat& im) {
  const std::size_t n = re.rows();
  Mat out(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      out(r, c) = re(r, c);
      out(r, n + c) = -im(r, c);
      out(n + r, c) = im(r, c);
      out(n + r, n + c) = re(r, c);
    }
  return out;
}

Mat restricted(const Mat& m, const std::vector<std::size_t>& block) {
  Mat out(block.size(), block.size());
  for (std::size_t r = 0; r < block.size(); ++r)
    for (std::size_t c = 0; c < block.size(); ++c) out(r, c) = m(block[r], block[c]);
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<Mat> EndoSubspace::matrices() const {
  std::vector<Mat> out;
  for (const auto& v : space.basis()) out.push_back(unflatten(n, v));
  return out;
}

bool EndoSubspace::contains(const Mat& m) const {
  if (m.rows() != n || m.cols() != n) throw InputError("EndoSubspace::contains: shape mismatch");
  const Vec flat = m.flatten();
  return space.contains(std::span<const Rat>(flat));
}

EndoSubspace span_of(std::size_t n, const std::vector<Mat>& mats) {
  std::vector<Vec> flat;
  for (const auto& m : mats) flat.push_back(m.flatten());
  return {n, Subspace::span(n * n, flat)};
}

namespace {

EndoSubspace close_with(std::size_t n, const std::vector<Vec>& seed, const Connection& C) {
  std::vector<exact::LinearMap> maps;
  for (const auto& lam : C.lambda)
    maps.push_back([n, &lam](const Vec& v) { return exact::commutator(lam, unflatten(n, v)).flatten(); });
  const exact::BilinearMap bracket = [n](const Vec& a, const Vec& b) {
    return exact::commutator(unflatten(n, a), unflatten(n, b)).flatten();
  };
  return {n, exact::subspace_closure(n * n, seed, maps, bracket)};
}

}  // namespace

EndoSubspace nomizu_closure(const lie::LieAlgebra& L, const Connection& C) {
  const auto R = curvature::curvature_tensor(L, C);
  std::vector<Vec> seed;
  for (const auto& [key, m] : R.r) seed.push_back(m.flatten());
  return close_with(L.dim(), seed, C);
}

EndoSubspace reclose(const EndoSubspace& sub, const Connection& C) {
  return close_with(sub.n, sub.space.basis(), C);
}

EndoSubspace commutant(std::size_t n, const std::vector<Mat>& gens) {
  for (const auto& A : gens)
    if (A.rows() != n || A.cols() != n) throw InputError("commutant: generator has wrong shape");
  // (AX - XA)(r, c) = sum_k A(r,k) X(k,c) - X(r,k) A(k,c).
  const EntryEquation eq = [n](const Mat& A, std::size_t r, std::size_t c) {
    Vec row(n * n);
    for (std::size_t k = 0; k < n; ++k) {
      row[k * n + c] += A(r, k);
      row[r * n + k] -= A(k, c);
    }
    return row;
  };
  return {n, solve_entrywise(n, gens, eq)};
}

Valence parse_valence(const std::string& text) {
  if (text == "1,0") return Valence::vector;
  if (text == "0,1") return Valence::covector;
  if (text == "0,2") return Valence::bilinear;
  if (text == "0,2s" || text == "sym") return Valence::symmetric_bilinear;
  if (text == "2,0") return Valence::bivector;
  if (text == "1,1") return Valence::endomorphism;
  if (text == "top") return Valence::top_form;
  throw InputError("unsupported valence: " + text);
}

std::string to_string(Valence v) {
  switch (v) {
    case Valence::vector: return "1,0";
    case Valence::covector: return "0,1";
    case Valence::bilinear: return "0,2";
    case Valence::symmetric_bilinear: return "0,2s";
    case Valence::bivector: return "2,0";
    case Valence::endomorphism: return "1,1";
    case Valence::top_form: return "top";
  }
  return "unknown";
}

std::size_t invariant_tensor_dims(const EndoSubspace& hol, Valence valence) {
  const std::size_t n = hol.n;
  const auto gens = hol.matrices();
  switch (valence) {
    case Valence::vector: return solve_vectorwise(n, gens, false).dim();
    case Valence::covector: return solve_vectorwise(n, gens, true).dim();
    case Valence::endomorphism: return commutant(n, gens).dim();
    case Valence::top_form: {
      for (const auto& A : gens)
        if (!exact::is_zero(A.trace())) return 0;
      return 1;
    }
    case Valence::bilinear:
    case Valence::symmetric_bilinear: {
      // (A^T B + B A)(r, c) = sum_k A(k,r) B(k,c) + B(r,k) A(k,c).
      const EntryEquation eq = [n](const Mat& A, std::size_t r, std::size_t c) {
        Vec row(n * n);
        for (std::size_t k = 0; k < n; ++k) {
          row[k * n + c] += A(k, r);
          row[r * n + k] += A(k, c);
        }
        return row;
      };
      std::vector<Vec> sym;
      if (valence == Valence::symmetric_bilinear)
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = r + 1; c < n; ++c) {
            Vec row(n * n);
            row[r * n + c] = 1;
            row[c * n + r] = -1;
            sym.push_back(std::move(row));
          }
      return solve_entrywise(n, gens, eq, std::move(sym)).dim();
    }
    case Valence::bivector: {
      // (A T + T A^T)(r, c) = sum_k A(r,k) T(k,c) + T(r,k) A(c,k).
      const EntryEquation eq = [n](const Mat& A, std::size_t r, std::size_t c) {
        Vec row(n * n);
        for (std::size_t k = 0; k < n; ++k) {
          row[k * n + c] += A(r, k);
          row[r * n + k] += A(c, k);
        }
        return row;
      };
      return solve_entrywise(n, gens, eq).dim();
    }
  }
  throw InputError("unsupported valence");
}

Mat three_eigenvalue_witness(const HypercomplexLieAlgebra& H) {
  const Mat adE = H.algebra.ad(H.euler);
  Mat out(H.dim(), H.dim());
  for (auto i : H.g0) out(i, i) = 1;
  for (auto r : H.g1)
    for (auto c : H.g1) out(r, c) = adE(r, c);
  return out;
}

Mat g0_annihilating_witness(const HypercomplexLieAlgebra& H) {
  const Mat adE = H.algebra.ad(H.euler);
  Mat out(H.dim(), H.dim());
  for (auto r : H.g1)
    for (auto c : H.g1) out(r, c) = adE(r, c);
  return out;
}

std::size_t g0_annihilator_dimension(const EndoSubspace& hol, const HypercomplexLieAlgebra& H) {
  const auto basis = hol.matrices();
  if (basis.empty()) return 0;
  // Unknown coefficients c_k; equations: sum_k c_k B_k(r, g0 column) = 0.
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < H.dim(); ++r)
    for (auto c : H.g0) {
      Vec row(basis.size());
      for (std::size_t k = 0; k < basis.size(); ++k) row[k] = basis[k](r, c);
      rows.push_back(std::move(row));
    }
  if (rows.empty()) return basis.size();
  return exact::solve_homogeneous(Mat::from_rows(basis.size(), rows)).dim();
}

bool is_lie_subalgebra(const EndoSubspace& sub) {
  const auto basis = sub.matrices();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (!sub.contains(exact::commutator(basis[a], basis[b]))) return false;
  return true;
}

bool has_quaternion_structure(const EndoSubspace& alg, const HypercomplexLieAlgebra& H) {
  const std::vector<Mat> q{Mat::identity(H.dim()), H.I, H.J, H.K};
  if (!(alg == span_of(H.dim(), q))) return false;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      std::array<Rat, 4> ea{}, eb{};
      ea[a] = 1;
      eb[b] = 1;
      const auto prod = hyper::quaternion_product(ea, eb);
      Mat expect(H.dim(), H.dim());
      for (std::size_t k = 0; k < 4; ++k)
        if (!exact::is_zero(prod[k])) expect += prod[k] * q[k];
      if (!(q[a] * q[b] == expect)) return false;
    }
  return true;
}

Report identify_gl2h(const EndoSubspace& hol, const HypercomplexLieAlgebra& H, const std::string& prefix) {
  Report rep;
  const std::size_t n = H.dim();
  const std::string anchor = "holonomy-gl2h";

  rep.expect_eq(prefix + ".dim", anchor, "16", std::to_string(hol.dim()));
  const EndoSubspace comm = commutant(n, {H.I, H.J, H.K});
  rep.expect_eq(prefix + ".commutant_dim", anchor, "16", std::to_string(comm.dim()));
  rep.expect_eq(prefix + ".in_commutant", anchor, "true", bool_text(comm.contains(hol)));
  rep.expect_eq(prefix + ".equals_commutant", anchor, "true",
                bool_text(comm.contains(hol) && hol.contains(comm) && comm == hol));
  rep.expect_eq(prefix + ".lie_subalgebra", anchor, "true", bool_text(is_lie_subalgebra(hol)));

  const EndoSubspace dc = commutant(n, hol.matrices());
  rep.expect_eq(prefix + ".double_commutant_dim", "quaternion-commutant", "4", std::to_string(dc.dim()));
  rep.expect_eq(prefix + ".double_commutant_quaternion", "quaternion-commutant", "true",
                bool_text(has_quaternion_structure(dc, H)));

  const std::array<std::pair<Valence, const char*>, 7> expected{{{Valence::vector, "0"},
                                                                  {Valence::covector, "0"},
                                                                  {Valence::bilinear, "0"},
                                                                  {Valence::symmetric_bilinear, "0"},
                                                                  {Valence::bivector, "0"},
                                                                  {Valence::endomorphism, "4"},
                                                                  {Valence::top_form, "0"}}};
  for (const auto& [v, want] : expected) {
    std::string id = to_string(v);
    for (auto& ch : id)
      if (ch == ',') ch = '_';
    rep.expect_eq(prefix + ".invariant_tensors." + id, "invariant-tensors", want,
                  std::to_string(invariant_tensor_dims(hol, v)));
  }

  std::string trace_witness = "none";
  const auto basis = hol.matrices();
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!exact::is_zero(basis[k].trace())) {
      trace_witness = "basis " + std::to_string(k + 1) + " trace " + to_string(basis[k].trace());
      break;
    }
  rep.record(prefix + ".trace_nonzero_element", "volume-form-elimination", "some basis element", trace_witness,
             trace_witness != "none");

  const Mat three = three_eigenvalue_witness(H);
  const bool three_member = hol.contains(three);
  const std::size_t eig = exact::distinct_eigenvalue_count(three);
  rep.expect_eq(prefix + ".three_eigenvalue_element", "three-eigenvalue-operator", "member, 3 eigenvalues",
                std::string(three_member ? "member" : "not a member") + ", " + std::to_string(eig) +
                    " eigenvalues");

  const std::size_t ann = g0_annihilator_dimension(hol, H);
  rep.record(prefix + ".g0_annihilator_dim", "g0-annihilator", ">= 2", std::to_string(ann), ann >= 2);

  // On g1 the witness must commute with I, J, K, square to a negative
  // scalar, and not be a real scalar itself.
  const Mat w = g0_annihilating_witness(H);
  bool quaternion_scalar = hol.contains(w);
  if (!H.g1.empty()) {
    const Mat w1 = restricted(w, H.g1);
    const Mat sq = w1 * w1;
    const Rat s = sq(0, 0);
    quaternion_scalar = quaternion_scalar && sq == s * Mat::identity(H.g1.size()) && s < 0;
  } else {
    quaternion_scalar = false;
  }
  rep.expect_eq(prefix + ".g0_annihilating_quaternion_scalar", "g0-annihilator", "true",
                bool_text(quaternion_scalar));
  return rep;
}

ProjectionAlgebra projection_algebra_dim(const Subspace& V1, const Subspace& V2, const Subspace& V3) {
  const std::size_t m = V1.ambient_dim();
  if (V2.ambient_dim() != m || V3.ambient_dim() != m || m % 2 != 0)
    throw InputError("projection_algebra_dim: ambient dimensions must agree and be even");
  const std::size_t n = m / 2;
  if (V1.dim() != n || V2.dim() != n || V3.dim() != n)
    throw InputError("projection_algebra_dim: each subspace must have half the ambient dimension");
  if (!complementary(V1, V2) || !complementary(V2, V3) || !complementary(V1, V3))
    throw InputError("projection_algebra_dim: subspaces are not pairwise complementary");

  const std::array<const Subspace*, 3> V{&V1, &V2, &V3};
  std::vector<Mat> P;  // order 12, 13, 21, 23, 31, 32
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) P.push_back(projection(*V[i], *V[j]));

  std::vector<Vec> seed;
  for (const auto& p : P) seed.push_back(p.flatten());
  const exact::BilinearMap product = [m](const Vec& a, const Vec& b) {
    return (unflatten(m, a) * unflatten(m, b)).flatten();
  };
  ProjectionAlgebra out;
  out.dim = exact::subspace_closure(m * m, seed, std::vector<exact::LinearMap>{}, product).dim();

  const Mat A = P[0] * P[4];
  std::vector<Vec> cols;
  for (const auto& w : V2.basis()) cols.push_back(A.apply(w));
  for (const auto& w : V2.basis()) cols.push_back(w);
  const Mat M = Mat::from_columns(m, cols);
  const auto M_inv = exact::inverse(M);
  if (!M_inv) return out;

  std::vector<Vec> blocks;
  bool block_scalar = true;
  for (const auto& p : P) {
    const Mat q = *M_inv * p * M;
    Vec x(4);
    for (std::size_t a = 0; a < 2 && block_scalar; ++a)
      for (std::size_t b = 0; b < 2 && block_scalar; ++b) {
        const Rat s = q(a * n, b * n);
        for (std::size_t r = 0; r < n && block_scalar; ++r)
          for (std::size_t c = 0; c < n; ++c)
            if (q(a * n + r, b * n + c) != (r == c ? s : Rat(0))) {
              block_scalar = false;
              break;
            }
        x[a * 2 + b] = s;
      }
    blocks.push_back(std::move(x));
  }
  out.mat2_iso = block_scalar && Subspace::span(4, blocks).dim() == 4;
  return out;
}

std::vector<Subspace> random_complementary_triple(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("random_complementary_triple: n must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  auto draw = [&] {
    for (;;) {
      std::vector<Vec> vs(n, Vec(2 * n));
      for (auto& v : vs)
        for (auto& x : v) x = dist(rng);
      Subspace s = Subspace::span(2 * n, vs);
      if (s.dim() == n) return s;
    }
  };
  for (;;) {
    std::vector<Subspace> t{draw(), draw(), draw()};
    if (complementary(t[0], t[1]) && complementary(t[1], t[2]) && complementary(t[0], t[2])) return t;
  }
}

std::vector<Mat> sl2c_s3c2_generators() {
  // Basis x^3, x^2 y, x y^2, y^3; H = x d/dx - y d/dy, E = x d/dy, F = y d/dx.
  Mat h(4, 4), e(4, 4), f(4, 4);
  const std::array<int, 4> weights{3, 1, -1, -3};
  for (std::size_t i = 0; i < 4; ++i) h(i, i) = weights[i];
  e(0, 1) = 1;
  e(1, 2) = 2;
  e(2, 3) = 3;
  f(1, 0) = 3;
  f(2, 1) = 2;
  f(3, 2) = 1;
  const Mat zero(4, 4);
  return {realify(h, zero), realify(e, zero), realify(f, zero),
          realify(zero, h), realify(zero, e), realify(zero, f)};
}

std::size_t sl2c_s3c2_commutant_dim() { return commutant(8, sl2c_s3c2_generators()).dim(); }

nlohmann::json to_json(const EndoSubspace& sub) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& v : sub.space.basis()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    basis.push_back(std::move(row));
  }
  return {{"n", sub.n}, {"dim", sub.dim()}, {"basis", std::move(basis)}};
}

}  // namespace hcx::holonomy
