#include "hcx/curvature.hpp"

#include <random>

#include "hcx/errors.hpp"
#include "hcx/exact/subspace.hpp"

namespace hcx::curvature {

using exact::to_string;

namespace {

bool zero(const Vec& v) { return exact::is_zero(std::span<const Rat>(v)); }

std::string pair_label(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

Mat curvature_endo(const lie::LieAlgebra& L, const Connection& C, const Vec& x, const Vec& y) {
  const Mat lx = C.at(x), ly = C.at(y);
  return exact::commutator(lx, ly) - C.at(L.bracket(x, y));
}

Mat CurvatureTensor::at(std::size_t i, std::size_t j) const {
  if (i == j) return Mat(dim, dim);
  if (i < j) return r.at({i, j});
  return -r.at({j, i});
}

CurvatureTensor curvature_tensor(const lie::LieAlgebra& L, const Connection& C) {
  const std::size_t n = L.dim();
  if (C.dim() != n) throw InputError("curvature_tensor: connection dimension mismatch");
  CurvatureTensor R;
  R.dim = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      R.r.emplace(std::make_pair(i, j), curvature_endo(L, C, exact::unit(n, i), exact::unit(n, j)));
  return R;
}

std::size_t curvature_rank(const CurvatureTensor& R) {
  std::vector<Vec> flat;
  for (const auto& [key, m] : R.r) flat.push_back(m.flatten());
  return exact::Subspace::span(R.dim * R.dim, flat).dim();
}

std::size_t z_span_dimension(const HypercomplexLieAlgebra& H, const Connection& C) {
  if (H.w.empty()) return 0;
  const auto& W = H.w;
  std::vector<Vec> z;
  for (const Mat* A : {&H.I, &H.J, &H.K}) z.push_back(curvature_endo(H.algebra, C, W, A->apply(W)).apply(W));
  return exact::Subspace::span(H.dim(), z).dim();
}

std::size_t g1_image_dimension(const HypercomplexLieAlgebra& H, const CurvatureTensor& R) {
  std::vector<Vec> images;
  for (const auto& [key, m] : R.r)
    for (auto c : H.g1) images.push_back(m.column(c));
  return exact::Subspace::span(H.dim(), images).dim();
}

std::vector<Vec> random_vectors(std::size_t dim, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  std::vector<Vec> out(count, Vec(dim));
  for (auto& v : out)
    for (auto& x : v) x = exact::make_rat(dist(rng), 2);
  return out;
}

Report verify_curvature(const HypercomplexLieAlgebra& H, const Connection& C, CurvatureOptions opts,
                        const std::string& prefix) {
  Report rep;
  const std::size_t n = H.dim();
  const auto& L = H.algebra;
  const CurvatureTensor R = curvature_tensor(L, C);
  const auto rnd = random_vectors(n, opts.samples, opts.seed);
  auto e = [n](std::size_t i) { return exact::unit(n, i); };
  auto Rxy = [&](const Vec& x, const Vec& y) { return curvature_endo(L, C, x, y); };

  // (a) R(AX, AY) = R(X, Y) for A in {I, J, K}.
  {
    std::string bad = "none";
    auto check = [&](const Vec& x, const Vec& y, const std::string& where) {
      const Mat r = Rxy(x, y);
      for (const Mat* A : {&H.I, &H.J, &H.K})
        if (bad == "none" && !(Rxy(A->apply(x), A->apply(y)) == r)) bad = where;
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) check(e(i), e(j), pair_label(i, j));
    for (std::size_t k = 0; k + 1 < rnd.size(); ++k) check(rnd[k], rnd[k + 1], "random " + std::to_string(k));
    rep.expect_eq(prefix + ".su2_invariance", "curvature-su2-invariance", "none", bad);
  }

  // (b) [R(X, Y), A] = 0.
  {
    std::string bad = "none";
    for (const auto& [key, m] : R.r)
      for (const Mat* A : {&H.I, &H.J, &H.K})
        if (bad == "none" && !exact::commutator(m, *A).is_zero()) bad = pair_label(key.first, key.second);
    for (std::size_t k = 0; k + 1 < rnd.size() && bad == "none"; ++k) {
      const Mat m = Rxy(rnd[k], rnd[k + 1]);
      for (const Mat* A : {&H.I, &H.J, &H.K})
        if (bad == "none" && !exact::commutator(m, *A).is_zero()) bad = "random " + std::to_string(k);
    }
    rep.expect_eq(prefix + ".h_linear", "curvature-h-linear", "none", bad);
  }

  // (c) first Bianchi identity.
  {
    std::string bad = "none";
    for (std::size_t i = 0; i < n && bad == "none"; ++i)
      for (std::size_t j = 0; j < n && bad == "none"; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Vec s = R.at(i, j).column(k);
          s = exact::add(s, R.at(j, k).column(i));
          s = exact::add(s, R.at(k, i).column(j));
          if (!zero(s)) {
            bad = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
            break;
          }
        }
    for (std::size_t k = 0; k + 2 < rnd.size() && bad == "none"; ++k) {
      const Vec &x = rnd[k], &y = rnd[k + 1], &z = rnd[k + 2];
      Vec s = Rxy(x, y).apply(z);
      s = exact::add(s, Rxy(y, z).apply(x));
      s = exact::add(s, Rxy(z, x).apply(y));
      if (!zero(s)) bad = "random " + std::to_string(k);
    }
    rep.expect_eq(prefix + ".bianchi", "first-bianchi", "none", bad);
  }

  std::vector<Vec> points;
  for (std::size_t i = 0; i < n; ++i) points.push_back(e(i));
  points.insert(points.end(), rnd.begin(), rnd.end());
  auto where = [n](std::size_t k) {
    return k < n ? "e" + std::to_string(k + 1) : "random " + std::to_string(k - n);
  };

  // (d) R(X,IX)X + J R(X,KX)X - K R(X,JX)X = 0.
  {
    std::string bad = "none";
    for (std::size_t k = 0; k < points.size() && bad == "none"; ++k) {
      const Vec& x = points[k];
      Vec s = Rxy(x, H.I.apply(x)).apply(x);
      s = exact::add(s, H.J.apply(Rxy(x, H.K.apply(x)).apply(x)));
      s = exact::sub(s, H.K.apply(Rxy(x, H.J.apply(x)).apply(x)));
      if (!zero(s)) bad = where(k);
    }
    rep.expect_eq(prefix + ".quaternionic_identity", "curvature-pointwise-identity", "none", bad);
  }

  // (e) R(E,X)X = 0, plus R(E,IX)IX = -R(E,X)X from the same argument.
  {
    std::string bad = "none", bad_i = "none";
    for (std::size_t k = 0; k < points.size(); ++k) {
      const Vec& x = points[k];
      const Vec rx = Rxy(H.euler, x).apply(x);
      if (bad == "none" && !zero(rx)) bad = where(k);
      const Vec ix = H.I.apply(x);
      if (bad_i == "none" && Rxy(H.euler, ix).apply(ix) != exact::scale(Rat(-1), rx)) bad_i = where(k);
    }
    rep.expect_eq(prefix + ".euler_XX_zero", "curvature-euler-kernel", "none", bad);
    rep.expect_eq(prefix + ".euler_IX_IX", "curvature-euler-kernel", "none", bad_i);
  }

  // (f) R(X,Y)E = 0.
  {
    std::string bad = "none";
    for (const auto& [key, m] : R.r)
      if (bad == "none" && !zero(m.apply(H.euler))) bad = pair_label(key.first, key.second);
    rep.expect_eq(prefix + ".kills_euler", "curvature-euler-kernel", "none", bad);
  }

  // (g) grading facts.
  if (H.g1.empty()) {
    rep.skip(prefix + ".grading_g0g0", "curvature-grading", "g1 is empty");
    rep.skip(prefix + ".grading_g0g1", "curvature-grading", "g1 is empty");
    rep.skip(prefix + ".grading_g1g1", "curvature-grading", "g1 is empty");
  } else {
    auto kills_g1 = [&](const Mat& m) {
      for (auto c : H.g1)
        if (!zero(m.column(c))) return false;
      return true;
    };
    auto preserves_g1 = [&](const Mat& m) {
      for (auto c : H.g1)
        for (auto r : H.g0)
          if (!exact::is_zero(m(r, c))) return false;
      return true;
    };
    std::string b00 = "none", b01 = "none", b11 = "none";
    for (auto x : H.g0)
      for (auto y : H.g0)
        if (b00 == "none" && x != y && !kills_g1(R.at(x, y))) b00 = pair_label(x, y);
    for (auto x : H.g0)
      for (auto y : H.g1)
        if (b01 == "none" && !kills_g1(R.at(x, y))) b01 = pair_label(x, y);
    for (auto x : H.g1)
      for (auto y : H.g1)
        if (b11 == "none" && x != y && !preserves_g1(R.at(x, y))) b11 = pair_label(x, y);
    rep.expect_eq(prefix + ".grading_g0g0", "curvature-grading", "none", b00);
    rep.expect_eq(prefix + ".grading_g0g1", "curvature-grading", "none", b01);
    rep.expect_eq(prefix + ".grading_g1g1", "curvature-grading", "none", b11);
  }

  // R(X,Y)Z agrees with the antisymmetrised second covariant derivative.
  {
    std::string bad = "none";
    for (std::size_t i = 0; i < n && bad == "none"; ++i)
      for (std::size_t j = 0; j < n && bad == "none"; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Vec alt = exact::sub(obata::second_covariant(C, e(k), e(i), e(j)),
                                     obata::second_covariant(C, e(k), e(j), e(i)));
          if (alt != R.at(i, j).column(k)) {
            bad = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
            break;
          }
        }
    rep.expect_eq(prefix + ".second_derivative_alt", "curvature-formula", "none", bad);
  }

  // (h) span{Z1, Z2, Z3}.
  if (H.w.empty()) {
    rep.skip(prefix + ".z_span_at_least_2", "z-span", "g1 is empty");
  } else {
    const std::size_t d = z_span_dimension(H, C);
    rep.record(prefix + ".z_span_at_least_2", "z-span", ">= 2", std::to_string(d), d >= 2);
  }
  return rep;
}

nlohmann::json to_json(const CurvatureTensor& R) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, m] : R.r) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
      rows.push_back(std::move(row));
    }
    out[std::to_string(key.first + 1) + "," + std::to_string(key.second + 1)] = std::move(rows);
  }
  return out;
}

}  // namespace hcx::curvature
