#include "hcx/hyper.hpp"

#include <cmath>
#include <complex>

#include "hcx/errors.hpp"
#include "hcx/exact/quadratic.hpp"
#include "hcx/exact/subspace.hpp"

namespace hcx::hyper {

using exact::to_string;

namespace {

using Q3 = exact::Quadratic<3>;
using QMat = exact::BasicMat<Q3>;
using QVec = std::vector<Q3>;

QMat lift(const Mat& m) {
  QMat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Q3(m(r, c));
  return out;
}

QVec unit_q(std::size_t n, std::size_t i) {
  QVec v(n);
  v[i] = Q3(1);
  return v;
}

Q3 qdot(const QVec& a, const QVec& b) {
  Q3 acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

QVec qscale(const Q3& s, QVec v) {
  for (auto& x : v) x *= s;
  return v;
}

bool qzero(const QVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Bracket over Q(sqrt 3) using the rational structure constants of L.
QVec qbracket(const lie::LieAlgebra& L, const QVec& x, const QVec& y) {
  const std::size_t n = L.dim();
  QVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Q3 f = x[i] * y[j];
      const Vec& c = L.structure(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!exact::is_zero(c[k])) out[k] += f * Q3(c[k]);
    }
  }
  return out;
}

Mat block_diag(const Mat& top, const Mat& bottom) {
  Mat out(top.rows() + bottom.rows(), top.cols() + bottom.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < bottom.cols(); ++c) out(top.rows() + r, top.cols() + c) = bottom(r, c);
  return out;
}

Mat restrict_block(const Mat& m, std::size_t begin, std::size_t size) {
  Mat out(size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) out(r, c) = m(begin + r, begin + c);
  return out;
}

/// Left multiplication by unit q on g0, transported through phi.
Mat g0_action(const Mat& phi, int unit) {
  auto phi_inv = exact::inverse(phi);
  if (!phi_inv) throw ConstructionError("phi is not invertible");
  return *phi_inv * left_multiplication(unit) * phi;
}

std::vector<std::size_t> range(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> out;
  for (std::size_t i = begin; i < end; ++i) out.push_back(i);
  return out;
}

Eigen::MatrixXcd to_eigen(const lie::ComplexRatMat& m) {
  Eigen::MatrixXcd out(m.re.rows(), m.re.cols());
  for (std::size_t r = 0; r < m.re.rows(); ++r)
    for (std::size_t c = 0; c < m.re.cols(); ++c)
      out(r, c) = std::complex<double>(m.re(r, c).get_d(), m.im(r, c).get_d());
  return out;
}

/// Obata connection value (1/2)([X,Y] + I[IX,Y] - J[X,JY] + K[IX,JY]); used
/// here only to pick W with nabla_W W != 0.
Vec obata_value(const HypercomplexLieAlgebra& H, const Vec& x, const Vec& y) {
  const auto& L = H.algebra;
  const Vec ix = H.I.apply(x), jy = H.J.apply(y);
  Vec s = L.bracket(x, y);
  s = exact::add(s, H.I.apply(L.bracket(ix, y)));
  s = exact::sub(s, H.J.apply(L.bracket(x, jy)));
  s = exact::add(s, H.K.apply(L.bracket(ix, jy)));
  return exact::scale(Rat(1, 2), s);
}

/// Keeps the first g1 basis vector as W unless nabla_W W = 0, then scans
/// the other g1 basis vectors and their pairwise sums.
Vec choose_w(const HypercomplexLieAlgebra& H) {
  const std::size_t n = H.dim();
  std::vector<Vec> candidates;
  for (auto i : H.g1) candidates.push_back(exact::unit(n, i));
  for (std::size_t a = 0; a < H.g1.size(); ++a)
    for (std::size_t b = a + 1; b < H.g1.size(); ++b)
      candidates.push_back(exact::add(exact::unit(n, H.g1[a]), exact::unit(n, H.g1[b])));
  for (const auto& c : candidates)
    if (!exact::is_zero(std::span<const Rat>(obata_value(H, c, c)))) return c;
  throw ConstructionError("no W in g1 with nabla_W W != 0");
}

std::string pair_label(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

std::array<Rat, 4> quaternion_product(const std::array<Rat, 4>& p, const std::array<Rat, 4>& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

Mat left_multiplication(int unit) {
  if (unit < 0 || unit > 3) throw InputError("left_multiplication: unit must be 0..3");
  std::array<Rat, 4> u{};
  u[static_cast<std::size_t>(unit)] = 1;
  Mat m(4, 4);
  for (std::size_t c = 0; c < 4; ++c) {
    std::array<Rat, 4> e{};
    e[c] = 1;
    const auto col = quaternion_product(u, e);
    for (std::size_t r = 0; r < 4; ++r) m(r, c) = col[r];
  }
  return m;
}

HypercomplexLieAlgebra build_hopf_g0() {
  std::vector<std::string> labels{"1", "i", "j", "k"};
  lie::StructureTensor c(4, std::vector<Vec>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      std::array<Rat, 4> p{}, q{};
      p[a] = 1;
      q[b] = 1;
      const auto pq = quaternion_product(p, q), qp = quaternion_product(q, p);
      Vec v(4);
      for (std::size_t k = 0; k < 4; ++k) v[k] = pq[k] - qp[k];
      c[a][b] = std::move(v);
    }
  lie::LieAlgebra L(std::move(labels), std::move(c));

  using cd = std::complex<double>;
  Eigen::MatrixXcd one(2, 2), qi(2, 2), qj(2, 2), qk(2, 2);
  one << cd(0, 1), 0, 0, cd(0, 1);
  qi << cd(0, 1), 0, 0, cd(0, -1);
  qj << 0, 1, -1, 0;
  qk << 0, cd(0, 1), cd(0, 1), 0;

  return HypercomplexLieAlgebra{
      std::move(L),
      left_multiplication(1),
      left_multiplication(2),
      left_multiplication(3),
      range(0, 4),
      {},
      Vec{Rat(-1), Rat(0), Rat(0), Rat(0)},
      Vec{},
      exact::unit(4, 1),
      exact::unit(4, 2),
      exact::unit(4, 3),
      Mat::identity(4),
      std::nullopt,
      {one, qi, qj, qk}};
}

HypercomplexLieAlgebra joyce_su3_standard_basis(const Rat& alpha, SignChoice s) {
  if (exact::is_zero(alpha)) throw InputError("joyce_su3_standard_basis: alpha must be nonzero");
  lie::LieAlgebra L = lie::build_su(3);
  const std::size_t n = 8;
  Mat phi(4, 4);
  phi(0, 3) = -1 / (Rat(s.euler) * alpha);
  phi(1, 0) = s.iota;
  phi(2, 1) = s.jota;
  phi(3, 2) = s.kota;

  const Vec iota = exact::scale(Rat(s.iota), exact::unit(n, 0));
  const Vec jota = exact::scale(Rat(s.jota), exact::unit(n, 1));
  const Vec kota = exact::scale(Rat(s.kota), exact::unit(n, 2));
  const Mat I = block_diag(g0_action(phi, 1), restrict_block(L.ad(iota), 4, 4));
  const Mat J = block_diag(g0_action(phi, 2), restrict_block(L.ad(jota), 4, 4));
  const Mat K = block_diag(g0_action(phi, 3), restrict_block(L.ad(kota), 4, 4));
  const Vec euler = exact::scale(Rat(s.euler) * alpha, exact::unit(n, 3));

  std::vector<Eigen::MatrixXcd> numeric;
  for (const auto& m : *L.realization()) numeric.push_back(to_eigen(m));

  HypercomplexLieAlgebra H{std::move(L), I, J, K, range(0, 4), range(4, 8), euler, exact::unit(n, 4),
                           iota, jota, kota, phi, std::nullopt, std::move(numeric)};
  return H;
}

HypercomplexLieAlgebra build_joyce_su3() {
  const lie::LieAlgebra su3 = lie::build_su(3);
  const lie::BilinearForm h = lie::killing_form(su3);
  const std::size_t n = su3.dim();
  const QMat gram = lift(h.gram);
  auto qh = [&](const QVec& x, const QVec& y) { return qdot(x, gram.apply(y)); };
  auto qad = [&](const QVec& x) {
    QMat m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.set_column(j, qbracket(su3, x, unit_q(n, j)));
    return m;
  };

  // The Euler scale is fixed by asking the Killing form to be quaternionic
  // Hermitian: h(E, E) must equal h(I_cal, I_cal).
  const Rat alpha_sq = h.gram(0, 0) / h.gram(3, 3);
  const auto alpha = Q3::sqrt_of(alpha_sq);
  if (!alpha) throw ConstructionError("Euler scale is not expressible in Q(sqrt 3)");

  std::size_t tried = 0;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1})
        for (int se : {1, -1}) {
          ++tried;
          const SignChoice signs{s1, s2, s3, se};
          std::vector<QVec> g0_vecs{qscale(Q3(s1), unit_q(n, 0)), qscale(Q3(s2), unit_q(n, 1)),
                                    qscale(Q3(s3), unit_q(n, 2)),
                                    qscale(Q3(se) * *alpha, unit_q(n, 3))};
          const QMat ad_i = qad(g0_vecs[0]), ad_j = qad(g0_vecs[1]), ad_k = qad(g0_vecs[2]);
          const QMat ad_e = qad(g0_vecs[3]);
          const QMat sum = ad_i + ad_j + ad_k;

          // W is chosen so that ad E acts on W like I + J + K; then ad E is
          // right multiplication by i + j + k in the frame (W, IW, JW, KW).
          std::optional<QVec> w0;
          std::size_t seed = 0;
          for (std::size_t k = 4; k < n && !w0; ++k) {
            QVec cand = (ad_e + sum).apply(unit_q(n, k));
            if (!qzero(cand) && qzero((ad_e - sum).apply(cand))) {
              w0 = std::move(cand);
              seed = k;
            }
          }
          if (!w0) continue;

          std::vector<QVec> basis = g0_vecs;
          basis.push_back(*w0);
          basis.push_back(ad_i.apply(*w0));
          basis.push_back(ad_j.apply(*w0));
          basis.push_back(ad_k.apply(*w0));
          const QMat P = QMat::from_columns(n, basis);
          const auto P_inv = exact::inverse(P);
          if (!P_inv) continue;
          const Q3 f_scale_sq = qh(basis[0], basis[0]) / qh(*w0, *w0);

          bool rational = true;
          lie::StructureTensor c(n, std::vector<Vec>(n, Vec(n)));
          for (std::size_t a = 0; a < n && rational; ++a)
            for (std::size_t b = 0; b < n && rational; ++b) {
              QVec v = P_inv->apply(qbracket(su3, basis[a], basis[b]));
              if (a >= 4 && b >= 4) v = qscale(f_scale_sq, v);
              for (std::size_t k = 0; k < n; ++k) {
                if (!v[k].is_rational()) {
                  rational = false;
                  break;
                }
                c[a][b][k] = v[k].rational_part();
              }
            }
          if (!rational) continue;

          lie::LieAlgebra L({"iota", "jota", "kota", "euler", "w", "Iw", "Jw", "Kw"}, std::move(c));
          Mat phi(4, 4);
          phi(0, 3) = -1;
          phi(1, 0) = 1;
          phi(2, 1) = 1;
          phi(3, 2) = 1;
          const Mat I = block_diag(g0_action(phi, 1), restrict_block(L.ad(0), 4, 4));
          const Mat J = block_diag(g0_action(phi, 2), restrict_block(L.ad(1), 4, 4));
          const Mat K = block_diag(g0_action(phi, 3), restrict_block(L.ad(2), 4, 4));

          const double f_scale = std::sqrt(f_scale_sq.to_double());
          std::vector<Eigen::MatrixXcd> old_numeric;
          for (const auto& m : *su3.realization()) old_numeric.push_back(to_eigen(m));
          std::vector<Eigen::MatrixXcd> numeric;
          for (std::size_t a = 0; a < n; ++a) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
            for (std::size_t k = 0; k < n; ++k) m += P(k, a).to_double() * old_numeric[k];
            if (a >= 4) m *= f_scale;
            numeric.push_back(std::move(m));
          }

          Convention conv;
          conv.signs = signs;
          conv.alpha_squared = alpha_sq;
          conv.alpha = alpha->to_string();
          conv.right_quaternion = "i+j+k";
          conv.w_seed = seed;
          conv.f_scale_squared = f_scale_sq.to_string();
          for (const auto& b : basis) {
            std::vector<std::string> col;
            for (const auto& x : b) col.push_back(x.to_string());
            conv.basis_change.push_back(std::move(col));
          }
          conv.candidates_tried = tried;

          HypercomplexLieAlgebra H{std::move(L), I, J, K, range(0, 4), range(4, 8), exact::unit(n, 3),
                                   exact::unit(n, 4), exact::unit(n, 0), exact::unit(n, 1),
                                   exact::unit(n, 2), phi, std::move(conv), std::move(numeric)};
          if (!verify_hypercomplex(H).all_passed()) continue;
          H.w = choose_w(H);
          return H;
        }
  throw ConstructionError("no sign convention yields a hypercomplex structure on su(3)");
}

Vec nijenhuis(const HypercomplexLieAlgebra& H, const Mat& A, const Vec& x, const Vec& y) {
  const std::size_t n = H.dim();
  if (A.rows() != n || A.cols() != n) throw InputError("nijenhuis: endomorphism has wrong shape");
  if (!(A * A == -Mat::identity(n))) throw InputError("nijenhuis: A is not an almost complex structure");
  const auto& L = H.algebra;
  const Vec ax = A.apply(x), ay = A.apply(y);
  Vec s = L.bracket(x, y);
  s = exact::add(s, A.apply(L.bracket(ax, y)));
  s = exact::add(s, A.apply(L.bracket(x, ay)));
  return exact::sub(s, L.bracket(ax, ay));
}

Vec dbar(const HypercomplexLieAlgebra& H, const Vec& x, const Vec& y) {
  const auto& L = H.algebra;
  Vec s = exact::add(L.bracket(x, y), H.I.apply(L.bracket(H.I.apply(x), y)));
  return exact::scale(Rat(1, 2), s);
}

Report verify_hypercomplex(const HypercomplexLieAlgebra& H, const std::string& prefix) {
  Report rep;
  const std::size_t n = H.dim();
  const Mat id = Mat::identity(n);
  const auto& L = H.algebra;
  const std::string q = "quaternion-relations";

  auto bool_text = [](bool b) { return std::string(b ? "true" : "false"); };
  rep.expect_eq(prefix + ".quaternion.I_squared", q, "-Id", H.I * H.I == -id ? "-Id" : "other");
  rep.expect_eq(prefix + ".quaternion.J_squared", q, "-Id", H.J * H.J == -id ? "-Id" : "other");
  rep.expect_eq(prefix + ".quaternion.K_squared", q, "-Id", H.K * H.K == -id ? "-Id" : "other");
  rep.expect_eq(prefix + ".quaternion.IJ_eq_K", q, "true", bool_text(H.I * H.J == H.K));
  rep.expect_eq(prefix + ".quaternion.JI_eq_minus_K", q, "true", bool_text(H.J * H.I == -H.K));

  auto preserves = [&](const Mat& A) {
    for (auto c : H.g0)
      for (auto r : H.g1)
        if (!exact::is_zero(A(r, c))) return false;
    for (auto c : H.g1)
      for (auto r : H.g0)
        if (!exact::is_zero(A(r, c))) return false;
    return true;
  };
  rep.expect_eq(prefix + ".grading_preserved", "z2-grading", "true",
                bool_text(preserves(H.I) && preserves(H.J) && preserves(H.K)));

  // g1: I, J, K act by ad of I_cal, J_cal, K_cal.
  if (H.g1.empty()) {
    rep.skip(prefix + ".g1_adjoint_action", "joyce-construction", "g1 is empty");
  } else {
    bool ok = true;
    const std::array<const Mat*, 3> ops{&H.I, &H.J, &H.K};
    const std::array<const Vec*, 3> elems{&H.iota, &H.jota, &H.kota};
    for (std::size_t a = 0; a < 3; ++a) {
      const Mat ad = L.ad(*elems[a]);
      for (auto c : H.g1)
        for (std::size_t r = 0; r < n; ++r)
          if ((*ops[a])(r, c) != ad(r, c)) ok = false;
    }
    rep.expect_eq(prefix + ".g1_adjoint_action", "joyce-construction", "true", bool_text(ok));
  }

  // g0: left quaternion multiplication transported through phi.
  {
    bool ok = exact::inverse(H.phi).has_value();
    auto g0_coords = [&](const Vec& v) {
      Vec out;
      for (auto i : H.g0) out.push_back(v[i]);
      return out;
    };
    const std::array<const Mat*, 3> ops{&H.I, &H.J, &H.K};
    for (int u = 1; u <= 3 && ok; ++u) {
      const Mat Lq = left_multiplication(u);
      for (auto c : H.g0) {
        const Vec col = ops[static_cast<std::size_t>(u - 1)]->column(c);
        const Vec lhs = H.phi.apply(g0_coords(col));
        const Vec rhs = Lq.apply(H.phi.apply(g0_coords(exact::unit(n, c))));
        if (lhs != rhs) ok = false;
      }
    }
    rep.expect_eq(prefix + ".g0_left_multiplication", "quaternion-identification", "true", bool_text(ok));
    const Vec phi_e = H.phi.apply(g0_coords(H.euler));
    rep.expect_eq(prefix + ".euler_is_minus_one", "euler-field", "[-1/1, 0/1, 0/1, 0/1]",
                  exact::to_string(std::span<const Rat>(phi_e)));
  }

  // Integrability on every ordered basis pair.
  const std::array<std::pair<const char*, const Mat*>, 3> structures{
      {{"I", &H.I}, {"J", &H.J}, {"K", &H.K}}};
  for (const auto& [name, A] : structures) {
    std::string bad = "none";
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        ++pairs;
        if (bad == "none" &&
            !exact::is_zero(std::span<const Rat>(nijenhuis(H, *A, exact::unit(n, i), exact::unit(n, j)))))
          bad = pair_label(i, j);
      }
    rep.expect_eq(prefix + ".nijenhuis_" + name, "nijenhuis-integrability",
                  "0 on " + std::to_string(pairs) + " pairs",
                  bad == "none" ? "0 on " + std::to_string(pairs) + " pairs" : "nonzero at " + bad);
  }

  const lie::BilinearForm h = lie::killing_form(L);
  const bool degenerate = exact::rank_and_basis(h.gram).first < n;
  for (const auto& [name, A] : structures) {
    if (degenerate) {
      rep.skip(prefix + ".killing_hermitian_" + name, "killing-quaternionic-hermitian",
               "Killing form is degenerate");
      continue;
    }
    const bool ok = A->transpose() * h.gram * *A == h.gram;
    rep.expect_eq(prefix + ".killing_hermitian_" + name, "killing-quaternionic-hermitian", "true",
                  bool_text(ok));
  }

  std::vector<Vec> hb{H.euler, H.I.apply(H.euler), H.J.apply(H.euler), H.K.apply(H.euler)};
  if (!H.w.empty())
    for (const Vec& v : {H.w, H.I.apply(H.w), H.J.apply(H.w), H.K.apply(H.w)}) hb.push_back(v);
  const auto span = exact::Subspace::span(n, hb);
  rep.expect_eq(prefix + ".h_basis", "euler-w-h-basis", std::to_string(n), std::to_string(span.dim()));
  return rep;
}

nlohmann::json to_json(const HypercomplexLieAlgebra& H) {
  auto mat = [](const Mat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  auto vec = [](const Vec& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
  };
  nlohmann::json j{{"labels", H.algebra.labels()},
                   {"I", mat(H.I)},
                   {"J", mat(H.J)},
                   {"K", mat(H.K)},
                   {"phi", mat(H.phi)},
                   {"euler", vec(H.euler)},
                   {"w", vec(H.w)},
                   {"g0", H.g0},
                   {"g1", H.g1}};
  if (H.convention) {
    const auto& c = *H.convention;
    j["alpha"] = c.alpha;
    j["alpha_squared"] = to_string(c.alpha_squared);
    j["sign_choices"] = {{"iota", c.signs.iota}, {"jota", c.signs.jota}, {"kota", c.signs.kota},
                         {"euler", c.signs.euler}};
    j["right_quaternion"] = c.right_quaternion;
    j["w_seed"] = "e" + std::to_string(c.w_seed + 1);
    j["f_scale_squared"] = c.f_scale_squared;
    j["basis_change"] = c.basis_change;
    j["candidates_tried"] = c.candidates_tried;
  } else {
    j["alpha"] = nullptr;
    j["sign_choices"] = nullptr;
  }
  return j;
}

}  // namespace hcx::hyper
