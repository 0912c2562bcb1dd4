#include "hcx/obata.hpp"

#include "hcx/errors.hpp"
#include "hcx/exact/subspace.hpp"

namespace hcx::obata {

using exact::to_string;

namespace {

std::string pair_label(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

bool zero(const Vec& v) { return exact::is_zero(std::span<const Rat>(v)); }

/// Runs f over all ordered basis pairs; returns the first pair where it is
/// false, or "none".
template <class F>
std::string first_failing_pair(std::size_t n, F&& f) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!f(i, j)) return pair_label(i, j);
  return "none";
}

}  // namespace

Mat Connection::at(const Vec& x) const {
  if (x.size() != dim()) throw InputError("Connection::at: vector length mismatch");
  Mat out(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!exact::is_zero(x[i])) out += x[i] * lambda[i];
  return out;
}

Vec obata_formula(const HypercomplexLieAlgebra& H, const Vec& x, const Vec& y) {
  const auto& L = H.algebra;
  const Vec ix = H.I.apply(x), jy = H.J.apply(y);
  Vec s = L.bracket(x, y);
  s = exact::add(s, H.I.apply(L.bracket(ix, y)));
  s = exact::sub(s, H.J.apply(L.bracket(x, jy)));
  s = exact::add(s, H.K.apply(L.bracket(ix, jy)));
  return exact::scale(Rat(1, 2), s);
}

Connection obata_lambda(const HypercomplexLieAlgebra& H) {
  const std::size_t n = H.dim();
  Connection C;
  for (std::size_t i = 0; i < n; ++i) {
    Mat m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.set_column(j, obata_formula(H, exact::unit(n, i), exact::unit(n, j)));
    C.lambda.push_back(std::move(m));
  }
  return C;
}

LinearSystem connection_system(const HypercomplexLieAlgebra& H, Constraints which) {
  const std::size_t n = H.dim();
  const std::size_t unknowns = n * n * n;
  auto idx = [n](std::size_t i, std::size_t r, std::size_t c) { return i * n * n + r * n + c; };
  std::vector<Vec> rows;
  Vec rhs;

  if (which.torsion) {
    // Lambda_i e_j - Lambda_j e_i = [e_i, e_j], row per output coordinate.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vec& b = H.algebra.structure(i, j);
        for (std::size_t r = 0; r < n; ++r) {
          Vec row(unknowns);
          row[idx(i, r, j)] += 1;
          row[idx(j, r, i)] -= 1;
          rows.push_back(std::move(row));
          rhs.push_back(b[r]);
        }
      }
  }
  // Lambda_i A - A Lambda_i = 0, entry (r, c).
  auto add_parallel = [&](const Mat& A) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          Vec row(unknowns);
          for (std::size_t k = 0; k < n; ++k) {
            if (!exact::is_zero(A(k, c))) row[idx(i, r, k)] += A(k, c);
            if (!exact::is_zero(A(r, k))) row[idx(i, k, c)] -= A(r, k);
          }
          rows.push_back(std::move(row));
          rhs.push_back(Rat(0));
        }
  };
  if (which.nabla_I) add_parallel(H.I);
  if (which.nabla_J) add_parallel(H.J);
  return {Mat::from_rows(unknowns, rows), std::move(rhs)};
}

std::optional<std::size_t> solution_dimension(const HypercomplexLieAlgebra& H, Constraints which) {
  const auto sys = connection_system(H, which);
  if (sys.matrix.rows() == 0) return H.dim() * H.dim() * H.dim();
  const auto sol = exact::solve_affine(sys.matrix, sys.rhs);
  if (!sol) return std::nullopt;
  return sol->directions.dim();
}

UniqueConnection solve_unique_connection(const HypercomplexLieAlgebra& H) {
  const std::size_t n = H.dim();
  const auto sys = connection_system(H, Constraints{});
  const auto sol = exact::solve_affine(sys.matrix, sys.rhs);
  if (!sol) throw ConstructionError("connection system is inconsistent");
  if (sol->directions.dim() != 0)
    throw ConstructionError("connection system has a " + std::to_string(sol->directions.dim()) +
                            "-dimensional solution set");
  Connection C;
  for (std::size_t i = 0; i < n; ++i) {
    const std::span<const Rat> block(sol->particular.data() + i * n * n, n * n);
    C.lambda.push_back(Mat::from_flat(n, block));
  }
  UniqueConnection out;
  out.unknowns = n * n * n;
  out.equations = sys.matrix.rows();
  out.rank = out.unknowns;
  out.matches_formula = C == obata_lambda(H);
  out.connection = std::move(C);
  return out;
}

Vec nabla(const Connection& C, const Vec& x, const Vec& y) { return C.at(x).apply(y); }

Mat nabla_endo(const Connection& C, const Mat& A, const Vec& x) {
  if (A.rows() != C.dim() || A.cols() != C.dim()) throw InputError("nabla_endo: shape mismatch");
  const Mat lx = C.at(x);
  return lx * A - A * lx;
}

lie::BilinearForm nabla_form(const Connection& C, const lie::BilinearForm& h, const Vec& x) {
  if (h.gram.rows() != C.dim() || h.gram.cols() != C.dim()) throw InputError("nabla_form: shape mismatch");
  const Mat lx = C.at(x);
  return {-(lx.transpose() * h.gram + h.gram * lx)};
}

Vec second_covariant(const Connection& C, const Vec& v, const Vec& x, const Vec& y) {
  const Vec inner = C.at(y).apply(v);
  return exact::sub(C.at(x).apply(inner), C.at(nabla(C, x, y)).apply(v));
}

std::size_t parallel_field_dimension(const Connection& C) {
  const std::size_t n = C.dim();
  std::vector<Vec> rows;
  for (const auto& m : C.lambda)
    for (std::size_t r = 0; r < n; ++r) rows.push_back(m.row(r));
  if (rows.empty()) return n;
  return exact::solve_homogeneous(Mat::from_rows(n, rows)).dim();
}

Report verify_connection(const HypercomplexLieAlgebra& H, const Connection& C, const std::string& prefix) {
  Report rep;
  const std::size_t n = H.dim();
  const auto& L = H.algebra;
  auto e = [n](std::size_t i) { return exact::unit(n, i); };

  rep.expect_eq(prefix + ".torsion_free", "torsion-free", "none", first_failing_pair(n, [&](auto i, auto j) {
                  return exact::sub(nabla(C, e(i), e(j)), nabla(C, e(j), e(i))) == L.structure(i, j);
                }));
  const std::array<std::pair<const char*, const Mat*>, 3> structures{
      {{"I", &H.I}, {"J", &H.J}, {"K", &H.K}}};
  for (const auto& [name, A] : structures) {
    std::string bad = "none";
    for (std::size_t i = 0; i < n && bad == "none"; ++i)
      if (!nabla_endo(C, *A, e(i)).is_zero()) bad = "e" + std::to_string(i + 1);
    rep.expect_eq(prefix + ".nabla_" + name + "_zero", "hypercomplex-parallel", "none", bad);
  }

  if (H.g1.empty()) {
    rep.skip(prefix + ".grading", "grading", "g1 is empty");
  } else {
    auto in_block = [&](const Vec& v, const std::vector<std::size_t>& block) {
      Vec masked = v;
      for (auto k : block) masked[k] = 0;
      return zero(masked);
    };
    std::string bad = "none";
    for (auto x : H.g0)
      for (auto y : H.g1)
        if (bad == "none" && !in_block(nabla(C, e(x), e(y)), H.g1)) bad = pair_label(x, y);
    for (auto x : H.g1)
      for (auto y : H.g1)
        if (bad == "none" && !in_block(nabla(C, e(x), e(y)), H.g0)) bad = pair_label(x, y);
    rep.expect_eq(prefix + ".grading", "grading", "none", bad);
  }

  // nabla = dbar + p with p(X, Y) = (1/2)(-J[X,JY] + K[IX,JY]).
  auto p = [&](const Vec& x, const Vec& y) {
    const Vec jy = H.J.apply(y);
    Vec s = exact::sub(H.K.apply(L.bracket(H.I.apply(x), jy)), H.J.apply(L.bracket(x, jy)));
    return exact::scale(Rat(1, 2), s);
  };
  rep.expect_eq(prefix + ".dbar_split", "dbar-decomposition", "none", first_failing_pair(n, [&](auto i, auto j) {
                  return nabla(C, e(i), e(j)) == exact::add(hyper::dbar(H, e(i), e(j)), p(e(i), e(j)));
                }));
  rep.expect_eq(prefix + ".dbar_antilinear_in_X", "dbar-decomposition", "none",
                first_failing_pair(n, [&](auto i, auto j) {
                  return hyper::dbar(H, H.I.apply(e(i)), e(j)) ==
                         exact::scale(Rat(-1), H.I.apply(hyper::dbar(H, e(i), e(j))));
                }));
  rep.expect_eq(prefix + ".dbar_linear_in_Y", "dbar-decomposition", "none", first_failing_pair(n, [&](auto i, auto j) {
                  return hyper::dbar(H, e(i), H.I.apply(e(j))) == H.I.apply(hyper::dbar(H, e(i), e(j)));
                }));
  rep.expect_eq(prefix + ".complement_linear_in_X", "dbar-decomposition", "none",
                first_failing_pair(n, [&](auto i, auto j) {
                  return p(H.I.apply(e(i)), e(j)) == H.I.apply(p(e(i), e(j)));
                }));
  return rep;
}

Report euler_report(const HypercomplexLieAlgebra& H, const Connection& C, const std::string& prefix) {
  Report rep;
  const std::size_t n = H.dim();
  auto e = [n](std::size_t i) { return exact::unit(n, i); };
  const Mat adE = H.algebra.ad(H.euler);

  std::string holo = "none";
  for (const auto& [name, A] : std::array<std::pair<const char*, const Mat*>, 3>{
           {{"I", &H.I}, {"J", &H.J}, {"K", &H.K}}})
    if (holo == "none" && !exact::commutator(adE, *A).is_zero()) holo = name;
  rep.expect_eq(prefix + ".holomorphic", "euler-holomorphic", "none", holo);

  std::string bad = "none";
  for (std::size_t i = 0; i < n && bad == "none"; ++i)
    if (nabla(C, e(i), H.euler) != e(i)) bad = "e" + std::to_string(i + 1);
  rep.expect_eq(prefix + ".nabla_E_identity", "euler-nabla-identity", "none", bad);

  rep.expect_eq(prefix + ".second_derivative_zero", "euler-second-derivative", "none",
                first_failing_pair(n, [&](auto i, auto j) { return zero(second_covariant(C, H.euler, e(i), e(j))); }));

  // The derivative identities use that h is quaternionic Hermitian, which
  // needs a nondegenerate Killing form.
  const lie::BilinearForm h = lie::killing_form(H.algebra);
  const bool degenerate = exact::rank_and_basis(h.gram).first < n;
  const std::array<std::pair<const char*, const Mat*>, 3> structures{
      {{"IE", &H.I}, {"JE", &H.J}, {"KE", &H.K}}};
  if (degenerate) {
    rep.skip(prefix + ".nabla_E_killing", "euler-killing", "Killing form is degenerate");
    for (const auto& [name, A] : structures)
      rep.skip(prefix + ".nabla_" + name + "_killing", "euler-killing", "Killing form is degenerate");
  } else {
    rep.expect_eq(prefix + ".nabla_E_killing", "euler-killing", "-2h",
                  nabla_form(C, h, H.euler).gram == Rat(-2) * h.gram ? "-2h" : "other");
    for (const auto& [name, A] : structures)
      rep.expect_eq(prefix + ".nabla_" + name + "_killing", "euler-killing", "0",
                    nabla_form(C, h, A->apply(H.euler)).gram.is_zero() ? "0" : "nonzero");
  }

  rep.expect_eq(prefix + ".parallel_fields", "parallel-field-uniqueness", "0",
                std::to_string(parallel_field_dimension(C)));

  if (H.w.empty())
    rep.skip(prefix + ".nabla_W_W_nonzero", "w-choice", "g1 is empty");
  else
    rep.expect_eq(prefix + ".nabla_W_W_nonzero", "w-choice", "true", bool_text(!zero(nabla(C, H.w, H.w))));
  return rep;
}

nlohmann::json to_json(const Connection& C) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : C.lambda) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
      rows.push_back(std::move(row));
    }
    out.push_back(std::move(rows));
  }
  return out;
}

}  // namespace hcx::obata
