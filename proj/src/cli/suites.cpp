#include <cmath>
#include <cstdio>
#include <random>

#include "hcx/cli.hpp"
#include "hcx/errors.hpp"
#include "hcx/exact/polynomial.hpp"

namespace hcx::cli {

using exact::Mat;
using exact::Rat;
using exact::Vec;

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void record_at_most(Report& rep, const std::string& id, const std::string& anchor, double value, double bound) {
  rep.record(id, anchor, "<= " + sci(bound), sci(value), value <= bound);
}

Vec e(std::size_t n, std::size_t i) { return exact::unit(n, i); }

bool zero(const Vec& v) { return exact::is_zero(std::span<const Rat>(v)); }

Rat determinant(const Mat& m) {
  const auto p = exact::characteristic_polynomial(m);
  const Rat c0 = p.coefficients().empty() ? Rat(0) : p.coefficients().front();
  return m.rows() % 2 == 0 ? c0 : Rat(-c0);
}

Mat leading_minor(const Mat& m, std::size_t k) {
  Mat out(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) out(r, c) = m(r, c);
  return out;
}

}  // namespace

Context::Context(Config cfg) : cfg_(std::move(cfg)) {}

const hyper::HypercomplexLieAlgebra& Context::joyce() {
  if (!joyce_) joyce_ = hyper::build_joyce_su3();
  return *joyce_;
}

const hyper::HypercomplexLieAlgebra& Context::hopf() {
  if (!hopf_) hopf_ = hyper::build_hopf_g0();
  return *hopf_;
}

const obata::Connection& Context::joyce_connection() {
  if (!joyce_conn_) joyce_conn_ = obata::obata_lambda(joyce());
  return *joyce_conn_;
}

const obata::Connection& Context::hopf_connection() {
  if (!hopf_conn_) hopf_conn_ = obata::obata_lambda(hopf());
  return *hopf_conn_;
}

const holonomy::EndoSubspace& Context::joyce_holonomy() {
  if (!joyce_hol_) joyce_hol_ = holonomy::nomizu_closure(joyce().algebra, joyce_connection());
  return *joyce_hol_;
}

Report run_algebra_suite(Context& ctx) {
  Report rep;
  const auto su2 = lie::build_su(2);
  rep.expect_eq("algebra.su2.dim", "su-n-basis", "3", std::to_string(su2.dim()));
  rep.merge(lie::verify_lie_axioms(su2, "algebra.su2"));

  const auto su3 = lie::build_su(3);
  const std::size_t n = su3.dim();
  rep.expect_eq("algebra.su3.dim", "su-n-basis", "8", std::to_string(n));
  rep.merge(lie::verify_lie_axioms(su3, "algebra.su3"));

  bool integers = true;
  for (const auto& row : su3.constants())
    for (const auto& v : row)
      for (const auto& x : v)
        if (x.get_den() != 1) integers = false;
  rep.expect_eq("algebra.su3.integer_constants", "su-n-basis", "true", bool_text(integers));

  const Vec b45 = su3.structure(3, 4);
  bool rotates = true;
  for (std::size_t k = 0; k < n; ++k)
    if (k != 4 && k != 5 && !exact::is_zero(b45[k])) rotates = false;
  rep.expect_eq("algebra.su3.b_rotates_f_plane", "su3-grading", "true", bool_text(rotates && !zero(b45)));

  std::string ff = "none";
  for (std::size_t a = 4; a < n; ++a)
    for (std::size_t b = 4; b < n; ++b)
      for (std::size_t k = 4; k < n; ++k)
        if (ff == "none" && !exact::is_zero(su3.structure(a, b)[k]))
          ff = "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
  rep.expect_eq("algebra.su3.ff_in_g0", "su3-grading", "none", ff);

  const auto h = lie::killing_form(su3);
  // Oracle from the matrix model: h(X, Y) = 2n tr(XY) for su(n).
  bool trace_formula = true;
  const auto& R = *su3.realization();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto prod = R[i] * R[j];
      if (h.gram(i, j) != Rat(6) * prod.re.trace()) trace_formula = false;
    }
  rep.expect_eq("algebra.su3.killing_trace_formula", "killing-form", "true", bool_text(trace_formula));

  std::string invariance = "none";
  for (std::size_t i = 0; i < n && invariance == "none"; ++i)
    for (std::size_t j = 0; j < n && invariance == "none"; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (h(su3.structure(i, j), e(n, k)) != -h(e(n, j), su3.structure(i, k))) {
          invariance = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
          break;
        }
  rep.expect_eq("algebra.su3.killing_ad_invariant", "killing-form", "none", invariance);

  bool orthogonal = true;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 4; j < n; ++j)
      if (!exact::is_zero(h.gram(i, j))) orthogonal = false;
  rep.expect_eq("algebra.su3.killing_grading_orthogonal", "killing-form", "true", bool_text(orthogonal));

  std::string signs;
  bool definite = true;
  for (std::size_t k = 1; k <= n; ++k) {
    const int s = sgn(determinant(leading_minor(h.gram, k)));
    signs += s < 0 ? '-' : (s > 0 ? '+' : '0');
    if (s != (k % 2 == 1 ? -1 : 1)) definite = false;
  }
  rep.record("algebra.su3.killing_negative_definite", "killing-form", "-+-+-+-+", signs, definite);

  const auto& joyce = ctx.joyce();
  rep.merge(lie::verify_lie_axioms(joyce.algebra, "algebra.joyce"));

  const auto& hopf = ctx.hopf();
  rep.merge(lie::verify_lie_axioms(hopf.algebra, "algebra.hopf"));
  rep.expect_eq("algebra.hopf.bracket_i_j", "hopf-instance", "[0/1, 0/1, 0/1, 2/1]",
                exact::to_string(std::span<const Rat>(hopf.algebra.structure(1, 2))));
  return rep;
}

Report run_hypercomplex_suite(Context& ctx) {
  Report rep;
  const auto& H = ctx.joyce();
  const std::size_t n = H.dim();
  rep.merge(hyper::verify_hypercomplex(H, "hypercomplex.joyce"));
  rep.expect_eq("hypercomplex.joyce.alpha_squared", "euler-normalization", "1/3",
                H.convention ? exact::to_string(H.convention->alpha_squared) : "none");

  auto g1_block = [&](const Mat& m) {
    Mat out(H.g1.size(), H.g1.size());
    for (std::size_t r = 0; r < H.g1.size(); ++r)
      for (std::size_t c = 0; c < H.g1.size(); ++c) out(r, c) = m(H.g1[r], H.g1[c]);
    return out;
  };
  const Mat id1 = Mat::identity(H.g1.size());
  for (const auto& [name, v] : std::array<std::pair<const char*, const Vec*>, 3>{
           {{"iota", &H.iota}, {"jota", &H.jota}, {"kota", &H.kota}}}) {
    const Mat a = g1_block(H.algebra.ad(*v));
    rep.expect_eq(std::string("hypercomplex.joyce.ad_") + name + "_squared_g1", "joyce-construction", "-Id",
                  a * a == -id1 ? "-Id" : "other");
  }
  {
    const Mat a = g1_block(H.algebra.ad(H.euler));
    const Mat sq = a * a;
    const Rat s = sq(0, 0);
    const bool scalar = sq == s * id1;
    rep.record("hypercomplex.joyce.ad_euler_squared_g1", "euler-normalization", "negative scalar * Id",
               scalar ? exact::to_string(s) + " * Id" : "not scalar", scalar && s < 0);
  }

  // Standard basis with alpha = 1: still integrable, but h is not Hermitian.
  {
    const auto S = hyper::joyce_su3_standard_basis(Rat(1));
    const Report r = hyper::verify_hypercomplex(S, "std");
    const bool integrable = r.find("std.nijenhuis_I")->status == Status::pass &&
                            r.find("std.nijenhuis_J")->status == Status::pass &&
                            r.find("std.nijenhuis_K")->status == Status::pass;
    const bool hermitian = r.find("std.killing_hermitian_I")->status == Status::pass;
    rep.expect_eq("hypercomplex.control.alpha_one", "euler-normalization", "integrable, not Hermitian",
                  std::string(integrable ? "integrable" : "not integrable") + ", " +
                      (hermitian ? "Hermitian" : "not Hermitian"));
  }

  // J negated on g1 only must break the quaternion relations.
  {
    auto M = H;
    for (auto r : M.g1)
      for (auto c : M.g1) M.J(r, c) = -M.J(r, c);
    const Report r = hyper::verify_hypercomplex(M, "mut");
    const bool broken = r.find("mut.quaternion.IJ_eq_K")->status == Status::fail;
    rep.expect_eq("hypercomplex.control.J_flipped_on_g1", "quaternion-relations", "IJ = K fails",
                  broken ? "IJ = K fails" : "IJ = K holds");
  }

  // A complex structure conjugated by a random integer matrix is generically
  // not integrable.
  {
    std::mt19937_64 rng(ctx.config().seed);
    std::uniform_int_distribution<int> dist(-2, 2);
    Mat A0(n, n);
    for (std::size_t k = 0; k < n; k += 2) {
      A0(k + 1, k) = 1;
      A0(k, k + 1) = -1;
    }
    std::optional<Mat> P_inv;
    Mat P(n, n);
    while (!P_inv) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) P(r, c) = dist(rng);
      P_inv = exact::inverse(P);
    }
    const Mat A = P * A0 * *P_inv;
    std::string found = "none";
    for (std::size_t i = 0; i < n && found == "none"; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!zero(hyper::nijenhuis(H, A, e(n, i), e(n, j)))) {
          found = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
          break;
        }
    rep.record("hypercomplex.control.random_structure_not_integrable", "nijenhuis-integrability",
               "some nonzero pair", found, found != "none");
  }

  const auto& hopf = ctx.hopf();
  rep.merge(hyper::verify_hypercomplex(hopf, "hypercomplex.hopf"));
  rep.expect_eq("hypercomplex.hopf.I_of_1", "hopf-instance", "[0/1, 1/1, 0/1, 0/1]",
                exact::to_string(std::span<const Rat>(hopf.I.column(0))));
  return rep;
}

Report run_connection_suite(Context& ctx) {
  Report rep;
  for (const bool is_joyce : {true, false}) {
    const auto& H = is_joyce ? ctx.joyce() : ctx.hopf();
    const auto& C = is_joyce ? ctx.joyce_connection() : ctx.hopf_connection();
    const std::string tag = is_joyce ? "joyce" : "hopf";
    try {
      const auto U = obata::solve_unique_connection(H);
      rep.expect_eq("connection." + tag + ".unique_solution_dim", "obata-uniqueness", "0", "0");
      rep.expect_eq("connection." + tag + ".unique_equals_formula", "obata-uniqueness", "true",
                    bool_text(U.matches_formula));
    } catch (const ConstructionError& err) {
      rep.record("connection." + tag + ".unique_solution_dim", "obata-uniqueness", "0", err.what(), false);
      rep.skip("connection." + tag + ".unique_equals_formula", "obata-uniqueness", "no unique solution");
    }
    rep.merge(obata::verify_connection(H, C, "connection." + tag));
    rep.merge(obata::euler_report(H, C, "euler." + tag));
  }

  {
    obata::Constraints without_j;
    without_j.nabla_J = false;
    const auto d = obata::solution_dimension(ctx.joyce(), without_j);
    rep.record("connection.control.drop_nabla_J", "obata-uniqueness", "> 0",
               d ? std::to_string(*d) : "inconsistent", d && *d > 0);
  }

  // Hopf: nabla_X Y = -Y.X in quaternion coordinates.
  {
    const auto& C = ctx.hopf_connection();
    std::string bad = "none";
    for (std::size_t a = 0; a < 4 && bad == "none"; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        std::array<Rat, 4> x{}, y{};
        x[a] = 1;
        y[b] = 1;
        const auto yx = hyper::quaternion_product(y, x);
        Vec expect(4);
        for (std::size_t k = 0; k < 4; ++k) expect[k] = -yx[k];
        if (obata::nabla(C, e(4, a), e(4, b)) != expect) {
          bad = "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
          break;
        }
      }
    rep.expect_eq("connection.hopf.minus_right_product", "hopf-instance", "none", bad);
  }
  return rep;
}

Report run_curvature_suite(Context& ctx) {
  Report rep;
  const curvature::CurvatureOptions opts{ctx.config().seed, 50};
  {
    const auto& H = ctx.joyce();
    const auto& C = ctx.joyce_connection();
    rep.merge(curvature::verify_curvature(H, C, opts, "curvature.joyce"));
    const auto R = curvature::curvature_tensor(H.algebra, C);
    rep.expect_eq("curvature.joyce.rank", "curvature-span", "3", std::to_string(curvature::curvature_rank(R)));
    rep.expect_eq("curvature.joyce.z_span_dim", "z-span", "3", std::to_string(curvature::z_span_dimension(H, C)));
    rep.expect_eq("curvature.joyce.g1_image_dim", "curvature-image", "4",
                  std::to_string(curvature::g1_image_dimension(H, R)));
    const Vec& w = H.w;
    const bool flat = curvature::curvature_endo(H.algebra, C, w, H.I.apply(w)).is_zero();
    rep.expect_eq("curvature.joyce.not_flat", "non-flat", "true", bool_text(!flat));
  }
  {
    const auto& H = ctx.hopf();
    const auto& C = ctx.hopf_connection();
    rep.merge(curvature::verify_curvature(H, C, opts, "curvature.hopf"));
    const auto R = curvature::curvature_tensor(H.algebra, C);
    bool flat = true;
    for (const auto& [key, m] : R.r)
      if (!m.is_zero()) flat = false;
    rep.expect_eq("curvature.hopf.flat", "hopf-instance", "true", bool_text(flat));
  }
  return rep;
}

Report run_holonomy_suite(Context& ctx) {
  Report rep;
  const auto& H = ctx.joyce();
  const auto& C = ctx.joyce_connection();
  const auto& hol = ctx.joyce_holonomy();
  rep.merge(holonomy::identify_gl2h(hol, H, "holonomy"));
  rep.expect_eq("holonomy.reclose_idempotent", "nomizu-closure", "true",
                bool_text(holonomy::reclose(hol, C) == hol));
  {
    const auto R = curvature::curvature_tensor(H.algebra, C);
    std::vector<Mat> seed;
    for (const auto& [key, m] : R.r) seed.push_back(m);
    rep.expect_eq("holonomy.seed_dim", "nomizu-closure", std::to_string(curvature::curvature_rank(R)),
                  std::to_string(holonomy::span_of(H.dim(), seed).dim()));
  }
  rep.expect_eq("holonomy.hopf.dim", "hopf-instance", "0",
                std::to_string(holonomy::nomizu_closure(ctx.hopf().algebra, ctx.hopf_connection()).dim()));

  rep.expect_eq("holonomy.sl2c_s3c2.commutant_dim", "sl2c-elimination", "2",
                std::to_string(holonomy::sl2c_s3c2_commutant_dim()));
  {
    const auto gens = holonomy::sl2c_s3c2_generators();
    const auto comm = holonomy::commutant(8, gens);
    Mat j0(8, 8);
    for (std::size_t k = 0; k < 4; ++k) {
      j0(4 + k, k) = 1;
      j0(k, 4 + k) = -1;
    }
    rep.expect_eq("holonomy.sl2c_s3c2.contains_complex_structure", "sl2c-elimination", "true",
                  bool_text(comm.contains(j0)));
    const auto single = holonomy::commutant(8, {gens[0]}).dim();
    rep.record("holonomy.sl2c_s3c2.single_generator_commutant", "sl2c-elimination", "> 2",
               std::to_string(single), single > 2);
  }
  {
    std::size_t good = 0, total = 0;
    for (std::size_t n : {1, 2, 4})
      for (std::uint64_t k = 0; k < 10; ++k) {
        const auto t = holonomy::random_complementary_triple(n, ctx.config().seed * 1000 + n * 100 + k);
        const auto r = holonomy::projection_algebra_dim(t[0], t[1], t[2]);
        ++total;
        if (r.dim == 4 && r.mat2_iso) ++good;
      }
    rep.expect_eq("holonomy.projection_algebra", "projection-algebra", std::to_string(total) + "/" +
                  std::to_string(total) + " give (4, true)",
                  std::to_string(good) + "/" + std::to_string(total) + " give (4, true)");
  }
  return rep;
}

Report run_transport_suite(Context& ctx) {
  Report rep;
  const auto& cfg = ctx.config();
  const transport::FloatModel M(ctx.joyce(), ctx.joyce_connection());

  {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
      Eigen::VectorXd x(8);
      for (auto& v : x) v = dist(rng);
      Eigen::MatrixXcd X = M.to_group_algebra(x);
      X *= 0.5 * dist(rng) / X.norm();
      worst = std::max(worst, (transport::su3_log(transport::su3_exp(X)) - X).norm());
    }
    record_at_most(rep, "transport.su3_roundtrip", "group-exp-log", worst, 1e-10);
  }
  {
    const auto loop = transport::sample_loop(8, cfg.seed, 0, cfg.scale);
    const auto T = transport::loop_holonomy(M, transport::Loop{loop.x, loop.x, cfg.scale});
    record_at_most(rep, "transport.degenerate_loop", "loop-transport",
                   (T - Eigen::MatrixXd::Identity(8, 8)).norm(), 1e-10);
  }
  {
    const auto R = curvature::curvature_tensor(ctx.joyce().algebra, ctx.joyce_connection());
    double worst = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      const auto loop = transport::sample_loop(8, cfg.seed, k, cfg.scale);
      Eigen::MatrixXd exact_r = Eigen::MatrixXd::Zero(8, 8);
      for (Eigen::Index i = 0; i < 8; ++i)
        for (Eigen::Index j = 0; j < 8; ++j)
          if (i != j)
            exact_r += loop.x(i) * loop.y(j) *
                       transport::to_float(R.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      const Eigen::MatrixXd lim = transport::curvature_limit(M, loop.x, loop.y);
      worst = std::max(worst, (lim + 0.5 * exact_r).norm() / exact_r.norm());
    }
    record_at_most(rep, "transport.curvature_limit", "loop-transport", worst, 5e-3);
  }

  const auto reference = transport::to_float(ctx.joyce_holonomy().matrices());
  {
    const auto est = transport::estimate_holonomy_dimension(M, reference, {cfg.loops, cfg.scale, cfg.seed, cfg.tolerance});
    rep.expect_eq("transport.dim", "holonomy-gl2h", "16", std::to_string(est.dim));
    rep.expect_eq("transport.discarded", "loop-transport", "0", std::to_string(est.discarded.size()));
    record_at_most(rep, "transport.quaternion_defect", "hypercomplex-parallel", est.max_quaternion_defect, 1e-8);
    rep.expect_eq("transport.metric_not_preserved", "invariant-tensors",
                  std::to_string(est.samples_used) + "/" + std::to_string(est.samples_used),
                  std::to_string(est.metric_changed) + "/" + std::to_string(est.samples_used));
  }
  {
    const double angle_scale = std::min(cfg.scale, 0.05);
    const auto est = transport::estimate_holonomy_dimension(M, reference, {cfg.loops, angle_scale, cfg.seed, cfg.tolerance});
    record_at_most(rep, "transport.principal_angle", "holonomy-gl2h", est.max_principal_angle, 1e-6);
  }

  const transport::FloatModel P(ctx.hopf(), ctx.hopf_connection());
  {
    const auto est = transport::estimate_holonomy_dimension(P, {}, {cfg.loops, cfg.scale, cfg.seed, cfg.tolerance});
    rep.expect_eq("transport.hopf.dim", "hopf-instance", "0", std::to_string(est.dim));
    double worst = 0;
    for (std::size_t k = 0; k < 20; ++k) {
      const auto T = transport::loop_holonomy(P, transport::sample_loop(4, cfg.seed, k, cfg.scale));
      worst = std::max(worst, (T - Eigen::MatrixXd::Identity(4, 4)).norm());
    }
    record_at_most(rep, "transport.hopf.identity", "hopf-instance", worst, 1e-9);
  }
  return rep;
}

Report run_suite(const Config& cfg) {
  validate(cfg);
  Context ctx(cfg);
  Report rep;
  rep.config_echo = echo(cfg);
  using Runner = Report (*)(Context&);
  const std::vector<std::pair<std::string, Runner>> suites{
      {"algebra", run_algebra_suite},       {"hypercomplex", run_hypercomplex_suite},
      {"connection", run_connection_suite}, {"curvature", run_curvature_suite},
      {"holonomy", run_holonomy_suite},     {"transport", run_transport_suite}};
  for (const auto& [name, run] : suites)
    if (cfg.suite == "all" || cfg.suite == name) rep.merge(run(ctx));
  return rep;
}

}  // namespace hcx::cli
