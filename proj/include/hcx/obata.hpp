#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcx/hyper.hpp"
#include "hcx/report.hpp"
#include "json.hpp"

namespace hcx::obata {

using exact::Mat;
using exact::Rat;
using exact::Vec;
using hyper::HypercomplexLieAlgebra;

/// Left-invariant connection: lambda[i] is the matrix of Lambda_{e_i}, so
/// column j of lambda[i] holds nabla_{e_i} e_j.
struct Connection {
  std::vector<Mat> lambda;

  std::size_t dim() const { return lambda.size(); }
  /// Lambda_X for an arbitrary X.
  Mat at(const Vec& x) const;

  friend bool operator==(const Connection&, const Connection&) = default;
};

/// nabla_X Y = (1/2)([X,Y] + I[IX,Y] - J[X,JY] + K[IX,JY]).
Vec obata_formula(const HypercomplexLieAlgebra& H, const Vec& x, const Vec& y);

Connection obata_lambda(const HypercomplexLieAlgebra& H);

/// Which equation families go into the linear system for Lambda.
struct Constraints {
  bool torsion = true;
  bool nabla_I = true;
  bool nabla_J = true;
};

/// Row-stacked system over dim^3 unknowns; unknown (i, r, c) is entry (r, c)
/// of lambda[i], at index i*dim*dim + r*dim + c.
struct LinearSystem {
  Mat matrix;
  Vec rhs;
};

LinearSystem connection_system(const HypercomplexLieAlgebra& H, Constraints which);

/// Dimension of the solution set of the chosen system; nullopt if it is empty.
std::optional<std::size_t> solution_dimension(const HypercomplexLieAlgebra& H, Constraints which);

struct UniqueConnection {
  Connection connection;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  bool matches_formula = false;
};

/// Solves torsion-free plus nabla I = nabla J = 0 exactly. Throws
/// ConstructionError if the solution set is empty or not a single point.
UniqueConnection solve_unique_connection(const HypercomplexLieAlgebra& H);

Vec nabla(const Connection& C, const Vec& x, const Vec& y);
/// (nabla_X A)(Y) = Lambda_X(AY) - A(Lambda_X Y).
Mat nabla_endo(const Connection& C, const Mat& A, const Vec& x);
/// (nabla_X h)(Y, Z) = -h(Lambda_X Y, Z) - h(Y, Lambda_X Z).
lie::BilinearForm nabla_form(const Connection& C, const lie::BilinearForm& h, const Vec& x);
/// (nabla^2 V)(X, Y) = Lambda_X(Lambda_Y V) - Lambda_{Lambda_X Y} V.
Vec second_covariant(const Connection& C, const Vec& v, const Vec& x, const Vec& y);

/// Torsion, nabla I = nabla J = nabla K = 0, grading, and the split of the
/// formula into a part antilinear in X (dbar) and a part linear in X.
Report verify_connection(const HypercomplexLieAlgebra& H, const Connection& C,
                         const std::string& prefix = "connection");

/// Euler-field properties: holomorphic, nabla E = Id, nabla^2 E = 0, the
/// four derivatives of the Killing form, no nonzero parallel fields, and
/// nabla_W W != 0.
Report euler_report(const HypercomplexLieAlgebra& H, const Connection& C,
                    const std::string& prefix = "euler");

/// Dimension of {V : Lambda_X V = 0 for all X}.
std::size_t parallel_field_dimension(const Connection& C);

nlohmann::json to_json(const Connection& C);

}  // namespace hcx::obata
