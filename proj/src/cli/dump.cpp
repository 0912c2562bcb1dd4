#include "hcx/cli.hpp"
#include "hcx/errors.hpp"

namespace hcx::cli {

nlohmann::json dump(const std::string& what, Context& ctx) {
  if (what == "structure-constants") return lie::to_json(ctx.joyce().algebra);
  if (what == "ijk") return hyper::to_json(ctx.joyce());
  if (what == "lambda") return obata::to_json(ctx.joyce_connection());
  if (what == "curvature")
    return curvature::to_json(curvature::curvature_tensor(ctx.joyce().algebra, ctx.joyce_connection()));
  if (what == "holonomy-basis") return holonomy::to_json(ctx.joyce_holonomy());
  throw InputError("unknown dump target: " + what +
                   " (expected structure-constants, ijk, lambda, curvature, holonomy-basis)");
}

nlohmann::json holonomy_summary(Context& ctx, const Report& rep) {
  const auto& hol = ctx.joyce_holonomy();
  nlohmann::json tensors = nlohmann::json::object();
  for (const char* v : {"1,0", "0,1", "0,2", "0,2s", "2,0", "1,1", "top"})
    tensors[v] = holonomy::invariant_tensor_dims(hol, holonomy::parse_valence(v));
  auto text = [&](const std::string& id) -> nlohmann::json {
    const auto* c = rep.find(id);
    return c ? nlohmann::json(c->actual) : nlohmann::json(nullptr);
  };
  return {{"dim", hol.dim()},
          {"commutant_dim", text("holonomy.commutant_dim")},
          {"equals_commutant", text("holonomy.equals_commutant")},
          {"double_commutant_dim", text("holonomy.double_commutant_dim")},
          {"invariant_tensors", tensors},
          {"failed", rep.summary().failed},
          {"report", rep.to_json()}};
}

nlohmann::json invariants(const std::string& valence, Context& ctx) {
  const auto v = holonomy::parse_valence(valence);
  return {{"valence", holonomy::to_string(v)},
          {"dim", holonomy::invariant_tensor_dims(ctx.joyce_holonomy(), v)}};
}

}  // namespace hcx::cli
