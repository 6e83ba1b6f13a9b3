#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leastinterp/config.hpp"
#include "leastinterp/errors.hpp"
#include "leastinterp/expression.hpp"
#include "leastinterp/invariants.hpp"
#include "leastinterp/pushforward.hpp"
#include "leastinterp/report.hpp"

namespace py = pybind11;
using namespace leastinterp;

namespace {

Parametrization makeParametrization(const std::vector<std::string>& components, const std::vector<std::string>& basepoint,
                                    std::vector<std::string> variables, std::vector<std::string> targets) {
  std::vector<Scalar> base;
  for (const auto& s : basepoint) base.push_back(Scalar::parse(s));
  if (variables.empty()) variables = defaultSourceNames(base.size());
  if (targets.empty()) targets = defaultTargetNames(components.size());
  std::vector<Expression> comps;
  for (const auto& c : components) comps.push_back(Expression::parse(c, variables));
  return Parametrization(variables, targets, base, std::move(comps));
}

py::dict runText(const std::string& command, const std::string& text) {
  auto out = runCommand(parseConfig(text, "<python>"), command);
  py::dict d;
  d["exit_code"] = out.exitCode;
  d["json"] = out.json;
  d["error"] = out.error;
  return d;
}

std::string pushforward(const std::vector<std::string>& components, const std::vector<std::string>& basepoint,
                        const std::string& p, const std::vector<std::string>& variables,
                        const std::vector<std::string>& targets) {
  auto phi = makeParametrization(components, basepoint, variables, targets);
  auto dualSrc = dualNames(phi.sourceNames());
  Expression e = Expression::parse(p, dualSrc);
  if (e.hasBuiltins()) throw Error(ErrorCode::InvalidArgument, "frontend", "'" + p + "' must be a polynomial");
  Poly q = e.evaluate(std::vector<Scalar>(phi.n()), std::max(0, e.degreeHint())).toShifted();
  return adjointPushforward(phi, q).toString(dualNames(phi.targetNames()));
}

py::list thetaTable(const std::vector<std::string>& components, const std::vector<std::string>& basepoint, int degree,
                    std::optional<int> truncation, const std::vector<std::string>& variables) {
  auto phi = makeParametrization(components, basepoint, variables, {});
  auto table = zeroEstimateTable(phi, degree, PullbackOptions{truncation, true});
  py::list rows;
  for (const auto& r : table.rows) {
    py::dict d;
    d["degree"] = r.degree;
    d["dim"] = r.dim;
    d["theta"] = r.theta;
    d["lambda"] = r.lambda;
    d["d_invariant"] = r.dInvariant;
    rows.append(d);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Least interpolation spaces of parametrized germs";
  static py::exception<Error> exc(m, "LeastInterpError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });
  m.attr("SCHEMA_VERSION") = kSchemaVersion;
  m.def("commands", &commandNames);
  m.def("run", &runText, py::arg("command"), py::arg("config_text"),
        "Run a subcommand on config text; returns exit_code, json and error.");
  m.def("check_config", [](const std::string& text) { parseConfig(text, "<python>"); }, py::arg("config_text"));
  m.def("pushforward", &pushforward, py::arg("components"), py::arg("basepoint"), py::arg("p"),
        py::arg("variables") = std::vector<std::string>{}, py::arg("target_variables") = std::vector<std::string>{});
  m.def("theta_table", &thetaTable, py::arg("components"), py::arg("basepoint"), py::arg("degree"),
        py::arg("truncation") = std::nullopt, py::arg("variables") = std::vector<std::string>{});
}
