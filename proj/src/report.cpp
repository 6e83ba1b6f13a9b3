#include "leastinterp/report.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>

#include <nlohmann/json.hpp>

#include "leastinterp/artin.hpp"
#include "leastinterp/errors.hpp"
#include "leastinterp/invariants.hpp"

namespace leastinterp {

using json = nlohmann::ordered_json;

const std::vector<std::string>& commandNames() {
  static const std::vector<std::string> names = {"least",    "classify", "bundle", "project", "tangents",
                                                 "artin",    "theta",    "report-all"};
  return names;
}

namespace {

struct Problem {
  RunConfig cfg;
  std::vector<std::string> src, tgt;
  std::vector<Scalar> base;
  std::optional<Parametrization> phi;
  std::vector<Poly> gens;
  SamplingOptions sampling;
};

std::vector<std::string> primed(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) out.push_back(n + "'");
  return out;
}

Poly toPolynomial(const std::string& text, const std::vector<std::string>& names) {
  Expression e = Expression::parse(text, names);
  if (e.hasBuiltins())
    throw Error(ErrorCode::InvalidArgument, "frontend", "'" + text + "' must be a polynomial");
  std::vector<Scalar> zero(names.size());
  return e.evaluate(zero, std::max(0, e.degreeHint())).toShifted();
}

Problem resolve(const RunConfig& cfg) {
  Problem p;
  p.cfg = cfg;
  for (const auto& s : cfg.basepoint) p.base.push_back(Scalar::parse(s));
  std::size_t n = p.base.size();
  p.src = cfg.variables.empty() ? defaultSourceNames(n) : cfg.variables;
  p.sampling = {cfg.seed, cfg.samples};
  if (!cfg.components.empty()) {
    std::size_t m = cfg.components.size();
    p.tgt = cfg.targetVariables.empty() ? defaultTargetNames(m) : cfg.targetVariables;
    std::vector<Expression> comps;
    for (const auto& c : cfg.components) comps.push_back(Expression::parse(c, p.src));
    p.phi.emplace(p.src, p.tgt, p.base, std::move(comps));
  } else {
    for (const auto& g : cfg.generators) p.gens.push_back(toPolynomial(g, p.src));
  }
  return p;
}

std::string str(const Scalar& s) { return s.toString(); }

json scalars(const std::vector<Scalar>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(str(s));
  return a;
}

json polys(const std::vector<Poly>& v, const std::vector<std::string>& names) {
  json a = json::array();
  for (const auto& q : v) a.push_back(q.toString(names));
  return a;
}

json inputJson(const Problem& p) {
  json in;
  in["dimension"] = p.base.size();
  in["variables"] = p.src;
  in["basepoint"] = scalars(p.base);
  if (p.phi) {
    in["targetVariables"] = p.tgt;
    json comps = json::array();
    for (const auto& c : p.phi->components()) comps.push_back(c.toString(p.src));
    in["components"] = comps;
    in["imagePoint"] = scalars(p.phi->imagePoint());
    in["degree"] = p.cfg.degree;
  } else {
    in["generators"] = polys(p.gens, p.src);
  }
  in["truncation"] = p.cfg.truncation ? json(*p.cfg.truncation) : json(nullptr);
  in["truncationCap"] = p.cfg.truncationCap;
  in["seed"] = p.cfg.seed;
  in["samples"] = p.cfg.samples;
  if (!p.cfg.target.empty()) in["target"] = p.cfg.target;
  return in;
}

json errorJson(const Error& e) { return json{{"code", e.qualifiedCode()}, {"message", e.message()}}; }

// The function space Z for a given truncation, with labels for its basis.
struct Space {
  FunctionSpace z;
  std::vector<std::string> labels;
  std::optional<PolynomialFunctionSpace> pfs;
};

bool centeredAtOrigin(const Problem& p) {
  const auto& a = p.phi->imagePoint();
  return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.isZero(); });
}

Space makeSpace(const Problem& p, int K) {
  Space s;
  if (p.phi) {
    s.pfs = polynomialFunctionSpace(*p.phi, p.cfg.degree, PullbackOptions{K, true});
    s.z = s.pfs->basis;
    auto names = centeredAtOrigin(p) ? p.tgt : primed(p.tgt);
    for (const auto& alpha : s.pfs->basisMonomials) s.labels.push_back(Poly::monomial(alpha).toString(names));
  } else {
    std::vector<Jet> jets;
    for (const auto& g : p.gens) jets.push_back(Jet::expand(p.base, g, std::max(0, g.degree())));
    s.z = FunctionSpace(p.base, std::move(jets));
    for (const auto& g : p.gens) s.labels.push_back(g.toString(p.src));
  }
  return s;
}

json spaceJson(const Space& s) {
  json j;
  j["kind"] = s.pfs ? "pullback" : "generators";
  j["dimension"] = s.z.dimension();
  j["basis"] = s.labels;
  if (s.pfs) {
    j["degree"] = s.pfs->degree;
    j["dims"] = s.pfs->dims;
    j["hilbert"] = s.pfs->hilbert;
  }
  return j;
}

json leastJson(const LeastSpace& l, const std::vector<std::string>& dual) {
  json j;
  j["dimension"] = l.dimension();
  j["theta"] = l.maxDegree();
  j["basis"] = polys(l.basis(), dual);
  std::vector<std::size_t> dims;
  for (int k = 0; k <= l.maxDegree(); ++k) dims.push_back(l.blockDimension(k));
  j["blockDimensions"] = dims;
  j["isMonomial"] = l.isMonomial();
  if (l.isMonomial()) {
    json st = json::array();
    for (const auto& nu : l.staircase()) st.push_back(nu.toString());
    j["staircase"] = st;
  }
  return j;
}

json annihilatorJson(const LeastSpace& l, const std::vector<std::string>& src) {
  auto a = annihilatorBasis(l);
  auto names = primed(src);
  json j;
  j["degreeBound"] = a.degreeBound;
  json per = json::array();
  for (const auto& ps : a.perDegree) per.push_back(polys(ps, names));
  j["perDegree"] = per;
  if (a.monomialGenerators) {
    json g = json::array();
    for (const auto& mu : *a.monomialGenerators) g.push_back(Poly::monomial(mu).toString(names));
    j["borderMonomials"] = g;
  } else {
    j["borderMonomials"] = nullptr;
  }
  return j;
}

json bundleJson(const BundleCertificate& b) {
  json j;
  j["bundle"] = b.bundle;
  j["ranks"] = b.profile.ranks;
  j["genericRanks"] = b.profile.genericRanks;
  json proved = json::array();
  for (bool x : b.profile.proved) proved.push_back(x);
  j["genericRanksProved"] = proved;
  j["genericRankSource"] = genericRankSourceName(b.profile.source);
  j["seed"] = b.profile.seed;
  j["samples"] = b.profile.samples;
  j["verifiedUpTo"] = b.profile.verifiedUpTo ? json(*b.profile.verifiedUpTo) : json(nullptr);
  j["firstDeficientOrder"] = b.firstDeficientOrder ? json(*b.firstDeficientOrder) : json(nullptr);
  if (b.witness) {
    json w = json::array();
    for (const auto& nu : b.witness->indices()) w.push_back(nu.toString());
    j["wronskianWitness"] = w;
  } else {
    j["wronskianWitness"] = nullptr;
  }
  return j;
}

std::string formatSlope(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

json runLeast(const Problem& p, int K) {
  auto s = makeSpace(p, K);
  auto l = computeLeastSpace(s.z);
  json r;
  r["space"] = spaceJson(s);
  r["least"] = leastJson(l, dualNames(p.src));
  r["annihilator"] = annihilatorJson(l, p.src);
  return r;
}

json runClassify(const Problem& p, int K) {
  auto s = makeSpace(p, K);
  auto c = classifyPoint(s.z, p.sampling);
  auto dual = dualNames(p.src);
  json r;
  r["dimension"] = c.dim;
  r["theta"] = c.theta;
  r["bundle"] = c.bundle;
  r["dInvariant"] = c.dInvariance.invariant;
  r["taylorian"] = triStateName(c.taylorian);
  r["gapWitness"] = c.gapWitness ? json(*c.gapWitness) : json(nullptr);
  if (c.dInvariance.witness) {
    const auto& w = *c.dInvariance.witness;
    r["dInvarianceWitness"] = json{{"element", w.element.toString(dual)},
                                   {"variable", dual[w.variable]},
                                   {"derivative", w.derivative.toString(dual)}};
  } else {
    r["dInvarianceWitness"] = nullptr;
  }
  r["least"] = polys(c.least.basis(), dual);
  r["bundleCertificate"] = bundleJson(c.bundleCertificate);
  return r;
}

json runBundle(const Problem& p, int K) {
  auto s = makeSpace(p, K);
  return bundleJson(isBundlePoint(s.z, p.sampling));
}

json runProject(const Problem& p, int K) {
  if (p.cfg.target.empty()) throw Error(ErrorCode::ConfigError, "frontend", "project needs a 'target' polynomial");
  auto s = makeSpace(p, K);
  Projector proj(s.z);
  int order = s.z.commonOrder();
  json r;
  Jet f;
  Poly projection;
  if (p.phi) {
    Poly F = toPolynomial(p.cfg.target, p.tgt);
    f = pullbackPolynomial(*p.phi, recenterPolynomial(F, p.phi->imagePoint()), order);
  } else {
    Poly F = toPolynomial(p.cfg.target, p.src);
    f = Jet::expand(p.base, F, std::max(order, F.degree()));
  }
  auto pr = taylorProject(proj, f);
  json coeffs = json::array();
  for (std::size_t i = 0; i < pr.coefficients.size(); ++i)
    coeffs.push_back(json{{"label", s.labels[i]}, {"value", str(pr.coefficients[i])}});
  if (p.phi) {
    Poly centered(p.phi->m());
    for (std::size_t i = 0; i < pr.coefficients.size(); ++i)
      centered += Poly::monomial(s.pfs->basisMonomials[i], pr.coefficients[i]);
    std::vector<Scalar> minusA;
    for (const auto& a : p.phi->imagePoint()) minusA.push_back(-a);
    projection = centered.shifted(minusA);
    r["projection"] = projection.toString(p.tgt);
  } else {
    projection = Poly(p.base.size());
    for (std::size_t i = 0; i < pr.coefficients.size(); ++i) projection += pr.coefficients[i] * p.gens[i];
    r["projection"] = projection.toString(p.src);
  }
  r["target"] = p.cfg.target;
  r["coefficients"] = coeffs;
  r["reconstitutedJet"] = pr.reconstituted.toString(primed(p.src));
  return r;
}

const Parametrization& needPhi(const Problem& p, const char* cmd) {
  if (!p.phi) throw Error(ErrorCode::ConfigError, "frontend", std::string(cmd) + " needs 'components'");
  return *p.phi;
}

json runTangents(const Problem& p, int K) {
  const auto& phi = needPhi(p, "tangents");
  auto t = bosCalviTangents(phi, p.cfg.degree, PullbackOptions{K, true});
  auto dualSrc = dualNames(p.src);
  auto dualTgt = dualNames(p.tgt);
  auto basis = t.sourceLeast.basis();
  json rows = json::array();
  for (std::size_t i = 0; i < basis.size(); ++i)
    rows.push_back(json{{"least", basis[i].toString(dualSrc)}, {"tangent", t.tangents[i].toString(dualTgt)}});
  return json{{"degree", t.degree}, {"tangents", rows}};
}

json runArtin(const Problem& p, int K) {
  auto s = makeSpace(p, K);
  Projector proj(s.z);
  auto a = buildArtinAlgebra(proj, s.labels);
  json r;
  r["dimension"] = a.dimension;
  r["basis"] = a.basisLabels;
  r["theta"] = a.least.maxDegree();
  r["unit"] = scalars(a.unit);
  r["unitIndex"] = a.unitIndex ? json(*a.unitIndex) : json(nullptr);
  r["nilpotencyIndex"] = a.nilpotencyIndex;
  json table = json::array();
  for (std::size_t i = 0; i < a.dimension; ++i)
    for (std::size_t j = i; j < a.dimension; ++j) {
      json terms = json::array();
      for (std::size_t l = 0; l < a.dimension; ++l)
        if (!a.structure[i][j][l].isZero())
          terms.push_back(json{{"label", a.basisLabels[l]}, {"value", str(a.structure[i][j][l])}});
      if (!terms.empty()) table.push_back(json{{"left", a.basisLabels[i]}, {"right", a.basisLabels[j]}, {"product", terms}});
    }
  r["products"] = table;
  return r;
}

json runTheta(const Problem& p, int K) {
  const auto& phi = needPhi(p, "theta");
  auto t = zeroEstimateTable(phi, p.cfg.degree, PullbackOptions{K, true});
  json rows = json::array();
  for (const auto& row : t.rows)
    rows.push_back(json{{"degree", row.degree},
                        {"dim", row.dim},
                        {"hilbert", row.hilbert},
                        {"theta", row.theta},
                        {"lambda", row.lambda},
                        {"dInvariant", row.dInvariant},
                        {"lowerBound", row.lowerBound},
                        {"upperBound", row.upperBound},
                        {"boundsHold", row.boundsHold}});
  json r;
  r["rows"] = rows;
  if (t.slope)
    r["slope"] = json{{"value", formatSlope(*t.slope)}, {"approximate", true}, {"fit", "log theta = slope * log e, e >= 2"},
                      {"caveat", "desk-scale proxy for limsup"}};
  else
    r["slope"] = nullptr;
  r["linearBound"] = json{{"satisfied", t.linear.satisfied},
                          {"a", t.linear.satisfied ? json(t.linear.a) : json(nullptr)},
                          {"b", t.linear.satisfied ? json(t.linear.b) : json(nullptr)},
                          {"aMax", t.linear.aMax}};
  return r;
}

using Runner = std::function<json(const Problem&, int)>;

bool retryable(ErrorCode c) { return c == ErrorCode::TruncationInsufficient || c == ErrorCode::StabilityCheckFailed; }

// Runs a command, doubling the truncation order of inexact parametrizations until it succeeds.
json runSection(const Problem& p, const Runner& run, bool& failed, bool& usage) {
  json out;
  bool exact = !p.phi || p.phi->isPolynomial();
  int K = exact ? 0 : p.cfg.truncation.value_or(defaultTruncation(*p.phi, p.cfg.degree));
  json attempts = json::array();
  while (true) {
    try {
      json r = run(p, K);
      out["status"] = "ok";
      if (p.phi) out["truncation"] = exact ? json{{"exact", true}} : json{{"exact", false}, {"used", K}, {"attempts", attempts}};
      out["result"] = std::move(r);
      return out;
    } catch (const Error& e) {
      if (!exact && retryable(e.code()) && 2 * K <= p.cfg.truncationCap) {
        attempts.push_back(json{{"truncation", K}, {"code", e.qualifiedCode()}});
        K *= 2;
        continue;
      }
      failed = true;
      usage = usage || e.isUsageError();
      out["status"] = "error";
      if (!attempts.empty()) out["truncation"] = json{{"exact", false}, {"attempts", attempts}};
      out["error"] = errorJson(e);
      return out;
    }
  }
}

const std::vector<std::pair<std::string, Runner>>& runners() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"least", runLeast},       {"classify", runClassify}, {"bundle", runBundle}, {"project", runProject},
      {"tangents", runTangents}, {"artin", runArtin},       {"theta", runTheta}};
  return r;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

RunOutcome runCommand(const RunConfig& cfg, std::string command) {
  if (command.empty()) command = cfg.command;
  RunOutcome out;
  out.command = command;
  json report;
  report["schemaVersion"] = kSchemaVersion;
  report["command"] = command;
  if (std::find(commandNames().begin(), commandNames().end(), command) == commandNames().end()) {
    report["status"] = "error";
    report["error"] = errorJson(Error(ErrorCode::InvalidArgument, "frontend", "unknown command '" + command + "'"));
    out.json = render(report);
    out.exitCode = 1;
    out.error = "frontend.InvalidArgument: unknown command '" + command + "'";
    return out;
  }
  Problem p;
  try {
    p = resolve(cfg);
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = errorJson(e);
    out.json = render(report);
    out.exitCode = e.isUsageError() ? 1 : 2;
    out.error = e.what();
    return out;
  }
  report["input"] = inputJson(p);

  bool failed = false, usage = false;
  if (command == "report-all") {
    json sections;
    for (const auto& [name, run] : runners()) {
      if ((name == "tangents" || name == "theta") && !p.phi) continue;
      if (name == "project" && p.cfg.target.empty()) continue;
      bool f = false, u = false;
      sections[name] = runSection(p, run, f, u);
    }
    report["status"] = "ok";
    report["sections"] = sections;
    out.exitCode = 0;
  } else {
    auto it = std::find_if(runners().begin(), runners().end(), [&](const auto& r) { return r.first == command; });
    json s = runSection(p, it->second, failed, usage);
    for (auto& [k, v] : s.items()) report[k] = v;
    out.exitCode = failed ? (usage ? 1 : 2) : 0;
  }
  if (report.contains("error"))
    out.error = report["error"]["code"].get<std::string>() + ": " + report["error"]["message"].get<std::string>();
  out.json = render(report);
  return out;
}

}  // namespace leastinterp
