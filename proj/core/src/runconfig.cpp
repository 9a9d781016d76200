#include "hslab/runconfig.hpp"

#include <set>
#include <stdexcept>

#include "json.hpp"

namespace hslab::config {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& object, const std::set<std::string>& known,
                         const std::string& where) {
  for (const auto& [key, value] : object.items())
    if (!known.count(key))
      throw std::invalid_argument("config: unknown key '" + key + "' in " + where);
}

Rational rational_field(const json& object, const std::string& key,
                        const Rational& fallback) {
  if (!object.contains(key)) return fallback;
  const json& value = object.at(key);
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw std::invalid_argument("config: '" + key +
                              "' must be an integer or a \"num/den\" string");
}

json rational_to_json(const Rational& value) { return rational_to_string(value); }

TrialConfig parse_trial(const json& object) {
  reject_unknown_keys(object, {"family", "params"}, "trial");
  TrialConfig trial;
  trial.family = object.value("family", trial.family);
  if (object.contains("params"))
    for (const auto& [key, value] : object.at("params").items())
      trial.params[key] = value.get<double>();
  return trial;
}

CaseConfig parse_case(const json& object, std::size_t index) {
  const std::string where = "cases[" + std::to_string(index) + "]";
  reject_unknown_keys(
      object, {"id", "domain", "n", "m", "k", "p", "q", "alpha", "beta", "r", "trial"},
      where);
  CaseConfig cc;
  auto& c = cc.inequality_case;
  if (!object.contains("id"))
    throw std::invalid_argument("config: missing 'id' in " + where);
  c.id = inequalities::case_id_from_string(object.at("id").get<std::string>());
  c.n = object.value("n", 1);
  c.m = object.value("m", 2);
  c.k = object.value("k", 1);
  c.p = rational_field(object, "p", Rational(1));
  c.q = rational_field(object, "q", c.p);
  c.alpha = rational_field(object, "alpha", Rational(0));
  c.beta = rational_field(object, "beta", c.alpha);
  c.r = rational_field(object, "r", Rational(0));
  c.domain = domain_from_string(object.value("domain", std::string("half-line")), c.n);
  if (object.contains("trial")) cc.trial = parse_trial(object.at("trial"));
  return cc;
}

}  // namespace

std::string domain_to_string(const norms::Domain& domain) {
  switch (domain.kind) {
    case norms::DomainKind::HalfLine: return "half-line";
    case norms::DomainKind::Interval01: return "interval01";
    case norms::DomainKind::Strip: return "strip";
    case norms::DomainKind::HalfSpace: return "half-space";
  }
  throw std::invalid_argument("unknown domain kind");
}

norms::Domain domain_from_string(const std::string& name, int n) {
  if (name == "half-line") return norms::Domain::half_line();
  if (name == "interval01") return norms::Domain::interval01();
  if (name == "strip") return norms::Domain::strip(n);
  if (name == "half-space") return norms::Domain::half_space(n);
  throw std::invalid_argument("config: unknown domain '" + name + "'");
}

RunConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& error) {
    throw std::invalid_argument(std::string("config: parse error: ") + error.what());
  }
  if (!root.is_object()) throw std::invalid_argument("config: top level must be an object");
  reject_unknown_keys(root,
                      {"seed", "workers", "format", "out", "lambda_grid", "quadrature",
                       "search", "cases"},
                      "top level");

  RunConfig config;
  config.seed = root.value("seed", config.seed);
  config.workers = root.value("workers", config.workers);
  config.format = root.value("format", config.format);
  if (config.format != "json" && config.format != "csv")
    throw std::invalid_argument("config: format must be json or csv");
  config.out = root.value("out", config.out);
  if (root.contains("lambda_grid"))
    config.lambda_grid = root.at("lambda_grid").get<std::vector<double>>();

  if (root.contains("quadrature")) {
    const json& q = root.at("quadrature");
    reject_unknown_keys(q, {"tol", "points_per_cell", "max_level"}, "quadrature");
    config.quadrature.tol = q.value("tol", config.quadrature.tol);
    config.quadrature.points_per_cell =
        q.value("points_per_cell", config.quadrature.points_per_cell);
    config.quadrature.max_level = q.value("max_level", config.quadrature.max_level);
  }

  if (root.contains("search")) {
    const json& s = root.at("search");
    reject_unknown_keys(s, {"budget", "seed", "lo", "hi", "start", "initial_step"},
                        "search");
    config.search.budget = s.value("budget", config.search.budget);
    config.search.seed = s.value("seed", config.search.seed);
    if (s.contains("lo")) config.search.lo = s.at("lo").get<std::vector<double>>();
    if (s.contains("hi")) config.search.hi = s.at("hi").get<std::vector<double>>();
    if (s.contains("start")) config.search.start = s.at("start").get<std::vector<double>>();
    config.search.initial_step = s.value("initial_step", config.search.initial_step);
  }

  if (root.contains("cases")) {
    const json& cases = root.at("cases");
    if (!cases.is_array()) throw std::invalid_argument("config: 'cases' must be an array");
    for (std::size_t i = 0; i < cases.size(); ++i)
      config.cases.push_back(parse_case(cases[i], i));
  }
  return config;
}

std::string serialize_config(const RunConfig& config) {
  json root;
  root["seed"] = config.seed;
  root["workers"] = config.workers;
  root["format"] = config.format;
  root["out"] = config.out;
  root["lambda_grid"] = config.lambda_grid;
  root["quadrature"] = {{"tol", config.quadrature.tol},
                        {"points_per_cell", config.quadrature.points_per_cell},
                        {"max_level", config.quadrature.max_level}};
  root["search"] = {{"budget", config.search.budget},
                    {"seed", config.search.seed},
                    {"lo", config.search.lo},
                    {"hi", config.search.hi},
                    {"start", config.search.start},
                    {"initial_step", config.search.initial_step}};
  root["cases"] = json::array();
  for (const auto& cc : config.cases) {
    const auto& c = cc.inequality_case;
    json item;
    item["id"] = inequalities::to_string(c.id);
    item["domain"] = domain_to_string(c.domain);
    item["n"] = c.n;
    item["m"] = c.m;
    item["k"] = c.k;
    item["p"] = rational_to_json(c.p);
    item["q"] = rational_to_json(c.q);
    item["alpha"] = rational_to_json(c.alpha);
    item["beta"] = rational_to_json(c.beta);
    item["r"] = rational_to_json(c.r);
    json trial;
    trial["family"] = cc.trial.family;
    trial["params"] = cc.trial.params;
    item["trial"] = trial;
    root["cases"].push_back(item);
  }
  return root.dump(2);
}

funcspace::TrialFunctionND build_trial(const TrialConfig& trial, int n) {
  auto param = [&](const std::string& key, double fallback) {
    auto it = trial.params.find(key);
    return it == trial.params.end() ? fallback : it->second;
  };

  funcspace::TrialFunction1D vertical;
  double smoothness = 6;
  if (trial.family == "poly-bump") {
    smoothness = param("M", 6);
    vertical = funcspace::make_poly_bump(param("a", 0.25), param("b", 0.45),
                                         static_cast<int>(smoothness));
  } else if (trial.family == "log-family") {
    vertical = funcspace::make_log_family(param("alpha_log", 0.5),
                                          param("epsilon_cut", 1e-3));
  } else if (trial.family == "log-quotient") {
    vertical = funcspace::make_log_quotient(param("alpha_log", 0.5),
                                            param("epsilon_cut", 1e-3));
  } else {
    throw std::invalid_argument("config: unknown trial family '" + trial.family + "'");
  }

  std::vector<funcspace::TrialFunction1D> transverse;
  for (int d = 0; d < n - 1; ++d)
    transverse.push_back(funcspace::make_poly_bump(
        param("ta", -0.25), param("tb", 0.25),
        static_cast<int>(param("tM", smoothness))));
  return funcspace::tensorize(vertical, transverse, n);
}

}  // namespace hslab::config
