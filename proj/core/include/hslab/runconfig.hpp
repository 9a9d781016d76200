#pragma once

#include <map>
#include <string>
#include <vector>

#include "hslab/constsearch.hpp"
#include "hslab/funcspace.hpp"
#include "hslab/inequalities.hpp"

namespace hslab::config {

struct TrialConfig {
  std::string family = "poly-bump";
  std::map<std::string, double> params;
};

struct CaseConfig {
  inequalities::InequalityCase inequality_case;
  TrialConfig trial;
};

struct QuadratureConfig {
  double tol = 1e-6;
  int points_per_cell = 12;
  int max_level = 6;
};

struct SearchConfig {
  int budget = 200;
  unsigned long seed = 0;
  std::vector<double> lo{0.02, 0.5, 3};
  std::vector<double> hi{0.5, 10, 9};
  std::vector<double> start;
  double initial_step = 0.25;
};

struct RunConfig {
  unsigned long seed = 0;
  int workers = 1;
  std::string format = "json";  // json | csv
  std::string out;              // empty: stdout
  std::vector<double> lambda_grid{2, 4, 8, 16, 32, 64};
  QuadratureConfig quadrature;
  SearchConfig search;
  std::vector<CaseConfig> cases;
};

/// Strict parser: unknown keys anywhere raise std::invalid_argument naming
/// the key; rational case parameters are given as "num/den" strings.
RunConfig parse_config(const std::string& json_text);

/// Inverse of parse_config up to key order; parse(serialize(c)) == c.
std::string serialize_config(const RunConfig& config);

std::string domain_to_string(const norms::Domain& domain);
norms::Domain domain_from_string(const std::string& name, int n);

/// Builds the trial function for a case: the named family supplies the
/// vertical factor; transverse factors (dimensions beyond the first) are
/// bumps from params "ta"/"tb"/"tM" (defaults (-1/4, 1/4), M = vertical M).
funcspace::TrialFunctionND build_trial(const TrialConfig& trial, int n);

}  // namespace hslab::config
