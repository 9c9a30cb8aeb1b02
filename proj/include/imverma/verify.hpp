#pragma once

#include <string>
#include <vector>

#include "imverma/serialize.hpp"

namespace imverma {

/// Sweep parameters shared by the verification suites. Flags override file
/// values; the file is JSON with these kebab-case keys.
struct SweepConfig {
  int max_length = 3;
  int index_lo = -3;
  int index_hi = 3;
  int label_lo = -4;
  int label_hi = 4;
  Rational lambda_h = 1;
  Rational lambda_d = 0;
  unsigned long seed = 20240915;
  int parallelism = 1;
  bool boundary_study = false;
  std::string output_path;

  void validate() const;  // lo <= hi, max_length >= 0, lambda rule
};

Json config_to_json(const SweepConfig& c);
void config_apply_json(SweepConfig& c, const Json& j);

struct SuiteReport {
  std::string suite;
  unsigned long seed = 0;
  long cells = 0;
  Json config;
  Json failures = Json::array();
  bool pass() const { return failures.empty(); }
};

Json report_to_json(const SuiteReport& r);

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Run one named verification suite ("gseries", "straighten", "relations",
/// "form", "crystal", "simplicity", "lattice"). Results are deterministic
/// and independent of cfg.parallelism.
SuiteReport run_suite(const std::string& name, const SweepConfig& cfg);

/// Deterministic parallel map: fn(i) for i in [0, n), fanned out over
/// `threads` workers into a pre-indexed result slot vector.
void parallel_for(long n, int threads, const std::function<void(long)>& fn);

}  // namespace imverma
