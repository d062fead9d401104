#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "antiham/reallinear.hpp"

namespace antiham {

enum class Suite {
  appendix_calculus,
  doubling,
  c_transform,
  antilinear_injection,
  time_reversal,
};

std::string_view to_string(Suite suite);
Suite parse_suite(std::string_view name);
const std::vector<Suite>& all_suites();

struct CampaignConfig {
  Index base_dim = 3;
  int trials = 100;
  std::uint64_t master_seed = 20240611;
  double tolerance = kDefaultTolerance;
  std::vector<double> time_points{0.3, 1.0, 2.5};
  std::vector<Suite> suites = all_suites();

  static constexpr Index kMaxBaseDim = 16;

  /// Throws ContractError on an invalid configuration.
  void validate() const;
};

/// One checked property: its identity and the threshold its deviation must
/// stay strictly below (further capped by the campaign tolerance).
struct PropertySpec {
  Suite suite;
  std::string name;
  std::string anchor;
  double threshold;
};

/// Every property the campaign checks, in report order.
const std::vector<PropertySpec>& property_catalog();

struct FailedTrial {
  int trial;
  std::uint64_t seed;
  double deviation;
  std::string error; // empty unless the trial threw
};

struct PropertyReport {
  Suite suite;
  std::string property;
  std::string anchor;
  double threshold;
  int trials = 0;
  int failures = 0;
  double max_deviation = 0.0;
  bool pass = true;
  std::vector<FailedTrial> failed_trials;
};

struct CampaignResult {
  CampaignConfig config;
  std::vector<PropertyReport> reports;
  std::vector<std::string> notes;
  bool overall_pass = true;
};

/// Deviation of every property of one suite for one trial seed. Throws if
/// the trial itself fails.
struct PropertyDeviation {
  std::string property;
  double deviation;
};
std::vector<PropertyDeviation> run_trial(Suite suite, const CampaignConfig& config,
                                         int trial_index, std::uint64_t seed);

CampaignResult run_campaign(const CampaignConfig& config);

nlohmann::json config_to_json(const CampaignConfig& config);
nlohmann::json report_to_json(const CampaignResult& result);

} // namespace antiham
