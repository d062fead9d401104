#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "antiham/errors.hpp"
#include "antiham/harness.hpp"
#include "antiham/io.hpp"
#include "antiham/random.hpp"

using namespace antiham;

TEST_CASE("generators are deterministic") {
  const auto a = gen_random_system_A(4, 99);
  const auto b = gen_random_system_A(4, 99);
  CHECK((a.hamiltonian.array() == b.hamiltonian.array()).all());
  CHECK((a.observables[1].array() == b.observables[1].array()).all());
  const auto c = gen_random_system_A(4, 100);
  CHECK_FALSE((a.hamiltonian.array() == c.hamiltonian.array()).all());

  const auto r1 = gen_random_density(5, 7);
  const auto r2 = gen_random_density(5, 7);
  CHECK((r1.matrix().array() == r2.matrix().array()).all());
  CHECK_THROWS_AS(gen_random_system_A(0, 1), ContractError);
}

TEST_CASE("generated systems and states are valid") {
  int self_adjoint = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto sys = gen_random_system_A(4, seed);
    bool ok = hermiticity_violation(sys.hamiltonian) < 1e-12;
    for (const auto& o : sys.observables) ok = ok && hermiticity_violation(o) < 1e-12;
    self_adjoint += ok ? 1 : 0;

    const auto rho = gen_random_density(4, seed);
    CHECK(std::abs(rho.matrix().trace() - 1.0) < 1e-12);
    CHECK(rho.probabilities().minCoeff() >= -1e-12);
  }
  CHECK(self_adjoint == 100);

  const auto deg = gen_degenerate_density(4, 3);
  const RealVector& p = deg.probabilities();
  bool repeated = false;
  for (Index k = 1; k < p.size(); ++k) repeated = repeated || std::abs(p(k) - p(k - 1)) < 1e-12;
  CHECK(repeated);
  const auto deg_sys = gen_degenerate_system_A(4, 3);
  CHECK(ground_degeneracy(deg_sys) == 2);
}

TEST_CASE("trial seeds depend on suite, master seed and index only") {
  const auto s = trial_seed(1, "doubling", 4);
  CHECK(s == trial_seed(1, "doubling", 4));
  CHECK(s != trial_seed(1, "doubling", 5));
  CHECK(s != trial_seed(1, "c_transform", 4));
  CHECK(s != trial_seed(2, "doubling", 4));
}

TEST_CASE("suite names") {
  for (const Suite s : all_suites()) CHECK(parse_suite(to_string(s)) == s);
  CHECK_THROWS_AS(parse_suite("nope"), ContractError);
}

TEST_CASE("config validation") {
  CampaignConfig config;
  CHECK_NOTHROW(config.validate());
  config.base_dim = 17;
  CHECK_THROWS_AS(config.validate(), ContractError);
  config.base_dim = 2;
  config.trials = 0;
  CHECK_THROWS_AS(config.validate(), ContractError);
  config.trials = 1;
  config.tolerance = 0.0;
  CHECK_THROWS_AS(config.validate(), ContractError);
}

TEST_CASE("empty suite selection gives an empty report") {
  CampaignConfig config;
  config.suites.clear();
  const auto result = run_campaign(config);
  CHECK(result.reports.empty());
  CHECK(result.overall_pass);
}

TEST_CASE("report lists every catalogued property once") {
  CampaignConfig config;
  config.base_dim = 2;
  config.trials = 2;
  const auto result = run_campaign(config);
  REQUIRE(result.reports.size() == property_catalog().size());
  std::set<std::string> names;
  for (std::size_t k = 0; k < result.reports.size(); ++k) {
    const auto& r = result.reports[k];
    CHECK(r.property == property_catalog()[k].name);
    CHECK_FALSE(r.anchor.empty());
    CHECK(r.trials == 2);
    CHECK(r.pass == (r.failures == 0));
    names.insert(std::string(to_string(r.suite)) + "/" + r.property);
  }
  CHECK(names.size() == result.reports.size());

  const auto doc = report_to_json(result);
  CHECK(doc.at("reports").size() == result.reports.size());
  for (const auto& entry : doc.at("reports")) {
    for (const char* key : {"suite", "property", "paper_anchor", "trials", "failures",
                            "max_deviation", "pass"}) {
      CHECK(entry.contains(key));
    }
  }
  CHECK(doc.at("config").at("trials") == 2);
  CHECK(doc.at("notes").size() == 1);

  config.suites = {Suite::doubling};
  CHECK(run_campaign(config).notes.empty());
}

TEST_CASE("forced failures carry replayable seeds") {
  CampaignConfig config;
  config.base_dim = 3;
  config.trials = 4;
  config.tolerance = 1e-18;
  config.suites = {Suite::c_transform};
  const auto result = run_campaign(config);
  CHECK_FALSE(result.overall_pass);

  bool replayed = false;
  for (const auto& r : result.reports) {
    for (const auto& f : r.failed_trials) {
      if (!f.error.empty()) continue;
      const auto again = run_trial(r.suite, config, f.trial, f.seed);
      for (const auto& d : again) {
        if (d.property != r.property) continue;
        CHECK(d.deviation == f.deviation);
        replayed = true;
      }
    }
  }
  CHECK(replayed);
}

TEST_CASE("suite order does not change results") {
  CampaignConfig forward;
  forward.base_dim = 2;
  forward.trials = 3;
  forward.suites = {Suite::doubling, Suite::time_reversal};
  CampaignConfig backward = forward;
  backward.suites = {Suite::time_reversal, Suite::doubling};
  const auto a = run_campaign(forward);
  const auto b = run_campaign(backward);
  for (const auto& ra : a.reports) {
    bool found = false;
    for (const auto& rb : b.reports) {
      if (rb.suite == ra.suite && rb.property == ra.property) {
        CHECK(rb.max_deviation == ra.max_deviation);
        found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("json round trips") {
  Rng rng(61);
  const Matrix m = rng.matrix(3, 2);
  CHECK((io::matrix_from_json(io::matrix_to_json(m)).array() == m.array()).all());

  const auto op = rng.reallinear(3);
  CHECK(max_deviation(io::op_from_json(io::op_to_json(op)), op) == 0.0);

  const auto sys = gen_random_system_A(3, 5);
  const auto back = io::system_from_json(io::system_to_json(sys));
  CHECK(back.label == SystemLabel::A);
  CHECK((back.hamiltonian.array() == sys.hamiltonian.array()).all());
  CHECK(back.observables.size() == sys.observables.size());

  const auto space = io::space_from_json(io::space_to_json(DoubledSpace(4)));
  CHECK(space.base_dim() == 4);

  auto bad = io::matrix_to_json(m);
  bad["rows"] = 4;
  CHECK_THROWS_AS(io::matrix_from_json(bad), ShapeError);

  const auto bundle = build_system_C(build_system_B(sys), DoubledSpace(3));
  const auto doc = io::bundle_to_json(bundle);
  CHECK(doc.at("label") == "C");
  CHECK(doc.contains("j"));
  CHECK(doc.at("u").at("dim") == 6);
}
