#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "antiham/applications.hpp"
#include "antiham/c_transform.hpp"
#include "antiham/doubling.hpp"
#include "antiham/errors.hpp"
#include "antiham/harness.hpp"
#include "antiham/io.hpp"

using namespace antiham;

namespace {

std::string format_entry(cplx z) {
  auto clean = [](double x) { return std::abs(x) < 5e-13 ? 0.0 : x; };
  const double re = clean(z.real());
  const double im = clean(z.imag());
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  if (im == 0.0) {
    out << re;
  } else if (re == 0.0) {
    out << im << "i";
  } else {
    out << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  }
  return out.str();
}

void print_matrix(const std::string& title, const Matrix& m) {
  std::cout << title << " (" << m.rows() << "x" << m.cols() << ")\n";
  for (Index r = 0; r < m.rows(); ++r) {
    std::cout << "  ";
    for (Index c = 0; c < m.cols(); ++c) {
      std::cout << std::setw(16) << format_entry(m(r, c));
    }
    std::cout << "\n";
  }
}

void print_check(const std::string& what, double deviation) {
  std::cout << "  " << std::left << std::setw(44) << what << std::right
            << std::scientific << std::setprecision(2) << deviation << std::defaultfloat
            << "\n";
}

RealVector eigenvalues(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

void print_spectrum(const std::string& title, const Matrix& h) {
  std::cout << title << ":";
  for (const double x : eigenvalues(h)) std::cout << " " << std::setprecision(6) << x;
  std::cout << "\n";
}

void show_systems(const QuantumSystem& sys_a, const QuantumSystem& sys_b,
                  const SystemCBundle& bundle) {
  print_matrix("H^A", sys_a.hamiltonian);
  for (std::size_t k = 0; k < sys_a.observables.size(); ++k) {
    print_matrix("O^A[" + std::to_string(k) + "]", sys_a.observables[k]);
  }
  print_matrix("H^B", sys_b.hamiltonian);
  for (std::size_t k = 0; k < sys_b.observables.size(); ++k) {
    print_matrix("O^B[" + std::to_string(k) + "]", sys_b.observables[k]);
  }
  print_matrix("U H^B U^-1", bundle.energy_observable_c);
  print_matrix("H^C", bundle.hamiltonian_c);
  for (std::size_t k = 0; k < bundle.system.observables.size(); ++k) {
    print_matrix("O^C[" + std::to_string(k) + "]", bundle.system.observables[k]);
  }
  print_spectrum("spectrum U H^B U^-1", bundle.energy_observable_c);
  print_spectrum("spectrum H^C", bundle.hamiltonian_c);
}

int demo(const std::string& example) {
  if (example == "scalar") {
    const double e = 1.5;
    const auto sys_a = QuantumSystem::make(SystemLabel::A, Matrix::Constant(1, 1, e), {});
    const auto sys_b = build_system_B(sys_a);
    const auto bundle = build_system_C(sys_b, DoubledSpace(1));
    show_systems(sys_a, sys_b, bundle);
    std::cout << "checks\n";
    print_check("H^C self-adjoint", hermiticity_violation(bundle.hamiltonian_c));
    print_check("[H^C, j]", max_abs(commutator(bundle.hamiltonian_c, bundle.j_matrix)));
    print_check("ground degeneracy of B minus 2",
                static_cast<double>(ground_degeneracy(sys_b) - 2));
    return 0;
  }
  if (example == "pauli") {
    Matrix y(2, 2);
    y << 0.0, -kI, kI, 0.0;
    Matrix z(2, 2);
    z << 1.0, 0.0, 0.0, -1.0;
    const auto sys_a = QuantumSystem::make(SystemLabel::A, z, {y});
    const auto sys_b = build_system_B(sys_a);
    const auto bundle = build_system_C(sys_b, DoubledSpace(2));
    show_systems(sys_a, sys_b, bundle);
    print_spectrum("spectrum O^C[0]", bundle.system.observables[0]);
    const Matrix& o_b = sys_b.observables[0];
    const Matrix re = o_b.real().cast<cplx>();
    const Matrix im = o_b.imag().cast<cplx>();
    std::cout << "checks\n";
    print_check("O^C - (Re O^B + j Im O^B)",
                max_abs(Matrix(bundle.system.observables[0] - re - bundle.j_matrix * im)));
    print_check("[O^C, j]",
                max_abs(commutator(bundle.system.observables[0], bundle.j_matrix)));
    return 0;
  }
  if (example == "timereversal") {
    Matrix h(2, 2);
    h << 1.0, 0.5, 0.5, -0.3;
    const auto sys_a = QuantumSystem::make(SystemLabel::A, h, {});
    const auto sys_b = build_system_B(sys_a);
    const auto bundle = build_system_C(sys_b, DoubledSpace(2));
    show_systems(sys_a, sys_b, bundle);
    const Matrix t_c = build_time_reversal_C(bundle, RealLinearOp::conjugation(2));
    print_matrix("T^C", t_c);
    std::cout << "checks\n";
    print_check("(T^C)^dagger T^C - 1",
                max_abs(Matrix(t_c.adjoint() * t_c - Matrix::Identity(4, 4))));
    print_check("{T^C, H^C}", max_abs(anticommutator(t_c, bundle.hamiltonian_c)));
    print_check("[T^C, U H^B U^-1]", max_abs(commutator(t_c, bundle.energy_observable_c)));
    return 0;
  }
  if (example == "inject") {
    Matrix h(2, 2);
    h << 0.7, 0.2 - 0.1 * kI, 0.2 + 0.1 * kI, -0.4;
    Matrix a(2, 2);
    a << 0.0, 0.6, -0.6, 0.0;
    const auto h2 = RealLinearOp::antilinear(a);
    const auto sys_a = QuantumSystem::make(SystemLabel::A, h, {});
    const auto sys_b = build_system_B(sys_a);
    const auto bundle = build_system_C(sys_b, DoubledSpace(2));
    show_systems(sys_a, sys_b, bundle);
    const Matrix h2_c = inject_term_C(bundle, h2);
    print_matrix("H^C_2", h2_c);
    const auto check = validate_antilinear_condition(h2);
    std::cout << "checks\n";
    print_check("(i H_2)^dagger + i H_2", check.max_violation);
    print_check("H^C_2 self-adjoint", hermiticity_violation(h2_c));
    Vector psi0(2);
    psi0 << 1.0, 0.0;
    const Matrix total = bundle.hamiltonian_c + h2_c;
    for (const double t : {0.5, 1.0, 2.0}) {
      const Vector psi_t = evolve_reallinear(h, h2, psi0, t);
      const Vector via_c = propagator(total, t) * map_state_C(bundle.u, lift_pure(psi0));
      print_check("U(Psi^A(" + std::to_string(t).substr(0, 3) + "),0) - Psi^C",
                  max_abs(Vector(map_state_C(bundle.u, lift_pure(psi_t)) - via_c)));
    }
    return 0;
  }
  std::cerr << "unknown example '" << example << "'\n";
  return 2;
}

int verify(CampaignConfig config, const std::vector<std::string>& suite_names,
           const std::string& out_path) {
  if (const char* env = std::getenv("ANTIHAM_SEED")) {
    config.master_seed = std::stoull(env);
  }
  if (!suite_names.empty()) {
    config.suites.clear();
    for (const auto& s : suite_names) config.suites.push_back(parse_suite(s));
  }

  const auto start = std::chrono::steady_clock::now();
  const auto result = run_campaign(config);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  for (const auto& r : result.reports) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(22)
              << to_string(r.suite) << std::setw(36) << r.property << std::right
              << " max_dev=" << std::scientific << std::setprecision(3) << r.max_deviation
              << std::defaultfloat << " failures=" << r.failures << "/" << r.trials << "\n";
    for (std::size_t k = 0; k < r.failed_trials.size() && k < 3; ++k) {
      const auto& f = r.failed_trials[k];
      std::cout << "     trial " << f.trial << " seed " << f.seed << " deviation "
                << f.deviation;
      if (!f.error.empty()) std::cout << " error: " << f.error;
      std::cout << "\n";
    }
  }
  for (const auto& note : result.notes) std::cout << "note: " << note << "\n";
  std::cout << "overall: " << (result.overall_pass ? "PASS" : "FAIL") << " ("
            << result.reports.size() << " properties, " << std::fixed << std::setprecision(2)
            << seconds << " s)\n";

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << report_to_json(result).dump(2) << "\n";
  }
  return result.overall_pass ? 0 : 1;
}

int transform(const std::string& input, const std::string& to, const std::string& out_path) {
  std::ifstream in(input);
  if (!in) throw Error("cannot read '" + input + "'");
  const auto doc = io::json::parse(in);
  const auto sys_a = io::system_from_json(doc);
  if (sys_a.label != SystemLabel::A) throw ContractError("input must be a system A document");
  const auto sys_b = build_system_B(sys_a);

  io::json result;
  if (to == "B") {
    result = io::system_to_json(sys_b);
  } else if (to == "C") {
    result = io::bundle_to_json(build_system_C(sys_b, DoubledSpace(sys_a.dim())));
  } else {
    throw ContractError("--to must be B or C");
  }

  if (out_path.empty() || out_path == "-") {
    std::cout << result.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << result.dump(2) << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Antilinear Hamiltonians via doubled Hilbert spaces"};
  app.require_subcommand(1);

  CampaignConfig config;
  std::vector<std::string> suites;
  std::string out_path;
  auto* verify_cmd = app.add_subcommand("verify", "run the property campaign");
  verify_cmd->add_option("--dim", config.base_dim, "dimension of system A")
      ->check(CLI::Range(Index{1}, CampaignConfig::kMaxBaseDim));
  verify_cmd->add_option("--trials", config.trials, "random instances per suite")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", config.master_seed, "master seed (ANTIHAM_SEED overrides)");
  verify_cmd->add_option("--tol", config.tolerance, "deviation tolerance")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--suite", suites, "restrict to these suites");
  verify_cmd->add_option("--out", out_path, "JSON report path");

  std::string example;
  auto* demo_cmd = app.add_subcommand("demo", "print a small worked example");
  demo_cmd->add_option("--example", example)
      ->required()
      ->check(CLI::IsMember({"scalar", "pauli", "timereversal", "inject"}));

  std::string input;
  std::string to;
  std::string transform_out;
  auto* transform_cmd = app.add_subcommand("transform", "build system B or C from system A");
  transform_cmd->add_option("--input", input)->required()->check(CLI::ExistingFile);
  transform_cmd->add_option("--to", to)->required()->check(CLI::IsMember({"B", "C"}));
  transform_cmd->add_option("--out", transform_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify_cmd) return verify(config, suites, out_path);
    if (*demo_cmd) return demo(example);
    if (*transform_cmd) return transform(input, to, transform_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
