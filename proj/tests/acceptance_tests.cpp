// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Run through ctest or directly; --steps and --seed override the
// defaults, --criterion N runs a single criterion.
#include <cstring>
#include <iostream>
#include <string>

#include "braidconf/acceptance.hpp"

int main(int argc, char** argv) {
  braidconf::AcceptanceOptions options;
  int only = 0;
  try {
    for (int i = 1; i < argc; ++i) {
      std::string arg = argv[i];
      auto next_value = [&](const char* flag) {
        if (i + 1 >= argc) {
          std::cerr << "missing value for " << flag << "\n";
          std::exit(2);
        }
        return std::string(argv[++i]);
      };
      if (arg == "--steps") {
        options.monodromy_steps = std::stoi(next_value("--steps"));
      } else if (arg == "--seed") {
        options.seed = std::stoull(next_value("--seed"));
      } else if (arg == "--criterion") {
        only = std::stoi(next_value("--criterion"));
      } else {
        std::cerr << "usage: acceptance_tests [--criterion N] [--steps N] [--seed S]\n";
        return 2;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  int failures = 0;
  auto report = [&](const braidconf::CriterionResult& r) {
    std::cout << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.name
              << " -- " << r.details << " (" << static_cast<long>(r.elapsed_ms) << " ms)"
              << std::endl;
    if (!r.passed) ++failures;
  };

  try {
    if (only != 0) {
      report(braidconf::run_criterion(only, options));
    } else {
      braidconf::run_acceptance(options, report);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (failures == 0) {
    std::cout << "acceptance: all criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed" << std::endl;
  return 1;
}
