#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace braidconf {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string details;
  double elapsed_ms = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240917;  ///< seed for every randomized suite
  int monodromy_steps = 2000;     ///< samples per generator loop
  unsigned solver_threads = 0;    ///< 0 = hardware concurrency
};

/// One report per lemma-style property suite on the rank-2 automorphism.
struct LemmaReport {
  std::string name;
  bool passed = false;
  long trials = 0;
  long counterexamples = 0;
  std::string note;
};

/// The exhaustive (length <= 12) and randomized property suites for the
/// structure lemmas of the automorphism f.  random_trials sizes the
/// randomized suites (default 1e5; the orbit-window suite runs a tenth).
std::vector<LemmaReport> run_f2_lemma_suites(std::uint64_t seed, long random_trials = 100000);

struct ParabolicSearchStats {
  long parabolic_count = 0;   ///< trace-normalized matrices with entries within the bound
  long braid_pairs = 0;       ///< ordered non-commuting pairs satisfying the braid relation
  long normalized = 0;        ///< pairs that normalized to the standard pair
  long failures = 0;
};

/// Enumerates every parabolic pair with entries bounded by entry_bound and
/// normalizes each eligible pair; failures counts pairs that did not land on
/// the standard pair.
ParabolicSearchStats parabolic_pair_census(long entry_bound);

/// Runs one acceptance criterion (1..8).
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

/// Runs every criterion in order, invoking on_result as each one finishes.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options = {},
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace braidconf
