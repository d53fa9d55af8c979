#include "braidconf/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>

#include "braidconf/braid.hpp"
#include "braidconf/confmaps.hpp"
#include "braidconf/f2dyn.hpp"
#include "braidconf/modgroup.hpp"
#include "braidconf/monodromy.hpp"
#include "braidconf/sampling.hpp"

namespace braidconf {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

ReducedWord random_word_outside_c(Rng& rng, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  for (;;) {
    ReducedWord w = random_reduced_word(rng, 2, len(rng));
    if (!is_c_power(w)) return w;
  }
}

// ---- lemma 6.3-style pattern parsers -------------------------------------

// w = y^n x^{x_sign} ...
std::optional<long> parse_start(const ReducedWord& w, int x_sign) {
  RunAndNext r = leading_run(w, 1);
  if (r.next == make_letter(0, x_sign)) return r.run;
  return std::nullopt;
}
// f(w) = x^{-n+1} y ... (y_sign +1) or x^{-n} y^{-1} ... (y_sign -1)
std::optional<long> parse_image_start(const ReducedWord& fw, int y_sign) {
  RunAndNext r = leading_run(fw, 0);
  if (r.next == make_letter(1, y_sign)) return y_sign > 0 ? 1 - r.run : -r.run;
  return std::nullopt;
}
// w = ... x^{x_sign} y^n
std::optional<long> parse_end(const ReducedWord& w, int x_sign) {
  RunAndNext r = trailing_run(w, 1);
  if (r.next == make_letter(0, x_sign)) return r.run;
  return std::nullopt;
}
// f(w) = ... y x^{-n} (y_sign +1) or ... y^{-1} x^{-n-1} (y_sign -1)
std::optional<long> parse_image_end(const ReducedWord& fw, int y_sign) {
  RunAndNext r = trailing_run(fw, 0);
  if (r.next == make_letter(1, y_sign)) return y_sign > 0 ? -r.run : -r.run - 1;
  return std::nullopt;
}

bool ends_with_central(const ReducedWord& w) {
  auto ls = w.letters();
  if (ls.size() < 4) return false;
  auto tail_is = [&](const ReducedWord& pat) {
    auto ps = pat.letters();
    for (std::size_t i = 0; i < 4; ++i) {
      if (ls[ls.size() - 4 + i] != ps[i]) return false;
    }
    return true;
  };
  return tail_is(f2_commutator()) || tail_is(c_power(-1));
}

std::string count_note(long trials, long bad) {
  std::ostringstream os;
  os << trials << " trials, " << bad << " counterexamples";
  return os.str();
}

}  // namespace

std::vector<LemmaReport> run_f2_lemma_suites(std::uint64_t seed, long random_trials) {
  std::vector<LemmaReport> out;
  const long kRandomTrials = random_trials;
  constexpr int kExhaustiveLen = 12;

  // fixed-points and shared-prefix scans run over one exhaustive pass
  {
    LemmaReport fixed{"fixed-points-are-central-powers", true, 0, 0, ""};
    LemmaReport shared{"shared-length-4-boundary-is-central", true, 0, 0, ""};
    long fixed_count = 0;
    ReducedWordEnumerator en(2, kExhaustiveLen);
    while (en.advance()) {
      ReducedWord w(2, en.current());
      ReducedWord fw = apply_f(w);
      ++fixed.trials;
      if (fw == w) {
        ++fixed_count;
        if (!is_c_power(w)) {
          fixed.passed = false;
          ++fixed.counterexamples;
        }
      }
      // shared prefix/suffix of length 4 must be c or c^{-1}
      if (w.length() >= 4 && fw.length() >= 4) {
        ++shared.trials;
        auto wl = w.letters();
        auto fl = fw.letters();
        bool same_prefix = true, same_suffix = true;
        for (int i = 0; i < 4; ++i) {
          if (wl[static_cast<std::size_t>(i)] != fl[static_cast<std::size_t>(i)]) same_prefix = false;
          if (wl[wl.size() - 4 + static_cast<std::size_t>(i)] !=
              fl[fl.size() - 4 + static_cast<std::size_t>(i)]) same_suffix = false;
        }
        auto is_central_4 = [&](std::span<const Letter> ls, std::size_t from) {
          ReducedWord u(2, ls.subspan(from, 4));
          return u == f2_commutator() || u == c_power(-1);
        };
        if (same_prefix && !is_central_4(wl, 0)) {
          shared.passed = false;
          ++shared.counterexamples;
        }
        if (same_suffix && !is_central_4(wl, wl.size() - 4)) {
          shared.passed = false;
          ++shared.counterexamples;
        }
      }
    }
    // exactly c^m with 4|m| <= 12
    if (fixed_count != 7) {
      fixed.passed = false;
      fixed.note = "fixed-point count " + std::to_string(fixed_count) + ", want 7";
    } else {
      fixed.note = "7 fixed words = c^m, |m| <= 3";
    }
    shared.note = count_note(shared.trials, shared.counterexamples);
    out.push_back(std::move(fixed));
    out.push_back(std::move(shared));
  }

  // start/end structure transfer under f, both directions of all four forms
  {
    LemmaReport rep{"start-end-transfer", true, 0, 0, ""};
    Rng rng(seed + 1);
    for (long t = 0; t < kRandomTrials; ++t) {
      ReducedWord w = random_reduced_word(rng, 2, static_cast<int>(t % 40));
      ReducedWord fw = apply_f(w);
      ++rep.trials;
      bool ok = parse_start(w, +1) == parse_image_start(fw, +1) &&
                parse_start(w, -1) == parse_image_start(fw, -1) &&
                parse_end(w, +1) == parse_image_end(fw, +1) &&
                parse_end(w, -1) == parse_image_end(fw, -1);
      if (!ok) {
        rep.passed = false;
        ++rep.counterexamples;
      }
    }
    rep.note = count_note(rep.trials, rep.counterexamples);
    out.push_back(std::move(rep));
  }

  // decomposition reassembles without cancellation
  {
    LemmaReport rep{"decomposition-no-cancellation", true, 0, 0, ""};
    Rng rng(seed + 2);
    for (long t = 0; t < kRandomTrials; ++t) {
      ReducedWord w = random_word_outside_c(rng, 32);
      CDecomposition d = c_decompose(w);
      ++rep.trials;
      if (w.length() != 4 * std::labs(d.left) + d.core.length() + 4 * std::labs(d.right)) {
        rep.passed = false;
        ++rep.counterexamples;
      }
    }
    rep.note = count_note(rep.trials, rep.counterexamples);
    out.push_back(std::move(rep));
  }

  // products keep one boundary exponent
  {
    LemmaReport rep{"product-keeps-a-boundary", true, 0, 0, ""};
    Rng rng(seed + 3);
    long t = 0;
    while (t < kRandomTrials) {
      ReducedWord w1 = random_word_outside_c(rng, 24);
      ReducedWord w2 = random_word_outside_c(rng, 24);
      ReducedWord prod = concat(w1, w2);
      if (is_c_power(prod)) continue;
      ++t;
      ++rep.trials;
      if (!(c_left(prod) == c_left(w1) || c_right(prod) == c_right(w2))) {
        rep.passed = false;
        ++rep.counterexamples;
      }
    }
    rep.note = count_note(rep.trials, rep.counterexamples);
    out.push_back(std::move(rep));
  }

  // boundary exponents never decrease along f
  {
    LemmaReport rep{"boundary-exponents-non-decreasing", true, 0, 0, ""};
    Rng rng(seed + 4);
    for (long t = 0; t < kRandomTrials; ++t) {
      ReducedWord w = random_word_outside_c(rng, 32);
      ReducedWord fw = apply_f(w);
      ++rep.trials;
      if (!(c_left(w) <= c_left(fw) && c_right(w) <= c_right(fw))) {
        rep.passed = false;
        ++rep.counterexamples;
      }
    }
    rep.note = count_note(rep.trials, rep.counterexamples);
    out.push_back(std::move(rep));
  }

  // every orbit passes through three consecutive words with plain endings;
  // the window is empirical (+-12), misses are reported rather than counted
  // as counterexamples
  {
    LemmaReport rep{"orbit-has-three-plain-endings", true, 0, 0, ""};
    Rng rng(seed + 5);
    long misses = 0;
    const long orbit_trials = std::max(1L, kRandomTrials / 10);
    for (long t = 0; t < orbit_trials; ++t) {
      ReducedWord w = random_word_outside_c(rng, 20);
      auto orbit = f_orbit_window(w, -12, 12);
      ++rep.trials;
      bool found = false;
      for (int n = 1; n + 1 < static_cast<int>(orbit.size()); ++n) {
        if (!ends_with_central(orbit[static_cast<std::size_t>(n - 1)]) &&
            !ends_with_central(orbit[static_cast<std::size_t>(n)]) &&
            !ends_with_central(orbit[static_cast<std::size_t>(n + 1)])) {
          found = true;
          break;
        }
      }
      if (!found) ++misses;
    }
    // a miss is not a counterexample (the window bound is empirical, not
    // part of the statement); it is surfaced in the note instead
    rep.note = count_note(rep.trials, 0) + "; " + std::to_string(misses) +
               " orbits without a witness in the +-12 window";
    out.push_back(std::move(rep));
  }

  return out;
}

ParabolicSearchStats parabolic_pair_census(long entry_bound) {
  ParabolicSearchStats stats;
  const long bound = entry_bound;

  // trace-(+2) parabolic representatives [a, b; c, 2-a] with |entries| <= bound
  struct Mat {
    long a, b, c, d;
  };
  std::vector<Mat> parabolics;
  for (long b = -bound; b <= bound; ++b) {
    if (b != 0) parabolics.push_back({1, b, 0, 1});
  }
  for (long a = -bound; a <= bound; ++a) {
    long d = 2 - a;
    if (d < -bound || d > bound) continue;
    long rhs = a * d - 1;  // = -(a-1)^2 = b*c with c != 0
    if (a == 1) {
      for (long c = -bound; c <= bound; ++c) {
        if (c != 0) parabolics.push_back({1, 0, c, 1});
      }
      continue;
    }
    for (long c = -bound; c <= bound; ++c) {
      if (c == 0 || rhs % c != 0) continue;
      long b = rhs / c;
      if (b < -bound || b > bound) continue;
      parabolics.push_back({a, b, c, d});
    }
  }
  stats.parabolic_count = static_cast<long>(parabolics.size());

  auto mul = [](const Mat& x, const Mat& y) {
    return Mat{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
               x.c * y.b + x.d * y.d};
  };
  auto eq_up_to_sign = [](const Mat& x, const Mat& y) {
    return (x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d) ||
           (x.a == -y.a && x.b == -y.b && x.c == -y.c && x.d == -y.d);
  };

  for (const Mat& p : parabolics) {
    for (const Mat& q : parabolics) {
      Mat pq = mul(p, q);
      Mat qp = mul(q, p);
      if (eq_up_to_sign(pq, qp)) continue;  // commuting: the cyclic case
      if (!eq_up_to_sign(mul(pq, p), mul(qp, q))) continue;
      ++stats.braid_pairs;
      try {
        UnimodularMatrix pm(p.a, p.b, p.c, p.d);
        UnimodularMatrix qm(q.a, q.b, q.c, q.d);
        normalize_parabolic_pair(pm, qm);  // verifies the standard pair internally
        ++stats.normalized;
      } catch (const std::exception&) {
        ++stats.failures;
      }
    }
  }
  return stats;
}

namespace {

CriterionResult criterion_1(const AcceptanceOptions& options) {
  CriterionResult r{1, "bounded solve at length 6 reproduces the x-orbit", false, "", 0.0};
  auto start = Clock::now();
  SolveOptions sopt;
  sopt.threads = options.solver_threads;
  auto sols = solve_equation(0, 6, sopt);
  double solve_ms = ms_since(start);

  std::set<ReducedWord> expected;
  expected.insert(ReducedWord(2));
  for (const ReducedWord& w : f_orbit_of_x_up_to(6)) expected.insert(w);

  long total_words = 0;
  ReducedWordEnumerator en(2, 6);
  while (en.advance()) ++total_words;

  bool set_ok = std::set<ReducedWord>(sols.begin(), sols.end()) == expected;
  bool count_ok = sols.size() == 11 && total_words - 1 == 1456;
  bool time_ok = solve_ms < 1000.0;
  r.passed = set_ok && count_ok && time_ok;
  std::ostringstream os;
  os << sols.size() << " solutions over " << (total_words - 1)
     << " non-identity words; solve took " << solve_ms << " ms";
  r.details = os.str();
  r.elapsed_ms = ms_since(start);
  return r;
}

CriterionResult criterion_2(const AcceptanceOptions& options) {
  CriterionResult r{2, "extended searches: orbit at length 16, identity for k != 0", false, "", 0.0};
  auto start = Clock::now();
  SolveOptions sopt;
  sopt.threads = options.solver_threads;

  auto sols16 = solve_equation(0, 16, sopt);
  std::set<ReducedWord> expected16;
  expected16.insert(ReducedWord(2));
  for (const ReducedWord& w : f_orbit_of_x_up_to(16)) expected16.insert(w);
  bool orbit_ok = std::set<ReducedWord>(sols16.begin(), sols16.end()) == expected16 &&
                  all_in_f_orbit_of_x(sols16, 16);

  bool k_ok = true;
  for (int k : {1, -1, 2, -2, 3, -3}) {
    auto sols = solve_equation(k, 12, sopt);
    if (sols.size() != 1 || !sols[0].is_identity()) k_ok = false;
  }

  // the pruned search must agree with the unpruned one
  SolveOptions unpruned = sopt;
  unpruned.prune = false;
  bool prune_ok = solve_equation(0, 10, sopt) == solve_equation(0, 10, unpruned) &&
                  solve_equation(1, 10, sopt) == solve_equation(1, 10, unpruned);

  double elapsed = ms_since(start);
  bool time_ok = elapsed < 600000.0;
  r.passed = orbit_ok && k_ok && prune_ok && time_ok;
  std::ostringstream os;
  os << sols16.size() << " solutions at length 16 (all in the x-orbit: " << (orbit_ok ? "yes" : "no")
     << "); k in {+-1,+-2,+-3} -> identity only: " << (k_ok ? "yes" : "no")
     << "; pruned == unpruned at length 10: " << (prune_ok ? "yes" : "no") << "; " << elapsed
     << " ms";
  r.details = os.str();
  r.elapsed_ms = elapsed;
  return r;
}

CriterionResult criterion_3(const AcceptanceOptions& options) {
  CriterionResult r{3, "structure-lemma property suites", false, "", 0.0};
  auto start = Clock::now();
  auto reports = run_f2_lemma_suites(options.seed);
  bool all = true;
  long counterexamples = 0;
  for (const auto& rep : reports) {
    all = all && rep.passed;
    counterexamples += rep.counterexamples;
  }
  r.passed = all;
  std::ostringstream os;
  os << reports.size() << " suites, " << counterexamples << " counterexamples";
  for (const auto& rep : reports) {
    if (!rep.passed) os << "; FAILED " << rep.name << " (" << rep.note << ")";
  }
  r.details = os.str();
  r.elapsed_ms = ms_since(start);
  return r;
}

CriterionResult criterion_4(const AcceptanceOptions& options) {
  CriterionResult r{4, "word-problem cross-validation and splitting identities", false, "", 0.0};
  auto start = Clock::now();
  Rng rng(options.seed + 40);

  long mismatches = 0;
  long equal_pairs = 0;
  const long trials = 10000;
  for (int strands : {3, 4}) {
    std::uniform_int_distribution<int> len(0, 40);
    std::uniform_int_distribution<int> coin(0, 1);
    for (long t = 0; t < trials; ++t) {
      BraidWord u = random_braid_word(rng, strands, len(rng));
      BraidWord v = coin(rng) == 0 ? shuffle_braid_word(rng, u, 30, 40)
                                   : random_braid_word(rng, strands, len(rng));
      bool nf = braid_eq(u, v);
      bool oracle = artin_equal(u, v);
      if (nf != oracle) ++mismatches;
      if (nf) ++equal_pairs;
    }
  }

  // conjugation table of the kernel generators, exact
  const BraidWord bx(4, {-1, 3});
  const BraidWord by = bx.inverse() * BraidWord(4, {-2}) * bx * BraidWord(4, {2});
  const BraidWord s1(4, {1}), s2(4, {2});
  bool table_ok = artin_equal(s1.inverse() * bx * s1, bx) &&
                  artin_equal(s2.inverse() * bx * s2, bx * by) &&
                  artin_equal(s1.inverse() * by * s1, by * bx.inverse()) &&
                  artin_equal(s2.inverse() * by * s2, by);

  // exact identities of the induced 4-strand homomorphism.  The image of
  // beta is conjugate to alpha_4^2 (literal equality fails: the permutations
  // differ); the conjugator sigma_1^{-1} makes it an exact identity.
  BraidWord psi_beta = psi3_star(beta_n(3));
  BraidWord a4sq = alpha_n(4).pow(2);
  BraidWord conj(4, {-1});
  bool beta_ok = !braid_eq(psi_beta, a4sq) &&
                 braid_eq(psi_beta, conj * a4sq * conj.inverse()) &&
                 artin_equal(psi_beta, conj * a4sq * conj.inverse());
  bool center_ok = braid_eq(psi3_star(z_n(3)), z_n(4)) && artin_equal(psi3_star(z_n(3)), z_n(4));

  r.passed = mismatches == 0 && table_ok && beta_ok && center_ok;
  std::ostringstream os;
  os << 2 * trials << " random pairs (" << equal_pairs << " equal), " << mismatches
     << " oracle mismatches; conjugation table exact: " << (table_ok ? "yes" : "no")
     << "; beta image conjugate to alpha_4^2 via sigma_1^{-1}: " << (beta_ok ? "yes" : "no")
     << "; z_3 -> z_4: " << (center_ok ? "yes" : "no");
  r.details = os.str();
  r.elapsed_ms = ms_since(start);
  return r;
}

CriterionResult criterion_5(const AcceptanceOptions&) {
  CriterionResult r{5, "double cosets of (alpha beta)^n are pairwise distinct", false, "", 0.0};
  auto start = Clock::now();
  const BraidWord ab = alpha_n(3) * beta_n(3);
  std::vector<BraidWord> powers;
  powers.push_back(ab);
  for (int n = 2; n <= 50; ++n) powers.push_back(powers.back() * ab);

  long comparisons = 0;
  long collisions = 0;
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 50; ++j) {
      if (i == j) continue;
      ++comparisons;
      if (double_coset_eq_b3(powers[static_cast<std::size_t>(i)],
                             powers[static_cast<std::size_t>(j)])) {
        ++collisions;
      }
    }
  }
  // sanity: each class contains itself
  bool self_ok = double_coset_eq_b3(powers[10], powers[10]);
  double elapsed = ms_since(start);
  r.passed = comparisons == 2450 && collisions == 0 && self_ok && elapsed < 5000.0;
  std::ostringstream os;
  os << comparisons << " ordered comparisons, " << collisions << " collisions, " << elapsed
     << " ms";
  r.details = os.str();
  r.elapsed_ms = elapsed;
  return r;
}

CriterionResult criterion_6(const AcceptanceOptions&) {
  CriterionResult r{6, "every bounded parabolic braid pair normalizes to the standard pair",
                    false, "", 0.0};
  auto start = Clock::now();
  ParabolicSearchStats stats = parabolic_pair_census(50);
  r.passed = stats.failures == 0 && stats.braid_pairs > 0 &&
             stats.normalized == stats.braid_pairs;
  std::ostringstream os;
  os << stats.parabolic_count << " parabolic matrices, " << stats.braid_pairs
     << " braid pairs, " << stats.normalized << " normalized, " << stats.failures << " failures";
  r.details = os.str();
  r.elapsed_ms = ms_since(start);
  return r;
}

CriterionResult criterion_7(const AcceptanceOptions& options) {
  CriterionResult r{7, "numerical invariants of the configuration-space maps", false, "", 0.0};
  auto start = Clock::now();
  Rng rng(options.seed + 70);

  bool j_ok = std::abs(j_invariant(Configuration({0.0, 1.0, 2.0})) - Complex{1728.0, 0.0}) <
              1e-9 * 1728.0;

  long transfer_bad = 0;
  for (int t = 0; t < 1000; ++t) {
    Configuration c = random_configuration(rng, 4);
    Complex lhs = j_from_lambda(cross_ratio(c[0], c[1], c[2], c[3]));
    Complex rhs = j_invariant(resolve_quartic(c));
    if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(rhs))) ++transfer_bad;
  }

  long torsion_bad = 0;
  for (int t = 0; t < 1000; ++t) {
    Configuration c = random_configuration(rng, 3);
    Complex s = (c[0] + c[1] + c[2]) / 3.0;
    Complex e0 = c[0] - s, e1 = c[1] - s, e2 = c[2] - s;
    Complex p = e0 * e1 + e0 * e2 + e1 * e2;
    Complex q = -e0 * e1 * e2;
    Configuration torsion = psi_k(c, 3);
    for (Complex x : torsion.points()) {
      Complex xd = x - s;
      if (std::abs(duplication_x(xd, p, q) - xd) > 1e-8 * std::max(1.0, std::abs(xd))) {
        ++torsion_bad;
      }
    }
  }

  std::vector<Complex> shapes;
  for (int t = 0; t < 100; ++t) {
    Configuration c = random_configuration(rng, 3);
    shapes.push_back(shape_invariant(resolve_quartic(psi_k(c, 3))));
  }
  Complex mean{0.0, 0.0};
  for (Complex sgl : shapes) mean += sgl;
  mean /= static_cast<double>(shapes.size());
  double spread = 0.0;
  for (Complex sgl : shapes) spread = std::max(spread, std::abs(sgl - mean));
  bool shape_ok = spread / std::max(1.0, std::abs(mean)) < 1e-6;

  r.passed = j_ok && transfer_bad == 0 && torsion_bad == 0 && shape_ok;
  std::ostringstream os;
  os << "j(0,1,2)=1728: " << (j_ok ? "yes" : "no") << "; cross-ratio transfer failures: "
     << transfer_bad << "/1000; duplication residual failures: " << torsion_bad
     << "; composite shape spread: " << spread;
  r.details = os.str();
  r.elapsed_ms = ms_since(start);
  return r;
}

CriterionResult criterion_8(const AcceptanceOptions& options) {
  CriterionResult r{8, "extracted monodromy matches the induced homomorphisms", false, "", 0.0};
  auto start = Clock::now();
  const int steps = options.monodromy_steps;

  ConfigurationMap r_map = [](const Configuration& c) { return resolve_quartic(c); };
  ConfigurationMap psi3_map = [](const Configuration& c) { return psi_k(c, 3); };
  ConfigurationMap composite = [&](const Configuration& c) { return psi_k(resolve_quartic(c), 3); };

  std::vector<BraidWord> expected_r = {BraidWord(3, {1}), BraidWord(3, {2}), BraidWord(3, {1})};
  std::vector<BraidWord> expected_psi = {BraidWord(4, {1, 2}), BraidWord(4, {3, 2})};

  auto t0 = Clock::now();
  InducedHom hom_r = induced_hom(r_map, 4, 3, steps, expected_r);
  double r_ms = ms_since(t0);

  t0 = Clock::now();
  InducedHom hom_psi = induced_hom(psi3_map, 3, 4, steps, expected_psi);
  double psi_ms = ms_since(t0);

  t0 = Clock::now();
  InducedHom hom_comp = induced_hom(composite, 4, 4, steps);
  double comp_ms = ms_since(t0);

  // relations re-verified through the Artin oracle, independently of the
  // normal forms used inside check_homomorphism
  auto oracle_relations = [](const std::vector<BraidWord>& images) {
    for (std::size_t i = 0; i + 1 < images.size(); ++i) {
      const BraidWord& e1 = images[i];
      const BraidWord& e2 = images[i + 1];
      if (!artin_equal(e1 * e2 * e1, e2 * e1 * e2)) return false;
    }
    for (std::size_t i = 0; i + 2 < images.size(); ++i) {
      for (std::size_t j = i + 2; j < images.size(); ++j) {
        if (!artin_equal(images[i] * images[j], images[j] * images[i])) return false;
      }
    }
    return true;
  };

  bool r_ok = hom_r.relations_ok && oracle_relations(hom_r.images) && hom_r.conjugator.has_value();
  bool psi_ok =
      hom_psi.relations_ok && oracle_relations(hom_psi.images) && hom_psi.conjugator.has_value();

  // functoriality: the composite extraction equals the R-images pushed
  // through the psi_3 images, up to one common conjugation
  bool comp_ok = hom_comp.relations_ok && oracle_relations(hom_comp.images);
  if (comp_ok && r_ok && psi_ok) {
    std::vector<BraidWord> predicted;
    for (const BraidWord& ri : hom_r.images) predicted.push_back(map_through(ri, hom_psi.images));
    comp_ok = find_conjugator(hom_comp.images, predicted, 8).has_value();
  }

  bool time_ok = r_ms < 30000.0 && psi_ms < 30000.0 && comp_ms < 30000.0;
  r.passed = r_ok && psi_ok && comp_ok && time_ok;
  auto conj_str = [](const std::optional<BraidWord>& h) {
    if (!h) return std::string("none");
    return h->empty() ? std::string("identity") : "[" + h->str() + "]";
  };
  std::ostringstream os;
  os << "R extraction " << (r_ok ? "ok" : "FAILED") << " (" << r_ms << " ms, conjugator "
     << conj_str(hom_r.conjugator) << "); psi_3 extraction " << (psi_ok ? "ok" : "FAILED") << " ("
     << psi_ms << " ms, conjugator " << conj_str(hom_psi.conjugator) << "); functoriality "
     << (comp_ok ? "ok" : "FAILED") << " (" << comp_ms << " ms)";
  r.details = os.str();
  r.elapsed_ms = ms_since(start);
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  switch (id) {
    case 1: return criterion_1(options);
    case 2: return criterion_2(options);
    case 3: return criterion_3(options);
    case 4: return criterion_4(options);
    case 5: return criterion_5(options);
    case 6: return criterion_6(options);
    case 7: return criterion_7(options);
    case 8: return criterion_8(options);
    default:
      throw std::invalid_argument("run_criterion: id must be 1..8");
  }
}

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options,
    const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 8; ++id) {
    out.push_back(run_criterion(id, options));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace braidconf
