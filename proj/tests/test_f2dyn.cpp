#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "braidconf/f2dyn.hpp"
#include "braidconf/sampling.hpp"

using namespace braidconf;

namespace {

ReducedWord W(const char* text) { return parse_word(text); }

// Independent route: the defining substitution, with no power shortcuts.
ReducedWord f_by_substitution(const ReducedWord& w) {
  static const std::vector<ReducedWord> images = {W("xy"), W("X")};
  return substitute(w, images);
}
ReducedWord finv_by_substitution(const ReducedWord& w) {
  static const std::vector<ReducedWord> images = {W("Y"), W("yx")};
  return substitute(w, images);
}

// Brute-force solver used as the oracle for solve_equation: plain
// enumeration plus the substitution route, no pruning, no conjugation trick.
std::vector<ReducedWord> solve_brute(int k, int max_len) {
  std::vector<ReducedWord> out;
  ReducedWordEnumerator en(2, max_len);
  while (auto w = en.next()) {
    ReducedWord lhs = *w;
    for (int i = 0; i < 6 * k + 1; ++i) lhs = f_by_substitution(lhs);
    for (int i = 0; i > 6 * k + 1; --i) lhs = finv_by_substitution(lhs);
    ReducedWord rhs = *w;
    for (int i = 0; i < -6 * k - 1; ++i) rhs = f_by_substitution(rhs);
    for (int i = 0; i > -6 * k - 1; --i) rhs = finv_by_substitution(rhs);
    if (concat(lhs, rhs) == *w) out.push_back(*w);
  }
  return out;
}

}  // namespace

TEST_CASE("apply_f matches the defining substitution") {
  CHECK(apply_f(W("x")) == W("xy"));
  CHECK(apply_f(W("y")) == W("X"));
  CHECK(apply_f(f2_commutator()) == f2_commutator());
  CHECK(apply_f_inverse(W("x")) == W("Y"));
  CHECK_THROWS_AS(apply_f(ReducedWord(3)), std::invalid_argument);
  Rng rng(17);
  for (int i = 0; i < 5000; ++i) {
    ReducedWord w = random_reduced_word(rng, 2, i % 30);
    CHECK(apply_f(w) == f_by_substitution(w));
    CHECK(apply_f_inverse(w) == finv_by_substitution(w));
    CHECK(apply_f(apply_f_inverse(w)) == w);
  }
}

TEST_CASE("f_power uses the f^6 conjugation and agrees with iteration") {
  ReducedWord x = W("x");
  CHECK(f_power(x, -1) == W("Y"));
  CHECK(f_power(x, 0) == x);
  Rng rng(19);
  long bad = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    ReducedWord w = random_reduced_word(rng, 2, trial % 14);
    // f^6(w) = c w c^{-1}
    if (f_power(w, 6) != conjugate(f2_commutator(), w)) ++bad;
    ReducedWord fwd = w, bwd = w;
    for (int n = 1; n <= 24; ++n) {
      fwd = apply_f(fwd);
      bwd = apply_f_inverse(bwd);
      if (f_power(w, n) != fwd) ++bad;
      if (f_power(w, -n) != bwd) ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("c powers and membership") {
  CHECK(is_c_power(ReducedWord(2)));
  CHECK(is_c_power(W("xyXY")));
  CHECK(is_c_power(c_power(-3)));
  CHECK_FALSE(is_c_power(W("x")));
  CHECK_FALSE(is_c_power(W("xyXx")));  // length 4 but not c
  CHECK(c_power(2) == concat(f2_commutator(), f2_commutator()));
  CHECK(c_power(-1) == invert(f2_commutator()));
}

TEST_CASE("c_decompose strips maximal central powers") {
  SUBCASE("no central part") {
    CDecomposition d = c_decompose(W("x"));
    CHECK(d.left == 0);
    CHECK(d.right == 0);
    CHECK(d.core == W("x"));
  }
  SUBCASE("conjugate of x by c") {
    ReducedWord w = conjugate(f2_commutator(), W("x"));
    CDecomposition d = c_decompose(w);
    CHECK(d.left == 1);
    CHECK(d.right == 1);
    CHECK(d.core == W("x"));
  }
  SUBCASE("central powers are rejected") {
    CHECK_THROWS_AS(c_decompose(c_power(2)), CentralPowerError);
    CHECK_THROWS_AS(c_decompose(ReducedWord(2)), CentralPowerError);
  }
  SUBCASE("negative exponents") {
    ReducedWord w = concat(c_power(-2), concat(W("yy"), c_power(-1).inverse()));
    CDecomposition d = c_decompose(w);
    CHECK(d.left == -2);
    CHECK(d.right == -1);
    CHECK(d.core == W("yy"));
  }
  SUBCASE("reassembly and maximality on random words") {
    Rng rng(23);
    for (int i = 0; i < 5000; ++i) {
      ReducedWord w = random_reduced_word(rng, 2, 1 + i % 24);
      if (is_c_power(w)) continue;
      CDecomposition d = c_decompose(w);
      ReducedWord back = concat(c_power(d.left), concat(d.core, c_power(-d.right)));
      CHECK(back == w);
      CHECK(back.length() == 4 * std::abs(d.left) + d.core.length() + 4 * std::abs(d.right));
      CHECK(c_left(w) == d.left);
      CHECK(c_right(w) == d.right);
    }
  }
}

TEST_CASE("fixed points of f are exactly the powers of c") {
  CHECK(is_fixed_by_f(c_power(5)));
  CHECK(is_fixed_by_f(ReducedWord(2)));
  CHECK_FALSE(is_fixed_by_f(W("x")));
  // exhaustive window, length <= 8
  ReducedWordEnumerator en(2, 8);
  int fixed = 0;
  while (en.advance()) {
    ReducedWord w(2, en.current());
    if (is_fixed_by_f(w)) {
      ++fixed;
      CHECK(is_c_power(w));
    }
  }
  CHECK(fixed == 5);  // c^0, c^{+-1}, c^{+-2}
}

TEST_CASE("f orbit windows") {
  auto orbit = f_orbit_window(W("x"), 0, 1);
  REQUIRE(orbit.size() == 2);
  CHECK(orbit[0] == W("x"));
  CHECK(orbit[1] == W("xy"));
  auto back = f_orbit_window(W("x"), -1, -1);
  REQUIRE(back.size() == 1);
  CHECK(back[0] == W("Y"));
  auto central = f_orbit_window(f2_commutator(), -3, 3);
  CHECK(central.size() == 7);
  for (const auto& w : central) CHECK(w == f2_commutator());
}

TEST_CASE("solve_equation k=0 max_len=6 returns identity plus the x-orbit") {
  auto sols = solve_equation(0, 6);
  REQUIRE(sols.size() == 11);
  CHECK(sols[0].is_identity());

  std::set<ReducedWord> expected;
  expected.insert(ReducedWord(2));
  for (const ReducedWord& w : f_orbit_of_x_up_to(6)) expected.insert(w);
  CHECK(expected.size() == 11);
  CHECK(std::set<ReducedWord>(sols.begin(), sols.end()) == expected);

  // named members from the orbit
  CHECK(expected.count(W("x")) == 1);
  CHECK(expected.count(W("xy")) == 1);
  CHECK(expected.count(W("xyX")) == 1);
  CHECK(expected.count(W("Y")) == 1);
  CHECK(expected.count(W("XY")) == 1);
  CHECK(expected.count(W("yXY")) == 1);
  CHECK(expected.count(f_power(W("x"), 3)) == 1);
  CHECK(expected.count(f_power(W("x"), 4)) == 1);
  CHECK(expected.count(f_power(W("x"), -4)) == 1);
  CHECK(expected.count(f_power(W("x"), -5)) == 1);
}

TEST_CASE("solve_equation agrees with the brute-force oracle") {
  for (int k : {0, 1, -1}) {
    int max_len = k == 0 ? 7 : 6;
    auto fast = solve_equation(k, max_len);
    auto brute = solve_brute(k, max_len);
    std::sort(brute.begin(), brute.end());
    CHECK(fast == brute);

    SolveOptions unpruned;
    unpruned.prune = false;
    CHECK(solve_equation(k, max_len, unpruned) == fast);

    SolveOptions two_threads;
    two_threads.threads = 2;
    CHECK(solve_equation(k, max_len, two_threads) == fast);
  }
}

TEST_CASE("solve_equation k!=0 finds only the identity") {
  for (int k : {1, -1, 2}) {
    auto sols = solve_equation(k, 6);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].is_identity());
  }
  auto trivial = solve_equation(0, 0);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].is_identity());
}

TEST_CASE("solutions re-verify through the plain substitution route") {
  auto sols = solve_equation(0, 8);
  CHECK(all_in_f_orbit_of_x(sols, 8));
  for (const ReducedWord& w : sols) {
    CHECK(concat(f_by_substitution(w), finv_by_substitution(w)) == w);
  }
}

TEST_CASE("leading and trailing runs") {
  RunAndNext r = leading_run(W("yyx"), 1);
  CHECK(r.run == 2);
  CHECK(r.next == make_letter(0, +1));
  r = leading_run(W("x"), 1);
  CHECK(r.run == 0);
  CHECK(r.next == make_letter(0, +1));
  r = leading_run(W("YYY"), 1);
  CHECK(r.run == -3);
  CHECK(r.next == 0);
  r = trailing_run(W("xYY"), 1);
  CHECK(r.run == -2);
  CHECK(r.next == make_letter(0, +1));
  r = trailing_run(ReducedWord(2), 1);
  CHECK(r.run == 0);
  CHECK(r.next == 0);
}

TEST_CASE("solver is schedule-independent at scale") {
  SolveOptions one;
  one.threads = 1;
  SolveOptions three;
  three.threads = 3;
  CHECK(solve_equation(0, 10, one) == solve_equation(0, 10, three));
  CHECK(solve_equation(-1, 9, one) == solve_equation(-1, 9, three));
}
