#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "braidconf/words.hpp"

namespace braidconf {

/// Thrown when an operation requires w outside the cyclic subgroup <c>.
class CentralPowerError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The commutator c = [x,y] = x y x^{-1} y^{-1}, fixed by f.
const ReducedWord& f2_commutator();

/// c^n as a reduced word.
ReducedWord c_power(long n);

/// The automorphism f of F_2 with f(x) = xy, f(y) = x^{-1}.  Requires rank 2.
ReducedWord apply_f(const ReducedWord& w);

/// The inverse automorphism: x -> y^{-1}, y -> yx.
ReducedWord apply_f_inverse(const ReducedWord& w);

/// f^n(w).  Uses f^6(w) = c w c^{-1} to stay linear in |n|.
ReducedWord f_power(const ReducedWord& w, long n);

/// (f^n(w)) for n in [lo, hi].
std::vector<ReducedWord> f_orbit_window(const ReducedWord& w, int lo, int hi);

/// True iff apply_f(w) == w.
bool is_fixed_by_f(const ReducedWord& w);

/// Membership in <c>.  O(length): the only candidate exponent is
/// +-length/4, with the sign read off the first letter.
bool is_c_power(const ReducedWord& w);

/// w = c^L m c^{-R} with L, R maximal in absolute value and no cancellation
/// across the three factors.  Defined for w outside <c>.
struct CDecomposition {
  long left = 0;
  long right = 0;
  ReducedWord core;
};

/// Throws CentralPowerError when w lies in <c> (identity included).
CDecomposition c_decompose(const ReducedWord& w);

/// L(w) and R(w) without materializing the core.  Same precondition.
long c_left(const ReducedWord& w);
long c_right(const ReducedWord& w);

/// Maximal signed run of generator run_gen at the boundary of w, together
/// with the letter just past the run (0 when the run exhausts the word).
/// A "signed run" of y is y^n with n possibly negative.
struct RunAndNext {
  long run = 0;
  Letter next = 0;
};
RunAndNext leading_run(const ReducedWord& w, int run_gen);
RunAndNext trailing_run(const ReducedWord& w, int run_gen);

struct SolveOptions {
  bool prune = true;      ///< skip candidates whose image lengths cannot balance
  unsigned threads = 0;   ///< 0 = hardware concurrency
};

/// All w with length <= max_len satisfying f^{6k+1}(w) f^{-6k-1}(w) = w,
/// by exhaustive enumeration.  Sorted length-lexicographically; always
/// contains the identity.  The result is independent of thread count.
std::vector<ReducedWord> solve_equation(int k, int max_len, const SolveOptions& options = {});

/// Exhaustively certified check that every word in `solutions` lies in the
/// f-orbit of x.  The orbit window is widened until the image lengths
/// provably exceed max_len on both ends.
bool all_in_f_orbit_of_x(const std::vector<ReducedWord>& solutions, int max_len);

/// The f-orbit elements of x with length <= max_len, sorted.
std::vector<ReducedWord> f_orbit_of_x_up_to(int max_len);

}  // namespace braidconf
