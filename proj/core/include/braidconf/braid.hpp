#pragma once

#include <span>
#include <vector>

#include "braidconf/braid_word.hpp"
#include "braidconf/modgroup.hpp"
#include "braidconf/words.hpp"

namespace braidconf {

/// The faithful action of B_n on the free group F_n, used as the exact
/// word-problem oracle.  The convention is fixed once:
///   sigma_i: x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i,
/// and a word acts by composing letter actions left to right, so the images
/// of the n free generators under w determine w uniquely.
std::vector<ReducedWord> artin_action(const BraidWord& w);

/// Ground-truth equality via the Artin action.
bool artin_equal(const BraidWord& u, const BraidWord& v);

/// Complete invariant for B_3: the PSL_2 Z normal form of the image plus the
/// exponent sum (the kernel of the projection is <z_3>, of exponent sum 6).
struct B3NormalForm {
  ModularWord psl_part;
  long exponent_sum = 0;

  bool is_identity() const { return psl_part.is_identity() && exponent_sum == 0; }
  bool operator==(const B3NormalForm& o) const {
    return exponent_sum == o.exponent_sum && psl_part == o.psl_part;
  }
  bool operator!=(const B3NormalForm& o) const { return !(*this == o); }
  B3NormalForm operator*(const B3NormalForm& o) const {
    return {psl_part * o.psl_part, exponent_sum + o.exponent_sum};
  }
  B3NormalForm inverse() const { return {psl_part.inverse(), -exponent_sum}; }
};

B3NormalForm b3_normal_form(const BraidWord& w);

/// A braid word in B_3 mapping to the given normal form.
BraidWord b3_lift(const B3NormalForm& nf);

/// The automorphism of ker(R_*) = F_2<x, y> given by conjugation with a
/// 3-strand braid inside B_4: act(u) = s(b) u s(b)^{-1}.  Generator images
/// follow the conjugation table of the Gassner splitting, translated into
/// this left-conjugation convention:
///   sigma_1: x -> x,      y -> y x
///   sigma_2: x -> x y^-1, y -> y
struct F2Action {
  ReducedWord image_x{2, {1}};
  ReducedWord image_y{2, {2}};

  ReducedWord apply(const ReducedWord& u) const;
  /// act_{b * b'} = act_b o act_{b'}
  F2Action compose(const F2Action& inner) const;
  static F2Action of_generator(int letter);       // +-1 or +-2
  static F2Action of_braid(const BraidWord& b3);  // 3-strand word
  static F2Action of_normal_form(const B3NormalForm& nf);
};

/// Complete invariant for B_4 via the split exact sequence
/// 1 -> F_2 -> B_4 -> B_3 -> 1: the unique decomposition w = u * s(R_*(w)).
struct B4NormalForm {
  ReducedWord kernel_part{2};
  B3NormalForm b3_part;

  bool operator==(const B4NormalForm& o) const {
    return kernel_part == o.kernel_part && b3_part == o.b3_part;
  }
  bool operator!=(const B4NormalForm& o) const { return !(*this == o); }
  /// Semidirect product law: (u1, b1)(u2, b2) = (u1 * act_{b1}(u2), b1 b2).
  B4NormalForm operator*(const B4NormalForm& o) const;
};

B4NormalForm gassner_split(const BraidWord& w);

/// Rewrites a word in the kernel generators through x = sigma_1^{-1} sigma_3
/// and y = x^{-1} sigma_2^{-1} x sigma_2.
BraidWord f2_to_b4(const ReducedWord& u);

/// Recombination u * s(b); gassner_split of the result round-trips.
BraidWord b4_recombine(const B4NormalForm& nf);

/// Exact equality in B_n.  Uses the exponent sum for n = 2 and the complete
/// normal forms for n = 3, 4; larger n falls back to the Artin oracle.
bool braid_eq(const BraidWord& u, const BraidWord& v);

/// R_*: B_4 ->> B_3, sigma_1, sigma_3 -> sigma_1 and sigma_2 -> sigma_2.
BraidWord r_star(const BraidWord& w);

/// Psi_3*: B_3 -> B_4, sigma_1 -> sigma_1 sigma_2, sigma_2 -> sigma_3 sigma_2.
BraidWord psi3_star(const BraidWord& w);

struct HomomorphismCheck {
  bool is_homomorphism = false;
  /// Some adjacent images commute, which forces a cyclic image.
  bool cyclic_flag = false;
};

/// Verifies the braid and commutation relations on generator images in B_m.
/// Targets with m > 4 need the oracle fallback enabled.
HomomorphismCheck check_homomorphism(std::span<const BraidWord> images, bool allow_oracle = true);

/// Same check for matrix images; equality is taken in PSL_2 Z.
HomomorphismCheck check_homomorphism_psl(std::span<const UnimodularMatrix> images);

class NonCentralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Multiplies every generator image by the same central power; the result is
/// a homomorphism iff the input was.  Throws NonCentralError unless `central`
/// commutes with every generator of the target.
std::vector<BraidWord> transvect(std::span<const BraidWord> images, const BraidWord& central,
                                 long power = 1);

/// Whether g2 lies in <beta> g <alpha> in B_3, decided exactly through the
/// PSL_2 Z double coset plus the exponent-sum congruence mod 6.
bool double_coset_eq_b3(const BraidWord& g, const BraidWord& g2);

/// The endomorphism of B_3 with alpha -> g alpha g^{-1}, beta -> beta,
/// returned as images of sigma_1 and sigma_2 (change of basis
/// sigma_1 = alpha^{-1} beta, sigma_2 = beta^{-1} alpha^2).
std::vector<BraidWord> rho_g(const BraidWord& g);

/// The inversion automorphism sigma_i -> sigma_i^{-1}.
BraidWord invert_generators(const BraidWord& w);
std::vector<BraidWord> invert_generators(std::span<const BraidWord> images);

/// Pushes w through the homomorphism sending sigma_i to images[i-1].
BraidWord map_through(const BraidWord& w, std::span<const BraidWord> images);

}  // namespace braidconf
