#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "braidconf/braid_word.hpp"

namespace braidconf {

using BigInt = boost::multiprecision::cpp_int;

/// A 2x2 integer matrix of determinant 1, with arbitrary-precision entries.
/// Compared exactly (SL_2 Z) or up to sign via psl_equal (PSL_2 Z).
class UnimodularMatrix {
 public:
  UnimodularMatrix() : a_(1), b_(0), c_(0), d_(1) {}
  UnimodularMatrix(BigInt a, BigInt b, BigInt c, BigInt d);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  UnimodularMatrix operator*(const UnimodularMatrix& other) const;
  UnimodularMatrix inverse() const;
  UnimodularMatrix negated() const;
  UnimodularMatrix pow(long n) const;
  BigInt trace() const { return a_ + d_; }

  bool operator==(const UnimodularMatrix& other) const {
    return a_ == other.a_ && b_ == other.b_ && c_ == other.c_ && d_ == other.d_;
  }
  bool operator!=(const UnimodularMatrix& other) const { return !(*this == other); }

  std::string str() const;

 private:
  BigInt a_, b_, c_, d_;
};

/// Equality in PSL_2 Z: M == N or M == -N.
bool psl_equal(const UnimodularMatrix& m, const UnimodularMatrix& n);

enum class TraceClass { Identity, Elliptic, Parabolic, Hyperbolic };

/// Isometry type from the trace: |tr| < 2 elliptic, = 2 parabolic (when not
/// +-I), > 2 hyperbolic.
TraceClass trace_class(const UnimodularMatrix& m);
std::string to_string(TraceClass t);

/// The normal form of an element of PSL_2 Z = <a | a^3> * <b | b^2>, stored
/// as the alternating syllable sequence (no two consecutive a-type syllables,
/// no two consecutive b).  a and b are the images of alpha = s1 s2 and
/// beta = s1 s2 s1; as matrices a = [[0,1],[-1,1]] and b = [[0,1],[-1,0]].
class ModularWord {
 public:
  enum class Syllable : unsigned char { A = 1, A2 = 2, B = 3 };

  ModularWord() = default;
  static ModularWord a_power(int exponent);  // a^exponent, reduced mod 3
  static ModularWord b();
  static ModularWord parse(std::string_view text);  // over 'a', 'A', 'b'

  bool is_identity() const { return syllables_.empty(); }
  std::size_t size() const { return syllables_.size(); }
  std::span<const Syllable> syllables() const& { return syllables_; }
  std::span<const Syllable> syllables() const&& = delete;  // spans must not outlive temporaries

  ModularWord operator*(const ModularWord& other) const;
  ModularWord& operator*=(const ModularWord& other);
  ModularWord inverse() const;
  ModularWord pow(long n) const;

  UnimodularMatrix evaluate() const;

  bool operator==(const ModularWord& other) const { return syllables_ == other.syllables_; }
  bool operator!=(const ModularWord& other) const { return !(*this == other); }
  bool operator<(const ModularWord& other) const { return syllables_ < other.syllables_; }

  /// Signed a-count modulo considerations live with the caller; this is the
  /// image in the abelianization Z/6 (a -> 2, b -> 3).
  int abelianized_mod6() const;

  std::string str() const;

 private:
  void push(Syllable s);
  std::vector<Syllable> syllables_;
};

/// Generator matrices.
const UnimodularMatrix& mat_a();  // [[0,1],[-1,1]]
const UnimodularMatrix& mat_b();  // [[0,1],[-1,0]]
const UnimodularMatrix& mat_t();  // [[1,1],[0,1]], the image of sigma_1
const UnimodularMatrix& mat_u();  // [[1,0],[-1,1]], the image of sigma_2

/// The unique alternating word evaluating to M up to sign.  Euclidean
/// reduction peels T^k S factors off M; the free-product reduction of any
/// such decomposition is the same alternating word, so correctness is pinned
/// by the round trip evaluate(normal_form(M)) == +-M.
ModularWord normal_form(const UnimodularMatrix& m);

class NotParabolicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
/// Signals the cyclic case: commuting parabolic images.
class CommutingPairError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class BraidRelationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Result of normalizing a non-commuting parabolic pair satisfying the braid
/// relation: conjugator g and an inversion flag such that conjugating the
/// pair by g (after inverting both matrices when inverted is set) yields
/// exactly ([[1,1],[0,1]], [[1,0],[-1,1]]) up to sign.
struct ParabolicNormalization {
  UnimodularMatrix conjugator;
  bool inverted = false;
};

ParabolicNormalization normalize_parabolic_pair(const UnimodularMatrix& p,
                                                const UnimodularMatrix& q);

/// A non-cyclic endomorphism of PSL_2 Z: a -> g a^{+-1} g^{-1}, b -> h b h^{-1}.
struct PslEndomorphism {
  UnimodularMatrix image_a;
  UnimodularMatrix image_b;
  UnimodularMatrix apply(const ModularWord& w) const;
};

PslEndomorphism endo_psl2z(const UnimodularMatrix& g, const UnimodularMatrix& h, int eps);

/// Whether g2 lies in the double coset <b> g <a>, decided by the finite
/// check i in {0,1}, j in {0,1,2} up to sign.
bool double_coset_eq_psl(const UnimodularMatrix& g, const UnimodularMatrix& g2);

/// The lift B_3 ->> SL_2 Z with sigma_1 -> [[1,1],[0,1]], sigma_2 -> [[1,0],[-1,1]].
UnimodularMatrix h_star(const BraidWord& w);

}  // namespace braidconf
