#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "braidconf/sampling.hpp"

namespace braidconf {

using Complex = std::complex<double>;

class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class OutputCollisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class RootConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point of Conf_n C: finitely many pairwise-distinct complex numbers.
/// Stored in the order given, but semantically a set; every operation here
/// is invariant under permutation of points.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<Complex> points);

  std::size_t size() const { return points_.size(); }
  const std::vector<Complex>& points() const& { return points_; }
  // rvalue access moves the storage out, so iterating the points of a
  // temporary never dangles
  std::vector<Complex> points() && { return std::move(points_); }
  Complex operator[](std::size_t i) const { return points_[i]; }
  /// Minimum pairwise distance; positive by the class invariant.
  double separation() const { return separation_; }

 private:
  std::vector<Complex> points_;
  double separation_ = 0.0;
};

/// z -> scale * z + offset with scale != 0.
struct AffineMap {
  Complex scale{1.0, 0.0};
  Complex offset{0.0, 0.0};
  Complex operator()(Complex z) const { return scale * z + offset; }
};

Configuration apply(const AffineMap& map, const Configuration& c);

using ConfigurationMap = std::function<Configuration(const Configuration&)>;
using AffineFamily = std::function<AffineMap(const Configuration&)>;

/// Pointwise twist: c -> A(c) . F(c).
ConfigurationMap affine_twist(ConfigurationMap f, AffineFamily a);
ConfigurationMap identity_map();
/// id^Delta: the affine twist of the identity by the discriminant.
ConfigurationMap discriminant_twisted_identity();

/// Delta(c) = prod_{i != j} (x_i - x_j) over ordered pairs.
Complex discriminant(const Configuration& c);

/// The resolving quartic: {x1 x4 + x2 x3, x1 x3 + x2 x4, x1 x2 + x3 x4}.
/// Well defined as a set map; the three values are distinct for distinct
/// inputs (checked against a small relative tolerance).
Configuration resolve_quartic(const Configuration& c);

/// Cross ratio convention: the image of x3 under the Moebius map sending
/// (x1, x2, x4) to (0, 1, infinity); cross_ratio(0, 1, l, inf) = l.
Complex cross_ratio(Complex x1, Complex x2, Complex x3, Complex x4);
Complex cross_ratio_with_infinity(Complex x1, Complex x2, Complex x3);

/// j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2), the S_3-invariant function of
/// the cross ratio.
Complex j_from_lambda(Complex lambda);

/// j-invariant of the curve y^2 = (x - x1)(x - x2)(x - x3); permutation- and
/// affine-invariant in the three points.
Complex j_invariant(const Configuration& c);

/// Complete invariant of the Aff x S_3 orbit of a 3-point configuration.
Complex shape_invariant(const Configuration& c);

/// x-coordinates of the points of exact order k on
/// y^2 = (x - x1)(x - x2)(x - x3), for k in 2..5.  Psi_2 is the identity;
/// |Psi_3| = 4, |Psi_4| = 6, |Psi_5| = 12.
Configuration psi_k(const Configuration& c, int k);

/// All p-th roots of every point, plus 0 when eps = 1.  No input may be 0.
Configuration root_map(const Configuration& c, int p, int eps);

/// Polynomial with complex coefficients, ascending by degree.
class ComplexPolynomial {
 public:
  ComplexPolynomial() : coeffs_{Complex{0.0, 0.0}} {}
  explicit ComplexPolynomial(std::vector<Complex> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coefficients() const { return coeffs_; }
  Complex leading() const { return coeffs_.back(); }
  bool is_monic() const;

  Complex evaluate(Complex z) const;
  ComplexPolynomial derivative() const;
  ComplexPolynomial monic() const;

  ComplexPolynomial operator+(const ComplexPolynomial& o) const;
  ComplexPolynomial operator-(const ComplexPolynomial& o) const;
  ComplexPolynomial operator*(const ComplexPolynomial& o) const;
  ComplexPolynomial scaled(Complex factor) const;
  static ComplexPolynomial from_roots(std::span<const Complex> roots);

 private:
  void trim();
  std::vector<Complex> coeffs_;  // never empty; leading may be zero only for the zero polynomial
};

/// All roots with multiplicity, via companion-matrix eigenvalues plus one
/// round of Newton polish.  Residuals are checked against a relative 1e-12
/// tolerance; persistent failures raise RootConvergenceError.
std::vector<Complex> poly_roots(const ComplexPolynomial& p);

/// The polynomial whose roots are the x-coordinates of points of exact
/// order k on the depressed curve y^2 = x^3 + px + q, for k in 3..5.
/// For k = 4 the even-torsion factor is removed in exact coefficient
/// arithmetic (the curve cubic divides the full division polynomial).
ComplexPolynomial torsion_polynomial(Complex p, Complex q, int k);

/// x(2P) for a point P = (x, y) on y^2 = x^3 + px + q:
/// ((x^2 - p)^2 - 8 q x) / (4 (x^3 + p x + q)).
Complex duplication_x(Complex x, Complex p, Complex q);

/// Uniform points in the square [-box, box]^2, rejected until the pairwise
/// separation is at least min_separation.
Configuration random_configuration(Rng& rng, int n, double min_separation = 1e-3,
                                   double box = 1.0);

}  // namespace braidconf
