#include "braidconf/confmaps.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace braidconf {

namespace {

double min_pairwise_distance(const std::vector<Complex>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::min(best, std::abs(pts[i] - pts[j]));
    }
  }
  return pts.size() < 2 ? std::numeric_limits<double>::infinity() : best;
}

double magnitude_scale(const std::vector<Complex>& pts) {
  double m = 1.0;
  for (Complex z : pts) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

Configuration::Configuration(std::vector<Complex> points) : points_(std::move(points)) {
  if (points_.empty()) throw ConfigurationError("Configuration: need at least one point");
  separation_ = min_pairwise_distance(points_);
  if (!(separation_ > 0.0)) {
    throw ConfigurationError("Configuration: points must be pairwise distinct");
  }
}

Configuration apply(const AffineMap& map, const Configuration& c) {
  if (map.scale == Complex{0.0, 0.0}) throw std::invalid_argument("AffineMap: scale must be nonzero");
  std::vector<Complex> out;
  out.reserve(c.size());
  for (Complex z : c.points()) out.push_back(map(z));
  return Configuration(std::move(out));
}

ConfigurationMap affine_twist(ConfigurationMap f, AffineFamily a) {
  return [f = std::move(f), a = std::move(a)](const Configuration& c) {
    return apply(a(c), f(c));
  };
}

ConfigurationMap identity_map() {
  return [](const Configuration& c) { return c; };
}

ConfigurationMap discriminant_twisted_identity() {
  return affine_twist(identity_map(),
                      [](const Configuration& c) { return AffineMap{discriminant(c), 0.0}; });
}

Complex discriminant(const Configuration& c) {
  Complex prod{1.0, 0.0};
  const auto& pts = c.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i != j) prod *= pts[i] - pts[j];
    }
  }
  return prod;
}

Configuration resolve_quartic(const Configuration& c) {
  if (c.size() != 4) throw std::invalid_argument("resolve_quartic: expected 4 points");
  const auto& x = c.points();
  std::vector<Complex> out = {x[0] * x[3] + x[1] * x[2], x[0] * x[2] + x[1] * x[3],
                              x[0] * x[1] + x[2] * x[3]};
  double tol = 1e-12 * magnitude_scale(out);
  if (min_pairwise_distance(out) <= tol) {
    throw OutputCollisionError("resolve_quartic: output points collide");
  }
  return Configuration(std::move(out));
}

Complex cross_ratio(Complex x1, Complex x2, Complex x3, Complex x4) {
  Complex den = (x3 - x4) * (x2 - x1);
  if (den == Complex{0.0, 0.0}) throw std::invalid_argument("cross_ratio: coincident points");
  return ((x3 - x1) * (x2 - x4)) / den;
}

Complex cross_ratio_with_infinity(Complex x1, Complex x2, Complex x3) {
  Complex den = x2 - x1;
  if (den == Complex{0.0, 0.0}) throw std::invalid_argument("cross_ratio: coincident points");
  return (x3 - x1) / den;
}

Complex j_from_lambda(Complex lambda) {
  Complex num = lambda * lambda - lambda + Complex{1.0, 0.0};
  Complex den = lambda * lambda * (lambda - Complex{1.0, 0.0}) * (lambda - Complex{1.0, 0.0});
  return 256.0 * num * num * num / den;
}

Complex j_invariant(const Configuration& c) {
  if (c.size() != 3) throw std::invalid_argument("j_invariant: expected 3 points");
  return j_from_lambda(cross_ratio_with_infinity(c[0], c[1], c[2]));
}

Complex shape_invariant(const Configuration& c) { return j_invariant(c); }

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_ = {Complex{0.0, 0.0}};
  trim();
}

void ComplexPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == Complex{0.0, 0.0}) coeffs_.pop_back();
}

bool ComplexPolynomial::is_monic() const { return leading() == Complex{1.0, 0.0}; }

Complex ComplexPolynomial::evaluate(Complex z) const {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return ComplexPolynomial();
  std::vector<Complex> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * double(i);
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial ComplexPolynomial::monic() const {
  Complex lead = leading();
  if (lead == Complex{0.0, 0.0}) throw std::invalid_argument("monic: zero polynomial");
  return scaled(Complex{1.0, 0.0} / lead);
}

ComplexPolynomial ComplexPolynomial::operator+(const ComplexPolynomial& o) const {
  std::vector<Complex> out(std::max(coeffs_.size(), o.coeffs_.size()), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial ComplexPolynomial::operator-(const ComplexPolynomial& o) const {
  return *this + o.scaled(Complex{-1.0, 0.0});
}

ComplexPolynomial ComplexPolynomial::operator*(const ComplexPolynomial& o) const {
  std::vector<Complex> out(coeffs_.size() + o.coeffs_.size() - 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial ComplexPolynomial::scaled(Complex factor) const {
  std::vector<Complex> out = coeffs_;
  for (Complex& c : out) c *= factor;
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const Complex> roots) {
  ComplexPolynomial out(std::vector<Complex>{Complex{1.0, 0.0}});
  for (Complex r : roots) {
    out = out * ComplexPolynomial(std::vector<Complex>{-r, Complex{1.0, 0.0}});
  }
  return out;
}

std::vector<Complex> poly_roots(const ComplexPolynomial& p) {
  const int deg = p.degree();
  if (deg < 1 || p.leading() == Complex{0.0, 0.0}) {
    throw std::invalid_argument("poly_roots: degree must be >= 1 with nonzero leading coefficient");
  }
  ComplexPolynomial m = p.monic();
  const auto& c = m.coefficients();

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[static_cast<std::size_t>(i)];

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw RootConvergenceError("poly_roots: eigensolver failed");

  ComplexPolynomial deriv = m.derivative();
  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(deg));
  for (int i = 0; i < deg; ++i) {
    Complex r = solver.eigenvalues()(i);
    Complex d = deriv.evaluate(r);
    if (d != Complex{0.0, 0.0}) {
      Complex step = m.evaluate(r) / d;
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) r -= step;
    }
    roots.push_back(r);
  }

  // residual gate, relative to the coefficient scale at each root
  double worst = 0.0;
  for (Complex r : roots) {
    double scale = 0.0;
    double zpow = 1.0;
    double az = std::abs(r);
    for (const Complex& ci : c) {
      scale += std::abs(ci) * zpow;
      zpow *= az;
    }
    worst = std::max(worst, std::abs(m.evaluate(r)) / std::max(scale, 1.0));
  }
  if (worst > 1e-12) {
    throw RootConvergenceError("poly_roots: residual " + std::to_string(worst) +
                               " above relative tolerance 1e-12");
  }
  return roots;
}

ComplexPolynomial torsion_polynomial(Complex p, Complex q, int k) {
  const Complex zero{0.0, 0.0};
  switch (k) {
    case 3:
      // psi_3 = 3x^4 + 6p x^2 + 12q x - p^2
      return ComplexPolynomial({-p * p, 12.0 * q, 6.0 * p, zero, Complex{3.0, 0.0}});
    case 4:
      // psi_4 / (4y * psi_2-part): x^6 + 5p x^4 + 20q x^3 - 5p^2 x^2 - 4pq x - 8q^2 - p^3
      return ComplexPolynomial({-8.0 * q * q - p * p * p, -4.0 * p * q, -5.0 * p * p, 20.0 * q,
                                5.0 * p, zero, Complex{1.0, 0.0}});
    case 5: {
      // psi_5 = psi_4 psi_2^3 - psi_3^3 = 32 (x^3 + px + q)^2 g_4 - psi_3^3
      ComplexPolynomial cubic({q, p, zero, Complex{1.0, 0.0}});
      ComplexPolynomial g4 = torsion_polynomial(p, q, 4);
      ComplexPolynomial psi3 = torsion_polynomial(p, q, 3);
      return (cubic * cubic * g4).scaled(Complex{32.0, 0.0}) - psi3 * psi3 * psi3;
    }
    default:
      throw std::invalid_argument("torsion_polynomial: k must be in 3..5");
  }
}

Complex duplication_x(Complex x, Complex p, Complex q) {
  Complex num = (x * x - p) * (x * x - p) - 8.0 * q * x;
  Complex den = 4.0 * (x * x * x + p * x + q);
  return num / den;
}

Configuration psi_k(const Configuration& c, int k) {
  if (c.size() != 3) throw std::invalid_argument("psi_k: expected 3 points");
  if (k < 2 || k > 5) throw std::invalid_argument("psi_k: k must be in 2..5");
  if (k == 2) return c;  // the 2-torsion x-coordinates are the branch points

  // depress the cubic: translate by the centroid
  Complex s = (c[0] + c[1] + c[2]) / 3.0;
  Complex e0 = c[0] - s, e1 = c[1] - s, e2 = c[2] - s;
  Complex p = e0 * e1 + e0 * e2 + e1 * e2;
  Complex q = -e0 * e1 * e2;

  std::vector<Complex> roots = poly_roots(torsion_polynomial(p, q, k));
  for (Complex& r : roots) r += s;

  double tol = 1e-9 * magnitude_scale(roots);
  if (min_pairwise_distance(roots) <= tol) {
    throw OutputCollisionError("psi_k: torsion roots collide beyond tolerance");
  }
  return Configuration(std::move(roots));
}

Configuration root_map(const Configuration& c, int p, int eps) {
  if (p < 1) throw std::invalid_argument("root_map: p must be >= 1");
  if (eps != 0 && eps != 1) throw std::invalid_argument("root_map: eps must be 0 or 1");
  std::vector<Complex> out;
  out.reserve(c.size() * static_cast<std::size_t>(p) + static_cast<std::size_t>(eps));
  for (Complex z : c.points()) {
    if (z == Complex{0.0, 0.0}) throw std::invalid_argument("root_map: input contains zero");
    double r = std::pow(std::abs(z), 1.0 / p);
    double theta = std::arg(z);
    for (int j = 0; j < p; ++j) {
      out.push_back(std::polar(r, (theta + 2.0 * M_PI * j) / p));
    }
  }
  if (eps == 1) out.push_back(Complex{0.0, 0.0});
  return Configuration(std::move(out));
}

Configuration random_configuration(Rng& rng, int n, double min_separation, double box) {
  std::uniform_real_distribution<double> coord(-box, box);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts.emplace_back(coord(rng), coord(rng));
    if (min_pairwise_distance(pts) >= min_separation) return Configuration(std::move(pts));
  }
  throw std::runtime_error("random_configuration: rejection sampling failed");
}

}  // namespace braidconf
