#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "braidconf/confmaps.hpp"

using namespace braidconf;

namespace {

Configuration C(std::initializer_list<Complex> pts) { return Configuration(std::vector<Complex>(pts)); }

bool same_point_set(const Configuration& a, const Configuration& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (Complex z : a.points()) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && std::abs(z - b[j]) <= tol) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("configuration invariants") {
  CHECK_THROWS_AS(C({1.0, 1.0}), ConfigurationError);
  CHECK_THROWS_AS(Configuration(std::vector<Complex>{}), ConfigurationError);
  Configuration c = C({0.0, 3.0, Complex{0.0, 4.0}});
  CHECK(c.separation() == doctest::Approx(3.0));
}

TEST_CASE("discriminant") {
  CHECK(discriminant(C({0.0, 1.0})) == Complex{-1.0, 0.0});
  CHECK(discriminant(C({0.0, 1.0, 2.0})) == Complex{-4.0, 0.0});
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    Configuration c = random_configuration(rng, 4);
    std::vector<Complex> pts = c.points();
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(rel_err(discriminant(Configuration(pts)), discriminant(c)) < 1e-12);
  }
}

TEST_CASE("resolve_quartic") {
  Configuration out = resolve_quartic(C({0.0, 1.0, 2.0, 3.0}));
  CHECK(same_point_set(out, C({2.0, 3.0, 6.0}), 1e-12));

  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    Configuration c = random_configuration(rng, 4);
    Configuration r = resolve_quartic(c);
    CHECK(r.size() == 3);
    CHECK(r.separation() > 1e-9);
    // S_4-permuted input gives the same output set
    std::vector<Complex> pts = c.points();
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(same_point_set(resolve_quartic(Configuration(pts)), r, 1e-10));
  }
}

TEST_CASE("cross ratio") {
  Complex lambda{0.37, 1.21};
  CHECK(std::abs(cross_ratio_with_infinity(0.0, 1.0, lambda) - lambda) < 1e-15);

  // anharmonic six-orbit under slot permutations
  Complex v = cross_ratio(0.0, 1.0, 2.0, 3.0);
  auto orbit_member = [&](Complex w) {
    const Complex one{1.0, 0.0};
    for (Complex cand : {v, one - v, one / v, one / (one - v), v / (v - one), (v - one) / v}) {
      if (std::abs(w - cand) < 1e-12) return true;
    }
    return false;
  };
  Complex pts[4] = {0.0, 1.0, 2.0, 3.0};
  std::sort(pts, pts + 4, [](Complex a, Complex b) { return a.real() < b.real(); });
  int perm[4] = {0, 1, 2, 3};
  do {
    CHECK(orbit_member(cross_ratio(pts[perm[0]], pts[perm[1]], pts[perm[2]], pts[perm[3]])));
  } while (std::next_permutation(perm, perm + 4));

  // invariance under a simultaneous affine map
  AffineMap a{Complex{0.3, -1.7}, Complex{2.0, 0.25}};
  CHECK(std::abs(cross_ratio(a(0.0), a(1.0), a(2.0), a(3.0)) - v) < 1e-12);

  CHECK_THROWS_AS(cross_ratio(0.0, 0.0, 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("j invariant") {
  CHECK(rel_err(j_invariant(C({0.0, 1.0, 2.0})), Complex{1728.0, 0.0}) < 1e-9);
  Complex w = std::polar(1.0, 2.0 * M_PI / 3.0);
  CHECK(std::abs(j_invariant(C({1.0, w, w * w}))) < 1e-9);

  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    Configuration c = random_configuration(rng, 3);
    Complex j = j_invariant(c);
    // permutation invariance
    std::vector<Complex> pts = c.points();
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(rel_err(j_invariant(Configuration(pts)), j) < 1e-9);
    // affine invariance, j(A c) = j(c)
    AffineMap a{Complex{1.3, 0.4} * (1.0 + 0.1 * (i % 7)), Complex{-2.0, 1.0}};
    CHECK(rel_err(j_invariant(apply(a, c)), j) < 1e-9);
  }
}

TEST_CASE("cross-ratio transfer through the resolving quartic") {
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    Configuration c = random_configuration(rng, 4);
    Complex lhs = j_from_lambda(cross_ratio(c[0], c[1], c[2], c[3]));
    Complex rhs = j_invariant(resolve_quartic(c));
    CHECK(std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)) < 1e-9);
  }
}

TEST_CASE("poly_roots") {
  auto close_to = [](const std::vector<Complex>& roots, Complex want) {
    for (Complex r : roots) {
      if (std::abs(r - want) < 1e-10) return true;
    }
    return false;
  };
  // (x-1)(x-2)
  auto r1 = poly_roots(ComplexPolynomial({2.0, -3.0, 1.0}));
  CHECK(close_to(r1, 1.0));
  CHECK(close_to(r1, 2.0));
  // x^3 - x
  auto r2 = poly_roots(ComplexPolynomial({0.0, -1.0, 0.0, 1.0}));
  CHECK(close_to(r2, -1.0));
  CHECK(close_to(r2, 0.0));
  CHECK(close_to(r2, 1.0));
  // 3x^4 - 6x^2 - 1: two real, two imaginary (quadratic in x^2)
  auto r3 = poly_roots(ComplexPolynomial({-1.0, 0.0, -6.0, 0.0, 3.0}));
  double re = std::sqrt(1.0 + 2.0 / std::sqrt(3.0));
  double im = std::sqrt(2.0 / std::sqrt(3.0) - 1.0);
  CHECK(close_to(r3, Complex{re, 0.0}));
  CHECK(close_to(r3, Complex{-re, 0.0}));
  CHECK(close_to(r3, Complex{0.0, im}));
  CHECK(close_to(r3, Complex{0.0, -im}));

  CHECK_THROWS_AS(poly_roots(ComplexPolynomial({1.0})), std::invalid_argument);

  // random monic polynomials from known roots
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    Configuration roots = random_configuration(rng, 2 + static_cast<int>(i % 9));
    auto computed = poly_roots(ComplexPolynomial::from_roots(roots.points()));
    CHECK(same_point_set(Configuration(computed), roots, 1e-7 * (1.0 / roots.separation())));
  }
}

TEST_CASE("psi_2 is the identity") {
  Configuration c = C({0.0, 1.0, 2.0});
  Configuration out = psi_k(c, 2);
  CHECK(same_point_set(out, c, 0.0));
}

TEST_CASE("psi_3 on the symmetric fixture matches the quartic") {
  // y^2 = (x+1) x (x-1) = x^3 - x: psi_3 = 3x^4 - 6x^2 - 1
  Configuration out = psi_k(C({-1.0, 0.0, 1.0}), 3);
  auto expected = poly_roots(ComplexPolynomial({-1.0, 0.0, -6.0, 0.0, 3.0}));
  CHECK(same_point_set(out, Configuration(expected), 1e-10));
}

TEST_CASE("psi_k output sizes and duplication oracle") {
  Rng rng(6);
  const int sizes[4] = {3, 4, 6, 12};
  for (int i = 0; i < 200; ++i) {
    Configuration c = random_configuration(rng, 3);
    Complex s = (c[0] + c[1] + c[2]) / 3.0;
    Complex e0 = c[0] - s, e1 = c[1] - s, e2 = c[2] - s;
    Complex p = e0 * e1 + e0 * e2 + e1 * e2;
    Complex q = -e0 * e1 * e2;
    for (int k = 2; k <= 5; ++k) {
      Configuration out = psi_k(c, k);
      CHECK(out.size() == static_cast<std::size_t>(sizes[k - 2]));
      if (k == 2) continue;
      for (Complex x : out.points()) {
        Complex xd = x - s;  // depressed coordinate
        Complex x2 = duplication_x(xd, p, q);
        double residual;
        if (k == 3) {
          // 2P = -P, so x(2P) = x(P)
          residual = std::abs(x2 - xd) / std::max(1.0, std::abs(xd));
        } else if (k == 4) {
          // 2P has order 2: x(2P) is a root of the curve cubic
          Complex val = x2 * x2 * x2 + p * x2 + q;
          residual = std::abs(val) / std::max(1.0, std::abs(x2 * x2 * x2));
        } else {
          // 2P has order 5 again
          ComplexPolynomial psi5 = torsion_polynomial(p, q, 5);
          double scale = 0.0, zp = 1.0;
          for (const Complex& ci : psi5.coefficients()) {
            scale += std::abs(ci) * zp;
            zp *= std::abs(x2);
          }
          residual = std::abs(psi5.evaluate(x2)) / std::max(1.0, scale);
        }
        CHECK(residual < 1e-8);
      }
    }
  }
  CHECK_THROWS_AS(psi_k(C({0.0, 1.0, 2.0}), 6), std::invalid_argument);
  CHECK_THROWS_AS(psi_k(C({0.0, 1.0, 2.0}), 1), std::invalid_argument);
}

TEST_CASE("psi_k equivariance under affine maps") {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    Configuration c = random_configuration(rng, 3);
    for (int k = 3; k <= 5; ++k) {
      Configuration base = psi_k(c, k);
      // translations act exactly on the x-line
      AffineMap shift{1.0, Complex{0.7, -0.3}};
      CHECK(same_point_set(psi_k(apply(shift, c), k), apply(shift, base), 1e-8));
      // scalings act with weight one on the x-coordinates (the curve
      // isomorphism rescales y with weight 3/2, which we never output)
      AffineMap scale{Complex{1.2, 0.5}, 0.0};
      CHECK(same_point_set(psi_k(apply(scale, c), k), apply(scale, base), 1e-8));
      // full affine maps
      AffineMap both{Complex{-0.8, 0.6}, Complex{0.2, 1.0}};
      CHECK(same_point_set(psi_k(apply(both, c), k), apply(both, base), 1e-8));
    }
  }
}

TEST_CASE("root_map") {
  Configuration c = C({1.0, 4.0});
  Configuration id = root_map(c, 1, 0);
  CHECK(same_point_set(id, c, 0.0));
  CHECK(same_point_set(root_map(C({1.0}), 2, 0), C({1.0, -1.0}), 1e-12));
  CHECK(same_point_set(root_map(C({4.0}), 2, 1), C({2.0, -2.0, 0.0}), 1e-12));
  CHECK(root_map(C({1.0, 4.0}), 3, 1).size() == 7);
  CHECK_THROWS_AS(root_map(C({0.0, 1.0}), 2, 0), std::invalid_argument);
}

TEST_CASE("affine twists") {
  ConfigurationMap f = identity_map();
  ConfigurationMap twisted = affine_twist(f, [](const Configuration&) { return AffineMap{}; });
  Configuration c = C({0.0, 1.0, 2.0});
  CHECK(same_point_set(twisted(c), c, 0.0));

  ConfigurationMap id_delta = discriminant_twisted_identity();
  CHECK(same_point_set(id_delta(c), C({0.0, -4.0, -8.0}), 1e-12));

  // j o id_delta = j pointwise
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    Configuration x = random_configuration(rng, 3);
    CHECK(rel_err(j_invariant(id_delta(x)), j_invariant(x)) < 1e-9);
  }
}

TEST_CASE("shape invariant classifies affine orbits") {
  CHECK(std::abs(shape_invariant(C({0.0, 1.0, 2.0})) - shape_invariant(C({5.0, 7.0, 9.0}))) <
        1e-9 * 1728.0);
  CHECK(std::abs(shape_invariant(C({0.0, 1.0, 2.0})) - shape_invariant(C({0.0, 1.0, 4.0}))) >
        1.0);
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    Configuration c = random_configuration(rng, 3);
    AffineMap a{Complex{0.9, -1.1}, Complex{3.0, 0.5}};
    std::vector<Complex> pts = apply(a, c).points();
    std::shuffle(pts.begin(), pts.end(), rng);
    Complex s1 = shape_invariant(c);
    Complex s2 = shape_invariant(Configuration(pts));
    CHECK(std::abs(s1 - s2) / std::max(1.0, std::abs(s1)) < 1e-9);
  }
}

TEST_CASE("the shape of R o Psi_3 is constant") {
  Rng rng(10);
  std::vector<Complex> shapes;
  for (int i = 0; i < 100; ++i) {
    Configuration c = random_configuration(rng, 3);
    shapes.push_back(shape_invariant(resolve_quartic(psi_k(c, 3))));
  }
  Complex mean{0.0, 0.0};
  for (Complex s : shapes) mean += s;
  mean /= static_cast<double>(shapes.size());
  double spread = 0.0;
  for (Complex s : shapes) spread = std::max(spread, std::abs(s - mean));
  CHECK(spread / std::max(1.0, std::abs(mean)) < 1e-6);
  MESSAGE("R o Psi_3 shape constant: ", mean.real(), " + ", mean.imag(), "i");
}
