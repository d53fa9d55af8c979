#include "braidconf/braid.hpp"

#include <algorithm>
#include <array>

namespace braidconf {

namespace {

constexpr Letter kX = 1, kXinv = -1, kY = 2, kYinv = -2;

void require_strands(const BraidWord& w, int n, const char* what) {
  if (w.strands() != n) {
    throw std::invalid_argument(std::string(what) + ": expected a " + std::to_string(n) +
                                "-strand word");
  }
}

}  // namespace

std::vector<ReducedWord> artin_action(const BraidWord& w) {
  const int n = w.strands();
  std::vector<std::vector<Letter>> images(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) images[static_cast<std::size_t>(j)] = {make_letter(j, +1)};

  std::vector<Letter> buf;
  auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    int l = *it;
    int i = (l > 0 ? l : -l) - 1;  // 0-based index of the acting generator
    bool positive = l > 0;
    for (auto& image : images) {
      buf.clear();
      buf.reserve(image.size() * 2);
      for (Letter m : image) {
        int g = generator_index(m);
        bool pos = m > 0;
        if (g == i) {
          if (positive) {
            // x_i -> x_i x_{i+1} x_i^{-1}
            if (pos) {
              append_letter(buf, make_letter(i, +1));
              append_letter(buf, make_letter(i + 1, +1));
              append_letter(buf, make_letter(i, -1));
            } else {
              append_letter(buf, make_letter(i, +1));
              append_letter(buf, make_letter(i + 1, -1));
              append_letter(buf, make_letter(i, -1));
            }
          } else {
            // x_i -> x_{i+1}
            append_letter(buf, make_letter(i + 1, pos ? +1 : -1));
          }
        } else if (g == i + 1) {
          if (positive) {
            // x_{i+1} -> x_i
            append_letter(buf, make_letter(i, pos ? +1 : -1));
          } else {
            // x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
            if (pos) {
              append_letter(buf, make_letter(i + 1, -1));
              append_letter(buf, make_letter(i, +1));
              append_letter(buf, make_letter(i + 1, +1));
            } else {
              append_letter(buf, make_letter(i + 1, -1));
              append_letter(buf, make_letter(i, -1));
              append_letter(buf, make_letter(i + 1, +1));
            }
          }
        } else {
          append_letter(buf, m);
        }
      }
      image.swap(buf);
    }
  }

  std::vector<ReducedWord> out;
  out.reserve(static_cast<std::size_t>(n));
  for (auto& image : images) out.push_back(ReducedWord::adopt_reduced(n, std::move(image)));
  return out;
}

bool artin_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw std::invalid_argument("artin_equal: strand count mismatch");
  return artin_action(u) == artin_action(v);
}

namespace {

// PSL_2 Z images of the B_3 generators as free-product words.
const ModularWord& psl_letter_word(int letter) {
  static const ModularWord s1 = ModularWord::a_power(2) * ModularWord::b();      // "Ab"
  static const ModularWord s1i = ModularWord::b() * ModularWord::a_power(1);     // "ba"
  static const ModularWord s2 = ModularWord::b() * ModularWord::a_power(2);      // "bA"
  static const ModularWord s2i = ModularWord::a_power(1) * ModularWord::b();     // "ab"
  switch (letter) {
    case 1: return s1;
    case -1: return s1i;
    case 2: return s2;
    case -2: return s2i;
  }
  throw std::logic_error("psl_letter_word: unexpected letter");
}

}  // namespace

B3NormalForm b3_normal_form(const BraidWord& w) {
  require_strands(w, 3, "b3_normal_form");
  ModularWord psl;
  for (int l : w.letters()) psl *= psl_letter_word(l);
  return {std::move(psl), w.exponent_sum()};
}

BraidWord b3_lift(const B3NormalForm& nf) {
  static const BraidWord alpha = alpha_n(3);
  static const BraidWord alpha_inv = alpha.inverse();
  static const BraidWord beta = beta_n(3);
  BraidWord w(3);
  for (ModularWord::Syllable s : nf.psl_part.syllables()) {
    switch (s) {
      case ModularWord::Syllable::A: w = w * alpha; break;
      case ModularWord::Syllable::A2: w = w * alpha_inv; break;
      case ModularWord::Syllable::B: w = w * beta; break;
    }
  }
  long diff = nf.exponent_sum - w.exponent_sum();
  if (diff % 6 != 0) throw std::logic_error("b3_lift: exponent sum inconsistent with PSL part");
  return w * z_n(3).pow(diff / 6);
}

ReducedWord F2Action::apply(const ReducedWord& u) const {
  const std::array<ReducedWord, 2> images = {image_x, image_y};
  return substitute(u, images);
}

F2Action F2Action::compose(const F2Action& inner) const {
  return {apply(inner.image_x), apply(inner.image_y)};
}

F2Action F2Action::of_generator(int letter) {
  static const F2Action s1{ReducedWord(2, {kX}), ReducedWord(2, {kY, kX})};
  static const F2Action s1i{ReducedWord(2, {kX}), ReducedWord(2, {kY, kXinv})};
  static const F2Action s2{ReducedWord(2, {kX, kYinv}), ReducedWord(2, {kY})};
  static const F2Action s2i{ReducedWord(2, {kX, kY}), ReducedWord(2, {kY})};
  switch (letter) {
    case 1: return s1;
    case -1: return s1i;
    case 2: return s2;
    case -2: return s2i;
  }
  throw std::logic_error("F2Action::of_generator: unexpected letter");
}

F2Action F2Action::of_braid(const BraidWord& b3) {
  require_strands(b3, 3, "F2Action::of_braid");
  F2Action acc;
  for (int l : b3.letters()) acc = acc.compose(of_generator(l));
  return acc;
}

F2Action F2Action::of_normal_form(const B3NormalForm& nf) { return of_braid(b3_lift(nf)); }

B4NormalForm B4NormalForm::operator*(const B4NormalForm& o) const {
  F2Action act = F2Action::of_normal_form(b3_part);
  return {kernel_part * act.apply(o.kernel_part), b3_part * o.b3_part};
}

B4NormalForm gassner_split(const BraidWord& w) {
  require_strands(w, 4, "gassner_split");
  static const ReducedWord gen_x(2, {kX});
  static const ReducedWord gen_x_inv(2, {kXinv});

  ReducedWord kernel(2);
  F2Action act;
  B3NormalForm nf;
  for (int l : w.letters()) {
    int r;
    const ReducedWord* kernel_factor = nullptr;
    switch (l) {
      case 3:
        kernel_factor = &gen_x;
        r = 1;
        break;
      case -3:
        kernel_factor = &gen_x_inv;
        r = -1;
        break;
      default:
        r = l;
        break;
    }
    if (kernel_factor != nullptr) kernel = kernel * act.apply(*kernel_factor);
    act = act.compose(F2Action::of_generator(r));
    nf.psl_part *= psl_letter_word(r);
    nf.exponent_sum += r > 0 ? 1 : -1;
  }
  return {std::move(kernel), std::move(nf)};
}

BraidWord f2_to_b4(const ReducedWord& u) {
  if (u.rank() != 2) throw std::invalid_argument("f2_to_b4: expected a rank-2 word");
  static const BraidWord bx(4, {-1, 3});
  static const BraidWord by = bx.inverse() * BraidWord(4, {-2}) * bx * BraidWord(4, {2});
  static const BraidWord bx_inv = bx.inverse();
  static const BraidWord by_inv = by.inverse();
  BraidWord out(4);
  for (Letter l : u.letters()) {
    const BraidWord& factor = generator_index(l) == 0 ? (l > 0 ? bx : bx_inv)
                                                      : (l > 0 ? by : by_inv);
    out = out * factor;
  }
  return out;
}

BraidWord b4_recombine(const B4NormalForm& nf) {
  BraidWord b3 = b3_lift(nf.b3_part);
  BraidWord included(4, b3.letters());  // sigma_i -> sigma_i
  return f2_to_b4(nf.kernel_part) * included;
}

bool braid_eq(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw std::invalid_argument("braid_eq: strand count mismatch");
  switch (u.strands()) {
    case 2: return u.exponent_sum() == v.exponent_sum();
    case 3: return b3_normal_form(u) == b3_normal_form(v);
    case 4: return gassner_split(u) == gassner_split(v);
    default: return artin_equal(u, v);
  }
}

BraidWord r_star(const BraidWord& w) {
  require_strands(w, 4, "r_star");
  std::vector<int> letters;
  letters.reserve(w.length());
  for (int l : w.letters()) {
    switch (l) {
      case 3: letters.push_back(1); break;
      case -3: letters.push_back(-1); break;
      default: letters.push_back(l); break;
    }
  }
  return BraidWord(3, letters);
}

BraidWord psi3_star(const BraidWord& w) {
  require_strands(w, 3, "psi3_star");
  std::vector<int> letters;
  letters.reserve(w.length() * 2);
  for (int l : w.letters()) {
    switch (l) {
      case 1: letters.insert(letters.end(), {1, 2}); break;
      case -1: letters.insert(letters.end(), {-2, -1}); break;
      case 2: letters.insert(letters.end(), {3, 2}); break;
      case -2: letters.insert(letters.end(), {-2, -3}); break;
    }
  }
  return BraidWord(4, letters);
}

HomomorphismCheck check_homomorphism(std::span<const BraidWord> images, bool allow_oracle) {
  if (images.empty()) return {true, false};
  int m = images[0].strands();
  for (const BraidWord& im : images) {
    if (im.strands() != m) throw std::invalid_argument("check_homomorphism: mixed targets");
  }
  if (m > 4 && !allow_oracle) {
    throw std::invalid_argument("check_homomorphism: target word problem requires the oracle fallback");
  }
  HomomorphismCheck out;
  out.is_homomorphism = true;
  const std::size_t k = images.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const BraidWord& e1 = images[i];
    const BraidWord& e2 = images[i + 1];
    if (!braid_eq(e1 * e2 * e1, e2 * e1 * e2)) out.is_homomorphism = false;
    if (braid_eq(e1 * e2, e2 * e1)) out.cyclic_flag = true;
  }
  for (std::size_t i = 0; i + 2 < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if (!braid_eq(images[i] * images[j], images[j] * images[i])) out.is_homomorphism = false;
    }
  }
  return out;
}

HomomorphismCheck check_homomorphism_psl(std::span<const UnimodularMatrix> images) {
  HomomorphismCheck out;
  out.is_homomorphism = true;
  const std::size_t k = images.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const UnimodularMatrix& e1 = images[i];
    const UnimodularMatrix& e2 = images[i + 1];
    if (!psl_equal(e1 * e2 * e1, e2 * e1 * e2)) out.is_homomorphism = false;
    if (psl_equal(e1 * e2, e2 * e1)) out.cyclic_flag = true;
  }
  for (std::size_t i = 0; i + 2 < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if (!psl_equal(images[i] * images[j], images[j] * images[i])) out.is_homomorphism = false;
    }
  }
  return out;
}

std::vector<BraidWord> transvect(std::span<const BraidWord> images, const BraidWord& central,
                                 long power) {
  const int m = central.strands();
  for (int g = 1; g < m; ++g) {
    BraidWord gen(m, {g});
    if (!braid_eq(central * gen, gen * central)) {
      throw NonCentralError("transvect: twist element is not central");
    }
  }
  BraidWord factor = central.pow(power);
  std::vector<BraidWord> out;
  out.reserve(images.size());
  for (const BraidWord& im : images) {
    if (im.strands() != m) throw std::invalid_argument("transvect: strand count mismatch");
    out.push_back(im * factor);
  }
  return out;
}

bool double_coset_eq_b3(const BraidWord& g, const BraidWord& g2) {
  require_strands(g, 3, "double_coset_eq_b3");
  require_strands(g2, 3, "double_coset_eq_b3");
  B3NormalForm n1 = b3_normal_form(g);
  B3NormalForm n2 = b3_normal_form(g2);
  const ModularWord wa = ModularWord::a_power(1);
  const ModularWord wb = ModularWord::b();
  // g2 = beta^i g alpha^j iff the PSL parts match for some i0 in {0,1},
  // j0 in {0,1,2} and the exponent sums satisfy e2 - e = 3 i0 + 2 j0 (mod 6);
  // the remaining central z_3 powers absorb any multiple of 6.
  for (int i0 = 0; i0 < 2; ++i0) {
    ModularWord left = wb.pow(i0) * n1.psl_part;
    for (int j0 = 0; j0 < 3; ++j0) {
      if (left * wa.pow(j0) != n2.psl_part) continue;
      long diff = n2.exponent_sum - n1.exponent_sum - 3 * i0 - 2 * j0;
      if (((diff % 6) + 6) % 6 == 0) return true;
    }
  }
  return false;
}

std::vector<BraidWord> rho_g(const BraidWord& g) {
  require_strands(g, 3, "rho_g");
  const BraidWord alpha = alpha_n(3);
  const BraidWord beta = beta_n(3);
  BraidWord alpha_img = alpha.conjugated_by(g);
  // sigma_1 = alpha^{-1} beta, sigma_2 = beta^{-1} alpha^2
  return {alpha_img.inverse() * beta, beta.inverse() * alpha_img * alpha_img};
}

BraidWord invert_generators(const BraidWord& w) {
  std::vector<int> letters;
  letters.reserve(w.length());
  for (int l : w.letters()) letters.push_back(-l);
  return BraidWord(w.strands(), letters);
}

std::vector<BraidWord> invert_generators(std::span<const BraidWord> images) {
  std::vector<BraidWord> out;
  out.reserve(images.size());
  for (const BraidWord& im : images) out.push_back(invert_generators(im));
  return out;
}

BraidWord map_through(const BraidWord& w, std::span<const BraidWord> images) {
  if (images.empty()) throw std::invalid_argument("map_through: no generator images");
  if (static_cast<std::size_t>(w.strands()) != images.size() + 1) {
    throw std::invalid_argument("map_through: need one image per source generator");
  }
  BraidWord out(images[0].strands());
  for (int l : w.letters()) {
    const BraidWord& im = images[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
    out = out * (l > 0 ? im : im.inverse());
  }
  return out;
}

}  // namespace braidconf
