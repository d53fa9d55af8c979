#include "braidconf/modgroup.hpp"

#include <utility>

namespace braidconf {

namespace {

BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// u*a + v*b == gcd(a, b) > 0; requires (a, b) != (0, 0).
std::pair<BigInt, BigInt> ext_gcd(BigInt a, BigInt b) {
  bool neg_a = a < 0, neg_b = b < 0;
  if (neg_a) a = -a;
  if (neg_b) b = -b;
  BigInt old_r = a, r = b;
  BigInt old_u = 1, u = 0;
  BigInt old_v = 0, v = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_u - q * u;
    old_u = u;
    u = tmp;
    tmp = old_v - q * v;
    old_v = v;
    v = tmp;
  }
  if (neg_a) old_u = -old_u;
  if (neg_b) old_v = -old_v;
  return {old_u, old_v};
}

}  // namespace

UnimodularMatrix::UnimodularMatrix(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) {
    throw std::invalid_argument("UnimodularMatrix: determinant must be 1");
  }
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& o) const {
  return UnimodularMatrix(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                          c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

UnimodularMatrix UnimodularMatrix::inverse() const {
  return UnimodularMatrix(d_, -b_, -c_, a_);
}

UnimodularMatrix UnimodularMatrix::negated() const {
  return UnimodularMatrix(-a_, -b_, -c_, -d_);
}

UnimodularMatrix UnimodularMatrix::pow(long n) const {
  UnimodularMatrix base = n >= 0 ? *this : inverse();
  long m = n >= 0 ? n : -n;
  UnimodularMatrix out;
  for (long i = 0; i < m; ++i) out = out * base;
  return out;
}

std::string UnimodularMatrix::str() const {
  return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

bool psl_equal(const UnimodularMatrix& m, const UnimodularMatrix& n) {
  if (m == n) return true;
  return m.a() == -n.a() && m.b() == -n.b() && m.c() == -n.c() && m.d() == -n.d();
}

TraceClass trace_class(const UnimodularMatrix& m) {
  BigInt tr = big_abs(m.trace());
  if (tr < 2) return TraceClass::Elliptic;
  if (tr > 2) return TraceClass::Hyperbolic;
  if (m.b() == 0 && m.c() == 0) return TraceClass::Identity;
  return TraceClass::Parabolic;
}

std::string to_string(TraceClass t) {
  switch (t) {
    case TraceClass::Identity: return "identity";
    case TraceClass::Elliptic: return "elliptic";
    case TraceClass::Parabolic: return "parabolic";
    case TraceClass::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

void ModularWord::push(Syllable s) {
  if (syllables_.empty()) {
    syllables_.push_back(s);
    return;
  }
  Syllable tail = syllables_.back();
  bool tail_a = tail != Syllable::B;
  bool s_a = s != Syllable::B;
  if (tail_a != s_a) {
    syllables_.push_back(s);
    return;
  }
  if (!s_a) {  // b * b = 1
    syllables_.pop_back();
    return;
  }
  int e = (static_cast<int>(tail) + static_cast<int>(s)) % 3;
  syllables_.pop_back();
  if (e != 0) syllables_.push_back(static_cast<Syllable>(e));
}

ModularWord ModularWord::a_power(int exponent) {
  ModularWord w;
  int e = ((exponent % 3) + 3) % 3;
  if (e != 0) w.syllables_.push_back(static_cast<Syllable>(e));
  return w;
}

ModularWord ModularWord::b() {
  ModularWord w;
  w.syllables_.push_back(Syllable::B);
  return w;
}

ModularWord ModularWord::parse(std::string_view text) {
  ModularWord w;
  for (char ch : text) {
    switch (ch) {
      case 'a': w.push(Syllable::A); break;
      case 'A': w.push(Syllable::A2); break;
      case 'b': case 'B': w.push(Syllable::B); break;
      case ' ': case '\t': break;
      default:
        throw std::invalid_argument(std::string("ModularWord::parse: unexpected '") + ch + "'");
    }
  }
  return w;
}

ModularWord ModularWord::operator*(const ModularWord& other) const {
  ModularWord out = *this;
  out *= other;
  return out;
}

ModularWord& ModularWord::operator*=(const ModularWord& other) {
  if (this == &other) {
    ModularWord copy = other;
    for (Syllable s : copy.syllables_) push(s);
    return *this;
  }
  for (Syllable s : other.syllables_) push(s);
  return *this;
}

ModularWord ModularWord::inverse() const {
  ModularWord out;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    switch (*it) {
      case Syllable::A: out.syllables_.push_back(Syllable::A2); break;
      case Syllable::A2: out.syllables_.push_back(Syllable::A); break;
      case Syllable::B: out.syllables_.push_back(Syllable::B); break;
    }
  }
  return out;
}

ModularWord ModularWord::pow(long n) const {
  ModularWord base = n >= 0 ? *this : inverse();
  long m = n >= 0 ? n : -n;
  ModularWord out;
  for (long i = 0; i < m; ++i) out = out * base;
  return out;
}

UnimodularMatrix ModularWord::evaluate() const {
  static const UnimodularMatrix a2 = mat_a() * mat_a();
  UnimodularMatrix out;
  for (Syllable s : syllables_) {
    switch (s) {
      case Syllable::A: out = out * mat_a(); break;
      case Syllable::A2: out = out * a2; break;
      case Syllable::B: out = out * mat_b(); break;
    }
  }
  return out;
}

int ModularWord::abelianized_mod6() const {
  int sum = 0;
  for (Syllable s : syllables_) {
    switch (s) {
      case Syllable::A: sum += 2; break;
      case Syllable::A2: sum += 4; break;
      case Syllable::B: sum += 3; break;
    }
  }
  return sum % 6;
}

std::string ModularWord::str() const {
  std::string out;
  for (Syllable s : syllables_) {
    switch (s) {
      case Syllable::A: out += 'a'; break;
      case Syllable::A2: out += 'A'; break;
      case Syllable::B: out += 'b'; break;
    }
  }
  return out;
}

const UnimodularMatrix& mat_a() {
  static const UnimodularMatrix m(0, 1, -1, 1);
  return m;
}
const UnimodularMatrix& mat_b() {
  static const UnimodularMatrix m(0, 1, -1, 0);
  return m;
}
const UnimodularMatrix& mat_t() {
  static const UnimodularMatrix m(1, 1, 0, 1);
  return m;
}
const UnimodularMatrix& mat_u() {
  static const UnimodularMatrix m(1, 0, -1, 1);
  return m;
}

namespace {

// Right-multiplies the word by T^k, where T = a^2 b and T^{-1} = b a.
void append_t_power(ModularWord& word, const BigInt& k) {
  ModularWord factor;
  if (k > 0) {
    factor = ModularWord::a_power(2) * ModularWord::b();
  } else if (k < 0) {
    factor = ModularWord::b() * ModularWord::a_power(1);
  } else {
    return;
  }
  for (BigInt i = big_abs(k); i > 0; --i) word = word * factor;
}

// Nearest-integer quotient: |a - k c| <= |c| / 2.
BigInt nearest_quotient(const BigInt& a, const BigInt& c) {
  BigInt q = a / c;  // truncated
  BigInt r = a - q * c;
  if (2 * big_abs(r) > big_abs(c)) {
    if ((r > 0) == (c > 0)) {
      ++q;
    } else {
      --q;
    }
  }
  return q;
}

}  // namespace

ModularWord normal_form(const UnimodularMatrix& m) {
  ModularWord word;
  BigInt a = m.a(), b = m.b(), c = m.c(), d = m.d();
  while (c != 0) {
    BigInt k = nearest_quotient(a, c);
    append_t_power(word, k);
    word = word * ModularWord::b();  // b plays the role of S
    // M <- S^{-1} T^{-k} M
    BigInt na = a - k * c;
    BigInt nb = b - k * d;
    a = -c;
    b = -d;
    c = na;
    d = nb;
  }
  // Now the residual matrix is +-[[1, e],[0, 1]].
  BigInt e = a == 1 ? b : -b;
  append_t_power(word, e);
  return word;
}

ParabolicNormalization normalize_parabolic_pair(const UnimodularMatrix& p,
                                                const UnimodularMatrix& q) {
  if (trace_class(p) != TraceClass::Parabolic) throw NotParabolicError("first matrix is not parabolic");
  if (trace_class(q) != TraceClass::Parabolic) throw NotParabolicError("second matrix is not parabolic");
  if (psl_equal(p * q, q * p)) throw CommutingPairError("parabolic pair commutes (cyclic case)");
  if (!psl_equal(p * q * p, q * p * q)) throw BraidRelationError("pair fails the braid relation");

  auto trace_pos = [](const UnimodularMatrix& m) { return m.trace() > 0 ? m : m.negated(); };

  // Move the fixed point of p to infinity.
  UnimodularMatrix pp = trace_pos(p);
  BigInt num, den;
  if (pp.c() == 0) {
    num = 1;
    den = 0;
  } else {
    num = pp.a() - 1;  // fixed point (a-1)/c in lowest terms
    den = pp.c();
    if (num == 0) {
      den = 1;
    } else {
      BigInt g = boost::multiprecision::gcd(big_abs(num), big_abs(den));
      num /= g;
      den /= g;
    }
  }
  auto [u, v] = ext_gcd(num, den);
  UnimodularMatrix c1(-u, -v, den, -num);

  UnimodularMatrix p2 = trace_pos(c1 * pp * c1.inverse());
  if (p2.c() != 0 || p2.a() != 1) {
    throw std::logic_error("normalize_parabolic_pair: conjugation did not fix infinity");
  }

  bool inverted = p2.b() < 0;
  if (inverted) p2 = p2.inverse();
  UnimodularMatrix qq = trace_pos(inverted ? q.inverse() : q);
  UnimodularMatrix q2 = trace_pos(c1 * qq * c1.inverse());

  // The braid relation pins (x, y) = (1, -1).
  if (p2.b() != 1 || q2.c() != -1) {
    throw std::logic_error("normalize_parabolic_pair: braid relation did not pin the pair, got x=" +
                           p2.b().str() + " y=" + q2.c().str());
  }

  BigInt eta = 1 - q2.a();  // c * eta = a - 1 with c = -1
  UnimodularMatrix t_eta(1, eta, 0, 1);
  UnimodularMatrix g = t_eta.inverse() * c1;

  UnimodularMatrix p_in = inverted ? p.inverse() : p;
  UnimodularMatrix q_in = inverted ? q.inverse() : q;
  if (!psl_equal(g * p_in * g.inverse(), mat_t()) ||
      !psl_equal(g * q_in * g.inverse(), mat_u())) {
    throw std::logic_error("normalize_parabolic_pair: verification failed");
  }
  return {g, inverted};
}

UnimodularMatrix PslEndomorphism::apply(const ModularWord& w) const {
  UnimodularMatrix out;
  UnimodularMatrix a2 = image_a * image_a;
  for (ModularWord::Syllable s : w.syllables()) {
    switch (s) {
      case ModularWord::Syllable::A: out = out * image_a; break;
      case ModularWord::Syllable::A2: out = out * a2; break;
      case ModularWord::Syllable::B: out = out * image_b; break;
    }
  }
  return out;
}

PslEndomorphism endo_psl2z(const UnimodularMatrix& g, const UnimodularMatrix& h, int eps) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("endo_psl2z: eps must be +-1");
  UnimodularMatrix a_img = eps == 1 ? mat_a() : mat_a().inverse();
  return {g * a_img * g.inverse(), h * mat_b() * h.inverse()};
}

bool double_coset_eq_psl(const UnimodularMatrix& g, const UnimodularMatrix& g2) {
  for (int i = 0; i < 2; ++i) {
    UnimodularMatrix left = mat_b().pow(i) * g;
    for (int j = 0; j < 3; ++j) {
      if (psl_equal(left * mat_a().pow(j), g2)) return true;
    }
  }
  return false;
}

UnimodularMatrix h_star(const BraidWord& w) {
  if (w.strands() != 3) throw std::invalid_argument("h_star: expected a 3-strand word");
  static const UnimodularMatrix t_inv = mat_t().inverse();
  static const UnimodularMatrix u_inv = mat_u().inverse();
  UnimodularMatrix out;
  for (int l : w.letters()) {
    switch (l) {
      case 1: out = out * mat_t(); break;
      case -1: out = out * t_inv; break;
      case 2: out = out * mat_u(); break;
      case -2: out = out * u_inv; break;
      default: throw std::logic_error("h_star: unexpected letter");
    }
  }
  return out;
}

}  // namespace braidconf
