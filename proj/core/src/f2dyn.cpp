#include "braidconf/f2dyn.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <set>
#include <thread>

namespace braidconf {

namespace {

constexpr Letter kX = 1, kXinv = -1, kY = 2, kYinv = -2;

// Images of x and y under f^r, for r in [-2, 3]; every exponent reduces to
// this range through f^6(w) = c w c^{-1}.
struct SubstTable {
  std::vector<Letter> im_x;
  std::vector<Letter> im_y;
};

void apply_table(std::span<const Letter> in, const SubstTable& table, std::vector<Letter>& out) {
  out.clear();
  for (Letter l : in) {
    const std::vector<Letter>& im = generator_index(l) == 0 ? table.im_x : table.im_y;
    if (l > 0) {
      for (Letter m : im) append_letter(out, m);
    } else {
      for (auto it = im.rbegin(); it != im.rend(); ++it) append_letter(out, letter_inverse(*it));
    }
  }
}

std::array<SubstTable, 6> build_tables() {
  std::array<SubstTable, 6> t;  // index r + 2, r in [-2, 3]
  auto idx = [](int r) { return static_cast<std::size_t>(r + 2); };
  t[idx(0)] = {{kX}, {kY}};
  t[idx(1)] = {{kX, kY}, {kXinv}};
  t[idx(-1)] = {{kYinv}, {kY, kX}};
  for (int r : {2, 3}) {
    apply_table(t[idx(r - 1)].im_x, t[idx(1)], t[idx(r)].im_x);
    apply_table(t[idx(r - 1)].im_y, t[idx(1)], t[idx(r)].im_y);
  }
  apply_table(t[idx(-1)].im_x, t[idx(-1)], t[idx(-2)].im_x);
  apply_table(t[idx(-1)].im_y, t[idx(-1)], t[idx(-2)].im_y);
  return t;
}

const SubstTable& f_table(int r) {
  static const std::array<SubstTable, 6> tables = build_tables();
  return tables[static_cast<std::size_t>(r + 2)];
}

// buf <- reduced(c^q buf c^{-q})
void conjugate_by_c_power(std::vector<Letter>& buf, long q) {
  if (q == 0) return;
  static constexpr Letter c_pos[4] = {kX, kY, kXinv, kYinv};
  static constexpr Letter c_neg[4] = {kY, kX, kYinv, kXinv};
  const Letter* head = q > 0 ? c_pos : c_neg;
  const Letter* tail = q > 0 ? c_neg : c_pos;
  long m = q > 0 ? q : -q;
  std::vector<Letter> out;
  out.reserve(buf.size() + static_cast<std::size_t>(8 * m));
  for (long i = 0; i < m; ++i) out.insert(out.end(), head, head + 4);
  for (Letter l : buf) append_letter(out, l);
  for (long i = 0; i < m; ++i) {
    for (int j = 0; j < 4; ++j) append_letter(out, tail[j]);
  }
  buf.swap(out);
}

// n = 6q + r with r in [-2, 3]
void split_power(long n, long& q, int& r) {
  long r0 = ((n % 6) + 6) % 6;
  if (r0 >= 4) r0 -= 6;
  r = static_cast<int>(r0);
  q = (n - r0) / 6;
}

void require_rank2(const ReducedWord& w) {
  if (w.rank() != 2) throw std::invalid_argument("f acts on rank-2 words only");
}

// One solver probe; the scratch buffers are reused across candidates.
struct EquationChecker {
  long q1, q2;
  int r1, r2;
  bool prune;
  std::vector<Letter> a, b, prod;

  EquationChecker(int k, bool prune_flag) : prune(prune_flag) {
    split_power(6L * k + 1, q1, r1);
    split_power(-6L * k - 1, q2, r2);
  }

  bool satisfies(std::span<const Letter> w) {
    apply_table(w, f_table(r1), a);
    conjugate_by_c_power(a, q1);
    apply_table(w, f_table(r2), b);
    conjugate_by_c_power(b, q2);
    if (prune && a.size() > w.size() + b.size()) return false;
    prod.assign(a.begin(), a.end());
    prod.reserve(a.size() + b.size());
    for (Letter l : b) append_letter(prod, l);
    return prod.size() == w.size() && std::equal(prod.begin(), prod.end(), w.begin());
  }
};

}  // namespace

const ReducedWord& f2_commutator() {
  static const ReducedWord c(2, {kX, kY, kXinv, kYinv});
  return c;
}

ReducedWord c_power(long n) {
  static constexpr Letter c_pos[4] = {kX, kY, kXinv, kYinv};
  static constexpr Letter c_neg[4] = {kY, kX, kYinv, kXinv};
  std::vector<Letter> out;
  long m = n > 0 ? n : -n;
  out.reserve(static_cast<std::size_t>(4 * m));
  const Letter* pat = n > 0 ? c_pos : c_neg;
  for (long i = 0; i < m; ++i) out.insert(out.end(), pat, pat + 4);
  return ReducedWord::adopt_reduced(2, std::move(out));
}

ReducedWord apply_f(const ReducedWord& w) {
  require_rank2(w);
  std::vector<Letter> out;
  apply_table(w.letters(), f_table(1), out);
  return ReducedWord::adopt_reduced(2, std::move(out));
}

ReducedWord apply_f_inverse(const ReducedWord& w) {
  require_rank2(w);
  std::vector<Letter> out;
  apply_table(w.letters(), f_table(-1), out);
  return ReducedWord::adopt_reduced(2, std::move(out));
}

ReducedWord f_power(const ReducedWord& w, long n) {
  require_rank2(w);
  long q;
  int r;
  split_power(n, q, r);
  std::vector<Letter> out;
  apply_table(w.letters(), f_table(r), out);
  conjugate_by_c_power(out, q);
  return ReducedWord::adopt_reduced(2, std::move(out));
}

std::vector<ReducedWord> f_orbit_window(const ReducedWord& w, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("f_orbit_window: lo must be <= hi");
  std::vector<ReducedWord> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  ReducedWord cur = f_power(w, lo);
  out.push_back(cur);
  for (int n = lo; n < hi; ++n) {
    cur = apply_f(cur);
    out.push_back(cur);
  }
  return out;
}

bool is_fixed_by_f(const ReducedWord& w) {
  require_rank2(w);
  std::vector<Letter> out;
  apply_table(w.letters(), f_table(1), out);
  auto ls = w.letters();
  return out.size() == ls.size() && std::equal(out.begin(), out.end(), ls.begin());
}

bool is_c_power(const ReducedWord& w) {
  auto ls = w.letters();
  if (ls.empty()) return true;
  if (ls.size() % 4 != 0) return false;
  static constexpr Letter c_pos[4] = {kX, kY, kXinv, kYinv};
  static constexpr Letter c_neg[4] = {kY, kX, kYinv, kXinv};
  const Letter* pat = ls[0] == kX ? c_pos : (ls[0] == kY ? c_neg : nullptr);
  if (pat == nullptr) return false;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] != pat[i % 4]) return false;
  }
  return true;
}

namespace {

// Copies of c (sign > 0) or c^{-1} (sign < 0) at the start of the word.
long count_prefix_copies(std::span<const Letter> ls) {
  static constexpr Letter c_pos[4] = {kX, kY, kXinv, kYinv};
  static constexpr Letter c_neg[4] = {kY, kX, kYinv, kXinv};
  if (ls.empty()) return 0;
  const Letter* pat;
  long sign;
  if (ls[0] == kX) {
    pat = c_pos;
    sign = 1;
  } else if (ls[0] == kY) {
    pat = c_neg;
    sign = -1;
  } else {
    return 0;
  }
  long copies = 0;
  std::size_t i = 0;
  while (i + 4 <= ls.size() && ls[i] == pat[0] && ls[i + 1] == pat[1] && ls[i + 2] == pat[2] &&
         ls[i + 3] == pat[3]) {
    ++copies;
    i += 4;
  }
  return sign * copies;
}

}  // namespace

long c_left(const ReducedWord& w) {
  if (is_c_power(w)) throw CentralPowerError("c_left: word lies in <c>");
  return count_prefix_copies(w.letters());
}

long c_right(const ReducedWord& w) {
  if (is_c_power(w)) throw CentralPowerError("c_right: word lies in <c>");
  // R(w) = L(w^{-1})
  ReducedWord inv = w.inverse();
  return count_prefix_copies(inv.letters());
}

CDecomposition c_decompose(const ReducedWord& w) {
  require_rank2(w);
  if (is_c_power(w)) throw CentralPowerError("c_decompose: word lies in <c>");
  auto ls = w.letters();
  long left = count_prefix_copies(ls);
  ReducedWord inv = w.inverse();
  long right = count_prefix_copies(inv.letters());
  std::size_t drop_front = static_cast<std::size_t>(4 * (left < 0 ? -left : left));
  std::size_t drop_back = static_cast<std::size_t>(4 * (right < 0 ? -right : right));
  // The prefix and suffix powers cannot overlap for words outside <c>.
  if (drop_front + drop_back > ls.size()) {
    throw std::logic_error("c_decompose: overlapping central powers");
  }
  std::vector<Letter> core(ls.begin() + drop_front, ls.end() - drop_back);
  return {left, right, ReducedWord::adopt_reduced(2, std::move(core))};
}

RunAndNext leading_run(const ReducedWord& w, int run_gen) {
  auto ls = w.letters();
  RunAndNext out;
  std::size_t i = 0;
  if (!ls.empty() && generator_index(ls[0]) == run_gen) {
    Letter head = ls[0];
    while (i < ls.size() && ls[i] == head) ++i;
    out.run = letter_sign(head) * static_cast<long>(i);
  }
  out.next = i < ls.size() ? ls[i] : 0;
  return out;
}

RunAndNext trailing_run(const ReducedWord& w, int run_gen) {
  auto ls = w.letters();
  RunAndNext out;
  std::size_t i = ls.size();
  if (!ls.empty() && generator_index(ls[ls.size() - 1]) == run_gen) {
    Letter tail = ls[ls.size() - 1];
    while (i > 0 && ls[i - 1] == tail) --i;
    out.run = letter_sign(tail) * static_cast<long>(ls.size() - i);
  }
  out.next = i > 0 ? ls[i - 1] : 0;
  return out;
}

std::vector<ReducedWord> solve_equation(int k, int max_len, const SolveOptions& options) {
  if (max_len < 0) throw std::invalid_argument("solve_equation: max_len must be >= 0");
  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;

  std::vector<ReducedWord> solutions;

  // Short words plus the empty prefix portion are checked inline.
  {
    EquationChecker checker(k, options.prune);
    ReducedWordEnumerator en(2, std::min(max_len, 1));
    while (en.advance()) {
      if (checker.satisfies(en.current())) solutions.emplace_back(2, en.current());
    }
  }

  if (max_len >= 2) {
    // Partition by 2-letter prefix; the merged result is schedule-independent.
    std::vector<ReducedWord> prefixes;
    ReducedWordEnumerator pe(2, 2);
    while (pe.advance()) {
      if (pe.current().size() == 2) prefixes.emplace_back(2, pe.current());
    }

    auto run_chunk = [&](std::size_t begin, std::size_t stride) {
      std::vector<ReducedWord> found;
      EquationChecker checker(k, options.prune);
      for (std::size_t p = begin; p < prefixes.size(); p += stride) {
        ReducedWordEnumerator en(2, max_len, prefixes[p]);
        while (en.advance()) {
          if (checker.satisfies(en.current())) found.emplace_back(2, en.current());
        }
      }
      return found;
    };

    if (threads == 1) {
      auto found = run_chunk(0, 1);
      solutions.insert(solutions.end(), found.begin(), found.end());
    } else {
      std::vector<std::future<std::vector<ReducedWord>>> futures;
      futures.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) {
        futures.push_back(std::async(std::launch::async, run_chunk, t, threads));
      }
      for (auto& fut : futures) {
        auto found = fut.get();
        solutions.insert(solutions.end(), found.begin(), found.end());
      }
    }
  }

  std::sort(solutions.begin(), solutions.end());
  return solutions;
}

namespace {

// Widens the orbit window until six consecutive exponents on each side have
// image length beyond max_len with L and R signs that force further growth
// (then length increases by 8 every six steps within each residue class).
std::set<ReducedWord> orbit_of_x_set(int max_len) {
  const ReducedWord x(2, {kX});
  const long iteration_cap = 12L * (max_len + 8) + 64;
  std::set<ReducedWord> orbit;

  ReducedWord cur = x;
  long consec = 0;
  for (long n = 0; consec < 6; ++n) {
    if (n > iteration_cap) throw std::logic_error("orbit window failed to close (forward)");
    if (cur.length() <= max_len) {
      orbit.insert(cur);
      consec = 0;
    } else if (c_left(cur) >= 0 && c_right(cur) >= 0) {
      ++consec;
    } else {
      consec = 0;
    }
    cur = apply_f(cur);
  }

  cur = apply_f_inverse(x);
  consec = 0;
  for (long n = 1; consec < 6; ++n) {
    if (n > iteration_cap) throw std::logic_error("orbit window failed to close (backward)");
    if (cur.length() <= max_len) {
      orbit.insert(cur);
      consec = 0;
    } else if (c_left(cur) <= 0 && c_right(cur) <= 0) {
      ++consec;
    } else {
      consec = 0;
    }
    cur = apply_f_inverse(cur);
  }
  return orbit;
}

}  // namespace

std::vector<ReducedWord> f_orbit_of_x_up_to(int max_len) {
  auto orbit = orbit_of_x_set(max_len);
  return {orbit.begin(), orbit.end()};
}

bool all_in_f_orbit_of_x(const std::vector<ReducedWord>& solutions, int max_len) {
  auto orbit = orbit_of_x_set(max_len);
  for (const ReducedWord& w : solutions) {
    if (w.is_identity()) continue;
    if (orbit.find(w) == orbit.end()) return false;
  }
  return true;
}

}  // namespace braidconf
