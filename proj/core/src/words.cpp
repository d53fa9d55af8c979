#include "braidconf/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace braidconf {

namespace {

void check_letters(int rank, std::span<const Letter> letters) {
  for (Letter l : letters) {
    if (l == 0 || generator_index(l) >= rank) {
      throw std::invalid_argument("ReducedWord: letter outside alphabet of rank " +
                                  std::to_string(rank));
    }
  }
}

std::vector<Letter> reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) append_letter(out, l);
  return out;
}

}  // namespace

ReducedWord::ReducedWord(int rank, std::span<const Letter> letters) : rank_(rank) {
  check_rank(rank);
  check_letters(rank, letters);
  letters_ = reduce(letters);
}

ReducedWord::ReducedWord(int rank, std::initializer_list<int> letters) : rank_(rank) {
  check_rank(rank);
  std::vector<Letter> tmp;
  tmp.reserve(letters.size());
  for (int v : letters) tmp.push_back(static_cast<Letter>(v));
  check_letters(rank, tmp);
  letters_ = reduce(tmp);
}

ReducedWord ReducedWord::adopt_reduced(int rank, std::vector<Letter> letters) {
  ReducedWord w(rank);
  w.letters_ = std::move(letters);
  return w;
}

ReducedWord ReducedWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = letter_inverse(l);
  return adopt_reduced(rank_, std::move(out));
}

ReducedWord ReducedWord::operator*(const ReducedWord& other) const {
  return concat(*this, other);
}

ReducedWord ReducedWord::pow(long n) const {
  ReducedWord base = n >= 0 ? *this : inverse();
  long m = n >= 0 ? n : -n;
  ReducedWord out(rank_);
  for (long i = 0; i < m; ++i) out = out * base;
  return out;
}

bool ReducedWord::operator<(const ReducedWord& other) const {
  if (rank_ != other.rank_) return rank_ < other.rank_;
  if (letters_.size() != other.letters_.size()) return letters_.size() < other.letters_.size();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    int a = letter_order(letters_[i]);
    int b = letter_order(other.letters_[i]);
    if (a != b) return a < b;
  }
  return false;
}

ReducedWord concat(const ReducedWord& u, const ReducedWord& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("concat: rank mismatch");
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  out.reserve(u.length() + v.length());
  for (Letter l : v.letters()) append_letter(out, l);
  return ReducedWord::adopt_reduced(u.rank(), std::move(out));
}

ReducedWord invert(const ReducedWord& w) { return w.inverse(); }

ReducedWord substitute(const ReducedWord& w, std::span<const ReducedWord> images) {
  if (static_cast<int>(images.size()) != w.rank()) {
    throw std::invalid_argument("substitute: need one image per generator");
  }
  int target = images.empty() ? w.rank() : images[0].rank();
  for (const ReducedWord& im : images) {
    if (im.rank() != target) throw std::invalid_argument("substitute: images must share a rank");
  }
  std::vector<Letter> out;
  out.reserve(w.length() * 2 + 4);
  for (Letter l : w.letters()) {
    const ReducedWord& im = images[static_cast<std::size_t>(generator_index(l))];
    auto ls = im.letters();
    if (letter_sign(l) > 0) {
      for (Letter m : ls) append_letter(out, m);
    } else {
      for (auto it = ls.rbegin(); it != ls.rend(); ++it) append_letter(out, letter_inverse(*it));
    }
  }
  return ReducedWord::adopt_reduced(target, std::move(out));
}

ReducedWord conjugate(const ReducedWord& h, const ReducedWord& w) {
  return concat(concat(h, w), h.inverse());
}

ReducedWord cyclically_reduce(const ReducedWord& w) {
  auto ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == letter_inverse(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<Letter> out(ls.begin() + lo, ls.begin() + hi);
  return ReducedWord::adopt_reduced(w.rank(), std::move(out));
}

std::string to_string(const ReducedWord& w) {
  std::string out;
  if (w.rank() <= 2) {
    static constexpr char table[2][2] = {{'x', 'X'}, {'y', 'Y'}};
    for (Letter l : w.letters()) out += table[generator_index(l)][l < 0 ? 1 : 0];
  } else {
    for (Letter l : w.letters()) {
      out += (l > 0 ? 'g' : 'G');
      out += std::to_string(generator_index(l));
    }
  }
  return out;
}

ReducedWord parse_word(std::string_view text, int rank) {
  std::vector<Letter> letters;
  int max_gen = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == 'x' || ch == 'X' || ch == 'y' || ch == 'Y') {
      int g = (ch == 'x' || ch == 'X') ? 0 : 1;
      letters.push_back(make_letter(g, std::isupper(static_cast<unsigned char>(ch)) ? -1 : +1));
      max_gen = std::max(max_gen, g);
      ++i;
    } else if (ch == 'g' || ch == 'G') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1) throw std::invalid_argument("parse_word: generator index expected");
      int g = 0;
      std::from_chars(text.data() + i + 1, text.data() + j, g);
      if (g > 125) throw std::invalid_argument("parse_word: generator index too large");
      letters.push_back(make_letter(g, ch == 'g' ? +1 : -1));
      max_gen = std::max(max_gen, g);
      i = j;
    } else {
      throw std::invalid_argument(std::string("parse_word: unexpected character '") + ch + "'");
    }
  }
  int effective = rank >= 1 ? rank : std::max(2, max_gen + 1);
  return ReducedWord(effective, std::span<const Letter>(letters));
}

ReducedWordEnumerator::ReducedWordEnumerator(int rank, int max_len)
    : rank_(rank), max_len_(max_len), fixed_(0) {
  if (rank < 1) throw std::invalid_argument("ReducedWordEnumerator: rank must be positive");
  if (max_len < 0) throw std::invalid_argument("ReducedWordEnumerator: max_len must be >= 0");
}

ReducedWordEnumerator::ReducedWordEnumerator(int rank, int max_len, const ReducedWord& prefix)
    : ReducedWordEnumerator(rank, max_len) {
  if (prefix.rank() != rank) throw std::invalid_argument("ReducedWordEnumerator: prefix rank mismatch");
  cur_.assign(prefix.letters().begin(), prefix.letters().end());
  fixed_ = cur_.size();
  if (static_cast<int>(fixed_) > max_len_) done_ = true;
}

bool ReducedWordEnumerator::bump(std::size_t pos) {
  int o = letter_order(cur_[pos]) + 1;
  for (; o < 2 * rank_; ++o) {
    Letter l = letter_of_order(o);
    if (pos == 0 || cur_[pos - 1] != letter_inverse(l)) {
      cur_[pos] = l;
      return true;
    }
  }
  return false;
}

void ReducedWordEnumerator::fill_minimal(std::size_t from) {
  for (std::size_t pos = from; pos < cur_.size(); ++pos) {
    for (int o = 0; o < 2 * rank_; ++o) {
      Letter l = letter_of_order(o);
      if (pos == 0 || cur_[pos - 1] != letter_inverse(l)) {
        cur_[pos] = l;
        break;
      }
    }
  }
}

bool ReducedWordEnumerator::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;  // the prefix itself (the identity when no prefix)
  }
  std::size_t len = cur_.size();
  for (std::size_t i = len; i > fixed_; --i) {
    if (bump(i - 1)) {
      fill_minimal(i);
      return true;
    }
  }
  if (static_cast<int>(len) + 1 <= max_len_) {
    cur_.resize(len + 1);
    fill_minimal(fixed_);
    return true;
  }
  done_ = true;
  return false;
}

std::optional<ReducedWord> ReducedWordEnumerator::next() {
  if (!advance()) return std::nullopt;
  return ReducedWord(rank_, current());
}

unsigned long long reduced_word_count(int rank, int len) {
  if (len == 0) return 1;
  unsigned long long count = static_cast<unsigned long long>(2 * rank);
  for (int i = 1; i < len; ++i) count *= static_cast<unsigned long long>(2 * rank - 1);
  return count;
}

}  // namespace braidconf
