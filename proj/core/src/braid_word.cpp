#include "braidconf/braid_word.hpp"

#include <charconv>

namespace braidconf {

namespace {

void append_cancelling(std::vector<int>& buf, int letter) {
  if (!buf.empty() && buf.back() == -letter) {
    buf.pop_back();
  } else {
    buf.push_back(letter);
  }
}

void check_letters(int strands, std::span<const int> letters) {
  for (int l : letters) {
    int i = l > 0 ? l : -l;
    if (i < 1 || i >= strands) {
      throw std::invalid_argument("BraidWord: generator index " + std::to_string(l) +
                                  " outside B_" + std::to_string(strands));
    }
  }
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 2) throw std::invalid_argument("BraidWord: need at least 2 strands");
}

BraidWord::BraidWord(int strands, std::span<const int> letters) : BraidWord(strands) {
  check_letters(strands, letters);
  letters_.reserve(letters.size());
  for (int l : letters) append_cancelling(letters_, l);
}

BraidWord::BraidWord(int strands, std::initializer_list<int> letters)
    : BraidWord(strands, std::span<const int>(letters.begin(), letters.size())) {}

BraidWord BraidWord::parse(int strands, std::string_view text) {
  std::vector<int> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == ' ' || ch == ',' || ch == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (text[j] == '-' || text[j] == '+') ++j;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    int value = 0;
    auto res = std::from_chars(text.data() + i, text.data() + j, value);
    if (res.ec != std::errc() || res.ptr != text.data() + j || i == j) {
      throw std::invalid_argument("BraidWord::parse: malformed letter near '" +
                                  std::string(text.substr(i)) + "'");
    }
    letters.push_back(value);
    i = j;
  }
  return BraidWord(strands, letters);
}

BraidWord BraidWord::operator*(const BraidWord& other) const {
  if (strands_ != other.strands_) throw std::invalid_argument("BraidWord: strand count mismatch");
  BraidWord out(strands_);
  out.letters_ = letters_;
  out.letters_.reserve(letters_.size() + other.letters_.size());
  for (int l : other.letters_) append_cancelling(out.letters_, l);
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord out(strands_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

BraidWord BraidWord::conjugated_by(const BraidWord& h) const { return h * *this * h.inverse(); }

BraidWord BraidWord::pow(long n) const {
  BraidWord base = n >= 0 ? *this : inverse();
  long m = n >= 0 ? n : -n;
  BraidWord out(strands_);
  for (long i = 0; i < m; ++i) out = out * base;
  return out;
}

long BraidWord::exponent_sum() const {
  long sum = 0;
  for (int l : letters_) sum += l > 0 ? 1 : -1;
  return sum;
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> slot(static_cast<std::size_t>(strands_));
  for (int s = 0; s < strands_; ++s) slot[static_cast<std::size_t>(s)] = s;
  for (int l : letters_) {
    int g = l > 0 ? l : -l;  // swaps slots g-1 and g
    for (int s = 0; s < strands_; ++s) {
      int& p = slot[static_cast<std::size_t>(s)];
      if (p == g - 1) {
        p = g;
      } else if (p == g) {
        p = g - 1;
      }
    }
  }
  return slot;
}

std::string BraidWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

BraidWord alpha_n(int n) {
  std::vector<int> letters;
  for (int i = 1; i < n; ++i) letters.push_back(i);
  return BraidWord(n, letters);
}

BraidWord beta_n(int n) { return alpha_n(n) * BraidWord(n, {1}); }

BraidWord z_n(int n) { return alpha_n(n).pow(n); }

}  // namespace braidconf
