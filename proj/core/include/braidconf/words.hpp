#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidconf {

/// A letter of a free-group word. +(g+1) is generator g, -(g+1) its inverse.
using Letter = std::int8_t;

constexpr Letter make_letter(int generator_index, int sign) {
  return static_cast<Letter>(sign > 0 ? generator_index + 1 : -(generator_index + 1));
}
constexpr int generator_index(Letter l) { return (l > 0 ? l : -l) - 1; }
constexpr int letter_sign(Letter l) { return l > 0 ? +1 : -1; }
constexpr Letter letter_inverse(Letter l) { return static_cast<Letter>(-l); }

/// Position in the enumeration order x < X < y < Y < ... (g0 < G0 < g1 < ...).
constexpr int letter_order(Letter l) {
  return 2 * generator_index(l) + (l < 0 ? 1 : 0);
}
constexpr Letter letter_of_order(int order) {
  return make_letter(order / 2, order % 2 == 0 ? +1 : -1);
}

/// Appends a letter to an already reduced buffer, cancelling if possible.
inline void append_letter(std::vector<Letter>& buf, Letter l) {
  if (!buf.empty() && buf.back() == letter_inverse(l)) {
    buf.pop_back();
  } else {
    buf.push_back(l);
  }
}

/// A freely reduced word over the free group of the given rank.
///
/// The canonical storage is the fully reduced letter sequence; reduction
/// happens eagerly at construction, so equality is plain sequence equality.
/// Values are immutable after construction and safe to share across threads.
class ReducedWord {
 public:
  /// The identity of rank 2 (the dominant case in this library).
  ReducedWord() : rank_(2) {}
  /// The identity of the given rank.
  explicit ReducedWord(int rank) : rank_(rank) { check_rank(rank); }
  /// Reduces the given letters eagerly.
  ReducedWord(int rank, std::span<const Letter> letters);
  ReducedWord(int rank, std::initializer_list<int> letters);

  /// Adopts a buffer the caller guarantees is already reduced.
  static ReducedWord adopt_reduced(int rank, std::vector<Letter> letters);

  int rank() const { return rank_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }
  std::span<const Letter> letters() const& { return letters_; }
  std::span<const Letter> letters() const&& = delete;  // spans must not outlive temporaries
  Letter letter(std::size_t i) const { return letters_[i]; }

  ReducedWord inverse() const;
  /// Left-to-right group product; requires equal ranks.
  ReducedWord operator*(const ReducedWord& other) const;
  ReducedWord pow(long n) const;

  bool operator==(const ReducedWord& other) const {
    return rank_ == other.rank_ && letters_ == other.letters_;
  }
  bool operator!=(const ReducedWord& other) const { return !(*this == other); }
  /// Length-lexicographic order (x < X < y < Y); ranks compare first.
  bool operator<(const ReducedWord& other) const;

 private:
  static void check_rank(int rank) {
    if (rank < 1) throw std::invalid_argument("ReducedWord: rank must be positive");
  }
  int rank_;
  std::vector<Letter> letters_;
};

/// Freely reduced product of u and v.
ReducedWord concat(const ReducedWord& u, const ReducedWord& v);

/// Inverse word (reversal with sign flip); preserves length.
ReducedWord invert(const ReducedWord& w);

/// Applies the endomorphism sending generator g to images[g].
/// All images must share a common rank, which becomes the result's rank.
ReducedWord substitute(const ReducedWord& w, std::span<const ReducedWord> images);

/// Conjugate h * w * h^{-1}.
ReducedWord conjugate(const ReducedWord& h, const ReducedWord& w);

/// Removes matching prefix/suffix inverse pairs: the cyclically reduced core.
ReducedWord cyclically_reduce(const ReducedWord& w);

/// Text form: x,X,y,Y in rank <= 2, otherwise g0,G0,g1,...; "" is the identity.
std::string to_string(const ReducedWord& w);

/// Parses the text form; rank < 0 infers the rank (at least 2).
ReducedWord parse_word(std::string_view text, int rank = -1);

/// Streams every reduced word of length <= max_len exactly once, in
/// length-lexicographic order.  An optional prefix restricts the stream to
/// the words extending it (the prefix itself included), which is how
/// enumeration is partitioned across workers.
class ReducedWordEnumerator {
 public:
  ReducedWordEnumerator(int rank, int max_len);
  ReducedWordEnumerator(int rank, int max_len, const ReducedWord& prefix);

  /// Advances to the next word; false once exhausted.
  bool advance();
  /// Letters of the current word; valid until the next advance().
  std::span<const Letter> current() const { return cur_; }
  std::optional<ReducedWord> next();

 private:
  bool bump(std::size_t pos);
  void fill_minimal(std::size_t from);

  int rank_;
  int max_len_;
  std::size_t fixed_;
  std::vector<Letter> cur_;
  bool started_ = false;
  bool done_ = false;
};

/// Number of reduced words of exactly length len in the given rank.
/// For rank 2 this is 4 * 3^(len-1) when len >= 1.
unsigned long long reduced_word_count(int rank, int len);

}  // namespace braidconf
