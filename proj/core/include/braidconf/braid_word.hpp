#pragma once

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidconf {

/// A word in the Artin generators of B_n.  Letters are +-i for sigma_i^{+-1},
/// 1 <= i < n.  Adjacent sigma_i sigma_i^{-1} pairs cancel at construction;
/// words are otherwise uninterpreted, so operator== is word equality, not
/// equality in the group (see braid_eq).
class BraidWord {
 public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::span<const int> letters);
  BraidWord(int strands, std::initializer_list<int> letters);

  /// Parses "1 2 -1" style space/comma separated letters.
  static BraidWord parse(int strands, std::string_view text);

  int strands() const { return strands_; }
  std::span<const int> letters() const& { return letters_; }
  std::span<const int> letters() const&& = delete;  // spans must not outlive temporaries
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord operator*(const BraidWord& other) const;
  BraidWord inverse() const;
  /// h * w * h^{-1}
  BraidWord conjugated_by(const BraidWord& h) const;
  BraidWord pow(long n) const;

  long exponent_sum() const;
  /// Image in S_n: perm[j] is the final slot of the strand starting in slot j.
  std::vector<int> permutation() const;

  bool operator==(const BraidWord& other) const {
    return strands_ == other.strands_ && letters_ == other.letters_;
  }
  bool operator!=(const BraidWord& other) const { return !(*this == other); }

  std::string str() const;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// alpha_n = sigma_1 ... sigma_{n-1}
BraidWord alpha_n(int n);
/// beta_n = alpha_n sigma_1
BraidWord beta_n(int n);
/// z_n = alpha_n^n, the generator of the center for n >= 3
BraidWord z_n(int n);

}  // namespace braidconf
