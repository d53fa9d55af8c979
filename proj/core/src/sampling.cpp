#include "braidconf/sampling.hpp"

namespace braidconf {

ReducedWord random_reduced_word(Rng& rng, int rank, int length) {
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(length));
  std::uniform_int_distribution<int> first(0, 2 * rank - 1);
  std::uniform_int_distribution<int> rest(0, 2 * rank - 2);
  for (int i = 0; i < length; ++i) {
    Letter l;
    if (letters.empty()) {
      l = letter_of_order(first(rng));
    } else {
      // skip the unique cancelling letter
      int forbidden = letter_order(letter_inverse(letters.back()));
      int o = rest(rng);
      if (o >= forbidden) ++o;
      l = letter_of_order(o);
    }
    letters.push_back(l);
  }
  return ReducedWord::adopt_reduced(rank, std::move(letters));
}

BraidWord random_braid_word(Rng& rng, int strands, int length) {
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return BraidWord(strands, letters);
}

ModularWord random_modular_word(Rng& rng, int syllables) {
  std::uniform_int_distribution<int> coin(0, 1);
  ModularWord w;
  bool a_next = coin(rng) == 0;
  for (int i = 0; i < syllables; ++i) {
    if (a_next) {
      w *= ModularWord::a_power(coin(rng) == 0 ? 1 : 2);
    } else {
      w *= ModularWord::b();
    }
    a_next = !a_next;
  }
  return w;
}

BraidWord shuffle_braid_word(Rng& rng, const BraidWord& w, int moves, std::size_t max_len) {
  const int n = w.strands();
  std::vector<int> letters(w.letters().begin(), w.letters().end());
  std::uniform_int_distribution<int> move_kind(0, 2);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);

  for (int m = 0; m < moves; ++m) {
    switch (move_kind(rng)) {
      case 0: {  // insert sigma_i sigma_i^{-1}
        if (letters.size() + 2 > max_len) break;
        std::uniform_int_distribution<std::size_t> pos(0, letters.size());
        std::size_t p = pos(rng);
        int g = sign(rng) ? gen(rng) : -gen(rng);
        letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(p), {g, -g});
        break;
      }
      case 1: {  // braid relation at a random position
        if (letters.size() < 3) break;
        std::uniform_int_distribution<std::size_t> pos(0, letters.size() - 3);
        std::size_t p = pos(rng);
        int a = letters[p], b = letters[p + 1], c = letters[p + 2];
        if (a == c && ((b == a + 1 && a > 0) || (b == a - 1 && a < 0))) {
          letters[p] = b;
          letters[p + 1] = a;
          letters[p + 2] = b;
        } else if (a == c && ((a == b + 1 && b > 0) || (a == b - 1 && b < 0))) {
          letters[p] = b;
          letters[p + 1] = a;
          letters[p + 2] = b;
        }
        break;
      }
      default: {  // commute distant generators
        if (letters.size() < 2) break;
        std::uniform_int_distribution<std::size_t> pos(0, letters.size() - 2);
        std::size_t p = pos(rng);
        int i = std::abs(letters[p]);
        int j = std::abs(letters[p + 1]);
        if (i > j + 1 || j > i + 1) std::swap(letters[p], letters[p + 1]);
        break;
      }
    }
  }
  return BraidWord(n, letters);
}

}  // namespace braidconf
