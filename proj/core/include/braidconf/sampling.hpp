#pragma once

#include <random>

#include "braidconf/braid_word.hpp"
#include "braidconf/modgroup.hpp"
#include "braidconf/words.hpp"

namespace braidconf {

using Rng = std::mt19937_64;

/// Uniform reduced word of exactly the given length.
ReducedWord random_reduced_word(Rng& rng, int rank, int length);

/// Uniform letters, then free cancellation (may come out shorter).
BraidWord random_braid_word(Rng& rng, int strands, int length);

/// Uniform alternating word with the given number of syllables.
ModularWord random_modular_word(Rng& rng, int syllables);

/// Rewrites w through relation-preserving moves (free insertion, braid
/// relation, distant commutation); the result equals w in B_n but usually
/// differs as a word.  Length stays within max_len.
BraidWord shuffle_braid_word(Rng& rng, const BraidWord& w, int moves, std::size_t max_len);

}  // namespace braidconf
