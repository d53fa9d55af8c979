#pragma once

#include <optional>
#include <vector>

#include "braidconf/braid.hpp"
#include "braidconf/confmaps.hpp"

namespace braidconf {

class CollisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class DegenerateProjectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A time-sampled path of configurations with strand matching between
/// consecutive frames.  For closed loops the first and last frames are equal
/// as sets; the matching invariant (each matched point moves by less than a
/// fraction of the local separation) is what track_map refines for.
struct Trajectory {
  std::vector<double> times;                // strictly increasing
  std::vector<Configuration> frames;        // one per time
  std::vector<std::vector<int>> matches;    // matches[k][i]: index in frame k+1

  std::size_t frame_count() const { return frames.size(); }
  std::size_t strand_count() const { return frames.empty() ? 0 : frames[0].size(); }

  /// Piecewise-linear interpolation along matched strands; the returned
  /// configuration is ordered like the earlier bracketing frame.
  Configuration at(double t) const;

  /// Index in the last frame reached by the strand starting at index i of
  /// the first frame, then matched back to the first frame by value.
  /// For a closed loop this is the loop's strand permutation.
  std::vector<int> loop_permutation() const;

  Trajectory reversed() const;
};

/// The sigma_i generator loop at the basepoint {1, ..., n}: points i and
/// i+1 perform a counterclockwise half-turn about their midpoint, all other
/// points stay fixed.  This calibration fixture defines the positive
/// crossing convention: braid_from_trajectory(generator_loop(n, i)) = sigma_i.
Trajectory generator_loop(int n, int i, int steps = 2000);

struct TrackOptions {
  double displacement_factor = 0.4;  ///< refine until moves < factor * separation
  double min_separation = 1e-8;      ///< below this the map has left Conf_m
  int max_depth = 48;                ///< bisection depth per input segment
};

/// Tracks the image of a loop under a configuration map with adaptive
/// bisection of the time steps until the matching invariant holds.
Trajectory track_map(const ConfigurationMap& f, const Trajectory& loop,
                     const TrackOptions& options = {});

/// Reads the braid word off a trajectory: strands are ordered by real part,
/// a generator is emitted when adjacent strands swap, and the sign compares
/// imaginary parts at the crossing.  A persistently degenerate projection is
/// retried on a rotated axis (the braid class is unchanged).
BraidWord braid_from_trajectory(const Trajectory& t);

/// Brute-force search for h with h from_i h^{-1} = to_i for all i.
std::optional<BraidWord> find_conjugator(std::span<const BraidWord> from,
                                         std::span<const BraidWord> to, int max_len);

struct InducedHom {
  std::vector<BraidWord> images;        ///< of sigma_1..sigma_{n-1} in B_m
  bool relations_ok = false;            ///< braid/commutation relations verified exactly
  std::optional<BraidWord> conjugator;  ///< set when the images match `expected` up to conjugation
};

/// Extracts the homomorphism induced by f: Conf_n -> Conf_m by tracking
/// every generator loop.  When `expected` is supplied, a conjugator of word
/// length <= 8 aligning the extraction with it is searched for.
InducedHom induced_hom(const ConfigurationMap& f, int n, int m, int steps = 2000,
                       std::span<const BraidWord> expected = {});

}  // namespace braidconf
