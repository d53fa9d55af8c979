#include "braidconf/monodromy.hpp"

#include <algorithm>
#include <cmath>

namespace braidconf {

namespace {

// Greedy nearest-neighbour matching; fails unless it is a bijection with all
// displacements below factor * min(separation of either frame).
std::optional<std::vector<int>> try_match(const Configuration& a, const Configuration& b,
                                          double factor) {
  if (a.size() != b.size()) return std::nullopt;
  const double limit = factor * std::min(a.separation(), b.separation());
  std::vector<int> match(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    int best_j = -1;
    for (std::size_t j = 0; j < b.size(); ++j) {
      double d = std::abs(a[i] - b[j]);
      if (d < best) {
        best = d;
        best_j = static_cast<int>(j);
      }
    }
    if (best_j < 0 || best > limit || used[static_cast<std::size_t>(best_j)]) return std::nullopt;
    used[static_cast<std::size_t>(best_j)] = true;
    match[i] = best_j;
  }
  return match;
}

}  // namespace

Configuration Trajectory::at(double t) const {
  if (frames.empty()) throw std::invalid_argument("Trajectory::at: empty trajectory");
  if (t <= times.front()) return frames.front();
  if (t >= times.back()) return frames.back();
  std::size_t k = static_cast<std::size_t>(
      std::upper_bound(times.begin(), times.end(), t) - times.begin() - 1);
  double span = times[k + 1] - times[k];
  double s = span > 0.0 ? (t - times[k]) / span : 0.0;
  const Configuration& f0 = frames[k];
  const Configuration& f1 = frames[k + 1];
  const std::vector<int>& m = matches[k];
  std::vector<Complex> pts(f0.size());
  for (std::size_t i = 0; i < f0.size(); ++i) {
    pts[i] = (1.0 - s) * f0[i] + s * f1[static_cast<std::size_t>(m[i])];
  }
  return Configuration(std::move(pts));
}

std::vector<int> Trajectory::loop_permutation() const {
  const std::size_t n = strand_count();
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
  for (const auto& m : matches) {
    for (std::size_t i = 0; i < n; ++i) idx[i] = m[static_cast<std::size_t>(idx[i])];
  }
  // match the endpoint back to the start frame by value
  const Configuration& first = frames.front();
  const Configuration& last = frames.back();
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    Complex endpoint = last[static_cast<std::size_t>(idx[i])];
    double best = std::numeric_limits<double>::infinity();
    int best_j = -1;
    for (std::size_t j = 0; j < n; ++j) {
      double d = std::abs(endpoint - first[j]);
      if (!used[j] && d < best) {
        best = d;
        best_j = static_cast<int>(j);
      }
    }
    if (best_j < 0 || best > 0.25 * first.separation()) {
      throw std::invalid_argument("Trajectory::loop_permutation: endpoints do not close up");
    }
    used[static_cast<std::size_t>(best_j)] = true;
    perm[i] = best_j;
  }
  return perm;
}

Trajectory Trajectory::reversed() const {
  Trajectory out;
  const double t0 = times.front(), t1 = times.back();
  out.times.reserve(times.size());
  for (auto it = times.rbegin(); it != times.rend(); ++it) out.times.push_back(t0 + t1 - *it);
  out.frames.assign(frames.rbegin(), frames.rend());
  out.matches.reserve(matches.size());
  for (std::size_t k = matches.size(); k > 0; --k) {
    const auto& m = matches[k - 1];
    std::vector<int> inv(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) inv[static_cast<std::size_t>(m[i])] = static_cast<int>(i);
    out.matches.push_back(std::move(inv));
  }
  return out;
}

Trajectory generator_loop(int n, int i, int steps) {
  if (n < 2 || i < 1 || i >= n) throw std::invalid_argument("generator_loop: need 1 <= i < n");
  if (steps < 2) throw std::invalid_argument("generator_loop: need at least 2 steps");
  Trajectory out;
  const double mid = i + 0.5;
  out.times.reserve(static_cast<std::size_t>(steps) + 1);
  out.frames.reserve(static_cast<std::size_t>(steps) + 1);
  for (int s = 0; s <= steps; ++s) {
    double t = static_cast<double>(s) / steps;
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(n));
    Complex half_turn = 0.5 * std::polar(1.0, M_PI * t);
    for (int k = 1; k <= n; ++k) {
      if (k == i) {
        pts.push_back(mid - half_turn);
      } else if (k == i + 1) {
        pts.push_back(mid + half_turn);
      } else {
        pts.emplace_back(static_cast<double>(k), 0.0);
      }
    }
    out.times.push_back(t);
    out.frames.emplace_back(std::move(pts));
    if (s > 0) {
      std::vector<int> ident(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) ident[static_cast<std::size_t>(k)] = k;
      out.matches.push_back(std::move(ident));
    }
  }
  return out;
}

Trajectory track_map(const ConfigurationMap& f, const Trajectory& loop,
                     const TrackOptions& options) {
  if (loop.frame_count() < 2) throw std::invalid_argument("track_map: loop needs >= 2 frames");
  Trajectory out;

  auto image_at = [&](double t) {
    Configuration img = f(loop.at(t));
    if (img.separation() < options.min_separation) {
      throw CollisionError("track_map: image separation " + std::to_string(img.separation()) +
                           " under the configuration-space floor");
    }
    return img;
  };

  out.times.push_back(loop.times.front());
  out.frames.push_back(image_at(loop.times.front()));

  // Depth-first bisection of each input segment until the matching holds.
  struct Segment {
    double t0, t1;
    int depth;
  };
  for (std::size_t k = 0; k + 1 < loop.frame_count(); ++k) {
    std::vector<Segment> stack = {{loop.times[k], loop.times[k + 1], 0}};
    while (!stack.empty()) {
      Segment seg = stack.back();
      stack.pop_back();
      Configuration next = image_at(seg.t1);
      auto match = try_match(out.frames.back(), next, options.displacement_factor);
      if (match) {
        out.times.push_back(seg.t1);
        out.frames.push_back(std::move(next));
        out.matches.push_back(std::move(*match));
        continue;
      }
      if (seg.depth >= options.max_depth) {
        throw CollisionError("track_map: refinement exhausted without a valid matching");
      }
      double tm = 0.5 * (seg.t0 + seg.t1);
      stack.push_back({tm, seg.t1, seg.depth + 1});
      stack.push_back({seg.t0, tm, seg.depth + 1});
    }
  }
  return out;
}

namespace {

struct Crossing {
  double tau;
  int s, u;  // strand ids
};

BraidWord extract_word(const Trajectory& traj, Complex rotation) {
  const std::size_t n = traj.strand_count();
  const std::size_t frames = traj.frame_count();
  if (n < 1) throw std::invalid_argument("braid_from_trajectory: empty frames");

  // follow each strand through the index matchings
  std::vector<std::vector<Complex>> pos(n, std::vector<Complex>(frames));
  {
    std::vector<int> idx(n);
    for (std::size_t s = 0; s < n; ++s) idx[s] = static_cast<int>(s);
    for (std::size_t k = 0; k < frames; ++k) {
      for (std::size_t s = 0; s < n; ++s) {
        pos[s][k] = rotation * traj.frames[k][static_cast<std::size_t>(idx[s])];
      }
      if (k + 1 < frames) {
        for (std::size_t s = 0; s < n; ++s) idx[s] = traj.matches[k][static_cast<std::size_t>(idx[s])];
      }
    }
  }

  // strands sorted by real part at time 0
  std::vector<int> order(n);
  for (std::size_t s = 0; s < n; ++s) order[s] = static_cast<int>(s);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return pos[static_cast<std::size_t>(a)][0].real() < pos[static_cast<std::size_t>(b)][0].real();
  });

  std::vector<int> letters;
  for (std::size_t k = 0; k + 1 < frames; ++k) {
    std::vector<Crossing> crossings;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        double d0 = pos[a][k].real() - pos[b][k].real();
        double d1 = pos[a][k + 1].real() - pos[b][k + 1].real();
        if (d0 == 0.0 || d1 == 0.0) {
          throw DegenerateProjectionError("tied real parts at a sample point");
        }
        if ((d0 < 0.0) != (d1 < 0.0)) {
          double tau = d0 / (d0 - d1);
          crossings.push_back({tau, static_cast<int>(a), static_cast<int>(b)});
        }
      }
    }
    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& x, const Crossing& y) { return x.tau < y.tau; });
    for (const Crossing& c : crossings) {
      auto it_s = std::find(order.begin(), order.end(), c.s);
      auto it_u = std::find(order.begin(), order.end(), c.u);
      std::ptrdiff_t ps = it_s - order.begin();
      std::ptrdiff_t pu = it_u - order.begin();
      if (ps > pu) std::swap(ps, pu);
      if (pu - ps != 1) {
        throw DegenerateProjectionError("non-adjacent strands crossing in one step");
      }
      int left = order[static_cast<std::size_t>(ps)];
      int right = order[static_cast<std::size_t>(pu)];
      auto lerp = [&](int strand) {
        return (1.0 - c.tau) * pos[static_cast<std::size_t>(strand)][k] +
               c.tau * pos[static_cast<std::size_t>(strand)][k + 1];
      };
      // positive sigma when the strand arriving from the left passes below
      int generator = static_cast<int>(ps) + 1;
      bool positive = lerp(left).imag() < lerp(right).imag();
      letters.push_back(positive ? generator : -generator);
      std::swap(order[static_cast<std::size_t>(ps)], order[static_cast<std::size_t>(pu)]);
    }
  }
  return BraidWord(static_cast<int>(n), letters);
}

}  // namespace

BraidWord braid_from_trajectory(const Trajectory& t) {
  const double angles[] = {0.0, 5.3e-4, 1.7e-3, 4.9e-3, 1.1e-2};
  for (double angle : angles) {
    try {
      return extract_word(t, std::polar(1.0, angle));
    } catch (const DegenerateProjectionError&) {
      continue;
    }
  }
  throw DegenerateProjectionError(
      "braid_from_trajectory: projection stayed degenerate on all retry axes");
}

std::optional<BraidWord> find_conjugator(std::span<const BraidWord> from,
                                         std::span<const BraidWord> to, int max_len) {
  if (from.size() != to.size() || from.empty()) return std::nullopt;
  const int m = from[0].strands();
  // exponent sums are conjugation invariants
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (to[i].strands() != m) return std::nullopt;
    if (from[i].exponent_sum() != to[i].exponent_sum()) return std::nullopt;
  }
  auto matches = [&](const BraidWord& h) {
    BraidWord hi = h.inverse();
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (!braid_eq(h * from[i] * hi, to[i])) return false;
    }
    return true;
  };
  std::vector<BraidWord> frontier = {BraidWord(m)};
  for (int len = 0; len <= max_len; ++len) {
    for (const BraidWord& h : frontier) {
      if (matches(h)) return h;
    }
    if (len == max_len) break;
    std::vector<BraidWord> next;
    next.reserve(frontier.size() * static_cast<std::size_t>(2 * (m - 1)));
    for (const BraidWord& h : frontier) {
      for (int g = 1; g < m; ++g) {
        for (int sign : {+1, -1}) {
          int letter = sign * g;
          if (!h.empty() && h.letters().back() == -letter) continue;
          next.push_back(h * BraidWord(m, {letter}));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

InducedHom induced_hom(const ConfigurationMap& f, int n, int m, int steps,
                       std::span<const BraidWord> expected) {
  InducedHom out;
  for (int i = 1; i < n; ++i) {
    Trajectory loop = generator_loop(n, i, steps);
    Trajectory image = track_map(f, loop);
    if (static_cast<int>(image.strand_count()) != m) {
      throw std::invalid_argument("induced_hom: map does not land in Conf_" + std::to_string(m));
    }
    out.images.push_back(braid_from_trajectory(image));
  }
  out.relations_ok = check_homomorphism(out.images).is_homomorphism;
  if (!expected.empty()) {
    out.conjugator = find_conjugator(out.images, expected, 8);
  }
  return out;
}

}  // namespace braidconf
