#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lmlab/core.hpp"
#include "lmlab/lattice.hpp"

namespace lmlab {

/// Hermite normal forms of all sublattices of Z^n with the given index:
/// upper triangular, positive diagonal with product = index, entry (i, j)
/// reduced into [0, h_jj). Yielded in ascending order of the diagonal, then
/// of the off-diagonal entries in row-major order. Requires n <= 4.
void for_each_sublattice(int n, const Integer& index, const std::function<void(const Lattice&)>& visit,
                         const Limits& limits = kDefaultLimits);
std::vector<Lattice> enumerate_sublattices(int n, const Integer& index, const Limits& limits = kDefaultLimits);

/// Every HNF lattice of index |ball| that the ball tiles.
std::vector<Lattice> search_perfect_lattices(const BallParams& params, unsigned threads = 1,
                                             const Limits& limits = kDefaultLimits);

/// Lattice points in [-radius, radius]^n, found from integer combinations of
/// the generator rows (no quotient-group machinery involved).
std::vector<IntVector> lattice_points_in_box(const Lattice& lattice, std::int64_t radius,
                                             const Limits& limits = kDefaultLimits);

/// Translates whose balls can meet [-window, window]^n.
std::vector<IntVector> window_translates(const Lattice& lattice, const BallParams& params, std::int64_t window,
                                         const Limits& limits = kDefaultLimits);

struct WindowCheck {
    bool ok = true;
    std::optional<IntVector> witness;  // overlapping (or uncovered) cell
};

/// Pairwise disjointness of the translated balls, restricted to the window.
WindowCheck verify_window_packing(const std::vector<IntVector>& translates, const BallParams& params,
                                  std::int64_t window, const Limits& limits = kDefaultLimits);
/// Every cell of the window is covered by some translated ball.
WindowCheck verify_window_covering(const std::vector<IntVector>& translates, const BallParams& params,
                                   std::int64_t window, const Limits& limits = kDefaultLimits);

/// |T ∩ [-L,L]^n| * |ball| / (2L+1)^n.
///
/// For a tiling this sits inside [(2L-2r+1)^n, (2L+2r+1)^n] / (2L+1)^n with r
/// the ball's l-infinity radius, so the error against the limiting density
/// is O(1/L).
Rational estimate_density(const std::vector<IntVector>& translates, const BallParams& params, std::int64_t window);
Rational estimate_density(const Lattice& lattice, const BallParams& params, std::int64_t window,
                          const Limits& limits = kDefaultLimits);

struct DensitySandwich {
    Rational lower;
    Rational upper;
};

/// Bounds any tiling's window estimate must satisfy.
DensitySandwich tiling_density_sandwich(const BallParams& params, std::int64_t window);

}  // namespace lmlab
