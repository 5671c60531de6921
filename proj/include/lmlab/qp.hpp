#pragma once

#include <cstdint>
#include <vector>

#include "lmlab/core.hpp"
#include "lmlab/metric.hpp"
#include "lmlab/numeric.hpp"

namespace lmlab {

/// Counts of each symbol x in [-s, s] at one coordinate; counts[x + s].
template <class T>
struct BasicSymbolDistribution {
    int s = 1;
    std::vector<T> counts;

    BasicSymbolDistribution() = default;
    BasicSymbolDistribution(int s_, std::vector<T> counts_);

    const T& at(int x) const { return counts[static_cast<std::size_t>(x + s)]; }
    T total() const;
    /// Mass on the nonzero symbols.
    T nonzero_mass() const { return total() - at(0); }
    BasicSymbolDistribution mirrored() const;

    friend bool operator==(const BasicSymbolDistribution&, const BasicSymbolDistribution&) = default;
};

using SymbolDistribution = BasicSymbolDistribution<double>;
using ExactDistribution = BasicSymbolDistribution<Rational>;
using CountDistribution = BasicSymbolDistribution<std::int64_t>;

/// p D_s p^T.
double f_value(const SymbolDistribution& p);
Rational f_value(const ExactDistribution& p);
Integer f_value(const CountDistribution& p);

struct ClosedFormMax {
    Rational value;
    ExactDistribution argmax;
};

/// s in {1, 2, 3}, 0 <= a <= K.
ClosedFormMax f_max_closed(int s, const Rational& K, const Rational& a);

struct OracleResult {
    double value = 0.0;
    SymbolDistribution best;
};

int default_resolution(int s);

/// Grid search over splits of the nonzero mass a in steps of a/resolution,
/// then pairwise mass-transfer ascent from the grid winner. Ties break toward
/// the lexicographically smaller distribution, so results do not depend on
/// the thread count.
OracleResult f_max_oracle_continuous(int s, double K, double a, int resolution, unsigned threads = 1,
                                     int ascent_rounds = 200);

struct IntegerMax {
    Integer value;
    CountDistribution best;
};

/// Exhaustive maximum over integer count vectors; K <= 12.
IntegerMax f_max_oracle_integer(int s, std::int64_t K, std::int64_t a);

/// Exhaustive maximum over 0/1 counts on the nonzero symbols, a of them set.
IntegerMax f_max_oracle_binary(int s, std::int64_t K, std::int64_t a);

/// -(3/2)x^2 + 2(K+s)x - s^2 - s for x >= s, -(1/2)x^2 + (2K-1)x below.
Rational g_envelope(const Rational& x, std::int64_t K, int s);

enum class AverageBound { first, second };

/// Upper bounds on the average pairwise distance of K codewords in a
/// radius-(e+1) ball.
Rational avg_distance_bound(std::int64_t n, std::int64_t e, std::int64_t K, int s, AverageBound variant);

struct Decomposition {
    Integer ordered_sum;
    Integer coordinate_sum;
    bool equal = false;
};

/// Sum of d_s over ordered pairs against sum over coordinates of f_s(p_i).
/// Each coordinate is shifted into [-s, s]; a coordinate spread above 2s
/// throws precondition-violated.
Decomposition distance_decomposition(const Code& code, int s);

}  // namespace lmlab
