#include "lmlab/qp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

#include "lmlab/error.hpp"
#include "lmlab/parallel.hpp"

namespace lmlab {

template <class T>
BasicSymbolDistribution<T>::BasicSymbolDistribution(int s_, std::vector<T> counts_) : s(s_), counts(std::move(counts_)) {
    if (s < 1) throw Error(ErrorKind::invalid_s, "s must be at least 1");
    if (counts.size() != static_cast<std::size_t>(2 * s + 1))
        throw Error(ErrorKind::dimension_mismatch, "a symbol distribution needs 2s+1 counts");
    for (const auto& c : counts)
        if (c < 0) throw Error(ErrorKind::invalid_parameter, "symbol counts must be nonnegative");
}

template <class T>
T BasicSymbolDistribution<T>::total() const {
    T sum = 0;
    for (const auto& c : counts) sum += c;
    return sum;
}

template <class T>
BasicSymbolDistribution<T> BasicSymbolDistribution<T>::mirrored() const {
    BasicSymbolDistribution out = *this;
    std::reverse(out.counts.begin(), out.counts.end());
    return out;
}

template struct BasicSymbolDistribution<double>;
template struct BasicSymbolDistribution<Rational>;
template struct BasicSymbolDistribution<std::int64_t>;

namespace {

template <class R, class T>
R quadratic_form(const BasicSymbolDistribution<T>& p) {
    const DsMatrix d(p.s);
    R sum = 0;
    for (int i = 0; i < d.dim(); ++i)
        for (int j = 0; j < d.dim(); ++j) {
            const int w = d.entry(i, j);
            if (w == 0) continue;
            sum += R(p.counts[static_cast<std::size_t>(i)]) * R(p.counts[static_cast<std::size_t>(j)]) * w;
        }
    return sum;
}

void check_mass(int s, const Rational& K, const Rational& a) {
    if (s < 1) throw Error(ErrorKind::invalid_s, "s must be at least 1");
    if (a < 0 || a > K) throw Error(ErrorKind::invalid_parameter, "need 0 <= a <= K");
}

}  // namespace

double f_value(const SymbolDistribution& p) { return quadratic_form<double>(p); }
Rational f_value(const ExactDistribution& p) { return quadratic_form<Rational>(p); }
Integer f_value(const CountDistribution& p) { return quadratic_form<Integer>(p); }

ClosedFormMax f_max_closed(int s, const Rational& K, const Rational& a) {
    if (s < 1 || s > 3) throw Error(ErrorKind::invalid_s, "closed forms exist for s in {1, 2, 3}");
    check_mass(s, K, a);
    ClosedFormMax out;
    std::vector<Rational> counts;
    switch (s) {
        case 1:
            counts = {a / 2, K - a, a / 2};
            out.value = 2 * K * a - a * a;
            break;
        case 2:
            counts = {a / 3, a / 6, K - a, a / 6, a / 3};
            out.value = 2 * K * a - 5 * a * a / 6;
            break;
        default:
            counts = {a / 4, a / 4, Rational(0), K - a, Rational(0), a / 4, a / 4};
            out.value = 2 * K * a - 3 * a * a / 4;
            break;
    }
    for (auto& c : counts) c.canonicalize();
    out.value.canonicalize();
    out.argmax = ExactDistribution(s, std::move(counts));
    return out;
}

int default_resolution(int s) { return s <= 2 ? 60 : 30; }

namespace {

struct Candidate {
    double value = -1.0;
    std::vector<double> counts;

    bool beats(const Candidate& other) const {
        if (value != other.value) return value > other.value;
        return counts < other.counts;
    }
};

double form(const DsMatrix& d, const std::vector<double>& p) {
    double sum = 0.0;
    for (int i = 0; i < d.dim(); ++i)
        for (int j = 0; j < d.dim(); ++j) sum += p[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(j)] * d.entry(i, j);
    return sum;
}

// Pairwise exact line search between nonzero symbols i and j:
// f(p + t(e_j - e_i)) = f(p) + 2t(g_j - g_i) - 2t^2 D_ij with g = D p.
void ascend(const DsMatrix& d, std::vector<double>& p, int rounds) {
    const int dim = d.dim();
    const int zero = d.s();
    auto gradient = [&](int k) {
        double g = 0.0;
        for (int m = 0; m < dim; ++m) g += d.entry(k, m) * p[static_cast<std::size_t>(m)];
        return g;
    };
    for (int round = 0; round < rounds; ++round) {
        bool moved = false;
        for (int i = 0; i < dim; ++i) {
            if (i == zero) continue;
            for (int j = i + 1; j < dim; ++j) {
                if (j == zero) continue;
                const double slope = gradient(j) - gradient(i);
                double t = slope / (2.0 * d.entry(i, j));
                t = std::clamp(t, -p[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(i)]);
                const double gain = 2.0 * t * slope - 2.0 * t * t * d.entry(i, j);
                if (gain <= 1e-13 * (1.0 + std::abs(slope))) continue;
                p[static_cast<std::size_t>(i)] -= t;
                p[static_cast<std::size_t>(j)] += t;
                p[static_cast<std::size_t>(i)] = std::max(0.0, p[static_cast<std::size_t>(i)]);
                p[static_cast<std::size_t>(j)] = std::max(0.0, p[static_cast<std::size_t>(j)]);
                moved = true;
            }
        }
        if (!moved) break;
    }
}

}  // namespace

OracleResult f_max_oracle_continuous(int s, double K, double a, int resolution, unsigned threads, int ascent_rounds) {
    if (s < 1) throw Error(ErrorKind::invalid_s, "s must be at least 1");
    if (resolution <= 0) throw Error(ErrorKind::invalid_parameter, "resolution must be positive");
    if (!(a >= 0.0 && a <= K)) throw Error(ErrorKind::invalid_parameter, "need 0 <= a <= K");
    const DsMatrix d(s);
    const int dim = d.dim();
    const int parts = 2 * s;
    const double step = a / resolution;
    auto slot = [s](int part) { return static_cast<std::size_t>(part < s ? part : part + 1); };

    std::vector<Candidate> best(static_cast<std::size_t>(resolution) + 1);
    parallel_for(best.size(), threads, [&](std::size_t first) {
        std::vector<double> p(static_cast<std::size_t>(dim), 0.0);
        p[static_cast<std::size_t>(s)] = K - a;
        p[slot(0)] = static_cast<double>(first) * step;
        Candidate& local = best[first];
        std::function<void(int, int)> place = [&](int part, int left) {
            if (part == parts - 1) {
                p[slot(part)] = left * step;
                Candidate c{form(d, p), p};
                if (c.beats(local)) local = std::move(c);
                return;
            }
            for (int u = 0; u <= left; ++u) {
                p[slot(part)] = u * step;
                place(part + 1, left - u);
            }
        };
        if (parts == 1)
            local = Candidate{form(d, p), p};
        else
            place(1, resolution - static_cast<int>(first));
    });

    Candidate winner;
    for (auto& c : best)
        if (c.beats(winner)) winner = std::move(c);

    Candidate refined = winner;
    ascend(d, refined.counts, ascent_rounds);
    refined.value = form(d, refined.counts);
    if (refined.beats(winner)) winner = std::move(refined);
    return OracleResult{winner.value, SymbolDistribution(s, std::move(winner.counts))};
}

namespace {

void check_counts(int s, std::int64_t K, std::int64_t a) {
    if (s < 1) throw Error(ErrorKind::invalid_s, "s must be at least 1");
    if (a < 0 || a > K) throw Error(ErrorKind::invalid_parameter, "need 0 <= a <= K");
}

void consider(IntegerMax& best, bool& found, int s, const std::vector<std::int64_t>& counts) {
    CountDistribution p(s, counts);
    Integer v = f_value(p);
    if (!found || v > best.value || (v == best.value && p.counts < best.best.counts)) {
        best.value = v;
        best.best = std::move(p);
        found = true;
    }
}

}  // namespace

IntegerMax f_max_oracle_integer(int s, std::int64_t K, std::int64_t a) {
    check_counts(s, K, a);
    if (K > 12) throw Error(ErrorKind::parameter_out_of_range, "integer mode is exhaustive and limited to K <= 12");
    const int dim = 2 * s + 1;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(dim), 0);
    counts[static_cast<std::size_t>(s)] = K - a;
    IntegerMax best;
    bool found = false;
    std::vector<int> slots;
    for (int i = 0; i < dim; ++i)
        if (i != s) slots.push_back(i);
    std::function<void(std::size_t, std::int64_t)> place = [&](std::size_t k, std::int64_t left) {
        if (k + 1 == slots.size()) {
            counts[static_cast<std::size_t>(slots[k])] = left;
            consider(best, found, s, counts);
            return;
        }
        for (std::int64_t u = 0; u <= left; ++u) {
            counts[static_cast<std::size_t>(slots[k])] = u;
            place(k + 1, left - u);
        }
    };
    place(0, a);
    return best;
}

IntegerMax f_max_oracle_binary(int s, std::int64_t K, std::int64_t a) {
    check_counts(s, K, a);
    if (a > 2 * s) throw Error(ErrorKind::parameter_out_of_range, "a 0/1 assignment has at most 2s nonzero symbols");
    const int dim = 2 * s + 1;
    IntegerMax best;
    bool found = false;
    for (unsigned mask = 0; mask < (1u << (2 * s)); ++mask) {
        if (std::popcount(mask) != a) continue;
        std::vector<std::int64_t> counts(static_cast<std::size_t>(dim), 0);
        counts[static_cast<std::size_t>(s)] = K - a;
        for (int bit = 0; bit < 2 * s; ++bit)
            if (mask >> bit & 1u) counts[static_cast<std::size_t>(bit < s ? bit : bit + 1)] = 1;
        consider(best, found, s, counts);
    }
    return best;
}

Rational g_envelope(const Rational& x, std::int64_t K, int s) {
    if (K < 1 || s < 1) throw Error(ErrorKind::invalid_parameter, "need K >= 1 and s >= 1");
    const Rational k(Integer(std::to_string(K)));
    Rational out;
    if (x >= s)
        out = Rational(-3, 2) * x * x + 2 * (k + s) * x - s * s - s;
    else
        out = Rational(-1, 2) * x * x + (2 * k - 1) * x;
    out.canonicalize();
    return out;
}

Rational avg_distance_bound(std::int64_t n, std::int64_t e, std::int64_t K, int s, AverageBound variant) {
    if (K < 2) throw Error(ErrorKind::invalid_parameter, "need at least two codewords");
    if (n < 1 || e < 0 || s < 1) throw Error(ErrorKind::invalid_parameter, "need n >= 1, e >= 0, s >= 1");
    const Rational N(Integer(std::to_string(n))), k(Integer(std::to_string(K)));
    const Rational r = Rational(Integer(std::to_string(e))) + 1;
    Rational out;
    if (variant == AverageBound::first) {
        out = (2 * k - 1) * r / (k - 1) - k * r * r / (2 * (k - 1) * N);
    } else {
        if (!(3 * k * r > (3 * s + 1) * N))
            throw Error(ErrorKind::hypotheses_unmet, "second bound needs 3K(e+1) > (3s+1)n");
        out = 2 * (k + s) * r / (k - 1) - 3 * k * r * r / (2 * (k - 1) * N) - N * (s * s + s) / (k * (k - 1));
    }
    out.canonicalize();
    return out;
}

Decomposition distance_decomposition(const Code& code, int s) {
    if (s < 1) throw Error(ErrorKind::invalid_s, "s must be at least 1");
    const auto& words = code.words();
    Decomposition out;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j)
            if (i != j) out.ordered_sum += ds_distance(words[i], words[j], s);
    for (int coord = 0; coord < code.n(); ++coord) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(2 * s + 1), 0);
        if (!words.empty()) {
            auto [lo, hi] = std::minmax_element(words.begin(), words.end(), [coord](const auto& x, const auto& y) {
                return x[static_cast<std::size_t>(coord)] < y[static_cast<std::size_t>(coord)];
            });
            const std::int64_t min = (*lo)[static_cast<std::size_t>(coord)];
            if ((*hi)[static_cast<std::size_t>(coord)] - min > 2 * s)
                throw Error(ErrorKind::precondition_violated,
                            "coordinate " + std::to_string(coord) + " spreads beyond 2s");
            for (const auto& w : words) ++counts[static_cast<std::size_t>(w[static_cast<std::size_t>(coord)] - min)];
        }
        out.coordinate_sum += f_value(CountDistribution(s, std::move(counts)));
    }
    out.equal = out.ordered_sum == out.coordinate_sum;
    return out;
}

}  // namespace lmlab
