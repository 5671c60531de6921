#include "lmlab/search.hpp"

#include <set>
#include <unordered_set>

#include "lmlab/parallel.hpp"

namespace lmlab {

namespace {

constexpr int kMaxSearchDimension = 4;

void diagonals(int n, long index, std::vector<long>& prefix, std::vector<std::vector<long>>& out) {
    if (static_cast<int>(prefix.size()) == n - 1) {
        prefix.push_back(index);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (long d = 1; d <= index; ++d) {
        if (index % d) continue;
        prefix.push_back(d);
        diagonals(n, index / d, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_sublattice(int n, const Integer& index, const std::function<void(const Lattice&)>& visit,
                         const Limits& limits) {
    if (n < 1 || n > kMaxSearchDimension)
        throw Error(ErrorKind::invalid_parameter, "sublattice enumeration supports 1 <= n <= 4");
    if (index < 1) throw Error(ErrorKind::invalid_parameter, "index must be positive");
    if (index > Integer(std::to_string(limits.sublattice_index)))
        throw Error(ErrorKind::cap_exceeded,
                    "index " + index.get_str() + " exceeds cap " + std::to_string(limits.sublattice_index));
    const long m = index.get_si();

    std::vector<std::vector<long>> diags;
    std::vector<long> prefix;
    diagonals(n, m, prefix, diags);

    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

    for (const auto& diag : diags) {
        std::vector<long> off(slots.size(), 0);
        for (;;) {
            std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n),
                                                        std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
            for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = diag[static_cast<std::size_t>(i)];
            for (std::size_t k = 0; k < slots.size(); ++k)
                rows[static_cast<std::size_t>(slots[k].first)][static_cast<std::size_t>(slots[k].second)] = off[k];
            visit(Lattice::from_rows(rows));

            bool advanced = false;
            for (std::size_t k = slots.size(); k-- > 0;) {
                if (++off[k] < diag[static_cast<std::size_t>(slots[k].second)]) {
                    advanced = true;
                    break;
                }
                off[k] = 0;
            }
            if (!advanced) break;
        }
    }
}

std::vector<Lattice> enumerate_sublattices(int n, const Integer& index, const Limits& limits) {
    std::vector<Lattice> out;
    for_each_sublattice(n, index, [&](const Lattice& l) { out.push_back(l); }, limits);
    return out;
}

std::vector<Lattice> search_perfect_lattices(const BallParams& params, unsigned threads, const Limits& limits) {
    const auto candidates = enumerate_sublattices(params.n, ball_volume(params), limits);
    std::vector<char> tiles(candidates.size(), 0);
    parallel_for(candidates.size(), threads, [&](std::size_t i) {
        tiles[i] = verify_lattice_tiling(candidates[i], params, limits).verdict == Verdict::tiles;
    });
    std::vector<Lattice> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (tiles[i]) out.push_back(candidates[i]);
    return out;
}

std::vector<IntVector> lattice_points_in_box(const Lattice& lattice, std::int64_t radius, const Limits& limits) {
    if (radius < 0) throw Error(ErrorKind::invalid_parameter, "radius must be nonnegative");
    const auto n = static_cast<std::size_t>(lattice.n());
    const IntMatrix& g = lattice.generator();

    // Gauss-Jordan inverse over the rationals.
    std::vector<std::vector<Rational>> work(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work[i][j] = g(i, j);
        work[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (work[p][c] == 0) ++p;
        std::swap(work[p], work[c]);
        Rational pivot = work[c][c];
        for (auto& x : work[c]) x /= pivot;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || work[r][c] == 0) continue;
            Rational f = work[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j) work[r][j] -= f * work[c][j];
        }
    }
    // y = x G^{-1}; |y_k| <= radius * sum_j |inv(j, k)|
    std::vector<std::int64_t> bound(n);
    Integer combos = 1;
    for (std::size_t k = 0; k < n; ++k) {
        Rational total = 0;
        for (std::size_t j = 0; j < n; ++j) total += abs(work[j][n + k]);
        total *= radius;
        Integer b;
        mpz_fdiv_q(b.get_mpz_t(), total.get_num_mpz_t(), total.get_den_mpz_t());
        bound[k] = to_int64(b);
        combos *= 2 * b + 1;
    }
    if (combos > Integer(std::to_string(limits.enumeration)))
        throw Error(ErrorKind::cap_exceeded, "lattice point search needs " + combos.get_str() + " combinations");

    std::vector<std::vector<std::int64_t>> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = lattice.row(i).coords();

    std::vector<IntVector> out;
    std::vector<std::int64_t> y(n);
    for (std::size_t k = 0; k < n; ++k) y[k] = -bound[k];
    for (;;) {
        IntVector x(n);
        for (std::size_t k = 0; k < n; ++k)
            if (y[k] != 0)
                for (std::size_t j = 0; j < n; ++j) x[j] += y[k] * rows[k][j];
        if (x.in_box(radius)) out.push_back(std::move(x));
        std::size_t k = n;
        while (k > 0 && y[k - 1] == bound[k - 1]) {
            y[k - 1] = -bound[k - 1];
            --k;
        }
        if (k == 0) break;
        ++y[k - 1];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVector> window_translates(const Lattice& lattice, const BallParams& params, std::int64_t window,
                                         const Limits& limits) {
    return lattice_points_in_box(lattice, window + std::max(params.kplus, params.kminus), limits);
}

namespace {

void check_cells(std::size_t translates, const BallParams& params, const Limits& limits) {
    Integer cells = ball_volume(params) * static_cast<unsigned long>(translates);
    if (cells > Integer(std::to_string(limits.enumeration)))
        throw Error(ErrorKind::cap_exceeded, "window check needs " + cells.get_str() + " cells");
}

}  // namespace

WindowCheck verify_window_packing(const std::vector<IntVector>& translates, const BallParams& params,
                                  std::int64_t window, const Limits& limits) {
    check_cells(translates.size(), params, limits);
    const auto ball = enumerate_ball(params, limits.enumeration);
    std::unordered_set<IntVector, IntVectorHash> covered;
    for (const auto& t : translates) {
        if (t.size() != static_cast<std::size_t>(params.n))
            throw Error(ErrorKind::dimension_mismatch, "translate " + t.to_string() + " has wrong length");
        for (const auto& v : ball) {
            IntVector cell = t + v;
            if (!cell.in_box(window)) continue;
            if (!covered.insert(cell).second) return {false, cell};
        }
    }
    return {};
}

WindowCheck verify_window_covering(const std::vector<IntVector>& translates, const BallParams& params,
                                   std::int64_t window, const Limits& limits) {
    check_cells(translates.size(), params, limits);
    Integer box = ipow(2 * window + 1, static_cast<unsigned long>(params.n));
    if (box > Integer(std::to_string(limits.enumeration)))
        throw Error(ErrorKind::cap_exceeded, "window has " + box.get_str() + " cells");
    const auto ball = enumerate_ball(params, limits.enumeration);
    std::unordered_set<IntVector, IntVectorHash> covered;
    for (const auto& t : translates)
        for (const auto& v : ball) {
            IntVector cell = t + v;
            if (cell.in_box(window)) covered.insert(std::move(cell));
        }
    IntVector cell(static_cast<std::size_t>(params.n));
    for (std::size_t i = 0; i < cell.size(); ++i) cell[i] = -window;
    for (;;) {
        if (!covered.count(cell)) return {false, cell};
        std::size_t k = cell.size();
        while (k > 0 && cell[k - 1] == window) cell[--k] = -window;
        if (k == 0) break;
        ++cell[k - 1];
    }
    return {};
}

Rational estimate_density(const std::vector<IntVector>& translates, const BallParams& params, std::int64_t window) {
    if (window < 0) throw Error(ErrorKind::invalid_parameter, "window must be nonnegative");
    std::set<IntVector> inside;
    for (const auto& t : translates)
        if (t.in_box(window)) inside.insert(t);
    Rational out(ball_volume(params) * static_cast<unsigned long>(inside.size()),
                 ipow(2 * window + 1, static_cast<unsigned long>(params.n)));
    out.canonicalize();
    return out;
}

Rational estimate_density(const Lattice& lattice, const BallParams& params, std::int64_t window,
                          const Limits& limits) {
    if (lattice.n() != params.n) throw Error(ErrorKind::dimension_mismatch, "lattice and ball dimensions differ");
    return estimate_density(lattice_points_in_box(lattice, window, limits), params, window);
}

DensitySandwich tiling_density_sandwich(const BallParams& params, std::int64_t window) {
    const std::int64_t r = std::max(params.kplus, params.kminus);
    const auto n = static_cast<unsigned long>(params.n);
    Integer whole = ipow(2 * window + 1, n);
    Integer inner = 2 * window - 2 * r + 1 > 0 ? ipow(2 * window - 2 * r + 1, n) : Integer(0);
    DensitySandwich out{Rational(inner, whole), Rational(ipow(2 * window + 2 * r + 1, n), whole)};
    out.lower.canonicalize();
    out.upper.canonicalize();
    return out;
}

}  // namespace lmlab
