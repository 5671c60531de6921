// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lmlab/bounds.hpp"
#include "lmlab/lattice.hpp"
#include "lmlab/metric.hpp"
#include "lmlab/parallel.hpp"
#include "lmlab/qp.hpp"
#include "lmlab/search.hpp"
#include "lmlab/text_format.hpp"
#include "oracles.hpp"

using namespace lmlab;

namespace {

struct Check {
    std::ostringstream failures;
    int count = 0;

    void expect(bool ok, const std::string& what) {
        if (!ok && count++ < 5) failures << (count > 1 ? "; " : "") << what;
    }
};

bool gate(int id, const std::string& title, double limit_seconds, const std::function<void(Check&)>& body) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception& ex) {
        check.expect(false, std::string("exception: ") + ex.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(seconds < limit_seconds, "runtime over " + std::to_string(limit_seconds) + " s");
    const bool ok = check.count == 0;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << id << "  " << title << "  ("
              << std::fixed << std::setprecision(2) << seconds << " s)";
    if (!ok) std::cout << "  -- " << check.failures.str() << (check.count > 5 ? " ..." : "");
    std::cout << '\n';
    return ok;
}

std::string triple(std::int64_t a, std::int64_t b, std::int64_t c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

Lattice diagonal(int n, std::int64_t d) {
    std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n), std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = d;
    return Lattice::from_rows(rows);
}

oracle::Mat rows_of(const Lattice& l) {
    oracle::Mat m;
    for (int i = 0; i < l.n(); ++i) m.push_back(l.row(static_cast<std::size_t>(i)).coords());
    return m;
}

void table_reproduction(Check& c) {
    struct Row { int s; Rational eps; std::int64_t n; std::string coef; };
    const std::vector<Row> rows{{1, frac(1, 10), 641, "6.84"},  {1, frac(1, 15), 1591, "9.92"},
                                {1, frac(1, 20), 3041, "13.01"}, {2, frac(1, 10), 501, "6.12"},
                                {2, frac(1, 15), 1201, "8.80"},  {2, frac(1, 20), 2241, "11.46"}};
    for (const auto& row : rows) {
        const auto got = table_row(row.s, row.eps);
        const std::string coef = to_decimal(got.coefficient, 2);
        c.expect(got.min_n == row.n && coef == row.coef,
                 "s=" + std::to_string(row.s) + " eps=" + to_string(row.eps) + " gave (" + std::to_string(got.min_n) +
                     ", " + coef + ")");
    }
}

void equivalence(Check& c) {
    for (int n = 1; n <= 3; ++n)
        for (int t = 0; t <= std::min(n, 2); ++t)
            for (int s = 1; s <= 2; ++s)
                c.expect(difference_set_equivalence(n, t, s).equal, "sets differ at " + triple(n, t, s));
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<int> pick_n(1, 3), pick_s(1, 2), pick_words(1, 4);
        const int n = pick_n(rng), s = pick_s(rng);
        std::uniform_int_distribution<int> coord(-3 * s, 3 * s), pick_e(0, n);
        std::vector<IntVector> words;
        const int target = pick_words(rng);
        while (static_cast<int>(words.size()) < target) {
            IntVector v(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = coord(rng);
            if (std::find(words.begin(), words.end(), v) == words.end()) words.push_back(v);
        }
        const Code code(n, words);
        const int e = pick_e(rng);
        c.expect(is_e_correcting(code, e, s, CorrectionMethod::distance) ==
                     is_e_correcting(code, e, s, CorrectionMethod::disjointness),
                 "methods disagree on trial " + std::to_string(trial));
    }
}

void qp_closed_forms(Check& c) {
    const unsigned threads = thread_count();
    for (int s = 1; s <= 3; ++s)
        for (int K = 2; K <= 12; ++K)
            for (int a = 0; a <= K; ++a) {
                const double closed = f_max_closed(s, K, Rational(a)).value.get_d();
                const double found = f_max_oracle_continuous(s, K, a, default_resolution(s), threads).value;
                const bool dominated = found <= closed + 1e-6;
                const bool attained = closed == 0.0 ? std::abs(found) <= 1e-9 : (closed - found) / closed <= 1e-3;
                c.expect(dominated && attained, "s,K,a=" + triple(s, K, a) + " oracle " + std::to_string(found) +
                                                    " vs " + std::to_string(closed));
            }
}

void binary_envelope(Check& c) {
    for (int s = 1; s <= 6; ++s)
        for (int K = 2; K <= 10; ++K)
            for (int a = 0; a <= std::min(2 * s, K); ++a)
                c.expect(Rational(f_max_oracle_binary(s, K, a).value) <= g_envelope(a, K, s),
                         "envelope broken at " + triple(s, K, a));
    const auto worked = f_max_oracle_binary(2, 5, 3);
    c.expect(worked.value == 22, "worked binary maximum is " + worked.value.get_str());
    c.expect(g_envelope(3, 5, 2) == frac(45, 2), "g(3) for K=5, s=2 is " + to_string(g_envelope(3, 5, 2)));
}

void tiling_goldens(Check& c) {
    const auto cross_ball = BallParams::symmetric(2, 1, 1);
    const Lattice cross = parse_lattice("1,2;2,-1");
    c.expect(verify_lattice_tiling(cross, cross_ball).verdict == Verdict::tiles, "cross does not tile");
    c.expect(oracle::lattice_verdict(rows_of(cross), 2, 1, 1, 1) == "tiles", "oracle: cross does not tile");
    for (int n = 1; n <= 4; ++n)
        for (int s = 1; s <= 2; ++s) {
            const Lattice cube = diagonal(n, 2 * s + 1);
            c.expect(verify_lattice_tiling(cube, BallParams::symmetric(n, n, s)).verdict == Verdict::tiles,
                     "hypercube n=" + std::to_string(n) + " s=" + std::to_string(s));
            c.expect(oracle::lattice_verdict(rows_of(cube), n, n, s, s) == "tiles", "oracle: hypercube");
        }
    // diag(7,1) contains (0,1), so the cross balls at (0,0) and (0,1)
    // intersect: it is not a packing. The density 5/7 is |ball| / |det|.
    const Lattice seven = parse_lattice("7,0;0,1");
    const auto v7 = verify_lattice_tiling(seven, cross_ball);
    c.expect(v7.verdict != Verdict::tiles, "diag(7,1) tiles");
    c.expect(v7.verdict == Verdict::fails && v7.witness && v7.witness->first - v7.witness->second == IntVector{0, 1},
             "diag(7,1) should fail with difference (0,1)");
    c.expect(oracle::lattice_verdict(rows_of(seven), 2, 1, 1, 1) == "fails", "oracle: diag(7,1)");
    c.expect(lattice_density(seven, cross_ball) == frac(5, 7), "diag(7,1) density");
    // An index-7 lattice that does pack the cross without tiling.
    const Lattice sheared = parse_lattice("1,2;0,7");
    c.expect(verify_lattice_tiling(sheared, cross_ball).verdict == Verdict::packs, "(1,2;0,7) should pack only");
    c.expect(oracle::lattice_verdict(rows_of(sheared), 2, 1, 1, 1) == "packs", "oracle: (1,2;0,7)");
    c.expect(lattice_density(sheared, cross_ball) == frac(5, 7), "(1,2;0,7) density");
}

void search_regression(Check& c) {
    const auto params = BallParams::symmetric(2, 1, 1);
    const auto found = search_perfect_lattices(params, thread_count());
    std::vector<std::string> names;
    for (const auto& l : found) names.push_back(format_lattice(l));
    c.expect(names == std::vector<std::string>{"1,2;0,5", "1,3;0,5"}, "unexpected search output");
    for (const auto& l : found) {
        const auto translates = window_translates(l, params, 12);
        c.expect(verify_window_packing(translates, params, 12).ok, format_lattice(l) + " overlaps in window");
        c.expect(verify_window_covering(translates, params, 12).ok, format_lattice(l) + " leaves a gap in window");
    }
}

void ratio_bound(Check& c) {
    // volumes[n][e][s] from the oracle's own sum
    std::vector<std::vector<std::vector<Integer>>> volumes(61, std::vector<std::vector<Integer>>(61, std::vector<Integer>(6)));
    for (int n = 1; n <= 60; ++n)
        for (int e = 0; e <= n; ++e)
            for (int s = 1; s <= 5; ++s) volumes[n][e][s] = oracle::volume(n, e, s);
    std::int64_t compared = 0;
    for (int n = 1; n <= 60; ++n)
        for (int s = 1; s <= 5; ++s)
            for (int e = 0; e <= n; ++e)
                for (int r = 1; e + r <= n; ++r) {
                    const bool valid = r == 1 ? e < n - 1 : e + r < n - 1;
                    if (!valid) continue;
                    const Rational exact = Rational(volumes[n][e + r][s]) / volumes[n][e][s];
                    c.expect(exact >= volume_ratio_bound(n, e, r, s),
                             "n,e,s=" + triple(n, e, s) + " r=" + std::to_string(r));
                    ++compared;
                }
    c.expect(compared > 100000, "grid too small: " + std::to_string(compared));
}

void classifier(Check& c) {
    auto status = [](const CriterionOutcome& o) { return to_string(o.status); };
    c.expect(bound_large_s(100, 40, 4).status == Status::excludes, "(100,40,4) " + status(bound_large_s(100, 40, 4)));
    c.expect(bound_large_s(100, 35, 4).status == Status::silent, "(100,35,4) " + status(bound_large_s(100, 35, 4)));
    c.expect(25 * 40 * 40 >= 309 * 100 && 25 * 35 * 35 < 309 * 100, "integer oracle");
    c.expect(bound_small_s(1000, 200, 1).status == Status::excludes, "(1000,200,1)");
    c.expect(bound_small_s(1000, 100, 1).status == Status::silent, "(1000,100,1)");
    c.expect(bound_small_s(1000, 495, 1).status == Status::silent, "(1000,495,1)");
    c.expect(classify(100, 40, 4).verdict == ExistenceVerdict::excluded, "classify(100,40,4)");
    for (const auto& t : known_tilings()) {
        c.expect(verify_lattice_tiling(parse_lattice(t.generator), t.params).verdict == Verdict::tiles,
                 "bundled tiling " + t.generator + " fails verification");
        c.expect(classify(t.params.n, t.params.e, t.params.s()).verdict != ExistenceVerdict::excluded,
                 "bundled tiling " + t.generator + " classified excluded");
    }
    for (int n = 1; n <= 4; ++n)
        for (int s = 1; s <= 2; ++s)
            c.expect(classify(n, n, s).verdict != ExistenceVerdict::excluded, "hypercube excluded");
    for (int n = 1; n <= 3; ++n)
        for (int e = 1; e <= n; ++e)
            for (int s = 1; s <= 2; ++s)
                if (!search_perfect_lattices(BallParams::symmetric(n, e, s), thread_count()).empty())
                    c.expect(classify(n, e, s).verdict != ExistenceVerdict::excluded,
                             "searched tiling excluded at " + triple(n, e, s));
}

void density_bound(Check& c) {
    // n e (e+1) / (((e+1)^2 - 2n) s (n-e)) = 100*50*51 / (2401*4*50)
    const auto a = packing_density_bound(100, 50, 4);
    c.expect(a.applicable && a.value == frac(255000, 480200) && !a.vacuous,
             "(100,50,4) gave " + to_string(a.value));
    c.expect(std::abs(a.value.get_d() - 0.5310) < 1e-3, "(100,50,4) decimal value");
    c.expect(!packing_density_bound(100, 10, 2).applicable, "(100,10,2) applicable");
    const auto b = packing_density_bound(100, 50, 2);
    c.expect(b.applicable && b.vacuous, "(100,50,2) not flagged vacuous");
    const Rational limit = density_bound_asymptotic(DensityRegime::linear, frac(1, 2), 4);
    Rational previous = -1;
    for (std::int64_t n : {100, 1000, 10000}) {
        const Rational gap = abs(packing_density_bound(n, n / 2, 4).value - limit);
        if (previous >= 0) c.expect(gap < previous, "gap did not shrink at n=" + std::to_string(n));
        previous = gap;
    }
}

void decomposition(Check& c) {
    const auto worked = distance_decomposition(Code(2, {{1, 0}, {0, 1}, {-1, -1}}), 1);
    c.expect(worked.equal && worked.ordered_sum == 16, "worked code gave " + worked.ordered_sum.get_str());
    std::mt19937 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> pick_n(1, 4), pick_s(1, 3), pick_words(1, 5);
        const int n = pick_n(rng), s = pick_s(rng);
        std::uniform_int_distribution<int> coord(-s, s);
        std::vector<IntVector> words;
        const int target = pick_words(rng);
        for (int attempt = 0; attempt < 100 && static_cast<int>(words.size()) < target; ++attempt) {
            IntVector v(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = coord(rng);
            if (std::find(words.begin(), words.end(), v) == words.end()) words.push_back(v);
        }
        c.expect(distance_decomposition(Code(n, words), s).equal, "identity fails on trial " + std::to_string(trial));
    }
}

}  // namespace

int main() {
    bool ok = true;
    ok &= gate(1, "[PRIMARY] table rows reproduced exactly", 1, table_reproduction);
    ok &= gate(2, "[PRIMARY] difference-set equivalence and method agreement", 120, equivalence);
    ok &= gate(3, "[PRIMARY] f_s closed forms match the grid oracle", 300, qp_closed_forms);
    ok &= gate(4, "[PRIMARY] 0/1 maximum below the g envelope", 60, binary_envelope);
    ok &= gate(5, "[PRIMARY] tiling verification goldens", 10, tiling_goldens);
    ok &= gate(6, "[PRIMARY] exhaustive search regression with window check", 30, search_regression);
    ok &= gate(7, "[PRIMARY] volume ratio bound over n <= 60, s <= 5", 120, ratio_bound);
    ok &= gate(8, "[PRIMARY] classifier spot checks and soundness", 10, classifier);
    ok &= gate(9, "[PRIMARY] packing density bound", 5, density_bound);
    ok &= gate(10, "[PRIMARY] distance decomposition identity", 30, decomposition);
    return ok ? 0 : 1;
}
