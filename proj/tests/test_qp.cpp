#include <doctest.h>

#include <cmath>
#include <random>

#include "lmlab/qp.hpp"
#include "oracles.hpp"

using namespace lmlab;

TEST_CASE("f_s values") {
    CHECK(f_value(SymbolDistribution(1, {1, 1, 1})) == doctest::Approx(8));
    CHECK(f_value(SymbolDistribution(1, {0, 7, 0})) == doctest::Approx(0));
    CHECK(f_value(ExactDistribution(2, {2, 1, 6, 1, 2})) == 114);
    CHECK(f_value(CountDistribution(2, {2, 1, 6, 1, 2})) == 114);
    CHECK_THROWS_AS(SymbolDistribution(1, {1, 1}), Error);
    CHECK_THROWS_AS(SymbolDistribution(1, {1, -1, 1}), Error);
    const CountDistribution p(2, {3, 0, 1, 2, 0});
    CHECK(p.total() == 6);
    CHECK(p.nonzero_mass() == 5);
    CHECK(p.at(-2) == 3);
    CHECK(f_value(p.mirrored()) == f_value(p));
}

TEST_CASE("closed-form maxima") {
    const auto one = f_max_closed(1, 10, 4);
    CHECK(one.value == 64);
    CHECK(one.argmax.counts == std::vector<Rational>{2, 6, 2});
    const auto two = f_max_closed(2, 12, 6);
    CHECK(two.value == 114);
    CHECK(two.argmax.counts == std::vector<Rational>{2, 1, 6, 1, 2});
    const auto three = f_max_closed(3, 8, 4);
    CHECK(three.value == 52);
    CHECK(three.argmax.counts == std::vector<Rational>{1, 1, 0, 4, 0, 1, 1});
    CHECK_THROWS_AS(f_max_closed(4, 8, 4), Error);
    CHECK_THROWS_AS(f_max_closed(1, 4, 5), Error);
    for (int s = 1; s <= 3; ++s)
        for (int K = 1; K <= 12; ++K)
            for (int a = 0; a <= K; ++a) {
                const auto c = f_max_closed(s, K, Rational(a));
                CHECK(f_value(c.argmax) == c.value);
                CHECK(c.argmax.total() == K);
                CHECK(c.argmax.nonzero_mass() == a);
                CHECK(c.argmax.mirrored() == c.argmax);
            }
}

TEST_CASE("continuous oracle reproduces the closed forms") {
    CHECK(f_max_oracle_continuous(1, 10, 4, 60).value == doctest::Approx(64).epsilon(1e-9));
    CHECK(std::abs(f_max_oracle_continuous(2, 12, 6, 60).value - 114) <= 1e-3);
    CHECK(f_max_oracle_continuous(1, 9, 0, 60).value == 0);
    CHECK(std::abs(f_max_oracle_continuous(3, 8, 4, 30).value - 52) <= 1e-3 * 52);
    CHECK_THROWS_AS(f_max_oracle_continuous(1, 4, 5, 10), Error);
    CHECK_THROWS_AS(f_max_oracle_continuous(1, 4, 2, 0), Error);
}

TEST_CASE("oracle is deterministic across thread counts") {
    const auto a = f_max_oracle_continuous(2, 9, 5, 40, 1);
    const auto b = f_max_oracle_continuous(2, 9, 5, 40, 4);
    CHECK(a.value == b.value);
    CHECK(a.best == b.best);
}

TEST_CASE("mirrored optimum attains the same value") {
    for (int s = 1; s <= 3; ++s)
        for (int K : {3, 7, 12}) {
            const auto r = f_max_oracle_continuous(s, K, K * 0.6, default_resolution(s));
            CHECK(std::abs(f_value(r.best.mirrored()) - r.value) <= 1e-9 * (1 + r.value));
        }
}

TEST_CASE("integer counts never beat the closed form") {
    for (int s = 1; s <= 3; ++s)
        for (int K = 2; K <= 12; ++K)
            for (int a = 0; a <= K; ++a) {
                const auto integral = f_max_oracle_integer(s, K, a);
                CHECK(Rational(integral.value) <= f_max_closed(s, K, Rational(a)).value);
                CHECK(integral.best.total() == K);
                CHECK(integral.best.nonzero_mass() == a);
            }
    // the closed-form argmax is integral here, so it is attained
    CHECK(f_max_oracle_integer(2, 12, 6).value == 114);
    CHECK_THROWS_AS(f_max_oracle_integer(1, 13, 2), Error);
}

TEST_CASE("0/1 problem and its envelope") {
    const auto worked = f_max_oracle_binary(2, 5, 3);
    CHECK(worked.value == 22);
    CHECK(g_envelope(3, 5, 2) == frac(45, 2));
    CHECK(f_max_oracle_binary(1, 3, 2).value == 8);
    CHECK(f_max_oracle_binary(3, 6, 0).value == 0);
    CHECK_THROWS_AS(f_max_oracle_binary(2, 9, 5), Error);
    for (int s = 1; s <= 6; ++s) {
        CHECK(g_envelope(s, 7, s) == frac(-s * s, 2) + 14 * s - s);
        CHECK(g_envelope(0, 7, s) == 0);
        for (int K = 2; K <= 10; ++K)
            for (int a = 0; a <= std::min(2 * s, K); ++a)
                CHECK(Rational(f_max_oracle_binary(s, K, a).value) <= g_envelope(a, K, s));
    }
}

TEST_CASE("average distance bounds") {
    CHECK(avg_distance_bound(4, 1, 2, 1, AverageBound::first) == 5);
    CHECK(avg_distance_bound(3, 1, 4, 1, AverageBound::second) == frac(7, 2));
    try {
        avg_distance_bound(4, 1, 2, 1, AverageBound::second);
        FAIL("expected hypotheses-unmet");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::hypotheses_unmet);
    }
    CHECK_THROWS_AS(avg_distance_bound(4, 1, 1, 1, AverageBound::first), Error);
    const Rational limit = Rational(2 * 6) - frac(36, 2 * 20);
    Rational previous = avg_distance_bound(20, 5, 2, 1, AverageBound::first);
    for (int K : {10, 100, 1000}) {
        const Rational v = avg_distance_bound(20, 5, K, 1, AverageBound::first);
        CHECK(v < previous);
        CHECK(v > limit);
        previous = v;
    }
}

TEST_CASE("distance decomposition") {
    const auto worked = distance_decomposition(Code(2, {{1, 0}, {0, 1}, {-1, -1}}), 1);
    CHECK(worked.ordered_sum == 16);
    CHECK(worked.coordinate_sum == 16);
    CHECK(worked.equal);
    const auto single = distance_decomposition(Code(3, {{1, 2, 3}}), 1);
    CHECK(single.ordered_sum == 0);
    CHECK(single.equal);
    const auto pair = distance_decomposition(Code(2, {{1, 1}, {1, -1}}), 1);
    CHECK(pair.ordered_sum == 4);
    CHECK(pair.equal);
    try {
        distance_decomposition(Code(1, {{0}, {3}}), 1);
        FAIL("expected precondition-violated");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition_violated);
    }
    std::mt19937 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 4, s = 1 + trial % 3;
        std::uniform_int_distribution<int> coord(-s, s), size(1, 5);
        std::vector<IntVector> words;
        const int target = size(rng);
        for (int attempt = 0; attempt < 50 && static_cast<int>(words.size()) < target; ++attempt) {
            IntVector v(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = coord(rng);
            if (std::find(words.begin(), words.end(), v) == words.end()) words.push_back(v);
        }
        CHECK(distance_decomposition(Code(n, words), s).equal);
    }
}
