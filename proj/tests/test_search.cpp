#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "lmlab/search.hpp"
#include "lmlab/text_format.hpp"
#include "oracles.hpp"

using namespace lmlab;

namespace {

std::vector<std::string> formatted(const std::vector<Lattice>& ls) {
    std::vector<std::string> out;
    for (const auto& l : ls) out.push_back(format_lattice(l));
    return out;
}

}  // namespace

TEST_CASE("sublattice enumeration") {
    CHECK(formatted(enumerate_sublattices(2, 5)) ==
          std::vector<std::string>{"1,0;0,5", "1,1;0,5", "1,2;0,5", "1,3;0,5", "1,4;0,5", "5,0;0,1"});
    CHECK(formatted(enumerate_sublattices(1, 9)) == std::vector<std::string>{"9"});
    CHECK(formatted(enumerate_sublattices(2, 1)) == std::vector<std::string>{"1,0;0,1"});
    // sigma(12); and sum of d2 d3^2 over d1 d2 d3 = 4
    CHECK(enumerate_sublattices(2, 12).size() == 28);
    CHECK(enumerate_sublattices(3, 4).size() == 35);
    CHECK(enumerate_sublattices(4, 2).size() == 15);
    for (const auto& l : enumerate_sublattices(3, 6)) CHECK(l.det_abs() == 6);
    CHECK_THROWS_AS(enumerate_sublattices(5, 2), Error);
    Limits tight;
    tight.sublattice_index = 10;
    CHECK_THROWS_AS(enumerate_sublattices(2, 11, tight), Error);
}

TEST_CASE("perfect lattice search") {
    CHECK(formatted(search_perfect_lattices(BallParams::symmetric(2, 1, 1))) ==
          std::vector<std::string>{"1,2;0,5", "1,3;0,5"});
    auto cubes = formatted(search_perfect_lattices(BallParams::symmetric(2, 2, 1)));
    CHECK(std::find(cubes.begin(), cubes.end(), "3,0;0,3") != cubes.end());
    CHECK(formatted(search_perfect_lattices(BallParams::symmetric(1, 1, 3))) == std::vector<std::string>{"7"});
    CHECK(search_perfect_lattices(BallParams::symmetric(2, 1, 1), 4) ==
          search_perfect_lattices(BallParams::symmetric(2, 1, 1), 1));
}

TEST_CASE("search matches an independent scan of 2x2 generators") {
    // Every generator with small entries and |det| = |ball|, reduced to
    // Hermite form by the oracle and tested by pairwise differences.
    for (auto [e, kplus, kminus] : {std::tuple{1, 1, 1}, std::tuple{1, 1, 0}, std::tuple{1, 2, 1}, std::tuple{2, 1, 1}}) {
        const auto params = BallParams::make(2, e, kplus, kminus);
        const auto volume = static_cast<std::int64_t>(oracle::ball(2, e, kplus, kminus).size());
        std::set<oracle::Mat> want;
        for (std::int64_t a = -volume; a <= volume; ++a)
            for (std::int64_t b = -volume; b <= volume; ++b)
                for (std::int64_t c = -volume; c <= volume; ++c)
                    for (std::int64_t d = -volume; d <= volume; ++d) {
                        if (std::llabs(a * d - b * c) != volume) continue;
                        const oracle::Mat h = oracle::hnf2({{a, b}, {c, d}});
                        if (want.count(h)) continue;
                        if (oracle::lattice_verdict(h, 2, e, kplus, kminus) == "tiles") want.insert(h);
                    }
        std::set<oracle::Mat> got;
        for (const auto& l : search_perfect_lattices(params)) got.insert({l.row(0).coords(), l.row(1).coords()});
        CAPTURE(params);
        CHECK(got == want);
    }
}

TEST_CASE("lattice points in a box") {
    const Lattice cross = parse_lattice("1,2;2,-1");
    const auto pts = lattice_points_in_box(cross, 6);
    std::size_t brute = 0;
    const oracle::Mat g{{1, 2}, {2, -1}};
    for (int x = -6; x <= 6; ++x)
        for (int y = -6; y <= 6; ++y)
            if (oracle::in_lattice(g, {x, y})) ++brute;
    CHECK(pts.size() == brute);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    for (const auto& p : pts) CHECK(oracle::in_lattice(g, p.coords()));
}

TEST_CASE("window checks") {
    const auto params = BallParams::symmetric(2, 1, 1);
    const Lattice cross = parse_lattice("1,2;2,-1");
    const auto translates = window_translates(cross, params, 10);
    CHECK(verify_window_packing(translates, params, 10).ok);
    CHECK(verify_window_covering(translates, params, 10).ok);

    auto overlap = verify_window_packing({{0, 0}, {1, 0}}, params, 10);
    CHECK_FALSE(overlap.ok);
    REQUIRE(overlap.witness.has_value());
    CHECK(in_ball(*overlap.witness, params));
    CHECK(in_ball(*overlap.witness - IntVector{1, 0}, params));
    CHECK(verify_window_packing({{0, 0}}, params, 10).ok);
    CHECK_FALSE(verify_window_covering({{0, 0}}, params, 10).ok);

    const Lattice sheared = parse_lattice("1,2;0,7");
    const auto sparse = window_translates(sheared, params, 10);
    CHECK(verify_window_packing(sparse, params, 10).ok);
    CHECK_FALSE(verify_window_covering(sparse, params, 10).ok);
    CHECK_FALSE(verify_window_packing(window_translates(parse_lattice("7,0;0,1"), params, 10), params, 10).ok);
}

TEST_CASE("density estimates") {
    const auto params = BallParams::symmetric(2, 1, 1);
    const Lattice cross = parse_lattice("1,2;2,-1");
    const auto sandwich = tiling_density_sandwich(params, 10);
    const Rational est = estimate_density(cross, params, 10);
    CHECK(est >= sandwich.lower);
    CHECK(est <= sandwich.upper);
    CHECK(abs(est - 1) <= frac(1, 4));
    CHECK(abs(estimate_density(parse_lattice("1,2;0,7"), params, 20) - frac(5, 7)) <= frac(1, 20));
    CHECK(estimate_density(std::vector<IntVector>{}, params, 5) == 0);

    // The estimate tracks the exact density more closely as the window grows.
    for (const auto& l : search_perfect_lattices(BallParams::symmetric(3, 1, 1))) {
        const auto p3 = BallParams::symmetric(3, 1, 1);
        const Rational small = abs(estimate_density(l, p3, 5) - 1);
        const Rational large = abs(estimate_density(l, p3, 15) - 1);
        CHECK(large <= small);
        const auto s15 = tiling_density_sandwich(p3, 15);
        CHECK(estimate_density(l, p3, 15) >= s15.lower);
        CHECK(estimate_density(l, p3, 15) <= s15.upper);
    }
}
