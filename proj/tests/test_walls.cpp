#include <doctest.h>

#include "upq/milnor_wood.hpp"
#include "upq/oracle.hpp"
#include "upq/slope.hpp"
#include "upq/walls.hpp"

#include <algorithm>
#include <stdexcept>

using namespace upq;

namespace {

using W = WallWitness;

AlphaInterval interval(Rational lo, Rational hi) { return AlphaInterval{std::move(lo), std::move(hi)}; }

}  // namespace

TEST_CASE("wall_alpha solves the slope equation") {
    const HitchinPairType t{1, 1, 1, 0};
    // 1 + alpha = 1/2 + alpha/2
    CHECK(wall_alpha(t, W{1, 0, 1}) == Rational(-1));
    // 0 = 1/2 + alpha/2
    CHECK(wall_alpha(t, W{0, 1, 0}) == Rational(-1));

    const HitchinPairType balanced{2, 2, 1, 0};
    for (std::int64_t d = -5; d <= 5; ++d) CHECK_FALSE(wall_alpha(balanced, W{1, 1, d}).has_value());

    CHECK_THROWS_AS(wall_alpha(t, W{1, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(wall_alpha(t, W{0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(wall_alpha(t, W{2, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(wall_alpha(t, W{-1, 1, 0}), std::invalid_argument);
}

TEST_CASE("enumerate_walls on hand-solved instances") {
    // Expected values cross-checked with an independent fractions-based scan.
    auto walls = enumerate_walls(HitchinPairType{1, 1, 1, 0}, interval(-2, 2));
    REQUIRE(walls.size() == 2);
    CHECK(walls[0] == Wall{Rational(-1), {W{0, 1, 0}, W{1, 0, 1}}});
    CHECK(walls[1] == Wall{Rational(1), {W{0, 1, 1}, W{1, 0, 0}}});

    walls = enumerate_walls(HitchinPairType{1, 1, 0, 0}, interval(Rational(-1, 2), Rational(1, 2)));
    REQUIRE(walls.size() == 1);
    CHECK(walls[0] == Wall{Rational(0), {W{0, 1, 0}, W{1, 0, 0}}});

    walls = enumerate_walls(HitchinPairType{2, 1, 1, 0}, interval(0, 1));
    REQUIRE(walls.size() == 1);
    CHECK(walls[0] == Wall{Rational(1), {W{0, 1, 1}, W{1, 0, 0}, W{1, 1, 1}, W{2, 0, 0}}});

    walls = enumerate_walls(HitchinPairType{1, 2, 0, 1}, interval(-3, 3));
    REQUIRE(walls.size() == 4);
    CHECK(walls[0] == Wall{Rational(-5, 2), {W{0, 2, -1}, W{1, 0, 2}}});
    CHECK(walls[1] == Wall{Rational(-1), {W{0, 1, 0}, W{0, 2, 0}, W{1, 0, 1}, W{1, 1, 1}}});
    CHECK(walls[2] == Wall{Rational(1, 2), {W{0, 2, 1}, W{1, 0, 0}}});
    CHECK(walls[3] == Wall{Rational(2), {W{0, 1, 1}, W{0, 2, 2}, W{1, 0, -1}, W{1, 1, 0}}});
}

TEST_CASE("degenerate and boundary intervals") {
    const HitchinPairType t{1, 1, 1, 0};
    CHECK(enumerate_walls(t, interval(Rational(1, 3), Rational(1, 3))).empty());
    // closed ends include walls sitting exactly on them
    auto walls = enumerate_walls(t, interval(-1, 1));
    REQUIRE(walls.size() == 2);
    walls = enumerate_walls(t, interval(1, 1));
    REQUIRE(walls.size() == 1);
    CHECK(walls[0].alpha == Rational(1));
    CHECK_THROWS_AS(enumerate_walls(t, interval(1, 0)), std::invalid_argument);
}

TEST_CASE("walls are exact and strictly crossed") {
    const Rational eps(1, 1000);
    for (std::int64_t p = 1; p <= 3; ++p) {
        for (std::int64_t q = 1; q <= 3; ++q) {
            for (std::int64_t a = -2; a <= 2; ++a) {
                const HitchinPairType t{p, q, a, 1};
                const auto whole = as_quiver_type(t);
                for (const auto& wall : enumerate_walls(t, interval(-4, 4))) {
                    CHECK_FALSE(wall.witnesses.empty());
                    for (const auto& w : wall.witnesses) {
                        const auto sub = witness_quiver_type(w);
                        CHECK(alpha_slope(sub, upq_parameter(wall.alpha)) ==
                              alpha_slope(whole, upq_parameter(wall.alpha)));
                        const int before = compare_at(sub, whole, upq_parameter(wall.alpha - eps));
                        const int after = compare_at(sub, whole, upq_parameter(wall.alpha + eps));
                        CHECK(before != 0);
                        CHECK(before == -after);
                    }
                }
            }
        }
    }
}

TEST_CASE("quotient sub-types give the same walls") {
    // The complement (p - p', q - q', D - d') of a witness is itself a witness.
    const HitchinPairType t{3, 2, 2, -1};
    for (const auto& wall : enumerate_walls(t, interval(-5, 5))) {
        for (const auto& w : wall.witnesses) {
            const W complement{t.p - w.p_sub, t.q - w.q_sub, t.degree() - w.d_sub};
            CHECK(wall_alpha(t, complement) == wall.alpha);
            CHECK(std::binary_search(wall.witnesses.begin(), wall.witnesses.end(), complement));
        }
    }
}

TEST_CASE("thread count does not change the result") {
    const HitchinPairType t{3, 4, 2, -3};
    WallOptions serial;
    serial.threads = 1;
    WallOptions parallel;
    parallel.threads = 4;
    CHECK(enumerate_walls(t, interval(-7, 9), serial) == enumerate_walls(t, interval(-7, 9), parallel));
}

TEST_CASE("chamber report") {
    auto report = chamber_report(HitchinPairType{1, 1, 1, 0}, interval(-2, 2));
    REQUIRE(report.chambers.size() == 3);
    CHECK(report.chambers[0] == Chamber{Rational(-2), Rational(-1), true, false});
    CHECK(report.chambers[1] == Chamber{Rational(-1), Rational(1), false, false});
    CHECK(report.chambers[2] == Chamber{Rational(1), Rational(2), false, true});

    report = chamber_report(HitchinPairType{1, 1, 1, 0}, interval(Rational(-1, 2), Rational(1, 2)));
    CHECK(report.walls.empty());
    REQUIRE(report.chambers.size() == 1);
    CHECK(report.chambers[0] == Chamber{Rational(-1, 2), Rational(1, 2), true, true});

    report = chamber_report(HitchinPairType{1, 1, 1, 0}, interval(-1, 1));
    REQUIRE(report.chambers.size() == 1);
    CHECK(report.chambers[0] == Chamber{Rational(-1), Rational(1), false, false});

    report = chamber_report(HitchinPairType{1, 1, 1, 0}, interval(1, 1));
    CHECK(report.chambers.empty());
    report = chamber_report(HitchinPairType{1, 1, 1, 0}, interval(0, 0));
    REQUIRE(report.chambers.size() == 1);
    CHECK(report.chambers[0] == Chamber{Rational(0), Rational(0), true, true});

    const HitchinPairType t{2, 1, 1, 0};
    report = chamber_report(t, interval(0, 1));
    CHECK(report.walls == oracle::brute_force_walls(t, interval(0, 1), 6));
}

TEST_CASE("mw filter") {
    const HitchinPairType t{2, 2, 1, 0};
    WallOptions opts;
    opts.mw_filter = true;
    CHECK_THROWS_AS(enumerate_walls(t, interval(-1, 1), opts), std::invalid_argument);
    opts.ctx = GeometryContext::twisted(0, -1);
    CHECK_THROWS_AS(enumerate_walls(t, interval(-1, 1), opts), std::invalid_argument);

    opts.ctx = GeometryContext::canonical(2);
    const auto all = enumerate_walls(t, interval(-6, 6));
    const auto kept = enumerate_walls(t, interval(-6, 6), opts);
    // every kept witness is one of the unfiltered ones, at the same alpha
    for (const auto& wall : kept) {
        auto it = std::find_if(all.begin(), all.end(), [&](const Wall& w) { return w.alpha == wall.alpha; });
        REQUIRE(it != all.end());
        for (const auto& w : wall.witnesses) {
            CHECK(std::binary_search(it->witnesses.begin(), it->witnesses.end(), w));
            CHECK(admits_semistable_split(w, wall.alpha, 2));
        }
    }
}

TEST_CASE("semistable split check") {
    // zero-rank side: tau' = 0 inside the collapsed [0, 0]
    CHECK(admits_semistable_split(W{0, 2, 7}, Rational(3), 2));
    CHECK(admits_semistable_split(W{1, 0, -4}, Rational(-3), 0));

    // (1,1,d'): tau'(a') = 2a' - d'. With degL = 0 and alpha = 0 the bounds are [0, 0],
    // so d' must be even.
    CHECK(admits_semistable_split(W{1, 1, 0}, Rational(0), 0));
    CHECK(admits_semistable_split(W{1, 1, 4}, Rational(0), 0));
    CHECK_FALSE(admits_semistable_split(W{1, 1, 1}, Rational(0), 0));
    // degL = 1: bounds [-1, 1], every d' works
    CHECK(admits_semistable_split(W{1, 1, 1}, Rational(0), 1));

    // brute-force the split over a' for a grid of cases
    for (std::int64_t ps = 1; ps <= 3; ++ps) {
        for (std::int64_t qs = 1; qs <= 3; ++qs) {
            for (std::int64_t d = -4; d <= 4; ++d) {
                for (std::int64_t k = -6; k <= 6; ++k) {
                    const Rational alpha(k, 2);
                    bool found = false;
                    for (std::int64_t a = -30; a <= 30 && !found; ++a) {
                        found = mw_check(HitchinPairType{ps, qs, a, d - a}, 1, alpha).pass;
                    }
                    CHECK(admits_semistable_split(W{ps, qs, d}, alpha, 1) == found);
                }
            }
        }
    }
}
