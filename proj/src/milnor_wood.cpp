#include "upq/milnor_wood.hpp"

#include "upq/slope.hpp"

#include <algorithm>
#include <stdexcept>

namespace upq {

namespace {

Rational weight(std::int64_t p, std::int64_t q) { return Rational(2 * p * q, p + q); }

void require_positive_ranks(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1) throw std::invalid_argument("ranks p and q must be positive");
}

}  // namespace

BoundInterval higgs_rank_bounds(const HitchinPairType& t, std::int64_t deg_l, const Rational& alpha,
                                const HiggsRankPair& ranks) {
    t.validate();
    ranks.validate_for(t);
    const Rational w = weight(t.p, t.q);
    const Rational d(deg_l);
    Rational lower = -Rational(ranks.rk_beta) * d + alpha * (Rational(ranks.rk_beta) - w);
    Rational upper = Rational(ranks.rk_gamma) * d + alpha * (Rational(ranks.rk_gamma) - w);
    return BoundInterval::closed(std::move(lower), std::move(upper));
}

BoundInterval toledo_bounds_in_regime(std::int64_t p, std::int64_t q, std::int64_t deg_l,
                                      const Rational& alpha, Regime regime) {
    require_positive_ranks(p, q);
    const Rational m(std::min(p, q));
    const Rational d(deg_l);
    const Rational skew(p > q ? p - q : q - p, p + q);
    const Rational outer = -alpha * weight(p, q);
    const Rational mid_lower = m * (-alpha * skew - d);
    const Rational mid_upper = m * (d - alpha * skew);
    switch (regime) {
        case Regime::below: return BoundInterval::closed(mid_lower, outer, regime);
        case Regime::middle: return BoundInterval::closed(mid_lower, mid_upper, regime);
        case Regime::above: return BoundInterval::closed(outer, mid_upper, regime);
    }
    throw std::logic_error("unreachable regime");
}

BoundInterval toledo_bounds(std::int64_t p, std::int64_t q, std::int64_t deg_l, const Rational& alpha) {
    require_positive_ranks(p, q);
    if (deg_l < 0) throw std::invalid_argument("proposition hypothesis violated: deg(L) < 0");
    const Rational d(deg_l);
    if (alpha < -d) return toledo_bounds_in_regime(p, q, deg_l, alpha, Regime::below);
    if (alpha > d) return toledo_bounds_in_regime(p, q, deg_l, alpha, Regime::above);

    auto mid = toledo_bounds_in_regime(p, q, deg_l, alpha, Regime::middle);
#ifdef UPQ_INTERNAL_CHECKS
    auto same_bounds = [&](Regime neighbour) {
        auto other = toledo_bounds_in_regime(p, q, deg_l, alpha, neighbour);
        return other.raw_lower() == mid.raw_lower() && other.raw_upper() == mid.raw_upper();
    };
    if ((alpha == -d && !same_bounds(Regime::below)) || (alpha == d && !same_bounds(Regime::above))) {
        throw std::logic_error("regime formulas disagree at a regime boundary");
    }
#endif
    return mid;
}

std::string side_label(BoundSide side) { return side == BoundSide::lower ? "lower" : "upper"; }

MwVerdict mw_check(const HitchinPairType& t, std::int64_t deg_l, const Rational& alpha,
                   const std::optional<HiggsRankPair>& ranks) {
    auto interval = ranks ? higgs_rank_bounds(t, deg_l, alpha, *ranks) : toledo_bounds(t.p, t.q, deg_l, alpha);
    MwVerdict v{toledo(t), interval, false, std::nullopt, Rational(0)};
    if (v.tau < interval.raw_lower()) {
        v.violated = BoundSide::lower;
        v.margin = interval.raw_lower() - v.tau;
    } else if (v.tau > interval.raw_upper()) {
        v.violated = BoundSide::upper;
        v.margin = v.tau - interval.raw_upper();
    } else {
        // Reached with an infeasible interval only if raw_lower <= tau <= raw_upper,
        // which is impossible when raw_lower > raw_upper.
        v.pass = true;
    }
    return v;
}

}  // namespace upq
