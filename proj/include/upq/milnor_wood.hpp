#pragma once

#include "upq/model.hpp"
#include "upq/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace upq {

/// Bounds on the Toledo invariant of an alpha-semistable pair whose Higgs
/// fields have the given ranks:
///   -rk(beta) degL + alpha (rk(beta) - 2pq/(p+q))
///     <= tau <=
///   rk(gamma) degL + alpha (rk(gamma) - 2pq/(p+q)).
/// Valid for any integer degL. The result may be infeasible.
BoundInterval higgs_rank_bounds(const HitchinPairType& t, std::int64_t deg_l, const Rational& alpha,
                                const HiggsRankPair& ranks);

/// Rank-free Toledo bounds for degL >= 0, split into three alpha regimes:
///   (i)   alpha <= -degL
///   (ii)  -degL <= alpha <= degL
///   (iii) degL <= alpha
/// At alpha = +-degL the middle regime is used; with UPQ_INTERNAL_CHECKS the
/// neighbouring regime is evaluated too and must agree.
/// Throws std::invalid_argument("proposition hypothesis violated") for degL < 0.
BoundInterval toledo_bounds(std::int64_t p, std::int64_t q, std::int64_t deg_l, const Rational& alpha);

/// Evaluates one regime's formula irrespective of where alpha lies.
BoundInterval toledo_bounds_in_regime(std::int64_t p, std::int64_t q, std::int64_t deg_l,
                                      const Rational& alpha, Regime regime);

enum class BoundSide { lower, upper };

std::string side_label(BoundSide side);

struct MwVerdict {
    Rational tau;
    BoundInterval interval;
    bool pass = false;
    std::optional<BoundSide> violated;  // set iff !pass
    Rational margin;                    // distance past the violated bound; 0 on pass
};

/// Closed-interval membership of toledo(t). With ranks the rank-dependent
/// bounds are used, otherwise the regime bounds (degL >= 0 required).
MwVerdict mw_check(const HitchinPairType& t, std::int64_t deg_l, const Rational& alpha,
                   const std::optional<HiggsRankPair>& ranks = std::nullopt);

}  // namespace upq
