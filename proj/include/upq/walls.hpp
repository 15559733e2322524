#pragma once

#include "upq/model.hpp"
#include "upq/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace upq {

/// Numerical sub-type (p', q', d') of a U(p,q)-Hitchin pair, where d' is the
/// total degree a' + b'. The alpha-slope of a sub-object only depends on
/// these three numbers.
struct WallWitness {
    std::int64_t p_sub = 0;
    std::int64_t q_sub = 0;
    std::int64_t d_sub = 0;

    friend auto operator<=>(const WallWitness&, const WallWitness&) = default;
};

/// A critical value of alpha together with every sub-type that has the same
/// alpha-slope as the ambient type there.
struct Wall {
    Rational alpha;
    std::vector<WallWitness> witnesses;  // sorted, unique

    friend bool operator==(const Wall&, const Wall&) = default;
};

/// Closed parameter interval [lo, hi].
struct AlphaInterval {
    Rational lo;
    Rational hi;

    /// Throws std::invalid_argument when lo > hi.
    void validate() const;
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }

    friend bool operator==(const AlphaInterval&, const AlphaInterval&) = default;
};

/// Open chamber between walls. An end is closed only where it coincides with
/// an end of the scanned interval that is not itself a wall.
struct Chamber {
    Rational lo;
    Rational hi;
    bool lo_closed = false;
    bool hi_closed = false;

    friend bool operator==(const Chamber&, const Chamber&) = default;
};

struct ChamberReport {
    HitchinPairType type;
    AlphaInterval interval;
    std::vector<Wall> walls;
    std::vector<Chamber> chambers;

    friend bool operator==(const ChamberReport&, const ChamberReport&) = default;
};

struct WallOptions {
    /// Keep only witnesses that admit a degree split (a', b') whose sub-type
    /// satisfies the regime Toledo bounds at the wall. Needs ctx with degL >= 0.
    bool mw_filter = false;
    std::optional<GeometryContext> ctx;
    /// Worker threads for the (p', q') families; 0 means hardware concurrency.
    unsigned threads = 0;
};

/// Checks 0 <= p' <= p, 0 <= q' <= q and 1 <= p' + q' <= p + q - 1.
void validate_witness(const HitchinPairType& t, const WallWitness& w);

/// The alpha at which mu_alpha(sub) = mu_alpha(whole), or nullopt when the
/// sub-type has the same rank ratio p'/(p'+q') = p/(p+q).
std::optional<Rational> wall_alpha(const HitchinPairType& t, const WallWitness& w);

/// Whether some integer split a' + b' = d' gives a sub-type whose Toledo
/// invariant lies within the regime bounds at alpha. A side of rank zero has
/// degree zero.
bool admits_semistable_split(const WallWitness& w, const Rational& alpha, std::int64_t deg_l);

/// Every critical value in the closed interval, with merged witnesses,
/// sorted by alpha.
std::vector<Wall> enumerate_walls(const HitchinPairType& t, const AlphaInterval& interval,
                                  const WallOptions& opts = {});

ChamberReport chamber_report(const HitchinPairType& t, const AlphaInterval& interval,
                             const WallOptions& opts = {});

/// Splits the interval at the given (sorted, in-range) wall positions.
std::vector<Chamber> chambers_between(const AlphaInterval& interval, const std::vector<Wall>& walls);

/// Sub-type as a doubled-quiver numerical type; the degree sits on V unless
/// p' = 0.
QuiverNumericalType witness_quiver_type(const WallWitness& w);

}  // namespace upq
