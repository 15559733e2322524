#pragma once

#include "upq/model.hpp"
#include "upq/rational.hpp"

#include <cstdint>

namespace upq {

/// Interval of alpha with independently open or closed ends.
struct AlphaWindow {
    Rational lower;
    Rational upper;
    bool lower_closed = true;
    bool upper_closed = true;

    bool empty() const;
    bool contains(const Rational& alpha) const;

    friend bool operator==(const AlphaWindow&, const AlphaWindow&) = default;
};

/// One of the two alternative hypotheses of the irreducibility criterion for
/// K-twisted U(p,q)-Hitchin pairs.
struct IrreducibilityCondition {
    bool degree_ok = false;  // strict inequality on a/p - b/q
    bool rank_ok = false;    // q <= p (first) or p <= q (second)
    AlphaWindow window;
    bool alpha_in_window = false;
    bool holds = false;  // all three of the above

    friend bool operator==(const IrreducibilityCondition&, const IrreducibilityCondition&) = default;
};

struct IrreducibilityCertificate {
    HitchinPairType type;
    std::int64_t genus = 2;
    Rational alpha;
    Rational tau;
    Rational tau_bound;  // min(p, q)(2g - 2)
    bool tau_bound_ok = false;
    /// a/p - b/q > -(2g-2), q <= p, 0 <= alpha < c1.
    IrreducibilityCondition condition1;
    /// a/p - b/q < 2g-2, p <= q, c2 < alpha <= 0.
    IrreducibilityCondition condition2;
    /// tau_bound_ok and (condition1 or condition2): the closure of the stable
    /// locus is irreducible.
    bool closure_irreducible = false;
    /// closure_irreducible and gcd(p + q, a + b) = 1.
    bool fully_irreducible = false;

    friend bool operator==(const IrreducibilityCertificate&, const IrreducibilityCertificate&) = default;
};

/// Evaluates the hypotheses of the irreducibility criterion for the moduli
/// space of K-twisted pairs of type t on a curve of genus g at parameter
/// alpha, with the criterion's strict and non-strict inequalities as stated.
/// Throws std::invalid_argument("genus hypothesis ...") for g < 2.
IrreducibilityCertificate certify_irreducibility(const HitchinPairType& t, std::int64_t genus,
                                                 const Rational& alpha);

/// Strict degree inequality guaranteed by |tau| <= min(p,q)(2g-2) whenever
/// p != q: a/p - b/q > -(2g-2) if q < p, a/p - b/q < 2g-2 if p < q.
/// Returns false for p = q, where no such implication holds.
bool strict_degree_condition(const HitchinPairType& t, std::int64_t genus);

}  // namespace upq
