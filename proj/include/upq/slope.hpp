#pragma once

#include "upq/model.hpp"
#include "upq/rational.hpp"

#include <cstdint>

namespace upq {

/// degree / rank. Throws std::domain_error("undefined slope") for rank 0.
Rational slope(std::int64_t rank, std::int64_t degree);

/// Quiver-bundle alpha-slope: sum_i (deg E_i + alpha_i rk E_i) / sum_i rk E_i.
/// Throws std::invalid_argument if alpha and E disagree in length.
Rational alpha_slope(const QuiverNumericalType& e, const ParameterVector& alpha);

/// U(p,q) alpha-slope: mu(V + W) + alpha p / (p + q).
Rational alpha_slope(const HitchinPairType& t, const Rational& alpha);

/// Toledo invariant 2(qa - pb) / (p + q).
Rational toledo(const HitchinPairType& t);

/// Toledo invariant in its weighted form 2pq/(p+q) * (mu(V) - mu(W)).
Rational toledo_from_slopes(const HitchinPairType& t);

struct CPair {
    Rational c1;
    Rational c2;
    friend bool operator==(const CPair&, const CPair&) = default;
};

/// The unique (c1, c2) with c2 - c1 = alpha and p c1 + q c2 = (p + q) mu(V + W).
CPair alpha_to_c_pair(const HitchinPairType& t, const Rational& alpha);

/// Sign of mu_alpha(sub) - mu_alpha(whole), in {-1, 0, 1}.
int compare_at(const QuiverNumericalType& sub, const QuiverNumericalType& whole,
               const ParameterVector& alpha);

}  // namespace upq
