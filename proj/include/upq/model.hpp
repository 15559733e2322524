#pragma once

#include "upq/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace upq {

/// Numerical type (p, q, a, b) of a U(p,q)-Hitchin pair (V, W, beta, gamma):
/// p = rk V, q = rk W, a = deg V, b = deg W.
struct HitchinPairType {
    std::int64_t p = 1;
    std::int64_t q = 1;
    std::int64_t a = 0;
    std::int64_t b = 0;

    /// Throws std::invalid_argument unless p >= 1 and q >= 1.
    void validate() const;

    std::int64_t rank() const { return p + q; }
    std::int64_t degree() const { return a + b; }

    friend bool operator==(const HitchinPairType&, const HitchinPairType&) = default;
};

/// Genus and twisting degree of the line bundle L. The canonical flag marks
/// L = K, which forces deg L = 2g - 2.
class GeometryContext {
public:
    static GeometryContext canonical(std::int64_t genus);
    static GeometryContext twisted(std::int64_t genus, std::int64_t twist_degree);

    std::int64_t genus() const { return genus_; }
    std::int64_t twist_degree() const { return twist_degree_; }
    bool is_canonical() const { return canonical_; }

    friend bool operator==(const GeometryContext&, const GeometryContext&) = default;

private:
    GeometryContext(std::int64_t genus, std::int64_t twist_degree, bool canonical);

    std::int64_t genus_ = 0;
    std::int64_t twist_degree_ = 0;
    bool canonical_ = false;
};

/// Generic ranks of the Higgs fields beta: W -> V (x) L and gamma: V -> W (x) L.
struct HiggsRankPair {
    std::int64_t rk_beta = 0;
    std::int64_t rk_gamma = 0;

    /// Both ranks must lie in [0, min(p, q)].
    void validate_for(const HitchinPairType& t) const;

    friend bool operator==(const HiggsRankPair&, const HiggsRankPair&) = default;
};

struct Arrow {
    std::size_t tail = 0;
    std::size_t head = 0;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite quiver on vertices 0..vertex_count-1. Oriented cycles and repeated
/// arrows are allowed.
struct Quiver {
    std::size_t vertex_count = 1;
    std::vector<Arrow> arrows;

    void validate() const;
};

/// Degree of the twisting line bundle M_a attached to each arrow. Carried as
/// metadata; slopes do not depend on it.
struct TwistAssignment {
    std::vector<std::int64_t> degrees;

    void validate_for(const Quiver& quiver) const;
};

struct VertexData {
    std::int64_t rank = 0;
    std::int64_t degree = 0;
    friend bool operator==(const VertexData&, const VertexData&) = default;
};

/// Per-vertex (rank, degree) of a quiver bundle.
struct QuiverNumericalType {
    std::vector<VertexData> vertices;

    std::int64_t total_rank() const;
    std::int64_t total_degree() const;
    /// Ranks non-negative, total rank >= 1.
    void validate() const;
};

/// Stability parameter alpha_i for each quiver vertex.
struct ParameterVector {
    std::vector<Rational> values;

    std::size_t size() const { return values.size(); }
    /// Adds the same constant to every entry.
    ParameterVector translated(const Rational& shift) const;
    /// Translates so that alpha_0 = 0. Empty vectors are returned unchanged.
    ParameterVector normalized() const;
};

enum class Regime { below, middle, above };

std::string regime_label(Regime r);  // "i", "ii", "iii"
Regime regime_from_label(const std::string& label);

/// Closed interval [lower, upper] of rationals, or the infeasible state when
/// the requested lower end exceeds the upper end. An infeasible interval
/// remembers the raw bounds for diagnostics but exposes no lower()/upper().
class BoundInterval {
public:
    static BoundInterval closed(Rational lower, Rational upper,
                                std::optional<Regime> regime = std::nullopt);

    bool feasible() const { return feasible_; }
    const Rational& lower() const;
    const Rational& upper() const;
    const Rational& raw_lower() const { return lower_; }
    const Rational& raw_upper() const { return upper_; }
    const std::optional<Regime>& regime() const { return regime_; }

    bool contains(const Rational& x) const;
    Rational width() const;

    friend bool operator==(const BoundInterval&, const BoundInterval&) = default;

private:
    BoundInterval(Rational lower, Rational upper, std::optional<Regime> regime, bool feasible);

    Rational lower_;
    Rational upper_;
    std::optional<Regime> regime_;
    bool feasible_ = true;
};

/// The doubled quiver V <-> W carrying U(p,q)-Hitchin pairs: vertex 0 is V,
/// vertex 1 is W, arrow 0 is gamma (V -> W), arrow 1 is beta (W -> V).
Quiver upq_quiver();
/// Both arrows twisted by L^*, i.e. degree -deg L.
TwistAssignment upq_twists(const GeometryContext& ctx);
QuiverNumericalType as_quiver_type(const HitchinPairType& t);
/// Parameter vector (alpha, 0) on the doubled quiver.
ParameterVector upq_parameter(const Rational& alpha);

}  // namespace upq
