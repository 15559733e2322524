#include "upq/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace upq {

void HitchinPairType::validate() const {
    if (p < 1 || q < 1) {
        throw std::invalid_argument("Hitchin pair type needs p >= 1 and q >= 1, got (" +
                                    std::to_string(p) + "," + std::to_string(q) + ")");
    }
}

GeometryContext::GeometryContext(std::int64_t genus, std::int64_t twist_degree, bool canonical)
    : genus_(genus), twist_degree_(twist_degree), canonical_(canonical) {
    if (genus < 0) throw std::invalid_argument("genus must be non-negative");
}

GeometryContext GeometryContext::canonical(std::int64_t genus) {
    return GeometryContext(genus, 2 * genus - 2, true);
}

GeometryContext GeometryContext::twisted(std::int64_t genus, std::int64_t twist_degree) {
    return GeometryContext(genus, twist_degree, false);
}

void HiggsRankPair::validate_for(const HitchinPairType& t) const {
    const auto m = std::min(t.p, t.q);
    if (rk_beta < 0 || rk_beta > m || rk_gamma < 0 || rk_gamma > m) {
        throw std::invalid_argument("Higgs field ranks (" + std::to_string(rk_beta) + "," +
                                    std::to_string(rk_gamma) + ") out of range [0," +
                                    std::to_string(m) + "]");
    }
}

void Quiver::validate() const {
    if (vertex_count == 0) throw std::invalid_argument("quiver needs at least one vertex");
    for (const auto& a : arrows) {
        if (a.tail >= vertex_count || a.head >= vertex_count) {
            throw std::invalid_argument("arrow endpoint outside vertex range");
        }
    }
}

void TwistAssignment::validate_for(const Quiver& quiver) const {
    if (degrees.size() != quiver.arrows.size()) {
        throw std::invalid_argument("twist assignment needs one degree per arrow");
    }
}

std::int64_t QuiverNumericalType::total_rank() const {
    std::int64_t r = 0;
    for (const auto& v : vertices) r += v.rank;
    return r;
}

std::int64_t QuiverNumericalType::total_degree() const {
    std::int64_t d = 0;
    for (const auto& v : vertices) d += v.degree;
    return d;
}

void QuiverNumericalType::validate() const {
    for (const auto& v : vertices) {
        if (v.rank < 0) throw std::invalid_argument("negative vertex rank");
    }
    if (total_rank() < 1) throw std::invalid_argument("quiver type has total rank 0");
}

ParameterVector ParameterVector::translated(const Rational& shift) const {
    ParameterVector out = *this;
    for (auto& v : out.values) v += shift;
    return out;
}

ParameterVector ParameterVector::normalized() const {
    if (values.empty()) return *this;
    return translated(-values.front());
}

std::string regime_label(Regime r) {
    switch (r) {
        case Regime::below: return "i";
        case Regime::middle: return "ii";
        case Regime::above: return "iii";
    }
    return "?";
}

Regime regime_from_label(const std::string& label) {
    if (label == "i") return Regime::below;
    if (label == "ii") return Regime::middle;
    if (label == "iii") return Regime::above;
    throw std::invalid_argument("unknown regime label '" + label + "'");
}

BoundInterval::BoundInterval(Rational lower, Rational upper, std::optional<Regime> regime, bool feasible)
    : lower_(std::move(lower)), upper_(std::move(upper)), regime_(regime), feasible_(feasible) {}

BoundInterval BoundInterval::closed(Rational lower, Rational upper, std::optional<Regime> regime) {
    const bool ok = lower <= upper;
    return BoundInterval(std::move(lower), std::move(upper), regime, ok);
}

const Rational& BoundInterval::lower() const {
    if (!feasible_) throw std::logic_error("lower() of an infeasible interval");
    return lower_;
}

const Rational& BoundInterval::upper() const {
    if (!feasible_) throw std::logic_error("upper() of an infeasible interval");
    return upper_;
}

bool BoundInterval::contains(const Rational& x) const {
    return feasible_ && lower_ <= x && x <= upper_;
}

Rational BoundInterval::width() const { return upper() - lower(); }

Quiver upq_quiver() { return Quiver{2, {Arrow{0, 1}, Arrow{1, 0}}}; }

TwistAssignment upq_twists(const GeometryContext& ctx) {
    return TwistAssignment{{-ctx.twist_degree(), -ctx.twist_degree()}};
}

QuiverNumericalType as_quiver_type(const HitchinPairType& t) {
    return QuiverNumericalType{{VertexData{t.p, t.a}, VertexData{t.q, t.b}}};
}

ParameterVector upq_parameter(const Rational& alpha) { return ParameterVector{{alpha, Rational(0)}}; }

}  // namespace upq
