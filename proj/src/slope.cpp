#include "upq/slope.hpp"

#include <stdexcept>

namespace upq {

Rational slope(std::int64_t rank, std::int64_t degree) {
    if (rank == 0) throw std::domain_error("undefined slope");
    if (rank < 0) throw std::invalid_argument("negative rank");
    return Rational(degree, rank);
}

Rational alpha_slope(const QuiverNumericalType& e, const ParameterVector& alpha) {
    if (e.vertices.size() != alpha.size()) {
        throw std::invalid_argument("parameter vector has " + std::to_string(alpha.size()) +
                                    " entries for " + std::to_string(e.vertices.size()) + " vertices");
    }
    e.validate();
    Rational numerator(0);
    for (std::size_t i = 0; i < e.vertices.size(); ++i) {
        numerator += Rational(e.vertices[i].degree) + alpha.values[i] * Rational(e.vertices[i].rank);
    }
    return numerator / Rational(e.total_rank());
}

Rational alpha_slope(const HitchinPairType& t, const Rational& alpha) {
    t.validate();
    return slope(t.rank(), t.degree()) + alpha * Rational(t.p, t.rank());
}

Rational toledo(const HitchinPairType& t) {
    t.validate();
    return Rational(2) * Rational(t.q * t.a - t.p * t.b, t.rank());
}

Rational toledo_from_slopes(const HitchinPairType& t) {
    t.validate();
    return Rational(2 * t.p * t.q, t.rank()) * (slope(t.p, t.a) - slope(t.q, t.b));
}

CPair alpha_to_c_pair(const HitchinPairType& t, const Rational& alpha) {
    t.validate();
    const Rational mu = slope(t.rank(), t.degree());
    return CPair{mu - alpha * Rational(t.q, t.rank()), mu + alpha * Rational(t.p, t.rank())};
}

int compare_at(const QuiverNumericalType& sub, const QuiverNumericalType& whole,
               const ParameterVector& alpha) {
    if (sub.vertices.size() != whole.vertices.size()) {
        throw std::invalid_argument("sub and whole types have different vertex counts");
    }
    return (alpha_slope(sub, alpha) - alpha_slope(whole, alpha)).sign();
}

}  // namespace upq
