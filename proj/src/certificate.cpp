#include "upq/certificate.hpp"

#include "upq/slope.hpp"

#include <algorithm>
#include <stdexcept>

namespace upq {

bool AlphaWindow::empty() const {
    if (lower < upper) return false;
    if (lower == upper) return !(lower_closed && upper_closed);
    return true;
}

bool AlphaWindow::contains(const Rational& alpha) const {
    const bool above = lower_closed ? lower <= alpha : lower < alpha;
    const bool below = upper_closed ? alpha <= upper : alpha < upper;
    return above && below;
}

namespace {

// (2pq / (pq - s^2 + p + q)) where s is the smaller rank in the condition. The
// denominator q(p - q) + p + q never vanishes for positive integers.
Rational window_factor(std::int64_t p, std::int64_t q, std::int64_t s) {
    const auto den = p * q - s * s + p + q;
    if (den == 0) throw std::logic_error("degenerate window factor");
    return Rational(2 * p * q, den);
}

}  // namespace

IrreducibilityCertificate certify_irreducibility(const HitchinPairType& t, std::int64_t genus,
                                                 const Rational& alpha) {
    t.validate();
    if (genus < 2) throw std::invalid_argument("genus hypothesis violated: g = " + std::to_string(genus) + " < 2");

    const Rational k(2 * genus - 2);
    const Rational slope_gap = slope(t.p, t.a) - slope(t.q, t.b);  // a/p - b/q

    IrreducibilityCertificate c;
    c.type = t;
    c.genus = genus;
    c.alpha = alpha;
    c.tau = Rational(2 * t.p * t.q, t.rank()) * slope_gap;
    c.tau_bound = Rational(std::min(t.p, t.q)) * k;
    c.tau_bound_ok = c.tau.abs() <= c.tau_bound;

    auto& c1 = c.condition1;
    c1.degree_ok = slope_gap > -k;
    c1.rank_ok = t.q <= t.p;
    c1.window = AlphaWindow{Rational(0), window_factor(t.p, t.q, t.q) * (-slope_gap - k) + k, true, false};
    c1.alpha_in_window = c1.window.contains(alpha);
    c1.holds = c1.degree_ok && c1.rank_ok && c1.alpha_in_window;

    auto& c2 = c.condition2;
    c2.degree_ok = slope_gap < k;
    c2.rank_ok = t.p <= t.q;
    c2.window = AlphaWindow{window_factor(t.p, t.q, t.p) * (-slope_gap + k) - k, Rational(0), false, true};
    c2.alpha_in_window = c2.window.contains(alpha);
    c2.holds = c2.degree_ok && c2.rank_ok && c2.alpha_in_window;

    c.closure_irreducible = c.tau_bound_ok && (c1.holds || c2.holds);
    c.fully_irreducible = c.closure_irreducible && gcd(t.rank(), t.degree()) == 1;
    return c;
}

bool strict_degree_condition(const HitchinPairType& t, std::int64_t genus) {
    t.validate();
    const Rational k(2 * genus - 2);
    const Rational slope_gap = slope(t.p, t.a) - slope(t.q, t.b);
    if (t.q < t.p) return slope_gap > -k;
    if (t.p < t.q) return slope_gap < k;
    return false;
}

}  // namespace upq
