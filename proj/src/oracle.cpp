#include "upq/oracle.hpp"

#include "upq/certificate.hpp"
#include "upq/milnor_wood.hpp"
#include "upq/slope.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace upq::oracle {

std::int64_t required_degree_bound(const HitchinPairType& t, const AlphaInterval& interval) {
    t.validate();
    interval.validate();
    const Rational reach = max(interval.lo.abs(), interval.hi.abs());
    const Rational bound = Rational(t.rank() - 1) * (Rational(std::abs(t.degree()), t.rank()) + reach);
    return bound.ceil().to_int64();
}

std::vector<Wall> brute_force_walls(const HitchinPairType& t, const AlphaInterval& interval,
                                    std::int64_t degree_bound) {
    const auto needed = required_degree_bound(t, interval);
    if (degree_bound < needed) {
        throw std::invalid_argument("degree bound " + std::to_string(degree_bound) +
                                    " too small; at least " + std::to_string(needed) + " required");
    }
    const auto whole = as_quiver_type(t);
    const auto at0 = upq_parameter(Rational(0));
    const auto at1 = upq_parameter(Rational(1));

    std::map<Rational, std::vector<WallWitness>> found;
    for (std::int64_t ps = 0; ps <= t.p; ++ps) {
        for (std::int64_t qs = 0; qs <= t.q; ++qs) {
            if (ps + qs < 1 || ps + qs > t.p + t.q - 1) continue;
            // Same rank ratio: excluded outright, whatever the slopes do.
            if (Rational(ps, ps + qs) == Rational(t.p, t.p + t.q)) continue;
            for (std::int64_t d = -degree_bound; d <= degree_bound; ++d) {
                QuiverNumericalType sub{{VertexData{ps, ps > 0 ? d : 0}, VertexData{qs, ps > 0 ? 0 : d}}};
                // f(alpha) = mu_alpha(sub) - mu_alpha(whole) is affine: f(0) + alpha (f(1) - f(0)).
                const Rational f0 = alpha_slope(sub, at0) - alpha_slope(whole, at0);
                const Rational f1 = alpha_slope(sub, at1) - alpha_slope(whole, at1);
                const Rational root = -f0 / (f1 - f0);
                if (interval.contains(root)) found[root].push_back(WallWitness{ps, qs, d});
            }
        }
    }
    std::vector<Wall> walls;
    for (auto& [alpha, ws] : found) {
        std::sort(ws.begin(), ws.end());
        walls.push_back(Wall{alpha, ws});
    }
    return walls;
}

BoundInterval envelope_bounds(std::int64_t p, std::int64_t q, std::int64_t deg_l, const Rational& alpha) {
    if (deg_l < 0) throw std::invalid_argument("envelope needs deg(L) >= 0");
    const HitchinPairType t{p, q, 0, 0};
    t.validate();
    std::optional<Rational> lower;
    std::optional<Rational> upper;
    const auto m = std::min(p, q);
    for (std::int64_t r = 0; r <= m; ++r) {
        const auto b = higgs_rank_bounds(t, deg_l, alpha, HiggsRankPair{r, r});
        if (!lower || b.raw_lower() < *lower) lower = b.raw_lower();
        if (!upper || b.raw_upper() > *upper) upper = b.raw_upper();
    }
    return BoundInterval::closed(*lower, *upper);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty sampling range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<std::int64_t>(x % span);
}

Rational Rng::rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
    const auto den = uniform(1, max_den);
    return Rational(uniform(lo * den, hi * den), den);
}

bool SelfTestReport::ok() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

namespace {

std::string describe(const HitchinPairType& t) {
    std::ostringstream os;
    os << "t=(" << t.p << "," << t.q << "," << t.a << "," << t.b << ")";
    return os.str();
}

std::string describe(const QuiverNumericalType& e) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < e.vertices.size(); ++i) {
        os << (i ? " " : "") << "(" << e.vertices[i].rank << "," << e.vertices[i].degree << ")";
    }
    os << "]";
    return os.str();
}

std::string describe(const ParameterVector& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v.values[i];
    os << "]";
    return os.str();
}

HitchinPairType random_type(Rng& rng, std::int64_t max_rank, std::int64_t max_degree) {
    return HitchinPairType{rng.uniform(1, max_rank), rng.uniform(1, max_rank),
                           rng.uniform(-max_degree, max_degree), rng.uniform(-max_degree, max_degree)};
}

// One trial: returns an empty detail on success, else (inputs, detail).
struct Outcome {
    std::string inputs;
    std::string detail;  // empty on pass
};

using Trial = std::function<Outcome(Rng&, unsigned)>;

Outcome translation_trial(Rng& rng, unsigned) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    QuiverNumericalType whole;
    QuiverNumericalType sub;
    ParameterVector alpha;
    do {
        whole.vertices.clear();
        sub.vertices.clear();
        alpha.values.clear();
        for (std::size_t i = 0; i < n; ++i) {
            const auto r = rng.uniform(0, 4);
            whole.vertices.push_back({r, rng.uniform(-6, 6)});
            sub.vertices.push_back({rng.uniform(0, r), rng.uniform(-6, 6)});
            alpha.values.push_back(rng.rational(-5, 5, 6));
        }
    } while (whole.total_rank() < 1 || sub.total_rank() < 1);
    const Rational shift = rng.rational(-5, 5, 6);
    const auto moved = alpha.translated(shift);

    Outcome out{"whole=" + describe(whole) + " sub=" + describe(sub) + " alpha=" + describe(alpha) +
                    " shift=" + shift.to_string(),
                ""};
    if (alpha_slope(whole, moved) != alpha_slope(whole, alpha) + shift ||
        alpha_slope(sub, moved) != alpha_slope(sub, alpha) + shift) {
        out.detail = "alpha-slope did not shift by the translation constant";
    } else if (compare_at(sub, whole, moved) != compare_at(sub, whole, alpha)) {
        out.detail = "compare_at changed under translation";
    } else if (compare_at(sub, whole, alpha.normalized()) != compare_at(sub, whole, alpha)) {
        out.detail = "compare_at changed under normalization";
    }
    return out;
}

Outcome specialization_trial(Rng& rng, unsigned) {
    const auto t = random_type(rng, 6, 10);
    const auto alpha = rng.rational(-8, 8, 12);
    Outcome out{describe(t) + " alpha=" + alpha.to_string(), ""};
    if (alpha_slope(t, alpha) != alpha_slope(as_quiver_type(t), upq_parameter(alpha))) {
        out.detail = "U(p,q) alpha-slope differs from the doubled-quiver alpha-slope";
    }
    return out;
}

Outcome toledo_duality_trial(Rng& rng, unsigned) {
    const auto t = random_type(rng, 8, 12);
    Outcome out{describe(t), ""};
    if (toledo(t) != -toledo(HitchinPairType{t.q, t.p, t.b, t.a})) out.detail = "tau(p,q,a,b) != -tau(q,p,b,a)";
    return out;
}

Outcome toledo_forms_trial(Rng& rng, unsigned) {
    const auto t = random_type(rng, 8, 12);
    Outcome out{describe(t), ""};
    if (toledo(t) != toledo_from_slopes(t)) out.detail = "the two Toledo formulas disagree";
    return out;
}

Outcome c_pair_trial(Rng& rng, unsigned) {
    const auto t = random_type(rng, 8, 12);
    const auto alpha = rng.rational(-8, 8, 12);
    const auto c = alpha_to_c_pair(t, alpha);
    Outcome out{describe(t) + " alpha=" + alpha.to_string(), ""};
    if (c.c2 - c.c1 != alpha) {
        out.detail = "c2 - c1 != alpha";
    } else if (Rational(t.p, t.rank()) * c.c1 + Rational(t.q, t.rank()) * c.c2 != slope(t.rank(), t.degree())) {
        out.detail = "weighted average of (c1, c2) != mu(V + W)";
    }
    return out;
}

Outcome bounds_duality_trial(Rng& rng, unsigned) {
    const auto p = rng.uniform(1, 8);
    const auto q = rng.uniform(1, 8);
    const auto deg_l = rng.uniform(0, 4);
    const auto alpha = rng.rational(-deg_l - 2, deg_l + 2, 20);
    const auto b = toledo_bounds(p, q, deg_l, alpha);
    const auto d = toledo_bounds(q, p, deg_l, -alpha);
    std::ostringstream in;
    in << "p=" << p << " q=" << q << " degL=" << deg_l << " alpha=" << alpha;
    Outcome out{in.str(), ""};
    if (d.raw_lower() != -b.raw_upper() || d.raw_upper() != -b.raw_lower()) {
        out.detail = "bounds(q,p,degL,-alpha) is not the reflection of bounds(p,q,degL,alpha)";
    }
    return out;
}

Outcome envelope_trial(Rng& rng, unsigned) {
    const auto p = rng.uniform(1, 8);
    const auto q = rng.uniform(1, 8);
    const auto deg_l = rng.uniform(0, 4);
    const auto alpha = rng.rational(-deg_l - 2, deg_l + 2, 20);
    const auto b = toledo_bounds(p, q, deg_l, alpha);
    const auto e = envelope_bounds(p, q, deg_l, alpha);
    std::ostringstream in;
    in << "p=" << p << " q=" << q << " degL=" << deg_l << " alpha=" << alpha;
    Outcome out{in.str(), ""};
    if (b.raw_lower() != e.raw_lower() || b.raw_upper() != e.raw_upper()) {
        out.detail = "regime bounds [" + b.raw_lower().to_string() + "," + b.raw_upper().to_string() +
                     "] != envelope [" + e.raw_lower().to_string() + "," + e.raw_upper().to_string() + "]";
    }
    return out;
}

Outcome remark_trial(Rng& rng, unsigned) {
    // Rejection-sample a type with p != q inside the Toledo bound.
    for (;;) {
        const auto p = rng.uniform(1, 8);
        const auto q = rng.uniform(1, 8);
        if (p == q) continue;
        const auto genus = rng.uniform(2, 5);
        const HitchinPairType t{p, q, rng.uniform(-4 * p, 4 * p), rng.uniform(-4 * q, 4 * q)};
        const Rational bound = Rational(std::min(p, q) * (2 * genus - 2));
        if (toledo(t).abs() > bound) continue;
        Outcome out{describe(t) + " g=" + std::to_string(genus), ""};
        if (!strict_degree_condition(t, genus)) out.detail = "Toledo bound holds but the strict degree condition fails";
        return out;
    }
}

HitchinPairType small_type(Rng& rng) {
    for (;;) {
        auto t = random_type(rng, 4, 3);
        if (t.rank() <= 5) return t;
    }
}

AlphaInterval small_interval(Rng& rng) {
    const auto lo = rng.rational(-6, 5, 4);
    auto hi = lo + rng.rational(0, 4, 4);
    if (hi > Rational(6)) hi = Rational(6);
    return AlphaInterval{lo, hi};
}

Outcome wall_exactness_trial(Rng& rng, unsigned threads) {
    const auto t = small_type(rng);
    const auto interval = small_interval(rng);
    Outcome out{describe(t) + " interval=[" + interval.lo.to_string() + "," + interval.hi.to_string() + "]", ""};
    WallOptions opts;
    opts.threads = threads;
    const Rational eps(1, 1000);
    const auto whole = as_quiver_type(t);
    for (const auto& wall : enumerate_walls(t, interval, opts)) {
        for (const auto& w : wall.witnesses) {
            const auto sub = witness_quiver_type(w);
            if (alpha_slope(sub, upq_parameter(wall.alpha)) != alpha_slope(whole, upq_parameter(wall.alpha))) {
                out.detail = "nonzero slope difference at wall " + wall.alpha.to_string();
                return out;
            }
            const int before = compare_at(sub, whole, upq_parameter(wall.alpha - eps));
            const int after = compare_at(sub, whole, upq_parameter(wall.alpha + eps));
            if (before == 0 || before != -after) {
                out.detail = "no strict sign change across wall " + wall.alpha.to_string();
                return out;
            }
        }
    }
    return out;
}

Outcome wall_oracle_trial(Rng& rng, unsigned threads) {
    const auto t = small_type(rng);
    const auto interval = small_interval(rng);
    Outcome out{describe(t) + " interval=[" + interval.lo.to_string() + "," + interval.hi.to_string() + "]", ""};
    WallOptions opts;
    opts.threads = threads;
    if (enumerate_walls(t, interval, opts) != brute_force_walls(t, interval, required_degree_bound(t, interval))) {
        out.detail = "enumerator and brute-force oracle disagree";
    }
    return out;
}

const std::vector<std::pair<std::string, Trial>>& registry() {
    static const std::vector<std::pair<std::string, Trial>> suites = {
        {"translation_invariance", translation_trial},
        {"specialization", specialization_trial},
        {"toledo_duality", toledo_duality_trial},
        {"toledo_two_forms", toledo_forms_trial},
        {"c_pair_round_trip", c_pair_trial},
        {"bounds_duality", bounds_duality_trial},
        {"envelope_identity", envelope_trial},
        {"remark_degree_condition", remark_trial},
        {"wall_exactness_sidedness", wall_exactness_trial},
        {"wall_oracle_agreement", wall_oracle_trial},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, _] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t trials, unsigned threads) {
    const auto& suites = registry();
    auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& s) { return s.first == name; });
    if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
    const auto index = static_cast<std::uint64_t>(it - suites.begin());

    // Each suite draws from its own stream so suites stay independent of each other.
    Rng rng(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
    SuiteResult result{name, 0, 0, {}};
    for (std::size_t i = 0; i < trials; ++i) {
        ++result.cases;
        Outcome o;
        try {
            o = it->second(rng, threads);
        } catch (const std::exception& e) {
            o.detail = std::string("exception: ") + e.what();
        }
        if (o.detail.empty()) {
            ++result.passed;
        } else {
            result.failures.push_back({i, o.inputs, o.detail});
        }
    }
    return result;
}

SelfTestReport property_driver(std::uint64_t seed, std::size_t trials, unsigned threads) {
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    SelfTestReport report{seed, trials, {}};
    for (const auto& name : suite_names()) report.suites.push_back(run_suite(name, seed, trials, threads));
    return report;
}

}  // namespace upq::oracle
