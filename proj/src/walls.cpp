#include "upq/walls.hpp"

#include "upq/milnor_wood.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace upq {

namespace {

struct Family {
    std::int64_t p_sub;
    std::int64_t q_sub;
};

struct Hit {
    Rational alpha;
    WallWitness witness;
};

// Rank pairs whose ratio differs from p/(p+q); the others never produce walls.
std::vector<Family> admissible_families(const HitchinPairType& t) {
    std::vector<Family> out;
    for (std::int64_t ps = 0; ps <= t.p; ++ps) {
        for (std::int64_t qs = 0; qs <= t.q; ++qs) {
            const auto r = ps + qs;
            if (r < 1 || r > t.rank() - 1) continue;
            if (ps * t.rank() == t.p * r) continue;
            out.push_back({ps, qs});
        }
    }
    return out;
}

// alpha(d') = (D r' - R d') / k with k = p' R - p r' is affine in d', so the
// d' reaching [lo, hi] form an integer range obtained from the endpoints.
std::vector<Hit> scan_family(const HitchinPairType& t, const Family& f, const AlphaInterval& interval,
                             const WallOptions& opts) {
    const std::int64_t big_r = t.rank();
    const std::int64_t r_sub = f.p_sub + f.q_sub;
    const std::int64_t k = f.p_sub * big_r - t.p * r_sub;
    const Rational base(t.degree() * r_sub);

    auto degree_at = [&](const Rational& alpha) { return (base - Rational(k) * alpha) / Rational(big_r); };
    const Rational at_lo = degree_at(interval.lo);
    const Rational at_hi = degree_at(interval.hi);
    const std::int64_t d_min = min(at_lo, at_hi).ceil().to_int64();
    const std::int64_t d_max = max(at_lo, at_hi).floor().to_int64();

    std::vector<Hit> hits;
    for (std::int64_t d = d_min; d <= d_max; ++d) {
        Rational alpha = (base - Rational(big_r * d)) / Rational(k);
        WallWitness w{f.p_sub, f.q_sub, d};
        if (opts.mw_filter && !admits_semistable_split(w, alpha, opts.ctx->twist_degree())) continue;
        hits.push_back({std::move(alpha), w});
    }
    return hits;
}

unsigned resolve_threads(unsigned requested, std::size_t jobs) {
    unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

}  // namespace

void AlphaInterval::validate() const {
    if (lo > hi) throw std::invalid_argument("empty interval: lo " + lo.to_string() + " > hi " + hi.to_string());
}

void validate_witness(const HitchinPairType& t, const WallWitness& w) {
    t.validate();
    const auto r = w.p_sub + w.q_sub;
    if (w.p_sub < 0 || w.p_sub > t.p || w.q_sub < 0 || w.q_sub > t.q || r < 1 || r > t.rank() - 1) {
        throw std::invalid_argument("sub-type ranks (" + std::to_string(w.p_sub) + "," +
                                    std::to_string(w.q_sub) + ") are not a proper sub-type");
    }
}

std::optional<Rational> wall_alpha(const HitchinPairType& t, const WallWitness& w) {
    validate_witness(t, w);
    const auto r_sub = w.p_sub + w.q_sub;
    const auto k = w.p_sub * t.rank() - t.p * r_sub;
    if (k == 0) return std::nullopt;
    return Rational(t.degree() * r_sub - t.rank() * w.d_sub, k);
}

bool admits_semistable_split(const WallWitness& w, const Rational& alpha, std::int64_t deg_l) {
    if (w.p_sub == 0 || w.q_sub == 0) {
        // tau' = 0 and min(p', q') = 0 collapses every regime to [0, 0].
        return true;
    }
    const auto bounds = toledo_bounds(w.p_sub, w.q_sub, deg_l, alpha);
    if (!bounds.feasible()) return false;
    // tau'(a') = 2a' - 2 p' d' / r'
    const Rational offset(2 * w.p_sub * w.d_sub, w.p_sub + w.q_sub);
    const Rational a_min = ((bounds.lower() + offset) / Rational(2)).ceil();
    const Rational a_max = ((bounds.upper() + offset) / Rational(2)).floor();
    return a_min <= a_max;
}

std::vector<Wall> enumerate_walls(const HitchinPairType& t, const AlphaInterval& interval,
                                  const WallOptions& opts) {
    t.validate();
    interval.validate();
    if (opts.mw_filter) {
        if (!opts.ctx) throw std::invalid_argument("mw filter needs a geometry context");
        if (opts.ctx->twist_degree() < 0) throw std::invalid_argument("mw filter needs deg(L) >= 0");
    }

    const auto families = admissible_families(t);
    std::vector<std::vector<Hit>> per_family(families.size());
    const unsigned n_threads = resolve_threads(opts.threads, families.size());

    if (n_threads <= 1) {
        for (std::size_t i = 0; i < families.size(); ++i) per_family[i] = scan_family(t, families[i], interval, opts);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < n_threads; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < families.size(); i = next++) {
                    try {
                        per_family[i] = scan_family(t, families[i], interval, opts);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        workers.clear();
        if (failure) std::rethrow_exception(failure);
    }

    std::map<Rational, std::vector<WallWitness>> merged;
    for (auto& hits : per_family) {
        for (auto& h : hits) merged[h.alpha].push_back(h.witness);
    }
    std::vector<Wall> walls;
    walls.reserve(merged.size());
    for (auto& [alpha, witnesses] : merged) {
        std::sort(witnesses.begin(), witnesses.end());
        witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
        walls.push_back(Wall{alpha, std::move(witnesses)});
    }
    return walls;
}

std::vector<Chamber> chambers_between(const AlphaInterval& interval, const std::vector<Wall>& walls) {
    interval.validate();
    std::vector<Rational> points{interval.lo};
    for (const auto& w : walls) {
        if (!interval.contains(w.alpha)) throw std::invalid_argument("wall outside interval");
        if (w.alpha != points.back()) points.push_back(w.alpha);
    }
    if (interval.hi != points.back()) points.push_back(interval.hi);

    auto is_wall = [&](const Rational& x) {
        return std::any_of(walls.begin(), walls.end(), [&](const Wall& w) { return w.alpha == x; });
    };

    std::vector<Chamber> chambers;
    if (points.size() == 1) {
        if (!is_wall(points.front())) chambers.push_back({points.front(), points.front(), true, true});
        return chambers;
    }
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        chambers.push_back({points[i], points[i + 1], !is_wall(points[i]), !is_wall(points[i + 1])});
    }
    return chambers;
}

ChamberReport chamber_report(const HitchinPairType& t, const AlphaInterval& interval, const WallOptions& opts) {
    auto walls = enumerate_walls(t, interval, opts);
    auto chambers = chambers_between(interval, walls);
    return ChamberReport{t, interval, std::move(walls), std::move(chambers)};
}

QuiverNumericalType witness_quiver_type(const WallWitness& w) {
    if (w.p_sub > 0) return QuiverNumericalType{{VertexData{w.p_sub, w.d_sub}, VertexData{w.q_sub, 0}}};
    return QuiverNumericalType{{VertexData{0, 0}, VertexData{w.q_sub, w.d_sub}}};
}

}  // namespace upq
