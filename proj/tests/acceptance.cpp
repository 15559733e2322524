// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. All comparisons are exact rational equality.

#include "upq/certificate.hpp"
#include "upq/milnor_wood.hpp"
#include "upq/oracle.hpp"
#include "upq/slope.hpp"
#include "upq/walls.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#ifndef UPQ_CLI_PATH
#error "UPQ_CLI_PATH must point at the upq executable"
#endif

using namespace upq;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string type_str(const HitchinPairType& t) {
    std::ostringstream os;
    os << "(" << t.p << "," << t.q << "," << t.a << "," << t.b << ")";
    return os.str();
}

// 41 equally spaced points over [-degL-2, degL+2].
std::vector<Rational> alpha_grid(std::int64_t deg_l) {
    std::vector<Rational> grid;
    const Rational lo(-deg_l - 2);
    const Rational step(2 * (deg_l + 2), 40);
    for (std::int64_t k = 0; k <= 40; ++k) grid.push_back(lo + step * Rational(k));
    return grid;
}

Outcome wall_enumeration_sweep() {
    Outcome o;
    const auto start = Clock::now();
    const AlphaInterval iv{Rational(-6), Rational(6)};
    std::size_t instances = 0;
    for (std::int64_t p = 1; p <= 4; ++p) {
        for (std::int64_t q = 1; p + q <= 5; ++q) {
            for (std::int64_t a = -3; a <= 3; ++a) {
                for (std::int64_t b = -3; b <= 3; ++b) {
                    const HitchinPairType t{p, q, a, b};
                    ++instances;
                    const auto fast = enumerate_walls(t, iv);
                    const auto slow = oracle::brute_force_walls(t, iv, oracle::required_degree_bound(t, iv));
                    if (fast != slow) o.fail("mismatch at t=" + type_str(t));
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 10.0) o.fail("sweep took " + std::to_string(elapsed) + " s (limit 10 s)");
    if (o.pass) o.detail = std::to_string(instances) + " types, " + std::to_string(elapsed) + " s";
    return o;
}

Outcome canonical_instance() {
    Outcome o;
    const auto walls = enumerate_walls(HitchinPairType{1, 1, 1, 0}, AlphaInterval{Rational(-2), Rational(2)});
    const std::vector<Wall> expected = {
        Wall{Rational(-1), {WallWitness{0, 1, 0}, WallWitness{1, 0, 1}}},
        Wall{Rational(1), {WallWitness{0, 1, 1}, WallWitness{1, 0, 0}}},
    };
    if (walls != expected) o.fail("walls differ from {-1, 1}");
    return o;
}

template <typename Check>
Outcome over_bounds_grid(Check&& check) {
    Outcome o;
    for (std::int64_t p = 1; p <= 8; ++p) {
        for (std::int64_t q = 1; q <= 8; ++q) {
            for (std::int64_t deg_l = 0; deg_l <= 4; ++deg_l) {
                const auto why = check(p, q, deg_l);
                if (!why.empty()) {
                    o.fail("p=" + std::to_string(p) + " q=" + std::to_string(q) + " degL=" + std::to_string(deg_l) +
                           ": " + why);
                }
            }
        }
    }
    return o;
}

Outcome envelope_identity() {
    const auto start = Clock::now();
    auto o = over_bounds_grid([](std::int64_t p, std::int64_t q, std::int64_t deg_l) -> std::string {
        for (const auto& alpha : alpha_grid(deg_l)) {
            const auto b = toledo_bounds(p, q, deg_l, alpha);
            const auto e = oracle::envelope_bounds(p, q, deg_l, alpha);
            if (b.raw_lower() != e.raw_lower() || b.raw_upper() != e.raw_upper()) return "alpha=" + alpha.to_string();
        }
        return {};
    });
    const double elapsed = seconds_since(start);
    if (elapsed >= 5.0) o.fail("grid took " + std::to_string(elapsed) + " s (limit 5 s)");
    if (o.pass) o.detail = "64x5x41 points, " + std::to_string(elapsed) + " s";
    return o;
}

Outcome regime_continuity() {
    return over_bounds_grid([](std::int64_t p, std::int64_t q, std::int64_t deg_l) -> std::string {
        const Rational d(deg_l);
        const auto check = [&](const Rational& alpha, Regime left, Regime right) {
            const auto l = toledo_bounds_in_regime(p, q, deg_l, alpha, left);
            const auto r = toledo_bounds_in_regime(p, q, deg_l, alpha, right);
            return l.raw_lower() == r.raw_lower() && l.raw_upper() == r.raw_upper();
        };
        if (!check(-d, Regime::below, Regime::middle)) return "regimes i/ii disagree";
        if (!check(d, Regime::middle, Regime::above)) return "regimes ii/iii disagree";
        return {};
    });
}

Outcome zero_alpha_specialization() {
    return over_bounds_grid([](std::int64_t p, std::int64_t q, std::int64_t deg_l) -> std::string {
        const auto b = toledo_bounds(p, q, deg_l, Rational(0));
        const Rational limit(std::min(p, q) * deg_l);
        if (!b.feasible() || b.lower() != -limit || b.upper() != limit) return "bounds differ from +-min(p,q)degL";
        return {};
    });
}

Outcome certificates() {
    Outcome o;
    const auto c1 = certify_irreducibility(HitchinPairType{1, 1, -1, 0}, 2, Rational(0));
    if (!c1.closure_irreducible || !c1.fully_irreducible) o.fail("(1,1,-1,0) should be fully irreducible");
    const auto c2 = certify_irreducibility(HitchinPairType{1, 1, 0, 0}, 2, Rational(0));
    if (c2.closure_irreducible) o.fail("(1,1,0,0) should not be certified");
    for (const auto& alpha : {Rational(-2), Rational(0), Rational(3, 2)}) {
        const auto c3 = certify_irreducibility(HitchinPairType{1, 1, 3, 0}, 2, alpha);
        if (c3.tau_bound_ok) o.fail("(1,1,3,0) should fail the Toledo bound");
    }
    return o;
}

Outcome from_suites(const std::vector<std::string>& names, std::size_t trials) {
    Outcome o;
    std::size_t cases = 0;
    for (const auto& name : names) {
        const auto s = oracle::run_suite(name, 0, trials);
        cases += s.cases;
        if (s.cases != trials) o.fail(name + " ran " + std::to_string(s.cases) + " cases");
        for (const auto& f : s.failures) o.fail(name + " trial " + std::to_string(f.trial) + ": " + f.inputs + " " + f.detail);
    }
    if (o.pass) o.detail = std::to_string(cases) + " cases, 0 counterexamples";
    return o;
}

std::string capture(const std::string& command, int& status) {
    std::array<char, 4096> buffer{};
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::size_t n = 0;
    while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
    status = pclose(pipe);
    return out;
}

Outcome determinism() {
    Outcome o;
    const std::string cli = UPQ_CLI_PATH;
    const std::vector<std::string> commands = {
        cli + " walls --type 3,2,1,-2 --interval -6,6",
        cli + " selftest --seed 0 --trials 1000",
    };
    for (const auto& base : commands) {
        std::string reference;
        bool first = true;
        for (const std::string threads : {"1", "0"}) {
            for (int run = 0; run < 3; ++run) {
                int status = 0;
                const auto out = capture(base + " --threads " + threads, status);
                if (status != 0) o.fail("'" + base + "' exited with status " + std::to_string(status));
                if (first) {
                    reference = out;
                    first = false;
                    if (out.empty()) o.fail("'" + base + "' produced no output");
                } else if (out != reference) {
                    o.fail("'" + base + "' output differs (threads " + threads + ", run " + std::to_string(run) + ")");
                }
            }
        }
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 wall enumeration equals brute force (p+q<=5, |a|,|b|<=3, [-6,6])", wall_enumeration_sweep},
        {"AC2 canonical instance (1,1,1,0) on [-2,2] has walls {-1,1}", canonical_instance},
        {"AC3 regime bounds equal the rank envelope on the 41-point grid", envelope_identity},
        {"AC4 regime continuity at alpha = +-degL", regime_continuity},
        {"AC5 alpha = 0 gives |tau| <= min(p,q) degL", zero_alpha_specialization},
        {"AC6 irreducibility certificates", certificates},
        {"AC7 Toledo bound implies the strict degree condition (1000 types)",
         [] { return from_suites({"remark_degree_condition"}, 1000); }},
        {"AC8 translation invariance and duality (1000 instances each)",
         [] { return from_suites({"translation_invariance", "toledo_duality", "bounds_duality"}, 1000); }},
        {"AC9 walls and selftest output is byte-identical across runs and thread counts", determinism},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name;
        if (!o.detail.empty()) std::cout << " -- " << o.detail;
        std::cout << "\n";
        if (!o.pass) ++failures;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
