#pragma once

#include "upq/model.hpp"
#include "upq/rational.hpp"
#include "upq/walls.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace upq::oracle {

/// Degree bound that every sub-type critical in [lo, hi] satisfies:
/// |d'| <= r'(|D|/R + max(|lo|, |hi|)), maximised at r' = R - 1.
std::int64_t required_degree_bound(const HitchinPairType& t, const AlphaInterval& interval);

/// Exhaustive scan over all proper sub-types (p', q', d') with |d'| <= bound,
/// locating each critical value as the root of the affine function
/// alpha -> mu_alpha(sub) - mu_alpha(whole). Throws std::invalid_argument
/// naming the required bound when degree_bound is too small.
std::vector<Wall> brute_force_walls(const HitchinPairType& t, const AlphaInterval& interval,
                                    std::int64_t degree_bound);

/// Regime Toledo bounds recovered from the rank-dependent bounds by scanning
/// every Higgs field rank in [0, min(p, q)]: upper is the max over rk(gamma),
/// lower the min over rk(beta). Requires degL >= 0.
BoundInterval envelope_bounds(std::int64_t p, std::int64_t q, std::int64_t deg_l, const Rational& alpha);

/// Deterministic source for the randomized suites: std::mt19937_64 (whose
/// output sequence is fixed by the C++ standard) with rejection sampling for
/// bounded integers, so draws match on every conforming platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// Rational num/den with num in [lo*den, hi*den] and den in [1, max_den].
    Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den);

private:
    std::mt19937_64 engine_;
};

struct SuiteFailure {
    std::size_t trial = 0;
    std::string inputs;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::vector<SuiteFailure> failures;

    bool ok() const { return failures.empty() && passed == cases; }
};

struct SelfTestReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<SuiteResult> suites;

    bool ok() const;
};

/// Names of the randomized suites, in report order.
const std::vector<std::string>& suite_names();

/// Runs one suite for the given number of trials. `threads` is forwarded to
/// wall enumeration.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t trials, unsigned threads = 0);

/// Runs every suite. Throws std::invalid_argument when trials == 0.
SelfTestReport property_driver(std::uint64_t seed, std::size_t trials, unsigned threads = 0);

}  // namespace upq::oracle
