#ifndef CROSSINT_VERIFY_HPP
#define CROSSINT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "crossint/params.hpp"
#include "crossint/setfam.hpp"

namespace crossint {

struct PairSample {
    InstanceParams params;
    Family f;
    Family g;
};

/// Random nonempty cross-t-intersecting pair: F grows greedily from a
/// shuffled layer while its dual stays nonempty, then G is a random
/// nonempty subset of that dual. Needs t <= min(a, b) and n <= 32.
PairSample random_cross_pair(std::mt19937_64& rng, const InstanceParams& params);

/// Random parameters with 2 <= n <= max_n and 1 <= t <= min(a, b).
InstanceParams random_params(std::mt19937_64& rng, int max_n);

struct CompressionCheck {
    long steps = 0;
    bool sizes_preserved = true;
    bool cross_preserved = true; // after every single step
    bool weight_decreasing = true;
    bool left_compressed = true;
    bool condition_a_everywhere = true;
    bool certificates_valid = true; // every member pair lies in a Hirschorn product
    std::string first_failure;

    bool ok() const
    {
        return sizes_preserved && cross_preserved && weight_decreasing && left_compressed && condition_a_everywhere &&
               certificates_valid;
    }
};

/// Compresses (F, G) to the fixpoint and checks every invariant on the way.
CompressionCheck check_compression(const Family& f, const Family& g, int t);

struct CompressionSuiteStats {
    long trials = 0;
    long passed = 0;
    long failed = 0;
    long total_steps = 0;
    std::optional<std::string> first_failure;
};

/// `trials` random pairs; fixed params when given, random ones (n <= max_n) otherwise.
CompressionSuiteStats compression_suite(long trials, std::uint64_t seed, const std::optional<InstanceParams>& fixed,
                                        int max_n = 10);

struct PrefixScanStats {
    long long pairs_checked = 0;
    long long discrepancies = 0;
    long long condition_a_true = 0;
};

/// condition_a against condition_b over all of C([n],a) x C([n],b).
/// Requires n > a + b - t.
PrefixScanStats prefix_condition_scan(int n, int a, int b, int t);

/// The same over every (a, b, t) with 1 <= t <= min(a, b) and n > a + b - t.
PrefixScanStats prefix_condition_scan(int n);

} // namespace crossint

#endif
