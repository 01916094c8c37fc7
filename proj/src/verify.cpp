#include "crossint/verify.hpp"

#include <algorithm>
#include <bit>

#include "crossint/exactmath.hpp"

namespace crossint {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::string describe(const Family& f, const Family& g, int t)
{
    return "t=" + std::to_string(t) + "\nF:\n" + serialize(f) + "G:\n" + serialize(g);
}

} // namespace

InstanceParams random_params(std::mt19937_64& rng, int max_n)
{
    const int n = uniform(rng, 2, max_n);
    const int a = uniform(rng, 1, n);
    const int b = uniform(rng, 1, n);
    const int t = uniform(rng, 1, std::min(a, b));
    return {n, a, b, t};
}

PairSample random_cross_pair(std::mt19937_64& rng, const InstanceParams& params)
{
    params.validate();
    if (params.t > std::min(params.a, params.b))
        throw UsageError("random_cross_pair needs t <= min(a, b)");
    const int n = params.n;
    std::vector<SetMask> layer = k_subsets(n, params.a);
    std::shuffle(layer.begin(), layer.end(), rng);
    std::vector<SetMask> partners = k_subsets(n, params.b);

    const int target = uniform(rng, 1, static_cast<int>(std::min<std::size_t>(layer.size(), 12)));
    std::vector<SetMask> f;
    for (SetMask x : layer) {
        if (static_cast<int>(f.size()) == target)
            break;
        std::vector<SetMask> kept;
        for (SetMask y : partners)
            if (std::popcount(x.bits() & y.bits()) >= params.t)
                kept.push_back(y);
        // t <= min(a, b) gives every a-set some partner, so the first pick survives
        if (kept.empty())
            continue;
        f.push_back(x);
        partners = std::move(kept);
    }

    std::vector<SetMask> g;
    const double keep = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
    for (SetMask y : partners)
        if (std::bernoulli_distribution(keep)(rng))
            g.push_back(y);
    if (g.empty())
        g.push_back(partners[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(partners.size()) - 1))]);

    return {params, Family(n, params.a, std::move(f)), Family(n, params.b, std::move(g))};
}

CompressionCheck check_compression(const Family& f, const Family& g, int t)
{
    CompressionCheck check;
    auto fail = [&](bool& flag, const std::string& why) {
        if (flag && check.first_failure.empty())
            check.first_failure = why + "\n" + describe(f, g, t);
        flag = false;
    };

    long previous_weight = f.weight();
    CompressionOptions options;
    options.on_step = [&](int i, int j, const Family& cf, const Family& cg) {
        const std::string step = "step delta_" + std::to_string(i) + "," + std::to_string(j);
        if (cf.count() != f.count() || cg.count() != g.count())
            fail(check.sizes_preserved, step + " changed a family size");
        if (!is_cross_t_intersecting(cf, cg, t))
            fail(check.cross_preserved, step + " broke cross-t-intersection");
        if (cf.weight() >= previous_weight)
            fail(check.weight_decreasing, step + " did not lower w(F)");
        previous_weight = cf.weight();
    };
    const CompressionResult result = compress_pair_to_fixpoint(f, g, options);
    check.steps = result.steps;

    if (result.f.count() != f.count() || result.g.count() != g.count())
        fail(check.sizes_preserved, "fixpoint changed a family size");
    if (!is_left_compressed(result.f))
        fail(check.left_compressed, "fixpoint F is not left-compressed");
    for (SetMask x : result.f.members())
        for (SetMask y : result.g.members()) {
            if (!condition_a(x, y, t)) {
                fail(check.condition_a_everywhere, "member pair violates the prefix condition");
                continue;
            }
            const auto cert = prefix_certificate(x, y, t);
            if (!cert || cert->u + cert->v != cert->s + t || x.prefix_count(cert->s) < cert->u ||
                y.prefix_count(cert->s) < cert->v || cert->u < 1 || cert->v < 1 || cert->u > f.ground() ||
                cert->v > f.ground())
                fail(check.certificates_valid, "member pair has no Hirschorn certificate");
        }
    return check;
}

CompressionSuiteStats compression_suite(long trials, std::uint64_t seed, const std::optional<InstanceParams>& fixed,
                                        int max_n)
{
    std::mt19937_64 rng(seed);
    CompressionSuiteStats stats;
    for (long trial = 0; trial < trials; ++trial) {
        const InstanceParams params = fixed ? *fixed : random_params(rng, max_n);
        const PairSample sample = random_cross_pair(rng, params);
        const CompressionCheck check = check_compression(sample.f, sample.g, params.t);
        ++stats.trials;
        stats.total_steps += check.steps;
        if (check.ok()) {
            ++stats.passed;
        } else {
            ++stats.failed;
            if (!stats.first_failure)
                stats.first_failure = to_string(params) + ": " + check.first_failure;
        }
    }
    return stats;
}

PrefixScanStats prefix_condition_scan(int n, int a, int b, int t)
{
    if (n <= a + b - t)
        throw UsageError("prefix_condition_scan needs n > a + b - t");
    PrefixScanStats stats;
    const std::vector<SetMask> fs = k_subsets(n, a);
    const std::vector<SetMask> gs = k_subsets(n, b);
    for (SetMask f : fs)
        for (SetMask g : gs) {
            const bool lhs = condition_a(f, g, t);
            ++stats.pairs_checked;
            stats.condition_a_true += lhs ? 1 : 0;
            if (lhs != condition_b(f, g, t))
                ++stats.discrepancies;
        }
    return stats;
}

PrefixScanStats prefix_condition_scan(int n)
{
    PrefixScanStats total;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int t = 1; t <= std::min(a, b); ++t) {
                if (n <= a + b - t)
                    continue;
                const PrefixScanStats part = prefix_condition_scan(n, a, b, t);
                total.pairs_checked += part.pairs_checked;
                total.discrepancies += part.discrepancies;
                total.condition_a_true += part.condition_a_true;
            }
    return total;
}

} // namespace crossint
