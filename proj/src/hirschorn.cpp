#include "crossint/hirschorn.hpp"

#include <algorithm>

namespace crossint {

BigCount count_prefix_threshold(int n, int m, int s, int u)
{
    if (m < 0 || m > n)
        throw UsageError("count_prefix_threshold: m outside [0, n]");
    if (s < 0 || s > n)
        throw UsageError("count_prefix_threshold: s outside [0, n]");
    BigCount total = 0;
    for (int i = std::max(u, 0); i <= std::min(s, m); ++i)
        total += binomial(s, i) * binomial(n - s, m - i);
    return total;
}

ThresholdTable::ThresholdTable(int n, int m) : ThresholdTable(n, m, BinomialTable(n)) {}

ThresholdTable::ThresholdTable(int n, int m, const BinomialTable& binom) : n_(n), m_(m)
{
    if (n < 0 || m < 0 || m > n)
        throw UsageError("ThresholdTable: need 0 <= m <= n");
    if (binom.max_n() < n)
        throw UsageError("ThresholdTable: binomial table too small");
    counts_.resize(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s) {
        auto& row = counts_[static_cast<std::size_t>(s)];
        row.assign(static_cast<std::size_t>(n) + 2, BigCount(0));
        for (int u = n; u >= 0; --u) {
            row[static_cast<std::size_t>(u)] = row[static_cast<std::size_t>(u) + 1];
            if (u <= s && u <= m)
                row[static_cast<std::size_t>(u)] += binom(s, u) * binom(n - s, m - u);
        }
    }
}

const BigCount& ThresholdTable::operator()(int s, int u) const
{
    if (s < 0 || s > n_)
        throw UsageError("ThresholdTable: s outside [0, n]");
    if (u <= 0)
        return counts_[static_cast<std::size_t>(s)][0];
    if (u > n_)
        return counts_[static_cast<std::size_t>(s)][static_cast<std::size_t>(n_) + 1];
    return counts_[static_cast<std::size_t>(s)][static_cast<std::size_t>(u)];
}

void HirschornPair::validate() const
{
    params.validate();
    const int n = params.n;
    if (s < 1 || s > n || u < 1 || u > n || v < 1 || v > n)
        throw UsageError("Hirschorn pair needs s, u, v in [n]");
    if (u + v != s + params.t)
        throw UsageError("Hirschorn pair needs u + v = s + t");
}

std::pair<BigCount, BigCount> pair_sizes(const HirschornPair& p)
{
    p.validate();
    return {count_prefix_threshold(p.params.n, p.params.a, p.s, p.u),
            count_prefix_threshold(p.params.n, p.params.b, p.s, p.v)};
}

std::pair<Family, Family> pair_families(const HirschornPair& p)
{
    p.validate();
    const int n = p.params.n;
    return {Family::filtered(n, p.params.a, [&](SetMask x) { return x.prefix_count(p.s) >= p.u; }),
            Family::filtered(n, p.params.b, [&](SetMask x) { return x.prefix_count(p.s) >= p.v; })};
}

BigCount apply_functional(Functional f, const BigCount& x, const BigCount& y)
{
    return f == Functional::product ? BigCount(x * y) : BigCount(x + y);
}

HirschornOptimum hirschorn_optimum(const InstanceParams& params, Functional functional)
{
    params.validate();
    const BinomialTable binom(params.n);
    const ThresholdTable for_a(params.n, params.a, binom);
    const ThresholdTable for_b(params.n, params.b, binom);
    return hirschorn_optimum(params, functional, for_a, for_b);
}

HirschornOptimum hirschorn_optimum(const InstanceParams& params, Functional functional,
                                   const ThresholdTable& for_a, const ThresholdTable& for_b)
{
    params.validate();
    const int n = params.n;
    if (for_a.ground() != n || for_b.ground() != n || for_a.member_size() != params.a ||
        for_b.member_size() != params.b)
        throw UsageError("threshold tables do not match the instance");

    HirschornOptimum best;
    best.functional = functional;
    bool any = false;
    BigCount value;
    // s ascending, u ascending: the argmax list comes out lexicographic
    for (int s = 1; s <= n; ++s) {
        for (int u = 1; u <= n; ++u) {
            const int v = s + params.t - u;
            if (v < 1 || v > n)
                continue;
            value = apply_functional(functional, for_a(s, u), for_b(s, v));
            if (!any || value > best.value) {
                best.value = value;
                best.argmax.assign(1, Triple{s, u, v});
                any = true;
            } else if (value == best.value) {
                best.argmax.push_back(Triple{s, u, v});
            }
        }
    }
    return best;
}

} // namespace crossint
