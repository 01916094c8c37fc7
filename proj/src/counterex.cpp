#include "crossint/counterex.hpp"

#include <algorithm>

namespace crossint {

CaseSizes case1_sizes(int n, int s)
{
    return {BigCount(s) * (n - s) + binomial(s, 2), binomial(n - s, 2)};
}

CaseSizes case2_sizes(int n, int s)
{
    return {binomial(s, 2), BigCount(s) * (n - s) + binomial(n - s, 2)};
}

std::vector<long> quadratic_integer_roots(long n)
{
    if (n < 1)
        throw UsageError("quadratic_integer_roots: n must be positive");
    std::vector<long> roots;
    for (long s = 1; s <= n; ++s) {
        const BigCount q = BigCount(2) * s * s - BigCount(4 * n - 2) * s + BigCount(n) * n - n;
        if (sgn(q) == 0)
            roots.push_back(s);
    }
    return roots;
}

bool mod3_certificate(long n)
{
    return ((n % 3) + 3) % 3 == 2;
}

bool Prop4Report::claim_holds() const
{
    if (!in_series)
        return true;
    return quadratic_roots.empty() && mod3 && pairing_bound_ok && hirschorn_max < split_product;
}

Prop4Report prop4_scan(int n)
{
    if (n < 4)
        throw UsageError("prop4_scan needs n >= 4");
    const BigCount pairs = binomial(n, 2);
    if (mpz_odd_p(pairs.get_mpz_t()))
        throw UsageError("prop4_scan needs C(n,2) even, n = " + std::to_string(n));

    Prop4Report r;
    r.n = n;
    r.binom_half = pairs / 2;
    r.split_product = r.binom_half * r.binom_half;
    r.quadratic_roots = quadratic_integer_roots(n);
    r.mod3 = mod3_certificate(n);
    r.in_series = n % 12 == 8;

    const InstanceParams params{n, 2, n - 2, 1};
    const BinomialTable binom(n);
    const ThresholdTable for_a(n, 2, binom);
    const ThresholdTable for_b(n, n - 2, binom);
    const HirschornOptimum opt = hirschorn_optimum(params, Functional::product, for_a, for_b);
    r.hirschorn_max = opt.value;
    r.hirschorn_argmax = opt.argmax;

    r.pairing_bound_ok = true;
    for (int s = 1; s <= n; ++s)
        for (int u = 1; u <= n; ++u) {
            const int v = s + 1 - u;
            if (v >= 1 && v <= n && for_a(s, u) + for_b(s, v) > pairs)
                r.pairing_bound_ok = false;
        }
    return r;
}

BigCount count_two_prefix(int n, int m, int s1, int s2, const std::function<bool(int, int)>& prefix_rule)
{
    if (!(1 <= s1 && s1 < s2 && s2 <= n))
        throw UsageError("count_two_prefix needs 1 <= s1 < s2 <= n");
    if (m < 0 || m > n)
        throw UsageError("count_two_prefix needs 0 <= m <= n");
    BigCount total = 0;
    for (int i = 0; i <= std::min(m, s1); ++i)
        for (int j = 0; j <= std::min(m - i, s2 - s1); ++j)
            if (prefix_rule(i, i + j))
                total += binomial(s1, i) * binomial(s2 - s1, j) * binomial(n - s2, m - i - j);
    return total;
}

bool AkBkReport::argmax_has_balanced_triple() const
{
    return std::find(hirschorn_argmax.begin(), hirschorn_argmax.end(), Triple{2 * k, k + 1, k + 1}) !=
           hirschorn_argmax.end();
}

AkBkReport akbk_report(int k)
{
    if (k < 3)
        throw UsageError("akbk_report needs k >= 3");
    AkBkReport r;
    r.k = k;
    r.n = 4 * k + 3;
    r.a = 2 * k + 1;
    r.b = 2 * k + 2;
    r.in_claimed_range = k <= 50;

    const int s1 = 2 * k + 1;
    const int s2 = 2 * k + 3;
    r.size_a = count_two_prefix(r.n, r.a, s1, s2, [k](int i, int ij) { return i >= k + 1 && ij >= k + 2; });
    r.size_b = count_two_prefix(r.n, r.b, s1, s2, [k](int i, int ij) { return i >= k + 2 || ij >= k + 3; });
    r.product = r.size_a * r.size_b;

    const BinomialTable binom(r.n);
    const ThresholdTable for_a(r.n, r.a, binom);
    const HirschornOptimum opt =
        hirschorn_optimum({r.n, r.a, r.b, 2}, Functional::product, for_a, ThresholdTable(r.n, r.b, binom));
    r.hirschorn_max = opt.value;
    r.hirschorn_argmax = opt.argmax;
    const HirschornOptimum alt =
        hirschorn_optimum({r.n, r.a, r.b + 1, 2}, Functional::product, for_a, ThresholdTable(r.n, r.b + 1, binom));
    r.hirschorn_max_b_plus_one = alt.value;
    r.hirschorn_argmax_b_plus_one = alt.argmax;
    return r;
}

bool in_a_k(int k, SetMask x)
{
    return x.prefix_count(2 * k + 1) >= k + 1 && x.prefix_count(2 * k + 3) >= k + 2;
}

bool in_b_k(int k, SetMask x)
{
    return x.prefix_count(2 * k + 1) >= k + 2 || x.prefix_count(2 * k + 3) >= k + 3;
}

std::pair<Family, Family> akbk_families(int k)
{
    const int n = 4 * k + 3;
    if (k < 0 || n > max_ground_size)
        throw UsageError("explicit A_k, B_k need 4k+3 <= 32");
    return {Family::filtered(n, 2 * k + 1, [k](SetMask x) { return in_a_k(k, x); }),
            Family::filtered(n, 2 * k + 2, [k](SetMask x) { return in_b_k(k, x); })};
}

} // namespace crossint
