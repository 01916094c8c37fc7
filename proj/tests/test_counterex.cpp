#include <doctest.h>

#include "crossint/counterex.hpp"

using namespace crossint;

TEST_CASE("prop4_scan at n = 8")
{
    const Prop4Report r = prop4_scan(8);
    CHECK(r.quadratic_roots.empty());
    CHECK(r.binom_half == 14);
    CHECK(r.split_product == 196);
    CHECK(r.hirschorn_max == 195);
    CHECK(r.hirschorn_argmax == std::vector<Triple>{{2, 1, 2}, {6, 2, 5}});
    CHECK(r.mod3);
    CHECK(r.in_series);
    CHECK(r.pairing_bound_ok);
    CHECK(r.claim_holds());
}

TEST_CASE("prop4_scan outside the series and bad input")
{
    CHECK(prop4_scan(20).quadratic_roots.empty());

    const Prop4Report nine = prop4_scan(9);
    CHECK_FALSE(nine.in_series);
    CHECK_FALSE(nine.mod3);
    CHECK(nine.split_product == 324);
    CHECK(nine.claim_holds());

    CHECK_THROWS_AS(prop4_scan(6), UsageError); // C(6,2) = 15
    CHECK_THROWS_AS(prop4_scan(3), UsageError);
}

TEST_CASE("series points are strict")
{
    for (int n : {8, 20, 32, 44, 56}) {
        CAPTURE(n);
        const Prop4Report r = prop4_scan(n);
        CHECK(r.quadratic_roots.empty());
        CHECK(r.hirschorn_max < r.split_product);
        CHECK(r.pairing_bound_ok);
        CHECK(r.claim_holds());
    }
}

TEST_CASE("a root of the balance equation gives an exactly balanced Hirschorn pair")
{
    // roots exist when 2n^2 - 2n + 1 is a square, e.g. n = 4
    int found = 0;
    for (long n = 4; n <= 400; ++n)
        for (long s : quadratic_integer_roots(n)) {
            const CaseSizes c = case1_sizes(static_cast<int>(n), static_cast<int>(s));
            CHECK(c.f == c.g);
            ++found;
        }
    CHECK(found > 0);
}

TEST_CASE("mod3 certificate agrees with the root scan")
{
    CHECK(mod3_certificate(8));
    CHECK_FALSE(mod3_certificate(9));
    for (long n = 1; n <= 10000; ++n) {
        const bool no_root = quadratic_integer_roots(n).empty();
        if (mod3_certificate(n))
            CHECK(no_root);
        if (n % 12 == 8) {
            CHECK(mod3_certificate(n));
            CHECK(no_root);
        }
    }
}

TEST_CASE("case 2 is case 1 at n - s")
{
    for (int n = 2; n <= 100; ++n)
        for (int s = 1; s <= n - 1; ++s) {
            const CaseSizes c1 = case1_sizes(n, n - s);
            const CaseSizes c2 = case2_sizes(n, s);
            CHECK(c2.f == c1.g);
            CHECK(c2.g == c1.f);
        }
}

TEST_CASE("case sizes match the Hirschorn pair sizes")
{
    for (int n = 4; n <= 30; ++n)
        for (int s = 1; s <= n; ++s) {
            const auto [f1, g1] = pair_sizes({{n, 2, n - 2, 1}, s, 1, s});
            CHECK(case1_sizes(n, s) == CaseSizes{f1, g1});
            if (s >= 2) {
                const auto [f2, g2] = pair_sizes({{n, 2, n - 2, 1}, s, 2, s - 1});
                CHECK(case2_sizes(n, s) == CaseSizes{f2, g2});
            }
        }
}

TEST_CASE("count_two_prefix")
{
    for (int n = 2; n <= 12; ++n)
        for (int m = 0; m <= n; ++m)
            for (int s1 = 1; s1 < n; ++s1)
                for (int s2 = s1 + 1; s2 <= n; ++s2) {
                    CHECK(count_two_prefix(n, m, s1, s2, [](int, int) { return true; }) == binomial(n, m));
                    for (int u = 0; u <= m + 1; ++u)
                        CHECK(count_two_prefix(n, m, s1, s2, [u](int i, int) { return i >= u; }) ==
                              count_prefix_threshold(n, m, s1, u));
                }
    CHECK_THROWS_AS(count_two_prefix(5, 2, 3, 3, [](int, int) { return true; }), UsageError);
}

TEST_CASE("A_3 and B_3 counts match bitmask enumeration")
{
    const AkBkReport r = akbk_report(3);
    CHECK(r.n == 15);
    CHECK(r.a == 7);
    CHECK(r.b == 8);

    long direct_a = 0;
    for (SetMask x : k_subsets(15, 7))
        if (x.prefix_count(7) >= 4 && x.prefix_count(9) >= 5)
            ++direct_a;
    long direct_b = 0;
    for (SetMask x : k_subsets(15, 8))
        if (x.prefix_count(7) >= 5 || x.prefix_count(9) >= 6)
            ++direct_b;
    CHECK(r.size_a == direct_a);
    CHECK(r.size_b == direct_b);
    CHECK(r.size_a == 1905);
    CHECK(r.size_b == 1905);
    CHECK(r.product == 3629025);
    CHECK(r.hirschorn_max == 3608550);
    CHECK(r.hirschorn_argmax == std::vector<Triple>{{6, 4, 4}, {9, 5, 6}});
    CHECK(r.argmax_has_balanced_triple());
    CHECK(r.product_exceeds_hirschorn());
}

TEST_CASE("explicit A_k, B_k for k = 3, 4 are cross-2-intersecting")
{
    for (int k : {3, 4}) {
        CAPTURE(k);
        const auto [fa, fb] = akbk_families(k);
        const AkBkReport r = akbk_report(k);
        CHECK(BigCount(static_cast<unsigned long>(fa.count())) == r.size_a);
        CHECK(BigCount(static_cast<unsigned long>(fb.count())) == r.size_b);
        CHECK(is_cross_t_intersecting(fa, fb, 2));
    }
    CHECK(akbk_report(4).product == 866183761);
    CHECK(akbk_report(4).hirschorn_max == 859305337);
    CHECK_THROWS_AS(akbk_report(2), UsageError);
}

TEST_CASE("A_k B_k beats every Hirschorn pair for k = 3..50")
{
    for (int k = 3; k <= 50; ++k) {
        CAPTURE(k);
        const AkBkReport r = akbk_report(k);
        CHECK(r.in_claimed_range);
        CHECK(r.product_exceeds_hirschorn());
    }
    CHECK_FALSE(akbk_report(51).in_claimed_range);
}

TEST_CASE("where the Hirschorn maximum sits for k = 3..50")
{
    // (2k, k+1, k+1) is a maximiser up to k = 48; at k = 49, 50 the pair
    // (2k-2, k, k) overtakes it by a relative 1e-6 or less
    for (int k = 3; k <= 48; ++k) {
        CAPTURE(k);
        CHECK(akbk_report(k).argmax_has_balanced_triple());
    }
    for (int k : {49, 50}) {
        CAPTURE(k);
        const AkBkReport r = akbk_report(k);
        CHECK_FALSE(r.argmax_has_balanced_triple());
        CHECK(r.hirschorn_argmax == std::vector<Triple>{{2 * k - 2, k, k}, {2 * k + 5, k + 3, k + 4}});
        const auto [f, g] = pair_sizes({{r.n, r.a, r.b, 2}, 2 * k, k + 1, k + 1});
        CHECK(f * g < r.hirschorn_max);
        CHECK(r.product_exceeds_hirschorn());
    }
}
