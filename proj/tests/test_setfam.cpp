#include <doctest.h>

#include <random>

#include "crossint/exactmath.hpp"
#include "crossint/setfam.hpp"
#include "crossint/verify.hpp"

using namespace crossint;

namespace {

Family fam(int n, int k, std::initializer_list<std::initializer_list<int>> sets)
{
    std::vector<SetMask> members;
    for (auto s : sets)
        members.push_back(SetMask::of(n, s));
    return Family(n, k, std::move(members));
}

} // namespace

TEST_CASE("SetMask basics")
{
    const SetMask x = SetMask::of(8, {2, 5, 7});
    CHECK(x.size() == 3);
    CHECK(x.contains(5));
    CHECK_FALSE(x.contains(4));
    CHECK(x.prefix_count(5) == 2);
    CHECK(x.prefix_count(0) == 0);
    CHECK(x.complement().size() == 5);
    CHECK(x.elements() == std::vector<int>{2, 5, 7});
    CHECK_THROWS_AS(SetMask(0b10000, 4), UsageError);
    CHECK_THROWS_AS(SetMask::of(4, {5}), UsageError);
    CHECK_THROWS_AS(SetMask::of(33, {1}), UsageError);

    const SetMask all32(~std::uint32_t{0}, 32);
    CHECK(all32.size() == 32);
    CHECK(all32.complement().size() == 0);
}

TEST_CASE("mth_element")
{
    CHECK(mth_element(SetMask::of(8, {2, 5, 7}), 2) == 5);
    CHECK(mth_element(SetMask::of(1, {1}), 1) == 1);
    CHECK(mth_element(SetMask::of(4, {3, 4}), 2) == 4);
    CHECK_THROWS_AS(mth_element(SetMask::of(4, {3, 4}), 3), UsageError);
    CHECK_THROWS_AS(mth_element(SetMask::of(4, {3, 4}), 0), UsageError);
}

TEST_CASE("weight")
{
    CHECK(weight(SetMask(0, 5)) == 0);
    CHECK(weight(SetMask::of(5, {1, 2, 3})) == 6);
    CHECK(weight(SetMask::of(5, {3, 4})) == 7);
    CHECK(fam(4, 2, {{1, 2}, {3, 4}}).weight() == 10);
}

TEST_CASE("delta_compress")
{
    CHECK(delta_compress(SetMask::of(4, {3, 4}), 1, 3) == SetMask::of(4, {1, 4}));
    CHECK(delta_compress(SetMask::of(4, {1, 3}), 1, 3) == SetMask::of(4, {1, 3}));
    CHECK(delta_compress(SetMask::of(4, {2, 4}), 1, 3) == SetMask::of(4, {2, 4}));
    CHECK_THROWS_AS(delta_compress(SetMask::of(4, {2, 4}), 3, 3), UsageError);
    CHECK_THROWS_AS(delta_compress(SetMask::of(4, {2, 4}), 3, 1), UsageError);
    CHECK_THROWS_AS(delta_compress(SetMask::of(4, {2, 4}), 1, 5), UsageError);
}

TEST_CASE("k_subsets enumerates each layer in ascending order")
{
    for (int n = 1; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto layer = k_subsets(n, k);
            CHECK(BigCount(static_cast<unsigned long>(layer.size())) == binomial(n, k));
            CHECK(std::is_sorted(layer.begin(), layer.end()));
            for (SetMask x : layer)
                CHECK(x.size() == k);
        }
    CHECK(k_subsets(32, 31).size() == 32);
    CHECK(k_subsets(32, 32).size() == 1);
    CHECK(k_subsets(5, 6).empty());
}

TEST_CASE("Family keeps members canonical")
{
    const Family f = fam(4, 2, {{3, 4}, {1, 2}});
    CHECK(f.members().front() == SetMask::of(4, {1, 2}));
    CHECK(f == fam(4, 2, {{1, 2}, {3, 4}}));
    CHECK_THROWS_AS(fam(4, 2, {{1, 2}, {1, 2}}), UsageError);
    CHECK_THROWS_AS(fam(4, 2, {{1, 2, 3}}), UsageError);
    CHECK_THROWS_AS(Family(4, 2, {SetMask::of(5, {1, 2})}), UsageError);
}

TEST_CASE("family_compress")
{
    CHECK(family_compress(fam(4, 2, {{3, 4}}), 1, 3) == fam(4, 2, {{1, 4}}));
    CHECK(family_compress(fam(4, 2, {{1, 4}, {3, 4}}), 1, 3) == fam(4, 2, {{1, 4}, {3, 4}}));
    // delta_12({2,3}) = {1,3} is already present, so {2,3} stays; {1,3} is fixed
    CHECK(family_compress(fam(4, 2, {{2, 3}, {1, 3}}), 1, 2) == fam(4, 2, {{1, 3}, {2, 3}}));
}

TEST_CASE("is_left_compressed")
{
    CHECK(is_left_compressed(Family::complete(4, 2)));
    CHECK(is_left_compressed(fam(4, 2, {{1, 2}})));
    CHECK_FALSE(is_left_compressed(fam(4, 2, {{2, 3}})));
    CHECK(is_left_compressed(Family(4, 2)));
}

TEST_CASE("is_cross_t_intersecting")
{
    CHECK(is_cross_t_intersecting(fam(4, 2, {{1, 2}}), fam(4, 2, {{1, 3}}), 1));
    CHECK_FALSE(is_cross_t_intersecting(fam(4, 2, {{1, 2}}), fam(4, 2, {{3, 4}}), 1));
    CHECK(is_cross_t_intersecting(Family(8, 3), Family::complete(8, 4), 5));
    CHECK_THROWS_AS(is_cross_t_intersecting(Family(4, 2), Family(5, 2), 1), UsageError);
}

TEST_CASE("condition_a")
{
    CHECK(condition_a(SetMask::of(4, {1, 2}), SetMask::of(4, {1, 3}), 1));
    CHECK_FALSE(condition_a(SetMask::of(4, {3, 4}), SetMask::of(4, {3, 4}), 2));
    // |F| + |G| >= n + t makes s = n work
    for (SetMask f : k_subsets(6, 4))
        for (SetMask g : k_subsets(6, 3))
            CHECK(condition_a(f, g, 1));
}

TEST_CASE("condition_b")
{
    CHECK_FALSE(condition_b(SetMask::of(4, {1, 2}), SetMask::of(4, {3}), 1));
    CHECK(condition_b(SetMask::of(4, {2, 3}), SetMask::of(4, {1, 2}), 1));
    CHECK_THROWS_AS(condition_b(SetMask::of(4, {1, 2}), SetMask::of(4, {1, 2, 3}), 1), UsageError);
}

TEST_CASE("the two prefix conditions agree exhaustively for n <= 8")
{
    for (int n = 1; n <= 8; ++n) {
        const PrefixScanStats stats = prefix_condition_scan(n);
        CHECK(stats.discrepancies == 0);
        if (n >= 2)
            CHECK(stats.pairs_checked > 0);
    }
    CHECK_THROWS_AS(prefix_condition_scan(4, 3, 3, 1), UsageError);
}

TEST_CASE("prefix_certificate")
{
    const auto cert = prefix_certificate(SetMask::of(4, {1, 2}), SetMask::of(4, {1, 3}), 1);
    REQUIRE(cert);
    CHECK(*cert == PrefixCertificate{1, 1, 1});
    CHECK_FALSE(prefix_certificate(SetMask::of(4, {3, 4}), SetMask::of(4, {3, 4}), 2));
}

TEST_CASE("compress_pair_to_fixpoint")
{
    SUBCASE("one step")
    {
        const auto r = compress_pair_to_fixpoint(fam(3, 1, {{2}}), fam(3, 1, {{2}}));
        CHECK(r.f == fam(3, 1, {{1}}));
        CHECK(r.g == fam(3, 1, {{1}}));
        CHECK(r.steps == 1);
    }
    SUBCASE("fixpoint input is untouched")
    {
        const Family f = fam(5, 2, {{1, 2}, {1, 3}});
        const Family g = fam(5, 3, {{1, 4, 5}, {2, 3, 5}});
        const auto r = compress_pair_to_fixpoint(f, g);
        CHECK(r.f == f);
        CHECK(r.g == g);
        CHECK(r.steps == 0);
    }
    SUBCASE("driving G too leaves both left-compressed")
    {
        CompressionOptions options;
        options.compress_g_too = true;
        const auto r = compress_pair_to_fixpoint(fam(5, 2, {{4, 5}}), fam(5, 3, {{2, 4, 5}, {3, 4, 5}}), options);
        CHECK(is_left_compressed(r.f));
        CHECK(is_left_compressed(r.g));
        CHECK(is_cross_t_intersecting(r.f, r.g, 1));
    }
}

TEST_CASE("compression preserves size on every family over C([4],2)")
{
    const auto layer = k_subsets(4, 2);
    for (unsigned pick = 0; pick < (1u << layer.size()); ++pick) {
        std::vector<SetMask> members;
        for (std::size_t i = 0; i < layer.size(); ++i)
            if (pick & (1u << i))
                members.push_back(layer[i]);
        const Family f(4, 2, members);
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                const Family c = family_compress(f, i, j);
                CHECK(c.count() == f.count());
                CHECK(c.weight() <= f.weight());
                if (c != f)
                    CHECK(c.weight() < f.weight());
            }
    }
}

TEST_CASE("single compressions keep random pairs cross-t-intersecting")
{
    std::mt19937_64 rng(20240611);
    int checked = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const InstanceParams p = random_params(rng, 10);
        const PairSample sample = random_cross_pair(rng, p);
        REQUIRE(is_cross_t_intersecting(sample.f, sample.g, p.t));
        const int i = std::uniform_int_distribution<int>(1, p.n - 1)(rng);
        const int j = std::uniform_int_distribution<int>(i + 1, p.n)(rng);
        const Family cf = family_compress(sample.f, i, j);
        const Family cg = family_compress(sample.g, i, j);
        CHECK(cf.count() == sample.f.count());
        CHECK(cg.count() == sample.g.count());
        CHECK(is_cross_t_intersecting(cf, cg, p.t));
        ++checked;
    }
    CHECK(checked == 10000);
}

TEST_CASE("compressed pairs satisfy the prefix condition everywhere")
{
    const CompressionSuiteStats stats = compression_suite(1000, 7, std::nullopt, 10);
    CHECK(stats.trials == 1000);
    CHECK(stats.failed == 0);
    if (stats.first_failure)
        MESSAGE(*stats.first_failure);
    CHECK(stats.total_steps > 0);
}

TEST_CASE("serialization")
{
    const Family f = fam(6, 3, {{1, 2, 6}, {2, 4, 5}});
    CHECK(serialize(f) == "n=6 size=3\n2,4,5\n1,2,6\n"); // bit-pattern order
    CHECK(serialize(Family(4, 2)) == "n=4 size=2\n");
    CHECK(parse_family("n=4 size=2\n") == Family(4, 2));
    CHECK_THROWS_AS(parse_family("size=2\n1,2\n"), UsageError);
    CHECK_THROWS_AS(parse_family("n=4 size=2\n1,x\n"), UsageError);
    CHECK_THROWS_AS(parse_family("n=4 size=2\n1,2,3\n"), UsageError);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const PairSample s = random_cross_pair(rng, random_params(rng, 12));
        CHECK(parse_family(serialize(s.f)) == s.f);
        CHECK(parse_family(serialize(s.g)) == s.g);
    }
}
