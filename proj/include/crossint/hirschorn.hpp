#ifndef CROSSINT_HIRSCHORN_HPP
#define CROSSINT_HIRSCHORN_HPP

#include <utility>
#include <vector>

#include "crossint/exactmath.hpp"
#include "crossint/params.hpp"
#include "crossint/setfam.hpp"

namespace crossint {

/// Number of m-subsets X of [n] with |X ∩ [s]| >= u.
BigCount count_prefix_threshold(int n, int m, int s, int u);

/// count_prefix_threshold for one (n, m) and every s in [0, n], u in [0, n+1],
/// built from suffix sums so a full sweep costs O(n^2) big-integer additions.
class ThresholdTable {
public:
    ThresholdTable(int n, int m);
    ThresholdTable(int n, int m, const BinomialTable& binom);

    int ground() const { return n_; }
    int member_size() const { return m_; }
    const BigCount& operator()(int s, int u) const;

private:
    int n_;
    int m_;
    // row s holds u = 0 .. n + 1
    std::vector<std::vector<BigCount>> counts_;
};

struct Triple {
    int s = 0;
    int u = 0;
    int v = 0;
    auto operator<=>(const Triple&) const = default;
};

/// F = {F : |F∩[s]| >= u} (a-uniform), G = {G : |G∩[s]| >= v} (b-uniform),
/// with u + v = s + t.
struct HirschornPair {
    InstanceParams params;
    int s = 0;
    int u = 0;
    int v = 0;

    /// Throws UsageError if s, u, v leave [n] or u + v != s + t.
    void validate() const;
    Triple triple() const { return {s, u, v}; }
};

std::pair<BigCount, BigCount> pair_sizes(const HirschornPair& p);

/// Explicit member lists for n <= 32.
std::pair<Family, Family> pair_families(const HirschornPair& p);

struct HirschornOptimum {
    BigCount value;
    std::vector<Triple> argmax; // lexicographic by (s, u, v)
    Functional functional = Functional::product;
};

BigCount apply_functional(Functional f, const BigCount& x, const BigCount& y);

/// Exact maximum of the functional over every Hirschorn pair, s, u, v in [n]
/// with u + v = s + t. Pairs with an empty side are evaluated, not skipped.
HirschornOptimum hirschorn_optimum(const InstanceParams& params, Functional functional);

/// Same sweep with caller-owned tables; lets parameter grids reuse them.
HirschornOptimum hirschorn_optimum(const InstanceParams& params, Functional functional,
                                   const ThresholdTable& for_a, const ThresholdTable& for_b);

} // namespace crossint

#endif
