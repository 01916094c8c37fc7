#ifndef CROSSINT_COUNTEREX_HPP
#define CROSSINT_COUNTEREX_HPP

#include <functional>
#include <utility>
#include <vector>

#include "crossint/exactmath.hpp"
#include "crossint/hirschorn.hpp"
#include "crossint/setfam.hpp"

namespace crossint {

// ---------------------------------------------------------------------------
// The (n, 2, n-2, 1) series. A 2-set and an (n-2)-set are disjoint exactly
// when one is the complement of the other, so splitting C([n],2) in half
// gives product (C(n,2)/2)^2, which no Hirschorn pair reaches when the
// balance equation below has no integer root.

struct CaseSizes {
    BigCount f;
    BigCount g;
    bool operator==(const CaseSizes&) const = default;
};

/// u = 1, v = s: |F| = s(n-s) + C(s,2), |G| = C(n-s,2).
CaseSizes case1_sizes(int n, int s);
/// u = 2, v = s-1: |F| = C(s,2), |G| = s(n-s) + C(n-s,2).
CaseSizes case2_sizes(int n, int s);

/// Integer s in [1, n] with 2s^2 - (4n-2)s + n^2 - n = 0.
std::vector<long> quadratic_integer_roots(long n);

/// n ≡ 2 (mod 3): the balance equation reduces to s^2 ≡ 2 (mod 3), which
/// has no solution.
bool mod3_certificate(long n);

struct Prop4Report {
    int n = 0;
    BigCount binom_half;    // C(n,2) / 2
    BigCount split_product; // (C(n,2)/2)^2
    BigCount hirschorn_max; // N̂_prod(n, 2, n-2, 1)
    std::vector<Triple> hirschorn_argmax;
    std::vector<long> quadratic_roots;
    bool mod3 = false;
    bool in_series = false; // n ≡ 8 (mod 12)
    /// Every Hirschorn pair obeys |F| + |G| <= C(n,2).
    bool pairing_bound_ok = false;

    /// Only rows in the series carry a claim: no root, the certificate
    /// holds, and the split strictly beats every Hirschorn pair.
    bool claim_holds() const;
};

/// Requires n >= 4 and C(n,2) even.
Prop4Report prop4_scan(int n);

// ---------------------------------------------------------------------------
// The A_k / B_k pair on n = 4k+3, a = 2k+1, b = 2k+2, t = 2.

/// Sum of C(s1,i) C(s2-s1,j) C(n-s2, m-i-j) over i = |X∩[s1]|,
/// j = |X∩(s1,s2]| with prefix_rule(i, i+j) true.
BigCount count_two_prefix(int n, int m, int s1, int s2, const std::function<bool(int, int)>& prefix_rule);

struct AkBkReport {
    int k = 0;
    int n = 0;
    int a = 0;
    int b = 0;
    BigCount size_a;
    BigCount size_b;
    BigCount product;
    BigCount hirschorn_max; // N̂_prod(4k+3, 2k+1, 2k+2, 2)
    std::vector<Triple> hirschorn_argmax;
    // the same optimum with b = 2k+3
    BigCount hirschorn_max_b_plus_one;
    std::vector<Triple> hirschorn_argmax_b_plus_one;
    bool in_claimed_range = false; // 3 <= k <= 50

    bool product_exceeds_hirschorn() const { return product > hirschorn_max; }
    /// (2k, k+1, k+1) is among the maximisers.
    bool argmax_has_balanced_triple() const;
};

/// Requires k >= 3.
AkBkReport akbk_report(int k);

bool in_a_k(int k, SetMask x);
bool in_b_k(int k, SetMask x);

/// Explicit A_k and B_k; needs 4k+3 <= 32.
std::pair<Family, Family> akbk_families(int k);

} // namespace crossint

#endif
