#ifndef CROSSINT_BOUNDS_HPP
#define CROSSINT_BOUNDS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "crossint/exactmath.hpp"
#include "crossint/hirschorn.hpp"
#include "crossint/params.hpp"

namespace crossint {

struct MValue {
    BigCount value;
    std::vector<Triple> argmax; // lexicographic by (s, u, v)
};

/// max of C(s,u) C(n-s,a-u) C(s,v) C(n-s,b-v) over s, u, v in [n] with
/// u + v >= s + t. Each term is |F|·|G| for the exact-intersection families
/// {|F∩[s]| = u}, {|G∩[s]| = v}, which are cross-t-intersecting.
MValue compute_M(const InstanceParams& params);

/// ln of n^3 exp(2 h((a+b-2t)/(2n)) n). Needs a + b < n + t and t <= min(a, b).
LogValue entropy_bound(const InstanceParams& params);

/// ln of 8 n^4 exp(-q^2 / (8 (min(a,n-a) + min(b,n-b)))) C(n,a) C(n,b),
/// q = min(t, n-a-b+t). Same hypotheses as entropy_bound.
LogValue concentration_bound(const InstanceParams& params);

/// q = min(t, n-a-b+t), the deviation driving the concentration bound.
int concentration_deviation(const InstanceParams& params);

/// M <= exact <= n^3 M, compared exactly.
bool sandwich_check(const InstanceParams& params, const BigCount& exact);

/// h''(x) = -1/x - 1/(1-x) on (0, 1).
double shannon_h_second_derivative(double x);

enum class Regime { normal, trivial };
std::string_view to_string(Regime r);

struct BoundsReport {
    InstanceParams params;
    Regime regime = Regime::normal;
    BigCount m;
    std::vector<Triple> m_argmax;
    BigCount sandwich_hi; // n^3 M
    LogValue trivial_bound_ln; // ln C(n,a) C(n,b)
    // normal regime only
    std::optional<LogValue> entropy_bound_ln;
    std::optional<LogValue> concentration_bound_ln;
    // trivial regime only: the optimum is C(n,a) C(n,b)
    std::optional<BigCount> exact;
};

BoundsReport bounds_report(const InstanceParams& params);

} // namespace crossint

#endif
