#ifndef CROSSINT_PARAMS_HPP
#define CROSSINT_PARAMS_HPP

#include <string>
#include <string_view>

namespace crossint {

/// The quadruple (n, a, b, t): ground set [n], an a-uniform family and a
/// b-uniform family that must be cross-t-intersecting.
struct InstanceParams {
    int n = 0;
    int a = 0;
    int b = 0;
    int t = 0;

    /// Throws UsageError unless 1 <= a, b <= n and 1 <= t <= n.
    /// t > min(a, b) is accepted: every nonempty pair is then infeasible.
    void validate() const;

    /// a + b >= n + t: any two such sets meet in at least t elements.
    bool trivial_regime() const { return a + b >= n + t; }

    bool operator==(const InstanceParams&) const = default;
};

std::string to_string(const InstanceParams& p);

enum class Functional { product, sum };

std::string_view to_string(Functional f);
Functional parse_functional(std::string_view s);

} // namespace crossint

#endif
