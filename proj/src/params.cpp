#include "crossint/params.hpp"

#include "crossint/exactmath.hpp"

namespace crossint {

void InstanceParams::validate() const
{
    if (n < 1)
        throw UsageError("n must be at least 1");
    if (a < 1 || a > n)
        throw UsageError("a must lie in [1, n]");
    if (b < 1 || b > n)
        throw UsageError("b must lie in [1, n]");
    if (t < 1 || t > n)
        throw UsageError("t must lie in [1, n]");
}

std::string to_string(const InstanceParams& p)
{
    return "(n=" + std::to_string(p.n) + ", a=" + std::to_string(p.a) + ", b=" + std::to_string(p.b) +
           ", t=" + std::to_string(p.t) + ")";
}

std::string_view to_string(Functional f)
{
    return f == Functional::product ? "prod" : "sum";
}

Functional parse_functional(std::string_view s)
{
    if (s == "prod" || s == "product")
        return Functional::product;
    if (s == "sum")
        return Functional::sum;
    throw UsageError("unknown functional '" + std::string(s) + "' (expected prod or sum)");
}

} // namespace crossint
