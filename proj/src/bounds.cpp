#include "crossint/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace crossint {

namespace {

void require_upper_bound_regime(const InstanceParams& p)
{
    p.validate();
    if (p.trivial_regime())
        throw UsageError("upper bounds need a + b < n + t; here a + b >= n + t and the optimum is C(n,a)·C(n,b)");
    if (p.t > std::min(p.a, p.b))
        throw UsageError("upper bounds need t <= min(a, b)");
}

} // namespace

MValue compute_M(const InstanceParams& params)
{
    params.validate();
    const int n = params.n;
    const BinomialTable binom(n);
    MValue best;
    bool any = false;
    std::vector<BigCount> f_side(static_cast<std::size_t>(n) + 1);
    std::vector<BigCount> g_side(static_cast<std::size_t>(n) + 1);
    BigCount value;
    for (int s = 1; s <= n; ++s) {
        for (int x = 1; x <= n; ++x) {
            f_side[static_cast<std::size_t>(x)] = binom(s, x) * binom(n - s, params.a - x);
            g_side[static_cast<std::size_t>(x)] = binom(s, x) * binom(n - s, params.b - x);
        }
        for (int u = 1; u <= n; ++u) {
            for (int v = std::max(1, s + params.t - u); v <= n; ++v) {
                value = f_side[static_cast<std::size_t>(u)] * g_side[static_cast<std::size_t>(v)];
                if (!any || value > best.value) {
                    best.value = value;
                    best.argmax.assign(1, Triple{s, u, v});
                    any = true;
                } else if (value == best.value) {
                    best.argmax.push_back(Triple{s, u, v});
                }
            }
        }
    }
    return best;
}

LogValue entropy_bound(const InstanceParams& params)
{
    require_upper_bound_regime(params);
    const double n = params.n;
    const double x = static_cast<double>(params.a + params.b - 2 * params.t) / (2.0 * n);
    return LogValue::of(3.0 * std::log(n) + 2.0 * shannon_h(x) * n);
}

int concentration_deviation(const InstanceParams& params)
{
    return std::min(params.t, params.n - params.a - params.b + params.t);
}

LogValue concentration_bound(const InstanceParams& params)
{
    require_upper_bound_regime(params);
    const int n = params.n;
    const double q = concentration_deviation(params);
    const double spread = std::min(params.a, n - params.a) + std::min(params.b, n - params.b);
    const double ln_layers = log_of_count(binomial(n, params.a)).ln_value + log_of_count(binomial(n, params.b)).ln_value;
    return LogValue::of(std::log(8.0) + 4.0 * std::log(static_cast<double>(n)) - q * q / (8.0 * spread) + ln_layers);
}

bool sandwich_check(const InstanceParams& params, const BigCount& exact)
{
    const BigCount m = compute_M(params).value;
    const BigCount cube = BigCount(params.n) * params.n * params.n;
    return m <= exact && exact <= cube * m;
}

double shannon_h_second_derivative(double x)
{
    if (!(x > 0.0 && x < 1.0))
        throw UsageError("h'' is defined on (0, 1) only");
    return -1.0 / x - 1.0 / (1.0 - x);
}

std::string_view to_string(Regime r)
{
    return r == Regime::normal ? "normal" : "trivial";
}

BoundsReport bounds_report(const InstanceParams& params)
{
    params.validate();
    BoundsReport r;
    r.params = params;
    MValue m = compute_M(params);
    r.m = std::move(m.value);
    r.m_argmax = std::move(m.argmax);
    r.sandwich_hi = BigCount(params.n) * params.n * params.n * r.m;
    const BigCount full = binomial(params.n, params.a) * binomial(params.n, params.b);
    r.trivial_bound_ln = log_of_count(full);
    if (params.trivial_regime()) {
        r.regime = Regime::trivial;
        r.exact = full;
    } else if (params.t <= std::min(params.a, params.b)) {
        r.entropy_bound_ln = entropy_bound(params);
        r.concentration_bound_ln = concentration_bound(params);
    }
    return r;
}

} // namespace crossint
