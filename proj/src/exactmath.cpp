#include "crossint/exactmath.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace crossint {

BigCount binomial(long n, long k)
{
    if (n < 0)
        throw UsageError("binomial: negative n = " + std::to_string(n));
    if (k < 0 || k > n)
        return 0;
    BigCount r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

double shannon_h(double x)
{
    if (!(x >= 0.0 && x <= 1.0))
        throw UsageError("shannon_h: argument outside [0,1]");
    if (x == 0.0 || x == 1.0)
        return 0.0;
    return -x * std::log(x) - (1.0 - x) * std::log1p(-x);
}

LogValue log_of_count(const BigCount& c)
{
    if (sgn(c) == 0)
        return LogValue::zero();
    // mantissa in [0.5, 1), so the result is exact up to double rounding
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, c.get_mpz_t());
    return LogValue::of(std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2);
}

bool log_leq(const LogValue& lhs, const LogValue& rhs, double rel_tol)
{
    if (lhs.is_zero)
        return true;
    if (rhs.is_zero)
        return false;
    const double slack = rel_tol * std::max(1.0, std::abs(rhs.ln_value));
    return lhs.ln_value <= rhs.ln_value + slack;
}

std::string to_decimal(const BigCount& c)
{
    return c.get_str(10);
}

BinomialTable::BinomialTable(int max_n) : max_n_(max_n)
{
    if (max_n < 0)
        throw UsageError("BinomialTable: negative size");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        auto& row = rows_[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(n) + 1);
        row.front() = 1;
        row.back() = 1;
        for (int k = 1; k < n; ++k)
            row[static_cast<std::size_t>(k)] = rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
                                               rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
    }
}

const BigCount& BinomialTable::operator()(long n, long k) const
{
    if (n < 0 || n > max_n_)
        throw UsageError("BinomialTable: n = " + std::to_string(n) + " outside table");
    if (k < 0 || k > n)
        return zero_;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

} // namespace crossint
