#ifndef CROSSINT_EXACTMATH_HPP
#define CROSSINT_EXACTMATH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace crossint {

/// Thrown when a caller violates an operation's precondition.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact nonnegative count. Every cardinality in the library is a BigCount;
/// nothing on a counting path is ever rounded.
using BigCount = mpz_class;

/// Natural logarithm of a nonnegative quantity, with an explicit zero.
struct LogValue {
    double ln_value = 0.0;
    bool is_zero = false;

    static LogValue zero() { return {0.0, true}; }
    static LogValue of(double ln) { return {ln, false}; }
};

/// C(n, k). Zero when k < 0 or k > n. Throws UsageError for n < 0.
BigCount binomial(long n, long k);

/// Binary entropy in nats: x ln(1/x) + (1-x) ln(1/(1-x)), with h(0) = h(1) = 0.
double shannon_h(double x);

LogValue log_of_count(const BigCount& c);

/// True when `lhs <= rhs` up to a relative tolerance on the log scale.
/// A zero lhs is below everything; a zero rhs only admits a zero lhs.
bool log_leq(const LogValue& lhs, const LogValue& rhs, double rel_tol = 1e-9);

std::string to_decimal(const BigCount& c);

/// Pascal triangle cache for hot loops that need many binomials of a
/// bounded top argument. Out-of-range lookups follow the same zero
/// convention as binomial().
class BinomialTable {
public:
    explicit BinomialTable(int max_n);

    int max_n() const { return max_n_; }
    const BigCount& operator()(long n, long k) const;

private:
    int max_n_;
    std::vector<std::vector<BigCount>> rows_;
    BigCount zero_{0};
};

} // namespace crossint

#endif
