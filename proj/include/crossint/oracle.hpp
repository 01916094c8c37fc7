#ifndef CROSSINT_ORACLE_HPP
#define CROSSINT_ORACLE_HPP

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crossint/exactmath.hpp"
#include "crossint/params.hpp"
#include "crossint/setfam.hpp"

namespace crossint {

/// A search would exceed its configured size limit.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleCaps {
    int exhaustive_max_members = 24; // C(n, a) for the exhaustive mode
    int compressed_max_n = 12;
    long long max_nodes = 4'000'000'000LL;

    /// Parses "key=value" pairs separated by commas, e.g. the CROSSINT_CAPS
    /// environment variable: exhaustive=26,compressed=14,nodes=1e10.
    static OracleCaps parse(std::string_view spec);
    static OracleCaps parse(std::string_view spec, OracleCaps base);
};

enum class OracleMode { exhaustive, compressed };

std::string_view to_string(OracleMode m);
OracleMode parse_mode(std::string_view s);

struct OracleResult {
    BigCount value;
    Family witness_f;
    Family witness_g;
    OracleMode mode = OracleMode::exhaustive;
    long long nodes_explored = 0;
    /// The witness has an empty side (only possible for the sum functional
    /// or for t > min(a, b)).
    bool degenerate = false;
};

/// Every b-set of [n] meeting each member of F in at least t elements.
Family dual_family(const Family& f, int b, int t);

/// Maximum over every subfamily F of C([n], a), paired with its dual.
OracleResult oracle_exhaustive(const InstanceParams& params, Functional functional, const OracleCaps& caps = {});

/// Maximum over left-compressed F only (down-sets of the dominance order),
/// with branch-and-bound on the shrinking dual.
OracleResult oracle_compressed(const InstanceParams& params, Functional functional, const OracleCaps& caps = {});

/// (n, a, b, t) -> (n, n-a, n-b, n-a-b+t): complementing every set maps
/// feasible pairs of one instance bijectively onto the other.
/// Throws UsageError unless n - a - b + t >= 1.
InstanceParams complement_transfer(const InstanceParams& params);

/// Equivalent instance chosen to minimise the searched layer C(n, a).
struct CanonicalForm {
    InstanceParams params;
    bool swapped = false;     // roles of a and b exchanged
    bool complemented = false; // complement_transfer applied
};

CanonicalForm canonical_form(const InstanceParams& params);

/// Runs the chosen mode, optionally on the canonical form, and maps the
/// witness back to the original instance.
OracleResult solve(const InstanceParams& params, Functional functional, OracleMode mode, const OracleCaps& caps = {},
                   bool canonicalize = false);

/// The dominance order on C([n], k) with its cover relation, elements in a
/// linear extension (weight, then bit pattern).
struct DominancePoset {
    DominancePoset(int n, int k);

    int n;
    int k;
    std::vector<SetMask> elements;
    /// Indices of the sets B - y + (y-1) covered by each element.
    std::vector<std::vector<int>> lower_covers;
};

/// Visits every left-compressed k-uniform family over [n], the empty one included.
/// Members arrive in linear-extension order. Returns the number visited.
long long for_each_left_compressed(int n, int k, const std::function<void(std::span<const SetMask>)>& visit);

} // namespace crossint

#endif
