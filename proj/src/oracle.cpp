#include "crossint/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <unordered_map>

namespace crossint {

OracleCaps OracleCaps::parse(std::string_view spec)
{
    return parse(spec, OracleCaps{});
}

OracleCaps OracleCaps::parse(std::string_view spec, OracleCaps base)
{
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        const std::string_view item = spec.substr(0, comma);
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw UsageError("cap entry '" + std::string(item) + "' lacks '='");
        const std::string_view key = item.substr(0, eq);
        const std::string value(item.substr(eq + 1));
        double number = 0;
        try {
            std::size_t used = 0;
            number = std::stod(value, &used);
            if (used != value.size())
                throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw UsageError("cap value '" + value + "' is not a number");
        }
        if (number < 1)
            throw UsageError("cap values must be positive");
        if (key == "exhaustive")
            base.exhaustive_max_members = static_cast<int>(number);
        else if (key == "compressed")
            base.compressed_max_n = static_cast<int>(number);
        else if (key == "nodes")
            base.max_nodes = static_cast<long long>(number);
        else
            throw UsageError("unknown cap '" + std::string(key) + "'");
    }
    return base;
}

std::string_view to_string(OracleMode m)
{
    return m == OracleMode::exhaustive ? "exhaustive" : "compressed";
}

OracleMode parse_mode(std::string_view s)
{
    if (s == "exhaustive")
        return OracleMode::exhaustive;
    if (s == "compressed")
        return OracleMode::compressed;
    throw UsageError("unknown mode '" + std::string(s) + "' (expected exhaustive or compressed)");
}

Family dual_family(const Family& f, int b, int t)
{
    const auto members = f.members();
    return Family::filtered(f.ground(), b, [&](SetMask g) {
        return std::all_of(members.begin(), members.end(),
                           [&](SetMask x) { return std::popcount(x.bits() & g.bits()) >= t; });
    });
}

InstanceParams complement_transfer(const InstanceParams& params)
{
    params.validate();
    const int t = params.n - params.a - params.b + params.t;
    if (t < 1)
        throw UsageError("complement transfer needs n - a - b + t >= 1");
    InstanceParams out{params.n, params.n - params.a, params.n - params.b, t};
    out.validate();
    return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

/// Shared search state for both modes: the b-layer as a bitset universe and
/// the compatibility row of every a-set.
struct SearchSpace {
    InstanceParams params;
    Functional functional;
    std::vector<SetMask> layer; // candidate members of F, in search order
    std::vector<Bits> compat;   // compat[i] = b-sets meeting layer[i] in >= t elements
    std::size_t words = 0;
    std::uint64_t dual_universe = 0;

    SearchSpace(const InstanceParams& p, Functional fn, std::vector<SetMask> order)
        : params(p), functional(fn), layer(std::move(order))
    {
        const std::vector<SetMask> partners = k_subsets(p.n, p.b);
        dual_universe = partners.size();
        words = (partners.size() + 63) / 64;
        compat.assign(layer.size(), Bits(words, 0));
        for (std::size_t i = 0; i < layer.size(); ++i)
            for (std::size_t g = 0; g < partners.size(); ++g)
                if (std::popcount(layer[i].bits() & partners[g].bits()) >= p.t)
                    compat[i][g / 64] |= std::uint64_t{1} << (g % 64);
    }

    Bits full() const
    {
        Bits bits(words, ~std::uint64_t{0});
        if (dual_universe % 64 != 0)
            bits.back() = (std::uint64_t{1} << (dual_universe % 64)) - 1;
        if (dual_universe == 0)
            bits.clear();
        return bits;
    }

    std::uint64_t value(std::uint64_t f_size, std::uint64_t g_size) const
    {
        // n <= 32 keeps both factors below 2^32
        return functional == Functional::product ? f_size * g_size : f_size + g_size;
    }
};

std::uint64_t intersect_into(const Bits& lhs, const Bits& rhs, Bits& out)
{
    std::uint64_t count = 0;
    for (std::size_t w = 0; w < lhs.size(); ++w) {
        out[w] = lhs[w] & rhs[w];
        count += static_cast<std::uint64_t>(std::popcount(out[w]));
    }
    return count;
}

/// Best value so far with the deterministic tie-break: larger value, then
/// smaller family weight, then lexicographically smaller member list.
struct Incumbent {
    bool set = false;
    std::uint64_t value = 0;
    long weight = 0;
    std::vector<SetMask> members;

    bool improves(std::uint64_t v, long w, const std::vector<SetMask>& sorted_members) const
    {
        if (!set || v > value)
            return true;
        if (v < value)
            return false;
        if (w != weight)
            return w < weight;
        return std::lexicographical_compare(sorted_members.begin(), sorted_members.end(), members.begin(),
                                            members.end());
    }

    bool could_improve(std::uint64_t v) const { return !set || v >= value; }

    void offer(std::uint64_t v, long w, const std::vector<SetMask>& sorted_members)
    {
        if (improves(v, w, sorted_members)) {
            set = true;
            value = v;
            weight = w;
            members = sorted_members;
        }
    }
};

OracleResult finish(const InstanceParams& params, Functional functional, OracleMode mode, const Incumbent& best,
                    long long nodes)
{
    Family f(params.n, params.a, best.members);
    Family g = dual_family(f, params.b, params.t);
    const BigCount fs(static_cast<unsigned long>(f.count()));
    const BigCount gs(static_cast<unsigned long>(g.count()));
    BigCount value = functional == Functional::product ? BigCount(fs * gs) : BigCount(fs + gs);
    OracleResult result{std::move(value), std::move(f), std::move(g), mode, nodes, false};
    result.degenerate = result.witness_f.empty() || result.witness_g.empty();
    return result;
}

class NodeBudget {
public:
    explicit NodeBudget(long long limit) : limit_(limit) {}

    void tick()
    {
        if (++nodes_ > limit_)
            throw CapExceeded("search exceeded the node cap of " + std::to_string(limit_));
    }
    long long nodes() const { return nodes_; }

private:
    long long limit_;
    long long nodes_ = 0;
};

std::vector<SetMask> sorted_copy(std::vector<SetMask> members)
{
    std::sort(members.begin(), members.end());
    return members;
}

} // namespace

OracleResult oracle_exhaustive(const InstanceParams& params, Functional functional, const OracleCaps& caps)
{
    params.validate();
    if (params.n > max_ground_size)
        throw CapExceeded("explicit families need n <= 32");
    const BigCount layer_size = binomial(params.n, params.a);
    if (layer_size > caps.exhaustive_max_members)
        throw CapExceeded("exhaustive search needs C(n,a) <= " + std::to_string(caps.exhaustive_max_members) +
                          ", got " + to_decimal(layer_size));

    const SearchSpace space(params, functional, k_subsets(params.n, params.a));
    const std::size_t total = space.layer.size();
    std::vector<Bits> alive(total + 1, Bits(space.words, 0));
    std::vector<SetMask> chosen;
    NodeBudget budget(caps.max_nodes);
    Incumbent best;

    // include/exclude over the layer in bit-pattern order; chosen stays sorted
    auto visit = [&](auto&& self, std::size_t idx, const Bits& dual, std::uint64_t dual_size, long w) -> void {
        budget.tick();
        if (idx == total) {
            const std::uint64_t v = space.value(chosen.size(), dual_size);
            if (best.could_improve(v))
                best.offer(v, w, chosen);
            return;
        }
        Bits& next = alive[idx + 1];
        const std::uint64_t next_size = intersect_into(dual, space.compat[idx], next);
        chosen.push_back(space.layer[idx]);
        self(self, idx + 1, next, next_size, w + weight(space.layer[idx]));
        chosen.pop_back();
        self(self, idx + 1, dual, dual_size, w);
    };
    alive[0] = space.full();
    visit(visit, 0, alive[0], space.dual_universe, 0);
    return finish(params, functional, OracleMode::exhaustive, best, budget.nodes());
}

DominancePoset::DominancePoset(int n_, int k_) : n(n_), k(k_)
{
    elements = k_subsets(n, k);
    std::stable_sort(elements.begin(), elements.end(),
                     [](SetMask x, SetMask y) { return weight(x) < weight(y); });
    std::unordered_map<std::uint32_t, int> index;
    for (std::size_t i = 0; i < elements.size(); ++i)
        index.emplace(elements[i].bits(), static_cast<int>(i));
    lower_covers.resize(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const SetMask x = elements[i];
        for (int y : x.elements())
            if (y > 1 && !x.contains(y - 1))
                lower_covers[i].push_back(index.at(x.without(y).with(y - 1).bits()));
    }
}

long long for_each_left_compressed(int n, int k, const std::function<void(std::span<const SetMask>)>& visit)
{
    const DominancePoset poset(n, k);
    const std::size_t total = poset.elements.size();
    std::vector<char> included(total, 0);
    std::vector<SetMask> members;
    long long visited = 0;

    auto walk = [&](auto&& self, std::size_t idx) -> void {
        if (idx == total) {
            ++visited;
            visit(members);
            return;
        }
        const auto& covers = poset.lower_covers[idx];
        if (std::all_of(covers.begin(), covers.end(), [&](int c) { return included[static_cast<std::size_t>(c)]; })) {
            included[idx] = 1;
            members.push_back(poset.elements[idx]);
            self(self, idx + 1);
            members.pop_back();
            included[idx] = 0;
        }
        self(self, idx + 1);
    };
    walk(walk, 0);
    return visited;
}

OracleResult oracle_compressed(const InstanceParams& params, Functional functional, const OracleCaps& caps)
{
    params.validate();
    if (params.n > caps.compressed_max_n || params.n > max_ground_size)
        throw CapExceeded("compressed search needs n <= " + std::to_string(caps.compressed_max_n));

    const DominancePoset poset(params.n, params.a);
    const SearchSpace space(params, functional, poset.elements);
    const std::size_t total = space.layer.size();
    std::vector<Bits> alive(total + 1, Bits(space.words, 0));
    std::vector<char> included(total, 0);
    std::vector<SetMask> chosen;
    NodeBudget budget(caps.max_nodes);
    Incumbent best;

    auto visit = [&](auto&& self, std::size_t idx, const Bits& dual, std::uint64_t dual_size, long w) -> void {
        budget.tick();
        if (idx == total) {
            const std::uint64_t v = space.value(chosen.size(), dual_size);
            if (best.could_improve(v))
                best.offer(v, w, sorted_copy(chosen));
            return;
        }
        // The dual only shrinks further down, and at most total - idx members remain.
        if (best.set) {
            const std::uint64_t bound = space.value(chosen.size() + (total - idx), dual_size);
            if (bound < best.value || (bound == best.value && w > best.weight))
                return;
        }
        const auto& covers = poset.lower_covers[idx];
        if (std::all_of(covers.begin(), covers.end(), [&](int c) { return included[static_cast<std::size_t>(c)]; })) {
            Bits& next = alive[idx + 1];
            const std::uint64_t next_size = intersect_into(dual, space.compat[idx], next);
            included[idx] = 1;
            chosen.push_back(space.layer[idx]);
            self(self, idx + 1, next, next_size, w + weight(space.layer[idx]));
            chosen.pop_back();
            included[idx] = 0;
        }
        self(self, idx + 1, dual, dual_size, w);
    };
    alive[0] = space.full();
    visit(visit, 0, alive[0], space.dual_universe, 0);
    return finish(params, functional, OracleMode::compressed, best, budget.nodes());
}

CanonicalForm canonical_form(const InstanceParams& params)
{
    params.validate();
    std::vector<CanonicalForm> options{{params, false, false},
                                       {{params.n, params.b, params.a, params.t}, true, false}};
    if (params.n - params.a - params.b + params.t >= 1) {
        const InstanceParams c = complement_transfer(params);
        options.push_back({c, false, true});
        options.push_back({{c.n, c.b, c.a, c.t}, true, true});
    }
    auto key = [](const CanonicalForm& f) {
        return std::make_tuple(binomial(f.params.n, f.params.a), binomial(f.params.n, f.params.b), f.params.a,
                               f.params.b, f.swapped, f.complemented);
    };
    return *std::min_element(options.begin(), options.end(),
                             [&](const CanonicalForm& x, const CanonicalForm& y) { return key(x) < key(y); });
}

namespace {

Family complemented(const Family& f)
{
    std::vector<SetMask> out;
    out.reserve(f.count());
    for (SetMask x : f.members())
        out.push_back(x.complement());
    return Family(f.ground(), f.ground() - f.member_size(), std::move(out));
}

} // namespace

OracleResult solve(const InstanceParams& params, Functional functional, OracleMode mode, const OracleCaps& caps,
                   bool canonicalize)
{
    const CanonicalForm form = canonicalize ? canonical_form(params) : CanonicalForm{params, false, false};
    OracleResult result = mode == OracleMode::exhaustive ? oracle_exhaustive(form.params, functional, caps)
                                                         : oracle_compressed(form.params, functional, caps);
    if (form.swapped)
        std::swap(result.witness_f, result.witness_g);
    if (form.complemented) {
        result.witness_f = complemented(result.witness_f);
        result.witness_g = complemented(result.witness_g);
    }
    return result;
}

} // namespace crossint
