#include "crossint/setfam.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "crossint/exactmath.hpp"

namespace crossint {

namespace {

void check_ground(int n)
{
    if (n < 1 || n > max_ground_size)
        throw UsageError("ground-set size must lie in [1, 32], got " + std::to_string(n));
}

void check_pair(int n, int i, int j)
{
    if (!(1 <= i && i < j && j <= n))
        throw UsageError("compression needs 1 <= i < j <= n, got i=" + std::to_string(i) + " j=" + std::to_string(j));
}

std::uint32_t bit(int element)
{
    return std::uint32_t{1} << (element - 1);
}

} // namespace

std::uint32_t ground_mask(int n)
{
    check_ground(n);
    return n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

SetMask::SetMask(std::uint32_t bits, int n) : bits_(bits), n_(n)
{
    if ((bits & ~ground_mask(n)) != 0)
        throw UsageError("set has elements outside [" + std::to_string(n) + "]");
}

SetMask SetMask::of(int n, std::initializer_list<int> elements)
{
    return of(n, std::span<const int>(elements.begin(), elements.size()));
}

SetMask SetMask::of(int n, std::span<const int> elements)
{
    check_ground(n);
    std::uint32_t bits = 0;
    for (int e : elements) {
        if (e < 1 || e > n)
            throw UsageError("element " + std::to_string(e) + " outside [" + std::to_string(n) + "]");
        bits |= bit(e);
    }
    return SetMask(bits, n);
}

SetMask SetMask::prefix(int n, int s)
{
    if (s < 0 || s > n)
        throw UsageError("prefix length outside [0, n]");
    return SetMask(s == 0 ? 0 : ground_mask(s), n);
}

int SetMask::size() const
{
    return std::popcount(bits_);
}

bool SetMask::contains(int element) const
{
    return element >= 1 && element <= n_ && (bits_ & bit(element)) != 0;
}

int SetMask::prefix_count(int s) const
{
    if (s <= 0)
        return 0;
    if (s >= 32)
        return size();
    return std::popcount(bits_ & ((std::uint32_t{1} << s) - 1));
}

SetMask SetMask::complement() const
{
    return SetMask(~bits_ & ground_mask(n_), n_);
}

std::vector<int> SetMask::elements() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest) + 1);
    return out;
}

SetMask SetMask::with(int element) const
{
    return SetMask(bits_ | bit(element), n_);
}

SetMask SetMask::without(int element) const
{
    return SetMask(bits_ & ~bit(element), n_);
}

int mth_element(SetMask x, int i)
{
    if (i < 1 || i > x.size())
        throw UsageError("mth_element: index " + std::to_string(i) + " outside [1, " + std::to_string(x.size()) + "]");
    std::uint32_t rest = x.bits();
    for (int k = 1; k < i; ++k)
        rest &= rest - 1;
    return std::countr_zero(rest) + 1;
}

int weight(SetMask x)
{
    int w = 0;
    for (std::uint32_t rest = x.bits(); rest != 0; rest &= rest - 1)
        w += std::countr_zero(rest) + 1;
    return w;
}

SetMask delta_compress(SetMask x, int i, int j)
{
    check_pair(x.ground(), i, j);
    if (x.contains(j) && !x.contains(i))
        return x.without(j).with(i);
    return x;
}

bool dominated_by(SetMask lower, SetMask upper)
{
    if (lower.size() != upper.size())
        throw UsageError("dominance order compares sets of equal size only");
    std::uint32_t l = lower.bits();
    std::uint32_t u = upper.bits();
    while (l != 0) {
        if (std::countr_zero(l) > std::countr_zero(u))
            return false;
        l &= l - 1;
        u &= u - 1;
    }
    return true;
}

std::vector<SetMask> k_subsets(int n, int k)
{
    check_ground(n);
    std::vector<SetMask> out;
    if (k < 0 || k > n)
        return out;
    if (k == 0) {
        out.emplace_back(0, n);
        return out;
    }
    // Gosper's hack in 64-bit so the n = 32 terminal step cannot overflow
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t x = (std::uint64_t{1} << k) - 1;
    while (x < limit) {
        out.emplace_back(static_cast<std::uint32_t>(x), n);
        const std::uint64_t c = x & (~x + 1);
        const std::uint64_t r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    return out;
}

Family::Family(int n, int member_size) : n_(n), k_(member_size)
{
    check_ground(n);
    if (member_size < 0 || member_size > n)
        throw UsageError("member size outside [0, n]");
}

Family::Family(int n, int member_size, std::vector<SetMask> members) : Family(n, member_size)
{
    for (const SetMask& x : members) {
        if (x.ground() != n)
            throw UsageError("family member over a different ground set");
        if (x.size() != member_size)
            throw UsageError("family member of size " + std::to_string(x.size()) + " in a " +
                             std::to_string(member_size) + "-uniform family");
    }
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw UsageError("duplicate family member");
    members_ = std::move(members);
}

Family Family::complete(int n, int member_size)
{
    return Family(n, member_size, k_subsets(n, member_size));
}

Family Family::filtered(int n, int member_size, const std::function<bool(SetMask)>& keep)
{
    std::vector<SetMask> kept;
    for (SetMask x : k_subsets(n, member_size))
        if (keep(x))
            kept.push_back(x);
    return Family(n, member_size, std::move(kept));
}

bool Family::contains(SetMask x) const
{
    return std::binary_search(members_.begin(), members_.end(), x);
}

long Family::weight() const
{
    long w = 0;
    for (SetMask x : members_)
        w += crossint::weight(x);
    return w;
}

Family family_compress(const Family& f, int i, int j)
{
    check_pair(f.ground(), i, j);
    std::vector<SetMask> out;
    out.reserve(f.count());
    for (SetMask x : f.members()) {
        const SetMask y = delta_compress(x, i, j);
        out.push_back(y != x && !f.contains(y) ? y : x);
    }
    return Family(f.ground(), f.member_size(), std::move(out));
}

bool is_left_compressed(const Family& f)
{
    const int n = f.ground();
    for (SetMask x : f.members())
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (!f.contains(delta_compress(x, i, j)))
                    return false;
    return true;
}

bool is_cross_t_intersecting(const Family& f, const Family& g, int t)
{
    if (f.ground() != g.ground())
        throw UsageError("families over different ground sets");
    for (SetMask x : f.members())
        for (SetMask y : g.members())
            if (std::popcount(x.bits() & y.bits()) < t)
                return false;
    return true;
}

bool condition_a(SetMask f, SetMask g, int t)
{
    const int n = f.ground();
    for (int s = 1; s <= n; ++s)
        if (f.prefix_count(s) + g.prefix_count(s) >= s + t)
            return true;
    return false;
}

bool condition_b(SetMask f, SetMask g, int t)
{
    const int n = f.ground();
    const int a = f.size();
    const int b = g.size();
    if (n <= a + b - t)
        throw UsageError("condition_b needs n > |F| + |G| - t");
    const SetMask g_bar = g.complement();
    for (int i = 1; i <= a - t + 1; ++i)
        if (mth_element(g_bar, i) > mth_element(f, t + i - 1))
            return true;
    return false;
}

std::optional<PrefixCertificate> prefix_certificate(SetMask f, SetMask g, int t)
{
    const int n = f.ground();
    for (int s = 1; s <= n; ++s) {
        const int u = f.prefix_count(s);
        if (u + g.prefix_count(s) >= s + t)
            return PrefixCertificate{s, u, s + t - u};
    }
    return std::nullopt;
}

CompressionResult compress_pair_to_fixpoint(Family f, Family g, const CompressionOptions& options)
{
    if (f.ground() != g.ground())
        throw UsageError("families over different ground sets");
    const int n = f.ground();
    CompressionResult result{std::move(f), std::move(g), 0};

    // Each applied step strictly lowers the weight of the driven family, so
    // both phases terminate.
    auto drive = [&](bool drive_g) {
        for (;;) {
            bool moved = false;
            for (int i = 1; i < n && !moved; ++i) {
                for (int j = i + 1; j <= n && !moved; ++j) {
                    const Family& driven = drive_g ? result.g : result.f;
                    Family next = family_compress(driven, i, j);
                    if (next == driven)
                        continue;
                    if (drive_g) {
                        result.f = family_compress(result.f, i, j);
                        result.g = std::move(next);
                    } else {
                        result.g = family_compress(result.g, i, j);
                        result.f = std::move(next);
                    }
                    ++result.steps;
                    if (options.on_step)
                        options.on_step(i, j, result.f, result.g);
                    moved = true;
                }
            }
            if (!moved)
                return;
        }
    };

    drive(false);
    if (options.compress_g_too)
        drive(true);
    return result;
}

std::string serialize(const Family& f)
{
    std::ostringstream out;
    out << "n=" << f.ground() << " size=" << f.member_size() << '\n';
    for (SetMask x : f.members()) {
        bool first = true;
        for (int e : x.elements()) {
            if (!first)
                out << ',';
            out << e;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

namespace {

int parse_int(std::string_view s, std::string_view what)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw UsageError("bad " + std::string(what) + " '" + std::string(s) + "'");
    return value;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

Family parse_family(std::string_view text)
{
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        lines.push_back(trim(text.substr(0, nl)));
        if (nl == std::string_view::npos)
            break;
        text.remove_prefix(nl + 1);
    }
    std::erase_if(lines, [](std::string_view l) { return l.empty(); });
    if (lines.empty())
        throw UsageError("family text has no header");

    const std::string_view header = lines.front();
    const auto space = header.find(' ');
    if (!header.starts_with("n=") || space == std::string_view::npos ||
        !header.substr(space + 1).starts_with("size="))
        throw UsageError("family header must read 'n=<n> size=<k>'");
    const int n = parse_int(header.substr(2, space - 2), "ground size");
    const int k = parse_int(header.substr(space + 6), "member size");
    check_ground(n);

    std::vector<SetMask> members;
    std::vector<int> elements;
    for (std::size_t l = 1; l < lines.size(); ++l) {
        elements.clear();
        std::string_view rest = lines[l];
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            elements.push_back(parse_int(trim(rest.substr(0, comma)), "element"));
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
        members.push_back(SetMask::of(n, elements));
    }
    return Family(n, k, std::move(members));
}

} // namespace crossint
