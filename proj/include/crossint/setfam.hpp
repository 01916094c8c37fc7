#ifndef CROSSINT_SETFAM_HPP
#define CROSSINT_SETFAM_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crossint {

inline constexpr int max_ground_size = 32;

/// A subset of [n] packed into one word: bit i-1 is set iff element i is present.
class SetMask {
public:
    SetMask() = default;
    SetMask(std::uint32_t bits, int n);

    /// Builds a set from 1-based elements.
    static SetMask of(int n, std::initializer_list<int> elements);
    static SetMask of(int n, std::span<const int> elements);
    static SetMask prefix(int n, int s);

    std::uint32_t bits() const { return bits_; }
    int ground() const { return n_; }
    int size() const;
    bool contains(int element) const;

    /// |X ∩ [s]|
    int prefix_count(int s) const;
    SetMask complement() const;
    std::vector<int> elements() const;

    SetMask with(int element) const;
    SetMask without(int element) const;

    // ordering is by bit pattern only; sets over different n are never mixed
    friend bool operator==(SetMask x, SetMask y) { return x.bits_ == y.bits_; }
    friend std::strong_ordering operator<=>(SetMask x, SetMask y) { return x.bits_ <=> y.bits_; }

private:
    std::uint32_t bits_ = 0;
    int n_ = 0;
};

std::uint32_t ground_mask(int n);

/// The i-th smallest element of X (1-based). Throws UsageError if i is out of range.
int mth_element(SetMask x, int i);

/// Sum of the elements of X.
int weight(SetMask x);

/// Left compression: replace j by i when j is in X and i is not.
SetMask delta_compress(SetMask x, int i, int j);

/// A ≤ B in the dominance order: m(A,i) <= m(B,i) for every i.
/// Both sets must have the same cardinality.
bool dominated_by(SetMask lower, SetMask upper);

/// All k-subsets of [n] in ascending bit-pattern order.
std::vector<SetMask> k_subsets(int n, int k);

/// A uniform family over [n] with members stored sorted and duplicate-free.
class Family {
public:
    Family(int n, int member_size);
    /// Sorts the members; throws UsageError on a duplicate, a wrong
    /// cardinality or a ground-set mismatch.
    Family(int n, int member_size, std::vector<SetMask> members);

    static Family complete(int n, int member_size);
    static Family filtered(int n, int member_size, const std::function<bool(SetMask)>& keep);

    int ground() const { return n_; }
    int member_size() const { return k_; }
    std::size_t count() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::span<const SetMask> members() const { return members_; }
    bool contains(SetMask x) const;
    long weight() const;

    bool operator==(const Family& other) const = default;

private:
    int n_;
    int k_;
    std::vector<SetMask> members_;
};

/// Family compression: moves X to delta_ij(X) unless the image is already present.
Family family_compress(const Family& f, int i, int j);

bool is_left_compressed(const Family& f);

bool is_cross_t_intersecting(const Family& f, const Family& g, int t);

/// Some prefix [s] holds |F∩[s]| + |G∩[s]| >= s + t.
bool condition_a(SetMask f, SetMask g, int t);

/// Some i in [|F|-t+1] has m(complement(G), i) > m(F, t+i-1).
/// Requires n > |F| + |G| - t; throws UsageError otherwise.
bool condition_b(SetMask f, SetMask g, int t);

/// A Hirschorn triple covering the pair (F, G): F has at least u elements in
/// [s], G has at least v, and u + v = s + t.
struct PrefixCertificate {
    int s = 0;
    int u = 0;
    int v = 0;
    bool operator==(const PrefixCertificate&) const = default;
};

/// Smallest s satisfying condition_a, with u = |F∩[s]| and v = s + t - u.
std::optional<PrefixCertificate> prefix_certificate(SetMask f, SetMask g, int t);

struct CompressionOptions {
    /// Keep compressing (driving G to its own fixpoint) after F is left-compressed.
    bool compress_g_too = false;
    /// Called after every applied step with (i, j) and the new pair.
    std::function<void(int, int, const Family&, const Family&)> on_step;
};

struct CompressionResult {
    Family f;
    Family g;
    long steps = 0;
};

/// Repeatedly applies the first (lexicographic) compression that changes F
/// to both families until F is left-compressed.
CompressionResult compress_pair_to_fixpoint(Family f, Family g, const CompressionOptions& options = {});

/// "n=<n> size=<k>" followed by one comma-separated member per line.
std::string serialize(const Family& f);
Family parse_family(std::string_view text);

} // namespace crossint

#endif
