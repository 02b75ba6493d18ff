#ifndef BIER_SUBSET_HPP
#define BIER_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace bier {

/// A subset of the ground set {1..m}, stored as a bit pattern
/// (vertex v corresponds to bit v-1).  Supports ground sets up to 64
/// vertices so that doubled (plain + barred) vertex sets fit.
class VertexSubset {
public:
    constexpr VertexSubset() = default;
    constexpr explicit VertexSubset(std::uint64_t bits) : bits_(bits) {}

    static VertexSubset single(int v) { return VertexSubset(std::uint64_t(1) << (v - 1)); }

    static VertexSubset full(int m)
    {
        return VertexSubset(m == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << m) - 1);
    }

    /// Builds a subset from 1-based vertex labels; rejects labels outside 1..64.
    static VertexSubset of(std::initializer_list<int> vs)
    {
        VertexSubset s;
        for (int v : vs) {
            if (v < 1 || v > 64) throw std::invalid_argument("vertex label out of range: " + std::to_string(v));
            s.bits_ |= std::uint64_t(1) << (v - 1);
        }
        return s;
    }

    static VertexSubset of(const std::vector<int>& vs)
    {
        VertexSubset s;
        for (int v : vs) {
            if (v < 1 || v > 64) throw std::invalid_argument("vertex label out of range: " + std::to_string(v));
            s.bits_ |= std::uint64_t(1) << (v - 1);
        }
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1; }
    constexpr bool subset_of(VertexSubset o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool proper_subset_of(VertexSubset o) const { return subset_of(o) && bits_ != o.bits_; }
    constexpr bool disjoint_from(VertexSubset o) const { return (bits_ & o.bits_) == 0; }

    constexpr VertexSubset with(int v) const { return VertexSubset(bits_ | (std::uint64_t(1) << (v - 1))); }
    constexpr VertexSubset without(int v) const { return VertexSubset(bits_ & ~(std::uint64_t(1) << (v - 1))); }

    friend constexpr VertexSubset operator|(VertexSubset a, VertexSubset b) { return VertexSubset(a.bits_ | b.bits_); }
    friend constexpr VertexSubset operator&(VertexSubset a, VertexSubset b) { return VertexSubset(a.bits_ & b.bits_); }
    friend constexpr VertexSubset operator-(VertexSubset a, VertexSubset b) { return VertexSubset(a.bits_ & ~b.bits_); }
    friend constexpr VertexSubset operator^(VertexSubset a, VertexSubset b) { return VertexSubset(a.bits_ ^ b.bits_); }

    friend constexpr bool operator==(VertexSubset a, VertexSubset b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(VertexSubset a, VertexSubset b) { return a.bits_ != b.bits_; }

    /// 1-based members in ascending order.
    std::vector<int> members() const
    {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on ascending member lists.  Equivalent bit trick:
/// the subset owning the lowest differing bit comes first.
inline constexpr bool lex_less(VertexSubset a, VertexSubset b)
{
    std::uint64_t d = a.bits() ^ b.bits();
    if (d == 0) return false;
    return a.bits() & (d & (~d + 1));
}

/// Canonical total order: ascending cardinality, ties broken
/// lexicographically on sorted member lists.
inline constexpr bool canonical_less(VertexSubset a, VertexSubset b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

/// Renders a subset as "{1,2,5}"; doubled-ground vertices above base_m are
/// written with a prime, e.g. "{1,2'}" when base_m is given.
std::string format_subset(VertexSubset s, int base_m = 0);

/// Iterates all submasks of `sup` (including empty and sup itself) in
/// descending mask order; calls f(VertexSubset).
template <typename F>
void for_each_subset_of(VertexSubset sup, F&& f)
{
    std::uint64_t g = sup.bits();
    std::uint64_t s = g;
    while (true) {
        f(VertexSubset(s));
        if (s == 0) break;
        s = (s - 1) & g;
    }
}

} // namespace bier

#endif
