#ifndef BIER_BETTI_HPP
#define BIER_BETTI_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "bier/complex.hpp"
#include "bier/homology.hpp"

namespace bier {

/// Raised when a 2^ground enumeration exceeds the configured cap.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sparse bigraded Betti table: (i, j) ↦ β^{-i,2j}, zero entries absent.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;

    void add(int i, int j, long long v)
    {
        if (v == 0) return;
        auto it = entries.find({i, j});
        if (it == entries.end())
            entries.emplace(std::make_pair(i, j), v);
        else if ((it->second += v) == 0)
            entries.erase(it);
    }

    long long at(int i, int j) const
    {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// F⁺_k / F⁻_k membership classes, keyed by even k; only nonempty classes
/// are stored, members in canonical order.
struct FClasses {
    std::map<int, std::vector<VertexSubset>> plus;
    std::map<int, std::vector<VertexSubset>> minus;
};

struct EnumerationOptions {
    int cap = 18;    // max ground size for 2^ground sweeps
    int workers = 0; // 0 = hardware concurrency
};

/// F⁺_k = {σ : |σ| = k/2, σ ∈ K, σ̄ ∈ K̂} and
/// F⁻_k = {τ : |τ| = k/2, τ ∉ K, τ̄ ∉ K̂}; requires K ≠ 2^[m].
FClasses f_classes(const Complex& K);

/// Brute-force Hochster enumeration: β^{-i,2j} = Σ_{|W|=j} β̃^{j-i-1}(G|_W).
BettiTable hochster_table(const Complex& G, const EnumerationOptions& opts = {});

/// Closed formula for β^{-i,2j}(Bier(K)): Kronecker terms from F±, plus link
/// contributions over comparable pairs only.  Requires K ≠ 2^[m].
BettiTable bier_betti_closed(const Complex& K);

/// Ranks of H^p(RZ_G; Q) for p = 0..ground_size.
std::vector<long long> rz_cohomology_ranks(const Complex& G, const EnumerationOptions& opts = {});

} // namespace bier

#endif
