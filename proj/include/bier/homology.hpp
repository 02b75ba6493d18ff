#ifndef BIER_HOMOLOGY_HPP
#define BIER_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "bier/complex.hpp"

namespace bier {

/// Reduced Betti vector over Q, degrees -1..dim, stored with offset 1
/// (entry 0 holds degree -1) and trailing zeros trimmed.
class ReducedBetti {
public:
    ReducedBetti() = default;

    static ReducedBetti from_offset_vector(std::vector<long long> v)
    {
        ReducedBetti r;
        r.b_ = std::move(v);
        r.trim();
        return r;
    }

    /// Single 1 in degree d (d >= -1): the reduced Betti vector of S^d.
    static ReducedBetti sphere(int d)
    {
        ReducedBetti r;
        r.b_.assign(static_cast<std::size_t>(d + 2), 0);
        r.b_.back() = 1;
        return r;
    }

    long long at_degree(int d) const
    {
        std::size_t i = static_cast<std::size_t>(d + 1);
        return (d >= -1 && i < b_.size()) ? b_[i] : 0;
    }

    bool is_zero() const { return b_.empty(); }

    /// Suspension shift: degree d moves to d+k.
    ReducedBetti shifted(int k) const
    {
        if (b_.empty() || k == 0) return *this;
        ReducedBetti r;
        r.b_.assign(b_.size() + static_cast<std::size_t>(k), 0);
        for (std::size_t i = 0; i < b_.size(); ++i) r.b_[i + static_cast<std::size_t>(k)] = b_[i];
        return r;
    }

    const std::vector<long long>& offset_vector() const { return b_; }

    std::string to_string() const;

    friend bool operator==(const ReducedBetti&, const ReducedBetti&) = default;

private:
    void trim()
    {
        while (!b_.empty() && b_.back() == 0) b_.pop_back();
    }
    std::vector<long long> b_;
};

/// Boundary matrix of degree k (maps k-faces to (k-1)-faces; degree 0 maps
/// vertices to the empty face).  Rows/cols follow canonical face order.
struct BoundaryMatrix {
    int degree = 0;
    std::vector<VertexSubset> rows;
    std::vector<VertexSubset> cols;
    std::vector<std::vector<int>> entries; // entries[r][c] in {-1,0,1}
};

BoundaryMatrix boundary_matrix(const Complex& K, int degree);

/// Ranks of reduced rational homology, degrees -1..dim, by exact
/// integer-preserving elimination on the augmented chain complex.
ReducedBetti reduced_betti_q(const Complex& K);

struct TorsionEntry {
    int degree = 0;        // homological degree carrying the torsion
    long long order = 0;   // prime-power elementary divisor
    friend bool operator==(const TorsionEntry&, const TorsionEntry&) = default;
};

struct HomologyResult {
    ReducedBetti reduced_betti;        // free ranks
    std::vector<TorsionEntry> torsion; // sorted by (degree, order)
};

/// Integral reduced homology via Smith normal form; escalates to arbitrary
/// precision instead of overflowing.
HomologyResult integral_homology(const Complex& K);

namespace detail {

/// Reduced rational Betti numbers of a downward-closed face family (must
/// contain the empty face).  This is the hot path behind all enumeration
/// sweeps; it collapses free pairs before doing linear algebra.
ReducedBetti reduced_betti_of_family(const std::vector<VertexSubset>& faces);

/// Free-pair collapse; returns a homotopy-equivalent subfamily that is still
/// a simplicial complex (the empty face is never collapsed).
std::vector<VertexSubset> collapse_core(const std::vector<VertexSubset>& faces);

/// Exact rank of an integer matrix (destroys its argument).
int exact_rank(std::vector<std::vector<long long>> M);

} // namespace detail

} // namespace bier

#endif
