#ifndef BIER_TORIC_HPP
#define BIER_TORIC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bier/betti.hpp"
#include "bier/bier.hpp"
#include "bier/complex.hpp"
#include "bier/homology.hpp"

namespace bier {

/// The (m-1) x 2m mod-2 characteristic matrix Λ_m: columns i and m+i both
/// equal e_i, with e_m = e_1 + ... + e_{m-1}.  Columns are stored as bit
/// masks over the m-1 rows.
struct CharMatrix {
    int m = 2;
    std::vector<std::uint32_t> columns; // 2m columns
};

/// Builds Λ_m and verifies that the columns selected by every face of the
/// doubled-ground complex are linearly independent mod 2.
CharMatrix lambda_matrix(int m, const Complex& doubled);
CharMatrix lambda_matrix(int m, const BierComplex& B);

/// A row-space element of Λ_m together with its even subset of [m].
struct RowElement {
    std::uint32_t coeffs = 0; // combination of rows ω_1..ω_{m-1}
    VertexSubset subset;      // the even subset I_ω
    friend bool operator==(const RowElement&, const RowElement&) = default;
};

/// I_ω = {i : coeff_i = 1}, plus m when the coefficient count is odd.
VertexSubset row_to_subset(std::uint32_t coeffs, int m);

/// Inverse of row_to_subset; requires |I| even.
RowElement subset_to_row(VertexSubset I, int m);

/// I_{2k}(K) and I_{2k-1}(K) keyed by degree 0..m-1; only the stored even
/// subsets of matching joint membership, canonical order.
struct IndexCollections {
    std::map<int, std::vector<VertexSubset>> by_degree;

    std::size_t count(int degree) const
    {
        auto it = by_degree.find(degree);
        return it == by_degree.end() ? 0 : it->second.size();
    }
};

IndexCollections i_collections(const Complex& K);

/// Rational Betti numbers of the real toric manifold over Bier(K):
/// β^i = |I_i(K)| for i = 0..m-1.
std::vector<long long> toric_betti(const Complex& K);

/// Degree of I as a cohomology generator, when it is one.
std::optional<int> generator_degree(const Complex& K, VertexSubset I);

/// Homological concentration certificate: for every even subset I, the
/// reduced Betti vector of Bier(K)|_{I⊔Ī} is zero except for a single 1 in
/// the degree dictated by the collection containing I (or zero everywhere).
struct ConcentrationRow {
    VertexSubset subset;
    int degree = -1; // -1: contributes to no Betti number
    bool verified = false;
    ReducedBetti observed;
};

struct ConcentrationReport {
    bool ok = false;
    std::vector<ConcentrationRow> rows;
};

ConcentrationReport toric_concentration(const Complex& K, const EnumerationOptions& opts = {});

/// Per-k comparison h_{2k} - h_{2k-1} vs β^{2k} - β^{2k-1} for the Bier
/// sphere h-vector taken with r = m-1.
struct HCorollaryRow {
    int k = 0;
    long long h_even = 0, h_odd = 0;
    long long beta_even = 0, beta_odd = 0;
    bool equal = false;
};

struct HCorollaryReport {
    bool pass = false;
    HVector h;
    std::vector<long long> beta;
    std::vector<HCorollaryRow> rows;
};

HCorollaryReport h_corollary_check(const Complex& K);

/// Partial cup-product evaluation in H*(M^R; Q).
struct ProductResult {
    enum class Tag { Zero, GeneratorUpToSign, Undetermined };
    Tag tag = Tag::Zero;
    VertexSubset subset; // set only for GeneratorUpToSign
    friend bool operator==(const ProductResult&, const ProductResult&) = default;
};

ProductResult cup_product(const Complex& K, VertexSubset I, VertexSubset J);

} // namespace bier

#endif
