#include "bier/toric.hpp"

#include <algorithm>
#include <stdexcept>

namespace bier {

namespace {

void require_proper(const Complex& K)
{
    if (K.ground_size() > 32)
        throw std::invalid_argument("subset enumeration over K supports ground sizes up to 32");
    if (K.face_count() == (std::uint64_t(1) << K.ground_size()))
        throw std::invalid_argument("K = 2^[m] is not admitted");
}

std::uint32_t lambda_column(int m, int vertex_label)
{
    const int l = (vertex_label - 1) % m + 1;
    const std::uint32_t ones = (std::uint32_t(1) << (m - 1)) - 1;
    return l == m ? ones : (std::uint32_t(1) << (l - 1));
}

} // namespace

CharMatrix lambda_matrix(int m, const Complex& doubled)
{
    if (m < 2) throw std::invalid_argument("Λ_m requires m ≥ 2");
    if (doubled.ground_size() != 2 * m) throw std::invalid_argument("complex ground size must be 2m");
    CharMatrix L;
    L.m = m;
    L.columns.reserve(2 * static_cast<std::size_t>(m));
    for (int v = 1; v <= 2 * m; ++v) L.columns.push_back(lambda_column(m, v));

    // characteristic condition: selected columns independent over GF(2)
    for (VertexSubset f : doubled.faces()) {
        std::uint32_t basis[32] = {0};
        for (int v : f.members()) {
            std::uint32_t col = L.columns[static_cast<std::size_t>(v - 1)];
            while (col != 0) {
                const int hb = 31 - std::countl_zero(col);
                if (basis[hb] == 0) {
                    basis[hb] = col;
                    break;
                }
                col ^= basis[hb];
            }
            if (col == 0)
                throw std::invalid_argument("Λ_" + std::to_string(m) + " is not characteristic: dependent columns on face " +
                                            format_subset(f, m));
        }
    }
    return L;
}

CharMatrix lambda_matrix(int m, const BierComplex& B)
{
    if (B.base_m() != m) throw std::invalid_argument("base ground size mismatch");
    return lambda_matrix(m, B.complex());
}

VertexSubset row_to_subset(std::uint32_t coeffs, int m)
{
    if (m < 2 || (coeffs >> (m - 1)) != 0) throw std::invalid_argument("row coefficients exceed m-1 rows");
    VertexSubset I(coeffs);
    if (I.size() % 2 == 1) I = I.with(m);
    return I;
}

RowElement subset_to_row(VertexSubset I, int m)
{
    if (!I.subset_of(VertexSubset::full(m))) throw std::invalid_argument("subset exceeds ground set");
    if (I.size() % 2 != 0) throw std::invalid_argument("row-space subsets have even cardinality, got " + format_subset(I));
    RowElement r;
    r.subset = I;
    r.coeffs = static_cast<std::uint32_t>(I.without(m).bits());
    return r;
}

IndexCollections i_collections(const Complex& K)
{
    require_proper(K);
    const int m = K.ground_size();
    const VertexSubset ground = K.ground_mask();
    std::vector<VertexSubset> evens;
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << m); ++s)
        if (std::popcount(s) % 2 == 0) evens.push_back(VertexSubset(s));
    std::sort(evens.begin(), evens.end(), canonical_less);

    IndexCollections out;
    for (VertexSubset I : evens) {
        const bool in_K = K.contains(I);
        const bool bar_in_dual = !K.contains(ground - I);
        int degree = -1;
        if (in_K && bar_in_dual)
            degree = I.size();
        else if (!in_K && !bar_in_dual)
            degree = I.size() - 1;
        if (degree < 0) continue;
        if (degree > m - 1) throw std::logic_error("collection degree exceeds m-1 at " + format_subset(I));
        out.by_degree[degree].push_back(I);
    }
    return out;
}

std::vector<long long> toric_betti(const Complex& K)
{
    const IndexCollections cols = i_collections(K);
    std::vector<long long> beta(static_cast<std::size_t>(K.ground_size()), 0);
    for (const auto& [degree, members] : cols.by_degree)
        beta[static_cast<std::size_t>(degree)] = static_cast<long long>(members.size());
    return beta;
}

std::optional<int> generator_degree(const Complex& K, VertexSubset I)
{
    if (I.size() % 2 != 0) return std::nullopt;
    const bool in_K = K.contains(I);
    const bool bar_in_dual = !K.contains(K.ground_mask() - I);
    if (in_K && bar_in_dual) return I.size();
    if (!in_K && !bar_in_dual) return I.size() - 1;
    return std::nullopt;
}

ConcentrationReport toric_concentration(const Complex& K, const EnumerationOptions& opts)
{
    require_proper(K);
    const int m = K.ground_size();
    if (m > opts.cap)
        throw CapExceededError("ground size " + std::to_string(m) + " exceeds cap " + std::to_string(opts.cap) +
                               " (2^" + std::to_string(m - 1) + " homology calls)");
    const BierComplex B = bier_sphere(K);

    std::vector<VertexSubset> evens;
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << m); ++s)
        if (std::popcount(s) % 2 == 0) evens.push_back(VertexSubset(s));
    std::sort(evens.begin(), evens.end(), canonical_less);

    ConcentrationReport report;
    report.ok = true;
    for (VertexSubset I : evens) {
        ConcentrationRow row;
        row.subset = I;
        row.degree = generator_degree(K, I).value_or(-1);
        row.observed = reduced_betti_q(bier_full(B, BierIndex{I, I}));
        const ReducedBetti expected = row.degree < 0 ? ReducedBetti() : ReducedBetti::sphere(row.degree - 1);
        row.verified = (row.observed == expected);
        report.ok = report.ok && row.verified;
        report.rows.push_back(std::move(row));
    }
    return report;
}

HCorollaryReport h_corollary_check(const Complex& K)
{
    require_proper(K);
    const int m = K.ground_size();
    HCorollaryReport report;
    report.h = h_vector(bier_sphere(K).complex(), m - 1);
    report.beta = toric_betti(K);
    auto h_at = [&](int i) -> long long {
        return (i >= 0 && i <= report.h.r) ? report.h.h[static_cast<std::size_t>(i)] : 0;
    };
    auto beta_at = [&](int i) -> long long {
        return (i >= 0 && i < static_cast<int>(report.beta.size())) ? report.beta[static_cast<std::size_t>(i)] : 0;
    };
    report.pass = true;
    for (int k = 0; k <= m / 2; ++k) {
        HCorollaryRow row;
        row.k = k;
        row.h_even = h_at(2 * k);
        row.h_odd = h_at(2 * k - 1);
        row.beta_even = beta_at(2 * k);
        row.beta_odd = beta_at(2 * k - 1);
        row.equal = (row.h_even - row.h_odd) == (row.beta_even - row.beta_odd);
        report.pass = report.pass && row.equal;
        report.rows.push_back(row);
    }
    return report;
}

ProductResult cup_product(const Complex& K, VertexSubset I, VertexSubset J)
{
    require_proper(K);
    if (!I.subset_of(K.ground_mask()) || !J.subset_of(K.ground_mask()))
        throw std::invalid_argument("cup-product arguments must lie inside {1..m}");
    if (I.size() % 2 != 0)
        throw std::invalid_argument("I = " + format_subset(I) +
                                    " is not a generator: row-space subsets have even cardinality");
    if (J.size() % 2 != 0)
        throw std::invalid_argument("J = " + format_subset(J) +
                                    " is not a generator: row-space subsets have even cardinality");
    const std::optional<int> di = generator_degree(K, I);
    const std::optional<int> dj = generator_degree(K, J);

    ProductResult out;
    // An even subset with mixed membership indexes a contractible full
    // subcomplex, hence the zero cohomology class: any product with it
    // vanishes.
    if (!di || !dj) {
        out.tag = ProductResult::Tag::Zero;
        return out;
    }
    const int i = *di;
    const int j = *dj;

    // Φ(∅) is the unit of H^0, so the unit law holds exactly.
    if (I.empty()) {
        out.tag = ProductResult::Tag::GeneratorUpToSign;
        out.subset = J;
        return out;
    }
    if (J.empty()) {
        out.tag = ProductResult::Tag::GeneratorUpToSign;
        out.subset = I;
        return out;
    }
    const int inter = (I & J).size();
    if (i % 2 != j % 2) {
        out.tag = inter != 0 ? ProductResult::Tag::Zero : ProductResult::Tag::Undetermined;
        return out;
    }
    if (i % 2 == 1) { // both odd
        out.tag = inter != 1 ? ProductResult::Tag::Zero : ProductResult::Tag::Undetermined;
        return out;
    }
    // both even
    if (inter == 0 && generator_degree(K, I | J) == i + j) {
        out.tag = ProductResult::Tag::GeneratorUpToSign;
        out.subset = I | J;
    } else {
        out.tag = ProductResult::Tag::Zero;
    }
    return out;
}

} // namespace bier
