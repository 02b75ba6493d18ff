#include "bier/bier.hpp"

#include <stdexcept>

namespace bier {

BierComplex::BierComplex(int base_m, Complex complex) : base_m_(base_m), complex_(std::move(complex))
{
    if (complex_.ground_size() != 2 * base_m_)
        throw std::invalid_argument("doubled ground size mismatch: expected " + std::to_string(2 * base_m_));
    const std::uint64_t low = VertexSubset::full(base_m_).bits();
    for (VertexSubset f : complex_.faces())
        if ((f.bits() & (f.bits() >> base_m_)) & low)
            throw std::invalid_argument("face " + format_subset(f, base_m_) + " contains a plain/barred pair");
}

BierComplex deleted_join(const Complex& K, const Complex& L)
{
    if (K.ground_size() != L.ground_size())
        throw std::invalid_argument("deleted join requires equal ground sizes");
    const int m = K.ground_size();
    std::vector<VertexSubset> faces;
    for (VertexSubset s : K.faces())
        for (VertexSubset t : L.faces())
            if (s.disjoint_from(t)) faces.push_back(VertexSubset(s.bits() | (t.bits() << m)));
    return BierComplex(m, Complex(2 * m, std::move(faces), Complex::Unchecked{}));
}

BierComplex bier_sphere(const Complex& K)
{
    const int m = K.ground_size();
    BierComplex B = deleted_join(K, alexander_dual(K));
    if (m >= 2) {
        if (B.complex().dim() != m - 2) throw std::logic_error("Bier sphere dimension is not m-2");
        for (VertexSubset f : facets(B.complex()))
            if (f.size() != m - 1) throw std::logic_error("Bier sphere is not pure of dimension m-2");
    }
    const long long reduced_chi = euler_characteristic(B.complex()) - 1;
    if (reduced_chi != (m % 2 == 0 ? 1 : -1))
        throw std::logic_error("Bier sphere Euler characteristic mismatch");
    return B;
}

Complex bier_full(const BierComplex& B, const BierIndex& idx)
{
    const int m = B.base_m();
    const VertexSubset allowed(idx.I.bits() | (idx.J.bits() << m));
    if (!idx.I.subset_of(VertexSubset::full(m)) || !idx.J.subset_of(VertexSubset::full(m)))
        throw std::invalid_argument("BierIndex exceeds base ground set");
    return full_subcomplex(B.complex(), allowed);
}

Complex build_A(const Complex& K, const Complex& L)
{
    const int m = K.ground_size();
    if (L.ground_size() != m) throw std::invalid_argument("build_A requires equal ground sizes");
    std::vector<VertexSubset> faces(K.faces());
    if (L.face_count() == (std::uint64_t(1) << m)) {
        // L̂ is void: v_S stays a ghost vertex
        return Complex(m + 1, std::move(faces), Complex::Unchecked{});
    }
    const Complex Lhat = alexander_dual(L);
    for (VertexSubset s : Lhat.faces()) {
        if (!K.contains(s)) throw std::invalid_argument("L̂ ⊄ K at face " + format_subset(s));
        faces.push_back(s.with(m + 1));
    }
    return Complex(m + 1, std::move(faces), Complex::Unchecked{});
}

std::vector<std::pair<VertexSubset, Complex>> cover_pieces(const Complex& K, const BierIndex& idx)
{
    const BierComplex B = bier_sphere(K);
    const VertexSubset common = idx.I & idx.J;
    std::vector<VertexSubset> sigmas;
    for_each_subset_of(common, [&](VertexSubset s) {
        if (K.contains(s)) sigmas.push_back(s);
    });
    std::sort(sigmas.begin(), sigmas.end(), canonical_less);
    std::vector<std::pair<VertexSubset, Complex>> out;
    out.reserve(sigmas.size());
    for (VertexSubset s : sigmas)
        out.emplace_back(s, bier_full(B, BierIndex{(idx.I - common) | s, idx.J - s}));
    return out;
}

Complex swap_plain_barred(const Complex& doubled, int base_m)
{
    if (doubled.ground_size() != 2 * base_m) throw std::invalid_argument("ground size is not doubled");
    const std::uint64_t low = VertexSubset::full(base_m).bits();
    std::vector<VertexSubset> faces;
    faces.reserve(doubled.face_count());
    for (VertexSubset f : doubled.faces())
        faces.push_back(VertexSubset(((f.bits() & low) << base_m) | (f.bits() >> base_m)));
    return Complex(2 * base_m, std::move(faces), Complex::Unchecked{});
}

} // namespace bier
