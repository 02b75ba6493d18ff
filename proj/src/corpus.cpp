#include "bier/corpus.hpp"

#include <stdexcept>

namespace bier {

std::vector<Complex> all_complexes(int m)
{
    if (m < 1 || m > 4) throw std::invalid_argument("all_complexes supports m in 1..4");
    const int nsub = 1 << m;
    const std::uint32_t full_family = (nsub == 32) ? 0xffffffffu : ((std::uint32_t(1) << nsub) - 1);
    std::vector<Complex> out;
    for (std::uint32_t fam = 1; fam < full_family; ++fam) {
        if (!(fam & 1)) continue; // ∅ must be a face
        bool closed = true;
        for (int s = 1; s < nsub && closed; ++s) {
            if (!((fam >> s) & 1)) continue;
            for (int v = 0; v < m; ++v)
                if ((s >> v) & 1 && !((fam >> (s & ~(1 << v))) & 1)) {
                    closed = false;
                    break;
                }
        }
        if (!closed) continue;
        std::vector<VertexSubset> faces;
        for (int s = 0; s < nsub; ++s)
            if ((fam >> s) & 1) faces.push_back(VertexSubset(static_cast<std::uint64_t>(s)));
        out.emplace_back(m, std::move(faces), Complex::Unchecked{});
    }
    return out;
}

Complex RandomComplexSource::next()
{
    const std::uint64_t full = VertexSubset::full(m_).bits();
    while (true) {
        const int generators = 1 + static_cast<int>(rng_() % static_cast<std::uint64_t>(m_ + 2));
        std::vector<VertexSubset> gens;
        gens.reserve(static_cast<std::size_t>(generators));
        for (int i = 0; i < generators; ++i) gens.push_back(VertexSubset(rng_() & full));
        Complex K = make_complex(m_, gens);
        if (K.face_count() != (std::uint64_t(1) << m_)) return K;
    }
}

} // namespace bier
