#include "bier/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace bier {

namespace {

void check_ground(int m)
{
    if (m < 1 || m > 64) throw std::invalid_argument("ground size must be in 1..64, got " + std::to_string(m));
}

} // namespace

Complex::Complex(int ground_size, std::vector<VertexSubset> faces) : m_(ground_size), faces_(std::move(faces))
{
    check_ground(m_);
    index_faces();
    if (faces_.empty() || !faces_.front().empty())
        throw std::invalid_argument("face family must contain the empty face");
    VertexSubset ground = ground_mask();
    for (VertexSubset f : faces_) {
        if (!f.subset_of(ground)) throw std::invalid_argument("face " + format_subset(f) + " exceeds ground set");
        for (int v : f.members()) {
            if (!contains(f.without(v)))
                throw std::invalid_argument("family not downward closed at " + format_subset(f));
        }
    }
}

Complex::Complex(int ground_size, std::vector<VertexSubset> faces, Unchecked)
    : m_(ground_size), faces_(std::move(faces))
{
    check_ground(m_);
    index_faces();
}

void Complex::index_faces()
{
    std::sort(faces_.begin(), faces_.end(), canonical_less);
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    face_set_.reserve(faces_.size() * 2);
    for (VertexSubset f : faces_) face_set_.insert(f.bits());
    dim_ = faces_.empty() ? -1 : faces_.back().size() - 1;
    card_offsets_.assign(static_cast<std::size_t>(dim_ + 3), faces_.size());
    for (std::size_t i = faces_.size(); i-- > 0;) card_offsets_[faces_[i].size()] = i;
    // empty suffix ranges collapse onto the next offset
    for (std::size_t k = card_offsets_.size() - 1; k-- > 0;)
        if (card_offsets_[k] > card_offsets_[k + 1]) card_offsets_[k] = card_offsets_[k + 1];
}

std::pair<std::size_t, std::size_t> Complex::card_range(int k) const
{
    if (k < 0 || k + 1 >= static_cast<int>(card_offsets_.size())) return {faces_.size(), faces_.size()};
    return {card_offsets_[k], card_offsets_[k + 1]};
}

Complex make_complex(int m, const std::vector<VertexSubset>& generators)
{
    check_ground(m);
    VertexSubset ground = VertexSubset::full(m);
    for (VertexSubset g : generators) {
        if (!g.subset_of(ground)) {
            VertexSubset bad = g - ground;
            throw std::invalid_argument("generator vertex " + std::to_string(bad.members().front()) +
                                        " out of range for m=" + std::to_string(m));
        }
    }
    std::unordered_set<std::uint64_t> seen;
    std::vector<VertexSubset> faces;
    seen.insert(0);
    faces.push_back(VertexSubset());
    for (VertexSubset g : generators) {
        for_each_subset_of(g, [&](VertexSubset s) {
            if (seen.insert(s.bits()).second) faces.push_back(s);
        });
    }
    return Complex(m, std::move(faces), Complex::Unchecked{});
}

bool is_face(const Complex& K, VertexSubset s)
{
    if (!s.subset_of(K.ground_mask()))
        throw std::invalid_argument("subset " + format_subset(s) + " exceeds ground set");
    return K.contains(s);
}

std::vector<VertexSubset> facets(const Complex& K)
{
    std::vector<VertexSubset> out;
    for (VertexSubset f : K.faces()) {
        bool maximal = true;
        for (int v = 1; v <= K.ground_size() && maximal; ++v)
            if (!f.contains(v) && K.contains(f.with(v))) maximal = false;
        if (maximal) out.push_back(f);
    }
    return out;
}

Complex full_subcomplex(const Complex& K, VertexSubset I)
{
    std::vector<VertexSubset> faces;
    for (VertexSubset f : K.faces())
        if (f.subset_of(I)) faces.push_back(f);
    return Complex(K.ground_size(), std::move(faces), Complex::Unchecked{});
}

Complex link(const Complex& K, VertexSubset s)
{
    if (!K.contains(s)) throw std::invalid_argument("not a face: " + format_subset(s));
    std::vector<VertexSubset> faces;
    for (VertexSubset f : K.faces())
        if (f.disjoint_from(s) && K.contains(f | s)) faces.push_back(f);
    return Complex(K.ground_size(), std::move(faces), Complex::Unchecked{});
}

Complex join(const Complex& K, const Complex& L)
{
    int m = K.ground_size() + L.ground_size();
    check_ground(m);
    std::vector<VertexSubset> faces;
    faces.reserve(K.face_count() * L.face_count());
    for (VertexSubset s : K.faces())
        for (VertexSubset t : L.faces()) faces.push_back(VertexSubset(s.bits() | (t.bits() << K.ground_size())));
    return Complex(m, std::move(faces), Complex::Unchecked{});
}

Complex suspension(const Complex& K, int k)
{
    if (k < 0) throw std::invalid_argument("suspension count must be nonnegative");
    Complex result = K;
    const Complex s0 = make_complex(2, {VertexSubset::single(1), VertexSubset::single(2)});
    for (int i = 0; i < k; ++i) result = join(result, s0);
    return result;
}

Complex alexander_dual(const Complex& K)
{
    const int m = K.ground_size();
    if (m > 32) throw std::invalid_argument("alexander_dual enumerates 2^m subsets; supported up to m = 32");
    const std::uint64_t full = VertexSubset::full(m).bits();
    if (K.face_count() == (std::uint64_t(1) << m)) throw std::invalid_argument("dual is void: K = 2^[m]");
    std::vector<VertexSubset> faces;
    for (std::uint64_t s = 0; s <= full; ++s)
        if (!K.contains(VertexSubset(full & ~s))) faces.push_back(VertexSubset(s));
    return Complex(m, std::move(faces), Complex::Unchecked{});
}

std::vector<long long> f_vector(const Complex& K)
{
    std::vector<long long> f(static_cast<std::size_t>(K.dim() + 1), 0);
    for (int k = 1; k <= K.dim() + 1; ++k) {
        auto [b, e] = K.card_range(k);
        f[static_cast<std::size_t>(k - 1)] = static_cast<long long>(e - b);
    }
    return f;
}

namespace {

// C(n,k) as exact long long; n <= 64 here.
long long binom(int n, int k)
{
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    return static_cast<long long>(r);
}

} // namespace

HVector h_vector(const Complex& K, int r)
{
    if (r < K.dim() + 1)
        throw std::invalid_argument("h-vector rank r=" + std::to_string(r) + " below dim+1=" + std::to_string(K.dim() + 1));
    std::vector<long long> f = f_vector(K);
    HVector out;
    out.r = r;
    out.h.assign(static_cast<std::size_t>(r + 1), 0);
    // h_k = sum_{i=0}^{k} (-1)^{k-i} C(r-i, k-i) f_{i-1}, with f_{-1} = 1.
    for (int k = 0; k <= r; ++k) {
        long long acc = 0;
        for (int i = 0; i <= k; ++i) {
            long long fi = (i == 0) ? 1 : (i - 1 < static_cast<int>(f.size()) ? f[static_cast<std::size_t>(i - 1)] : 0);
            long long term = binom(r - i, k - i) * fi;
            acc += ((k - i) % 2 == 0) ? term : -term;
        }
        out.h[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

HVector h_vector(const Complex& K) { return h_vector(K, K.dim() + 1); }

Complex skeleton_simplex(int m, int r)
{
    check_ground(m);
    if (r < -1 || r > m - 1)
        throw std::invalid_argument("skeleton rank r=" + std::to_string(r) + " outside -1.." + std::to_string(m - 1));
    std::vector<VertexSubset> faces;
    const std::uint64_t full = VertexSubset::full(m).bits();
    for (std::uint64_t s = 0; s <= full; ++s)
        if (std::popcount(s) <= r + 1) faces.push_back(VertexSubset(s));
    return Complex(m, std::move(faces), Complex::Unchecked{});
}

long long euler_characteristic(const Complex& K)
{
    long long chi = 0;
    std::vector<long long> f = f_vector(K);
    for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0) ? f[i] : -f[i];
    return chi;
}

std::string serialize_faces(const Complex& K)
{
    std::string out = "m=" + std::to_string(K.ground_size()) + ";";
    for (VertexSubset f : K.faces()) out += format_subset(f);
    return out;
}

std::string format_subset(VertexSubset s, int base_m)
{
    std::string out = "{";
    bool first = true;
    for (int v : s.members()) {
        if (!first) out += ",";
        first = false;
        if (base_m > 0 && v > base_m)
            out += std::to_string(v - base_m) + "'";
        else
            out += std::to_string(v);
    }
    out += "}";
    return out;
}

} // namespace bier
