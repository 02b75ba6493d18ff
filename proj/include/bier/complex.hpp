#ifndef BIER_COMPLEX_HPP
#define BIER_COMPLEX_HPP

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "bier/subset.hpp"

namespace bier {

/// A finite abstract simplicial complex on the ground set {1..m}, stored as
/// the complete downward-closed face family in canonical order.  The empty
/// face is always present ({∅} is the minimum representable complex; the
/// void complex is not representable).  Vertices of the ground set that are
/// not faces are ghost vertices; ground_size is authoritative.
///
/// Immutable after construction; safe for concurrent reads.
class Complex {
public:
    struct Unchecked {};

    /// Validating constructor: faces must be downward closed, contain the
    /// empty face, and lie inside {1..m}.
    Complex(int ground_size, std::vector<VertexSubset> faces);

    /// Trusted constructor for internally produced families (already closed,
    /// possibly unsorted).  Still sorts and indexes.
    Complex(int ground_size, std::vector<VertexSubset> faces, Unchecked);

    int ground_size() const { return m_; }

    /// Faces in canonical order (cardinality, then lex on member lists).
    const std::vector<VertexSubset>& faces() const { return faces_; }

    bool contains(VertexSubset s) const { return face_set_.count(s.bits()) != 0; }

    std::size_t face_count() const { return faces_.size(); }

    /// Largest face dimension; -1 for {∅}.
    int dim() const { return dim_; }

    /// Faces of cardinality k as a contiguous range [begin, end) of indices
    /// into faces().
    std::pair<std::size_t, std::size_t> card_range(int k) const;

    VertexSubset ground_mask() const { return VertexSubset::full(m_); }

    friend bool operator==(const Complex& a, const Complex& b)
    {
        return a.m_ == b.m_ && a.faces_ == b.faces_;
    }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

    /// Face families compared regardless of ground size (trailing ghosts are
    /// harmless in many identities).
    static bool same_faces(const Complex& a, const Complex& b) { return a.faces_ == b.faces_; }

private:
    void index_faces();

    int m_ = 1;
    int dim_ = -1;
    std::vector<VertexSubset> faces_;
    std::unordered_set<std::uint64_t> face_set_;
    std::vector<std::size_t> card_offsets_; // card_offsets_[k] = first index of a k-subset
};

// --- elementary constructions -------------------------------------------

/// Downward closure of a generator list; duplicates and dominated generators
/// are deduplicated.  Rejects generator vertices outside {1..m}.
Complex make_complex(int m, const std::vector<VertexSubset>& generators);

bool is_face(const Complex& K, VertexSubset s);

/// Inclusion-maximal faces in canonical order; {∅} has the single facet ∅.
std::vector<VertexSubset> facets(const Complex& K);

/// {σ ∈ K : σ ⊆ I} on the same ground set.
Complex full_subcomplex(const Complex& K, VertexSubset I);

/// {τ ∈ K : τ ∩ s = ∅, τ ∪ s ∈ K}; requires s ∈ K.
Complex link(const Complex& K, VertexSubset s);

/// Simplicial join; L's vertices are relabelled to m_K+1 .. m_K+m_L.
Complex join(const Complex& K, const Complex& L);

/// k-fold suspension; each fold appends two fresh non-adjacent apexes.
Complex suspension(const Complex& K, int k);

/// Combinatorial Alexander dual {σ : [m]∖σ ∉ K} on the same ground size
/// (barredness is the caller's labelling convention).  Rejects K = 2^[m].
Complex alexander_dual(const Complex& K);

/// f_i = number of i-dimensional faces, i = 0..dim.  Empty for {∅}.
std::vector<long long> f_vector(const Complex& K);

struct HVector {
    int r = 0;
    std::vector<long long> h; // h[0..r]
    friend bool operator==(const HVector&, const HVector&) = default;
};

/// h-vector from (t-1)^r + f_0 (t-1)^{r-1} + ... + f_{r-1}; requires
/// r >= dim(K)+1.
HVector h_vector(const Complex& K, int r);

/// Same with the default rank r = dim(K)+1.
HVector h_vector(const Complex& K);

/// r-skeleton of the (m-1)-simplex; r = -1 gives {∅}.
Complex skeleton_simplex(int m, int r);

/// Non-reduced Euler characteristic Σ (-1)^i f_i.
long long euler_characteristic(const Complex& K);

/// Canonical textual serialization (used for determinism checks and JSON).
std::string serialize_faces(const Complex& K);

} // namespace bier

#endif
