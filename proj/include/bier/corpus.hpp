#ifndef BIER_CORPUS_HPP
#define BIER_CORPUS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "bier/complex.hpp"

namespace bier {

/// Every proper simplicial complex on [m] (ghosts allowed, ∅ always a face),
/// in increasing face-family order.  Supported for m ≤ 4.
std::vector<Complex> all_complexes(int m);

/// Deterministic stream of proper random complexes on [m]; the seed fully
/// determines the sequence.
class RandomComplexSource {
public:
    RandomComplexSource(int m, std::uint64_t seed) : m_(m), rng_(seed) {}

    Complex next();

private:
    int m_;
    std::mt19937_64 rng_;
};

} // namespace bier

#endif
