#include "bier/betti.hpp"

#include <algorithm>
#include <thread>

#include "bier/classify.hpp"

namespace bier {

namespace {

void require_proper(const Complex& K)
{
    if (K.ground_size() > 32)
        throw std::invalid_argument("subset enumeration over K supports ground sizes up to 32");
    if (K.face_count() == (std::uint64_t(1) << K.ground_size()))
        throw std::invalid_argument("K = 2^[m] is not admitted");
}

int resolve_workers(int requested)
{
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

/// Runs fn(W, betti of G|_W) over every W ⊆ ground, partitioned across
/// workers; each worker owns an accumulator merged in worker order.
template <typename Acc, typename Fn>
Acc sweep_subsets(const Complex& G, const EnumerationOptions& opts, Fn fn)
{
    const int n = G.ground_size();
    if (n > opts.cap)
        throw CapExceededError("ground size " + std::to_string(n) + " exceeds cap " + std::to_string(opts.cap) +
                               " (2^" + std::to_string(n) + " homology calls)");
    const std::uint64_t total = std::uint64_t(1) << n;
    const int workers = std::min<int>(resolve_workers(opts.workers), 8);

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Acc& acc) {
        std::vector<VertexSubset> restricted;
        for (std::uint64_t w = lo; w < hi; ++w) {
            const VertexSubset W(w);
            restricted.clear();
            for (VertexSubset f : G.faces())
                if (f.subset_of(W)) restricted.push_back(f);
            fn(W, detail::reduced_betti_of_family(restricted), acc);
        }
    };

    if (workers <= 1 || total < 64) {
        Acc acc{};
        run_range(0, total, acc);
        return acc;
    }
    std::vector<Acc> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
        const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
        const std::uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&, lo, hi, t] { run_range(lo, hi, parts[static_cast<std::size_t>(t)]); });
    }
    for (auto& th : threads) th.join();
    Acc acc{};
    for (Acc& p : parts)
        acc.merge(p);
    return acc;
}

struct TableAcc {
    BettiTable table;
    void merge(const TableAcc& o)
    {
        for (const auto& [key, v] : o.table.entries) table.add(key.first, key.second, v);
    }
};

struct RankAcc {
    std::vector<long long> ranks;
    void merge(const RankAcc& o)
    {
        if (ranks.size() < o.ranks.size()) ranks.resize(o.ranks.size(), 0);
        for (std::size_t i = 0; i < o.ranks.size(); ++i) ranks[i] += o.ranks[i];
    }
};

} // namespace

FClasses f_classes(const Complex& K)
{
    require_proper(K);
    const int m = K.ground_size();
    const VertexSubset ground = K.ground_mask();
    FClasses out;
    std::vector<VertexSubset> all;
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << m); ++s) all.push_back(VertexSubset(s));
    std::sort(all.begin(), all.end(), canonical_less);
    for (VertexSubset s : all) {
        const int k = 2 * s.size();
        const bool in_K = K.contains(s);
        const bool bar_in_dual = !K.contains(ground - s);
        if (in_K && bar_in_dual)
            out.plus[k].push_back(s);
        else if (!in_K && !bar_in_dual)
            out.minus[k].push_back(s);
    }
    return out;
}

BettiTable hochster_table(const Complex& G, const EnumerationOptions& opts)
{
    TableAcc acc = sweep_subsets<TableAcc>(G, opts, [](VertexSubset W, const ReducedBetti& rb, TableAcc& a) {
        const int j = W.size();
        const auto& v = rb.offset_vector();
        for (std::size_t idx = 0; idx < v.size(); ++idx) {
            const int d = static_cast<int>(idx) - 1;
            a.table.add(j - d - 1, j, v[idx]);
        }
    });
    return acc.table;
}

std::vector<long long> rz_cohomology_ranks(const Complex& G, const EnumerationOptions& opts)
{
    RankAcc acc = sweep_subsets<RankAcc>(G, opts, [](VertexSubset, const ReducedBetti& rb, RankAcc& a) {
        const auto& v = rb.offset_vector();
        for (std::size_t idx = 0; idx < v.size(); ++idx) {
            // degree d = idx-1 contributes to H^{d+1} = H^{idx}
            if (a.ranks.size() <= idx) a.ranks.resize(idx + 1, 0);
            a.ranks[idx] += v[idx];
        }
    });
    acc.ranks.resize(static_cast<std::size_t>(G.ground_size()) + 1, 0);
    return acc.ranks;
}

BettiTable bier_betti_closed(const Complex& K)
{
    require_proper(K);
    const int m = K.ground_size();
    const VertexSubset ground = K.ground_mask();
    BettiTable table;

    const FClasses fc = f_classes(K);
    for (const auto& [k, members] : fc.plus) table.add(k / 2, k, static_cast<long long>(members.size()));
    for (const auto& [k, members] : fc.minus) table.add(k / 2 + 1, k, static_cast<long long>(members.size()));

    // link sums over comparable pairs; the link extraction is shared with
    // the classifier (inclusion cases of the dispatch)
    for (std::uint64_t big_bits = 0; big_bits < (std::uint64_t(1) << m); ++big_bits) {
        const VertexSubset big(big_bits);
        for_each_subset_of(big, [&](VertexSubset small) {
            if (small == big) return;
            const int j = big.size() + small.size();
            if (K.contains(small)) {
                const ReducedBetti rb =
                    detail::reduced_betti_of_family(detail::link_in_restriction(K, big, small).faces());
                const auto& v = rb.offset_vector();
                for (std::size_t idx = 0; idx < v.size(); ++idx)
                    table.add(big.size() - (static_cast<int>(idx) - 1) - 1, j, v[idx]);
            }
            if (!K.contains(ground - small)) { // σ̄ ∈ K̂ for the small side
                const ReducedBetti rb =
                    detail::reduced_betti_of_family(detail::dual_link_in_restriction(K, small, big).faces());
                const auto& v = rb.offset_vector();
                for (std::size_t idx = 0; idx < v.size(); ++idx)
                    table.add(big.size() - (static_cast<int>(idx) - 1) - 1, j, v[idx]);
            }
        });
    }
    return table;
}

} // namespace bier
