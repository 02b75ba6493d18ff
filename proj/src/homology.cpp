#include "bier/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace bier {

using boost::multiprecision::cpp_int;

std::string ReducedBetti::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < b_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(b_[i]);
    }
    out += ")@-1";
    return out;
}

BoundaryMatrix boundary_matrix(const Complex& K, int degree)
{
    if (degree < 0 || degree > K.dim()) throw std::invalid_argument("boundary degree out of range");
    BoundaryMatrix M;
    M.degree = degree;
    auto [rb, re] = K.card_range(degree);
    auto [cb, ce] = K.card_range(degree + 1);
    std::unordered_map<std::uint64_t, int> row_index;
    for (std::size_t i = rb; i < re; ++i) {
        M.rows.push_back(K.faces()[i]);
        row_index[K.faces()[i].bits()] = static_cast<int>(i - rb);
    }
    for (std::size_t i = cb; i < ce; ++i) M.cols.push_back(K.faces()[i]);
    M.entries.assign(M.rows.size(), std::vector<int>(M.cols.size(), 0));
    for (std::size_t c = 0; c < M.cols.size(); ++c) {
        int sign = 1;
        for (int v : M.cols[c].members()) {
            M.entries[static_cast<std::size_t>(row_index.at(M.cols[c].without(v).bits()))][c] = sign;
            sign = -sign;
        }
    }
    return M;
}

namespace detail {

std::vector<VertexSubset> collapse_core(const std::vector<VertexSubset>& faces)
{
    std::unordered_set<std::uint64_t> alive;
    alive.reserve(faces.size() * 2);
    for (VertexSubset f : faces) alive.insert(f.bits());

    // cnt[f] = number of alive cofaces of f one dimension up
    std::unordered_map<std::uint64_t, int> cnt;
    cnt.reserve(faces.size() * 2);
    std::uint64_t used = 0;
    for (VertexSubset g : faces) {
        used |= g.bits();
        for (std::uint64_t b = g.bits(); b; b &= b - 1) ++cnt[g.bits() ^ (b & (~b + 1))];
    }

    std::vector<std::uint64_t> stack;
    for (VertexSubset f : faces) {
        if (f.bits() == 0) continue;
        auto it = cnt.find(f.bits());
        if (it != cnt.end() && it->second == 1) stack.push_back(f.bits());
    }

    auto drop = [&](std::uint64_t x) {
        for (std::uint64_t b = x; b; b &= b - 1) {
            std::uint64_t y = x ^ (b & (~b + 1));
            if (!alive.count(y)) continue;
            if (--cnt[y] == 1 && y != 0) stack.push_back(y);
        }
    };

    while (!stack.empty()) {
        std::uint64_t f = stack.back();
        stack.pop_back();
        if (!alive.count(f)) continue;
        auto it = cnt.find(f);
        if (it == cnt.end() || it->second != 1) continue;
        std::uint64_t g = 0;
        for (std::uint64_t rest = used & ~f; rest; rest &= rest - 1) {
            std::uint64_t cand = f | (rest & (~rest + 1));
            if (alive.count(cand)) {
                g = cand;
                break;
            }
        }
        if (g == 0) continue;
        alive.erase(f);
        alive.erase(g);
        drop(g);
        drop(f);
    }

    std::vector<VertexSubset> out;
    out.reserve(alive.size());
    for (VertexSubset f : faces)
        if (alive.count(f.bits())) out.push_back(f);
    return out;
}

namespace {

// Fraction-free Bareiss rank over arbitrary-precision integers.
int bareiss_rank(std::vector<std::vector<cpp_int>> M)
{
    const std::size_t R = M.size();
    const std::size_t C = R ? M[0].size() : 0;
    int rank = 0;
    cpp_int prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t pr = row;
        std::size_t pc = col;
        bool found = false;
        for (std::size_t c = col; c < C && !found; ++c)
            for (std::size_t r = row; r < R; ++r)
                if (M[r][c] != 0) {
                    pr = r;
                    pc = c;
                    found = true;
                    break;
                }
        if (!found) break;
        if (pr != row) std::swap(M[pr], M[row]);
        if (pc != col)
            for (std::size_t r = 0; r < R; ++r) std::swap(M[r][pc], M[r][col]);
        const cpp_int pivot = M[row][col];
        for (std::size_t r = row + 1; r < R; ++r) {
            for (std::size_t c = col + 1; c < C; ++c)
                M[r][c] = (pivot * M[r][c] - M[r][col] * M[row][c]) / prev;
            M[r][col] = 0;
        }
        prev = pivot;
        ++rank;
        ++row;
    }
    return rank;
}

constexpr long long kSafe = (1LL << 62);

} // namespace

int exact_rank(std::vector<std::vector<long long>> M)
{
    const std::size_t R = M.size();
    const std::size_t C = R ? M[0].size() : 0;
    if (R == 0 || C == 0) return 0;

    std::vector<char> row_live(R, 1), col_live(C, 1);
    std::vector<int> row_nnz(R, 0), col_nnz(C, 0), row_units(R, 0);
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t c = 0; c < C; ++c)
            if (M[r][c] != 0) {
                ++row_nnz[r];
                ++col_nnz[c];
                if (M[r][c] == 1 || M[r][c] == -1) ++row_units[r];
            }

    int rank = 0;
    while (true) {
        // pick the sparsest live row still holding a +-1 entry
        std::size_t pr = R;
        for (std::size_t r = 0; r < R; ++r)
            if (row_live[r] && row_units[r] > 0 && (pr == R || row_nnz[r] < row_nnz[pr])) pr = r;
        if (pr == R) break;
        std::size_t pc = C;
        for (std::size_t c = 0; c < C; ++c)
            if (col_live[c] && (M[pr][c] == 1 || M[pr][c] == -1) && (pc == C || col_nnz[c] < col_nnz[pc])) pc = c;

        const long long pv = M[pr][pc];
        bool overflow = false;
        for (std::size_t r = 0; r < R && !overflow; ++r) {
            if (!row_live[r] || r == pr || M[r][pc] == 0) continue;
            const long long q = M[r][pc] * pv; // pv = +-1
            // bail out before committing if any update could overflow
            for (std::size_t c = 0; c < C; ++c) {
                if (!col_live[c] || M[pr][c] == 0) continue;
                __int128 nv = static_cast<__int128>(M[r][c]) - static_cast<__int128>(q) * M[pr][c];
                if (nv >= kSafe || nv <= -kSafe) {
                    overflow = true;
                    break;
                }
            }
            if (overflow) break;
            for (std::size_t c = 0; c < C; ++c) {
                if (!col_live[c] || M[pr][c] == 0) continue;
                const long long old = M[r][c];
                const long long nv = old - q * M[pr][c];
                if (old == 0 && nv != 0) {
                    ++row_nnz[r];
                    ++col_nnz[c];
                } else if (old != 0 && nv == 0) {
                    --row_nnz[r];
                    --col_nnz[c];
                }
                const bool was_unit = (old == 1 || old == -1);
                const bool is_unit = (nv == 1 || nv == -1);
                if (was_unit != is_unit) row_units[r] += is_unit ? 1 : -1;
                M[r][c] = nv;
            }
        }
        if (overflow) break;

        // retire pivot row and column
        row_live[pr] = 0;
        for (std::size_t c = 0; c < C; ++c)
            if (col_live[c] && M[pr][c] != 0) --col_nnz[c];
        col_live[pc] = 0;
        for (std::size_t r = 0; r < R; ++r)
            if (row_live[r] && M[r][pc] != 0) {
                --row_nnz[r];
                if (M[r][pc] == 1 || M[r][pc] == -1) --row_units[r];
                M[r][pc] = 0;
            }
        ++rank;
    }

    // leftover block (no unit pivot or overflow risk): exact Bareiss
    std::vector<std::size_t> rs, cs;
    for (std::size_t r = 0; r < R; ++r)
        if (row_live[r] && row_nnz[r] > 0) rs.push_back(r);
    for (std::size_t c = 0; c < C; ++c)
        if (col_live[c]) cs.push_back(c);
    if (!rs.empty() && !cs.empty()) {
        std::vector<std::vector<cpp_int>> B(rs.size(), std::vector<cpp_int>(cs.size()));
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) B[i][j] = M[rs[i]][cs[j]];
        rank += bareiss_rank(std::move(B));
    }
    return rank;
}

namespace {

struct ChainLevels {
    // faces grouped by cardinality, each level canonically sorted
    std::vector<std::vector<VertexSubset>> levels;
};

ChainLevels group_by_cardinality(const std::vector<VertexSubset>& faces)
{
    ChainLevels out;
    int top = 0;
    for (VertexSubset f : faces) top = std::max(top, f.size());
    out.levels.assign(static_cast<std::size_t>(top + 1), {});
    for (VertexSubset f : faces) out.levels[static_cast<std::size_t>(f.size())].push_back(f);
    for (auto& lv : out.levels) std::sort(lv.begin(), lv.end(), canonical_less);
    return out;
}

std::vector<std::vector<long long>> boundary_of_level(const std::vector<VertexSubset>& rows,
                                                      const std::vector<VertexSubset>& cols)
{
    std::unordered_map<std::uint64_t, std::size_t> row_index;
    row_index.reserve(rows.size() * 2);
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i].bits()] = i;
    std::vector<std::vector<long long>> M(rows.size(), std::vector<long long>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        long long sign = 1;
        for (std::uint64_t b = cols[c].bits(); b; b &= b - 1) {
            M[row_index.at(cols[c].bits() ^ (b & (~b + 1)))][c] = sign;
            sign = -sign;
        }
    }
    return M;
}

} // namespace

ReducedBetti reduced_betti_of_family(const std::vector<VertexSubset>& faces)
{
    ChainLevels ch = group_by_cardinality(collapse_core(faces));
    const std::size_t top = ch.levels.size() - 1;
    std::vector<int> rank(top + 2, 0); // rank[c] = rank of boundary from card c to card c-1
    for (std::size_t c = 1; c <= top; ++c)
        rank[c] = exact_rank(boundary_of_level(ch.levels[c - 1], ch.levels[c]));
    std::vector<long long> b(top + 1, 0);
    for (std::size_t c = 0; c <= top; ++c)
        b[c] = static_cast<long long>(ch.levels[c].size()) - rank[c] - rank[c + 1];
    return ReducedBetti::from_offset_vector(std::move(b));
}

} // namespace detail

ReducedBetti reduced_betti_q(const Complex& K) { return detail::reduced_betti_of_family(K.faces()); }

namespace {

struct OverflowSignal {};

template <typename Int>
struct SnfOps;

template <>
struct SnfOps<long long> {
    static long long mul(long long a, long long b)
    {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
        return r;
    }
    static long long sub(long long a, long long b)
    {
        long long r;
        if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
        return r;
    }
    static long long add(long long a, long long b)
    {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw OverflowSignal{};
        return r;
    }
};

template <>
struct SnfOps<cpp_int> {
    static cpp_int mul(const cpp_int& a, const cpp_int& b) { return a * b; }
    static cpp_int sub(const cpp_int& a, const cpp_int& b) { return a - b; }
    static cpp_int add(const cpp_int& a, const cpp_int& b) { return a + b; }
};

/// Diagonal of the Smith normal form (non-negative, each dividing the next).
template <typename Int>
std::vector<Int> snf_diagonal(std::vector<std::vector<Int>> M)
{
    const std::size_t R = M.size();
    const std::size_t C = R ? M[0].size() : 0;
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < R && t < C) {
        // locate the minimal nonzero |entry| in the trailing submatrix
        std::size_t pr = t, pc = t;
        bool found = false;
        for (std::size_t r = t; r < R; ++r)
            for (std::size_t c = t; c < C; ++c) {
                if (M[r][c] == 0) continue;
                Int a = M[r][c] < 0 ? Int(-M[r][c]) : M[r][c];
                Int b = M[pr][pc] < 0 ? Int(-M[pr][pc]) : M[pr][pc];
                if (!found || a < b) {
                    pr = r;
                    pc = c;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(M[pr], M[t]);
        for (std::size_t r = 0; r < R; ++r) std::swap(M[r][pc], M[r][t]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = t + 1; r < R; ++r) {
                if (M[r][t] == 0) continue;
                Int q = M[r][t] / M[t][t];
                if (q != 0)
                    for (std::size_t c = t; c < C; ++c) M[r][c] = SnfOps<Int>::sub(M[r][c], SnfOps<Int>::mul(q, M[t][c]));
                if (M[r][t] != 0) { // remainder smaller than pivot: swap up and restart
                    std::swap(M[r], M[t]);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (std::size_t c = t + 1; c < C; ++c) {
                if (M[t][c] == 0) continue;
                Int q = M[t][c] / M[t][t];
                if (q != 0)
                    for (std::size_t r = t; r < R; ++r) M[r][c] = SnfOps<Int>::sub(M[r][c], SnfOps<Int>::mul(q, M[r][t]));
                if (M[t][c] != 0) {
                    for (std::size_t r = t; r < R; ++r) std::swap(M[r][c], M[r][t]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // enforce divisibility of the rest by the pivot
            for (std::size_t r = t + 1; r < R && clean; ++r)
                for (std::size_t c = t + 1; c < C && clean; ++c)
                    if (M[r][c] % M[t][t] != 0) {
                        for (std::size_t cc = t; cc < C; ++cc) M[t][cc] = SnfOps<Int>::add(M[t][cc], M[r][cc]);
                        clean = false;
                    }
        }
        diag.push_back(M[t][t] < 0 ? Int(-M[t][t]) : M[t][t]);
        ++t;
    }
    return diag;
}

std::vector<long long> snf_diagonal_exact(const std::vector<std::vector<long long>>& M)
{
    try {
        std::vector<long long> d = snf_diagonal<long long>(M);
        return d;
    } catch (const OverflowSignal&) {
        std::vector<std::vector<cpp_int>> B(M.size());
        for (std::size_t r = 0; r < M.size(); ++r) B[r].assign(M[r].begin(), M[r].end());
        std::vector<cpp_int> d = snf_diagonal<cpp_int>(std::move(B));
        std::vector<long long> out;
        out.reserve(d.size());
        for (const cpp_int& v : d) out.push_back(v.convert_to<long long>());
        return out;
    }
}

} // namespace

HomologyResult integral_homology(const Complex& K)
{
    detail::ChainLevels ch;
    {
        auto core = detail::collapse_core(K.faces());
        ch = detail::group_by_cardinality(core);
    }
    const std::size_t top = ch.levels.size() - 1;
    std::vector<std::vector<long long>> diag(top + 2); // diag[c] = SNF diagonal of the card-c boundary
    for (std::size_t c = 1; c <= top; ++c)
        diag[c] = snf_diagonal_exact(detail::boundary_of_level(ch.levels[c - 1], ch.levels[c]));

    HomologyResult out;
    std::vector<long long> b(top + 1, 0);
    for (std::size_t c = 0; c <= top; ++c) {
        long long rk_in = static_cast<long long>(diag[c].size());
        long long rk_out = (c + 1 < diag.size()) ? static_cast<long long>(diag[c + 1].size()) : 0;
        b[c] = static_cast<long long>(ch.levels[c].size()) - rk_in - rk_out;
    }
    out.reduced_betti = ReducedBetti::from_offset_vector(std::move(b));
    for (std::size_t c = 1; c <= top; ++c) {
        const int degree = static_cast<int>(c) - 2; // torsion of H̃_{c-2} comes from the card-c boundary
        for (long long e : diag[c]) {
            long long v = std::llabs(e);
            for (long long p = 2; p * p <= v; ++p) {
                long long pk = 1;
                while (v % p == 0) {
                    v /= p;
                    pk *= p;
                }
                if (pk > 1) out.torsion.push_back({degree, pk});
            }
            if (v > 1) out.torsion.push_back({degree, v});
        }
    }
    std::sort(out.torsion.begin(), out.torsion.end(),
              [](const TorsionEntry& a, const TorsionEntry& b) {
                  return a.degree != b.degree ? a.degree < b.degree : a.order < b.order;
              });
    return out;
}

} // namespace bier
