#include <f2lin/pls.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

#include <f2lin/m4ri.hpp>
#include <f2lin/mmpf.hpp>
#include <f2lin/mul.hpp>

#if defined(__unix__) || defined(__APPLE__)
#include <unistd.h>
#endif

namespace f2lin {

const char* to_string(Algorithm alg) {
    switch (alg) {
    case Algorithm::gauss: return "gauss";
    case Algorithm::m4ri: return "m4ri";
    case Algorithm::mmpf: return "mmpf";
    case Algorithm::pls: return "pls";
    case Algorithm::hybrid: return "hybrid";
    }
    return "?";
}

Algorithm algorithm_from_string(std::string_view name) {
    if (name == "gauss") return Algorithm::gauss;
    if (name == "m4ri") return Algorithm::m4ri;
    if (name == "mmpf") return Algorithm::mmpf;
    if (name == "pls") return Algorithm::pls;
    if (name == "hybrid") return Algorithm::hybrid;
    throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::size_t default_cutoff_bytes() {
    constexpr std::size_t four_mib = std::size_t{4} << 20;
    std::size_t l2 = 0;
    if (const char* env = std::getenv("F2_L2_BYTES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) l2 = static_cast<std::size_t>(v);
    }
#if defined(_SC_LEVEL2_CACHE_SIZE)
    if (l2 == 0) {
        long v = sysconf(_SC_LEVEL2_CACHE_SIZE);
        if (v > 0) l2 = static_cast<std::size_t>(v);
    }
#endif
    if (l2 == 0) return four_mib;
    return std::min(l2, four_mib);
}

namespace {

void validate(const EliminationConfig& cfg) {
    if (cfg.effective_cutoff() == 0) throw std::invalid_argument("cutoff_bytes must be positive");
    if (!(cfg.hybrid_threshold >= 0.0 && cfg.hybrid_threshold <= 1.0))
        throw std::invalid_argument("hybrid_threshold must be in [0, 1]");
}

std::size_t pls_recursive_impl(MatrixWindow a, std::span<std::size_t> p, std::span<std::size_t> q,
                               const EliminationConfig& cfg, std::size_t cutoff) {
    std::size_t m = a.nrows(), n = a.ncols();
    if (m == 0 || n == 0) {
        detail::identity_fill(p);
        detail::identity_fill(q);
        return 0;
    }
    if (n <= 64 || a.size_bytes() <= cutoff) return mmpf_pls(a, p, q, cfg.k);

    // cut the columns near the middle, on a word boundary
    std::size_t n0 = ((n / 2 + 63) / 64) * 64;
    if (n0 >= n) n0 = n / 2;
    if (auto* log = stats::counters().cut_log) log->emplace_back(n, n0);

    std::size_t r0 =
        pls_recursive_impl(a.window(0, 0, m, n0), p, q.subspan(0, n0), cfg, cutoff);

    MatrixWindow a1 = a.window(0, n0, m, n);
    if (r0 > 0) {
        detail::apply_transpositions(p, a1);
        trsm_lower_left_unit(a.window(0, 0, r0, r0), a.window(0, n0, r0, n));
        addmul(a.window(r0, n0, m, n), a.window(r0, 0, m, r0), a.window(0, n0, r0, n), cfg.k);
    }

    std::size_t r1 = pls_recursive_impl(a.window(r0, n0, m, n), p.subspan(r0),
                                        q.subspan(n0), cfg, cutoff);

    if (r0 > 0)
        detail::apply_transpositions(p.subspan(r0), a.window(r0, 0, m, r0));

    // make the sub-results' bookkeeping absolute and compact the second
    // block's pivots behind the first block's
    for (std::size_t i = r0; i < m; ++i) p[i] += r0;
    for (std::size_t i = n0; i < n; ++i) q[i] += n0;
    for (std::size_t t = 0; t < r1; ++t) q[r0 + t] = q[n0 + t];
    for (std::size_t t = 0; t < r1; ++t)
        if (r0 + t != n0 + t) a.col_swap(r0 + t, n0 + t, r0 + t);

    return r0 + r1;
}

} // namespace

std::size_t pls_recursive(MatrixWindow a, std::span<std::size_t> p, std::span<std::size_t> q,
                          const EliminationConfig& cfg) {
    validate(cfg);
    if (p.size() != a.nrows() || q.size() != a.ncols())
        throw std::invalid_argument("pls_recursive: permutation size mismatch");
    return pls_recursive_impl(a, p, q, cfg, cfg.effective_cutoff());
}

std::size_t pls_recursive(BitMatrix& a, Permutation& p, Permutation& q,
                          const EliminationConfig& cfg) {
    p = Permutation::identity(a.nrows());
    q = Permutation::identity(a.ncols());
    return pls_recursive(a.view(), p.slots(), q.slots(), cfg);
}

PlsResult pls_recursive(BitMatrix& a, const EliminationConfig& cfg) {
    PlsResult f;
    f.rank = pls_recursive(a, f.P, f.Q, cfg);
    return f;
}

void rref_from_pls(MatrixWindow a, std::size_t rank, std::span<const std::size_t> q) {
    std::size_t m = a.nrows(), n = a.ncols();
    if (rank > m || rank > n || q.size() < rank)
        throw std::invalid_argument("rref_from_pls: rank out of range");
    for (std::size_t t = 0; t < rank; ++t) {
        if (q[t] >= n || q[t] < t || (t > 0 && q[t] <= q[t - 1]))
            throw std::invalid_argument("rref_from_pls: Q is not a pivot-column prefix");
    }
    // drop the L storage, then rows >= rank entirely
    for (std::size_t i = 1; i < m; ++i) a.zero_row_range(i, 0, std::min(i, rank));
    for (std::size_t i = rank; i < m; ++i) a.zero_row_range(i, 0, n);
    // The decomposition swapped columns j and q[j] from row j down. Completing
    // each swap over the rows above it turns the swap composition into one
    // column permutation for the whole top block, which gathers the pivot
    // columns into a contiguous unit upper triangular block at 0..rank.
    std::uint64_t* base = rank ? a.row_words(0) : nullptr;
    std::size_t stride = a.parent().stride();
    for (std::size_t j = 0; j < rank; ++j)
        if (q[j] != j) detail::col_swap_range(base, stride, 0, j, a.col_bit(j), a.col_bit(q[j]));
    // one blocked solve clears everything above the pivots
    if (rank > 0 && rank < n)
        trsm_upper_left_unit(a.window(0, 0, rank, rank), a.window(0, rank, rank, n));
    // the pivot block becomes the identity
    for (std::size_t u = 0; u < rank; ++u) a.zero_row_range(u, u + 1, rank);
    // undo the column permutation on the reduced rows
    for (std::size_t j = rank; j-- > 0;)
        if (q[j] != j) detail::col_swap_range(base, stride, 0, rank, a.col_bit(j), a.col_bit(q[j]));
}

void rref_from_pls(BitMatrix& a, std::size_t rank, const Permutation& p, const Permutation& q) {
    if (p.size() != a.nrows())
        throw std::invalid_argument("rref_from_pls: P has the wrong length");
    rref_from_pls(a.view(), rank, q.slots().subspan(0, std::min(q.size(), rank)));
}

std::size_t hybrid_rref(BitMatrix& a, const EliminationConfig& cfg) {
    validate(cfg);
    std::size_t m = a.nrows(), n = a.ncols();
    if (m == 0 || n == 0) return 0;
    unsigned k0 = cfg.k ? cfg.k : detail::auto_table_bits(std::min(m, n));
    bool switched = false;
    std::size_t r = 0, c = 0;
    while (r < m && c < n) {
        if (!switched) {
            MatrixWindow tail = a.window(r, c, m, n);
            if (tail.density(64) >= cfg.hybrid_threshold) {
                switched = true;
                stats::counters().hybrid_switched = true;
                stats::counters().hybrid_switch_row = r;
                stats::counters().hybrid_switch_col = c;
                std::vector<std::size_t> pw(tail.nrows()), qw(tail.ncols());
                std::size_t rw = pls_recursive(tail, pw, qw, cfg);
                rref_from_pls(tail, rw, std::span<const std::size_t>(qw).subspan(0, rw));
                // fall through: the table loop below flies over the now
                // echelonized rows and clears above their pivots
                continue;
            }
        }
        unsigned kc = static_cast<unsigned>(std::min<std::size_t>(k0, n - c));
        unsigned kbar = gauss_submatrix(a, r, c, kc, m);
        if (kbar > 0) {
            GrayTable tbl = make_table(a, r, c, kbar);
            if (r > 0) add_rows_from_table(a, 0, r, c, kbar, tbl);
            add_rows_from_table(a, r + kbar, m, c, kbar, tbl);
            r += kbar;
            c += kbar;
        }
        if (kbar != kc) ++c;
    }
    return r;
}

std::size_t rank(const BitMatrix& a, const EliminationConfig& cfg) {
    BitMatrix work = a;
    switch (cfg.algorithm) {
    case Algorithm::gauss: return gauss_rref(work);
    case Algorithm::m4ri: return m4ri_rref(work, cfg.k);
    case Algorithm::mmpf: {
        Permutation p, q;
        return mmpf_pls(work, p, q, cfg.k);
    }
    case Algorithm::pls: {
        Permutation p, q;
        return pls_recursive(work, p, q, cfg);
    }
    case Algorithm::hybrid: return hybrid_rref(work, cfg);
    }
    return 0;
}

} // namespace f2lin
