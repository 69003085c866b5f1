#include <f2lin/mmpf.hpp>

#include <bit>
#include <cstring>
#include <stdexcept>

#include <f2lin/mul.hpp>

namespace f2lin {

std::pair<unsigned, std::size_t> pls_submatrix(MatrixWindow a, std::size_t s_r, std::size_t s_c,
                                               unsigned k, std::span<std::size_t> p,
                                               std::span<std::size_t> q) {
    std::size_t m = a.nrows();
    std::vector<std::size_t> done(k, 0);
    unsigned found_pivots = 0;
    for (unsigned r = 0; r < k; ++r) {
        bool found = false;
        std::size_t pivot_row = 0;
        for (std::size_t i = s_r + r; i < m; ++i) {
            // catch row i up on the pivot columns found so far
            for (unsigned l = 0; l < r; ++l) {
                if (done[l] < i) {
                    if (a.get(i, s_c + l)) a.row_add(i, s_r + l, s_c + l + 1);
                    done[l] = i;
                }
            }
            if (a.get(i, s_c + r)) {
                found = true;
                pivot_row = i;
                break;
            }
        }
        if (!found) break;
        p[s_r + r] = pivot_row;
        q[s_r + r] = s_c + r;
        a.row_swap(s_r + r, pivot_row);
        done[r] = pivot_row;
        ++found_pivots;
    }
    if (found_pivots == 0) return {0, s_r};
    std::size_t d_r = 0;
    for (unsigned l = 0; l < found_pivots; ++l) d_r = std::max(d_r, done[l]);
    // finish the submatrix: rows at or below d_r that the search skipped
    // still need clearing against the later pivot columns
    for (unsigned c2 = 0; c2 < found_pivots && s_c + c2 < a.ncols(); ++c2) {
        for (std::size_t r2 = done[c2] + 1; r2 <= d_r; ++r2) {
            if (a.get(r2, s_c + c2)) a.row_add(r2, s_r + c2, s_c + c2 + 1);
        }
    }
    return {found_pivots, d_r};
}

GrayTable make_table1(const BitMatrix& u, std::size_t r_start, std::size_t c_start, unsigned k) {
    if (k < 1 || k > 16) throw std::invalid_argument("make_table1: k out of range");
    std::size_t n = u.ncols();
    GrayTable tbl{BitMatrix(std::size_t{1} << k, n), std::vector<std::uint32_t>(std::size_t{1} << k, 0)};
    for (std::size_t i = 1; i < (std::size_t{1} << k); ++i) {
        unsigned t = static_cast<unsigned>(std::countr_zero(i));
        detail::row_xor3(tbl.T.row(i), tbl.T.row(i - 1), u.row(r_start + (k - 1 - t)), c_start,
                         n);
    }
    // index by the prefixes as they are now, before the correction below
    for (std::size_t i = 1; i < (std::size_t{1} << k); ++i)
        tbl.L[tbl.T.read_bits(i, c_start, k)] = static_cast<std::uint32_t>(i);
    // add the a-priori id (the Gray combination indicator) onto the k leading
    // columns: a table addition then replaces a row's prefix with exactly the
    // combination that eliminated it, which is its row of L
    for (std::size_t i = 1; i < (std::size_t{1} << k); ++i) {
        std::uint64_t g = i ^ (i >> 1);
        for (unsigned j = 0; j < k; ++j)
            if ((g >> (k - 1 - j)) & 1u)
                detail::set_bit(tbl.T.row(i), c_start + j,
                                !detail::get_bit(tbl.T.row(i), c_start + j));
    }
    return tbl;
}

namespace {

std::size_t mmpf_pls_impl(MatrixWindow a, std::span<std::size_t> p, std::span<std::size_t> q,
                          unsigned k,
                          const std::function<void(std::size_t, std::size_t)>* after_block) {
    std::size_t m = a.nrows(), n = a.ncols();
    if (p.size() != m || q.size() != n)
        throw std::invalid_argument("mmpf_pls: permutation size mismatch");
    detail::identity_fill(p);
    detail::identity_fill(q);
    if (m == 0 || n == 0) return 0;
    if (k > 8) throw std::invalid_argument("mmpf_pls: k must be in 0..8");
    unsigned k0 = k ? k : detail::auto_table_bits(std::min(m, n));
    std::size_t r = 0, c = 0;
    while (r < m && c < n) {
        unsigned kc = static_cast<unsigned>(std::min<std::size_t>(k0, n - c));
        auto [kbar, d_r] = pls_submatrix(a, r, c, kc, p, q);
        if (kbar > 0) {
            // pivot rows with everything left of the triangular block masked
            // out; the block columns of A hold L and must not enter the table
            BitMatrix u(kbar, n);
            for (unsigned t = 0; t < kbar; ++t)
                detail::xor_bits(u.row(t), c + t, a.row_words(r + t), a.col_bit(c + t),
                                 n - (c + t));
            GrayTable tbl = make_table1(u, 0, c, kbar);
            add_rows_from_table(a, d_r + 1, m, c, kbar, tbl);
            r += kbar;
            c += kbar;
        } else {
            ++c; // skip zero column
        }
        if (after_block) (*after_block)(r, c);
    }
    detail::compress_columns_span(a, r, q);
    return r;
}

} // namespace

std::size_t mmpf_pls(MatrixWindow a, std::span<std::size_t> p, std::span<std::size_t> q,
                     unsigned k) {
    return mmpf_pls_impl(a, p, q, k, nullptr);
}

std::size_t mmpf_pls(BitMatrix& a, Permutation& p, Permutation& q, unsigned k) {
    p = Permutation::identity(a.nrows());
    q = Permutation::identity(a.ncols());
    return mmpf_pls_impl(a.view(), p.slots(), q.slots(), k, nullptr);
}

PlsResult mmpf_pls(BitMatrix& a, unsigned k) {
    PlsResult f;
    f.rank = mmpf_pls(a, f.P, f.Q, k);
    return f;
}

namespace detail {

std::size_t mmpf_pls_hooked(MatrixWindow a, std::span<std::size_t> p, std::span<std::size_t> q,
                            unsigned k,
                            const std::function<void(std::size_t, std::size_t)>& after_block) {
    return mmpf_pls_impl(a, p, q, k, &after_block);
}

} // namespace detail

} // namespace f2lin
