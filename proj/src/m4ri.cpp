#include <f2lin/m4ri.hpp>

#include <bit>
#include <cstring>
#include <stdexcept>

#include <f2lin/mul.hpp>

namespace f2lin {

GrayTable make_table(const BitMatrix& a, std::size_t r_start, std::size_t c_start, unsigned k) {
    if (k < 1 || k > 16) throw std::invalid_argument("make_table: k out of range");
    std::size_t n = a.ncols();
    GrayTable tbl{BitMatrix(std::size_t{1} << k, n), std::vector<std::uint32_t>(std::size_t{1} << k, 0)};
    // row i differs from row i-1 by the source row the Gray code flips; bit
    // t of the id has weight 2^(k-1-t), so flipping id bit ctz(i) means
    // source row k-1-ctz(i)
    for (std::size_t i = 1; i < (std::size_t{1} << k); ++i) {
        unsigned t = static_cast<unsigned>(std::countr_zero(i));
        detail::row_xor3(tbl.T.row(i), tbl.T.row(i - 1), a.row(r_start + (k - 1 - t)), c_start,
                         n);
    }
    for (std::size_t i = 1; i < (std::size_t{1} << k); ++i)
        tbl.L[tbl.T.read_bits(i, c_start, k)] = static_cast<std::uint32_t>(i);
    return tbl;
}

void add_rows_from_table(MatrixWindow a, std::size_t r_start, std::size_t r_end,
                         std::size_t c_start, unsigned k, const GrayTable& tbl) {
    std::size_t n = a.ncols();
    for (std::size_t i = r_start; i < r_end; ++i) {
        std::uint64_t id = a.read_bits(i, c_start, k);
        if (id == 0) continue; // matching table row is the zero row
        std::size_t j = tbl.L[id];
        stats::count_row_add();
        detail::xor_bits(a.row_words(i), a.col_bit(c_start), tbl.T.row(j), c_start, n - c_start);
    }
}

void add_rows_from_table(BitMatrix& a, std::size_t r_start, std::size_t r_end, std::size_t c_start,
                         unsigned k, const GrayTable& tbl) {
    add_rows_from_table(a.view(), r_start, r_end, c_start, k, tbl);
}

unsigned gauss_submatrix(BitMatrix& a, std::size_t r, std::size_t c, unsigned k,
                         std::size_t r_end) {
    std::size_t r_s = r;
    for (std::size_t j = c; j < c + k; ++j) {
        bool found = false;
        for (std::size_t i = r_s; i < r_end; ++i) {
            // clear the columns already handled in this block for row i
            for (std::size_t l = 0; l < j - c; ++l)
                if (a.get(i, c + l)) a.row_add(i, r + l, c + l);
            if (a.get(i, j)) {
                a.row_swap(i, r_s);
                for (std::size_t l = r; l < r_s; ++l)
                    if (a.get(l, j)) a.row_add(l, r_s, j);
                ++r_s;
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    return static_cast<unsigned>(r_s - r);
}

std::size_t m4ri_rref(BitMatrix& a, unsigned k, bool full) {
    std::size_t m = a.nrows(), n = a.ncols();
    if (m == 0 || n == 0) return 0;
    if (k > 8) throw std::invalid_argument("m4ri_rref: k must be in 0..8");
    unsigned k0 = k ? k : detail::auto_table_bits(std::min(m, n));
    std::size_t r = 0, c = 0;
    while (r < m && c < n) {
        unsigned kc = static_cast<unsigned>(std::min<std::size_t>(k0, n - c));
        unsigned kbar = gauss_submatrix(a, r, c, kc, m);
        if (kbar > 0) {
            GrayTable tbl = make_table(a, r, c, kbar);
            if (full && r > 0) add_rows_from_table(a, 0, r, c, kbar, tbl);
            add_rows_from_table(a, r + kbar, m, c, kbar, tbl);
            r += kbar;
            c += kbar;
        }
        if (kbar != kc) ++c; // no pivot in that column for any remaining row
    }
    return r;
}

} // namespace f2lin
