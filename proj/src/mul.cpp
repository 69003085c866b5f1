#include <f2lin/mul.hpp>

#include <bit>
#include <stdexcept>

namespace f2lin {
namespace detail {

unsigned auto_table_bits(std::size_t dim) {
    if (dim < 2) return 1;
    unsigned lg = static_cast<unsigned>(std::bit_width(dim) - 1);
    if (lg <= 3) return 1;
    return lg - 2 > 8 ? 8 : lg - 2;
}

namespace {

// C ^= A*B where the combination table for each k-bit stripe of A's columns
// is built in Gray-code order (one row XOR per table entry) and indexed
// through slot_of.
void addmul_impl(MatrixWindow c, MatrixWindow a, MatrixWindow b, unsigned k) {
    std::size_t p = a.nrows(), s = a.ncols(), q = b.ncols();
    if (p == 0 || s == 0 || q == 0) return;

    if (s < 4) {
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t l = 0; l < s; ++l)
                if (a.get(i, l)) {
                    stats::count_row_add();
                    xor_bits(c.row_words(i), c.col_bit(0), b.row_words(l), b.col_bit(0), q);
                }
        return;
    }

    if (k == 0) k = auto_table_bits(s);
    if (k > 8) k = 8;

    BitMatrix t(std::size_t{1} << k, q);
    std::vector<std::uint32_t> slot_of(std::size_t{1} << k);
    const bool b_aligned = b.col_bit(0) % 64 == 0;
    for (std::size_t c0 = 0; c0 < s; c0 += k) {
        unsigned kc = static_cast<unsigned>(std::min<std::size_t>(k, s - c0));
        std::size_t nrows_t = std::size_t{1} << kc;
        // table rows in Gray order; indicator bit j of the id selects B row c0+j
        std::memset(t.row(0), 0, t.stride() * sizeof(std::uint64_t));
        slot_of[0] = 0;
        std::uint64_t g_prev = 0;
        for (std::size_t idx = 1; idx < nrows_t; ++idx) {
            unsigned j = static_cast<unsigned>(std::countr_zero(idx));
            if (b_aligned) {
                detail::row_xor3(t.row(idx), t.row(idx - 1),
                                 b.row_words(c0 + j) + b.col_bit(0) / 64, 0, q);
            } else {
                std::memcpy(t.row(idx), t.row(idx - 1), t.stride() * sizeof(std::uint64_t));
                stats::count_row_add();
                xor_bits(t.row(idx), 0, b.row_words(c0 + j), b.col_bit(0), q);
            }
            g_prev ^= std::uint64_t{1} << j;
            slot_of[g_prev] = static_cast<std::uint32_t>(idx);
        }
        for (std::size_t i = 0; i < p; ++i) {
            std::uint64_t v = a.bits_lsb(i, c0, kc);
            if (!v) continue;
            stats::count_row_add();
            xor_bits(c.row_words(i), c.col_bit(0), t.row(slot_of[v]), 0, q);
        }
    }
}

} // namespace
} // namespace detail

BitMatrix mul_naive(const BitMatrix& a, const BitMatrix& b) {
    if (a.ncols() != b.nrows()) throw std::invalid_argument("mul_naive: dimension mismatch");
    BitMatrix c(a.nrows(), b.ncols());
    for (std::size_t i = 0; i < a.nrows(); ++i) {
        const std::uint64_t* ar = a.row(i);
        for (std::size_t w = 0; w < a.stride(); ++w) {
            std::uint64_t bits = ar[w];
            while (bits) {
                unsigned j = static_cast<unsigned>(std::countr_zero(bits));
                bits &= bits - 1;
                detail::add_row_from(c, i, b, w * 64 + j, 0);
            }
        }
    }
    return c;
}

BitMatrix mul_m4rm(const BitMatrix& a, const BitMatrix& b, unsigned k) {
    if (a.ncols() != b.nrows()) throw std::invalid_argument("mul_m4rm: dimension mismatch");
    if (k > 8) throw std::invalid_argument("mul_m4rm: k must be in 0..8");
    BitMatrix c(a.nrows(), b.ncols());
    if (a.nrows() == 0 || b.ncols() == 0 || a.ncols() == 0) return c;
    // const inputs are only read; the window handles never write through them
    BitMatrix& am = const_cast<BitMatrix&>(a);
    BitMatrix& bm = const_cast<BitMatrix&>(b);
    detail::addmul_impl(c.view(), am.view(), bm.view(), k);
    return c;
}

void addmul(MatrixWindow c, MatrixWindow a, MatrixWindow b, unsigned k) {
    if (a.nrows() != c.nrows() || a.ncols() != b.nrows() || b.ncols() != c.ncols())
        throw std::invalid_argument("addmul: dimension mismatch");
    if (c.overlaps(a) || c.overlaps(b)) throw std::invalid_argument("addmul: C aliases an input");
    detail::addmul_impl(c, a, b, k);
}

void trsm_lower_left_unit(MatrixWindow l, MatrixWindow b) {
    if (l.nrows() != l.ncols()) throw std::invalid_argument("trsm: L must be square");
    if (l.nrows() != b.nrows()) throw std::invalid_argument("trsm: dimension mismatch");
    std::size_t r = l.nrows();
    if (r <= 1) return;
    if (r <= 64) {
        // forward substitution, ascending rows use the already-solved ones
        for (std::size_t i = 1; i < r; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (l.get(i, j)) b.row_add(i, j, 0);
        return;
    }
    std::size_t h = (r / 2 + 63) & ~std::size_t{63};
    if (h >= r) h = r / 2;
    MatrixWindow l00 = l.window(0, 0, h, h);
    MatrixWindow l10 = l.window(h, 0, r, h);
    MatrixWindow l11 = l.window(h, h, r, r);
    MatrixWindow b0 = b.window(0, 0, h, b.ncols());
    MatrixWindow b1 = b.window(h, 0, r, b.ncols());
    trsm_lower_left_unit(l00, b0);
    addmul(b1, l10, b0);
    trsm_lower_left_unit(l11, b1);
}

void trsm_upper_left_unit(MatrixWindow u, MatrixWindow b) {
    if (u.nrows() != u.ncols()) throw std::invalid_argument("trsm: U must be square");
    if (u.nrows() != b.nrows()) throw std::invalid_argument("trsm: dimension mismatch");
    std::size_t r = u.nrows();
    if (r <= 1) return;
    if (r <= 64) {
        // backward substitution, descending rows use the already-solved ones
        for (std::size_t i = r - 1; i-- > 0;)
            for (std::size_t j = i + 1; j < r; ++j)
                if (u.get(i, j)) b.row_add(i, j, 0);
        return;
    }
    std::size_t h = (r / 2 + 63) & ~std::size_t{63};
    if (h >= r) h = r / 2;
    MatrixWindow u00 = u.window(0, 0, h, h);
    MatrixWindow u01 = u.window(0, h, h, r);
    MatrixWindow u11 = u.window(h, h, r, r);
    MatrixWindow b0 = b.window(0, 0, h, b.ncols());
    MatrixWindow b1 = b.window(h, 0, r, b.ncols());
    trsm_upper_left_unit(u11, b1);
    addmul(b0, u01, b1);
    trsm_upper_left_unit(u00, b0);
}

} // namespace f2lin
