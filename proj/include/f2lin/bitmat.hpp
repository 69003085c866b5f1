#pragma once

// Bit-packed dense matrices over GF(2). A row is an array of 64-bit words,
// least significant bit first: the bit for column j lives in word j/64 at bit
// position j%64. Padding bits (columns >= ncols in the last word of a row)
// are zero after every public operation.

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <vector>

#include <f2lin/prng.hpp>
#include <f2lin/stats.hpp>

namespace f2lin {

class MatrixWindow;

namespace detail {

inline constexpr std::uint64_t all_ones = ~std::uint64_t{0};

// mask with the n lowest bits set, n in 0..64
inline constexpr std::uint64_t low_mask(unsigned n) {
    return n >= 64 ? all_ones : (std::uint64_t{1} << n) - 1;
}

inline bool get_bit(const std::uint64_t* w, std::size_t bit) {
    return (w[bit / 64] >> (bit % 64)) & 1u;
}

inline void set_bit(std::uint64_t* w, std::size_t bit, bool v) {
    std::uint64_t m = std::uint64_t{1} << (bit % 64);
    if (v)
        w[bit / 64] |= m;
    else
        w[bit / 64] &= ~m;
}

// n bits starting at bit position `bit`, least significant first; 1 <= n <= 64
inline std::uint64_t fetch_bits(const std::uint64_t* w, std::size_t bit, unsigned n) {
    w += bit / 64;
    unsigned s = bit % 64;
    std::uint64_t v = w[0] >> s;
    if (s && s + n > 64) v |= w[1] << (64 - s);
    return v & low_mask(n);
}

// XOR the n lowest bits of v into the range starting at `bit`
inline void xor_bits_word(std::uint64_t* w, std::size_t bit, std::uint64_t v, unsigned n) {
    w += bit / 64;
    unsigned s = bit % 64;
    v &= low_mask(n);
    w[0] ^= v << s;
    if (s && s + n > 64) w[1] ^= v >> (64 - s);
}

// big-endian value of the n bits at `bit`: the first (leftmost) bit carries
// weight 2^(n-1)
inline std::uint64_t read_bits_be(const std::uint64_t* w, std::size_t bit, unsigned n) {
    std::uint64_t chunk = fetch_bits(w, bit, n);
    std::uint64_t id = 0;
    for (unsigned t = 0; t < n; ++t) id = (id << 1) | ((chunk >> t) & 1u);
    return id;
}

// dst[d_bit .. d_bit+n) ^= src[s_bit .. s_bit+n)
void xor_bits(std::uint64_t* dst, std::size_t d_bit, const std::uint64_t* src, std::size_t s_bit,
              std::size_t n);

// exchange the bit ranges a[bit .. bit+n) and b[bit .. bit+n)
void swap_bits(std::uint64_t* a, std::uint64_t* b, std::size_t bit, std::size_t n);

// clear w[bit .. bit+n)
void zero_bits(std::uint64_t* w, std::size_t bit, std::size_t n);

std::size_t popcount_bits(const std::uint64_t* w, std::size_t bit, std::size_t n);

// Column swap over rows [row_begin, row_end) of a word grid: the three masked
// shift-XOR steps, no branches in the inner loop. bit_a == bit_b must be
// excluded by the caller.
void col_swap_range(std::uint64_t* base, std::size_t stride, std::size_t row_begin,
                    std::size_t row_end, std::size_t bit_a, std::size_t bit_b);

} // namespace detail

class BitMatrix {
public:
    BitMatrix() = default;

    BitMatrix(std::size_t nrows, std::size_t ncols)
        : nrows_(nrows), ncols_(ncols), stride_((ncols + 63) / 64) {
        words_.resize(nrows_ * stride_, 0);
        stats::on_alloc(words_.size() * sizeof(std::uint64_t));
    }

    BitMatrix(const BitMatrix& o)
        : nrows_(o.nrows_), ncols_(o.ncols_), stride_(o.stride_), words_(o.words_) {
        stats::on_alloc(words_.size() * sizeof(std::uint64_t));
    }

    BitMatrix(BitMatrix&& o) noexcept
        : nrows_(o.nrows_), ncols_(o.ncols_), stride_(o.stride_), words_(std::move(o.words_)) {
        o.nrows_ = o.ncols_ = o.stride_ = 0;
        o.words_.clear();
    }

    BitMatrix& operator=(const BitMatrix& o) {
        if (this != &o) {
            stats::on_free(words_.size() * sizeof(std::uint64_t));
            nrows_ = o.nrows_;
            ncols_ = o.ncols_;
            stride_ = o.stride_;
            words_ = o.words_;
            stats::on_alloc(words_.size() * sizeof(std::uint64_t));
        }
        return *this;
    }

    BitMatrix& operator=(BitMatrix&& o) noexcept {
        if (this != &o) {
            stats::on_free(words_.size() * sizeof(std::uint64_t));
            nrows_ = o.nrows_;
            ncols_ = o.ncols_;
            stride_ = o.stride_;
            words_ = std::move(o.words_);
            o.nrows_ = o.ncols_ = o.stride_ = 0;
            o.words_.clear();
        }
        return *this;
    }

    ~BitMatrix() { stats::on_free(words_.size() * sizeof(std::uint64_t)); }

    std::size_t nrows() const { return nrows_; }
    std::size_t ncols() const { return ncols_; }
    std::size_t stride() const { return stride_; }

    std::uint64_t* row(std::size_t i) { return words_.data() + i * stride_; }
    const std::uint64_t* row(std::size_t i) const { return words_.data() + i * stride_; }

    bool get(std::size_t i, std::size_t j) const {
        assert(i < nrows_ && j < ncols_);
        return detail::get_bit(row(i), j);
    }

    void set(std::size_t i, std::size_t j, bool v) {
        assert(i < nrows_ && j < ncols_);
        detail::set_bit(row(i), j, v);
    }

    // rows[dst] ^= rows[src] from start_col on
    void row_add(std::size_t dst, std::size_t src, std::size_t start_col = 0) {
        assert(dst < nrows_ && src < nrows_ && start_col <= ncols_);
        if (start_col >= ncols_) return;
        stats::count_row_add();
        std::uint64_t* d = row(dst);
        const std::uint64_t* s = row(src);
        std::size_t w0 = start_col / 64;
        d[w0] ^= s[w0] & (detail::all_ones << (start_col % 64));
        for (std::size_t w = w0 + 1; w < stride_; ++w) d[w] ^= s[w];
    }

    void row_swap(std::size_t i, std::size_t j) {
        assert(i < nrows_ && j < nrows_);
        if (i == j) return;
        std::uint64_t* a = row(i);
        std::uint64_t* b = row(j);
        for (std::size_t w = 0; w < stride_; ++w) std::swap(a[w], b[w]);
    }

    void col_swap(std::size_t a, std::size_t b, std::size_t start_row = 0) {
        assert(a < ncols_ && b < ncols_ && start_row <= nrows_);
        if (a == b) return;
        detail::col_swap_range(words_.data(), stride_, start_row, nrows_, a, b);
    }

    // big-endian integer of the k bits starting at column c
    std::uint64_t read_bits(std::size_t i, std::size_t c, unsigned k) const {
        assert(i < nrows_ && k >= 1 && k <= 64 && c + k <= ncols_);
        return detail::read_bits_be(row(i), c, k);
    }

    double density(std::size_t sample_rows = 64) const;

    // every bit independently 1 with the given probability; see prng.hpp for
    // the exact stream contract
    void randomize(double density, std::uint64_t seed);

    MatrixWindow window(std::size_t r_start, std::size_t c_start, std::size_t r_end,
                        std::size_t c_end);
    MatrixWindow view();

    bool is_zero() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (std::uint64_t w : words_) n += std::popcount(w);
        return n;
    }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    // padding bits must be zero; exposed so tests can scan for violations
    bool padding_clean() const {
        unsigned used = ncols_ % 64;
        if (ncols_ == 0) {
            for (std::uint64_t w : words_)
                if (w) return false;
            return true;
        }
        if (used == 0) return true;
        for (std::size_t i = 0; i < nrows_; ++i)
            if (row(i)[stride_ - 1] & ~detail::low_mask(used)) return false;
        return true;
    }

    friend bool operator==(const BitMatrix& x, const BitMatrix& y) {
        return x.nrows_ == y.nrows_ && x.ncols_ == y.ncols_ && x.words_ == y.words_;
    }

private:
    std::size_t nrows_ = 0;
    std::size_t ncols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> words_;
};

// Rectangular view into a BitMatrix with half-open row/column bounds. Reads
// and writes alias the parent storage; a window only ever mutates entries
// inside its bounds.
class MatrixWindow {
public:
    MatrixWindow(BitMatrix& parent, std::size_t r_start, std::size_t c_start, std::size_t r_end,
                 std::size_t c_end)
        : parent_(&parent), r0_(r_start), c0_(c_start), rows_(r_end - r_start),
          cols_(c_end - c_start) {
        if (r_start > r_end || c_start > c_end || r_end > parent.nrows() ||
            c_end > parent.ncols())
            throw std::out_of_range("MatrixWindow: invalid bounds");
    }

    std::size_t nrows() const { return rows_; }
    std::size_t ncols() const { return cols_; }
    BitMatrix& parent() const { return *parent_; }
    std::size_t row_origin() const { return r0_; }
    std::size_t col_origin() const { return c0_; }

    // parent word array for window row i; column j sits at bit c0 + j
    std::uint64_t* row_words(std::size_t i) const { return parent_->row(r0_ + i); }
    std::size_t col_bit(std::size_t j) const { return c0_ + j; }

    bool get(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return detail::get_bit(row_words(i), c0_ + j);
    }

    void set(std::size_t i, std::size_t j, bool v) {
        assert(i < rows_ && j < cols_);
        detail::set_bit(row_words(i), c0_ + j, v);
    }

    void row_add(std::size_t dst, std::size_t src, std::size_t start_col = 0) {
        assert(dst < rows_ && src < rows_ && start_col <= cols_);
        if (start_col >= cols_) return;
        stats::count_row_add();
        detail::xor_bits(row_words(dst), c0_ + start_col, row_words(src), c0_ + start_col,
                         cols_ - start_col);
    }

    void row_swap(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < rows_);
        if (i == j) return;
        detail::swap_bits(row_words(i), row_words(j), c0_, cols_);
    }

    void col_swap(std::size_t a, std::size_t b, std::size_t start_row = 0) {
        assert(a < cols_ && b < cols_ && start_row <= rows_);
        if (a == b) return;
        detail::col_swap_range(parent_->row(r0_), parent_->stride(), start_row, rows_, c0_ + a,
                               c0_ + b);
    }

    std::uint64_t read_bits(std::size_t i, std::size_t c, unsigned k) const {
        assert(i < rows_ && k >= 1 && k <= 64 && c + k <= cols_);
        return detail::read_bits_be(row_words(i), c0_ + c, k);
    }

    // k bits at column c, least significant first (internal helper for the
    // table kernels)
    std::uint64_t bits_lsb(std::size_t i, std::size_t c, unsigned k) const {
        assert(i < rows_ && k >= 1 && k <= 64 && c + k <= cols_);
        return detail::fetch_bits(row_words(i), c0_ + c, k);
    }

    void zero_row_range(std::size_t i, std::size_t c_lo, std::size_t c_hi) {
        assert(i < rows_ && c_lo <= c_hi && c_hi <= cols_);
        if (c_lo < c_hi) detail::zero_bits(row_words(i), c0_ + c_lo, c_hi - c_lo);
    }

    double density(std::size_t sample_rows = 64) const;

    MatrixWindow window(std::size_t r_start, std::size_t c_start, std::size_t r_end,
                        std::size_t c_end) const {
        if (r_start > r_end || c_start > c_end || r_end > rows_ || c_end > cols_)
            throw std::out_of_range("MatrixWindow::window: invalid bounds");
        return MatrixWindow(*parent_, r0_ + r_start, c0_ + c_start, r0_ + r_end, c0_ + c_end);
    }

    // true if the two windows share storage cells
    bool overlaps(const MatrixWindow& o) const {
        if (parent_ != o.parent_) return false;
        bool rows_meet = r0_ < o.r0_ + o.rows_ && o.r0_ < r0_ + rows_;
        bool cols_meet = c0_ < o.c0_ + o.cols_ && o.c0_ < c0_ + cols_;
        return rows_meet && cols_meet;
    }

    std::size_t size_bytes() const { return rows_ * ((cols_ + 7) / 8); }

private:
    BitMatrix* parent_;
    std::size_t r0_, c0_, rows_, cols_;
};

inline MatrixWindow BitMatrix::window(std::size_t r_start, std::size_t c_start, std::size_t r_end,
                                      std::size_t c_end) {
    return MatrixWindow(*this, r_start, c_start, r_end, c_end);
}

inline MatrixWindow BitMatrix::view() { return MatrixWindow(*this, 0, 0, nrows_, ncols_); }

namespace detail {

// dst and src must have the same ncols; counts as one row addition
inline void add_row_from(BitMatrix& dst, std::size_t di, const BitMatrix& src, std::size_t si,
                         std::size_t start_col) {
    assert(dst.ncols() == src.ncols() && start_col <= dst.ncols());
    if (start_col >= dst.ncols()) return;
    stats::count_row_add();
    xor_bits(dst.row(di), start_col, src.row(si), start_col, dst.ncols() - start_col);
}

// dst = a ^ b over [start_col, ncols) in one pass, masked at both ends; dst
// must be zero before start_col (table rows are built into fresh zero rows).
// One row addition.
inline void row_xor3(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                     std::size_t start_col, std::size_t ncols) {
    if (start_col >= ncols) return;
    stats::count_row_add();
    std::size_t w0 = start_col / 64;
    std::size_t wl = (ncols - 1) / 64;
    std::uint64_t m0 = all_ones << (start_col % 64);
    std::uint64_t ml = all_ones >> (63 - (ncols - 1) % 64);
    if (w0 == wl) {
        dst[w0] = (a[w0] ^ b[w0]) & m0 & ml;
        return;
    }
    dst[w0] = (a[w0] ^ b[w0]) & m0;
    for (std::size_t w = w0 + 1; w < wl; ++w) dst[w] = a[w] ^ b[w];
    dst[wl] = (a[wl] ^ b[wl]) & ml;
}

} // namespace detail

} // namespace f2lin
