#include <f2lin/bitmat.hpp>

#include <algorithm>
#include <cmath>

namespace f2lin {
namespace detail {

void xor_bits(std::uint64_t* dst, std::size_t d_bit, const std::uint64_t* src, std::size_t s_bit,
              std::size_t n) {
    if (n == 0) return;
    if (d_bit % 64 == s_bit % 64) {
        dst += d_bit / 64;
        src += s_bit / 64;
        unsigned b = d_bit % 64;
        std::size_t last = b + n - 1;
        std::size_t wlast = last / 64;
        std::uint64_t m0 = all_ones << b;
        std::uint64_t m1 = all_ones >> (63 - last % 64);
        if (wlast == 0) {
            dst[0] ^= src[0] & m0 & m1;
            return;
        }
        dst[0] ^= src[0] & m0;
        for (std::size_t w = 1; w < wlast; ++w) dst[w] ^= src[w];
        dst[wlast] ^= src[wlast] & m1;
        return;
    }
    // offsets differ: move 64-bit chunks through registers
    std::size_t done = 0;
    while (done < n) {
        unsigned chunk = static_cast<unsigned>(std::min<std::size_t>(64, n - done));
        xor_bits_word(dst, d_bit + done, fetch_bits(src, s_bit + done, chunk), chunk);
        done += chunk;
    }
}

void swap_bits(std::uint64_t* a, std::uint64_t* b, std::size_t bit, std::size_t n) {
    if (n == 0) return;
    a += bit / 64;
    b += bit / 64;
    unsigned off = bit % 64;
    std::size_t last = off + n - 1;
    std::size_t wlast = last / 64;
    std::uint64_t m0 = all_ones << off;
    std::uint64_t m1 = all_ones >> (63 - last % 64);
    if (wlast == 0) {
        std::uint64_t t = (a[0] ^ b[0]) & m0 & m1;
        a[0] ^= t;
        b[0] ^= t;
        return;
    }
    std::uint64_t t = (a[0] ^ b[0]) & m0;
    a[0] ^= t;
    b[0] ^= t;
    for (std::size_t w = 1; w < wlast; ++w) std::swap(a[w], b[w]);
    t = (a[wlast] ^ b[wlast]) & m1;
    a[wlast] ^= t;
    b[wlast] ^= t;
}

void zero_bits(std::uint64_t* w, std::size_t bit, std::size_t n) {
    if (n == 0) return;
    w += bit / 64;
    unsigned off = bit % 64;
    std::size_t last = off + n - 1;
    std::size_t wlast = last / 64;
    std::uint64_t m0 = all_ones << off;
    std::uint64_t m1 = all_ones >> (63 - last % 64);
    if (wlast == 0) {
        w[0] &= ~(m0 & m1);
        return;
    }
    w[0] &= ~m0;
    for (std::size_t i = 1; i < wlast; ++i) w[i] = 0;
    w[wlast] &= ~m1;
}

std::size_t popcount_bits(const std::uint64_t* w, std::size_t bit, std::size_t n) {
    if (n == 0) return 0;
    w += bit / 64;
    unsigned off = bit % 64;
    std::size_t last = off + n - 1;
    std::size_t wlast = last / 64;
    std::uint64_t m0 = all_ones << off;
    std::uint64_t m1 = all_ones >> (63 - last % 64);
    if (wlast == 0) return std::popcount(w[0] & m0 & m1);
    std::size_t count = std::popcount(w[0] & m0);
    for (std::size_t i = 1; i < wlast; ++i) count += std::popcount(w[i]);
    count += std::popcount(w[wlast] & m1);
    return count;
}

void col_swap_range(std::uint64_t* base, std::size_t stride, std::size_t row_begin,
                    std::size_t row_end, std::size_t bit_a, std::size_t bit_b) {
    // normalize so the in-word position of a is not below b's; the shifts
    // below then always move by a non-negative delta
    if (bit_a % 64 < bit_b % 64) std::swap(bit_a, bit_b);
    std::size_t wa = bit_a / 64, wb = bit_b / 64;
    unsigned ba = bit_a % 64, bb = bit_b % 64;
    unsigned delta = ba - bb;
    std::uint64_t ma = std::uint64_t{1} << ba;
    std::uint64_t mb = std::uint64_t{1} << bb;
    std::uint64_t* r = base + row_begin * stride;
    for (std::size_t i = row_begin; i < row_end; ++i, r += stride) {
        r[wa] ^= (r[wb] & mb) << delta;
        r[wb] ^= (r[wa] & ma) >> delta;
        r[wa] ^= (r[wb] & mb) << delta;
    }
}

} // namespace detail

double BitMatrix::density(std::size_t sample_rows) const {
    if (nrows_ == 0 || ncols_ == 0) return 0.0;
    if (sample_rows == 0) sample_rows = 1;
    std::size_t s = std::min(sample_rows, nrows_);
    std::size_t ones = 0;
    for (std::size_t t = 0; t < s; ++t) {
        const std::uint64_t* r = row(t * nrows_ / s);
        for (std::size_t w = 0; w < stride_; ++w) ones += std::popcount(r[w]);
    }
    return static_cast<double>(ones) / (static_cast<double>(s) * static_cast<double>(ncols_));
}

double MatrixWindow::density(std::size_t sample_rows) const {
    if (rows_ == 0 || cols_ == 0) return 0.0;
    if (sample_rows == 0) sample_rows = 1;
    std::size_t s = std::min(sample_rows, rows_);
    std::size_t ones = 0;
    for (std::size_t t = 0; t < s; ++t)
        ones += detail::popcount_bits(row_words(t * rows_ / s), c0_, cols_);
    return static_cast<double>(ones) / (static_cast<double>(s) * static_cast<double>(cols_));
}

void BitMatrix::randomize(double density, std::uint64_t seed) {
    if (!(density >= 0.0 && density <= 1.0))
        throw std::invalid_argument("randomize: density must be in [0, 1]");
    // P(bit set) = threshold / 2^53, with the 53 top bits of each output as
    // the uniform draw
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(std::llround(density * 9007199254740992.0));
    SplitMix64 gen(seed);
    for (std::size_t i = 0; i < nrows_; ++i) {
        std::uint64_t* r = row(i);
        for (std::size_t w = 0; w < stride_; ++w) {
            unsigned nbits = static_cast<unsigned>(std::min<std::size_t>(64, ncols_ - w * 64));
            std::uint64_t word = 0;
            for (unsigned t = 0; t < nbits; ++t)
                if ((gen.next() >> 11) < threshold) word |= std::uint64_t{1} << t;
            r[w] = word;
        }
    }
}

} // namespace f2lin
