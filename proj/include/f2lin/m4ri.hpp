#pragma once

// Gray-code table elimination. A k-column block is put in reduced echelon
// form, the 2^k combinations of its pivot rows go into a table, and every
// other row is then fixed up with a single table addition selected by its
// first k bits.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <f2lin/bitmat.hpp>

namespace f2lin {

// T holds the 2^k span elements (row 0 is zero); L maps the big-endian id of
// the k bits at the block's start column to the matching row of T.
struct GrayTable {
    BitMatrix T;
    std::vector<std::uint32_t> L;
};

// builds T from the k reduced pivot rows at r_start in 2^k - 1 row additions,
// walking the binary reflected Gray code
GrayTable make_table(const BitMatrix& a, std::size_t r_start, std::size_t c_start, unsigned k);

// for each row i in [r_start, r_end): read its k bits at c_start and add the
// matching table row, starting at column c_start
void add_rows_from_table(MatrixWindow a, std::size_t r_start, std::size_t r_end,
                         std::size_t c_start, unsigned k, const GrayTable& tbl);
void add_rows_from_table(BitMatrix& a, std::size_t r_start, std::size_t r_end, std::size_t c_start,
                         unsigned k, const GrayTable& tbl);

// reduced row echelon form of the k x (n-c) submatrix at (r, c), searching
// pivots in all rows below r up to r_end; returns the number of pivots found
unsigned gauss_submatrix(BitMatrix& a, std::size_t r, std::size_t c, unsigned k,
                         std::size_t r_end);

// full M4RI elimination; with full=false rows above the pivot blocks are left
// alone and the result is merely in echelon form
std::size_t m4ri_rref(BitMatrix& a, unsigned k = 0, bool full = true);

} // namespace f2lin
