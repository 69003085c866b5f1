#pragma once

// GF(2) matrix multiplication and the unit-lower triangular solve the
// recursive decomposition reduces to. mul_naive is the reference kernel the
// faster paths are checked against.

#include <f2lin/bitmat.hpp>

namespace f2lin {

// C[i,j] = XOR over l of A[i,l]*B[l,j], computed as word XORs of B's rows
// selected by A's bits
BitMatrix mul_naive(const BitMatrix& a, const BitMatrix& b);

// same result via tables of 2^k row combinations of B per k-column stripe of
// A; k in 1..8, 0 picks automatically
BitMatrix mul_m4rm(const BitMatrix& a, const BitMatrix& b, unsigned k = 0);

// C ^= A*B over windows; C must not alias A or B
void addmul(MatrixWindow c, MatrixWindow a, MatrixWindow b, unsigned k = 0);

// B <- X with L*X = B, L read as unit lower triangular (diagonal taken as 1,
// entries above the diagonal ignored; they carry S in the packed layout)
void trsm_lower_left_unit(MatrixWindow l, MatrixWindow b);

// B <- X with U*X = B, U read as unit upper triangular (diagonal taken as 1,
// entries below the diagonal ignored)
void trsm_upper_left_unit(MatrixWindow u, MatrixWindow b);

namespace detail {

// k = max(1, min(8, floor(log2(dim)) - 2))
unsigned auto_table_bits(std::size_t dim);

} // namespace detail

} // namespace f2lin
