#pragma once

// Table-based PLS decomposition. The pivot blocks come out upper triangular
// rather than identity, the lookup table L encodes the actual prefix-to-row
// relation, and the table rows are corrected so that one table addition both
// eliminates a row and writes its L coefficients into the pivot columns.

#include <cstddef>
#include <functional>
#include <span>
#include <utility>

#include <f2lin/bitmat.hpp>
#include <f2lin/gauss.hpp>
#include <f2lin/m4ri.hpp>
#include <f2lin/perm.hpp>

namespace f2lin {

// Searches up to k pivots in columns s_c.. of rows s_r.., recording row swaps
// in P and pivot columns in Q. done[l] tracks the last row already cleared
// against pivot column l, so rows are caught up lazily during the search and
// finished afterwards. Returns the pivot count and d_r, the last row touched.
std::pair<unsigned, std::size_t> pls_submatrix(MatrixWindow a, std::size_t s_r, std::size_t s_c,
                                               unsigned k, std::span<std::size_t> p,
                                               std::span<std::size_t> q);

// Table over the k upper-triangular pivot rows of U (entries left of the
// triangle already zeroed). L is indexed by the prefixes the rows actually
// have; afterwards each table row gets the a-priori combination id XORed onto
// its k leading columns so that a table addition leaves the L bits behind.
GrayTable make_table1(const BitMatrix& u, std::size_t r_start, std::size_t c_start, unsigned k);

// in-place PLS decomposition, M4RI style; returns the rank
std::size_t mmpf_pls(MatrixWindow a, std::span<std::size_t> p, std::span<std::size_t> q,
                     unsigned k = 0);
std::size_t mmpf_pls(BitMatrix& a, Permutation& p, Permutation& q, unsigned k = 0);
PlsResult mmpf_pls(BitMatrix& a, unsigned k = 0);

namespace detail {

// after_block(r, c) runs after every outer iteration; used by the tests that
// compare intermediate states against plain Gaussian elimination
std::size_t mmpf_pls_hooked(MatrixWindow a, std::span<std::size_t> p, std::span<std::size_t> q,
                            unsigned k,
                            const std::function<void(std::size_t, std::size_t)>& after_block);

} // namespace detail

} // namespace f2lin
