#pragma once

// Cubic reference algorithms: classical reduced row echelon form and the
// Gaussian PLS decomposition that the table-based and recursive paths are
// checked against.
//
// A PLS decomposition leaves the input matrix packed: L sits strictly below
// the diagonal in columns 0..rank-1 (unit diagonal implicit) and S on and
// above it. Row t's leading 1 is stored on the diagonal while Q[t] names the
// pivot's original column, so reconstructing S means putting that 1 back at
// column Q[t].

#include <cstddef>

#include <f2lin/bitmat.hpp>
#include <f2lin/perm.hpp>

namespace f2lin {

struct PlsResult {
    std::size_t rank = 0;
    Permutation P;
    Permutation Q;
};

// in-place reduced row echelon form, returns the rank
std::size_t gauss_rref(BitMatrix& a);

// in-place PLS: pivot search column-major over remaining columns then rows,
// elimination below the pivot starting one column right of it (preserving L),
// trailing column compression. P and Q are resized to m and n.
std::size_t gauss_pls(BitMatrix& a, Permutation& p, Permutation& q);
PlsResult gauss_pls(BitMatrix& a);

// m x rank unit lower triangular factor from the packed layout
BitMatrix pls_unit_lower(const BitMatrix& packed, std::size_t rank);

// rank x ncols row echelon factor from the packed layout
BitMatrix pls_echelon_factor(const BitMatrix& packed, std::size_t rank, const Permutation& q);

// checks that applying the recorded row swaps in reverse to L*S reproduces
// the original matrix, i.e. to_matrix_inverse(P) * L * S == original
bool pls_verify(const BitMatrix& original, const BitMatrix& packed, const PlsResult& f);

} // namespace f2lin
