#pragma once

// Recursive block PLS decomposition, recovery of the reduced row echelon form
// from a packed decomposition, and the density-driven hybrid eliminator.

#include <cstddef>
#include <span>
#include <string_view>

#include <f2lin/bitmat.hpp>
#include <f2lin/gauss.hpp>
#include <f2lin/perm.hpp>

namespace f2lin {

enum class Algorithm { gauss, m4ri, mmpf, pls, hybrid };

const char* to_string(Algorithm alg);
Algorithm algorithm_from_string(std::string_view name);

// crossover size for the recursion base case: 4 MiB or the L2 cache size,
// whichever is smaller; the environment variable F2_L2_BYTES overrides the
// detected L2 size
std::size_t default_cutoff_bytes();

struct EliminationConfig {
    unsigned k = 0;                  // table bits, 0 = automatic
    std::size_t cutoff_bytes = 0;    // 0 = default_cutoff_bytes()
    double hybrid_threshold = 0.15;  // density at which the hybrid switches
    Algorithm algorithm = Algorithm::pls;

    std::size_t effective_cutoff() const {
        return cutoff_bytes ? cutoff_bytes : default_cutoff_bytes();
    }
};

// In-place PLS with the same contract as mmpf_pls. Splits the columns at a
// word-aligned midpoint, decomposes the left half, applies the row swaps to
// the right half, solves the triangular system, updates the Schur complement,
// decomposes it, and merges the permutations; windows at or below the cutoff
// go to mmpf_pls.
std::size_t pls_recursive(MatrixWindow a, std::span<std::size_t> p, std::span<std::size_t> q,
                          const EliminationConfig& cfg = {});
std::size_t pls_recursive(BitMatrix& a, Permutation& p, Permutation& q,
                          const EliminationConfig& cfg = {});
PlsResult pls_recursive(BitMatrix& a, const EliminationConfig& cfg = {});

// Turns a packed PLS result into the reduced row echelon form of the original
// matrix: the L storage is zeroed, the column compression completed into one
// permutation that gathers the pivot columns, everything above the pivots
// cleared with one blocked triangular solve, and the permutation undone so
// the pivots return to their original columns. Rejects a (rank, Q) pair whose
// pivot columns are not strictly increasing.
void rref_from_pls(MatrixWindow a, std::size_t rank, std::span<const std::size_t> q);
void rref_from_pls(BitMatrix& a, std::size_t rank, const Permutation& p, const Permutation& q);

// M4RI elimination that watches the density of the untouched trailing window
// and, once it reaches cfg.hybrid_threshold, finishes that window with
// pls_recursive + rref_from_pls before resuming the table loop over the
// echelonized rows. Returns the rank; the result is the RREF of A.
std::size_t hybrid_rref(BitMatrix& a, const EliminationConfig& cfg = {});

// rank of A computed on a working copy with the configured algorithm
std::size_t rank(const BitMatrix& a, const EliminationConfig& cfg = {});

} // namespace f2lin
