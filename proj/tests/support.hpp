#pragma once

// Shared helpers and independent oracles for the test suites. Everything here
// sticks to get/set-level arithmetic so the word-level kernels under test
// never check themselves.

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <f2lin/bitmat.hpp>
#include <f2lin/gauss.hpp>
#include <f2lin/mul.hpp>
#include <f2lin/perm.hpp>
#include <f2lin/prng.hpp>

namespace testsupport {

using f2lin::BitMatrix;
using f2lin::Permutation;
using f2lin::PlsResult;
using f2lin::SplitMix64;

inline BitMatrix mat(std::initializer_list<std::string_view> rows) {
    std::size_t m = rows.size();
    std::size_t n = m ? rows.begin()->size() : 0;
    BitMatrix a(m, n);
    std::size_t i = 0;
    for (std::string_view row : rows) {
        for (std::size_t j = 0; j < n; ++j)
            if (row[j] == '1') a.set(i, j, true);
        ++i;
    }
    return a;
}

inline std::string dump(const BitMatrix& a) {
    std::string s;
    for (std::size_t i = 0; i < a.nrows(); ++i) {
        for (std::size_t j = 0; j < a.ncols(); ++j) s += a.get(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}

inline BitMatrix random_matrix(std::size_t m, std::size_t n, double density,
                               std::uint64_t seed) {
    BitMatrix a(m, n);
    a.randomize(density, seed);
    return a;
}

inline BitMatrix identity(std::size_t n) {
    BitMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a.set(i, i, true);
    return a;
}

// element-wise column swap, the oracle for the masked-shift kernel
inline void naive_col_swap(BitMatrix& a, std::size_t x, std::size_t y, std::size_t start_row) {
    for (std::size_t i = start_row; i < a.nrows(); ++i) {
        bool vx = a.get(i, x), vy = a.get(i, y);
        a.set(i, x, vy);
        a.set(i, y, vx);
    }
}

// bit-by-bit multiplication, independent of the row-XOR kernels
inline BitMatrix naive_mul_bitwise(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix c(a.nrows(), b.ncols());
    for (std::size_t i = 0; i < a.nrows(); ++i)
        for (std::size_t j = 0; j < b.ncols(); ++j) {
            bool v = false;
            for (std::size_t l = 0; l < a.ncols(); ++l) v ^= a.get(i, l) && b.get(l, j);
            c.set(i, j, v);
        }
    return c;
}

// rank via incremental insertion into a reduced basis of bool rows
inline std::size_t rank_by_basis(const BitMatrix& a) {
    std::vector<std::vector<bool>> basis;      // reduced rows
    std::vector<std::size_t> lead;             // leading index of each
    for (std::size_t i = 0; i < a.nrows(); ++i) {
        std::vector<bool> row(a.ncols());
        for (std::size_t j = 0; j < a.ncols(); ++j) row[j] = a.get(i, j);
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (row[lead[b]])
                for (std::size_t j = 0; j < row.size(); ++j) row[j] = row[j] ^ basis[b][j];
        std::size_t l = row.size();
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j]) {
                l = j;
                break;
            }
        if (l < row.size()) {
            basis.push_back(row);
            lead.push_back(l);
        }
    }
    return basis.size();
}

// checks the structure of a reduced row echelon form: strictly increasing
// pivots, pivot columns unit vectors, zero rows last
inline bool is_rref(const BitMatrix& a, std::size_t rank) {
    std::size_t prev_pivot = 0;
    bool have_prev = false;
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t pivot = a.ncols();
        for (std::size_t j = 0; j < a.ncols(); ++j)
            if (a.get(i, j)) {
                pivot = j;
                break;
            }
        if (pivot == a.ncols()) return false;
        if (have_prev && pivot <= prev_pivot) return false;
        prev_pivot = pivot;
        have_prev = true;
        for (std::size_t u = 0; u < a.nrows(); ++u)
            if (u != i && a.get(u, pivot)) return false;
    }
    for (std::size_t i = rank; i < a.nrows(); ++i)
        for (std::size_t j = 0; j < a.ncols(); ++j)
            if (a.get(i, j)) return false;
    return true;
}

// the acceptance-level reconstruction statement, spelled out with the
// materialized permutation matrix
inline bool reconstructs(const BitMatrix& original, const BitMatrix& packed, const PlsResult& f) {
    BitMatrix l = f2lin::pls_unit_lower(packed, f.rank);
    BitMatrix s = f2lin::pls_echelon_factor(packed, f.rank, f.Q);
    BitMatrix pm = f.P.to_matrix_inverse(original.nrows());
    return f2lin::mul_naive(pm, f2lin::mul_naive(l, s)) == original;
}

// structural checks on the extracted factors
inline bool factors_well_formed(const BitMatrix& packed, const PlsResult& f) {
    // L unit lower triangular m x r
    BitMatrix l = f2lin::pls_unit_lower(packed, f.rank);
    for (std::size_t i = 0; i < l.nrows(); ++i)
        for (std::size_t j = 0; j < l.ncols(); ++j) {
            if (j > i && l.get(i, j)) return false;
            if (j == i && !l.get(i, j)) return false;
        }
    // S in row echelon form with strictly increasing pivots at Q's prefix
    BitMatrix s = f2lin::pls_echelon_factor(packed, f.rank, f.Q);
    for (std::size_t t = 0; t < f.rank; ++t) {
        if (t > 0 && f.Q[t] <= f.Q[t - 1]) return false;
        for (std::size_t j = 0; j < f.Q[t]; ++j)
            if (s.get(t, j)) return false;
        if (!s.get(t, f.Q[t])) return false;
    }
    return true;
}

// random m x n matrix with rank exactly r: r independent rows plus random
// combinations of them
inline BitMatrix random_matrix_of_rank(std::size_t m, std::size_t n, std::size_t r,
                                       SplitMix64& gen) {
    BitMatrix g(r, n);
    for (;;) {
        g.randomize(0.5, gen.next());
        if (rank_by_basis(g) == r) break;
        if (r == 0) break;
    }
    BitMatrix a(m, n);
    for (std::size_t i = 0; i < std::min(m, r); ++i)
        for (std::size_t j = 0; j < n; ++j) a.set(i, j, g.get(i, j));
    // remaining rows are random combinations of the generators
    for (std::size_t i = r; i < m; ++i)
        for (std::size_t t = 0; t < r; ++t)
            if (gen.next() & 1u)
                for (std::size_t j = 0; j < n; ++j) a.set(i, j, a.get(i, j) ^ g.get(t, j));
    return a;
}

} // namespace testsupport
