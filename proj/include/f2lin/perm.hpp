#pragma once

// Permutations in transposition-vector (LAPACK-style) form: applying means
// "for i = 0..len-1 swap positions i and v[i]". The forward direction runs
// the swaps ascending, exactly the order the decompositions record them; the
// inverse direction runs them descending and undoes the forward one. The two
// directions are what distinguishes P from P^-1 for a stored vector.

#include <cstddef>
#include <span>
#include <vector>

#include <f2lin/bitmat.hpp>

namespace f2lin {

class Permutation {
public:
    Permutation() = default;

    static Permutation identity(std::size_t n) {
        Permutation p;
        p.v_.resize(n);
        for (std::size_t i = 0; i < n; ++i) p.v_[i] = i;
        return p;
    }

    std::size_t size() const { return v_.size(); }
    std::size_t operator[](std::size_t i) const { return v_[i]; }
    std::size_t& operator[](std::size_t i) { return v_[i]; }

    std::span<std::size_t> slots() { return {v_.data(), v_.size()}; }
    std::span<const std::size_t> slots() const { return {v_.data(), v_.size()}; }

    // v[i] >= i and v[i] < len for all i
    bool is_valid() const {
        for (std::size_t i = 0; i < v_.size(); ++i)
            if (v_[i] < i || v_[i] >= v_.size()) return false;
        return true;
    }

    void apply_rows(BitMatrix& a) const;
    void apply_rows(MatrixWindow a) const;
    void apply_rows_inverse(BitMatrix& a) const;
    void apply_rows_inverse(MatrixWindow a) const;

    // matrix M with M*A == apply_rows(*this, A)
    BitMatrix to_matrix(std::size_t n) const;
    // matrix M with M*A == apply_rows_inverse(*this, A); to_matrix * to_matrix_inverse = I
    BitMatrix to_matrix_inverse(std::size_t n) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> v_;
};

// for j = 0..rank-1 ascending: swap columns j and Q[j] starting at row j.
// Moves the stored transformation matrix L into columns 0..rank-1 below the
// diagonal.
void compress_columns(BitMatrix& a, std::size_t rank, const Permutation& q);

namespace detail {

void apply_transpositions(std::span<const std::size_t> v, MatrixWindow a);
void apply_transpositions_inverse(std::span<const std::size_t> v, MatrixWindow a);
void compress_columns_span(MatrixWindow a, std::size_t rank, std::span<const std::size_t> q);

inline void identity_fill(std::span<std::size_t> v) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
}

} // namespace detail

} // namespace f2lin
