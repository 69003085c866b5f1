#include <f2lin/perm.hpp>

#include <stdexcept>

namespace f2lin {
namespace detail {

void apply_transpositions(std::span<const std::size_t> v, MatrixWindow a) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != i) a.row_swap(i, v[i]);
}

void apply_transpositions_inverse(std::span<const std::size_t> v, MatrixWindow a) {
    for (std::size_t i = v.size(); i-- > 0;)
        if (v[i] != i) a.row_swap(i, v[i]);
}

void compress_columns_span(MatrixWindow a, std::size_t rank, std::span<const std::size_t> q) {
    for (std::size_t j = 0; j < rank; ++j)
        if (q[j] != j) a.col_swap(j, q[j], j);
}

} // namespace detail

void Permutation::apply_rows(BitMatrix& a) const { apply_rows(a.view()); }

void Permutation::apply_rows(MatrixWindow a) const {
    if (size() > a.nrows()) throw std::invalid_argument("apply_rows: permutation longer than rows");
    detail::apply_transpositions(slots(), a);
}

void Permutation::apply_rows_inverse(BitMatrix& a) const { apply_rows_inverse(a.view()); }

void Permutation::apply_rows_inverse(MatrixWindow a) const {
    if (size() > a.nrows())
        throw std::invalid_argument("apply_rows_inverse: permutation longer than rows");
    detail::apply_transpositions_inverse(slots(), a);
}

BitMatrix Permutation::to_matrix(std::size_t n) const {
    if (n < size()) throw std::invalid_argument("to_matrix: n smaller than permutation");
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    apply_rows(m);
    return m;
}

BitMatrix Permutation::to_matrix_inverse(std::size_t n) const {
    if (n < size()) throw std::invalid_argument("to_matrix_inverse: n smaller than permutation");
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    apply_rows_inverse(m);
    return m;
}

void compress_columns(BitMatrix& a, std::size_t rank, const Permutation& q) {
    if (rank > a.nrows() || rank > q.size())
        throw std::invalid_argument("compress_columns: rank out of range");
    detail::compress_columns_span(a.view(), rank, q.slots());
}

} // namespace f2lin
