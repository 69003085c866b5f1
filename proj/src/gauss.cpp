#include <f2lin/gauss.hpp>

#include <f2lin/mul.hpp>

namespace f2lin {

std::size_t gauss_rref(BitMatrix& a) {
    std::size_t m = a.nrows(), n = a.ncols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t pivot = m;
        for (std::size_t i = r; i < m; ++i)
            if (a.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot == m) continue;
        a.row_swap(r, pivot);
        for (std::size_t i = 0; i < m; ++i)
            if (i != r && a.get(i, c)) a.row_add(i, r, c);
        ++r;
    }
    return r;
}

std::size_t gauss_pls(BitMatrix& a, Permutation& p, Permutation& q) {
    std::size_t m = a.nrows(), n = a.ncols();
    p = Permutation::identity(m);
    q = Permutation::identity(n);
    std::size_t r = 0, c = 0;
    while (r < m && c < n) {
        // first nonzero entry, scanning columns left to right, rows top down
        std::size_t pi = m, pj = n;
        for (std::size_t j = c; j < n && pj == n; ++j)
            for (std::size_t i = r; i < m; ++i)
                if (a.get(i, j)) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pj == n) break;
        p[r] = pi;
        q[r] = pj;
        a.row_swap(r, pi);
        // clear below but preserve the transformation matrix: additions start
        // one column right of the pivot, the pivot column keeps the L bits
        if (pj + 1 < n)
            for (std::size_t l = r + 1; l < m; ++l)
                if (a.get(l, pj)) a.row_add(l, r, pj + 1);
        r = r + 1;
        c = pj + 1;
    }
    compress_columns(a, r, q);
    return r;
}

PlsResult gauss_pls(BitMatrix& a) {
    PlsResult f;
    f.rank = gauss_pls(a, f.P, f.Q);
    return f;
}

BitMatrix pls_unit_lower(const BitMatrix& packed, std::size_t rank) {
    std::size_t m = packed.nrows();
    BitMatrix l(m, rank);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t upto = i < rank ? i : rank;
        for (std::size_t j = 0; j < upto; ++j) l.set(i, j, packed.get(i, j));
        if (i < rank) l.set(i, i, true);
    }
    return l;
}

BitMatrix pls_echelon_factor(const BitMatrix& packed, std::size_t rank, const Permutation& q) {
    std::size_t n = packed.ncols();
    BitMatrix s(rank, n);
    for (std::size_t t = 0; t < rank; ++t) {
        std::size_t piv = q[t];
        s.set(t, piv, true);
        for (std::size_t j = piv + 1; j < n; ++j) s.set(t, j, packed.get(t, j));
    }
    return s;
}

bool pls_verify(const BitMatrix& original, const BitMatrix& packed, const PlsResult& f) {
    BitMatrix l = pls_unit_lower(packed, f.rank);
    BitMatrix s = pls_echelon_factor(packed, f.rank, f.Q);
    BitMatrix ls = mul_naive(l, s);
    f.P.apply_rows_inverse(ls);
    return ls == original;
}

} // namespace f2lin
