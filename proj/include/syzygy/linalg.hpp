#ifndef SYZYGY_LINALG_HPP
#define SYZYGY_LINALG_HPP

#include <vector>

#include "field.hpp"

/**
 * Dense exact linear algebra over an arbitrary field object.  Gaussian
 * elimination proceeds column by column and always picks the first nonzero
 * pivot from the top, so every derived basis is deterministic with respect
 * to the caller's row and column order.
 */
namespace syzygy {

template <class Fld>
struct Matrix {
    using Element = typename Fld::Element;

    int rows = 0;
    int cols = 0;
    std::vector<Element> a;

    Matrix() = default;
    Matrix(const Fld& K, int r, int c)
        : rows(r), cols(c),
          a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), K.zero())
    {
    }

    Element& at(int r, int c)
    {
        return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                 static_cast<std::size_t>(c)];
    }
    const Element& at(int r, int c) const
    {
        return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                 static_cast<std::size_t>(c)];
    }
};

/** Reduced row echelon form in place; returns the pivot columns ascending. */
template <class Fld>
std::vector<int> rref_in_place(const Fld& K, Matrix<Fld>& M)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < M.cols && row < M.rows; ++col) {
        int sel = -1;
        for (int r = row; r < M.rows; ++r) {
            if (!K.is_zero(M.at(r, col))) {
                sel = r;
                break;
            }
        }
        if (sel < 0)
            continue;
        if (sel != row) {
            for (int c = 0; c < M.cols; ++c)
                std::swap(M.at(sel, c), M.at(row, c));
        }
        const auto inv_pivot = K.div(K.one(), M.at(row, col));
        for (int c = col; c < M.cols; ++c)
            M.at(row, c) = K.mul(M.at(row, c), inv_pivot);
        for (int r = 0; r < M.rows; ++r) {
            if (r == row || K.is_zero(M.at(r, col)))
                continue;
            const auto factor = M.at(r, col);
            for (int c = col; c < M.cols; ++c)
                M.at(r, c) = K.sub(M.at(r, c), K.mul(factor, M.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class Fld>
int rank(const Fld& K, Matrix<Fld> M)
{
    return static_cast<int>(rref_in_place(K, M).size());
}

/**
 * Kernel basis in reduced echelon normal form: one vector per free column in
 * ascending column order, each with a 1 in its free coordinate.
 */
template <class Fld>
std::vector<std::vector<typename Fld::Element>> kernel_basis(const Fld& K, Matrix<Fld> M)
{
    std::vector<int> pivots = rref_in_place(K, M);
    std::vector<bool> is_pivot(static_cast<std::size_t>(M.cols), false);
    for (int p : pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<std::vector<typename Fld::Element>> basis;
    for (int f = 0; f < M.cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        std::vector<typename Fld::Element> v(static_cast<std::size_t>(M.cols), K.zero());
        v[static_cast<std::size_t>(f)] = K.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[static_cast<std::size_t>(pivots[r])] =
                K.neg(M.at(static_cast<int>(r), f));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/** Whether v lies in the column span of M (v.size() == M.rows). */
template <class Fld>
bool in_column_span(const Fld& K, const Matrix<Fld>& M,
                    const std::vector<typename Fld::Element>& v)
{
    Matrix<Fld> aug(K, M.rows, M.cols + 1);
    for (int r = 0; r < M.rows; ++r) {
        for (int c = 0; c < M.cols; ++c)
            aug.at(r, c) = M.at(r, c);
        aug.at(r, M.cols) = v[static_cast<std::size_t>(r)];
    }
    Matrix<Fld> plain(K, M.rows, M.cols);
    plain.a = M.a;
    return rank(K, std::move(aug)) == rank(K, std::move(plain));
}

}  // namespace syzygy

#endif  // SYZYGY_LINALG_HPP
