#pragma once

#include "quasinv/cyclotomic.hpp"
#include "quasinv/errors.hpp"
#include "quasinv/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace quasinv {

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t k)
    {
        if (i == k)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(a_[i * cols_ + j], a_[k * cols_ + j]);
    }

    void append_row(const std::vector<F>& row)
    {
        if (rows_ == 0 && cols_ == 0)
            cols_ = row.size();
        if (row.size() != cols_)
            throw DomainError("row length mismatch");
        a_.insert(a_.end(), row.begin(), row.end());
        ++rows_;
    }

    std::vector<F> row(std::size_t i) const
    {
        return std::vector<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> a_;
};

inline void check_common_field(const Matrix<Rational>&) {}

inline void check_common_field(const Matrix<Cyclotomic>& m)
{
    int order = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero())
                order = Cyclotomic::common_order(order, m(i, j).order());
}

template <class F>
struct Echelon {
    Matrix<F> m;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

// Fraction-free (Bareiss) row echelon form. Pivot is the first nonzero entry
// of the current column scanning rows top to bottom.
template <class F>
Echelon<F> bareiss_echelon(Matrix<F> m)
{
    check_common_field(m);
    Echelon<F> e;
    F prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(p, r);
        const F piv = m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            F lead = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                F v = piv * m(i, j);
                if (!lead.is_zero())
                    v -= lead * m(r, j);
                m(i, j) = v / prev;
            }
            m(i, c) = F(0);
        }
        prev = piv;
        e.pivots.push_back(c);
        ++r;
    }
    e.m = std::move(m);
    return e;
}

// Reduced row echelon form: pivot entries 1, zeros above and below pivots.
template <class F>
Echelon<F> rref(Matrix<F> m)
{
    Echelon<F> e = bareiss_echelon(std::move(m));
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
        std::size_t c = e.pivots[k];
        F inv = F(1) / e.m(k, c);
        for (std::size_t j = c; j < e.m.cols(); ++j)
            if (!e.m(k, j).is_zero())
                e.m(k, j) *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (e.m(i, c).is_zero())
                continue;
            F f = e.m(i, c);
            for (std::size_t j = c; j < e.m.cols(); ++j)
                if (!e.m(k, j).is_zero())
                    e.m(i, j) -= f * e.m(k, j);
        }
    }
    return e;
}

template <class F>
std::size_t rank(const Matrix<F>& m)
{
    return bareiss_echelon(m).rank();
}

// Basis of {x : m x = 0}; one vector per free column, with that coordinate 1
// and the other free coordinates 0. Ordered by free column index.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m)
{
    Echelon<F> e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<F> v(m.cols(), F(0));
        v[f] = F(1);
        for (std::size_t k = 0; k < e.pivots.size(); ++k)
            if (!e.m(k, f).is_zero())
                v[e.pivots[k]] = -e.m(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Some solution of m x = b, or nullopt when inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& b)
{
    Matrix<F> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon<F> e = rref(std::move(aug));
    std::vector<F> x(m.cols(), F(0));
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        if (e.pivots[k] == m.cols())
            return std::nullopt;
        x[e.pivots[k]] = e.m(k, m.cols());
    }
    return x;
}

// Matrix whose rows are the given vectors.
template <class F>
Matrix<F> from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols)
{
    Matrix<F> m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    return m;
}

} // namespace quasinv
