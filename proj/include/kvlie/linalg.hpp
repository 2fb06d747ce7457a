// Dense exact linear algebra over Q, sized for the systems that come up in
// degree-by-degree solving (a few hundred rows and columns).
#pragma once

#include "polynomial.hpp"
#include "rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kvlie {

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) {
            return;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            std::swap((*this)(a, c), (*this)(b, c));
        }
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pick = row;
        while (pick < m.rows() && m(pick, col) == 0) {
            ++pick;
        }
        if (pick == m.rows()) {
            continue;
        }
        m.swap_rows(row, pick);
        const Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
            m(row, c) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) {
                continue;
            }
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (m(row, c) != 0) {
                    m(r, c) -= f * m(row, c);
                }
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(Matrix m) { return row_reduce(m).size(); }

/// Basis of {v : M v = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> nullspace(Matrix m)
{
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// A solution of M v = b with free variables set to zero, if one exists.
inline std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b)
{
    if (b.size() != m.rows()) {
        throw std::invalid_argument("solve: right-hand side has the wrong length");
    }
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            aug(r, c) = m(r, c);
        }
        aug(r, m.cols()) = b[r];
    }
    const auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) {
        return std::nullopt;
    }
    std::vector<Rational> v(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        v[pivots[r]] = aug(r, m.cols());
    }
    return v;
}

/// Assigns row indices to words as they are first seen; used to turn lists of
/// polynomials into matrix columns.
class WordIndex {
public:
    std::size_t index(const Word& w)
    {
        auto [it, inserted] = map_.try_emplace(w, map_.size());
        return it->second;
    }
    std::optional<std::size_t> find(const Word& w) const
    {
        auto it = map_.find(w);
        if (it == map_.end()) {
            return std::nullopt;
        }
        return it->second;
    }
    std::size_t size() const { return map_.size(); }

private:
    std::map<Word, std::size_t> map_;
};

/// Matrix whose c-th column holds the coefficients of columns[c]; rows are
/// words in order of first appearance. Words already in `index` keep their
/// rows, so a right-hand side can be registered first.
inline Matrix columns_matrix(const std::vector<Polynomial>& columns, WordIndex& index)
{
    for (const auto& p : columns) {
        for (const auto& [w, c] : p) {
            index.index(w);
        }
    }
    Matrix m(index.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (const auto& [w, coeff] : columns[c]) {
            m(*index.find(w), c) = coeff;
        }
    }
    return m;
}

inline std::size_t rank_of(const std::vector<Polynomial>& ps)
{
    WordIndex index;
    return rank(columns_matrix(ps, index));
}

} // namespace kvlie
