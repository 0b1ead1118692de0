#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "kcob/integer.hpp"

namespace kcob {

/// Dense row-major matrix of arbitrary-precision integers. A 0x0 matrix is
/// legal and stands for the Seifert matrix of the unknot.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<Integer>& diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const std::vector<Integer>& entries() const noexcept { return entries_; }

    IntMatrix transpose() const;
    IntMatrix pow(unsigned exponent) const;
    IntMatrix submatrix(const std::vector<std::size_t>& row_idx,
                        const std::vector<std::size_t>& col_idx) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    IntMatrix& operator+=(const IntMatrix& other);
    IntMatrix& operator-=(const IntMatrix& other);
    IntMatrix& operator*=(const Integer& scalar);

    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
    friend IntMatrix operator*(IntMatrix a, const Integer& s) { return a *= s; }
    friend IntMatrix operator*(const Integer& s, IntMatrix a) { return a *= s; }
    friend IntMatrix operator-(IntMatrix a) { return a *= Integer(-1); }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Fraction-free (Bareiss) determinant; the empty matrix has determinant 1.
Integer determinant(const IntMatrix& m);

/// Inverse of a matrix with determinant +-1. Throws std::domain_error otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

}  // namespace kcob
