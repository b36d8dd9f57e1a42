#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace treepoly {

using Fraction = mpq_class;

/// Dense matrix of exact fractions. mpq_class keeps every entry reduced with a
/// positive denominator.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_integers(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Fraction& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Fraction& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix transposed() const;
    RationalMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    RationalMatrix rows_permuted(const std::vector<std::size_t>& order) const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend std::vector<Fraction> operator*(const RationalMatrix& a, const std::vector<Fraction>& v);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Fraction> data_;
};

/// Determinant by Gaussian elimination over Q. Throws DomainError unless square.
Fraction mat_det(const RationalMatrix& m);

/// Solves m x = v exactly. Throws SingularMatrixError or DomainError.
std::vector<Fraction> mat_solve(const RationalMatrix& m, const std::vector<Fraction>& v);

RationalMatrix mat_inverse(const RationalMatrix& m);

std::vector<Fraction> to_fractions(const std::vector<long>& v);

} // namespace treepoly
