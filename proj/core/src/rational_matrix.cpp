#include "treepoly/rational_matrix.hpp"

#include <sstream>
#include <utility>

#include "treepoly/error.hpp"

namespace treepoly {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Fraction(0))
{
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_integers(const std::vector<std::vector<long>>& rows)
{
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc)
            throw DomainError("ragged matrix rows");
        for (std::size_t c = 0; c < nc; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

RationalMatrix RationalMatrix::transposed() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw DomainError("submatrix out of range");
    RationalMatrix s(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            s(r, c) = (*this)(r0 + r, c0 + c);
    return s;
}

RationalMatrix RationalMatrix::rows_permuted(const std::vector<std::size_t>& order) const
{
    if (order.size() != rows_)
        throw DomainError("row permutation has wrong size");
    RationalMatrix p(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            p(r, c) = (*this)(order[r], c);
    return p;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw DomainError("matrix product dimension mismatch");
    RationalMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

std::vector<Fraction> operator*(const RationalMatrix& a, const std::vector<Fraction>& v)
{
    if (a.cols_ != v.size())
        throw DomainError("matrix-vector dimension mismatch");
    std::vector<Fraction> out(a.rows_, Fraction(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            out[i] += a(i, k) * v[k];
    return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string RationalMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? ", " : "") << (*this)(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

// Reduces `m` (augmented with `rhs` columns) to row echelon form in place and
// returns the determinant of the leading square part.
Fraction eliminate(RationalMatrix& m, std::size_t n, RationalMatrix* rhs)
{
    Fraction det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(pivot, c), m(col, c));
            if (rhs)
                for (std::size_t c = 0; c < rhs->cols(); ++c)
                    std::swap((*rhs)(pivot, c), (*rhs)(col, c));
            det = -det;
        }
        const Fraction p = m(col, col);
        det *= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m(r, col) == 0)
                continue;
            const Fraction f = m(r, col) / p;
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) -= f * m(col, c);
            if (rhs)
                for (std::size_t c = 0; c < rhs->cols(); ++c)
                    (*rhs)(r, c) -= f * (*rhs)(col, c);
        }
    }
    return det;
}

void require_square(const RationalMatrix& m, const char* what)
{
    if (m.rows() != m.cols())
        throw DomainError(std::string(what) + " needs a square matrix");
}

} // namespace

Fraction mat_det(const RationalMatrix& m)
{
    require_square(m, "determinant");
    RationalMatrix work = m;
    return eliminate(work, m.rows(), nullptr);
}

RationalMatrix mat_inverse(const RationalMatrix& m)
{
    require_square(m, "inverse");
    const std::size_t n = m.rows();
    RationalMatrix work = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    if (eliminate(work, n, &inv) == 0)
        throw SingularMatrixError("matrix is singular");
    for (std::size_t r = 0; r < n; ++r) {
        const Fraction p = work(r, r);
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) /= p;
    }
    return inv;
}

std::vector<Fraction> mat_solve(const RationalMatrix& m, const std::vector<Fraction>& v)
{
    require_square(m, "solve");
    if (v.size() != m.rows())
        throw DomainError("solve: right-hand side has wrong size");
    const std::size_t n = m.rows();
    RationalMatrix work = m;
    RationalMatrix rhs(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        rhs(i, 0) = v[i];
    if (eliminate(work, n, &rhs) == 0)
        throw SingularMatrixError("matrix is singular");
    std::vector<Fraction> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = rhs(i, 0) / work(i, i);
    return x;
}

std::vector<Fraction> to_fractions(const std::vector<long>& v)
{
    return std::vector<Fraction>(v.begin(), v.end());
}

} // namespace treepoly
