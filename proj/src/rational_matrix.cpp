#include "l2betti/rational_matrix.hpp"

#include <stdexcept>

namespace l2betti {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Rational& RationalMatrix::operator()(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return entries_[i * cols_ + j];
}

const Rational& RationalMatrix::operator()(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return entries_[i * cols_ + j];
}

bool RationalMatrix::is_zero() const {
    for (const Rational& e : entries_)
        if (e != 0) return false;
    return true;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shape mismatch in sum");
    RationalMatrix sum(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) sum(i, j) = a(i, j) + b(i, j);
    return sum;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shape mismatch in difference");
    RationalMatrix diff(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) diff(i, j) = a(i, j) - b(i, j);
    return diff;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in product");
    RationalMatrix prod(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) prod(i, j) += aik * b(k, j);
        }
    return prod;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
    RationalMatrix scaled(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) scaled(i, j) = s * a(i, j);
    return scaled;
}

std::size_t rank(const RationalMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // clear denominators row by row; row scaling preserves rank
    std::vector<mpz_class> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class scale = 1;
        for (std::size_t j = 0; j < cols; ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j)
            a[i * cols + j] = m(i, j).get_num() * (scale / m(i, j).get_den());
    }

    // fraction-free Bareiss elimination; every division below is exact
    // (Sylvester's identity on bordered minors)
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[pivot * cols + j], a[r * cols + j]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i * cols + j] = (a[i * cols + j] * a[r * cols + c] - a[i * cols + c] * a[r * cols + j]) / prev;
            a[i * cols + c] = 0;
        }
        prev = a[r * cols + c];
        ++r;
    }
    return r;
}

RationalMatrix row_space_basis(const RationalMatrix& m) {
    // plain rational row reduction, keeping the nonzero echelon rows
    std::vector<std::vector<Rational>> work(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) work[i][j] = m(i, j);

    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && work[pivot][c] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(work[pivot], work[r]);
        const Rational inv = 1 / work[r][c];
        for (std::size_t j = c; j < m.cols(); ++j) work[r][j] *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || work[i][c] == 0) continue;
            const Rational f = work[i][c];
            for (std::size_t j = c; j < m.cols(); ++j) work[i][j] -= f * work[r][j];
        }
        ++r;
    }

    RationalMatrix basis(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = work[i][j];
    return basis;
}

} // namespace l2betti
