#pragma once

#include <cstddef>
#include <vector>

#include "l2betti/rational.hpp"

namespace l2betti {

// Dense exact-rational matrix. Sizes in this project stay small (at most a
// few hundred entries), so no sparsity or pivot heuristics are needed.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j);
    const Rational& operator()(std::size_t i, std::size_t j) const;

    bool is_zero() const;

    bool operator==(const RationalMatrix& other) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> entries_;
};

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);

// Exact rank via fraction-free Bareiss elimination on the row-wise
// denominator-cleared integer matrix.
std::size_t rank(const RationalMatrix& m);

// Rows spanning the row space (echelon form of the nonzero rows).
RationalMatrix row_space_basis(const RationalMatrix& m);

} // namespace l2betti
