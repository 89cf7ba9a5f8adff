#pragma once

#include <array>
#include <cstddef>

#include "l2betti/rational_matrix.hpp"

namespace l2betti {

// A nonzero X x 2 matrix A and nonzero 2 x Y matrix B over the rationals
// with AB = 0. Such a pair forces rank A = rank B = 1, and the sequence
// ,X -> U^2 -> ,Y it defines is exact at U^2 with an explicit basis.
struct TwoColumnFactorization {
    RationalMatrix A;  // X x 2
    RationalMatrix B;  // 2 x Y

    void validate() const;  // throws PreconditionError
};

// Basis of the rank-2 module adapted to the factorization: v1 spans
// ker B = im A, and B is injective on the span of v2. pivot_row is the
// index of the nonzero row of A copied into v1; pivot_col the column
// giving the invertible entry of B's first row in working coordinates.
// When the first row of B vanishes identically the two coordinates are
// swapped throughout the construction and swapped is set; the returned
// vectors are always expressed in the original coordinates.
struct TwoColumnBasis {
    std::array<Rational, 2> v1;
    std::array<Rational, 2> v2;
    std::size_t pivot_row = 0;  // x0
    std::size_t pivot_col = 0;  // y0, in working coordinates of B's first row
    bool swapped = false;
};

TwoColumnBasis two_column_basis(const TwoColumnFactorization& f);

// Independent of the construction: det(v1;v2) != 0, v1 B = 0, every row of
// A is a multiple of v1, v2 B != 0, rank B = 1.
bool two_column_verify(const TwoColumnFactorization& f,
                       const std::array<Rational, 2>& v1,
                       const std::array<Rational, 2>& v2);

} // namespace l2betti
