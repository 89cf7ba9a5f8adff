#include "l2betti/two_column.hpp"

#include "l2betti/errors.hpp"

namespace l2betti {

void TwoColumnFactorization::validate() const {
    if (A.cols() != 2 || B.rows() != 2)
        throw PreconditionError("factorization needs A with two columns and B with two rows");
    if (A.rows() == 0 || B.cols() == 0)
        throw PreconditionError("factorization needs nonempty index sets");
    if (A.is_zero()) throw PreconditionError("A must be nonzero");
    if (B.is_zero()) throw PreconditionError("B must be nonzero");
    if (!(A * B).is_zero()) throw PreconditionError("A B must be the zero matrix");
}

TwoColumnBasis two_column_basis(const TwoColumnFactorization& f) {
    f.validate();
    TwoColumnBasis basis;

    // working coordinates: swap the two module coordinates when the first
    // row of B has no nonzero entry (B nonzero forces one in the second)
    bool found = false;
    for (std::size_t y = 0; y < f.B.cols() && !found; ++y)
        if (f.B(0, y) != 0) {
            basis.pivot_col = y;
            found = true;
        }
    if (!found) {
        basis.swapped = true;
        for (std::size_t y = 0; y < f.B.cols(); ++y)
            if (f.B(1, y) != 0) {
                basis.pivot_col = y;
                break;
            }
    }

    for (std::size_t x = 0; x < f.A.rows(); ++x)
        if (f.A(x, 0) != 0 || f.A(x, 1) != 0) {
            basis.pivot_row = x;
            break;
        }

    // v1 is the chosen nonzero row of A; v2 the working-coordinate unit
    // vector (1, 0), expressed here in the original coordinates
    basis.v1 = {f.A(basis.pivot_row, 0), f.A(basis.pivot_row, 1)};
    basis.v2 = basis.swapped ? std::array<Rational, 2>{Rational(0), Rational(1)}
                             : std::array<Rational, 2>{Rational(1), Rational(0)};
    return basis;
}

bool two_column_verify(const TwoColumnFactorization& f,
                       const std::array<Rational, 2>& v1,
                       const std::array<Rational, 2>& v2) {
    // (i) v1, v2 is a basis of the rank-2 module
    if (v1[0] * v2[1] - v1[1] * v2[0] == 0) return false;

    // (ii) v1 B = 0
    for (std::size_t y = 0; y < f.B.cols(); ++y)
        if (v1[0] * f.B(0, y) + v1[1] * f.B(1, y) != 0) return false;

    // (iii) every row of A is a scalar multiple of v1
    for (std::size_t x = 0; x < f.A.rows(); ++x)
        if (f.A(x, 0) * v1[1] - f.A(x, 1) * v1[0] != 0) return false;

    // (iv) B is injective on the span of v2
    bool nonzero = false;
    for (std::size_t y = 0; y < f.B.cols(); ++y)
        if (v2[0] * f.B(0, y) + v2[1] * f.B(1, y) != 0) nonzero = true;
    if (!nonzero) return false;

    // (v) rank B = 1
    return rank(f.B) == 1;
}

} // namespace l2betti
