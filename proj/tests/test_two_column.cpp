#include <doctest.h>

#include "l2betti/errors.hpp"
#include "l2betti/two_column.hpp"
#include "support/generators.hpp"
#include "support/naive.hpp"

using namespace l2betti;
using namespace l2betti::testing;

namespace {

RationalMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = rows.begin()->size();
    RationalMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

// rank-1 B from an outer product, A with rows along the left kernel of B
TwoColumnFactorization random_factorization(Rng& rng, bool force_swapped = false) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const std::size_t nx = dim(rng), ny = dim(rng);
    Rational u0, u1;
    do {
        u0 = force_swapped ? Rational(0) : random_rational(rng);
        u1 = random_rational(rng);
    } while (u0 == 0 && u1 == 0);
    RationalMatrix b(2, ny);
    bool b_nonzero = false;
    while (!b_nonzero) {
        for (std::size_t y = 0; y < ny; ++y) {
            const Rational wy = random_rational(rng);
            b(0, y) = u0 * wy;
            b(1, y) = u1 * wy;
            if (b(0, y) != 0 || b(1, y) != 0) b_nonzero = true;
        }
    }
    // (u1, -u0) spans the left kernel of b
    RationalMatrix a(nx, 2);
    bool a_nonzero = false;
    while (!a_nonzero) {
        for (std::size_t x = 0; x < nx; ++x) {
            const Rational lambda = random_rational(rng);
            a(x, 0) = lambda * u1;
            a(x, 1) = -lambda * u0;
            if (a(x, 0) != 0 || a(x, 1) != 0) a_nonzero = true;
        }
    }
    return TwoColumnFactorization{std::move(a), std::move(b)};
}

} // namespace

TEST_CASE("kernel basis on the smallest example") {
    const TwoColumnFactorization f{from_rows({{1, 1}}), from_rows({{1}, {-1}})};
    const auto basis = two_column_basis(f);
    CHECK(basis.v1 == std::array<Rational, 2>{Rational(1), Rational(1)});
    CHECK(basis.v2 == std::array<Rational, 2>{Rational(1), Rational(0)});
    CHECK_FALSE(basis.swapped);
    CHECK(two_column_verify(f, basis.v1, basis.v2));
}

TEST_CASE("kernel basis on a taller instance") {
    const TwoColumnFactorization f{from_rows({{2, 4}, {1, 2}}), from_rows({{-2, -6}, {1, 3}})};
    const auto basis = two_column_basis(f);
    CHECK(basis.v1 == std::array<Rational, 2>{Rational(2), Rational(4)});
    CHECK(rank(f.B) == 1);
    const auto kernel = naive_left_kernel(f.B);
    REQUIRE(kernel.size() == 1);
    // the oracle kernel line is parallel to v1
    CHECK(kernel[0][0] * basis.v1[1] - kernel[0][1] * basis.v1[0] == 0);
    CHECK(two_column_verify(f, basis.v1, basis.v2));
}

TEST_CASE("degenerate inputs are rejected") {
    const TwoColumnFactorization zero_a{RationalMatrix(2, 2), from_rows({{1}, {0}})};
    CHECK_THROWS_AS(zero_a.validate(), PreconditionError);
    const TwoColumnFactorization zero_b{from_rows({{1, 0}}), RationalMatrix(2, 3)};
    CHECK_THROWS_AS(zero_b.validate(), PreconditionError);
    const TwoColumnFactorization nonzero_product{from_rows({{1, 0}}), from_rows({{1}, {0}})};
    CHECK_THROWS_AS(nonzero_product.validate(), PreconditionError);
    const TwoColumnFactorization bad_shape{from_rows({{1, 0, 0}}), from_rows({{1}, {0}})};
    CHECK_THROWS_AS(bad_shape.validate(), PreconditionError);
}

TEST_CASE("verification rejects a wrong basis") {
    const TwoColumnFactorization f{from_rows({{1, 1}}), from_rows({{1}, {-1}})};
    const auto basis = two_column_basis(f);
    CHECK_FALSE(two_column_verify(f, basis.v2, basis.v2));
    CHECK_FALSE(two_column_verify(f, basis.v2, basis.v1));
}

TEST_CASE("randomized factorizations satisfy every postcondition") {
    Rng rng(17001);
    int swapped_seen = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto f = random_factorization(rng, i % 10 == 9);
        const auto basis = two_column_basis(f);
        CHECK(two_column_verify(f, basis.v1, basis.v2));

        // v1 is the pivot row of A
        CHECK(basis.v1[0] == f.A(basis.pivot_row, 0));
        CHECK(basis.v1[1] == f.A(basis.pivot_row, 1));

        // the nullspace oracle confirms ker B = span(v1)
        const auto kernel = naive_left_kernel(f.B);
        REQUIRE(kernel.size() == 1);
        CHECK(kernel[0][0] * basis.v1[1] - kernel[0][1] * basis.v1[0] == 0);

        if (basis.swapped) {
            ++swapped_seen;
            // in working coordinates the pivot row's second entry is its first
            CHECK(f.A(basis.pivot_row, 0) != 0);
            CHECK(f.B(1, basis.pivot_col) != 0);
        } else {
            // pivot identity: A(x0,0) = -A(x0,1) B(1,y0) / B(0,y0)
            const Rational b1 = f.B(0, basis.pivot_col);
            REQUIRE(b1 != 0);
            CHECK(basis.v1[0] == -basis.v1[1] * f.B(1, basis.pivot_col) / b1);
            CHECK(basis.v1[1] != 0);  // the second pivot-row entry cannot vanish
        }
    }
    CHECK(swapped_seen > 0);
}
