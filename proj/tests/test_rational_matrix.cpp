#include <doctest.h>

#include "l2betti/rational_matrix.hpp"
#include "support/generators.hpp"
#include "support/naive.hpp"

using namespace l2betti;
using namespace l2betti::testing;

TEST_CASE("rank of identity and zero") {
    for (std::size_t n : {1u, 3u, 7u}) {
        CHECK(rank(RationalMatrix::identity(n)) == n);
        CHECK(rank(RationalMatrix(n, n)) == 0);
    }
    CHECK(rank(RationalMatrix(0, 4)) == 0);
}

TEST_CASE("bareiss rank agrees with naive gaussian elimination") {
    Rng rng(15001);
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    for (int i = 0; i < 400; ++i) {
        const RationalMatrix m = random_matrix(rng, dim(rng), dim(rng));
        CHECK(rank(m) == naive_rank(m));
    }
    // sparse matrices exercise the column-skipping path
    std::uniform_int_distribution<int> coin(0, 4);
    for (int i = 0; i < 400; ++i) {
        RationalMatrix m(dim(rng), dim(rng));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (coin(rng) == 0) m(r, c) = random_rational(rng);
        CHECK(rank(m) == naive_rank(m));
    }
}

TEST_CASE("rank of a product is bounded by the inner dimension") {
    Rng rng(15002);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int i = 0; i < 200; ++i) {
        const std::size_t inner = dim(rng);
        const RationalMatrix a = random_matrix(rng, dim(rng), inner);
        const RationalMatrix b = random_matrix(rng, inner, dim(rng));
        const RationalMatrix p = a * b;
        const std::size_t r = rank(p);
        CHECK(r <= inner);
        CHECK(r == naive_rank(p));
    }
}

TEST_CASE("row space basis spans with full rank") {
    Rng rng(15003);
    for (int i = 0; i < 100; ++i) {
        const RationalMatrix m = random_matrix(rng, 4, 5);
        const RationalMatrix basis = row_space_basis(m);
        CHECK(basis.rows() == rank(m));
        CHECK(rank(basis) == basis.rows());
    }
}
