#pragma once

// Independent reference implementations used only as test oracles. These
// deliberately avoid the production code paths they are checking.

#include <cstddef>
#include <vector>

#include "l2betti/group_ring.hpp"
#include "l2betti/rational_matrix.hpp"
#include "l2betti/words.hpp"

namespace l2betti::testing {

// Free reduction by repeatedly scanning for the first cancelling pair.
inline std::vector<Letter> naive_reduce(std::vector<Letter> letters) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
            if (cancels(letters[i], letters[i + 1])) {
                letters.erase(letters.begin() + static_cast<long>(i),
                              letters.begin() + static_cast<long>(i) + 2);
                changed = true;
                break;
            }
        }
    }
    return letters;
}

// Exponent by testing every divisor of the cyclic core length via explicit
// prefix repetition, keeping the maximum that works (no early exit).
inline unsigned long brute_force_exponent(const Word& r) {
    const CyclicDecomposition dec = cyclic_reduce(r);
    const auto& core = dec.core.word().letters();
    const std::size_t n = core.size();
    unsigned long best = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        const std::size_t p = n / m;
        bool repeats = true;
        for (std::size_t i = 0; i < n && repeats; ++i)
            if (core[i] != core[i % p]) repeats = false;
        if (repeats && m > best) best = m;
    }
    return best;
}

// Rank by plain rational Gaussian elimination with division.
inline std::size_t naive_rank(const RationalMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[pivot], a[r]);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

// Nullspace basis of { x : x B = 0 } for a 2 x Y matrix B of rank 1.
inline std::vector<std::array<Rational, 2>> naive_left_kernel(const RationalMatrix& b) {
    // x B = 0 means x is orthogonal to every column (b0y, b1y)
    std::vector<std::array<Rational, 2>> basis;
    // find one nonzero column; the kernel is its perpendicular line
    for (std::size_t y = 0; y < b.cols(); ++y) {
        if (b(0, y) == 0 && b(1, y) == 0) continue;
        basis.push_back({-b(1, y), b(0, y)});
        break;
    }
    if (basis.empty()) {
        basis.push_back({Rational(1), Rational(0)});
        basis.push_back({Rational(0), Rational(1)});
        return basis;
    }
    // confirm the candidate kills every column; rank 2 would leave nothing
    for (std::size_t y = 0; y < b.cols(); ++y)
        if (basis[0][0] * b(0, y) + basis[0][1] * b(1, y) != 0) return {};
    return basis;
}

// Fox derivative evaluated on a raw, possibly unreduced letter sequence by
// the product rule, one letter at a time.
inline GroupRingElement raw_fox_derivative(const AlphabetPtr& alphabet,
                                           const std::vector<Letter>& letters,
                                           std::size_t gen) {
    GroupRingElement d(alphabet);
    Word prefix(alphabet);
    for (const Letter& l : letters) {
        if (l.sign > 0 && l.gen == gen) d.add_term(prefix, Rational(1));
        prefix = prefix * Word::generator(alphabet, l.gen, l.sign);
        if (l.sign < 0 && l.gen == gen) d.add_term(prefix, Rational(-1));
    }
    return d;
}

} // namespace l2betti::testing
