#pragma once

// Seeded random data for the property suites. Everything is deterministic
// given the engine state handed in by the test.

#include <random>
#include <string>
#include <vector>

#include "l2betti/group_ring.hpp"
#include "l2betti/rational_matrix.hpp"
#include "l2betti/words.hpp"

namespace l2betti::testing {

using Rng = std::mt19937;

inline AlphabetPtr test_alphabet(std::size_t n = 2) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    return make_alphabet(std::move(names));
}

inline std::vector<Letter> random_letters(Rng& rng, const AlphabetPtr& alphabet, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> gen(0, alphabet->size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Letter> letters(len(rng));
    for (Letter& l : letters) l = Letter{gen(rng), sign(rng) ? 1 : -1};
    return letters;
}

inline Word random_word(Rng& rng, const AlphabetPtr& alphabet, std::size_t max_len) {
    return Word::reduce(alphabet, random_letters(rng, alphabet, max_len));
}

// Reduced word of exactly the requested length (no cancelling neighbours).
inline Word random_reduced_word(Rng& rng, const AlphabetPtr& alphabet, std::size_t length) {
    std::uniform_int_distribution<std::size_t> gen(0, alphabet->size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Letter> letters;
    while (letters.size() < length) {
        const Letter l{gen(rng), sign(rng) ? 1 : -1};
        if (!letters.empty() && cancels(letters.back(), l)) continue;
        letters.push_back(l);
    }
    return Word::reduce(alphabet, letters);
}

inline GroupRingElement random_ring_element(Rng& rng, const AlphabetPtr& alphabet,
                                            std::size_t max_terms, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> terms(0, max_terms);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    GroupRingElement a(alphabet);
    const std::size_t n = terms(rng);
    for (std::size_t i = 0; i < n; ++i)
        a.add_term(random_word(rng, alphabet, max_len), make_rational(num(rng), den(rng)));
    return a;
}

inline Rational random_rational(Rng& rng, long max_num = 4, long max_den = 3) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

inline RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng);
    return m;
}

} // namespace l2betti::testing
