#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "l2betti/rational.hpp"

namespace l2betti {

// A natural number extended with a single point at infinity. Carries
// exponents, group orders and alphabet sizes uniformly.
class ExtNat {
public:
    ExtNat() : value_(0) {}
    ExtNat(unsigned long v) : value_(v) {}  // NOLINT: implicit by design
    static ExtNat infinity() { ExtNat n; n.value_.reset(); return n; }

    bool finite() const { return value_.has_value(); }
    unsigned long value() const;  // precondition: finite()

    friend bool operator==(const ExtNat&, const ExtNat&) = default;

private:
    std::optional<unsigned long> value_;  // nullopt encodes infinity
};

// 1/n, with 1/inf = 0. Precondition: n != 0 when finite.
Rational reciprocal_or_zero(const ExtNat& n);

std::string to_string(const ExtNat& n);  // "5" or "inf"

// Ordered finite set of generator names. Immutable once shared; words keep
// a shared handle so that cross-alphabet operations can be rejected.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);  // validates names

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    // True for a nonempty token free of whitespace and grammar punctuation.
    static bool valid_name(std::string_view name);

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

// A generator or its inverse. gen indexes into the alphabet.
struct Letter {
    std::size_t gen = 0;
    int sign = 1;  // +1 or -1

    Letter inverse() const { return {gen, -sign}; }
    friend bool operator==(const Letter&, const Letter&) = default;
    friend std::strong_ordering operator<=>(const Letter& a, const Letter& b);
};

inline bool cancels(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.sign == -b.sign;
}

// Freely reduced word over a fixed alphabet. The letter sequence is the
// canonical form; equality is structural.
class Word {
public:
    explicit Word(AlphabetPtr alphabet);

    // Free reduction of an arbitrary letter sequence (stack scan).
    static Word reduce(AlphabetPtr alphabet, const std::vector<Letter>& raw);

    static Word generator(AlphabetPtr alphabet, std::size_t gen, int sign = 1);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    bool operator==(const Word& other) const;

private:
    AlphabetPtr alphabet_;
    std::vector<Letter> letters_;
};

// Strict weak order: length first, then letterwise (gen index, then sign
// with the positive letter preceding its inverse). This is also the
// canonical serialization order of group-ring terms.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const;
};

bool same_alphabet(const Word& a, const Word& b);

Word operator*(const Word& u, const Word& v);  // throws on alphabet mismatch
Word inverse(const Word& w);
Word power(const Word& w, long k);

// Cyclically reduced word (first and last letters are not mutually
// inverse). Constructed only through cyclic_reduce.
class CyclicWord {
public:
    const Word& word() const { return word_; }
    std::size_t size() const { return word_.size(); }

    friend CyclicWord make_cyclic(Word w);  // validates the invariant

private:
    explicit CyclicWord(Word w) : word_(std::move(w)) {}
    Word word_;
};

CyclicWord make_cyclic(Word w);

struct CyclicDecomposition {
    Word conjugator;
    CyclicWord core;  // w = conjugator * core * conjugator^-1
};

CyclicDecomposition cyclic_reduce(const Word& w);

// Largest m with r = q^m in the free group; infinity exactly for r = 1.
ExtNat exponent(const Word& r);

struct RootDecomposition {
    Word base;      // not a proper power
    ExtNat multiplicity;
};

RootDecomposition root(const Word& r);  // precondition: r nonempty

// Abelianization image: signed letter counts per generator.
std::vector<long> exponent_sums(const Word& w);

// Word literal grammar: juxtaposed atoms, atom = generator name or
// bracketed commutator [u,v] = u v u^-1 v^-1, each optionally followed by
// ^k for a nonzero signed integer; whitespace ignored. Generator names are
// matched greedily against the alphabet.
Word parse_word(std::string_view text, AlphabetPtr alphabet);

// Inverse of parse_word up to run collapsing: atoms joined by single
// spaces, repeated letters collapsed to name^k. Empty word prints as "".
std::string to_string(const Word& w);

} // namespace l2betti
