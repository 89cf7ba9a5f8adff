#pragma once

#include <map>
#include <string>

#include "l2betti/rational.hpp"
#include "l2betti/words.hpp"

namespace l2betti {

// Finite formal rational combination of freely reduced words: an element
// of the rational group ring of the free group on the alphabet. Zero
// coefficients are never stored; term order follows WordOrder.
class GroupRingElement {
public:
    explicit GroupRingElement(AlphabetPtr alphabet);
    static GroupRingElement zero(AlphabetPtr alphabet);
    static GroupRingElement one(AlphabetPtr alphabet);
    static GroupRingElement from_word(const Word& w, const Rational& coeff = Rational(1));

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::map<Word, Rational, WordOrder>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Word& w) const;

    void add_term(const Word& w, const Rational& coeff);

    bool operator==(const GroupRingElement& other) const;

private:
    AlphabetPtr alphabet_;
    std::map<Word, Rational, WordOrder> terms_;
};

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator-(const GroupRingElement& a);
GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator*(const Rational& s, const GroupRingElement& a);

// Sum of coefficients; the ring map onto the rationals sending every word to 1.
Rational augmentation(const GroupRingElement& a);

// Coefficient of the empty word.
Rational trace(const GroupRingElement& a);

// Left Fox derivative with respect to the generator at index gen:
// d(x)/dx = 1, d(y)/dx = 0, d(uv)/dx = du/dx + u dv/dx, so d(x^-1)/dx = -x^-1.
GroupRingElement fox_derivative(const Word& r, std::size_t gen);

// (1 + q + ... + q^(m-1)) * dq/dx, the factored form of d(q^m)/dx.
GroupRingElement fox_power_factorization(const Word& q, unsigned long m, std::size_t gen);

// e = (1/m) (1 + c + ... + c^(m-1)). Idempotent modulo any relation making
// the image of c an element of order m; in the free group ring it merely
// satisfies trace(e) = 1/m.
struct Idempotent {
    unsigned long order = 1;   // m
    Word root;                 // c, nontrivial
    GroupRingElement element;

    bool operator==(const Idempotent& other) const;
};

Idempotent make_idempotent(const Word& c, unsigned long m);

} // namespace l2betti
