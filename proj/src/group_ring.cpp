#include "l2betti/group_ring.hpp"

#include <stdexcept>

#include "l2betti/errors.hpp"

namespace l2betti {

namespace {

void require_same_alphabet(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.alphabet() == b.alphabet() || *a.alphabet() == *b.alphabet()) return;
    throw std::invalid_argument("alphabet mismatch in group ring operation");
}

} // namespace

GroupRingElement::GroupRingElement(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
    if (!alphabet_) throw std::invalid_argument("group ring element without alphabet");
}

GroupRingElement GroupRingElement::zero(AlphabetPtr alphabet) {
    return GroupRingElement(std::move(alphabet));
}

GroupRingElement GroupRingElement::one(AlphabetPtr alphabet) {
    GroupRingElement e(alphabet);
    e.add_term(Word(alphabet), Rational(1));
    return e;
}

GroupRingElement GroupRingElement::from_word(const Word& w, const Rational& coeff) {
    GroupRingElement e(w.alphabet());
    e.add_term(w, coeff);
    return e;
}

Rational GroupRingElement::coefficient(const Word& w) const {
    const auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupRingElement::add_term(const Word& w, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

bool GroupRingElement::operator==(const GroupRingElement& other) const {
    if (!(alphabet_ == other.alphabet_ || *alphabet_ == *other.alphabet_)) return false;
    return terms_ == other.terms_;
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
    require_same_alphabet(a, b);
    GroupRingElement sum = a;
    for (const auto& [w, c] : b.terms()) sum.add_term(w, c);
    return sum;
}

GroupRingElement operator-(const GroupRingElement& a) {
    GroupRingElement neg(a.alphabet());
    for (const auto& [w, c] : a.terms()) neg.add_term(w, -c);
    return neg;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
    return a + (-b);
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    require_same_alphabet(a, b);
    GroupRingElement prod(a.alphabet());
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms())
            prod.add_term(u * v, cu * cv);
    return prod;
}

GroupRingElement operator*(const Rational& s, const GroupRingElement& a) {
    GroupRingElement scaled(a.alphabet());
    for (const auto& [w, c] : a.terms()) scaled.add_term(w, s * c);
    return scaled;
}

Rational augmentation(const GroupRingElement& a) {
    Rational sum(0);
    for (const auto& [w, c] : a.terms()) sum += c;
    return sum;
}

Rational trace(const GroupRingElement& a) {
    return a.coefficient(Word(a.alphabet()));
}

GroupRingElement fox_derivative(const Word& r, std::size_t gen) {
    if (gen >= r.alphabet()->size())
        throw std::invalid_argument("fox derivative with respect to a generator outside the alphabet");
    GroupRingElement d(r.alphabet());
    Word prefix(r.alphabet());
    for (const Letter& l : r.letters()) {
        if (l.sign > 0 && l.gen == gen) d.add_term(prefix, Rational(1));
        prefix = prefix * Word::generator(r.alphabet(), l.gen, l.sign);
        if (l.sign < 0 && l.gen == gen) d.add_term(prefix, Rational(-1));
    }
    return d;
}

GroupRingElement fox_power_factorization(const Word& q, unsigned long m, std::size_t gen) {
    if (m == 0) throw std::invalid_argument("power factorization needs m >= 1");
    GroupRingElement geometric(q.alphabet());
    Word qi(q.alphabet());
    for (unsigned long i = 0; i < m; ++i) {
        geometric.add_term(qi, Rational(1));
        qi = qi * q;
    }
    return geometric * fox_derivative(q, gen);
}

bool Idempotent::operator==(const Idempotent& other) const {
    return order == other.order && root == other.root && element == other.element;
}

Idempotent make_idempotent(const Word& c, unsigned long m) {
    if (c.empty()) throw PreconditionError("idempotent root must be nontrivial");
    if (m == 0) throw PreconditionError("idempotent order must be positive");
    GroupRingElement sum(c.alphabet());
    Word ci(c.alphabet());
    for (unsigned long i = 0; i < m; ++i) {
        sum.add_term(ci, Rational(1));
        ci = ci * c;
    }
    return Idempotent{m, c, make_rational(1, static_cast<long>(m)) * sum};
}

} // namespace l2betti
