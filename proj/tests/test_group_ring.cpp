#include <doctest.h>

#include "l2betti/errors.hpp"
#include "l2betti/group_ring.hpp"
#include "support/generators.hpp"
#include "support/naive.hpp"

using namespace l2betti;
using namespace l2betti::testing;

namespace {

Word w(const AlphabetPtr& a, const char* literal) { return parse_word(literal, a); }

GroupRingElement term(const AlphabetPtr& a, const char* literal, long num = 1, long den = 1) {
    return GroupRingElement::from_word(parse_word(literal, a), make_rational(num, den));
}

} // namespace

TEST_CASE("ring basics") {
    const auto a = test_alphabet(2);
    CHECK(term(a, "x1") * term(a, "x1^-1") == GroupRingElement::one(a));
    const auto one = GroupRingElement::one(a);
    CHECK((one + term(a, "x1")) * (one - term(a, "x1")) == one - term(a, "x1^2"));
    CHECK((term(a, "x1") - term(a, "x1")).is_zero());
}

TEST_CASE("ring axioms on random triples") {
    const auto a = test_alphabet(2);
    Rng rng(13001);
    for (int i = 0; i < 120; ++i) {
        const auto x = random_ring_element(rng, a, 4, 8);
        const auto y = random_ring_element(rng, a, 4, 8);
        const auto z = random_ring_element(rng, a, 4, 8);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) * z == x * z + y * z);
        CHECK((x * y) * z == x * (y * z));
        CHECK(GroupRingElement::one(a) * x == x);
        CHECK(x * GroupRingElement::one(a) == x);
    }
}

TEST_CASE("augmentation is a ring map onto the rationals") {
    const auto a = test_alphabet(2);
    CHECK(augmentation(term(a, "x1") - GroupRingElement::one(a)) == 0);
    CHECK(augmentation(make_idempotent(w(a, "x1"), 4).element) == 1);
    Rng rng(13002);
    for (int i = 0; i < 200; ++i) {
        const auto x = random_ring_element(rng, a, 4, 8);
        const auto y = random_ring_element(rng, a, 4, 8);
        CHECK(augmentation(x * y) == augmentation(x) * augmentation(y));
        CHECK(augmentation(x + y) == augmentation(x) + augmentation(y));
    }
}

TEST_CASE("trace picks the identity coefficient") {
    const auto a = test_alphabet(2);
    CHECK(trace(term(a, "x1")) == 0);
    for (unsigned long m = 1; m <= 6; ++m)
        CHECK(trace(make_idempotent(w(a, "x1"), m).element) == make_rational(1, static_cast<long>(m)));
    Rng rng(13003);
    for (int i = 0; i < 200; ++i) {
        const auto x = random_ring_element(rng, a, 4, 8);
        const auto y = random_ring_element(rng, a, 4, 8);
        CHECK(trace(x + y) == trace(x) + trace(y));
    }
}

TEST_CASE("fox derivative rules") {
    const auto a = test_alphabet(2);
    CHECK(fox_derivative(w(a, "x1"), 0) == GroupRingElement::one(a));
    CHECK(fox_derivative(w(a, "x2"), 0).is_zero());
    CHECK(fox_derivative(w(a, "x1^-1"), 0) == -term(a, "x1^-1"));
    CHECK_THROWS_AS(fox_derivative(w(a, "x1"), 5), std::invalid_argument);
}

TEST_CASE("fox derivative of the surface relator") {
    const auto a = make_alphabet({"x1", "x2", "x3", "x4"});
    const Word r1 = w(a, "[x1,x2][x3,x4]");
    CHECK(fox_derivative(r1, 0) == GroupRingElement::one(a) - term(a, "x1 x2 x1^-1"));
    CHECK(fox_derivative(r1, 1) == term(a, "x1") - term(a, "[x1,x2]"));
}

TEST_CASE("fundamental identity on random words") {
    const auto a = test_alphabet(3);
    Rng rng(13004);
    for (int i = 0; i < 1000; ++i) {
        const Word r = random_word(rng, a, 50);
        GroupRingElement sum(a);
        for (std::size_t g = 0; g < a->size(); ++g)
            sum = sum + fox_derivative(r, g) *
                            (GroupRingElement::from_word(Word::generator(a, g)) - GroupRingElement::one(a));
        CHECK(sum == GroupRingElement::from_word(r) - GroupRingElement::one(a));
    }
}

TEST_CASE("fox derivative is invariant under free reduction of the input") {
    const auto a = test_alphabet(2);
    Rng rng(13005);
    for (int i = 0; i < 200; ++i) {
        const auto raw = random_letters(rng, a, 30);
        const Word reduced = Word::reduce(a, raw);
        for (std::size_t g = 0; g < a->size(); ++g)
            CHECK(raw_fox_derivative(a, raw, g) == fox_derivative(reduced, g));
    }
}

TEST_CASE("power factorization equals the direct derivative") {
    const auto a = test_alphabet(2);
    CHECK(fox_power_factorization(w(a, "x1"), 3, 0) ==
          GroupRingElement::one(a) + term(a, "x1") + term(a, "x1^2"));
    CHECK(fox_power_factorization(w(a, "x1 x2"), 2, 0) == GroupRingElement::one(a) + term(a, "x1 x2"));

    Rng rng(13006);
    for (int i = 0; i < 150; ++i) {
        const Word q = random_word(rng, a, 10);
        const unsigned long m = 1 + i % 5;
        for (std::size_t g = 0; g < a->size(); ++g)
            CHECK(fox_power_factorization(q, m, g) ==
                  fox_derivative(power(q, static_cast<long>(m)), g));
    }
}

TEST_CASE("augmentation of a fox derivative is the exponent sum") {
    const auto a = test_alphabet(3);
    Rng rng(13007);
    for (int i = 0; i < 200; ++i) {
        const Word r = random_word(rng, a, 30);
        const auto sums = exponent_sums(r);
        for (std::size_t g = 0; g < a->size(); ++g)
            CHECK(augmentation(fox_derivative(r, g)) == Rational(sums[g]));
    }
}

TEST_CASE("idempotent construction") {
    const auto a = test_alphabet(2);
    CHECK(make_idempotent(w(a, "x1"), 1).element == GroupRingElement::one(a));
    const auto e3 = make_idempotent(w(a, "x1"), 3);
    CHECK(e3.element == make_rational(1, 3) * (GroupRingElement::one(a) + term(a, "x1") + term(a, "x1^2")));
    CHECK(trace(e3.element) == make_rational(1, 3));
    const auto exy = make_idempotent(w(a, "x1 x2"), 2);
    CHECK(exy.element == make_rational(1, 2) * (GroupRingElement::one(a) + term(a, "x1 x2")));
    CHECK(exy.element.term_count() == 2);
    CHECK_THROWS_AS(make_idempotent(Word(a), 2), PreconditionError);
}

TEST_CASE("group ring rejects mixed alphabets") {
    const auto a = test_alphabet(2);
    const auto b = make_alphabet({"y1"});
    CHECK_THROWS_AS((void)(GroupRingElement::one(a) + GroupRingElement::one(b)), std::invalid_argument);
    CHECK_THROWS_AS((void)(GroupRingElement::one(a) * GroupRingElement::one(b)), std::invalid_argument);
}
