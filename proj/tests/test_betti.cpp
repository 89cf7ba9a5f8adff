#include <doctest.h>

#include <nlohmann/json.hpp>

#include "l2betti/betti.hpp"
#include "l2betti/errors.hpp"

using namespace l2betti;

namespace {

BettiValues values(long n0, long d0, long n1, long d1) {
    return BettiValues{make_rational(n0, d0), make_rational(n1, d1), Rational(0)};
}

} // namespace

TEST_CASE("one-relator formula") {
    const auto free2 = betti_one_relator(one_relator_invariants(parse_presentation("gens x y\n")));
    CHECK(free2.betti == values(0, 1, 1, 1));
    CHECK(free2.tail == "b_n = 0 for n >= 2");

    const auto cyclic = betti_one_relator(one_relator_invariants(parse_presentation("gens x\nrel x^5\n")));
    CHECK(cyclic.betti == values(1, 5, 0, 1));
    CHECK(cyclic.order == ExtNat(5));

    const auto comm2 =
        betti_one_relator(one_relator_invariants(parse_presentation("gens x y\nrel [x,y]^2\n")));
    CHECK(comm2.betti == values(0, 1, 1, 2));
    CHECK(comm2.chi == make_rational(-1, 2));
}

TEST_CASE("one-relator identities hold across a family") {
    for (const char* text : {"gens x\nrel x^9\n", "gens x y\nrel [x,y]^4\n", "gens x y z\n",
                             "gens x y\nrel x^2 y^3\n"}) {
        const auto report = betti_one_relator(one_relator_invariants(parse_presentation(text)));
        CHECK(report.betti.b0 * report.betti.b1 == 0);
        CHECK(report.betti.b0 - report.betti.b1 == *report.chi);
        CHECK(report.betti.b2 == 0);
    }
}

TEST_CASE("surface formula") {
    const auto g1 = betti_surface(surface_invariants(
        parse_presentation("gens x1 x2\nsurface 1\nrel x1^3 x2^6\n")));
    CHECK(g1.betti == values(0, 1, 0, 1));
    CHECK(g1.chi == Rational(0));
    CHECK(g1.cd == 1);
    CHECK_FALSE(g1.conditional);

    const auto g2 = betti_surface(surface_invariants(
        parse_presentation("gens x1 x2 x3 x4\nsurface 2\nrel x1\n")));
    CHECK(g2.betti == values(0, 1, 1, 1));
    CHECK(g2.cd == 2);
    CHECK(g2.conditional);  // no declaration: lower-bound exponent

    const auto g3 = betti_surface(surface_invariants(parse_presentation(
        "gens x1 x2 x3 x4 x5 x6\nsurface 3\nrel x1^2\ndeclare-root x1 2\n")));
    CHECK(g3.chi == make_rational(-7, 2));
    CHECK(g3.betti == values(0, 1, 7, 2));
    CHECK_FALSE(g3.conditional);
}

TEST_CASE("two-relator conditional path") {
    const auto flagged = parse_presentation(
        "gens x1 x2 x3 x4\nrel x1^2\nrel x2^3\nassume left-orderable\nassume cd>=3\n");
    const auto report = betti_two_relator_conditional(flagged);
    CHECK(report.betti == values(0, 1, 2, 1));
    CHECK(report.conditional);
    CHECK(report.assumptions_used.size() == 2);
    CHECK(report.tail == "b_n not determined for n >= 3");

    const auto two_gens = parse_presentation(
        "gens x y\nrel x^2\nrel y^3\nassume left-orderable\nassume cd>=3\n");
    CHECK(betti_two_relator_conditional(two_gens).betti == values(0, 1, 0, 1));

    const auto unflagged = parse_presentation("gens x y\nrel x^2\nrel y^3\n");
    CHECK_THROWS_AS(betti_two_relator_conditional(unflagged), PreconditionError);

    // one generator cannot satisfy the hypotheses in the first place
    const auto narrow = parse_presentation(
        "gens x\nrel x^2\nrel x^3\nassume left-orderable\nassume cd>=3\n");
    CHECK_THROWS_AS(betti_two_relator_conditional(narrow), PreconditionError);
}

TEST_CASE("consistency notes fire only on contradictory assertion sets") {
    const auto contradictory =
        parse_presentation("gens x y\nrel [x,y]^2\nassume left-orderable\n");
    const auto rep1 = betti_one_relator(one_relator_invariants(contradictory));
    CHECK(consistency_flags(contradictory, rep1).size() == 1);

    const auto free2 = parse_presentation("gens x y\nassume left-orderable\n");
    const auto rep2 = betti_one_relator(one_relator_invariants(free2));
    CHECK(consistency_flags(free2, rep2).empty());

    const auto commutator = parse_presentation("gens x y\nrel [x,y]\nassume left-orderable\n");
    const auto rep3 = betti_one_relator(one_relator_invariants(commutator));
    CHECK(consistency_flags(commutator, rep3).empty());
}

TEST_CASE("known-group registry") {
    const auto report = known_group("thompson-F");
    CHECK(report.betti == values(0, 1, 0, 1));
    CHECK(report.betti.b0 == 0);
    CHECK(report.tail == "b_n = 0 for all n");
    CHECK_THROWS_AS(known_group("unknown"), PreconditionError);

    // serialization round-trip: dump, parse, dump again byte-identically
    const auto j = report_to_json(report);
    const std::string once = j.dump(2);
    CHECK(nlohmann::ordered_json::parse(once).dump(2) == once);
}

TEST_CASE("cross-validation against the finite oracle") {
    const auto p5 = parse_presentation("gens x\nrel x^5\n");
    const auto rep5 = betti_one_relator(one_relator_invariants(p5));
    const auto outcome5 = cross_validate(p5, rep5);
    CHECK(outcome5.pass);
    CHECK(outcome5.oracle == values(1, 5, 0, 1));

    const auto trivial = parse_presentation("gens x\nrel x\n");
    const auto rept = betti_one_relator(one_relator_invariants(trivial));
    const auto outcomet = cross_validate(trivial, rept);
    CHECK(outcomet.pass);
    CHECK(outcomet.oracle == values(1, 1, 0, 1));

    // negative control: a corrupted complex must fail
    auto spec = build_one_relator_complex(p5);
    spec.boundaries[1].at(0, 0) =
        GroupRingElement::from_word(parse_word("x", p5.alphabet)) + GroupRingElement::one(p5.alphabet);
    const FiniteCyclicModel model{p5.alphabet, 5, {1}};
    const auto bad = cross_validate_complex(spec, model, rep5.betti);
    CHECK_FALSE(bad.pass);
}

TEST_CASE("infinite groups cannot be cross-validated") {
    const auto p = parse_presentation("gens x y\nrel [x,y]\n");
    const auto rep = betti_one_relator(one_relator_invariants(p));
    CHECK_THROWS_AS(cross_validate(p, rep), PreconditionError);
}

TEST_CASE("report serialization shape") {
    const auto p = parse_presentation("gens x\nrel x^5\n");
    auto report = betti_one_relator(one_relator_invariants(p));
    report.verification = cross_validate(p, report);
    const auto j = report_to_json(report);
    CHECK(j.at("classification") == "one-relator");
    CHECK(j.at("chi") == "1/5");
    CHECK(j.at("order") == "finite:5");
    CHECK(j.at("betti").at("b0") == "1/5");
    CHECK(j.at("m").at("value") == 5);
    CHECK(j.at("verification").at("pass") == true);
    CHECK_FALSE(j.contains("g"));
}
