#include "l2betti/betti.hpp"

#include <nlohmann/json.hpp>

#include "l2betti/errors.hpp"

namespace l2betti {

namespace {

constexpr const char* kTailVanishing = "b_n = 0 for n >= 2";
constexpr const char* kTailUndetermined = "b_n not determined for n >= 3";

Rational positive_part(const Rational& x) { return x > 0 ? x : Rational(0); }

} // namespace

BettiReport betti_one_relator(const OneRelatorInvariants& inv) {
    BettiReport report;
    report.classification = to_string(Classification::Kind::OneRelator);
    report.d = inv.d;
    report.m = ExponentInfo{inv.m, ExponentStatus::ComputedExact};
    report.chi = inv.chi;
    report.order = inv.order;
    report.betti = BettiValues{positive_part(inv.chi), positive_part(-inv.chi), Rational(0)};
    report.tail = kTailVanishing;
    return report;
}

BettiReport betti_surface(const SurfaceInvariants& inv) {
    BettiReport report;
    report.classification = to_string(Classification::Kind::SurfacePlusOne);
    report.d = 2ul * inv.genus;
    report.genus = inv.genus;
    report.m = ExponentInfo{inv.m, inv.m_status};
    report.chi = inv.chi;
    report.order = inv.order;
    report.betti = BettiValues{Rational(0), -inv.chi, Rational(0)};
    report.tail = kTailVanishing;
    report.cd = inv.cd_q;
    report.conditional = inv.m_status == ExponentStatus::LowerBoundOnly;
    return report;
}

BettiReport betti_two_relator_conditional(const Presentation& p) {
    if (classify(p).kind != Classification::Kind::TwoRelator)
        throw PreconditionError("not a two-relator presentation");
    const bool orderable = p.assumptions.count(Assumption::LeftOrderable) > 0;
    const bool cd3 = p.assumptions.count(Assumption::CdAtLeast3) > 0;
    if (!orderable || !cd3)
        throw PreconditionError(
            "assumptions required: the two-relator values hold only for left-orderable "
            "groups of cohomological dimension at least 3; assert both 'left-orderable' "
            "and 'cd>=3' to proceed");
    if (p.alphabet->size() < 2)
        throw PreconditionError(
            "the asserted hypotheses force at least two generators; the assertion set is "
            "inconsistent with this presentation");

    BettiReport report;
    report.classification = to_string(Classification::Kind::TwoRelator);
    report.d = p.alphabet->size();
    report.order = ExtNat::infinity();  // nontrivial torsion-free under the assertions
    report.betti = BettiValues{Rational(0), Rational(static_cast<long>(report.d)) - 2, Rational(0)};
    report.tail = kTailUndetermined;
    report.assumptions_used = {to_string(Assumption::LeftOrderable), to_string(Assumption::CdAtLeast3)};
    report.conditional = true;
    return report;
}

std::vector<std::string> consistency_flags(const Presentation& p, const BettiReport& report) {
    std::vector<std::string> notes;
    if (p.alphabet->size() == 2 && p.assumptions.count(Assumption::LeftOrderable) > 0 &&
        !p.relators.empty() && report.betti.b1 != 0) {
        std::string note =
            "inconsistent assertions: a two-generator left-orderable group with b1 != 0 "
            "is free of rank two, but the presentation imposes a relation";
        if (report.m && report.m->value.finite() && report.m->value.value() > 1)
            note += " whose root has finite order " + std::to_string(report.m->value.value()) +
                    " in the quotient (torsion contradicts left-orderability)";
        notes.push_back(std::move(note));
    }
    return notes;
}

BettiReport known_group(const std::string& name) {
    if (name != "thompson-F") throw PreconditionError("unknown group '" + name + "' (registry knows: thompson-F)");
    BettiReport report;
    report.classification = "known-group";
    report.name = name;
    report.source = "Lueck, L2-Invariants (2002), Theorem 7.10";
    report.d = 2;
    report.order = ExtNat::infinity();
    report.betti = BettiValues{Rational(0), Rational(0), Rational(0)};
    report.tail = "b_n = 0 for all n";
    return report;
}

VerificationOutcome cross_validate(const Presentation& p, const BettiReport& report) {
    const OneRelatorInvariants inv = one_relator_invariants(p);
    if (!inv.order.finite())
        throw PreconditionError("cross-validation needs a finite group");
    FiniteCyclicModel model{p.alphabet, inv.order.value(),
                            std::vector<unsigned long>(p.alphabet->size(), 1)};
    return cross_validate_complex(build_one_relator_complex(p), model, report.betti);
}

VerificationOutcome cross_validate_complex(const ChainComplexSpec& spec,
                                           const FiniteCyclicModel& model,
                                           const BettiValues& formula) {
    VerificationOutcome outcome;
    outcome.scale = model.order;
    outcome.formula = formula;
    try {
        const RealizedComplex rc = realize_complex(spec, model);
        const std::vector<Rational> dims = von_neumann_dims(rc);
        outcome.oracle = BettiValues{dims.size() > 0 ? dims[0] : Rational(0),
                                     dims.size() > 1 ? dims[1] : Rational(0),
                                     dims.size() > 2 ? dims[2] : Rational(0)};
        outcome.pass = outcome.oracle == outcome.formula;
        if (!outcome.pass) outcome.detail = "oracle dimensions differ from the formula values";
    } catch (const PreconditionError& e) {
        outcome.pass = false;
        outcome.detail = e.what();
    }
    return outcome;
}

namespace {

nlohmann::ordered_json betti_values_to_json(const BettiValues& v) {
    return nlohmann::ordered_json{
        {"b0", rational_str(v.b0)}, {"b1", rational_str(v.b1)}, {"b2", rational_str(v.b2)}};
}

nlohmann::ordered_json ext_nat_to_json(const ExtNat& n) {
    if (n.finite()) return nlohmann::ordered_json(n.value());
    return nlohmann::ordered_json("infinite");
}

} // namespace

nlohmann::ordered_json report_to_json(const BettiReport& report) {
    nlohmann::ordered_json j;
    j["classification"] = report.classification;
    if (report.name) j["name"] = *report.name;
    if (report.source) j["source"] = *report.source;
    j["d"] = report.d;
    if (report.genus) j["g"] = *report.genus;
    if (report.m)
        j["m"] = nlohmann::ordered_json{{"value", ext_nat_to_json(report.m->value)},
                                        {"status", to_string(report.m->status)}};
    else
        j["m"] = nullptr;
    if (report.chi)
        j["chi"] = rational_str(*report.chi);
    else
        j["chi"] = nullptr;
    if (report.order)
        j["order"] = report.order->finite() ? "finite:" + std::to_string(report.order->value())
                                            : std::string("infinite");
    else
        j["order"] = nullptr;
    nlohmann::ordered_json betti = betti_values_to_json(report.betti);
    betti["tail"] = report.tail;
    j["betti"] = std::move(betti);
    if (report.cd) j["cd"] = *report.cd;
    j["assumptions"] = report.assumptions_used;
    j["conditional"] = report.conditional;
    if (report.verification) {
        const VerificationOutcome& v = *report.verification;
        nlohmann::ordered_json jv;
        jv["pass"] = v.pass;
        jv["N"] = v.scale;
        jv["formula"] = betti_values_to_json(v.formula);
        jv["oracle"] = betti_values_to_json(v.oracle);
        if (!v.detail.empty()) jv["detail"] = v.detail;
        j["verification"] = std::move(jv);
    }
    if (!report.notes.empty()) j["notes"] = report.notes;
    return j;
}

} // namespace l2betti
