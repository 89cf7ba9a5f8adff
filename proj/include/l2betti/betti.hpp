#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "l2betti/chain_complex.hpp"
#include "l2betti/oracle.hpp"
#include "l2betti/presentation.hpp"
#include "l2betti/rational.hpp"

namespace l2betti {

struct BettiValues {
    Rational b0, b1, b2;

    friend bool operator==(const BettiValues&, const BettiValues&) = default;
};

struct VerificationOutcome {
    bool pass = false;
    unsigned long scale = 1;  // N of the finite model
    BettiValues formula;
    BettiValues oracle;
    std::string detail;
};

struct ExponentInfo {
    ExtNat value;
    ExponentStatus status = ExponentStatus::ComputedExact;
};

// Everything the pipeline reports about one presentation: the classified
// invariants, the first three L2-Betti numbers, what happens in higher
// degrees, and how much of it is conditional on user assertions.
struct BettiReport {
    std::string classification;  // "one-relator" | "surface-plus-one" | "two-relator" | "known-group"
    std::optional<std::string> name;    // registry entries only
    std::optional<std::string> source;  // registry entries only
    unsigned long d = 0;
    std::optional<unsigned> genus;
    std::optional<ExponentInfo> m;
    // absent when the classification does not determine it. A chi of
    // minus infinity (non-finitely-generated case) is unreachable with
    // finite input files and has no marker here.
    std::optional<Rational> chi;
    std::optional<ExtNat> order;
    BettiValues betti{Rational(0), Rational(0), Rational(0)};
    std::string tail;
    std::optional<int> cd;
    std::vector<std::string> assumptions_used;
    bool conditional = false;
    std::optional<VerificationOutcome> verification;
    std::vector<std::string> notes;
};

// b0 = max{chi, 0} (= 1/|G|), b1 = max{-chi, 0}, everything above zero.
BettiReport betti_one_relator(const OneRelatorInvariants& inv);

// b1 = -chi, b0 = b2 = 0; genus 1 collapses to all zeros.
BettiReport betti_surface(const SurfaceInvariants& inv);

// Two relators, left-orderable, cd >= 3 (both asserted): (0, |X|-2, 0),
// higher degrees undetermined. Refuses without the assertions.
BettiReport betti_two_relator_conditional(const Presentation& p);

// Advisory notes: currently flags assumption sets made contradictory by a
// computed b1 != 0 on a two-generator presentation with relations.
std::vector<std::string> consistency_flags(const Presentation& p, const BettiReport& report);

// Registry of literature-backed values; knows "thompson-F".
BettiReport known_group(const std::string& name);

// Brute-force check of the formula values on the finite cases: realizes
// the complex through the regular representation of the cyclic quotient
// and compares (b0, b1, b2) exactly.
VerificationOutcome cross_validate(const Presentation& p, const BettiReport& report);

VerificationOutcome cross_validate_complex(const ChainComplexSpec& spec,
                                           const FiniteCyclicModel& model,
                                           const BettiValues& formula);

nlohmann::ordered_json report_to_json(const BettiReport& report);

} // namespace l2betti
