#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "l2betti/rational.hpp"
#include "l2betti/words.hpp"

namespace l2betti {

// User-asserted hypotheses. Never inferred.
enum class Assumption { LeftOrderable, CdAtLeast3 };

std::string to_string(Assumption a);

struct RootDeclaration {
    Word beta;
    unsigned long exponent = 1;  // declared m >= 1
};

struct Presentation {
    AlphabetPtr alphabet;
    std::vector<Word> relators;
    std::set<Assumption> assumptions;
    std::optional<RootDeclaration> root_declaration;
};

// Line-oriented grammar:
//   gens <name> <name> ...        exactly once, before any relator
//   rel <word-literal>            zero or more
//   surface <g>                   demands alphabet x1..x2g, prepends the
//                                 genus-g surface relator
//   declare-root <word> <m>
//   assume left-orderable | assume cd>=3
//   # starts a comment
Presentation parse_presentation(std::string_view text);

struct Classification {
    enum class Kind { OneRelator, SurfacePlusOne, TwoRelator, General };
    Kind kind = Kind::General;
    unsigned genus = 0;  // set for SurfacePlusOne

    friend bool operator==(const Classification&, const Classification&) = default;
};

std::string to_string(Classification::Kind k);

// [x1,x2][x3,x4]...[x_{2g-1},x_{2g}] over an alphabet of size 2g.
Word surface_relator(const AlphabetPtr& alphabet, unsigned genus);

// Syntactic: SurfacePlusOne needs exactly two relators with the first
// literally the surface relator of the (even-sized) alphabet.
Classification classify(const Presentation& p);

struct OneRelatorInvariants {
    unsigned long d = 0;  // alphabet size
    ExtNat m;             // relator exponent; infinity iff relator trivial
    Word q;               // relator root (empty word when m is infinite)
    Rational chi;         // 1 - d + 1/m
    ExtNat order;         // finite iff (d = 1, m finite) or d = 0
};

OneRelatorInvariants one_relator_invariants(const Presentation& p);

enum class ExponentStatus { ComputedExact, DeclaredVerified, LowerBoundOnly };

std::string to_string(ExponentStatus s);

struct SurfaceInvariants {
    unsigned genus = 1;
    ExtNat m;                 // exponent of the second relator in the surface group
    ExponentStatus m_status = ExponentStatus::ComputedExact;
    Word q2;                  // root witness: abelianized root (g = 1) or free root / declared beta (g >= 2)
    Rational chi;             // min{2 - 2g + 1/m, 0}
    int cd_q = 1;             // min{2, g}
    ExtNat order;             // always infinite for genus >= 1
};

SurfaceInvariants surface_invariants(const Presentation& p);

// Word problem for the genus-g closed surface group, g >= 2, by greedy
// replacement of subwords longer than half of a cyclic conjugate of the
// surface relator (valid: the relator is C'(1/6) small-cancellation).
bool dehn_trivial(const Word& w, unsigned genus);

} // namespace l2betti
