#include "l2betti/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "l2betti/errors.hpp"

namespace l2betti {

std::string to_string(Assumption a) {
    switch (a) {
        case Assumption::LeftOrderable: return "left-orderable";
        case Assumption::CdAtLeast3: return "cd>=3";
    }
    return "?";
}

std::string to_string(Classification::Kind k) {
    switch (k) {
        case Classification::Kind::OneRelator: return "one-relator";
        case Classification::Kind::SurfacePlusOne: return "surface-plus-one";
        case Classification::Kind::TwoRelator: return "two-relator";
        case Classification::Kind::General: return "general";
    }
    return "?";
}

std::string to_string(ExponentStatus s) {
    switch (s) {
        case ExponentStatus::ComputedExact: return "computed-exact";
        case ExponentStatus::DeclaredVerified: return "declared-verified";
        case ExponentStatus::LowerBoundOnly: return "lower-bound-only";
    }
    return "?";
}

namespace {

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) fields.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

unsigned long parse_positive(std::string_view token, const char* what) {
    unsigned long value = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size() || value == 0)
        throw ParseError(std::string("expected a positive integer for ") + what);
    return value;
}

} // namespace

Presentation parse_presentation(std::string_view text) {
    Presentation p;
    std::vector<std::pair<int, std::string>> relator_lines;  // (line no, literal)
    std::optional<std::pair<int, std::string>> declaration;
    std::optional<unsigned long> surface_genus;
    bool saw_gens = false;

    std::istringstream stream{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(stream, raw)) {
        ++lineno;
        std::string_view line(raw);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto fields = split_fields(line);
        if (fields.empty()) continue;
        const std::string& keyword = fields.front();

        if (keyword == "gens") {
            if (saw_gens) throw ParseError("line " + std::to_string(lineno) + ": duplicate gens line");
            saw_gens = true;
            p.alphabet = make_alphabet({fields.begin() + 1, fields.end()});
        } else if (keyword == "rel") {
            if (!saw_gens) throw ParseError("line " + std::to_string(lineno) + ": rel before gens");
            std::string literal;
            for (std::size_t i = 1; i < fields.size(); ++i) {
                if (i > 1) literal += ' ';
                literal += fields[i];
            }
            relator_lines.emplace_back(lineno, literal);
        } else if (keyword == "surface") {
            if (!saw_gens) throw ParseError("line " + std::to_string(lineno) + ": surface before gens");
            if (surface_genus) throw ParseError("line " + std::to_string(lineno) + ": duplicate surface line");
            if (fields.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": surface takes one argument");
            surface_genus = parse_positive(fields[1], "surface genus");
        } else if (keyword == "declare-root") {
            if (!saw_gens) throw ParseError("line " + std::to_string(lineno) + ": declare-root before gens");
            if (declaration) throw ParseError("line " + std::to_string(lineno) + ": duplicate declare-root line");
            if (fields.size() < 3) throw ParseError("line " + std::to_string(lineno) + ": declare-root takes a word and an exponent");
            std::string literal;
            for (std::size_t i = 1; i + 1 < fields.size(); ++i) {
                if (i > 1) literal += ' ';
                literal += fields[i];
            }
            declaration = {lineno, literal};
            p.root_declaration = RootDeclaration{Word(p.alphabet), parse_positive(fields.back(), "declared exponent")};
        } else if (keyword == "assume") {
            if (fields.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": assume takes one flag");
            if (fields[1] == "left-orderable")
                p.assumptions.insert(Assumption::LeftOrderable);
            else if (fields[1] == "cd>=3")
                p.assumptions.insert(Assumption::CdAtLeast3);
            else
                throw ParseError("line " + std::to_string(lineno) + ": unknown assumption '" + fields[1] + "'");
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + keyword + "'");
        }
    }

    if (!saw_gens) throw ParseError("missing required gens line");

    if (surface_genus) {
        const unsigned long g = *surface_genus;
        if (p.alphabet->size() != 2 * g)
            throw ParseError("surface " + std::to_string(g) + " needs exactly " + std::to_string(2 * g) + " generators");
        for (std::size_t i = 0; i < p.alphabet->size(); ++i)
            if (p.alphabet->name(i) != "x" + std::to_string(i + 1))
                throw ParseError("surface directive demands generators named x1..x" + std::to_string(2 * g));
        p.relators.push_back(surface_relator(p.alphabet, static_cast<unsigned>(g)));
    }

    for (const auto& [line, literal] : relator_lines) {
        try {
            p.relators.push_back(parse_word(literal, p.alphabet));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line) + ": " + e.what());
        }
    }
    if (declaration) {
        try {
            p.root_declaration->beta = parse_word(declaration->second, p.alphabet);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(declaration->first) + ": " + e.what());
        }
    }
    return p;
}

Word surface_relator(const AlphabetPtr& alphabet, unsigned genus) {
    if (alphabet->size() != 2ul * genus)
        throw PreconditionError("surface relator needs an alphabet of size 2g");
    Word r(alphabet);
    for (unsigned j = 0; j < genus; ++j) {
        const Word a = Word::generator(alphabet, 2 * j);
        const Word b = Word::generator(alphabet, 2 * j + 1);
        r = r * a * b * inverse(a) * inverse(b);
    }
    return r;
}

Classification classify(const Presentation& p) {
    if (p.relators.size() <= 1) return {Classification::Kind::OneRelator, 0};
    if (p.relators.size() == 2 && p.alphabet->size() >= 2 && p.alphabet->size() % 2 == 0) {
        const unsigned g = static_cast<unsigned>(p.alphabet->size() / 2);
        if (p.relators.front() == surface_relator(p.alphabet, g))
            return {Classification::Kind::SurfacePlusOne, g};
    }
    if (p.relators.size() == 2) return {Classification::Kind::TwoRelator, 0};
    return {Classification::Kind::General, 0};
}

OneRelatorInvariants one_relator_invariants(const Presentation& p) {
    if (classify(p).kind != Classification::Kind::OneRelator)
        throw PreconditionError("not a one-relator presentation");
    OneRelatorInvariants inv{p.alphabet->size(), ExtNat::infinity(), Word(p.alphabet), Rational(0), ExtNat::infinity()};
    if (!p.relators.empty() && !p.relators.front().empty()) {
        const RootDecomposition rd = root(p.relators.front());
        inv.m = rd.multiplicity;
        inv.q = rd.base;
    }
    inv.chi = Rational(1) - Rational(static_cast<long>(inv.d)) + reciprocal_or_zero(inv.m);
    if (inv.d == 0)
        inv.order = 1ul;
    else if (inv.d == 1 && inv.m.finite())
        inv.order = inv.m;
    return inv;
}

namespace {

// gcd of the absolute exponent sums; zero iff the vector vanishes.
unsigned long vector_gcd(const std::vector<long>& v) {
    unsigned long g = 0;
    for (long e : v) g = std::gcd(g, static_cast<unsigned long>(e < 0 ? -e : e));
    return g;
}

} // namespace

SurfaceInvariants surface_invariants(const Presentation& p) {
    const Classification cls = classify(p);
    if (cls.kind != Classification::Kind::SurfacePlusOne)
        throw PreconditionError("not a surface-plus-one-relation presentation");
    const unsigned g = cls.genus;
    const Word& alpha = p.relators.at(1);
    if (alpha.empty()) throw PreconditionError("second relator is the empty word");

    SurfaceInvariants inv{g,          ExtNat(1), ExponentStatus::ComputedExact,
                          Word(p.alphabet), Rational(0), static_cast<int>(std::min(2u, g)),
                          ExtNat::infinity()};

    if (g == 1) {
        const std::vector<long> sums = exponent_sums(alpha);
        const unsigned long m = vector_gcd(sums);
        if (m == 0) throw PreconditionError("second relator is trivial in the genus-1 surface group");
        inv.m = m;
        inv.m_status = ExponentStatus::ComputedExact;
        const long f1 = sums[0] / static_cast<long>(m);
        const long f2 = sums[1] / static_cast<long>(m);
        inv.q2 = power(Word::generator(p.alphabet, 0), f1) * power(Word::generator(p.alphabet, 1), f2);
    } else {
        if (dehn_trivial(alpha, g))
            throw PreconditionError("second relator is trivial in the surface group");
        if (p.root_declaration) {
            const RootDeclaration& decl = *p.root_declaration;
            const Word residue = alpha * inverse(power(decl.beta, static_cast<long>(decl.exponent)));
            if (!dehn_trivial(residue, g))
                throw PreconditionError("root declaration failed: declared power does not equal the relator in the surface group");
            inv.m = decl.exponent;
            inv.m_status = ExponentStatus::DeclaredVerified;
            inv.q2 = decl.beta;
        } else {
            const RootDecomposition rd = root(alpha);
            inv.m = rd.multiplicity;
            inv.m_status = ExponentStatus::LowerBoundOnly;
            inv.q2 = rd.base;
        }
    }

    const Rational raw = Rational(2) - Rational(2l * g) + reciprocal_or_zero(inv.m);
    inv.chi = raw < 0 ? raw : Rational(0);
    return inv;
}

bool dehn_trivial(const Word& w, unsigned genus) {
    if (genus < 2) throw PreconditionError("Dehn reduction applies to genus >= 2 only");
    const AlphabetPtr alphabet = w.alphabet();
    if (alphabet->size() != 2ul * genus)
        throw PreconditionError("word is not over the 2g surface generators");

    // all cyclic conjugates of the surface relator and its inverse
    const Word r1 = surface_relator(alphabet, genus);
    std::vector<std::vector<Letter>> rotations;
    for (const Word& base : {r1, inverse(r1)}) {
        std::vector<Letter> ls = base.letters();
        for (std::size_t k = 0; k < ls.size(); ++k) {
            rotations.push_back(ls);
            std::rotate(ls.begin(), ls.begin() + 1, ls.end());
        }
    }

    const std::size_t relator_len = r1.size();  // 4g
    const std::size_t half = relator_len / 2;   // 2g

    Word current = w;
    bool replaced = true;
    while (replaced && !current.empty()) {
        replaced = false;
        const auto& ls = current.letters();
        for (std::size_t start = 0; start < ls.size() && !replaced; ++start) {
            for (const auto& rot : rotations) {
                std::size_t len = 0;
                while (len < rot.size() && start + len < ls.size() && ls[start + len] == rot[len]) ++len;
                if (len <= half) continue;
                // the matched piece equals the inverted remainder of the relator
                std::vector<Letter> next(ls.begin(), ls.begin() + static_cast<long>(start));
                for (std::size_t k = rot.size(); k > len; --k) next.push_back(rot[k - 1].inverse());
                next.insert(next.end(), ls.begin() + static_cast<long>(start + len), ls.end());
                current = Word::reduce(alphabet, next);
                replaced = true;
                break;
            }
        }
    }
    return current.empty();
}

} // namespace l2betti
