#include "l2betti/chain_complex.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "l2betti/errors.hpp"

namespace l2betti {

bool Summand::operator==(const Summand& other) const {
    if (kind != other.kind) return false;
    if (kind == Kind::Free) return true;
    return idempotent == other.idempotent;
}

BoundaryMatrix::BoundaryMatrix(std::size_t rows, std::size_t cols, AlphabetPtr alphabet)
    : rows_(rows), cols_(cols), entries_(rows * cols, GroupRingElement(alphabet)) {}

GroupRingElement& BoundaryMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("boundary matrix index");
    return entries_[i * cols_ + j];
}

const GroupRingElement& BoundaryMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("boundary matrix index");
    return entries_[i * cols_ + j];
}

bool BoundaryMatrix::operator==(const BoundaryMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

void ChainComplexSpec::validate_shapes() const {
    if (modules.empty()) throw PreconditionError("chain complex without modules");
    if (boundaries.size() + 1 != modules.size())
        throw PreconditionError("chain complex needs one boundary per consecutive module pair");
    for (std::size_t k = 0; k < boundaries.size(); ++k) {
        if (boundaries[k].rows() != modules[k].size() || boundaries[k].cols() != modules[k + 1].size())
            throw PreconditionError("boundary " + std::to_string(k) + " does not chain: " +
                                    std::to_string(boundaries[k].rows()) + "x" + std::to_string(boundaries[k].cols()) +
                                    " between modules of sizes " + std::to_string(modules[k].size()) + ", " +
                                    std::to_string(modules[k + 1].size()));
    }
    if (!lifts.empty() && lifts.size() != boundaries.front().rows())
        throw PreconditionError("lift count does not match the top boundary rows");
}

bool ChainComplexSpec::operator==(const ChainComplexSpec& other) const {
    return *alphabet == *other.alphabet && modules == other.modules &&
           boundaries == other.boundaries && relators == other.relators && lifts == other.lifts;
}

ChainComplexSpec build_one_relator_complex(const Presentation& p) {
    if (classify(p).kind != Classification::Kind::OneRelator)
        throw PreconditionError("not a one-relator presentation");
    const OneRelatorInvariants inv = one_relator_invariants(p);
    const std::size_t d = p.alphabet->size();

    ChainComplexSpec spec;
    spec.alphabet = p.alphabet;
    spec.relators = p.relators;

    ModuleSpec top;
    BoundaryMatrix d2(0, d, p.alphabet);
    if (inv.m.finite()) {
        top.summands.push_back(Summand{Summand::Kind::Twisted, make_idempotent(inv.q, inv.m.value())});
        const Word& r = p.relators.front();
        d2 = BoundaryMatrix(1, d, p.alphabet);
        for (std::size_t j = 0; j < d; ++j) d2.at(0, j) = fox_derivative(r, j);
        spec.lifts = {r};
    }

    ModuleSpec middle;
    middle.summands.assign(d, Summand{Summand::Kind::Free, std::nullopt});
    BoundaryMatrix d1(d, 1, p.alphabet);
    for (std::size_t j = 0; j < d; ++j)
        d1.at(j, 0) = GroupRingElement::from_word(Word::generator(p.alphabet, j)) -
                      GroupRingElement::one(p.alphabet);

    spec.modules = {std::move(top), std::move(middle), ModuleSpec{{Summand{Summand::Kind::Free, std::nullopt}}}};
    spec.boundaries = {std::move(d2), std::move(d1)};
    spec.validate_shapes();
    return spec;
}

ChainComplexSpec build_surface_complex(const Presentation& p) {
    const Classification cls = classify(p);
    if (cls.kind != Classification::Kind::SurfacePlusOne || cls.genus < 2)
        throw PreconditionError("not a surface-plus-one-relation presentation of genus >= 2");
    const SurfaceInvariants inv = surface_invariants(p);
    const std::size_t d = p.alphabet->size();  // 2g
    const unsigned long m = inv.m.value();

    ChainComplexSpec spec;
    spec.alphabet = p.alphabet;
    spec.relators = p.relators;

    ModuleSpec top;
    top.summands.push_back(Summand{Summand::Kind::Free, std::nullopt});
    top.summands.push_back(Summand{Summand::Kind::Twisted, make_idempotent(inv.q2, m)});

    const Word& r1 = p.relators.front();
    BoundaryMatrix d2(2, d, p.alphabet);
    for (std::size_t j = 0; j < d; ++j) {
        d2.at(0, j) = fox_derivative(r1, j);
        d2.at(1, j) = fox_power_factorization(inv.q2, m, j);
    }
    spec.lifts = {r1, power(inv.q2, static_cast<long>(m))};

    ModuleSpec middle;
    middle.summands.assign(d, Summand{Summand::Kind::Free, std::nullopt});
    BoundaryMatrix d1(d, 1, p.alphabet);
    for (std::size_t j = 0; j < d; ++j)
        d1.at(j, 0) = GroupRingElement::from_word(Word::generator(p.alphabet, j)) -
                      GroupRingElement::one(p.alphabet);

    spec.modules = {std::move(top), std::move(middle), ModuleSpec{{Summand{Summand::Kind::Free, std::nullopt}}}};
    spec.boundaries = {std::move(d2), std::move(d1)};
    spec.validate_shapes();
    return spec;
}

namespace {

// s x + t y = gcd(x, y) >= 0
long ext_gcd(long x, long y, long& s, long& t) {
    long old_r = x, r = y, old_s = 1, ss = 0, old_t = 0, tt = 1;
    while (r != 0) {
        const long q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * ss;
        std::swap(old_s, ss);
        old_t -= q * tt;
        std::swap(old_t, tt);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
}

// A word mapping to a generator of the infinite cyclic quotient of the
// rank-2 free abelian group by the primitive vector (f1, f2). The pairing
// (a, b) -> a f2 - b f1 kills (f1, f2) and identifies the quotient with
// the integers, so x1^a x2^b works whenever a f2 - b f1 = 1; prefer a bare
// generator when one qualifies.
Word quotient_generator(const AlphabetPtr& alphabet, long f1, long f2) {
    if (f2 == 1 || f2 == -1) return Word::generator(alphabet, 0);
    if (f1 == 1 || f1 == -1) return Word::generator(alphabet, 1);
    long s = 0, t = 0;
    ext_gcd(f2, f1, s, t);  // s f2 + t f1 = 1
    return power(Word::generator(alphabet, 0), s) * power(Word::generator(alphabet, 1), -t);
}

} // namespace

ChainComplexSpec build_genus1_complex(const Presentation& p) {
    const Classification cls = classify(p);
    if (cls.kind != Classification::Kind::SurfacePlusOne || cls.genus != 1)
        throw PreconditionError("not a genus-1 surface-plus-one-relation presentation");
    const SurfaceInvariants inv = surface_invariants(p);

    const std::vector<long> f = exponent_sums(inv.q2);
    const Word x = quotient_generator(p.alphabet, f[0], f[1]);
    const Idempotent e = make_idempotent(inv.q2, inv.m.value());

    ChainComplexSpec spec;
    spec.alphabet = p.alphabet;
    spec.relators = p.relators;
    spec.modules = {ModuleSpec{{Summand{Summand::Kind::Twisted, e}}},
                    ModuleSpec{{Summand{Summand::Kind::Twisted, e}}}};
    BoundaryMatrix d1(1, 1, p.alphabet);
    d1.at(0, 0) = GroupRingElement::from_word(x) - GroupRingElement::one(p.alphabet);
    spec.boundaries = {std::move(d1)};
    spec.validate_shapes();
    return spec;
}

bool VerificationReport::all_pass() const {
    for (const auto& c : checks)
        if (c.status == VerificationCheck::Status::Fail) return false;
    return true;
}

VerificationReport verify_composites_zero(const ChainComplexSpec& spec) {
    VerificationReport report;
    spec.validate_shapes();

    // relator rows: the composite of the top two boundaries must land on
    // lift - 1, the fundamental identity of the Fox calculus
    if (spec.modules.size() >= 3 && !spec.lifts.empty()) {
        const BoundaryMatrix& top = spec.boundaries[0];
        const BoundaryMatrix& next = spec.boundaries[1];
        for (std::size_t i = 0; i < top.rows(); ++i) {
            GroupRingElement composite(spec.alphabet);
            for (std::size_t j = 0; j < top.cols(); ++j)
                composite = composite + top.at(i, j) * next.at(j, 0);
            const GroupRingElement expected =
                GroupRingElement::from_word(spec.lifts[i]) - GroupRingElement::one(spec.alphabet);
            VerificationCheck check;
            check.name = "composite row " + std::to_string(i) + " equals lift - 1";
            if (composite == expected) {
                check.status = VerificationCheck::Status::Pass;
            } else {
                check.status = VerificationCheck::Status::Fail;
                check.detail = "row " + std::to_string(i) + " composite differs from lift - 1";
            }
            report.checks.push_back(std::move(check));
        }
    }

    // the boundary into degree 0 must vanish under augmentation
    const BoundaryMatrix& last = spec.boundaries.back();
    bool aug_ok = true;
    std::string offending;
    for (std::size_t i = 0; i < last.rows(); ++i)
        for (std::size_t j = 0; j < last.cols(); ++j)
            if (augmentation(last.at(i, j)) != 0) {
                aug_ok = false;
                offending = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
    VerificationCheck aug;
    aug.name = "augmentation of the final boundary vanishes";
    aug.status = aug_ok ? VerificationCheck::Status::Pass : VerificationCheck::Status::Fail;
    aug.detail = aug_ok ? "" : offending + " has nonzero augmentation";
    report.checks.push_back(std::move(aug));
    return report;
}

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json ring_element_to_json(const GroupRingElement& a) {
    ordered_json terms = ordered_json::array();
    for (const auto& [w, c] : a.terms())
        terms.push_back(ordered_json{{"word", to_string(w)}, {"coeff", rational_str(c)}});
    return terms;
}

GroupRingElement ring_element_from_json(const json& j, const AlphabetPtr& alphabet) {
    GroupRingElement a(alphabet);
    for (const auto& term : j)
        a.add_term(parse_word(term.at("word").get<std::string>(), alphabet),
                   rational_from_string(term.at("coeff").get<std::string>()));
    return a;
}

ordered_json summand_to_json(const Summand& s) {
    if (s.kind == Summand::Kind::Free) return ordered_json{{"kind", "free"}};
    const Idempotent& e = *s.idempotent;
    return ordered_json{{"kind", "twisted"},
                        {"idempotent", ordered_json{{"root", to_string(e.root)},
                                                    {"order", e.order},
                                                    {"element", ring_element_to_json(e.element)}}}};
}

Summand summand_from_json(const json& j, const AlphabetPtr& alphabet) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "free") return Summand{Summand::Kind::Free, std::nullopt};
    if (kind != "twisted") throw ParseError("unknown summand kind '" + kind + "'");
    const json& je = j.at("idempotent");
    const Word r = parse_word(je.at("root").get<std::string>(), alphabet);
    const Idempotent rebuilt = make_idempotent(r, je.at("order").get<unsigned long>());
    if (je.contains("element") && !(ring_element_from_json(je.at("element"), alphabet) == rebuilt.element))
        throw ParseError("idempotent element does not match its root and order");
    return Summand{Summand::Kind::Twisted, rebuilt};
}

} // namespace

nlohmann::ordered_json complex_to_json(const ChainComplexSpec& spec) {
    ordered_json j;
    j["alphabet"] = spec.alphabet->names();
    ordered_json modules = ordered_json::array();
    for (const ModuleSpec& mod : spec.modules) {
        ordered_json summands = ordered_json::array();
        for (const Summand& s : mod.summands) summands.push_back(summand_to_json(s));
        modules.push_back(std::move(summands));
    }
    j["modules"] = std::move(modules);
    ordered_json boundaries = ordered_json::array();
    for (const BoundaryMatrix& b : spec.boundaries) {
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < b.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t jj = 0; jj < b.cols(); ++jj) row.push_back(ring_element_to_json(b.at(i, jj)));
            rows.push_back(std::move(row));
        }
        boundaries.push_back(std::move(rows));
    }
    j["boundaries"] = std::move(boundaries);
    ordered_json relators = ordered_json::array();
    for (const Word& r : spec.relators) relators.push_back(to_string(r));
    j["relators"] = std::move(relators);
    ordered_json lifts = ordered_json::array();
    for (const Word& l : spec.lifts) lifts.push_back(to_string(l));
    j["lifts"] = std::move(lifts);
    return j;
}

ChainComplexSpec complex_from_json(const nlohmann::json& j) {
    try {
        ChainComplexSpec spec;
        spec.alphabet = make_alphabet(j.at("alphabet").get<std::vector<std::string>>());
        for (const auto& jmod : j.at("modules")) {
            ModuleSpec mod;
            for (const auto& js : jmod) mod.summands.push_back(summand_from_json(js, spec.alphabet));
            spec.modules.push_back(std::move(mod));
        }
        for (const auto& jb : j.at("boundaries")) {
            const std::size_t rows = jb.size();
            const std::size_t cols = rows == 0 ? 0 : jb.at(0).size();
            BoundaryMatrix b(rows, cols, spec.alphabet);
            for (std::size_t i = 0; i < rows; ++i) {
                if (jb.at(i).size() != cols) throw ParseError("ragged boundary matrix");
                for (std::size_t c = 0; c < cols; ++c)
                    b.at(i, c) = ring_element_from_json(jb.at(i).at(c), spec.alphabet);
            }
            spec.boundaries.push_back(std::move(b));
        }
        for (const auto& jr : j.at("relators")) spec.relators.push_back(parse_word(jr.get<std::string>(), spec.alphabet));
        if (j.contains("lifts"))
            for (const auto& jl : j.at("lifts")) spec.lifts.push_back(parse_word(jl.get<std::string>(), spec.alphabet));
        // a 0 x d boundary arrives with unknown column count; repair from the modules
        for (std::size_t k = 0; k < spec.boundaries.size(); ++k)
            if (spec.boundaries[k].rows() == 0 && k + 1 < spec.modules.size())
                spec.boundaries[k] = BoundaryMatrix(0, spec.modules[k + 1].size(), spec.alphabet);
        spec.validate_shapes();
        return spec;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed complex document: ") + e.what());
    }
}

void export_complex(const ChainComplexSpec& spec, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << complex_to_json(spec).dump(2) << '\n';
    if (!out) throw std::runtime_error("write failure on '" + path.string() + "'");
}

ChainComplexSpec import_complex(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON in '") + path.string() + "': " + e.what());
    }
    return complex_from_json(j);
}

} // namespace l2betti
