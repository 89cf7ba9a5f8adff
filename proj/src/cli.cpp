#include "l2betti/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "l2betti/errors.hpp"
#include "l2betti/two_column.hpp"

namespace l2betti {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int emit(const RunConfig& config, const std::string& rendered, std::ostream& out) {
    if (config.out) {
        std::ofstream file(*config.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open '" + *config.out + "' for writing");
        file << rendered;
        return file ? 0 : 1;
    }
    out << rendered;
    return 0;
}

int write_error(std::ostream& err, const std::string& code, const std::string& message, int exit_code) {
    err << ordered_json{{"error", ordered_json{{"code", code}, {"message", message}}}}.dump() << '\n';
    return exit_code;
}

std::string status_str(VerificationCheck::Status s) {
    switch (s) {
        case VerificationCheck::Status::Pass: return "pass";
        case VerificationCheck::Status::Fail: return "fail";
        case VerificationCheck::Status::Skipped: return "skipped";
    }
    return "?";
}

ordered_json checks_to_json(const std::vector<VerificationCheck>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json jc{{"name", c.name}, {"status", status_str(c.status)}};
        if (!c.detail.empty()) jc["detail"] = c.detail;
        arr.push_back(std::move(jc));
    }
    return arr;
}

std::string render_checks_text(const std::vector<VerificationCheck>& checks) {
    std::ostringstream out;
    for (const auto& c : checks) {
        const char* tag = c.status == VerificationCheck::Status::Pass   ? "PASS"
                          : c.status == VerificationCheck::Status::Fail ? "FAIL"
                                                                        : "SKIP";
        out << "[" << tag << "] " << c.name;
        if (!c.detail.empty()) out << " -- " << c.detail;
        out << '\n';
    }
    return out.str();
}

std::string render_report_text(const BettiReport& r) {
    std::ostringstream out;
    out << "classification: " << r.classification;
    if (r.genus) out << " (genus " << *r.genus << ")";
    out << "\n";
    out << "d = " << r.d;
    if (r.m) out << ", m = " << to_string(r.m->value) << " (" << to_string(r.m->status) << ")";
    out << "\n";
    if (r.chi) out << "chi = " << rational_str(*r.chi) << "\n";
    if (r.order)
        out << "order = " << (r.order->finite() ? std::to_string(r.order->value()) : std::string("infinite"))
            << "\n";
    out << "b0 = " << rational_str(r.betti.b0) << ", b1 = " << rational_str(r.betti.b1)
        << ", b2 = " << rational_str(r.betti.b2) << "; " << r.tail << "\n";
    if (r.cd) out << "cd_Q = " << *r.cd << "\n";
    if (!r.assumptions_used.empty()) {
        out << "assumptions:";
        for (const auto& a : r.assumptions_used) out << ' ' << a;
        out << "\n";
    }
    if (r.conditional) out << "conditional: yes\n";
    if (r.verification)
        out << "oracle check (N = " << r.verification->scale << "): "
            << (r.verification->pass ? "pass" : "fail") << "\n";
    for (const auto& n : r.notes) out << "note: " << n << "\n";
    return out.str();
}

ChainComplexSpec build_complex_for(const Presentation& p) {
    const Classification cls = classify(p);
    switch (cls.kind) {
        case Classification::Kind::OneRelator: return build_one_relator_complex(p);
        case Classification::Kind::SurfacePlusOne:
            return cls.genus == 1 ? build_genus1_complex(p) : build_surface_complex(p);
        default:
            throw PreconditionError("no resolution is available for " + to_string(cls.kind) +
                                    " presentations");
    }
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw ParseError("matrix entries must be integers or 'p/q' strings");
}

RationalMatrix matrix_from_json(const json& j, const char* name) {
    if (!j.is_array() || j.empty()) throw ParseError(std::string(name) + " must be a nonempty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j.at(0).size();
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j.at(i).is_array() || j.at(i).size() != cols)
            throw ParseError(std::string(name) + " has ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j.at(i).at(c));
    }
    return m;
}

} // namespace

BettiReport analyze_presentation(const Presentation& p, unsigned long oracle_bound) {
    const Classification cls = classify(p);
    BettiReport report;
    switch (cls.kind) {
        case Classification::Kind::OneRelator: {
            const OneRelatorInvariants inv = one_relator_invariants(p);
            report = betti_one_relator(inv);
            if (inv.order.finite() && inv.order.value() <= oracle_bound)
                report.verification = cross_validate(p, report);
            break;
        }
        case Classification::Kind::SurfacePlusOne:
            report = betti_surface(surface_invariants(p));
            break;
        case Classification::Kind::TwoRelator:
            report = betti_two_relator_conditional(p);
            break;
        case Classification::Kind::General:
            throw PreconditionError(
                "general presentations (three or more relators) are outside the formula layer");
    }
    report.notes = consistency_flags(p, report);
    return report;
}

VerifyDocument verify_presentation(const Presentation& p, unsigned long oracle_bound) {
    VerifyDocument doc;
    const Classification cls = classify(p);
    doc.classification = to_string(cls.kind);

    // fundamental identity for every relator, independent of any complex
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        const Word& r = p.relators[i];
        GroupRingElement sum(p.alphabet);
        for (std::size_t g = 0; g < p.alphabet->size(); ++g)
            sum = sum + fox_derivative(r, g) *
                            (GroupRingElement::from_word(Word::generator(p.alphabet, g)) -
                             GroupRingElement::one(p.alphabet));
        const GroupRingElement expected =
            GroupRingElement::from_word(r) - GroupRingElement::one(p.alphabet);
        doc.checks.push_back(VerificationCheck{
            "fundamental identity for relator " + std::to_string(i),
            sum == expected ? VerificationCheck::Status::Pass : VerificationCheck::Status::Fail,
            ""});
    }

    if (cls.kind == Classification::Kind::OneRelator || cls.kind == Classification::Kind::SurfacePlusOne) {
        const ChainComplexSpec spec = build_complex_for(p);
        const VerificationReport symbolic = verify_composites_zero(spec);
        doc.checks.insert(doc.checks.end(), symbolic.checks.begin(), symbolic.checks.end());

        if (cls.kind == Classification::Kind::OneRelator) {
            const OneRelatorInvariants inv = one_relator_invariants(p);
            if (!inv.order.finite()) {
                doc.checks.push_back(VerificationCheck{"oracle", VerificationCheck::Status::Skipped,
                                                       "infinite group"});
            } else if (inv.order.value() > oracle_bound) {
                doc.checks.push_back(VerificationCheck{"oracle", VerificationCheck::Status::Skipped,
                                                       "order exceeds oracle bound"});
            } else {
                const FiniteCyclicModel model{p.alphabet, inv.order.value(),
                                              std::vector<unsigned long>(p.alphabet->size(), 1)};
                const OracleReport oracle = run_oracle(spec, model);
                doc.checks.insert(doc.checks.end(), oracle.exactness.begin(), oracle.exactness.end());
                const BettiReport formula = betti_one_relator(inv);
                const VerificationOutcome outcome = cross_validate_complex(spec, model, formula.betti);
                doc.checks.push_back(VerificationCheck{
                    "oracle dimensions match the formula",
                    outcome.pass ? VerificationCheck::Status::Pass : VerificationCheck::Status::Fail,
                    outcome.detail});
            }
        } else {
            doc.checks.push_back(VerificationCheck{"oracle", VerificationCheck::Status::Skipped,
                                                   "infinite group"});
        }
    } else {
        doc.checks.push_back(VerificationCheck{"resolution checks", VerificationCheck::Status::Skipped,
                                               "no resolution for " + to_string(cls.kind)});
    }

    doc.pass = std::none_of(doc.checks.begin(), doc.checks.end(), [](const VerificationCheck& c) {
        return c.status == VerificationCheck::Status::Fail;
    });
    return doc;
}

namespace {

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const Presentation p = parse_presentation(read_file(config.input));
    const BettiReport report = analyze_presentation(p, config.oracle_bound);
    (void)err;
    if (config.format == RunConfig::Format::Text)
        return emit(config, render_report_text(report), out);
    return emit(config, report_to_json(report).dump(2) + "\n", out);
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const std::string text = read_file(config.input);
    const auto first = text.find_first_not_of(" \t\r\n");
    VerifyDocument doc;
    if (first != std::string::npos && text[first] == '{') {
        // an exported complex document: re-run the symbolic checks
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        const ChainComplexSpec spec = complex_from_json(j);
        doc.classification = "complex-document";
        const VerificationReport symbolic = verify_composites_zero(spec);
        doc.checks = symbolic.checks;
        doc.pass = symbolic.all_pass();
    } else {
        doc = verify_presentation(parse_presentation(text), config.oracle_bound);
    }
    (void)err;
    int rc;
    if (config.format == RunConfig::Format::Text) {
        rc = emit(config, render_checks_text(doc.checks) +
                              std::string(doc.pass ? "all checks passed\n" : "some checks FAILED\n"),
                  out);
    } else {
        ordered_json j{{"classification", doc.classification},
                       {"checks", checks_to_json(doc.checks)},
                       {"pass", doc.pass}};
        rc = emit(config, j.dump(2) + "\n", out);
    }
    return rc != 0 ? rc : (doc.pass ? 0 : 1);
}

int cmd_export(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const Presentation p = parse_presentation(read_file(config.input));
    const ChainComplexSpec spec = build_complex_for(p);
    (void)err;
    return emit(config, complex_to_json(spec).dump(2) + "\n", out);
}

int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const Presentation p = parse_presentation(read_file(config.input));
    if (classify(p).kind != Classification::Kind::OneRelator)
        throw PreconditionError("the oracle handles finite one-relator quotients only");
    const OneRelatorInvariants inv = one_relator_invariants(p);
    if (!inv.order.finite())
        throw PreconditionError("the group is infinite; the oracle handles finite quotients only");
    if (inv.order.value() > config.oracle_bound)
        throw PreconditionError("group order " + std::to_string(inv.order.value()) +
                                " exceeds the oracle bound " + std::to_string(config.oracle_bound));
    const FiniteCyclicModel model{p.alphabet, inv.order.value(),
                                  std::vector<unsigned long>(p.alphabet->size(), 1)};
    const OracleReport report = run_oracle(build_one_relator_complex(p), model);
    (void)err;
    int rc;
    if (config.format == RunConfig::Format::Text) {
        std::ostringstream text;
        text << "N = " << report.scale << "\n";
        text << "vn dims by degree:";
        for (const auto& v : report.vn_dims) text << ' ' << rational_str(v);
        text << "\n" << render_checks_text(report.exactness);
        rc = emit(config, text.str(), out);
    } else {
        rc = emit(config, oracle_report_to_json(report).dump(2) + "\n", out);
    }
    return rc != 0 ? rc : (report.exact ? 0 : 1);
}

int cmd_lmod_demo(const RunConfig& config, std::ostream& out, std::ostream& err) {
    json j;
    try {
        j = json::parse(read_file(config.input));
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("A") || !j.contains("B")) throw ParseError("expected an object with 'A' and 'B'");
    TwoColumnFactorization f{matrix_from_json(j.at("A"), "A"), matrix_from_json(j.at("B"), "B")};
    const TwoColumnBasis basis = two_column_basis(f);
    const bool verified = two_column_verify(f, basis.v1, basis.v2);
    (void)err;
    int rc;
    if (config.format == RunConfig::Format::Text) {
        std::ostringstream text;
        text << "v1 = (" << rational_str(basis.v1[0]) << ", " << rational_str(basis.v1[1]) << ")\n";
        text << "v2 = (" << rational_str(basis.v2[0]) << ", " << rational_str(basis.v2[1]) << ")\n";
        text << "witness: row " << basis.pivot_row << ", column " << basis.pivot_col
             << (basis.swapped ? ", coordinates swapped" : "") << "\n";
        text << (verified ? "verified: kernel basis is correct\n" : "verification FAILED\n");
        rc = emit(config, text.str(), out);
    } else {
        ordered_json doc{{"v1", {rational_str(basis.v1[0]), rational_str(basis.v1[1])}},
                         {"v2", {rational_str(basis.v2[0]), rational_str(basis.v2[1])}},
                         {"witness", ordered_json{{"row", basis.pivot_row},
                                                  {"column", basis.pivot_col},
                                                  {"swapped", basis.swapped}}},
                         {"verified", verified}};
        rc = emit(config, doc.dump(2) + "\n", out);
    }
    return rc != 0 ? rc : (verified ? 0 : 1);
}

int cmd_batch(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!fs::is_directory(config.input))
        throw std::runtime_error("'" + config.input + "' is not a directory");
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(config.input)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (!name.empty() && name.front() != '.') names.push_back(name);
    }
    std::sort(names.begin(), names.end());

    ordered_json files = ordered_json::array();
    std::size_t failures = 0;
    std::ostringstream text;
    for (const std::string& name : names) {
        ordered_json entry;
        entry["file"] = name;
        try {
            const Presentation p = parse_presentation(read_file((fs::path(config.input) / name).string()));
            const BettiReport report = analyze_presentation(p, config.oracle_bound);
            entry["report"] = report_to_json(report);
            text << name << ": b = (" << rational_str(report.betti.b0) << ", "
                 << rational_str(report.betti.b1) << ", " << rational_str(report.betti.b2) << ")\n";
        } catch (const ParseError& e) {
            entry["error"] = ordered_json{{"code", "parse"}, {"message", e.what()}};
            ++failures;
            text << name << ": parse error: " << e.what() << "\n";
        } catch (const PreconditionError& e) {
            entry["error"] = ordered_json{{"code", "precondition"}, {"message", e.what()}};
            ++failures;
            text << name << ": precondition error: " << e.what() << "\n";
        }
        files.push_back(std::move(entry));
    }
    (void)err;
    int rc;
    if (config.format == RunConfig::Format::Text) {
        rc = emit(config, text.str(), out);
    } else {
        ordered_json doc{{"directory", config.input}, {"files", std::move(files)}, {"failures", failures}};
        rc = emit(config, doc.dump(2) + "\n", out);
    }
    return rc != 0 ? rc : (failures == 0 ? 0 : 1);
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case RunConfig::Command::Analyze: return cmd_analyze(config, out, err);
            case RunConfig::Command::Verify: return cmd_verify(config, out, err);
            case RunConfig::Command::ExportComplex: return cmd_export(config, out, err);
            case RunConfig::Command::Oracle: return cmd_oracle(config, out, err);
            case RunConfig::Command::LmodDemo: return cmd_lmod_demo(config, out, err);
            case RunConfig::Command::Batch: return cmd_batch(config, out, err);
        }
        return write_error(err, "usage", "unknown command", 1);
    } catch (const ParseError& e) {
        return write_error(err, "parse", e.what(), 2);
    } catch (const PreconditionError& e) {
        return write_error(err, "precondition", e.what(), 3);
    } catch (const std::exception& e) {
        return write_error(err, "io", e.what(), 1);
    }
}

} // namespace l2betti
