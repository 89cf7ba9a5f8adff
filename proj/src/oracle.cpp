#include "l2betti/oracle.hpp"

#include <nlohmann/json.hpp>

#include "l2betti/errors.hpp"

namespace l2betti {

unsigned long FiniteCyclicModel::project(const Word& w) const {
    if (order == 0) throw PreconditionError("cyclic model needs order >= 1");
    if (images.size() != alphabet->size())
        throw PreconditionError("cyclic model needs one image per generator");
    long long residue = 0;
    const long long n = static_cast<long long>(order);
    for (const Letter& l : w.letters()) {
        residue += l.sign * static_cast<long long>(images[l.gen] % order);
        residue %= n;
    }
    return static_cast<unsigned long>(((residue % n) + n) % n);
}

RationalMatrix regular_representation(const GroupRingElement& a, const FiniteCyclicModel& model) {
    const unsigned long n = model.order;
    RationalMatrix rho(n, n);
    for (const auto& [w, c] : a.terms()) {
        const unsigned long shift = model.project(w);
        for (unsigned long i = 0; i < n; ++i) rho(i, (i + shift) % n) += c;
    }
    return rho;
}

namespace {

// ambient boundary between the module blocks: the (i, j) group-ring entry
// becomes its regular representation block
RationalMatrix ambient_boundary(const BoundaryMatrix& b, const FiniteCyclicModel& model) {
    const unsigned long n = model.order;
    RationalMatrix m(b.rows() * n, b.cols() * n);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            const RationalMatrix block = regular_representation(b.at(i, j), model);
            for (unsigned long r = 0; r < n; ++r)
                for (unsigned long c = 0; c < n; ++c)
                    m(i * n + r, j * n + c) = block(r, c);
        }
    return m;
}

RationalMatrix module_basis(const ModuleSpec& mod, const FiniteCyclicModel& model) {
    const unsigned long n = model.order;
    // collect per-summand bases first to know the total dimension
    std::vector<RationalMatrix> blocks;
    std::size_t dim = 0;
    for (const Summand& s : mod.summands) {
        if (s.kind == Summand::Kind::Free) {
            blocks.push_back(RationalMatrix::identity(n));
        } else {
            blocks.push_back(row_space_basis(regular_representation(s.idempotent->element, model)));
        }
        dim += blocks.back().rows();
    }
    RationalMatrix basis(dim, mod.size() * n);
    std::size_t row = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (std::size_t i = 0; i < blocks[b].rows(); ++i, ++row)
            for (unsigned long c = 0; c < n; ++c) basis(row, b * n + c) = blocks[b](i, c);
    }
    return basis;
}

} // namespace

RealizedComplex realize_complex(const ChainComplexSpec& spec, const FiniteCyclicModel& model) {
    spec.validate_shapes();
    if (!(*spec.alphabet == *model.alphabet))
        throw PreconditionError("model alphabet does not match the complex");
    for (const Word& r : spec.relators)
        if (model.project(r) != 0)
            throw PreconditionError("model does not kill relator '" + to_string(r) + "'");
    for (const Word& l : spec.lifts)
        if (model.project(l) != 0)
            throw PreconditionError("model does not kill lift '" + to_string(l) + "'");

    RealizedComplex rc;
    rc.scale = model.order;
    for (const ModuleSpec& mod : spec.modules) {
        rc.bases.push_back(module_basis(mod, model));
        rc.dims.push_back(rc.bases.back().rows());
    }
    for (std::size_t k = 0; k < spec.boundaries.size(); ++k) {
        rc.ambient.push_back(ambient_boundary(spec.boundaries[k], model));
        rc.restricted.push_back(rc.bases[k] * rc.ambient[k]);
    }

    // augmentation of the degree-0 module: each block sums its coordinates
    const std::size_t s0 = spec.modules.back().size();
    RationalMatrix aug(s0 * model.order, s0);
    for (std::size_t b = 0; b < s0; ++b)
        for (unsigned long i = 0; i < model.order; ++i) aug(b * model.order + i, b) = 1;
    rc.augmentation_restricted = rc.bases.back() * aug;
    return rc;
}

std::vector<Rational> von_neumann_dims(const RealizedComplex& rc) {
    const std::size_t k = rc.dims.size();
    for (std::size_t i = 0; i + 1 < rc.restricted.size(); ++i)
        if (!(rc.restricted[i] * rc.ambient[i + 1]).is_zero())
            throw PreconditionError("nonzero composite in realized complex (degree " +
                                    std::to_string(k - 1 - i) + ")");

    std::vector<std::size_t> out_rank(k, 0);
    for (std::size_t i = 0; i + 1 < k; ++i) out_rank[i] = rank(rc.restricted[i]);

    std::vector<Rational> by_degree(k, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t kernel = rc.dims[i] - (i + 1 < k ? out_rank[i] : 0);
        const std::size_t image_in = i > 0 ? out_rank[i - 1] : 0;
        by_degree[k - 1 - i] =
            make_rational(static_cast<long>(kernel) - static_cast<long>(image_in),
                          static_cast<long>(rc.scale));
    }
    return by_degree;
}

OracleReport run_oracle(const ChainComplexSpec& spec, const FiniteCyclicModel& model) {
    const RealizedComplex rc = realize_complex(spec, model);
    const std::size_t k = rc.dims.size();

    OracleReport report;
    report.scale = rc.scale;
    report.vn_dims = von_neumann_dims(rc);

    report.block_dims.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) report.block_dims[k - 1 - i] = rc.dims[i];

    std::vector<std::size_t> out_rank(k, 0);
    for (std::size_t i = 0; i + 1 < k; ++i) out_rank[i] = rank(rc.restricted[i]);
    report.boundary_ranks.assign(k - 1, 0);
    for (std::size_t i = 0; i + 1 < k; ++i) report.boundary_ranks[k - 2 - i] = out_rank[i];

    report.homology_dims.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t kernel = rc.dims[i] - (i + 1 < k ? out_rank[i] : 0);
        report.homology_dims[k - 1 - i] = kernel - (i > 0 ? out_rank[i - 1] : 0);
    }

    report.augmentation_rank = rank(rc.augmentation_restricted);

    // exactness of the augmented realized complex, top to bottom
    auto check = [&](const std::string& name, bool pass, const std::string& detail) {
        report.exactness.push_back(VerificationCheck{
            name, pass ? VerificationCheck::Status::Pass : VerificationCheck::Status::Fail,
            pass ? "" : detail});
    };
    check("top boundary injective", rc.dims.empty() || rc.dims[0] == out_rank[0] || k == 1,
          "kernel at the top degree is nonzero");
    for (std::size_t i = 1; i + 1 < k; ++i) {
        const std::size_t kernel = rc.dims[i] - out_rank[i];
        check("kernel equals image at degree " + std::to_string(k - 1 - i), kernel == out_rank[i - 1],
              "kernel " + std::to_string(kernel) + " vs image " + std::to_string(out_rank[i - 1]));
    }
    if (k >= 2) {
        const std::size_t kernel0 = rc.dims[k - 1] - report.augmentation_rank;
        check("kernel of augmentation equals image at degree 0", kernel0 == out_rank[k - 2],
              "kernel " + std::to_string(kernel0) + " vs image " + std::to_string(out_rank[k - 2]));
    }
    check("augmentation surjective", report.augmentation_rank == spec.modules.back().size(),
          "augmentation rank " + std::to_string(report.augmentation_rank));

    report.exact = true;
    for (const auto& c : report.exactness)
        if (c.status == VerificationCheck::Status::Fail) report.exact = false;
    return report;
}

nlohmann::ordered_json oracle_report_to_json(const OracleReport& report) {
    nlohmann::ordered_json j;
    j["N"] = report.scale;
    j["block_dims"] = report.block_dims;
    j["ranks"] = report.boundary_ranks;
    j["augmentation_rank"] = report.augmentation_rank;
    j["homology_dims"] = report.homology_dims;
    nlohmann::ordered_json dims = nlohmann::ordered_json::array();
    for (const Rational& v : report.vn_dims) dims.push_back(rational_str(v));
    j["vn_dims"] = std::move(dims);
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.exactness)
        checks.push_back(nlohmann::ordered_json{
            {"name", c.name},
            {"status", c.status == VerificationCheck::Status::Pass ? "pass" : "fail"}});
    j["exactness"] = std::move(checks);
    j["exact"] = report.exact;
    return j;
}

} // namespace l2betti
