#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "l2betti/group_ring.hpp"
#include "l2betti/presentation.hpp"
#include "l2betti/words.hpp"

namespace l2betti {

// One direct summand of a chain module: a free copy of the group ring, or
// the twisted copy (group ring times an idempotent). Coset modules Q[G/C]
// are carried in twisted form.
struct Summand {
    enum class Kind { Free, Twisted };
    Kind kind = Kind::Free;
    std::optional<Idempotent> idempotent;  // set iff Twisted

    bool operator==(const Summand& other) const;
};

struct ModuleSpec {
    std::vector<Summand> summands;

    std::size_t size() const { return summands.size(); }
    bool operator==(const ModuleSpec&) const = default;
};

// Boundary matrix with group-ring entries, acting on row vectors by right
// multiplication: rows index the source module's summands, columns the
// target's.
class BoundaryMatrix {
public:
    BoundaryMatrix() = default;
    BoundaryMatrix(std::size_t rows, std::size_t cols, AlphabetPtr alphabet);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    GroupRingElement& at(std::size_t i, std::size_t j);
    const GroupRingElement& at(std::size_t i, std::size_t j) const;

    bool operator==(const BoundaryMatrix& other) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<GroupRingElement> entries_;
};

// Symbolic chain complex: modules listed from the top degree down to
// degree 0, boundaries[i] mapping modules[i] to modules[i+1]. Entries are
// free-group-ring representatives; relators record the quotient context
// and lifts give, per top-boundary row, the free word whose image the row
// composite must hit (the fundamental-identity witness).
struct ChainComplexSpec {
    AlphabetPtr alphabet;
    std::vector<ModuleSpec> modules;
    std::vector<BoundaryMatrix> boundaries;
    std::vector<Word> relators;
    std::vector<Word> lifts;

    void validate_shapes() const;  // throws PreconditionError on mismatch

    bool operator==(const ChainComplexSpec& other) const;
};

// 0 -> QGe -> QG^d -> QG (-> Q): top row the Fox derivatives of the
// relator, middle boundary the column (x_j - 1). The twisted summand is
// dropped when the relator is trivial (e = 0).
ChainComplexSpec build_one_relator_complex(const Presentation& p);

// Genus >= 2: 0 -> QG + QGe -> QG^{2g} -> QG (-> Q) with the free row the
// Fox derivatives of the surface relator and the twisted row the factored
// derivatives of q2^m.
ChainComplexSpec build_surface_complex(const Presentation& p);

// Genus 1: 0 -> QGe -> QGe (-> Q), the map right multiplication by x - 1
// for a word x generating the infinite cyclic quotient G/C.
ChainComplexSpec build_genus1_complex(const Presentation& p);

struct VerificationCheck {
    std::string name;
    enum class Status { Pass, Fail, Skipped };
    Status status = Status::Pass;
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool all_pass() const;
};

// Exact symbolic checks: each top-boundary row composed with the next
// boundary equals lift - 1 in the free group ring, and every entry of the
// final boundary has augmentation zero.
VerificationReport verify_composites_zero(const ChainComplexSpec& spec);

nlohmann::ordered_json complex_to_json(const ChainComplexSpec& spec);
ChainComplexSpec complex_from_json(const nlohmann::json& j);

void export_complex(const ChainComplexSpec& spec, const std::filesystem::path& path);
ChainComplexSpec import_complex(const std::filesystem::path& path);

} // namespace l2betti
