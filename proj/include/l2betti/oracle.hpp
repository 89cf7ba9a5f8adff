#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "l2betti/chain_complex.hpp"
#include "l2betti/group_ring.hpp"
#include "l2betti/rational_matrix.hpp"

namespace l2betti {

// Quotient onto a cyclic group of order N, given by a residue per
// generator. Covers every finite case the theory produces (those groups
// are cyclic), plus arbitrary cyclic quotients for property tests.
struct FiniteCyclicModel {
    AlphabetPtr alphabet;
    unsigned long order = 1;                 // N >= 1
    std::vector<unsigned long> images;       // residue mod N per generator

    unsigned long project(const Word& w) const;  // additive in letters
};

// N x N matrix of right multiplication by the image of a in the quotient
// group ring, acting on row vectors over the basis 1, g, ..., g^{N-1}.
RationalMatrix regular_representation(const GroupRingElement& a,
                                      const FiniteCyclicModel& model);

// Chain complex expanded through the regular representation. Module index
// 0 is the top degree, matching ChainComplexSpec. Each free summand
// contributes a full N-dimensional block; each twisted summand the row
// space of rho(e).
struct RealizedComplex {
    unsigned long scale = 1;                   // N
    std::vector<std::size_t> dims;             // realized dimension per module
    std::vector<RationalMatrix> bases;         // subspace basis rows per module
    std::vector<RationalMatrix> ambient;       // full boundary per block, module k -> k+1
    std::vector<RationalMatrix> restricted;    // bases[k] * ambient[k]
    RationalMatrix augmentation_restricted;    // bases.back() * (ones per block)
};

// Throws PreconditionError when a relator or lift does not map to the
// identity of the model.
RealizedComplex realize_complex(const ChainComplexSpec& spec,
                                const FiniteCyclicModel& model);

// Homology dimensions divided by N, indexed by degree (entry n is the
// degree-n value, computed against the unaugmented complex). Throws when a
// realized composite is nonzero.
std::vector<Rational> von_neumann_dims(const RealizedComplex& rc);

struct OracleReport {
    unsigned long scale = 1;                       // N
    std::vector<std::size_t> block_dims;           // by degree, 0 first
    std::vector<std::size_t> boundary_ranks;       // entry n = rank of the map degree n+1 -> n
    std::size_t augmentation_rank = 0;
    std::vector<std::size_t> homology_dims;        // unscaled, by degree
    std::vector<Rational> vn_dims;                 // by degree
    std::vector<VerificationCheck> exactness;      // augmented-complex exactness at every spot
    bool exact = false;
};

OracleReport run_oracle(const ChainComplexSpec& spec, const FiniteCyclicModel& model);

nlohmann::ordered_json oracle_report_to_json(const OracleReport& report);

} // namespace l2betti
