#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "l2betti/betti.hpp"

namespace l2betti {

struct RunConfig {
    enum class Command { Analyze, Verify, ExportComplex, Oracle, LmodDemo, Batch };
    enum class Format { Json, Text };

    Command command = Command::Analyze;
    std::string input;                 // file, or directory for Batch
    std::optional<std::string> out;    // output path; stdout when absent
    unsigned long oracle_bound = 12;   // max group order cross-validated
    Format format = Format::Json;
};

// Exit codes: 0 success, 1 failed checks or I/O trouble, 2 parse error,
// 3 precondition violation. Machine-readable error JSON goes to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Library-level composition used by the analyze and batch commands: parse
// is the caller's job, everything downstream happens here.
BettiReport analyze_presentation(const Presentation& p, unsigned long oracle_bound);

struct VerifyDocument {
    std::string classification;
    std::vector<VerificationCheck> checks;
    bool pass = true;
};

VerifyDocument verify_presentation(const Presentation& p, unsigned long oracle_bound);

} // namespace l2betti
