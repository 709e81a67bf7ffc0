#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockcensus/cases.hpp"
#include "blockcensus/report.hpp"

namespace blockcensus {

struct SuiteOptions {
    std::string corpus_dir;
    u64 cap = kDefaultElementCap;
    u32 k_target = 5;
    int jobs = 1;
};

/// Consolidated result of a census run. Exit code contract: 0 when every
/// executed check matches the census verdicts, 1 on any mismatch, 2 on
/// input errors.
struct SuiteResult {
    std::vector<CheckLine> lines;
    std::optional<std::string> classification_line;
    bool conditional = false;  // some data-dependent family ran without data
    int exit_code = 0;
};

/// Runs the full census: the semilinear parameter scan, the rank-3 p^2
/// family, the imprimitive parameter grid, orbit-correspondence and exact
/// character counts over the corpus instances, the two-transitive d = 2
/// verifier, and the exceptional-degree battery over every expected database
/// key (ingested or reported missing). Independent checks fan out over
/// `jobs` workers; the report is byte-identical regardless.
SuiteResult run_suite(const SuiteOptions& options);

std::string emit_report(const SuiteResult& result, ReportFormat format);

}  // namespace blockcensus
