#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockcensus/field.hpp"

namespace blockcensus {

enum class CheckStatus { survives, excluded, data_missing, pass, fail, mismatch };

std::string to_string(CheckStatus s);

enum class ReportFormat { text, machine };

/// One line of the consolidated report. Lines are assembled in a fixed
/// family order so reports are byte-identical across runs and worker counts.
struct CheckLine {
    std::string family;
    std::string case_id;
    CheckStatus status = CheckStatus::pass;
    std::string witness;
};

/// Whitespace runs become single hyphens, for witness fields of machine
/// format lines.
std::string slug(const std::string& s);

/// Machine format: one `CHECK <case_id> <STATUS> <witness>` line per check
/// plus the final classification line. Text format groups by family.
std::string render_report(const std::vector<CheckLine>& lines,
                          const std::optional<std::string>& classification_line, ReportFormat format);

}  // namespace blockcensus
